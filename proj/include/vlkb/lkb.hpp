#ifndef VLKB_LKB_HPP
#define VLKB_LKB_HPP

#include "vlkb/braid.hpp"
#include "vlkb/qgroup.hpp"
#include "vlkb/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vlkb {
namespace lkb {

// The space of level-l highest-weight vectors in the colored tensor product:
// ker(E) on the K-eigenvalue v^{sum mu - 2l} slice. The basis is
// echelonized against the tensorBasis(n,l) column order; pivots[i] is the
// column where basis vector i has coefficient 1 and all others vanish.
struct LkbSpace {
    int n = 0, l = 0;
    std::vector<int> colors;
    GeneratorSet gs;
    std::vector<std::vector<int>> slice;
    std::vector<int> pivots;
    std::vector<std::vector<FieldElement>> basis; // dense on slice

    int dim() const { return static_cast<int>(basis.size()); }
    std::string basisString(int i) const;
};

LkbSpace lkbBasis(int n, int l, const std::vector<int>& colors);

using RepMatrix = linalg::Matrix<FieldElement>;
using RatMatrix = linalg::Matrix<Rat>;

struct PurityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StabilityError : std::logic_error {
    using std::logic_error::logic_error;
};

// Matrix of a braid word on the LKB space; rows are images of basis vectors.
// The word must be pure on the color partition; any residual outside the
// span is a StabilityError.
RepMatrix wordMatrix(const braid::BraidWord& w, const LkbSpace& space);

// The same computation with all scalars specialized up front.
struct SpecializedSpace {
    const LkbSpace* shape = nullptr;
    braid::NumericCtx ctx;
    std::vector<std::vector<Rat>> basis;
};
SpecializedSpace specializeSpace(const LkbSpace& space, const scalar::Specialization& sp);
RatMatrix wordMatrixAt(const braid::BraidWord& w, const SpecializedSpace& space);

// Standard generators of the braid group pure on S: the bands
// A_{ij} = (s_{j-1}..s_{i+1}) s_i^2 (s_{i+1}^-1..s_{j-1}^-1) together with
// every s_k whose two strands lie in one block. Each word is checked pure.
std::vector<braid::BraidWord> pureGenerators(int n, const braid::Partition& s);

// Dimension of {X : XM = MX for all M}.
int commutantDimension(const std::vector<RatMatrix>& mats);
int commutantDimension(const std::vector<RepMatrix>& mats, const scalar::Specialization& sp);
// Generic-point solve (symbolic Sylvester system); practical for dim <= 3.
int commutantDimensionSymbolic(const GeneratorSet& gs, const std::vector<RepMatrix>& mats);

struct SimplicityTrial {
    std::uint64_t seedUsed = 0;
    std::vector<Rat> values; // v, U_1..U_m
    int commutantDim = -1;
    std::string note;
};

struct SimplicityReport {
    int n = 0, l = 0;
    std::string partition;
    int dim = 0;
    std::vector<std::string> generators;
    std::vector<SimplicityTrial> trials;
    bool simpleCertified = false;
};

// For `trials` admissible specializations: build the generator matrices and
// compute the commutant dimension. A single trial of dimension 1 certifies
// simplicity at the generic point.
SimplicityReport simplicityReport(int n, int l, const braid::Partition& s, int trials,
                                  std::uint64_t seed);

} // namespace lkb
} // namespace vlkb

#endif
