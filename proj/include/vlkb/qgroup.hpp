#ifndef VLKB_QGROUP_HPP
#define VLKB_QGROUP_HPP

#include "vlkb/linalg.hpp"
#include "vlkb/report.hpp"
#include "vlkb/verma.hpp"

#include <string>
#include <vector>

namespace vlkb {
namespace qgroup {

// One generator of the dual action: quantum E_i/F_i (1 <= i <= n-1) and L_i
// (1 <= i <= n), classical e_{ij} for any pair.
struct GlnGen {
    enum class Kind { E, F, L, Eij } kind = Kind::E;
    int i = 1, j = 1;

    static GlnGen E(int i) { return {Kind::E, i, i + 1}; }
    static GlnGen F(int i) { return {Kind::F, i + 1, i}; }
    static GlnGen L(int i) { return {Kind::L, i, i}; }
    static GlnGen Eij(int i, int j) { return {Kind::Eij, i, j}; }

    std::string str() const;
};

verma::Vec actGln(const GeneratorSet& gs, const GlnGen& g, const verma::Monomial& m);
verma::Vec actGln(const GeneratorSet& gs, const GlnGen& g, const verma::Vec& v);

// Checks that the gl2 operator and the gl(n) operator commute on each sample.
Report commutationCheck(const GeneratorSet& gs, verma::Gl2 a, const GlnGen& b,
                        const std::vector<verma::Monomial>& samples);

// Highest-weight vectors: an exact basis of ker(E) inside the grade-zero
// level-l slice, echelonized against tensorBasis(n, l) column order.
struct HighestWeight {
    int n = 0, l = 0;
    std::vector<std::vector<int>> slice; // tensorBasis(n, l)
    std::vector<int> pivots;             // index into slice, one per basis vector
    std::vector<std::vector<FieldElement>> basis; // dense coordinates on slice
};

HighestWeight highestWeightBasis(const GeneratorSet& gs, int n, int l);
HighestWeight highestWeightBasis(const GeneratorSet& gs, int n, int l,
                                 const std::vector<int>& colors);

// (i) sum_{c=0}^{t} C(c+n-2,c) = C(t+n-1,t) for t <= tMax;
// (ii) dim ker(E) on the (n,l) slice = C(l+n-2,l) for l <= lMax.
Report dualityDimensionCheck(int n, int tMax, int lMax);

} // namespace qgroup
} // namespace vlkb

#endif
