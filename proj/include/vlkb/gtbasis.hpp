#ifndef VLKB_GTBASIS_HPP
#define VLKB_GTBASIS_HPP

#include "vlkb/report.hpp"
#include "vlkb/verma.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vlkb {
namespace gtbasis {

// X^{lambda+r} a^l with a_i = X_i Y_{i+1} - X_{i+1} Y_i. The block labels
// are b - c = sum r and c = sum l.
struct DetMonomial {
    std::vector<int> r; // size n
    std::vector<int> l; // size n-1, entries >= 0

    int n() const { return static_cast<int>(r.size()); }
    int blockC() const;
    int blockB() const;
    // e_{ii} eigenvalue offsets: w_i = r_i + l_{i-1} + l_i.
    std::vector<int> multidegree() const;

    auto operator<=>(const DetMonomial&) const = default;
    std::string str() const;
};

using DetVec = SparseVec<DetMonomial, FieldElement>;

// Expansion of one a_{ab} factor (two monomials, coefficients +1/-1).
verma::Vec expandDetPair(const GeneratorSet& gs, int n, int a, int b);
// Full expansion of X^{lambda+r} prod a_i^{l_i} into the monomial basis.
verma::Vec expandDet(const GeneratorSet& gs, const DetMonomial& m);
// Formal product of monomial expansions (classical commutative model).
verma::Vec mulVec(const verma::Vec& a, const verma::Vec& b);

// e_{ij} applied inside the determinant family. Adjacent and diagonal pairs
// use the closed two-term formulas; general pairs reduce through
// e_{ij} = [e_{ik}, e_{kj}].
DetVec actEijDet(const GeneratorSet& gs, int i, int j, const DetMonomial& m);
DetVec actEijDet(const GeneratorSet& gs, int i, int j, const DetVec& v);

// Two-diagonal pattern: c_1 = 0 <= c_2 <= ... <= c_n and integer offsets r
// for the nonintegral diagonal. d_i = c_{i+1} - c_i.
struct GTPattern {
    int n = 0;
    std::vector<int> c; // size n, c[0] == 0
    std::vector<int> r; // size n

    bool valid() const;
    std::vector<int> d() const;
    int blockC() const { return c.empty() ? 0 : c.back(); }
    // gl(n) weight offsets of the associated vector: r_i + d_{i-1} + d_i.
    std::vector<int> multidegree() const;

    auto operator<=>(const GTPattern&) const = default;
    std::string str() const; // GT{n=..; c=[..]; r=[..]}
    static GTPattern parse(const std::string& text);
};

// First-diagonal entry x_k = sum_{i<=k} (lambda_i + r_i) + c_{min(k+1,n)}.
FieldElement patternX(const GeneratorSet& gs, const GTPattern& p, int k);

DetVec gtVector(const GeneratorSet& gs, const GTPattern& p);

// C_k = sum_{i != j <= k} e_{ij} e_{ji} + sum_{i <= k} e_{ii}^2.
DetVec casimirApply(const GeneratorSet& gs, int k, const DetVec& v);
// Same element computed through the split C_k = 2 z_k + h_k with
// z_k = sum_{j < i <= k} e_{ji} e_{ij}; an independent assembly of the
// operator used as an internal cross-check.
DetVec casimirApplySplit(const GeneratorSet& gs, int k, const DetVec& v);
// x_k (x_k + k - 1) + c_k (c_k + k - 3).
FieldElement casimirEigenvalueExpected(const GeneratorSet& gs, const GTPattern& p, int k);

// Infinitesimal braid operator w_{ij} (four second-order terms).
verma::Vec infbraidApply(const GeneratorSet& gs, int i, int j, const verma::Monomial& m);
verma::Vec infbraidApply(const GeneratorSet& gs, int i, int j, const verma::Vec& v);

// Defining relations of the infinitesimal pure braid algebra plus
// e_{ij} e_{ji} = w_{ij} + e_{ii}, monomial-wise on random samples.
Report infbraidRelationsCheck(const GeneratorSet& gs, int n, int samples, std::uint64_t seed);

// Casimir sweep: C_k gt(p) = expected * gt(p) for every valid pattern with
// c_n <= cMax and |r_i| <= rBound, every k <= n.
Report casimirCheck(const GeneratorSet& gs, int n, int cMax, int rBound, bool crossCheck = false);

// All valid patterns in the block with c_n = c whose multidegree equals w.
std::vector<GTPattern> patternsForWeight(int n, int c, const std::vector<int>& w);
// All determinant monomials in that block and weight space.
std::vector<DetMonomial> detMonomialsForWeight(int n, int c, const std::vector<int>& w);

} // namespace gtbasis
} // namespace vlkb

#endif
