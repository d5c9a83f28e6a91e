#ifndef VLKB_VERMA_HPP
#define VLKB_VERMA_HPP

#include "vlkb/scalars.hpp"
#include "vlkb/sparsevec.hpp"

#include <compare>
#include <string>
#include <vector>

namespace vlkb {
namespace verma {

// Basis monomial X^{mu+r} Y^s of the n-fold module: r may be negative, s may
// not. The grade is d_i = r_i + s_i.
struct Monomial {
    std::vector<int> r;
    std::vector<int> s;

    int n() const { return static_cast<int>(r.size()); }
    auto operator<=>(const Monomial&) const = default;

    static Monomial vacuum(int n) { return {std::vector<int>(n, 0), std::vector<int>(n, 0)}; }
    // m_{k_1} x ... x m_{k_n} sits at r = -k, s = k (grade zero slice).
    static Monomial fromTensorIndex(const std::vector<int>& k);

    std::string str() const; // X[r1,..,rn]Y[s1,..,sn]
};

using Vec = SparseVec<Monomial, FieldElement>;

enum class Gl2 { E, F, L1, L2, K };

// One gl2 generator applied to one basis monomial; quantum or classical per
// the generator set. `colors[p]` names the weight generator of tensor slot p
// (quantum mode; defaults to 1..n).
Vec actGl2(const GeneratorSet& gs, Gl2 g, const Monomial& m);
Vec actGl2(const GeneratorSet& gs, Gl2 g, const Monomial& m, const std::vector<int>& colors);
Vec actGl2(const GeneratorSet& gs, Gl2 g, const Vec& v);
Vec actGl2(const GeneratorSet& gs, Gl2 g, const Vec& v, const std::vector<int>& colors);

struct WeightGrade {
    int sumR = 0; // L1 acts by v^{sum mu + sumR}
    int sumS = 0; // L2 acts by v^{sumS}
    std::vector<int> d;
};

WeightGrade weightAndGrade(const Monomial& m);

// All k in Z_{>=0}^n with sum l, ordered with the lexicographically greatest
// first: (l,0,..,0), ..., (0,..,0,l).
std::vector<std::vector<int>> tensorBasis(int n, int l);

std::vector<int> identityColors(int n);

// Deterministic random monomial with |r_i| <= rBound, 0 <= s_i <= sBound.
Monomial randomMonomial(int n, Rng& rng, int rBound = 3, int sBound = 4);

} // namespace verma
} // namespace vlkb

#endif
