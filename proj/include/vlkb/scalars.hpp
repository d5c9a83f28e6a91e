#ifndef VLKB_SCALARS_HPP
#define VLKB_SCALARS_HPP

#include "vlkb/field.hpp"
#include "vlkb/rng.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace vlkb {
namespace scalar {

// v^e as a field element (quantum mode).
FieldElement vPow(const GeneratorSet& gs, long e);
// U_i^e, i.e. v^{e*mu_i}, for a color index 1 <= i <= n.
FieldElement uPow(const GeneratorSet& gs, int color, long e);
// v^{mu_color + shift} = U_color * v^shift.
FieldElement vPowColorShift(const GeneratorSet& gs, int color, long shift);

// Quantum integer [x] = (v^x - v^-x)/(v - v^-1).
FieldElement qnum(const GeneratorSet& gs, long x);
// Quantum number [mu_color + shift].
FieldElement qnum(const GeneratorSet& gs, int color, long shift);

// Quantum factorial [k]! and Gaussian binomial [k choose j]; 0 <= j <= k.
std::pair<FieldElement, FieldElement> qfactQbinom(const GeneratorSet& gs, long k, long j);
FieldElement qfact(const GeneratorSet& gs, long k);

// base * (base+1) * ... * (base+len-1); the empty product is 1.
FieldElement pochhammer(const FieldElement& base, long len);

// lambda_i as a field element (classical mode).
FieldElement lambdaVar(const GeneratorSet& gs, int i);

// C(a, b), zero outside 0 <= b <= a.
Int binom(long a, long b);

// Coefficient of X^s in prod_{i=1}^{len(d)} (X_1 + ... + X_i)^{d_i},
// computed by expanding the product.
Int multinomial(const std::vector<long>& d, const std::vector<long>& s);
// The same number as a product of binomial coefficients.
Int multinomialProductForm(const std::vector<long>& d, const std::vector<long>& s);

struct SpecializationSingular : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An assignment of every generator to a nonzero rational, drawn
// deterministically from a seed.
struct Specialization {
    GeneratorSet gs;
    std::uint64_t seed = 0;
    std::vector<Rat> values; // one per variable, in variable order

    static Specialization draw(const GeneratorSet& gs, std::uint64_t seed);
};

// Evaluates num/den at the assignment; throws SpecializationSingular if the
// denominator vanishes.
Rat specialize(const FieldElement& x, const Specialization& sp);

// Admissibility of a numeric assignment: some ordering of the weights has
// every partial sum noninteger (partial product of the U_i off the powers of
// v, in quantum mode).
bool isAdmissible(const Specialization& sp);

// Draws with seed, seed+1, ... until admissible; at most maxRetries+1 draws.
Specialization drawAdmissible(const GeneratorSet& gs, std::uint64_t seed, int maxRetries = 16);

} // namespace scalar
} // namespace vlkb

#endif
