#ifndef VLKB_SUITES_HPP
#define VLKB_SUITES_HPP

#include "vlkb/braid.hpp"
#include "vlkb/report.hpp"

#include <cstdint>

namespace vlkb {
namespace suites {

// Far commutativity and the braid relation for the colored R-matrix action,
// symbolically, on levels 0..lMax.
Report braidRelations(int n, int lMax);

// Yang-Baxter on three distinct formal colors plus two-sided inverses on
// two-factor slices of degree <= invDegree.
Report yangBaxter(int lMax, int invDegree = 3);

// [gl2 operator, dual gl(n) operator] = 0 on `samples` random monomials.
Report commutingActions(int n, int samples, std::uint64_t seed, Mode mode);

} // namespace suites
} // namespace vlkb

#endif
