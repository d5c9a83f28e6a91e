#ifndef VLKB_BRAID_HPP
#define VLKB_BRAID_HPP

#include "vlkb/linalg.hpp"
#include "vlkb/scalars.hpp"
#include "vlkb/verma.hpp"

#include <string>
#include <vector>

namespace vlkb {
namespace braid {

// A word in the braid generators; letter +i is the positive crossing of
// strands i, i+1, letter -i its inverse.
struct BraidWord {
    int n = 0;
    std::vector<int> letters;

    bool operator==(const BraidWord&) const = default;
};

// Grammar: whitespace-separated tokens, each `sK`, `sK^-1`, or a signed
// integer; 1 <= K <= n-1.
BraidWord parseWord(const std::string& text, int n);
std::string printWord(const BraidWord& w);
BraidWord inverseWord(const BraidWord& w);
BraidWord concatWords(const BraidWord& a, const BraidWord& b);

// Underlying permutation: perm[p] is where the strand starting at position p
// (0-based) ends.
std::vector<int> wordPermutation(const BraidWord& w);

// Set partition of {1..n}, blocks sorted by least element.
struct Partition {
    std::vector<std::vector<int>> blocks;

    int n() const;
    void canonicalize();
    bool operator==(const Partition&) const = default;

    static Partition finest(int n);
    static Partition coarsest(int n);
    static Partition fromColors(const std::vector<int>& colors);
    // e.g. "[1,2][3]" or "[1][2][3]"
    static Partition parse(const std::string& text, int n);
    std::string str() const;

    // block index (0-based) of each position 1..n
    std::vector<int> blockOf() const;
};

bool isPure(const BraidWord& w, const Partition& s);
// Orbit partition of the underlying permutation.
Partition finestPartition(const BraidWord& w);

// Handlebody preset: g strands of one color followed by n of another.
std::vector<int> handlebodyColors(int g, int n);
Partition handlebodyPartition(int g, int n);

// Scalar context for the R-matrix calculus: symbolic (formal v, U_i) or
// specialized to rationals.
struct SymbolicCtx {
    using Scalar = FieldElement;
    GeneratorSet gs;

    explicit SymbolicCtx(const GeneratorSet& g) : gs(g) {}
    Scalar zero() const { return FieldElement::zero(gs); }
    Scalar one() const { return FieldElement::one(gs); }
    Scalar vpow(long e) const { return scalar::vPow(gs, e); }
    Scalar upow(int color, long e) const { return scalar::uPow(gs, color, e); }
    Scalar qnumInt(long x) const { return scalar::qnum(gs, x); }
    Scalar qfact(long k) const { return scalar::qfact(gs, k); }
    // U_color v^{-shift} - U_color^{-1} v^{shift}  (the cleared bracket)
    Scalar clearedQnum(int color, long shift) const {
        return upow(color, 1) * vpow(-shift) - upow(color, -1) * vpow(shift);
    }
};

struct NumericCtx {
    using Scalar = Rat;
    Rat v;
    std::vector<Rat> u; // 1-based colors: u[color-1]

    static NumericCtx fromSpecialization(const scalar::Specialization& sp);
    Scalar zero() const { return Rat(0); }
    Scalar one() const { return Rat(1); }
    Scalar vpow(long e) const;
    Scalar upow(int color, long e) const;
    Scalar qnumInt(long x) const { return (vpow(x) - vpow(-x)) / (vpow(1) - vpow(-1)); }
    Scalar qfact(long k) const;
    Scalar clearedQnum(int color, long shift) const {
        return upow(color, 1) * vpow(-shift) - upow(color, -1) * vpow(shift);
    }
};

// One positive (sign=+1) or negative (sign=-1) crossing applied to
// m_k (x) m_l in V_{colorA} (x) V_{colorB}; returns the image terms as
// (k', l', coefficient) in the swapped product V_{colorB} (x) V_{colorA).
template <class Ctx>
std::vector<std::tuple<int, int, typename Ctx::Scalar>>
rmatrixPair(const Ctx& ctx, int sign, int colorA, int colorB, int k, int l);

// The same crossing applied to a vector on the two-factor slice; keys are
// index pairs (k, l).
using TwoVec = SparseVec<std::pair<int, int>, FieldElement>;
TwoVec rmatrixStep(const SymbolicCtx& ctx, int sign, int colorA, int colorB, const TwoVec& vec);

// Reads the word bottom-to-top (leftmost letter first) on the level-l slice
// of the n-fold tensor product colored by `colors`. Rows of the returned
// matrix are images of tensorBasis(n, l) elements in the same index order on
// the target (color-permuted) slice.
template <class Ctx>
struct ColoredReadResult {
    linalg::Matrix<typename Ctx::Scalar> matrix;
    std::vector<int> sourceColors;
    std::vector<int> targetColors;
};

template <class Ctx>
ColoredReadResult<Ctx> coloredRead(const Ctx& ctx, const BraidWord& w,
                                   const std::vector<int>& colors, int level);

} // namespace braid
} // namespace vlkb

#endif
