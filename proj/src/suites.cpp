#include "vlkb/suites.hpp"

#include "vlkb/qgroup.hpp"

#include <sstream>

namespace vlkb {
namespace suites {

Report braidRelations(int n, int lMax) {
    Report rep;
    rep.title = "colored braid relations";
    rep.claim = "far commutativity and s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1} for the "
                "R-matrix action on tensor products of Verma modules, symbolically";
    GeneratorSet gs = GeneratorSet::quantum(n);
    braid::SymbolicCtx ctx(gs);
    auto colors = verma::identityColors(n);
    for (int l = 0; l <= lMax; ++l) {
        for (int i = 1; i + 1 <= n - 1; ++i) {
            braid::BraidWord lhs{n, {i, i + 1, i}};
            braid::BraidWord rhs{n, {i + 1, i, i + 1}};
            auto a = braid::coloredRead(ctx, lhs, colors, l);
            auto b = braid::coloredRead(ctx, rhs, colors, l);
            std::ostringstream name;
            name << "s" << i << " s" << i + 1 << " s" << i << " = s" << i + 1 << " s" << i
                 << " s" << i + 1 << " at level " << l;
            rep.add(name.str(), a.matrix == b.matrix && a.targetColors == b.targetColors);
        }
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i + 2; j <= n - 1; ++j) {
                braid::BraidWord lhs{n, {i, j}};
                braid::BraidWord rhs{n, {j, i}};
                auto a = braid::coloredRead(ctx, lhs, colors, l);
                auto b = braid::coloredRead(ctx, rhs, colors, l);
                std::ostringstream name;
                name << "s" << i << " s" << j << " = s" << j << " s" << i << " at level " << l;
                rep.add(name.str(), a.matrix == b.matrix);
            }
    }
    return rep;
}

Report yangBaxter(int lMax, int invDegree) {
    Report rep;
    rep.title = "Yang-Baxter equation";
    rep.claim = "(R x 1)(1 x R)(R x 1) = (1 x R)(R x 1)(1 x R) on three distinct formal "
                "colors, and R R^{-1} = R^{-1} R = id on two-factor slices";
    GeneratorSet gs3 = GeneratorSet::quantum(3);
    braid::SymbolicCtx ctx3(gs3);
    for (int l = 0; l <= lMax; ++l) {
        braid::BraidWord lhs{3, {1, 2, 1}};
        braid::BraidWord rhs{3, {2, 1, 2}};
        auto a = braid::coloredRead(ctx3, lhs, {1, 2, 3}, l);
        auto b = braid::coloredRead(ctx3, rhs, {1, 2, 3}, l);
        rep.add("YBE at level " + std::to_string(l), a.matrix == b.matrix);
    }
    GeneratorSet gs2 = GeneratorSet::quantum(2);
    braid::SymbolicCtx ctx2(gs2);
    bool inv = true;
    for (int k = 0; k <= invDegree; ++k)
        for (int l = 0; k + l <= invDegree; ++l) {
            braid::TwoVec x;
            x.add({k, l}, FieldElement::one(gs2));
            auto fwd = braid::rmatrixStep(ctx2, 1, 1, 2, x);
            if (!(braid::rmatrixStep(ctx2, -1, 2, 1, fwd) == x)) inv = false;
            auto bwd = braid::rmatrixStep(ctx2, -1, 1, 2, x);
            if (!(braid::rmatrixStep(ctx2, 1, 2, 1, bwd) == x)) inv = false;
        }
    rep.add("R R^{-1} = R^{-1} R = id up to degree " + std::to_string(invDegree), inv);
    return rep;
}

Report commutingActions(int n, int samples, std::uint64_t seed, Mode mode) {
    Report rep;
    rep.title = mode == Mode::quantum ? "commuting actions (quantum), n = " + std::to_string(n)
                                      : "commuting actions (classical), n = " + std::to_string(n);
    rep.claim = "[x, y] = 0 on every monomial for x among the gl(2) operators and y among "
                "the dual gl(n) operators";
    GeneratorSet gs = mode == Mode::quantum ? GeneratorSet::quantum(n) : GeneratorSet::classical(n);
    Rng rng(seed);
    std::vector<verma::Monomial> pool;
    for (int t = 0; t < samples; ++t) pool.push_back(verma::randomMonomial(n, rng));

    std::vector<qgroup::GlnGen> gens;
    if (mode == Mode::quantum) {
        for (int i = 1; i < n; ++i) {
            gens.push_back(qgroup::GlnGen::E(i));
            gens.push_back(qgroup::GlnGen::F(i));
        }
        for (int i = 1; i <= n; ++i) gens.push_back(qgroup::GlnGen::L(i));
    } else {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) gens.push_back(qgroup::GlnGen::Eij(i, j));
    }
    std::vector<verma::Gl2> gl2;
    if (mode == Mode::quantum)
        gl2 = {verma::Gl2::E, verma::Gl2::F, verma::Gl2::L1, verma::Gl2::L2, verma::Gl2::K};
    else gl2 = {verma::Gl2::E, verma::Gl2::F, verma::Gl2::L1, verma::Gl2::L2};

    for (auto a : gl2)
        for (const auto& b : gens) {
            Report sub = qgroup::commutationCheck(gs, a, b, pool);
            rep.lines.insert(rep.lines.end(), sub.lines.begin(), sub.lines.end());
        }
    return rep;
}

} // namespace suites
} // namespace vlkb
