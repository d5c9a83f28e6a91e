#include "vlkb/qgroup.hpp"

#include <sstream>
#include <stdexcept>

namespace vlkb {
namespace qgroup {

std::string GlnGen::str() const {
    std::ostringstream out;
    switch (kind) {
    case Kind::E: out << "E" << i; break;
    case Kind::F: out << "F" << j; break;
    case Kind::L: out << "L" << i; break;
    case Kind::Eij: out << "e(" << i << "," << j << ")"; break;
    }
    return out.str();
}

namespace {

using verma::Monomial;
using verma::Vec;

Vec actGlnQuantum(const GeneratorSet& gs, const GlnGen& g, const Monomial& m) {
    const int n = m.n();
    Vec out;
    switch (g.kind) {
    case GlnGen::Kind::E: {
        int i = g.i; // 1-based, acts on slots i, i+1
        if (i < 1 || i >= n) throw std::invalid_argument("actGln: E index out of range");
        int a = i - 1, b = i;
        // [mu_{i+1} + r_{i+1}] v^{s_i - s_{i+1}} at r + alpha_i
        {
            FieldElement c = scalar::qnum(gs, i + 1, m.r[b]) *
                             scalar::vPow(gs, m.s[a] - m.s[b]);
            Monomial tgt = m;
            ++tgt.r[a];
            --tgt.r[b];
            out.add(tgt, c);
        }
        // [s_{i+1}] at s + alpha_i
        if (m.s[b] > 0) {
            Monomial tgt = m;
            ++tgt.s[a];
            --tgt.s[b];
            out.add(tgt, scalar::qnum(gs, m.s[b]));
        }
        break;
    }
    case GlnGen::Kind::F: {
        int i = g.j; // F_i with i = g.j, slots i, i+1
        if (i < 1 || i >= n) throw std::invalid_argument("actGln: F index out of range");
        int a = i - 1, b = i;
        // [mu_i + r_i] at r - alpha_i
        {
            Monomial tgt = m;
            --tgt.r[a];
            ++tgt.r[b];
            out.add(tgt, scalar::qnum(gs, i, m.r[a]));
        }
        // v^{-(mu_i+r_i) + (mu_{i+1}+r_{i+1})} [s_i] at s - alpha_i
        if (m.s[a] > 0) {
            FieldElement c = scalar::uPow(gs, i, -1) * scalar::uPow(gs, i + 1, 1) *
                             scalar::vPow(gs, m.r[b] - m.r[a]) * scalar::qnum(gs, m.s[a]);
            Monomial tgt = m;
            --tgt.s[a];
            ++tgt.s[b];
            out.add(tgt, c);
        }
        break;
    }
    case GlnGen::Kind::L: {
        int i = g.i;
        if (i < 1 || i > n) throw std::invalid_argument("actGln: L index out of range");
        FieldElement c =
            scalar::uPow(gs, i, 1) * scalar::vPow(gs, m.r[i - 1] + m.s[i - 1]);
        out.add(m, c);
        break;
    }
    case GlnGen::Kind::Eij:
        throw ModeError("actGln: e_{ij} is a classical-mode generator");
    }
    return out;
}

Vec actGlnClassical(const GeneratorSet& gs, const GlnGen& g, const Monomial& m) {
    if (g.kind != GlnGen::Kind::Eij)
        throw ModeError("actGln: classical mode uses e_{ij} generators");
    const int n = m.n();
    int i = g.i, j = g.j;
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("actGln: index out of range");
    Vec out;
    int a = i - 1, b = j - 1;
    if (i == j) {
        FieldElement c = scalar::lambdaVar(gs, i) +
                         FieldElement::fromInt(gs, m.r[a] + m.s[a]);
        out.add(m, c);
        return out;
    }
    // X_i d/dX_j
    {
        FieldElement c = scalar::lambdaVar(gs, j) + FieldElement::fromInt(gs, m.r[b]);
        Monomial tgt = m;
        ++tgt.r[a];
        --tgt.r[b];
        out.add(tgt, c);
    }
    // Y_i d/dY_j
    if (m.s[b] > 0) {
        Monomial tgt = m;
        ++tgt.s[a];
        --tgt.s[b];
        out.add(tgt, FieldElement::fromInt(gs, m.s[b]));
    }
    return out;
}

} // namespace

verma::Vec actGln(const GeneratorSet& gs, const GlnGen& g, const verma::Monomial& m) {
    return gs.mode == Mode::quantum ? actGlnQuantum(gs, g, m) : actGlnClassical(gs, g, m);
}

verma::Vec actGln(const GeneratorSet& gs, const GlnGen& g, const verma::Vec& v) {
    verma::Vec out;
    for (const auto& [m, c] : v.terms()) out.addScaled(c, actGln(gs, g, m));
    return out;
}

Report commutationCheck(const GeneratorSet& gs, verma::Gl2 a, const GlnGen& b,
                        const std::vector<verma::Monomial>& samples) {
    Report rep;
    rep.title = "commuting actions";
    rep.claim = "the gl(2) and dual gl(n) operators commute on every basis monomial";
    int bad = 0;
    std::string firstBad;
    for (const auto& m : samples) {
        verma::Vec ab = actGln(gs, b, actGl2(gs, a, m));
        verma::Vec ba = actGl2(gs, a, actGln(gs, b, m));
        if (!(ab == ba)) {
            ++bad;
            if (firstBad.empty()) firstBad = m.str();
        }
    }
    std::ostringstream name;
    const char* gl2names[] = {"E", "F", "L1", "L2", "K"};
    name << "[" << gl2names[static_cast<int>(a)] << ", " << b.str() << "] on "
         << samples.size() << " monomials";
    rep.add(name.str(), bad == 0,
            bad == 0 ? "all zero" : "first failure at " + firstBad);
    return rep;
}

HighestWeight highestWeightBasis(const GeneratorSet& gs, int n, int l,
                                 const std::vector<int>& colors) {
    if (gs.mode != Mode::quantum) throw ModeError("highestWeightBasis: quantum mode");
    if (n < 1 || l < 0) throw std::invalid_argument("highestWeightBasis: bad (n,l)");
    HighestWeight hw;
    hw.n = n;
    hw.l = l;
    hw.slice = verma::tensorBasis(n, l);
    int ncols = static_cast<int>(hw.slice.size());
    if (l == 0) {
        hw.pivots = {0};
        hw.basis = {{FieldElement::one(gs)}};
        return hw;
    }
    auto target = verma::tensorBasis(n, l - 1);
    std::map<std::vector<int>, int> rowIdx;
    for (std::size_t i = 0; i < target.size(); ++i) rowIdx[target[i]] = static_cast<int>(i);

    std::vector<linalg::SparseRow> rows(target.size());
    for (int col = 0; col < ncols; ++col) {
        verma::Vec img =
            actGl2(gs, verma::Gl2::E, verma::Monomial::fromTensorIndex(hw.slice[col]), colors);
        for (const auto& [mono, c] : img.terms()) {
            rows[static_cast<std::size_t>(rowIdx.at(mono.s))][col] = c;
        }
    }
    auto ker = linalg::kernelBasis(gs, std::move(rows), ncols);
    hw.pivots = ker.basisPivots;
    hw.basis = std::move(ker.basis);
    return hw;
}

HighestWeight highestWeightBasis(const GeneratorSet& gs, int n, int l) {
    return highestWeightBasis(gs, n, l, verma::identityColors(n));
}

Report dualityDimensionCheck(int n, int tMax, int lMax) {
    if (n < 2) throw std::invalid_argument("dualityDimensionCheck: need n >= 2");
    Report rep;
    rep.title = "duality dimensions";
    rep.claim = "sum_{c=0}^{t} C(c+n-2,c) = C(t+n-1,t); dim ker(E) on the level-l "
                "slice = C(l+n-2,l)";
    Int acc = 0;
    for (int t = 0; t <= tMax; ++t) {
        acc += scalar::binom(t + n - 2, t);
        Int rhs = scalar::binom(t + n - 1, t);
        std::ostringstream name;
        name << "binomial identity n=" << n << " t=" << t;
        rep.add(name.str(), acc == rhs, acc.get_str() + " vs " + rhs.get_str());
    }
    GeneratorSet gs = GeneratorSet::quantum(n);
    for (int l = 0; l <= lMax; ++l) {
        auto hw = highestWeightBasis(gs, n, l);
        Int expect = scalar::binom(l + n - 2, l);
        std::ostringstream name;
        name << "dim ker(E) n=" << n << " l=" << l;
        rep.add(name.str(), Int(static_cast<long>(hw.basis.size())) == expect,
                std::to_string(hw.basis.size()) + " vs " + expect.get_str());
    }
    return rep;
}

} // namespace qgroup
} // namespace vlkb
