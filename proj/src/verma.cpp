#include "vlkb/verma.hpp"

#include <sstream>
#include <stdexcept>

namespace vlkb {
namespace verma {

Monomial Monomial::fromTensorIndex(const std::vector<int>& k) {
    Monomial m;
    m.s = k;
    m.r.reserve(k.size());
    for (int x : k) m.r.push_back(-x);
    return m;
}

std::string Monomial::str() const {
    std::ostringstream out;
    out << "X[";
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << "]Y[";
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << "]";
    return out.str();
}

std::vector<int> identityColors(int n) {
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = i + 1;
    return c;
}

namespace {

Vec actGl2Quantum(const GeneratorSet& gs, Gl2 g, const Monomial& m,
                  const std::vector<int>& colors) {
    const int n = m.n();
    Vec out;
    switch (g) {
    case Gl2::E: {
        for (int p = 0; p < n; ++p) {
            if (m.s[p] == 0) continue;
            // v^{sum_{t>p}(mu_t + r_t - s_t)} [s_p]
            FieldElement c = scalar::qnum(gs, m.s[p]);
            long ve = 0;
            for (int t = p + 1; t < n; ++t) {
                c *= scalar::uPow(gs, colors[t], 1);
                ve += m.r[t] - m.s[t];
            }
            c *= scalar::vPow(gs, ve);
            Monomial tgt = m;
            ++tgt.r[p];
            --tgt.s[p];
            out.add(tgt, c);
        }
        break;
    }
    case Gl2::F: {
        for (int p = 0; p < n; ++p) {
            // v^{-sum_{t<p}(mu_t + r_t - s_t)} [mu_p + r_p]
            FieldElement c = scalar::qnum(gs, colors[p], m.r[p]);
            long ve = 0;
            for (int t = 0; t < p; ++t) {
                c *= scalar::uPow(gs, colors[t], -1);
                ve += m.s[t] - m.r[t];
            }
            c *= scalar::vPow(gs, ve);
            Monomial tgt = m;
            --tgt.r[p];
            ++tgt.s[p];
            out.add(tgt, c);
        }
        break;
    }
    case Gl2::L1: {
        FieldElement c = FieldElement::one(gs);
        long ve = 0;
        for (int t = 0; t < n; ++t) {
            c *= scalar::uPow(gs, colors[t], 1);
            ve += m.r[t];
        }
        out.add(m, c * scalar::vPow(gs, ve));
        break;
    }
    case Gl2::L2: {
        long ve = 0;
        for (int t = 0; t < n; ++t) ve += m.s[t];
        out.add(m, scalar::vPow(gs, ve));
        break;
    }
    case Gl2::K: {
        FieldElement c = FieldElement::one(gs);
        long ve = 0;
        for (int t = 0; t < n; ++t) {
            c *= scalar::uPow(gs, colors[t], 1);
            ve += m.r[t] - m.s[t];
        }
        out.add(m, c * scalar::vPow(gs, ve));
        break;
    }
    }
    return out;
}

Vec actGl2Classical(const GeneratorSet& gs, Gl2 g, const Monomial& m) {
    const int n = m.n();
    Vec out;
    switch (g) {
    case Gl2::E: {
        for (int p = 0; p < n; ++p) {
            if (m.s[p] == 0) continue;
            Monomial tgt = m;
            ++tgt.r[p];
            --tgt.s[p];
            out.add(tgt, FieldElement::fromInt(gs, m.s[p]));
        }
        break;
    }
    case Gl2::F: {
        for (int p = 0; p < n; ++p) {
            FieldElement c = scalar::lambdaVar(gs, p + 1) + FieldElement::fromInt(gs, m.r[p]);
            Monomial tgt = m;
            --tgt.r[p];
            ++tgt.s[p];
            out.add(tgt, c);
        }
        break;
    }
    case Gl2::L1: {
        FieldElement c = FieldElement::zero(gs);
        for (int p = 0; p < n; ++p)
            c += scalar::lambdaVar(gs, p + 1) + FieldElement::fromInt(gs, m.r[p]);
        out.add(m, c);
        break;
    }
    case Gl2::L2: {
        long t = 0;
        for (int p = 0; p < n; ++p) t += m.s[p];
        out.add(m, FieldElement::fromInt(gs, t));
        break;
    }
    case Gl2::K:
        throw ModeError("actGl2: K is a quantum-mode generator");
    }
    return out;
}

} // namespace

Vec actGl2(const GeneratorSet& gs, Gl2 g, const Monomial& m, const std::vector<int>& colors) {
    if (m.n() < 1) throw std::invalid_argument("actGl2: empty monomial");
    if (gs.mode == Mode::quantum) {
        if (static_cast<int>(colors.size()) != m.n())
            throw std::invalid_argument("actGl2: color count mismatch");
        return actGl2Quantum(gs, g, m, colors);
    }
    return actGl2Classical(gs, g, m);
}

Vec actGl2(const GeneratorSet& gs, Gl2 g, const Monomial& m) {
    return actGl2(gs, g, m, identityColors(m.n()));
}

Vec actGl2(const GeneratorSet& gs, Gl2 g, const Vec& v, const std::vector<int>& colors) {
    Vec out;
    for (const auto& [m, c] : v.terms()) out.addScaled(c, actGl2(gs, g, m, colors));
    return out;
}

Vec actGl2(const GeneratorSet& gs, Gl2 g, const Vec& v) {
    Vec out;
    for (const auto& [m, c] : v.terms()) out.addScaled(c, actGl2(gs, g, m));
    return out;
}

WeightGrade weightAndGrade(const Monomial& m) {
    WeightGrade w;
    w.d.resize(m.r.size());
    for (std::size_t i = 0; i < m.r.size(); ++i) {
        w.sumR += m.r[i];
        w.sumS += m.s[i];
        w.d[i] = m.r[i] + m.s[i];
    }
    return w;
}

namespace {

void enumerate(int slots, int remaining, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
    if (slots == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        cur.push_back(k);
        enumerate(slots - 1, remaining - k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> tensorBasis(int n, int l) {
    if (n < 1 || l < 0) throw std::invalid_argument("tensorBasis: need n >= 1, l >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate(n, l, cur, out);
    return out;
}

Monomial randomMonomial(int n, Rng& rng, int rBound, int sBound) {
    Monomial m;
    m.r.resize(static_cast<std::size_t>(n));
    m.s.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        m.r[static_cast<std::size_t>(i)] = static_cast<int>(rng.range(-rBound, rBound));
        m.s[static_cast<std::size_t>(i)] = static_cast<int>(rng.range(0, sBound));
    }
    return m;
}

} // namespace verma
} // namespace vlkb
