#include "vlkb/gtbasis.hpp"

#include "vlkb/qgroup.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace vlkb {
namespace gtbasis {

namespace {

void requireClassical(const GeneratorSet& gs, const char* what) {
    if (gs.mode != Mode::classical)
        throw ModeError(std::string(what) + ": classical mode required");
}

FieldElement affine(const GeneratorSet& gs, int lambdaIndex, long offset) {
    return scalar::lambdaVar(gs, lambdaIndex) + FieldElement::fromInt(gs, offset);
}

} // namespace

int DetMonomial::blockC() const {
    int c = 0;
    for (int x : l) c += x;
    return c;
}

int DetMonomial::blockB() const {
    int b = blockC();
    for (int x : r) b += x;
    return b;
}

std::vector<int> DetMonomial::multidegree() const {
    std::vector<int> w(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        int li = i + 1 <= l.size() ? l[i] : 0;      // l_i
        int lim = i >= 1 ? l[i - 1] : 0;            // l_{i-1}
        w[i] = r[i] + lim + li;
    }
    return w;
}

std::string DetMonomial::str() const {
    std::ostringstream out;
    out << "X[";
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << "]a[";
    for (std::size_t i = 0; i < l.size(); ++i) out << (i ? "," : "") << l[i];
    out << "]";
    return out.str();
}

verma::Vec expandDetPair(const GeneratorSet& gs, int n, int a, int b) {
    requireClassical(gs, "expandDetPair");
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw std::invalid_argument("expandDetPair: bad index pair");
    verma::Vec out;
    verma::Monomial m1 = verma::Monomial::vacuum(n); // X_a Y_b
    ++m1.r[a - 1];
    ++m1.s[b - 1];
    out.add(m1, FieldElement::one(gs));
    verma::Monomial m2 = verma::Monomial::vacuum(n); // -X_b Y_a
    ++m2.r[b - 1];
    ++m2.s[a - 1];
    out.add(m2, FieldElement::fromInt(gs, -1));
    return out;
}

verma::Vec mulVec(const verma::Vec& a, const verma::Vec& b) {
    verma::Vec out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            verma::Monomial m = ma;
            for (std::size_t i = 0; i < m.r.size(); ++i) {
                m.r[i] += mb.r[i];
                m.s[i] += mb.s[i];
            }
            out.add(m, ca * cb);
        }
    return out;
}

verma::Vec expandDet(const GeneratorSet& gs, const DetMonomial& m) {
    requireClassical(gs, "expandDet");
    const int n = m.n();
    verma::Monomial base = verma::Monomial::vacuum(n);
    base.r = m.r;
    verma::Vec acc;
    acc.add(base, FieldElement::one(gs));
    for (int i = 1; i < n; ++i) {
        verma::Vec a = expandDetPair(gs, n, i, i + 1);
        for (int rep = 0; rep < m.l[static_cast<std::size_t>(i - 1)]; ++rep)
            acc = mulVec(acc, a);
    }
    return acc;
}

namespace {

// Adjacent and diagonal action within the determinant family.
DetVec actEijDetNear(const GeneratorSet& gs, int i, int j, const DetMonomial& m) {
    const int n = m.n();
    DetVec out;
    auto lAt = [&](int idx) { return idx >= 1 && idx <= n - 1 ? m.l[idx - 1] : 0; };
    if (i == j) {
        // (lambda_i + r_i + l_{i-1} + l_i) diagonal
        FieldElement c = affine(gs, i, m.r[i - 1] + lAt(i - 1) + lAt(i));
        out.add(m, c);
        return out;
    }
    if (j == i + 1) {
        // raising: (lambda_{i+1} + r_{i+1} + l_{i+1}) at r + alpha_i,
        // plus l_{i+1} at (r - alpha_{i+1}, l + alpha_i)
        {
            FieldElement c = affine(gs, i + 1, m.r[i] + lAt(i + 1));
            DetMonomial tgt = m;
            ++tgt.r[i - 1];
            --tgt.r[i];
            out.add(tgt, c);
        }
        if (lAt(i + 1) > 0) {
            DetMonomial tgt = m;
            --tgt.r[i];
            ++tgt.r[i + 1];
            ++tgt.l[i - 1];
            --tgt.l[i];
            out.add(tgt, FieldElement::fromInt(gs, lAt(i + 1)));
        }
        return out;
    }
    if (i == j + 1) {
        // lowering with i the larger index: act by e_{(j+1)j}
        int k = j; // formulas below in terms of k, k+1 = i
        {
            FieldElement c = affine(gs, k, m.r[k - 1] + lAt(k - 1));
            DetMonomial tgt = m;
            --tgt.r[k - 1];
            ++tgt.r[k];
            out.add(tgt, c);
        }
        if (lAt(k - 1) > 0) {
            DetMonomial tgt = m;
            ++tgt.r[k - 2];
            --tgt.r[k - 1];
            --tgt.l[k - 2];
            ++tgt.l[k - 1];
            out.add(tgt, FieldElement::fromInt(gs, lAt(k - 1)));
        }
        return out;
    }
    throw std::invalid_argument("actEijDetNear: |i-j| > 1");
}

DetVec actEijDetVec(const GeneratorSet& gs, int i, int j, const DetVec& v);

DetVec actEijDetMono(const GeneratorSet& gs, int i, int j, const DetMonomial& m) {
    if (std::abs(i - j) <= 1) return actEijDetNear(gs, i, j, m);
    DetVec single;
    single.add(m, FieldElement::one(gs));
    // e_{ij} = [e_{ik}, e_{kj}] with k adjacent to j.
    int k = i < j ? j - 1 : j + 1;
    DetVec t1 = actEijDetVec(gs, i, k, actEijDetVec(gs, k, j, single));
    DetVec t2 = actEijDetVec(gs, k, j, actEijDetVec(gs, i, k, single));
    t1 -= t2;
    return t1;
}

DetVec actEijDetVec(const GeneratorSet& gs, int i, int j, const DetVec& v) {
    DetVec out;
    for (const auto& [m, c] : v.terms()) out.addScaled(c, actEijDetMono(gs, i, j, m));
    return out;
}

} // namespace

DetVec actEijDet(const GeneratorSet& gs, int i, int j, const DetMonomial& m) {
    requireClassical(gs, "actEijDet");
    const int n = m.n();
    if (i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("actEijDet: index out of range");
    return actEijDetMono(gs, i, j, m);
}

DetVec actEijDet(const GeneratorSet& gs, int i, int j, const DetVec& v) {
    requireClassical(gs, "actEijDet");
    return actEijDetVec(gs, i, j, v);
}

bool GTPattern::valid() const {
    if (static_cast<int>(c.size()) != n || static_cast<int>(r.size()) != n) return false;
    if (n < 1) return false;
    if (c[0] != 0) return false;
    for (int i = 0; i + 1 < n; ++i)
        if (c[i + 1] < c[i]) return false;
    return true;
}

std::vector<int> GTPattern::d() const {
    std::vector<int> out(n >= 1 ? n - 1 : 0);
    for (int i = 0; i + 1 < n; ++i) out[i] = c[i + 1] - c[i];
    return out;
}

std::vector<int> GTPattern::multidegree() const {
    std::vector<int> dd = d();
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) {
        int di = i < n - 1 ? dd[i] : 0;
        int dim = i >= 1 ? dd[i - 1] : 0;
        w[i] = r[i] + dim + di;
    }
    return w;
}

std::string GTPattern::str() const {
    std::ostringstream out;
    out << "GT{n=" << n << "; c=[";
    for (int i = 0; i < n; ++i) out << (i ? "," : "") << c[i];
    out << "]; r=[";
    for (int i = 0; i < n; ++i) out << (i ? "," : "") << r[i];
    out << "]}";
    return out.str();
}

namespace {

std::vector<int> parseIntList(const std::string& s, std::size_t& pos) {
    std::vector<int> out;
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size() || s[pos] != '[') throw ParseError("expected '['", pos);
    ++pos;
    while (true) {
        while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == ','))
            ++pos;
        if (pos < s.size() && s[pos] == ']') { ++pos; break; }
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) { neg = s[pos] == '-'; ++pos; }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected integer", pos);
        int v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        out.push_back(neg ? -v : v);
    }
    return out;
}

} // namespace

GTPattern GTPattern::parse(const std::string& text) {
    std::size_t pos = text.find("GT{");
    if (pos == std::string::npos) throw ParseError("expected GT{...}", 0);
    pos += 3;
    auto expect = [&](const std::string& token) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (text.compare(pos, token.size(), token) != 0)
            throw ParseError("expected '" + token + "'", pos);
        pos += token.size();
    };
    expect("n=");
    int n = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        n = n * 10 + (text[pos++] - '0');
    expect(";");
    expect("c=");
    std::vector<int> c = parseIntList(text, pos);
    expect(";");
    expect("r=");
    std::vector<int> r = parseIntList(text, pos);
    expect("}");
    GTPattern p{n, std::move(c), std::move(r)};
    if (!p.valid()) throw std::invalid_argument("GTPattern::parse: invalid pattern");
    return p;
}

FieldElement patternX(const GeneratorSet& gs, const GTPattern& p, int k) {
    requireClassical(gs, "patternX");
    if (k < 1 || k > p.n) throw std::invalid_argument("patternX: k out of range");
    FieldElement x = FieldElement::zero(gs);
    for (int i = 1; i <= k; ++i) x += affine(gs, i, p.r[i - 1]);
    int cIdx = std::min(k, p.n - 1); // c_{k+1}, or c_n at the top
    x += FieldElement::fromInt(gs, p.c[cIdx]);
    return x;
}

DetVec gtVector(const GeneratorSet& gs, const GTPattern& p) {
    requireClassical(gs, "gtVector");
    if (!p.valid()) throw std::invalid_argument("gtVector: invalid pattern");
    const int n = p.n;
    std::vector<int> dd = p.d();
    auto dAt = [&](int i) { return i >= 1 && i <= n - 1 ? dd[i - 1] : 0; };

    DetVec out;
    // j has free entries j_1..j_{n-2}; j_0 = j_{n-1} = j_n = 0.
    std::vector<long> j(static_cast<std::size_t>(std::max(n + 1, 2)), 0);
    auto emit = [&]() {
        Int bin = 1;
        for (int i = 1; i <= n - 2; ++i) {
            long top = dAt(i + 1) + (i + 1 <= n - 2 ? j[static_cast<std::size_t>(i + 1)] : 0);
            bin *= scalar::binom(top, j[static_cast<std::size_t>(i)]);
            if (bin == 0) return;
        }
        FieldElement coef(gs, Rat(bin));
        for (int i = 1; i <= n - 1; ++i) {
            FieldElement base = FieldElement::fromInt(gs, -j[static_cast<std::size_t>(i)] + 1);
            for (int t = 1; t <= i; ++t) base += affine(gs, t, p.r[t - 1]);
            long len = dAt(i) + j[static_cast<std::size_t>(i)] - j[static_cast<std::size_t>(i - 1)];
            coef *= scalar::pochhammer(base, len);
        }
        if (coef.isZero()) return;
        DetMonomial tgt;
        tgt.r.resize(static_cast<std::size_t>(n));
        tgt.l.resize(static_cast<std::size_t>(n - 1));
        for (int i = 1; i <= n; ++i) {
            long ji = i <= n - 2 ? j[static_cast<std::size_t>(i)] : 0;
            long jim2 = i - 2 >= 1 && i - 2 <= n - 2 ? j[static_cast<std::size_t>(i - 2)] : 0;
            tgt.r[static_cast<std::size_t>(i - 1)] = p.r[i - 1] - static_cast<int>(ji - jim2);
        }
        for (int i = 1; i <= n - 1; ++i) {
            long ji = i <= n - 2 ? j[static_cast<std::size_t>(i)] : 0;
            long jim1 = i - 1 >= 1 && i - 1 <= n - 2 ? j[static_cast<std::size_t>(i - 1)] : 0;
            tgt.l[static_cast<std::size_t>(i - 1)] = dAt(i) + static_cast<int>(ji - jim1);
        }
        out.add(tgt, coef);
    };

    // Enumerate j_i in the support box: j_i <= d_{i+1} + j_{i+1}.
    auto rec = [&](auto&& self, int i) -> void {
        if (i == 0) { emit(); return; }
        long bound = dAt(i + 1) + (i + 1 <= n - 2 ? j[static_cast<std::size_t>(i + 1)] : 0);
        for (long t = 0; t <= bound; ++t) {
            j[static_cast<std::size_t>(i)] = t;
            self(self, i - 1);
        }
        j[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, n - 2);
    return out;
}

DetVec casimirApply(const GeneratorSet& gs, int k, const DetVec& v) {
    requireClassical(gs, "casimirApply");
    DetVec out;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            if (i == j) continue;
            out += actEijDetVec(gs, i, j, actEijDetVec(gs, j, i, v));
        }
    for (int i = 1; i <= k; ++i) out += actEijDetVec(gs, i, i, actEijDetVec(gs, i, i, v));
    return out;
}

DetVec casimirApplySplit(const GeneratorSet& gs, int k, const DetVec& v) {
    requireClassical(gs, "casimirApplySplit");
    DetVec z;
    for (int j = 1; j <= k; ++j)
        for (int i = j + 1; i <= k; ++i)
            z += actEijDetVec(gs, j, i, actEijDetVec(gs, i, j, v));
    DetVec h;
    for (int j = 1; j <= k; ++j)
        for (int i = j + 1; i <= k; ++i) {
            h += actEijDetVec(gs, i, i, v);
            h -= actEijDetVec(gs, j, j, v);
        }
    for (int i = 1; i <= k; ++i) h += actEijDetVec(gs, i, i, actEijDetVec(gs, i, i, v));
    DetVec out = z.scaled(FieldElement::fromInt(gs, 2));
    out += h;
    return out;
}

FieldElement casimirEigenvalueExpected(const GeneratorSet& gs, const GTPattern& p, int k) {
    requireClassical(gs, "casimirEigenvalueExpected");
    if (k < 1 || k > p.n) throw std::invalid_argument("casimir: k out of range");
    FieldElement xk = patternX(gs, p, k);
    FieldElement ck = FieldElement::fromInt(gs, p.c[k - 1]);
    FieldElement kk = FieldElement::fromInt(gs, k);
    FieldElement one = FieldElement::one(gs);
    FieldElement three = FieldElement::fromInt(gs, 3);
    return xk * (xk + kk - one) + ck * (ck + kk - three);
}

verma::Vec infbraidApply(const GeneratorSet& gs, int i, int j, const verma::Monomial& m) {
    requireClassical(gs, "infbraidApply");
    const int n = m.n();
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw std::invalid_argument("infbraidApply: bad index pair");
    int a = i - 1, b = j - 1;
    verma::Vec out;
    FieldElement xa = affine(gs, i, m.r[a]);
    FieldElement xb = affine(gs, j, m.r[b]);
    // X_i X_j d_{X_i} d_{X_j} + Y_i Y_j d_{Y_i} d_{Y_j}: diagonal
    out.add(m, xa * xb + FieldElement::fromInt(gs, static_cast<long>(m.s[a]) * m.s[b]));
    // X_i Y_j d_{Y_i} d_{X_j}
    if (m.s[a] > 0) {
        verma::Monomial tgt = m;
        ++tgt.r[a];
        --tgt.r[b];
        --tgt.s[a];
        ++tgt.s[b];
        out.add(tgt, xb * FieldElement::fromInt(gs, m.s[a]));
    }
    // Y_i X_j d_{X_i} d_{Y_j}
    if (m.s[b] > 0) {
        verma::Monomial tgt = m;
        --tgt.r[a];
        ++tgt.r[b];
        ++tgt.s[a];
        --tgt.s[b];
        out.add(tgt, xa * FieldElement::fromInt(gs, m.s[b]));
    }
    return out;
}

verma::Vec infbraidApply(const GeneratorSet& gs, int i, int j, const verma::Vec& v) {
    verma::Vec out;
    for (const auto& [m, c] : v.terms()) out.addScaled(c, infbraidApply(gs, i, j, m));
    return out;
}

Report infbraidRelationsCheck(const GeneratorSet& gs, int n, int samples, std::uint64_t seed) {
    requireClassical(gs, "infbraidRelationsCheck");
    Report rep;
    rep.title = "infinitesimal pure braid relations";
    rep.claim = "[w_ij, w_rs] = [w_ir + w_is, w_rs] = [w_ij, w_ir + w_jr] = 0 and "
                "e_ij e_ji = w_ij + e_ii";
    Rng rng(seed);
    auto w = [&](int i, int j, const verma::Vec& v) {
        return infbraidApply(gs, std::min(i, j), std::max(i, j), v);
    };
    auto sample = [&]() {
        verma::Vec v;
        v.add(verma::randomMonomial(n, rng, 2, 3), FieldElement::one(gs));
        return v;
    };
    auto commutes = [&](auto&& A, auto&& B) {
        for (int t = 0; t < samples; ++t) {
            verma::Vec m = sample();
            verma::Vec lhs = A(B(m));
            lhs -= B(A(m));
            if (!lhs.isZero()) return false;
        }
        return true;
    };

    int nPairChecks = 0, nLocal = 0;
    bool okPairs = true, okTriples = true;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int r = 1; r <= n; ++r)
                for (int s = r + 1; s <= n; ++s) {
                    if (i == r && j == s) continue;
                    bool disjoint = i != r && i != s && j != r && j != s;
                    if (!disjoint) continue;
                    ++nPairChecks;
                    okPairs = okPairs &&
                              commutes([&](const verma::Vec& v) { return w(i, j, v); },
                                       [&](const verma::Vec& v) { return w(r, s, v); });
                }
    rep.add("disjoint pairs: [w_ij, w_rs] = 0 (" + std::to_string(nPairChecks) + " index combos)",
            okPairs);

    for (int i = 1; i <= n; ++i)
        for (int r = 1; r <= n; ++r)
            for (int s = r + 1; s <= n; ++s) {
                if (i == r || i == s) continue;
                ++nLocal;
                okTriples = okTriples &&
                            commutes(
                                [&](const verma::Vec& v) {
                                    verma::Vec t = w(i, r, v);
                                    t += w(i, s, v);
                                    return t;
                                },
                                [&](const verma::Vec& v) { return w(r, s, v); });
            }
    rep.add("triples: [w_ir + w_is, w_rs] = 0 (" + std::to_string(nLocal) + " index combos)",
            okTriples);

    bool okTriples2 = true;
    int nLocal2 = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int r = 1; r <= n; ++r) {
                if (r == i || r == j) continue;
                ++nLocal2;
                okTriples2 = okTriples2 &&
                             commutes([&](const verma::Vec& v) { return w(i, j, v); },
                                      [&](const verma::Vec& v) {
                                          verma::Vec t = w(i, r, v);
                                          t += w(j, r, v);
                                          return t;
                                      });
            }
    rep.add("triples: [w_ij, w_ir + w_jr] = 0 (" + std::to_string(nLocal2) + " index combos)",
            okTriples2);

    bool okId = true;
    int nId = 0;
    for (int i = 1; i <= n && okId; ++i)
        for (int j = 1; j <= n && okId; ++j) {
            if (i == j) continue;
            ++nId;
            for (int t = 0; t < samples; ++t) {
                verma::Vec m = sample();
                verma::Vec lhs =
                    actGln(gs, qgroup::GlnGen::Eij(i, j), actGln(gs, qgroup::GlnGen::Eij(j, i), m));
                verma::Vec rhs = w(i, j, m);
                rhs += actGln(gs, qgroup::GlnGen::Eij(i, i), m);
                if (!(lhs == rhs)) { okId = false; break; }
            }
        }
    rep.add("e_ij e_ji = w_ij + e_ii (" + std::to_string(nId) + " index combos)", okId);
    return rep;
}

Report casimirCheck(const GeneratorSet& gs, int n, int cMax, int rBound, bool crossCheck) {
    requireClassical(gs, "casimirCheck");
    Report rep;
    rep.title = "Casimir eigenvalues on GT vectors";
    rep.claim = "C_k gt(p) = [x_k(x_k+k-1) + c_k(c_k+k-3)] gt(p), symbolically in lambda";

    // All nondecreasing chains 0 = c_1 <= ... <= c_n <= cMax.
    std::vector<std::vector<int>> chains;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    auto recC = [&](auto&& self, int idx) -> void {
        if (idx == n) { chains.push_back(cur); return; }
        for (int v = cur[static_cast<std::size_t>(idx - 1)]; v <= cMax; ++v) {
            cur[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1);
        }
    };
    if (n == 1) chains.push_back(cur);
    else recC(recC, 1);

    long patterns = 0, failures = 0;
    std::string firstBad;
    std::vector<int> r(static_cast<std::size_t>(n), -rBound);
    for (const auto& chain : chains) {
        while (true) {
            GTPattern p{n, chain, r};
            ++patterns;
            DetVec gt = gtVector(gs, p);
            bool bad = false;
            for (int k = 1; k <= n && !bad; ++k) {
                DetVec lhs = casimirApply(gs, k, gt);
                DetVec rhs = gt.scaled(casimirEigenvalueExpected(gs, p, k));
                if (!(lhs == rhs)) bad = true;
                if (!bad && crossCheck) {
                    DetVec split = casimirApplySplit(gs, k, gt);
                    if (!(split == rhs)) bad = true;
                }
            }
            if (bad) {
                ++failures;
                if (firstBad.empty()) firstBad = p.str();
            }
            // next r in the box
            int idx = 0;
            while (idx < n && r[static_cast<std::size_t>(idx)] == rBound) {
                r[static_cast<std::size_t>(idx)] = -rBound;
                ++idx;
            }
            if (idx == n) break;
            ++r[static_cast<std::size_t>(idx)];
        }
    }
    std::ostringstream detail;
    detail << patterns << " patterns, k = 1.." << n;
    if (failures) detail << ", first failure " << firstBad;
    rep.add("n=" + std::to_string(n) + " sweep (c_n <= " + std::to_string(cMax) +
                ", |r_i| <= " + std::to_string(rBound) + ")",
            failures == 0, detail.str());
    return rep;
}

std::vector<GTPattern> patternsForWeight(int n, int c, const std::vector<int>& w) {
    std::vector<GTPattern> out;
    // Chains with c_n = c; r is then forced by the multidegree.
    std::vector<int> chain(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == n) {
            if (chain[static_cast<std::size_t>(n - 1)] != c) return;
            GTPattern p;
            p.n = n;
            p.c = chain;
            p.r.resize(static_cast<std::size_t>(n));
            std::vector<int> dd(static_cast<std::size_t>(n - 1));
            for (int i = 0; i + 1 < n; ++i) dd[static_cast<std::size_t>(i)] =
                chain[static_cast<std::size_t>(i + 1)] - chain[static_cast<std::size_t>(i)];
            for (int i = 0; i < n; ++i) {
                int di = i < n - 1 ? dd[static_cast<std::size_t>(i)] : 0;
                int dim = i >= 1 ? dd[static_cast<std::size_t>(i - 1)] : 0;
                p.r[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] - dim - di;
            }
            out.push_back(std::move(p));
            return;
        }
        for (int v = chain[static_cast<std::size_t>(idx - 1)]; v <= c; ++v) {
            chain[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1);
        }
    };
    if (n == 1) {
        if (c == 0) out.push_back(GTPattern{1, {0}, {w[0]}});
        return out;
    }
    rec(rec, 1);
    return out;
}

std::vector<DetMonomial> detMonomialsForWeight(int n, int c, const std::vector<int>& w) {
    std::vector<DetMonomial> out;
    std::vector<int> l(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
    auto rec = [&](auto&& self, int idx, int rest) -> void {
        if (idx == n - 1) {
            if (rest != 0) return;
            DetMonomial m;
            m.l = l;
            m.r.resize(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                int li = i + 1 <= n - 1 ? l[static_cast<std::size_t>(i)] : 0;
                int lim = i >= 1 ? l[static_cast<std::size_t>(i - 1)] : 0;
                m.r[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] - lim - li;
            }
            out.push_back(std::move(m));
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            l[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, rest - v);
        }
    };
    if (n == 1) {
        if (c == 0) out.push_back(DetMonomial{{w[0]}, {}});
        return out;
    }
    rec(rec, 0, c);
    return out;
}

} // namespace gtbasis
} // namespace vlkb
