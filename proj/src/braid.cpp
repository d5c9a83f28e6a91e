#include "vlkb/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vlkb {
namespace braid {

BraidWord parseWord(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("parseWord: need n >= 1");
    BraidWord w;
    w.n = n;
    std::size_t pos = 0;
    auto skipWs = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto readInt = [&](const char* what) {
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError(std::string("expected ") + what, pos);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) throw ParseError("index too large", pos);
            ++pos;
        }
        return neg ? -v : v;
    };
    while (true) {
        skipWs();
        if (pos >= text.size()) break;
        long letter;
        if (text[pos] == 's' || text[pos] == 'S') {
            ++pos;
            long idx = readInt("generator index");
            if (idx < 1) throw ParseError("generator index must be positive", pos);
            letter = idx;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                long e = readInt("exponent");
                if (e == -1) letter = -idx;
                else if (e != 1) throw ParseError("only exponents 1 and -1 are allowed", pos);
            }
        } else if (text[pos] == '-' || text[pos] == '+' ||
                   std::isdigit(static_cast<unsigned char>(text[pos]))) {
            letter = readInt("signed generator index");
            if (letter == 0) throw ParseError("generator index 0 is invalid", pos);
        } else {
            throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
        }
        long idx = letter < 0 ? -letter : letter;
        if (idx > n - 1) throw ParseError("generator index exceeds n-1", pos);
        w.letters.push_back(static_cast<int>(letter));
    }
    return w;
}

std::string printWord(const BraidWord& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out << " ";
        int letter = w.letters[i];
        out << "s" << std::abs(letter);
        if (letter < 0) out << "^-1";
    }
    return out.str();
}

BraidWord inverseWord(const BraidWord& w) {
    BraidWord r;
    r.n = w.n;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

BraidWord concatWords(const BraidWord& a, const BraidWord& b) {
    if (a.n != b.n) throw std::invalid_argument("concatWords: strand counts differ");
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

std::vector<int> wordPermutation(const BraidWord& w) {
    std::vector<int> perm(static_cast<std::size_t>(w.n));
    std::iota(perm.begin(), perm.end(), 0);
    // perm[p] = current position of the strand that started at p
    for (int letter : w.letters) {
        int i = std::abs(letter) - 1;
        for (auto& p : perm) {
            if (p == i) p = i + 1;
            else if (p == i + 1) p = i;
        }
    }
    return perm;
}

int Partition::n() const {
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.size());
    return total;
}

void Partition::canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

Partition Partition::finest(int n) {
    Partition p;
    for (int i = 1; i <= n; ++i) p.blocks.push_back({i});
    return p;
}

Partition Partition::coarsest(int n) {
    Partition p;
    p.blocks.emplace_back();
    for (int i = 1; i <= n; ++i) p.blocks.back().push_back(i);
    return p;
}

Partition Partition::fromColors(const std::vector<int>& colors) {
    std::map<int, std::vector<int>> byColor;
    for (std::size_t i = 0; i < colors.size(); ++i)
        byColor[colors[i]].push_back(static_cast<int>(i) + 1);
    Partition p;
    for (auto& [c, b] : byColor) p.blocks.push_back(std::move(b));
    p.canonicalize();
    return p;
}

Partition Partition::parse(const std::string& text, int n) {
    Partition p;
    std::size_t pos = 0;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '[') throw ParseError("expected '['", pos);
        ++pos;
        std::vector<int> block;
        while (true) {
            while (pos < text.size() &&
                   (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
                ++pos;
            if (pos < text.size() && text[pos] == ']') { ++pos; break; }
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected strand label", pos);
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                v = v * 10 + (text[pos++] - '0');
            if (v < 1 || v > n) throw ParseError("strand label out of range", pos);
            if (seen[static_cast<std::size_t>(v)]) throw ParseError("repeated strand label", pos);
            seen[static_cast<std::size_t>(v)] = true;
            block.push_back(v);
        }
        if (block.empty()) throw ParseError("empty block", pos);
        p.blocks.push_back(std::move(block));
    }
    for (int i = 1; i <= n; ++i)
        if (!seen[static_cast<std::size_t>(i)])
            throw ParseError("strand " + std::to_string(i) + " missing from partition", text.size());
    p.canonicalize();
    return p;
}

std::string Partition::str() const {
    std::ostringstream out;
    for (const auto& b : blocks) {
        out << "[";
        for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
        out << "]";
    }
    return out.str();
}

std::vector<int> Partition::blockOf() const {
    std::vector<int> owner(static_cast<std::size_t>(n()) + 1, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int x : blocks[b]) owner[static_cast<std::size_t>(x)] = static_cast<int>(b);
    return owner;
}

bool isPure(const BraidWord& w, const Partition& s) {
    if (s.n() != w.n) throw std::invalid_argument("isPure: partition size mismatch");
    auto perm = wordPermutation(w);
    auto owner = s.blockOf();
    for (int p = 0; p < w.n; ++p)
        if (owner[static_cast<std::size_t>(p + 1)] !=
            owner[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)] + 1)])
            return false;
    return true;
}

Partition finestPartition(const BraidWord& w) {
    auto perm = wordPermutation(w);
    std::vector<int> owner(static_cast<std::size_t>(w.n), -1);
    Partition p;
    for (int start = 0; start < w.n; ++start) {
        if (owner[static_cast<std::size_t>(start)] >= 0) continue;
        std::vector<int> orbit;
        int cur = start;
        while (owner[static_cast<std::size_t>(cur)] < 0) {
            owner[static_cast<std::size_t>(cur)] = static_cast<int>(p.blocks.size());
            orbit.push_back(cur + 1);
            cur = perm[static_cast<std::size_t>(cur)];
        }
        p.blocks.push_back(std::move(orbit));
    }
    p.canonicalize();
    return p;
}

std::vector<int> handlebodyColors(int g, int n) {
    if (g < 0 || n < 1) throw std::invalid_argument("handlebodyColors: need g >= 0, n >= 1");
    std::vector<int> colors;
    colors.reserve(static_cast<std::size_t>(g + n));
    for (int i = 0; i < g; ++i) colors.push_back(1);
    for (int i = 0; i < n; ++i) colors.push_back(g > 0 ? 2 : 1);
    return colors;
}

Partition handlebodyPartition(int g, int n) {
    Partition p;
    for (int i = 1; i <= g; ++i) p.blocks.push_back({i});
    std::vector<int> rest;
    for (int i = g + 1; i <= g + n; ++i) rest.push_back(i);
    p.blocks.push_back(std::move(rest));
    return p;
}

NumericCtx NumericCtx::fromSpecialization(const scalar::Specialization& sp) {
    if (sp.gs.mode != Mode::quantum)
        throw ModeError("NumericCtx: quantum specialization required");
    NumericCtx ctx;
    ctx.v = sp.values[0];
    ctx.u.assign(sp.values.begin() + 1, sp.values.end());
    return ctx;
}

Rat NumericCtx::vpow(long e) const {
    Rat r(1);
    Rat base = e >= 0 ? v : Rat(1) / v;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= base;
    return r;
}

Rat NumericCtx::upow(int color, long e) const {
    if (color < 1 || color > static_cast<int>(u.size()))
        throw std::invalid_argument("NumericCtx: color out of range");
    const Rat& uc = u[static_cast<std::size_t>(color - 1)];
    Rat r(1);
    Rat base = e >= 0 ? uc : Rat(1) / uc;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= base;
    return r;
}

Rat NumericCtx::qfact(long k) const {
    Rat r(1);
    for (long m = 2; m <= k; ++m) r *= qnumInt(m);
    return r;
}

template <class Ctx>
std::vector<std::tuple<int, int, typename Ctx::Scalar>>
rmatrixPair(const Ctx& ctx, int sign, int colorA, int colorB, int k, int l) {
    using K = typename Ctx::Scalar;
    if (sign != 1 && sign != -1) throw std::invalid_argument("rmatrixPair: sign must be +-1");
    if (k < 0 || l < 0) throw std::invalid_argument("rmatrixPair: negative index");
    std::vector<std::tuple<int, int, K>> out;
    if (sign == 1) {
        // s . qtilde . sum_t v^{t(t-1)/2} e^t (x) f^[t]
        for (int t = 0; t <= k; ++t) {
            K c = ctx.vpow(static_cast<long>(t) * (t - 1) / 2);
            for (int m = 0; m < t; ++m) c *= ctx.qnumInt(k - m);
            for (int m = 0; m < t; ++m) c *= ctx.clearedQnum(colorB, l + m);
            c = c / ctx.qfact(t);
            c *= ctx.upow(colorA, -(l + t));
            c *= ctx.upow(colorB, -(k - t));
            c *= ctx.vpow(2L * (k - t) * (l + t));
            if (!coefIsZero(c)) out.emplace_back(l + t, k - t, std::move(c));
        }
    } else {
        // sum_t (-1)^t v^{-t(t-1)/2} e^t (x) f^[t] . qtilde^{-1} . s
        for (int t = 0; t <= l; ++t) {
            K c = ctx.vpow(-(static_cast<long>(t) * (t - 1) / 2));
            if (t % 2 == 1) c = ctx.zero() - c;
            for (int m = 0; m < t; ++m) c *= ctx.qnumInt(l - m);
            for (int m = 0; m < t; ++m) c *= ctx.clearedQnum(colorA, k + m);
            c = c / ctx.qfact(t);
            c *= ctx.upow(colorB, k);
            c *= ctx.upow(colorA, l);
            c *= ctx.vpow(-2L * k * l);
            if (!coefIsZero(c)) out.emplace_back(l - t, k + t, std::move(c));
        }
    }
    return out;
}

template std::vector<std::tuple<int, int, FieldElement>>
rmatrixPair<SymbolicCtx>(const SymbolicCtx&, int, int, int, int, int);
template std::vector<std::tuple<int, int, Rat>>
rmatrixPair<NumericCtx>(const NumericCtx&, int, int, int, int, int);

TwoVec rmatrixStep(const SymbolicCtx& ctx, int sign, int colorA, int colorB, const TwoVec& vec) {
    TwoVec out;
    for (const auto& [kl, c] : vec.terms()) {
        for (auto& [k2, l2, w] : rmatrixPair(ctx, sign, colorA, colorB, kl.first, kl.second))
            out.add({k2, l2}, c * w);
    }
    return out;
}

template <class Ctx>
ColoredReadResult<Ctx> coloredRead(const Ctx& ctx, const BraidWord& w,
                                   const std::vector<int>& colors, int level) {
    using K = typename Ctx::Scalar;
    if (static_cast<int>(colors.size()) != w.n)
        throw std::invalid_argument("coloredRead: color count mismatch");
    auto slice = verma::tensorBasis(w.n, level);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < slice.size(); ++i) index[slice[i]] = static_cast<int>(i);

    ColoredReadResult<Ctx> res;
    res.sourceColors = colors;
    res.targetColors = colors;
    const K zero = ctx.zero();
    res.matrix.entries.assign(slice.size(), std::vector<K>(slice.size(), zero));

    for (std::size_t row = 0; row < slice.size(); ++row) {
        std::map<std::vector<int>, K> state;
        state.emplace(slice[row], ctx.one());
        std::vector<int> cur = colors;
        for (int letter : w.letters) {
            int p = std::abs(letter) - 1;
            int sign = letter > 0 ? 1 : -1;
            int ca = cur[static_cast<std::size_t>(p)];
            int cb = cur[static_cast<std::size_t>(p + 1)];
            std::map<std::vector<int>, K> next;
            for (const auto& [kvec, coef] : state) {
                for (auto& [a2, b2, wgt] :
                     rmatrixPair(ctx, sign, ca, cb, kvec[static_cast<std::size_t>(p)],
                                 kvec[static_cast<std::size_t>(p + 1)])) {
                    std::vector<int> tgt = kvec;
                    tgt[static_cast<std::size_t>(p)] = a2;
                    tgt[static_cast<std::size_t>(p + 1)] = b2;
                    K add = coef * wgt;
                    if (coefIsZero(add)) continue;
                    auto [it, fresh] = next.emplace(std::move(tgt), add);
                    if (!fresh) {
                        it->second += add;
                        if (coefIsZero(it->second)) next.erase(it);
                    }
                }
            }
            state = std::move(next);
            std::swap(cur[static_cast<std::size_t>(p)], cur[static_cast<std::size_t>(p + 1)]);
        }
        if (row == 0) res.targetColors = cur;
        for (const auto& [kvec, coef] : state)
            res.matrix.entries[row][static_cast<std::size_t>(index.at(kvec))] = coef;
    }
    return res;
}

template ColoredReadResult<SymbolicCtx> coloredRead<SymbolicCtx>(const SymbolicCtx&,
                                                                 const BraidWord&,
                                                                 const std::vector<int>&, int);
template ColoredReadResult<NumericCtx> coloredRead<NumericCtx>(const NumericCtx&,
                                                               const BraidWord&,
                                                               const std::vector<int>&, int);

} // namespace braid
} // namespace vlkb
