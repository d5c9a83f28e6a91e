#include "vlkb/scalars.hpp"

#include <map>
#include <stdexcept>

namespace vlkb {
namespace scalar {

namespace {

void requireQuantum(const GeneratorSet& gs, const char* what) {
    if (gs.mode != Mode::quantum) throw ModeError(std::string(what) + ": quantum mode required");
}

void requireColor(const GeneratorSet& gs, int color) {
    if (color < 1 || color > gs.n) throw std::invalid_argument("color index out of range");
}

} // namespace

FieldElement vPow(const GeneratorSet& gs, long e) {
    requireQuantum(gs, "vPow");
    return FieldElement::genPow(gs, 0, e);
}

FieldElement uPow(const GeneratorSet& gs, int color, long e) {
    requireQuantum(gs, "uPow");
    requireColor(gs, color);
    return FieldElement::genPow(gs, color, e);
}

FieldElement vPowColorShift(const GeneratorSet& gs, int color, long shift) {
    return uPow(gs, color, 1) * vPow(gs, shift);
}

FieldElement qnum(const GeneratorSet& gs, long x) {
    requireQuantum(gs, "qnum");
    FieldElement num = vPow(gs, x) - vPow(gs, -x);
    FieldElement den = vPow(gs, 1) - vPow(gs, -1);
    return num / den;
}

FieldElement qnum(const GeneratorSet& gs, int color, long shift) {
    requireQuantum(gs, "qnum");
    requireColor(gs, color);
    FieldElement num =
        uPow(gs, color, 1) * vPow(gs, shift) - uPow(gs, color, -1) * vPow(gs, -shift);
    FieldElement den = vPow(gs, 1) - vPow(gs, -1);
    return num / den;
}

FieldElement qfact(const GeneratorSet& gs, long k) {
    if (k < 0) throw std::invalid_argument("qfact: negative argument");
    FieldElement r = FieldElement::one(gs);
    for (long m = 2; m <= k; ++m) r *= qnum(gs, m);
    return r;
}

std::pair<FieldElement, FieldElement> qfactQbinom(const GeneratorSet& gs, long k, long j) {
    requireQuantum(gs, "qfactQbinom");
    if (j < 0 || j > k) throw std::invalid_argument("qfactQbinom: need 0 <= j <= k");
    FieldElement fk = qfact(gs, k);
    FieldElement bin = fk / (qfact(gs, j) * qfact(gs, k - j));
    return {fk, bin};
}

FieldElement pochhammer(const FieldElement& base, long len) {
    if (len < 0) throw std::invalid_argument("pochhammer: negative length");
    const GeneratorSet& gs = base.generators();
    FieldElement r = FieldElement::one(gs);
    for (long m = 0; m < len; ++m) r *= base + FieldElement::fromInt(gs, m);
    return r;
}

FieldElement lambdaVar(const GeneratorSet& gs, int i) {
    if (gs.mode != Mode::classical) throw ModeError("lambdaVar: classical mode required");
    requireColor(gs, i);
    return FieldElement::genPow(gs, i - 1, 1);
}

Int binom(long a, long b) {
    if (b < 0 || b > a || a < 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

Int multinomial(const std::vector<long>& d, const std::vector<long>& s) {
    if (s.size() != d.size()) throw std::invalid_argument("multinomial: size mismatch");
    std::size_t nv = d.size();
    std::map<std::vector<long>, Int> poly;
    poly[std::vector<long>(nv, 0)] = 1;
    for (std::size_t i = 0; i < nv; ++i) {
        for (long rep = 0; rep < d[i]; ++rep) {
            std::map<std::vector<long>, Int> next;
            for (const auto& [e, c] : poly) {
                for (std::size_t k = 0; k <= i; ++k) {
                    std::vector<long> t = e;
                    ++t[k];
                    next[t] += c;
                }
            }
            poly = std::move(next);
        }
    }
    std::vector<long> key(s.begin(), s.end());
    auto it = poly.find(key);
    return it == poly.end() ? Int(0) : it->second;
}

Int multinomialProductForm(const std::vector<long>& d, const std::vector<long>& s) {
    if (s.size() != d.size()) throw std::invalid_argument("multinomial: size mismatch");
    std::size_t m = d.size();
    long sumD = 0, sumS = 0;
    for (std::size_t i = 0; i < m; ++i) { sumD += d[i]; sumS += s[i]; }
    if (sumD != sumS) return 0;
    // j_k = partial sums of s - d; j_m must close at zero.
    std::vector<long> j(m + 1, 0);
    for (std::size_t k = 1; k <= m; ++k) j[k] = j[k - 1] + (s[k - 1] - d[k - 1]);
    if (j[m] != 0) return 0;
    Int r = 1;
    for (std::size_t i = 1; i + 1 <= m; ++i) {
        // factor C(d_{i+1} + j_{i+1}, j_i); indices here are 1-based
        long top = d[i] + (i + 1 == m ? 0 : j[i + 1]);
        Int f = binom(top, j[i]);
        if (f == 0) return 0;
        r *= f;
    }
    return r;
}

Specialization Specialization::draw(const GeneratorSet& gs, std::uint64_t seed) {
    Specialization sp;
    sp.gs = gs;
    sp.seed = seed;
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x5851f42d4c957f2dULL);
    sp.values.resize(static_cast<std::size_t>(gs.nvars()));
    if (gs.mode == Mode::quantum) {
        static const std::pair<long, long> vTable[] = {{2, 1}, {3, 2}, {5, 3},
                                                       {7, 4}, {5, 2}, {8, 3}};
        auto [p, q] = vTable[rng.below(6)];
        sp.values[0] = Rat(p, q);
        for (int i = 1; i <= gs.n; ++i) {
            long num = rng.range(2, 97);
            long den = rng.range(2, 89);
            if (rng.below(2)) num = -num;
            Rat u(num, den);
            u.canonicalize();
            sp.values[static_cast<std::size_t>(i)] = u;
        }
    } else {
        for (int i = 0; i < gs.n; ++i) {
            long num = rng.range(1, 199);
            long den = rng.range(2, 97);
            if (rng.below(2)) num = -num;
            Rat u(num, den);
            u.canonicalize();
            if (u.get_den() == 1) u += Rat(1, 2);
            sp.values[static_cast<std::size_t>(i)] = u;
        }
    }
    return sp;
}

Rat specialize(const FieldElement& x, const Specialization& sp) {
    if (!(x.generators() == sp.gs))
        throw std::invalid_argument("specialize: generator set mismatch");
    Rat d = x.den().evaluate(sp.values);
    if (d == 0) throw SpecializationSingular("denominator vanishes under specialization");
    return x.num().evaluate(sp.values) / d;
}

namespace {

// x == v^j for some integer j? The draw table guarantees v > 1.
bool isPowerOfV(const Rat& x, const Rat& v) {
    if (x <= 0) return false;
    if (x >= 1) {
        Rat p(1);
        while (p <= x) {
            if (p == x) return true;
            p *= v;
        }
        return false;
    }
    Rat p(1);
    while (p >= x) {
        if (p == x) return true;
        p /= v;
    }
    return false;
}

bool isInteger(const Rat& x) { return x.get_den() == 1; }

} // namespace

bool isAdmissible(const Specialization& sp) {
    int n = sp.gs.n;
    if (n > 20) throw std::invalid_argument("isAdmissible: n too large");
    std::size_t full = (std::size_t{1} << n) - 1;
    // subsetOk[S]: the product (quantum) or sum (classical) over S avoids the
    // integral locus.
    std::vector<char> subsetOk(full + 1, 0);
    for (std::size_t S = 1; S <= full; ++S) {
        if (sp.gs.mode == Mode::quantum) {
            Rat prod(1);
            for (int i = 0; i < n; ++i)
                if (S & (std::size_t{1} << i)) prod *= sp.values[static_cast<std::size_t>(i + 1)];
            subsetOk[S] = !isPowerOfV(prod, sp.values[0]);
        } else {
            Rat sum(0);
            for (int i = 0; i < n; ++i)
                if (S & (std::size_t{1} << i)) sum += sp.values[static_cast<std::size_t>(i)];
            subsetOk[S] = !isInteger(sum);
        }
    }
    // reachable[S]: some ordering of S has all partial aggregates ok.
    std::vector<char> reachable(full + 1, 0);
    reachable[0] = 1;
    for (std::size_t S = 1; S <= full; ++S) {
        if (!subsetOk[S]) continue;
        for (int i = 0; i < n && !reachable[S]; ++i) {
            std::size_t bit = std::size_t{1} << i;
            if ((S & bit) && reachable[S ^ bit]) reachable[S] = 1;
        }
    }
    return reachable[full] != 0;
}

Specialization drawAdmissible(const GeneratorSet& gs, std::uint64_t seed, int maxRetries) {
    for (int t = 0; t <= maxRetries; ++t) {
        Specialization sp = Specialization::draw(gs, seed + static_cast<std::uint64_t>(t));
        if (isAdmissible(sp)) return sp;
    }
    throw SpecializationSingular("no admissible specialization within retry budget");
}

} // namespace scalar
} // namespace vlkb
