#include "vlkb/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vlkb {

void Expo::checkSize(int n) {
    if (n < 0 || n > kMaxVars) throw std::invalid_argument("Expo: too many variables");
}

Expo expoAdd(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (int i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Expo expoSub(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (int i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Poly::Poly(int nvars, const Rat& c) : nvars_(nvars) {
    if (c != 0) terms_.emplace(Expo(nvars, 0), c);
}

Poly Poly::monomial(int nvars, const Expo& e, const Rat& c) {
    Poly p(nvars);
    p.addTerm(e, c);
    return p;
}

Poly Poly::variable(int nvars, int var, int power) {
    Expo e(nvars);
    e[var] = power;
    return monomial(nvars, e, 1);
}

bool Poly::isOne() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 && isConstant();
}

bool Poly::isConstant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expo& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat Poly::constantValue() const {
    if (terms_.empty()) return Rat(0);
    if (!isConstant()) throw std::domain_error("Poly::constantValue: not constant");
    return terms_.begin()->second;
}

void Poly::addTerm(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) addTerm(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) addTerm(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.nvars_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.addTerm(expoAdd(ea, eb), ca * cb);
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::shifted(const Expo& e) const {
    Poly r(nvars_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(expoAdd(t, e), c);
    return r;
}

const std::pair<const Expo, Rat>& Poly::leading() const {
    if (terms_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
    return *terms_.rbegin();
}

Expo Poly::minExponents() const {
    Expo m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) { m = e; first = false; continue; }
        for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
}

int Poly::degreeIn(int var) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) { d = e[var]; first = false; continue; }
        d = std::max(d, e[var]);
    }
    return d;
}

int Poly::lowDegreeIn(int var) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) { d = e[var]; first = false; continue; }
        d = std::min(d, e[var]);
    }
    return d;
}

Rat Poly::content() const {
    if (terms_.empty()) return Rat(0);
    Int num = 0, den = 1;
    for (const auto& [e, c] : terms_) {
        Int cn = c.get_num(), cd = c.get_den();
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), cn.get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), cd.get_mpz_t());
    }
    Rat r(num, den);
    r.canonicalize();
    if (leading().second < 0) r = -r;
    return r;
}

Poly Poly::primitivePart() const {
    if (terms_.empty()) return *this;
    Rat c = content();
    return scaled(Rat(1) / c);
}

Rat Poly::evaluate(const std::vector<Rat>& values) const {
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            Rat base = values[i];
            int p = e[i];
            if (p < 0) {
                if (base == 0) throw std::domain_error("Poly::evaluate: zero in a negative power");
                base = Rat(1) / base;
                p = -p;
            }
            Rat pw = 1;
            for (int k = 0; k < p; ++k) pw *= base;
            t *= pw;
        }
        acc += t;
    }
    return acc;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending lexicographic order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool hasVars = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        bool coefShown = (a != 1) || !hasVars;
        if (coefShown) out << a.get_str();
        bool firstVar = true;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (coefShown || !firstVar) out << "*";
            firstVar = false;
            out << names[i];
            if (e[i] != 1) out << "^" << e[i];
        }
    }
    return out.str();
}

namespace {

// Dense univariate view of a polynomial in `var`, coefficients are
// polynomials in the remaining variables.
std::vector<Poly> uniView(const Poly& p, int var) {
    int deg = p.isZero() ? 0 : p.degreeIn(var);
    std::vector<Poly> cs(static_cast<std::size_t>(deg) + 1, Poly(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        Expo r = e;
        int d = r[var];
        r[var] = 0;
        cs[static_cast<std::size_t>(d)].addTerm(r, c);
    }
    while (cs.size() > 1 && cs.back().isZero()) cs.pop_back();
    return cs;
}

Poly uniCollapse(const std::vector<Poly>& cs, int var, int nvars) {
    Poly r(nvars);
    for (std::size_t d = 0; d < cs.size(); ++d) {
        for (const auto& [e, c] : cs[d].terms()) {
            Expo t = e;
            t[var] += static_cast<int>(d);
            r.addTerm(t, c);
        }
    }
    return r;
}

int uniDeg(const std::vector<Poly>& a) { return static_cast<int>(a.size()) - 1; }

bool uniIsZero(const std::vector<Poly>& a) {
    return a.size() == 1 && a[0].isZero();
}

void uniTrim(std::vector<Poly>& a) {
    while (a.size() > 1 && a.back().isZero()) a.pop_back();
}

// Pseudo-remainder of a by b in one variable: a power of lc(b) times a, mod b.
std::vector<Poly> uniPrem(std::vector<Poly> a, const std::vector<Poly>& b) {
    int db = uniDeg(b);
    const Poly& lcb = b.back();
    while (!uniIsZero(a) && uniDeg(a) >= db) {
        int d = uniDeg(a) - db;
        Poly lca = a.back();
        for (auto& c : a) c = c * lcb;
        for (int k = 0; k <= db; ++k)
            a[static_cast<std::size_t>(k + d)] -= lca * b[static_cast<std::size_t>(k)];
        uniTrim(a);
    }
    return a;
}

// gcd of the coefficient list (content w.r.t. the chosen variable).
Poly uniContent(const std::vector<Poly>& a) {
    Poly g(a[0].nvars());
    for (const auto& c : a) g = polyGcd(g, c);
    return g;
}

} // namespace

Poly polyDivExact(const Poly& a, const Poly& b) {
    if (b.isZero()) throw std::domain_error("polyDivExact: division by zero");
    Poly q(a.nvars());
    Poly r = a;
    const auto& [eb, cb] = b.leading();
    while (!r.isZero()) {
        const auto& [er, cr] = r.leading();
        Expo et = expoSub(er, eb);
        if (std::any_of(et.begin(), et.end(), [](int x) { return x < 0; }))
            throw std::domain_error("polyDivExact: not divisible");
        Poly t = Poly::monomial(a.nvars(), et, cr / cb);
        q += t;
        r -= t * b;
    }
    return q;
}

Poly polyGcd(const Poly& a, const Poly& b) {
    if (a.isZero()) return b.isZero() ? b : b.primitivePart();
    if (b.isZero()) return a.primitivePart();
    if (a.isConstant() || b.isConstant()) return Poly(a.nvars(), 1);

    // Main variable: the first one that actually occurs.
    int var = -1;
    for (int i = 0; i < a.nvars() && var < 0; ++i)
        if (a.degreeIn(i) > 0 || b.degreeIn(i) > 0) var = i;
    if (var < 0) return Poly(a.nvars(), 1);

    auto ua = uniView(a, var);
    auto ub = uniView(b, var);
    if (uniDeg(ua) < uniDeg(ub)) std::swap(ua, ub);

    Poly ca = uniContent(ua), cb = uniContent(ub);
    Poly cont = polyGcd(ca, cb);
    for (auto& c : ua) c = polyDivExact(c, ca);
    for (auto& c : ub) c = polyDivExact(c, cb);

    // Primitive PRS; invariant: deg ua >= deg ub.
    while (!uniIsZero(ub)) {
        if (uniDeg(ub) == 0) {
            ua = {Poly(a.nvars(), 1)};
            break;
        }
        auto r = uniPrem(ua, ub);
        if (!uniIsZero(r)) {
            Poly rc = uniContent(r);
            for (auto& c : r) c = polyDivExact(c, rc);
        }
        ua = std::move(ub);
        ub = std::move(r);
    }

    Poly g = uniCollapse(ua, var, a.nvars()) * cont;
    return g.primitivePart();
}

} // namespace vlkb
