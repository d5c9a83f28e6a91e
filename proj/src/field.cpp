#include "vlkb/field.hpp"

#include <algorithm>
#include <cctype>

namespace vlkb {

FieldElement::FieldElement(const GeneratorSet& gs, const Rat& c)
    : gs_(gs), num_(gs.nvars(), c), den_(gs.nvars(), 1) {
    canonicalize();
}

FieldElement::FieldElement(const GeneratorSet& gs, Poly num, Poly den)
    : gs_(gs), num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero()) throw std::domain_error("FieldElement: zero denominator");
    canonicalize();
}

FieldElement FieldElement::genPow(const GeneratorSet& gs, int var, long power) {
    if (var < 0 || var >= gs.nvars()) throw std::invalid_argument("genPow: bad variable");
    if (power >= 0 || gs.invertible(var))
        return FieldElement(gs, Poly::variable(gs.nvars(), var, static_cast<int>(power)),
                            Poly(gs.nvars(), 1));
    return FieldElement(gs, Poly(gs.nvars(), 1),
                        Poly::variable(gs.nvars(), var, static_cast<int>(-power)));
}

bool FieldElement::isOne() const {
    return den_.isConstant() && den_.constantValue() == 1 && num_.isConstant() &&
           num_.constantValue() == 1;
}

Rat FieldElement::constantValue() const {
    return num_.constantValue() / den_.constantValue();
}

void FieldElement::canonicalize() {
    if (num_.isZero()) {
        den_ = Poly(gs_.nvars(), 1);
        return;
    }
    if (den_.isOne()) {
        bool integral = true;
        for (const auto& [e, c] : num_.terms())
            if (c.get_den() != 1) { integral = false; break; }
        if (integral) return;
    }
    // Pull the denominator's Laurent monomial content out (invertible
    // variables only), then strip the numerator's.
    Expo dmin = den_.minExponents();
    Expo shift(gs_.nvars(), 0);
    bool any = false;
    for (int i = 0; i < gs_.nvars(); ++i)
        if (gs_.invertible(i) && dmin[i] != 0) { shift[i] = -dmin[i]; any = true; }
    if (any) {
        num_ = num_.shifted(shift);
        den_ = den_.shifted(shift);
    }
    Expo gamma(gs_.nvars(), 0);
    Expo nmin = num_.minExponents();
    any = false;
    for (int i = 0; i < gs_.nvars(); ++i)
        if (gs_.invertible(i) && nmin[i] != 0) { gamma[i] = nmin[i]; any = true; }
    Poly p = num_;
    if (any) {
        Expo neg(gs_.nvars(), 0);
        for (int i = 0; i < gs_.nvars(); ++i) neg[i] = -gamma[i];
        p = p.shifted(neg);
    }

    Poly g = polyGcd(p, den_);
    if (!(g.isConstant() && g.constantValue() == 1)) {
        p = polyDivExact(p, g);
        den_ = polyDivExact(den_, g);
    }

    // Integer normalization: denominator positive-leading, coprime contents.
    Rat cp = p.content();
    Rat cd = den_.content();
    Rat s = cp / cd; // the fraction's scalar content, sign included
    p = p.scaled(Rat(1) / cp);
    den_ = den_.scaled(Rat(1) / cd);
    num_ = p.scaled(Rat(s.get_num())).shifted(gamma);
    den_ = den_.scaled(Rat(s.get_den()));
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    if (den_.isOne() && o.den_.isOne()) {
        num_ += o.num_;
        canonicalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    if (den_.isOne() && o.den_.isOne()) {
        num_ -= o.num_;
        canonicalize();
        return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    num_ = num_ * o.num_;
    if (!(den_.isOne() && o.den_.isOne())) den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    if (o.isZero()) throw std::domain_error("FieldElement: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    canonicalize();
    return *this;
}

FieldElement FieldElement::inverse() const {
    if (isZero()) throw std::domain_error("FieldElement: inverse of zero");
    return FieldElement(gs_, den_, num_);
}

FieldElement FieldElement::pow(long k) const {
    if (k == 0) return one(gs_);
    FieldElement base = k > 0 ? *this : inverse();
    long e = k > 0 ? k : -k;
    FieldElement r = one(gs_);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool FieldElement::operator<(const FieldElement& o) const {
    if (num_.terms() != o.num_.terms()) return num_.terms() < o.num_.terms();
    return den_.terms() < o.den_.terms();
}

std::string FieldElement::str() const {
    std::vector<std::string> names;
    for (int i = 0; i < gs_.nvars(); ++i) names.push_back(gs_.varName(i));
    if (den_.isConstant() && den_.constantValue() == 1) return num_.str(names);
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

namespace {

struct Parser {
    const GeneratorSet& gs;
    const std::string& s;
    std::size_t pos = 0;

    Parser(const GeneratorSet& g, const std::string& t) : gs(g), s(t) {}

    void skipWs() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skipWs();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skipWs();
        return pos < s.size() ? s[pos] : '\0';
    }

    FieldElement parseExpr() {
        FieldElement acc = parseTerm();
        while (true) {
            char c = peek();
            if (c == '+') { ++pos; acc += parseTerm(); }
            else if (c == '-') { ++pos; acc -= parseTerm(); }
            else break;
        }
        return acc;
    }

    FieldElement parseTerm() {
        FieldElement acc = parseFactor();
        while (true) {
            char c = peek();
            if (c == '*') { ++pos; acc *= parseFactor(); }
            else if (c == '/') { ++pos; acc /= parseFactor(); }
            else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
                acc *= parseFactor(); // juxtaposition
            } else break;
        }
        return acc;
    }

    FieldElement parseFactor() {
        skipWs();
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (s[pos] == '-') neg = !neg;
            ++pos;
        }
        FieldElement base = parseAtom();
        if (peek() == '^') {
            ++pos;
            long e = parseSignedInt();
            base = base.pow(e);
        }
        return neg ? -base : base;
    }

    long parseSignedInt() {
        skipWs();
        bool neg = eat('-');
        skipWs();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected integer exponent", pos);
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) throw ParseError("exponent too large", pos);
            ++pos;
        }
        return neg ? -v : v;
    }

    FieldElement parseAtom() {
        skipWs();
        if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            FieldElement e = parseExpr();
            if (!eat(')')) throw ParseError("expected ')'", pos);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            Int v(s.substr(start, pos - start));
            return FieldElement(gs, Rat(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            ++pos;
            while (pos < s.size() &&
                   std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string name = s.substr(start, pos - start);
            int var = gs.varIndex(name);
            if (var < 0) throw ParseError("unknown generator '" + name + "'", start);
            return FieldElement::genPow(gs, var, 1);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
};

} // namespace

FieldElement FieldElement::parse(const GeneratorSet& gs, const std::string& text) {
    Parser p(gs, text);
    FieldElement e = p.parseExpr();
    p.skipWs();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    return e;
}

} // namespace vlkb
