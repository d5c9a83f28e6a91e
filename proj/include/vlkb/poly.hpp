#ifndef VLKB_POLY_HPP
#define VLKB_POLY_HPP

#include <gmpxx.h>

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace vlkb {

using Int = mpz_class;
using Rat = mpq_class;

// Exponent vector of one Laurent monomial; entry k is the exponent of
// variable k of the ambient GeneratorSet. Flat storage, at most kMaxVars
// variables.
class Expo {
public:
    static constexpr int kMaxVars = 10;

    Expo() = default;
    explicit Expo(int n) : n_(n) { checkSize(n); }
    Expo(int n, int fill) : n_(n) {
        checkSize(n);
        e_.fill(fill);
    }

    int size() const { return n_; }
    int& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
    const int& operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }

    auto begin() { return e_.begin(); }
    auto end() { return e_.begin() + n_; }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.begin() + n_; }

    auto operator<=>(const Expo&) const = default;

private:
    static void checkSize(int n);

    std::array<int, kMaxVars> e_{};
    int n_ = 0;
};

Expo expoAdd(const Expo& a, const Expo& b);
Expo expoSub(const Expo& a, const Expo& b);

// Sparse multivariate Laurent polynomial with rational coefficients.
// Terms are kept in lexicographic order on the exponent vector; the
// leading term is the lexicographically greatest monomial.
class Poly {
public:
    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}
    Poly(int nvars, const Rat& c);

    static Poly constant(int nvars, const Rat& c) { return Poly(nvars, c); }
    static Poly monomial(int nvars, const Expo& e, const Rat& c);
    static Poly variable(int nvars, int var, int power = 1);

    int nvars() const { return nvars_; }
    bool isZero() const { return terms_.empty(); }
    bool isOne() const;
    bool isConstant() const;
    // Constant term; polynomial must be constant.
    Rat constantValue() const;
    std::size_t termCount() const { return terms_.size(); }

    const std::map<Expo, Rat>& terms() const { return terms_; }

    void addTerm(const Expo& e, const Rat& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const Rat& c) const;
    Poly shifted(const Expo& e) const; // multiply by the monomial X^e

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // Lexicographically greatest term.
    const std::pair<const Expo, Rat>& leading() const;

    // Per-variable minimum exponent over all terms (0 for the zero polynomial).
    Expo minExponents() const;
    // Largest power of each variable dividing the polynomial, restricted to
    // nonnegative entries for variables where `laurent` is false.
    int degreeIn(int var) const;
    int lowDegreeIn(int var) const;

    // gcd of numerators / lcm of denominators, signed so the primitive part
    // has positive leading coefficient. Zero polynomial has content 0.
    Rat content() const;
    Poly primitivePart() const;

    Rat evaluate(const std::vector<Rat>& values) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    std::map<Expo, Rat> terms_;
};

// Exact division; throws std::domain_error if b does not divide a.
// Both operands must be ordinary polynomials (no negative exponents).
Poly polyDivExact(const Poly& a, const Poly& b);

// Primitive gcd with positive leading coefficient; gcd(0, b) = prim(b).
Poly polyGcd(const Poly& a, const Poly& b);

} // namespace vlkb

#endif
