#ifndef VLKB_FIELD_HPP
#define VLKB_FIELD_HPP

#include "vlkb/generators.hpp"
#include "vlkb/poly.hpp"

#include <stdexcept>
#include <string>

namespace vlkb {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

// An element of the rational-function field over a GeneratorSet, stored as a
// reduced fraction of integer-coefficient Laurent polynomials. The canonical
// form is unique, so equality is plain data comparison:
//   - the denominator is an ordinary polynomial (minimum exponent 0 in every
//     invertible variable) with content 1 scaled by a positive integer and
//     positive lexicographically-leading coefficient;
//   - numerator and denominator have coprime primitive parts and coprime
//     integer contents.
class FieldElement {
public:
    FieldElement() = default;
    explicit FieldElement(const GeneratorSet& gs)
        : gs_(gs), num_(gs.nvars()), den_(gs.nvars(), 1) {}
    FieldElement(const GeneratorSet& gs, const Rat& c);
    FieldElement(const GeneratorSet& gs, Poly num, Poly den);

    static FieldElement zero(const GeneratorSet& gs) { return FieldElement(gs); }
    static FieldElement one(const GeneratorSet& gs) { return FieldElement(gs, Rat(1)); }
    static FieldElement fromInt(const GeneratorSet& gs, long k) { return FieldElement(gs, Rat(k)); }
    // Generator var^power; negative powers of noninvertible generators land
    // in the denominator.
    static FieldElement genPow(const GeneratorSet& gs, int var, long power);

    const GeneratorSet& generators() const { return gs_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool isZero() const { return num_.isZero(); }
    bool isOne() const;
    bool isConstant() const { return num_.isConstant() && den_.isConstant(); }
    Rat constantValue() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { a += b; return a; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { a -= b; return a; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { a *= b; return a; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { a /= b; return a; }

    FieldElement inverse() const;
    FieldElement pow(long k) const;

    bool operator==(const FieldElement& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    // Arbitrary total order (for use as map key).
    bool operator<(const FieldElement& o) const;

    std::string str() const;
    static FieldElement parse(const GeneratorSet& gs, const std::string& text);

private:
    void canonicalize();

    GeneratorSet gs_;
    Poly num_, den_;
};

} // namespace vlkb

#endif
