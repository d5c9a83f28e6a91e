#ifndef VLKB_SPARSEVEC_HPP
#define VLKB_SPARSEVEC_HPP

#include "vlkb/field.hpp"

#include <map>

namespace vlkb {

inline bool coefIsZero(const FieldElement& c) { return c.isZero(); }
inline bool coefIsZero(const Rat& c) { return c == 0; }

// Finite formal linear combination of basis keys; zero coefficients are
// never stored.
template <class Key, class Coef = FieldElement>
class SparseVec {
public:
    using Terms = std::map<Key, Coef>;

    SparseVec() = default;

    bool isZero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    void add(const Key& k, const Coef& c) {
        if (coefIsZero(c)) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (coefIsZero(it->second)) terms_.erase(it);
        }
    }

    Coef coeff(const Key& k, const Coef& zero) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? zero : it->second;
    }

    SparseVec& operator+=(const SparseVec& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    SparseVec& operator-=(const SparseVec& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend SparseVec operator+(SparseVec a, const SparseVec& b) { a += b; return a; }
    friend SparseVec operator-(SparseVec a, const SparseVec& b) { a -= b; return a; }

    SparseVec scaled(const Coef& c) const {
        SparseVec r;
        if (coefIsZero(c)) return r;
        for (const auto& [k, x] : terms_) {
            Coef y = x * c;
            if (!coefIsZero(y)) r.terms_.emplace(k, y);
        }
        return r;
    }

    void addScaled(const Coef& c, const SparseVec& o) {
        if (coefIsZero(c)) return;
        for (const auto& [k, x] : o.terms_) add(k, x * c);
    }

    bool operator==(const SparseVec& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

} // namespace vlkb

#endif
