#pragma once

#include <map>
#include <string>
#include <vector>

#include "dimerlab/error.hpp"
#include "dimerlab/lattice.hpp"
#include "dimerlab/rational.hpp"

namespace dimerlab {

// Sparse bivariate Laurent polynomial over a coefficient ring K (exact
// rationals in the main pipeline, jets for derivative evaluations). Stored
// coefficients are never zero; keys are unique by construction of std::map.
template <class K>
class LaurentPolynomial {
public:
    using Terms = std::map<Vec2, K>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(long v) { add_term({0, 0}, K(v)); }

    static LaurentPolynomial monomial(K c, Vec2 e) {
        LaurentPolynomial p;
        p.add_term(e, std::move(c));
        return p;
    }
    static LaurentPolynomial constant(K c) { return monomial(std::move(c), {0, 0}); }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    K coeff(Vec2 e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? K() : it->second;
    }

    std::vector<Vec2> support() const {
        std::vector<Vec2> s;
        s.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.push_back(e);
        return s;
    }

    void add_term(Vec2 e, K c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        return a += b;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        return a -= b;
    }
    LaurentPolynomial operator-() const {
        LaurentPolynomial r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    LaurentPolynomial scaled(const K& c) const {
        LaurentPolynomial r;
        for (const auto& [e, k] : terms_) r.add_term(e, k * c);
        return r;
    }

    LaurentPolynomial shifted(Vec2 d) const {
        LaurentPolynomial r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + d, c);
        return r;
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    K evaluate(const K& x, const K& y) const {
        K acc;
        for (const auto& [e, c] : terms_) acc += c * pow_of(x, e.x) * pow_of(y, e.y);
        return acc;
    }

    // Exact quotient a/b in the Laurent ring; the caller guarantees b | a
    // (Bareiss pivot divisions). Leading-term elimination in lex order.
    static LaurentPolynomial exact_div(LaurentPolynomial a, const LaurentPolynomial& b) {
        if (b.is_zero()) throw Error("DivisionByZero", "Laurent division by zero");
        LaurentPolynomial q;
        const auto bl = std::prev(b.terms_.end());
        std::size_t guard = 0, limit = 200000;
        while (!a.is_zero()) {
            if (++guard > limit) throw Error("InexactDivision", "Laurent division left a remainder");
            const auto al = std::prev(a.terms_.end());
            Vec2 e = al->first - bl->first;
            K c = al->second / bl->second;
            q.add_term(e, c);
            a -= b.shifted(e).scaled(c);
        }
        return q;
    }

private:
    static K pow_of(const K& v, long long e) {
        if (e == 0) return K(1);
        K base = e < 0 ? v.inverse() : v;
        unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e)
                                     : static_cast<unsigned long long>(e);
        K acc(1);
        while (k != 0) {
            if (k & 1ull) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    Terms terms_;
};

using LaurentPoly2 = LaurentPolynomial<Rat>;

// Canonical text form: terms in lex (i, j) order, reduced-fraction
// coefficients, monomials like "x^2*y^-1" with exponent 1 unmarked and
// exponent 0 omitted. The zero polynomial renders as "0".
std::string render(const LaurentPoly2& p);

// Vertices of the Newton polygon of the support, counterclockwise, starting
// from the lexicographically least vertex. Errors with ZeroPolynomial on 0.
template <class K>
std::vector<Vec2> newton_polygon_of(const LaurentPolynomial<K>& p) {
    if (p.is_zero()) throw Error("ZeroPolynomial", "Newton polygon of the zero polynomial");
    return convex_hull(p.support());
}

}  // namespace dimerlab
