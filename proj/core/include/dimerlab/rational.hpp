#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "dimerlab/error.hpp"

namespace dimerlab {

// Arbitrary-precision rational, always reduced, denominator > 0, zero is 0/1.
// Thin value wrapper over GMP's mpq_class; canonicalization is enforced on
// every constructor that could produce an unreduced fraction.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(long num, long den) {
        if (den == 0) throw Error("DivisionByZero", "rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    explicit Rat(const mpz_class& n) : q_(n) {}

    // Accepts "p", "-p", "p/q" with arbitrary-precision parts.
    static Rat parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw Error("BadRational", "cannot parse '" + s + "'");
        if (q.get_den() == 0) throw Error("DivisionByZero", "zero denominator in '" + s + "'");
        q.canonicalize();
        return Rat(std::move(q));
    }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error("DivisionByZero", "rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    Rat inverse() const {
        if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
        return Rat(mpq_class(1) / q_);
    }

    // Integer power; negative exponents require a nonzero base.
    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        const Rat base = e < 0 ? inverse() : *this;
        unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                                : static_cast<unsigned long>(e);
        mpq_class acc(1), b = base.q_;
        while (k != 0) {
            if (k & 1ul) acc *= b;
            b *= b;
            k >>= 1;
        }
        return Rat(std::move(acc));
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    // "p" when the denominator is 1, else "p/q".
    std::string str() const { return q_.get_str(); }

    // Decimal rendering with exactly `digits` fractional digits, rounding half
    // away from zero. Used for SVG coordinates; reports stay exact.
    std::string decimal(int digits) const;

private:
    mpq_class q_;
};

}  // namespace dimerlab
