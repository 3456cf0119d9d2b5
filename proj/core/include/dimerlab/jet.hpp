#pragma once

#include <algorithm>
#include <vector>

#include "dimerlab/rational.hpp"

namespace dimerlab {

// First-order jet: a value together with exact first partials with respect to
// a set of variables. Partial vectors are extended with zeros on demand, so
// constants need not know the variable count. Products follow the Leibniz
// rule exactly; quotients need an invertible (nonzero-value) denominator.
class Jet {
public:
    Jet() = default;
    Jet(long v) : value_(v) {}
    explicit Jet(Rat v) : value_(std::move(v)) {}

    static Jet variable(Rat v, std::size_t index, std::size_t nvars) {
        Jet j(std::move(v));
        j.partials_.assign(nvars, Rat(0));
        j.partials_[index] = Rat(1);
        return j;
    }

    const Rat& value() const { return value_; }
    Rat partial(std::size_t i) const { return i < partials_.size() ? partials_[i] : Rat(0); }
    std::size_t partial_count() const { return partials_.size(); }

    bool is_zero() const {
        if (!value_.is_zero()) return false;
        return std::all_of(partials_.begin(), partials_.end(),
                           [](const Rat& r) { return r.is_zero(); });
    }

    Jet operator-() const {
        Jet r(-value_);
        r.partials_.reserve(partials_.size());
        for (const Rat& p : partials_) r.partials_.push_back(-p);
        return r;
    }

    Jet& operator+=(const Jet& o) {
        value_ += o.value_;
        grow_to(o.partials_.size());
        for (std::size_t i = 0; i < o.partials_.size(); ++i) partials_[i] += o.partials_[i];
        return *this;
    }
    Jet& operator-=(const Jet& o) { return *this += -o; }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r(a.value_ * b.value_);
        r.partials_.assign(std::max(a.partials_.size(), b.partials_.size()), Rat(0));
        for (std::size_t i = 0; i < r.partials_.size(); ++i)
            r.partials_[i] = a.value_ * b.partial(i) + b.value_ * a.partial(i);
        return r;
    }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }

    Jet inverse() const {
        Rat iv = value_.inverse();
        Jet r(iv);
        r.partials_.reserve(partials_.size());
        Rat m = -(iv * iv);
        for (const Rat& p : partials_) r.partials_.push_back(m * p);
        return r;
    }

    friend Jet operator/(const Jet& a, const Jet& b) { return a * b.inverse(); }
    Jet& operator/=(const Jet& o) { return *this = *this / o; }

    friend bool operator==(const Jet& a, const Jet& b) {
        if (a.value_ != b.value_) return false;
        std::size_t n = std::max(a.partials_.size(), b.partials_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a.partial(i) != b.partial(i)) return false;
        return true;
    }

    Jet pow(long e) const {
        if (e == 0) return Jet(1);
        Jet base = e < 0 ? inverse() : *this;
        unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        Jet acc(1);
        while (k != 0) {
            if (k & 1ul) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

private:
    void grow_to(std::size_t n) {
        if (partials_.size() < n) partials_.resize(n, Rat(0));
    }

    Rat value_;
    std::vector<Rat> partials_;
};

}  // namespace dimerlab
