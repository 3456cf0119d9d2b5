#include "dimerlab/laurent.hpp"

#include <sstream>

namespace dimerlab {

namespace {

std::string monomial_str(Vec2 e) {
    std::string s;
    auto part = [&](const char* var, long long k) {
        if (k == 0) return;
        if (!s.empty()) s += "*";
        s += var;
        if (k != 1) s += "^" + std::to_string(k);
    };
    part("x", e.x);
    part("y", e.y);
    return s;
}

}  // namespace

std::string render(const LaurentPoly2& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rat mag = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string mon = monomial_str(e);
        if (mon.empty()) {
            out += mag.str();
        } else if (mag == Rat(1)) {
            out += mon;
        } else {
            out += mag.str() + "*" + mon;
        }
    }
    return out;
}

std::string Rat::decimal(int digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpq_class scaled = q_ * mpq_class(scale);
    mpz_class num = scaled.get_num(), den = scaled.get_den();  // den > 0
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class r = (2 * num + den) / (2 * den);  // round half away from zero
    if (neg && r == 0) neg = false;
    std::string s = r.get_str();
    if (static_cast<int>(s.size()) <= digits)
        s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

}  // namespace dimerlab
