#include "symlie/expr.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

namespace symlie {

namespace {

using i128 = __int128;

bool fits(i128 v) {
    return v <= std::numeric_limits<std::int64_t>::max() && v >= -std::numeric_limits<std::int64_t>::max();
}

std::optional<Rational> reduce(i128 n, i128 d) {
    if (d == 0) return std::nullopt;
    if (d < 0) { n = -n; d = -d; }
    i128 a = n < 0 ? -n : n, b = d;
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    if (!fits(n) || !fits(d)) return std::nullopt;
    return Rational{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
}

}  // namespace

std::optional<Rational> Rational::make(std::int64_t n, std::int64_t d) { return reduce(n, d); }

std::optional<Rational> add(Rational a, Rational b) {
    return reduce(static_cast<i128>(a.num) * b.den + static_cast<i128>(b.num) * a.den,
                  static_cast<i128>(a.den) * b.den);
}

std::optional<Rational> mul(Rational a, Rational b) {
    // cross-reduce first to limit growth
    std::int64_t g1 = std::gcd(a.num, b.den), g2 = std::gcd(b.num, a.den);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return reduce(static_cast<i128>(a.num / g1) * (b.num / g2), static_cast<i128>(a.den / g2) * (b.den / g1));
}

std::optional<Rational> inverse(Rational a) {
    if (a.num == 0) return std::nullopt;
    return reduce(a.den, a.num);
}

std::optional<Rational> rational_pow(Rational a, std::int64_t n) {
    if (n < 0) {
        auto inv = inverse(a);
        if (!inv) return std::nullopt;
        a = *inv;
        n = -n;
    }
    Rational r{1, 1};
    Rational base = a;
    while (n > 0) {
        if (n & 1) {
            auto m = mul(r, base);
            if (!m) return std::nullopt;
            r = *m;
        }
        n >>= 1;
        if (n > 0) {
            auto m = mul(base, base);
            if (!m) return std::nullopt;
            base = *m;
        }
    }
    return r;
}

std::optional<Rational> snap_rational(double v, std::int64_t max_den, double tol) {
    if (!std::isfinite(v)) return std::nullopt;
    double bound = tol * (1.0 + std::fabs(v));
    // continued fraction convergents
    std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double x = v;
    for (int it = 0; it < 40; ++it) {
        double a = std::floor(x);
        if (std::fabs(a) > 1e15) break;
        auto ai = static_cast<std::int64_t>(a);
        std::int64_t h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        if (std::fabs(static_cast<double>(h1) / static_cast<double>(k1) - v) <= bound)
            return Rational::make(h1, k1);
        double frac = x - a;
        if (frac < 1e-300) break;
        x = 1.0 / frac;
    }
    return std::nullopt;
}

Number Number::real(double d) {
    if (std::isfinite(d) && d == std::floor(d) && std::fabs(d) < 9e15) return Number(static_cast<std::int64_t>(d));
    Number n;
    n.exact_ = false;
    n.d_ = d;
    return n;
}

int Number::compare(const Number& o) const {
    if (exact_ && o.exact_) {
        i128 l = static_cast<i128>(r_.num) * o.r_.den, r = static_cast<i128>(o.r_.num) * r_.den;
        return l < r ? -1 : (l > r ? 1 : 0);
    }
    if (exact_ != o.exact_) return exact_ ? -1 : 1;
    return d_ < o.d_ ? -1 : (d_ > o.d_ ? 1 : 0);
}

Number operator+(const Number& a, const Number& b) {
    if (a.exact_ && b.exact_) {
        if (auto r = add(a.r_, b.r_)) return Number(*r);
    }
    return Number::real(a.value() + b.value());
}

Number operator*(const Number& a, const Number& b) {
    if (a.exact_ && b.exact_) {
        if (auto r = mul(a.r_, b.r_)) return Number(*r);
    }
    return Number::real(a.value() * b.value());
}

Number Number::operator-() const {
    if (exact_) return Number(Rational{-r_.num, r_.den});
    return Number::real(-d_);
}

Number Number::inverse() const {
    if (exact_) {
        if (auto r = symlie::inverse(r_)) return Number(*r);
    }
    return Number::real(1.0 / value());
}

Number Number::pow(std::int64_t n) const {
    if (exact_) {
        if (auto r = rational_pow(r_, n)) return Number(*r);
    }
    return Number::real(std::pow(value(), static_cast<double>(n)));
}

std::string Number::str() const {
    if (exact_) {
        if (r_.den == 1) return std::to_string(r_.num);
        return std::to_string(r_.num) + "/" + std::to_string(r_.den);
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d_);
    std::string s = buf;
    if (s.find_first_of(".en") == std::string::npos) s += ".0";
    return s;
}

}  // namespace symlie
