#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rectile {

/// Exact rational number: arbitrary-precision numerator/denominator, always
/// in lowest terms with a positive denominator. All library arithmetic goes
/// through this type; there is no floating point on any decision path.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d);
    Rat(const mpz_class& n, const mpz_class& d);
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static std::optional<Rat> parse(std::string_view s);

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    mpz_class floor() const;
    /// Fractional part in [0, 1).
    Rat frac() const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const;
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t()) == 0; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t()) < 0; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator<=(const Rat& o) const { return !(o < *this); }
    bool operator>=(const Rat& o) const { return !(*this < o); }

    Rat abs() const { return is_negative() ? -*this : *this; }
    Rat reciprocal() const;

    /// "p/q" or "p" when q == 1. Exact; round-trips through parse().
    std::string str() const;
    /// Lossy, for SVG layout and timing output only.
    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

Rat rat_min(const Rat& a, const Rat& b);
Rat rat_max(const Rat& a, const Rat& b);

/// lcm of an accumulator with the denominator of x.
mpz_class lcm_den(const mpz_class& acc, const Rat& x);

} // namespace rectile
