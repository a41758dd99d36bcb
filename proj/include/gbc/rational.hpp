#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gbc {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Arithmetic is exact; there is no floating point anywhere
/// in this library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long n, long d);
    explicit Rational(mpq_class v);

    /// Parse "p/q" or "p" (optional leading '-').
    static Rational parse(std::string_view text);

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    /// Exact division; throws usage_error on division by zero.
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    /// 1/n!, exact.
    static Rational inv_factorial(unsigned n);

private:
    mpq_class v_; // canonical: gcd(|num|, den) = 1, den > 0
};

} // namespace gbc
