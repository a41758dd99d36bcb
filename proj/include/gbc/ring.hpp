#pragma once

#include "gbc/polynomial.hpp"
#include "gbc/rational.hpp"

#include <string>
#include <variant>

namespace gbc {

/// The two concrete ground rings: big rationals, and multivariate
/// polynomials with rational coefficients.
enum class RingKind { Rational, Polynomial };

const char* ring_kind_name(RingKind k);

/// An exact element of one of the ground rings. Values are immutable in
/// spirit: all operations return fresh elements, so sharing across threads
/// is safe. Binary operations on elements of different rings throw
/// usage_error.
class RingElement {
public:
    RingElement() : v_(Rational(0)) {}
    RingElement(Rational r) : v_(std::move(r)) {}       // NOLINT
    RingElement(Polynomial p) : v_(std::move(p)) {}     // NOLINT

    static RingElement zero(RingKind kind);
    static RingElement one(RingKind kind);
    static RingElement integer(long n, RingKind kind);
    /// Embed a rational constant into the given ring (both contain Q).
    static RingElement from_rational(const Rational& r, RingKind kind);
    static RingElement variable(std::string_view name) {
        return RingElement(Polynomial::variable(name));
    }
    /// Parse by kind: Rational::parse or Polynomial::parse.
    static RingElement parse(std::string_view text, RingKind kind);

    RingKind kind() const {
        return std::holds_alternative<Rational>(v_) ? RingKind::Rational : RingKind::Polynomial;
    }

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    RingElement& operator+=(const RingElement& o);

    /// Multiply by a rational scalar; valid in both rings.
    RingElement scaled(const Rational& c) const;

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    const Rational& as_rational() const;
    const Polynomial& as_polynomial() const;

    std::string str() const;

private:
    void check_kind(const RingElement& o, const char* op) const;

    std::variant<Rational, Polynomial> v_;
};

} // namespace gbc
