#include "gbc/ring.hpp"

#include "gbc/errors.hpp"

namespace gbc {

const char* ring_kind_name(RingKind k) {
    return k == RingKind::Rational ? "rational" : "polynomial";
}

RingElement RingElement::zero(RingKind kind) {
    return kind == RingKind::Rational ? RingElement(Rational(0)) : RingElement(Polynomial());
}

RingElement RingElement::one(RingKind kind) {
    return integer(1, kind);
}

RingElement RingElement::integer(long n, RingKind kind) {
    return from_rational(Rational(n), kind);
}

RingElement RingElement::from_rational(const Rational& r, RingKind kind) {
    if (kind == RingKind::Rational) return RingElement(r);
    return RingElement(Polynomial::constant(r));
}

RingElement RingElement::parse(std::string_view text, RingKind kind) {
    if (kind == RingKind::Rational) return RingElement(Rational::parse(text));
    return RingElement(Polynomial::parse(text));
}

void RingElement::check_kind(const RingElement& o, const char* op) const {
    if (kind() != o.kind())
        throw usage_error(std::string("RingElement: mixed-ring operands in ") + op + " (" +
                          ring_kind_name(kind()) + " vs " + ring_kind_name(o.kind()) + ")");
}

RingElement RingElement::operator+(const RingElement& o) const {
    check_kind(o, "add");
    if (kind() == RingKind::Rational)
        return RingElement(std::get<Rational>(v_) + std::get<Rational>(o.v_));
    return RingElement(std::get<Polynomial>(v_) + std::get<Polynomial>(o.v_));
}

RingElement RingElement::operator-(const RingElement& o) const {
    check_kind(o, "sub");
    if (kind() == RingKind::Rational)
        return RingElement(std::get<Rational>(v_) - std::get<Rational>(o.v_));
    return RingElement(std::get<Polynomial>(v_) - std::get<Polynomial>(o.v_));
}

RingElement RingElement::operator*(const RingElement& o) const {
    check_kind(o, "mul");
    if (kind() == RingKind::Rational)
        return RingElement(std::get<Rational>(v_) * std::get<Rational>(o.v_));
    return RingElement(std::get<Polynomial>(v_) * std::get<Polynomial>(o.v_));
}

RingElement RingElement::operator-() const {
    if (kind() == RingKind::Rational) return RingElement(-std::get<Rational>(v_));
    return RingElement(-std::get<Polynomial>(v_));
}

RingElement& RingElement::operator+=(const RingElement& o) {
    check_kind(o, "add");
    if (kind() == RingKind::Rational)
        std::get<Rational>(v_) += std::get<Rational>(o.v_);
    else
        std::get<Polynomial>(v_) += std::get<Polynomial>(o.v_);
    return *this;
}

RingElement RingElement::scaled(const Rational& c) const {
    if (kind() == RingKind::Rational) return RingElement(std::get<Rational>(v_) * c);
    return RingElement(std::get<Polynomial>(v_).scaled(c));
}

bool RingElement::is_zero() const {
    if (kind() == RingKind::Rational) return std::get<Rational>(v_).is_zero();
    return std::get<Polynomial>(v_).is_zero();
}

bool RingElement::is_one() const {
    if (kind() == RingKind::Rational) return std::get<Rational>(v_).is_one();
    const auto& p = std::get<Polynomial>(v_);
    return p.is_constant() && p.constant_term().is_one();
}

bool RingElement::operator==(const RingElement& o) const {
    check_kind(o, "compare");
    if (kind() == RingKind::Rational)
        return std::get<Rational>(v_) == std::get<Rational>(o.v_);
    return std::get<Polynomial>(v_) == std::get<Polynomial>(o.v_);
}

const Rational& RingElement::as_rational() const {
    if (kind() != RingKind::Rational)
        throw usage_error("RingElement: not a rational");
    return std::get<Rational>(v_);
}

const Polynomial& RingElement::as_polynomial() const {
    if (kind() != RingKind::Polynomial)
        throw usage_error("RingElement: not a polynomial");
    return std::get<Polynomial>(v_);
}

std::string RingElement::str() const {
    if (kind() == RingKind::Rational) return std::get<Rational>(v_).str();
    return std::get<Polynomial>(v_).str();
}

} // namespace gbc
