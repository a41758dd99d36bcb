#include "gbc/rational.hpp"

#include "gbc/errors.hpp"

namespace gbc {

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw usage_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    // mpq_class arithmetic preserves canonical form; raw mpq input may not.
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw parse_error("Rational: empty string");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw parse_error("Rational: cannot parse '" + s + "'");
    if (sgn(v.get_den()) == 0)
        throw parse_error("Rational: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw usage_error("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::inv_factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(mpz_class(1), f));
}

} // namespace gbc
