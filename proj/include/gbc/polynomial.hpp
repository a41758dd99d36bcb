#pragma once

#include "gbc/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gbc {

/// Process-wide interner mapping indeterminate names to dense indices.
/// Indices are assigned in first-seen order, so any one run is deterministic.
class VarTable {
public:
    static VarTable& global();

    uint32_t intern(std::string_view name);
    std::string name(uint32_t index) const;
    size_t size() const;

private:
    VarTable() = default;
};

/// Sparse exponent vector: (variable index, exponent) pairs sorted by
/// variable index, no zero exponents stored.
class Monomial {
public:
    using Factor = std::pair<uint32_t, uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors);

    static Monomial var(uint32_t index, uint32_t exp = 1);

    Monomial operator*(const Monomial& o) const;

    uint32_t total_degree() const;
    bool empty() const { return factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

    /// Graded lexicographic: total degree first, then lex on the dense
    /// exponent vector (lower variable index is more significant).
    static int compare(const Monomial& a, const Monomial& b);

private:
    std::vector<Factor> factors_;
};

struct MonomialGrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) < 0;
    }
};

/// Multivariate polynomial over Rational, stored as a canonical term map
/// (no zero coefficients). Ring operations are exact.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialGrlexLess>;

    Polynomial() = default;
    explicit Polynomial(Rational constant);

    static Polynomial variable(std::string_view name);
    static Polynomial constant(Rational c) { return Polynomial(std::move(c)); }

    /// Parse the textual format produced by str():
    ///   c * v1^e1 * v2 + ... | with rational c as "p/q".
    static Polynomial parse(std::string_view text);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(uint32_t e) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The degree-0 coefficient (zero if absent).
    Rational constant_term() const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Canonical print: terms in descending graded-lex order, "0" for zero.
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

} // namespace gbc
