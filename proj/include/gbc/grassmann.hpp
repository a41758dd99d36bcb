#pragma once

#include "gbc/ring.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace gbc {

/// Z2-grading of a Grassmann element.
enum class Parity { Even, Odd, Mixed };

const char* parity_name(Parity p);

/// Hard cap on the number of anticommuting generators. Monomials are
/// n-bit masks, and dense exponentials are the memory bottleneck.
inline constexpr int kMaxGenerators = 24;

/// Element of the Grassmann algebra R[x_1..x_n]: a sparse map from
/// square-free increasing monomials (bitmask, bit i-1 <=> x_i present) to
/// nonzero ring coefficients. Immutable in spirit: operations are pure.
class GrassmannElement {
public:
    /// The zero element of R[x_1..x_n] over the given ground ring.
    GrassmannElement(int n, RingKind kind);

    static GrassmannElement scalar(int n, RingElement c);
    static GrassmannElement unit(int n, RingKind kind) {
        return scalar(n, RingElement::one(kind));
    }
    /// The generator x_i, 1 <= i <= n.
    static GrassmannElement generator(int n, int i, RingKind kind);

    int generators() const { return n_; }
    RingKind kind() const { return kind_; }

    GrassmannElement operator+(const GrassmannElement& o) const;
    GrassmannElement operator-(const GrassmannElement& o) const;
    GrassmannElement operator*(const GrassmannElement& o) const;
    GrassmannElement operator-() const;

    GrassmannElement scaled(const Rational& c) const;
    GrassmannElement scaled(const RingElement& c) const;

    /// exp(f) = sum f^p / p!, truncating when the power vanishes.
    /// Requires no degree-0 term and even parity.
    GrassmannElement exp() const;

    /// The odd derivation d/dx_i: kills monomials without x_i, otherwise
    /// removes x_i with sign (-1)^(position-1).
    GrassmannElement derive(int i) const;

    /// Composite derivation written as the Berezin integral
    /// "d x_{order[0]} ... d x_{order[k-1]}": the innermost (last listed)
    /// index acts first. With order = (n, n-1, ..., 1) this extracts the
    /// top-form coefficient.
    GrassmannElement integrate(std::span<const int> order) const;

    /// Full integral in decreasing order: the coefficient of x_1...x_n.
    RingElement top_coefficient() const;

    Parity parity() const;

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const GrassmannElement& o) const;

    const RingElement& coefficient(uint32_t mask) const;
    /// The degree-0 part, as a ring scalar.
    RingElement scalar_part() const;
    /// True if the only possibly-nonzero term has mask 0.
    bool is_scalar() const;

    size_t term_count() const { return terms_.size(); }
    const std::map<uint32_t, RingElement>& terms() const { return terms_; }

    /// Adds c * (monomial of mask) to this element, pruning zeros.
    /// Building block for constructing integrands.
    void add_term(uint32_t mask, const RingElement& c);

    /// Debug print: terms sorted by (degree, mask), monomials as wedge
    /// lists "x1^x3^x7".
    std::string str() const;

private:
    void check_compatible(const GrassmannElement& o, const char* op) const;
    void check_index(int i) const;

    int n_;
    RingKind kind_;
    std::map<uint32_t, RingElement> terms_;
};

/// Sign of reordering the concatenation (monomial a, monomial b) into
/// increasing order: (-1)^(number of pairs (i in a, j in b) with i > j).
int interleave_sign(uint32_t a, uint32_t b);

} // namespace gbc
