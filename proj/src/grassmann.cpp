#include "gbc/grassmann.hpp"

#include "gbc/errors.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace gbc {

const char* parity_name(Parity p) {
    switch (p) {
        case Parity::Even: return "even";
        case Parity::Odd: return "odd";
        default: return "mixed";
    }
}

int interleave_sign(uint32_t a, uint32_t b) {
    // count pairs (i in a, j in b) with i > j via shift-and-mask
    int swaps = 0;
    for (uint32_t sh = a >> 1; sh != 0; sh >>= 1)
        swaps += std::popcount(sh & b);
    return (swaps & 1) ? -1 : 1;
}

GrassmannElement::GrassmannElement(int n, RingKind kind) : n_(n), kind_(kind) {
    if (n < 0 || n > kMaxGenerators)
        throw usage_error("GrassmannElement: generator count must be in [0, " +
                          std::to_string(kMaxGenerators) + "], got " + std::to_string(n));
}

GrassmannElement GrassmannElement::scalar(int n, RingElement c) {
    GrassmannElement f(n, c.kind());
    if (!c.is_zero()) f.terms_.emplace(0u, std::move(c));
    return f;
}

GrassmannElement GrassmannElement::generator(int n, int i, RingKind kind) {
    GrassmannElement f(n, kind);
    f.check_index(i);
    f.terms_.emplace(1u << (i - 1), RingElement::one(kind));
    return f;
}

void GrassmannElement::check_compatible(const GrassmannElement& o, const char* op) const {
    if (n_ != o.n_)
        throw usage_error(std::string("GrassmannElement: mismatched generator counts in ") + op);
    if (kind_ != o.kind_)
        throw usage_error(std::string("GrassmannElement: mixed-ring operands in ") + op);
}

void GrassmannElement::check_index(int i) const {
    if (i < 1 || i > n_)
        throw usage_error("GrassmannElement: generator index " + std::to_string(i) +
                          " out of range [1, " + std::to_string(n_) + "]");
}

void GrassmannElement::add_term(uint32_t mask, const RingElement& c) {
    if ((mask >> n_) != 0)
        throw usage_error("GrassmannElement: mask uses generators beyond n");
    if (c.kind() != kind_)
        throw usage_error("GrassmannElement: mixed-ring coefficient");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
    check_compatible(o, "add");
    GrassmannElement r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const {
    check_compatible(o, "sub");
    GrassmannElement r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

GrassmannElement GrassmannElement::operator*(const GrassmannElement& o) const {
    check_compatible(o, "mul");
    GrassmannElement r(n_, kind_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            if ((ma & mb) != 0) continue; // Pauli exclusion
            RingElement c = ca * cb;
            if (interleave_sign(ma, mb) < 0) c = -c;
            r.add_term(ma | mb, c);
        }
    }
    return r;
}

GrassmannElement GrassmannElement::operator-() const {
    GrassmannElement r(n_, kind_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

GrassmannElement GrassmannElement::scaled(const Rational& c) const {
    if (c.is_zero()) return GrassmannElement(n_, kind_);
    GrassmannElement r(n_, kind_);
    for (const auto& [m, coeff] : terms_) {
        RingElement v = coeff.scaled(c);
        if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
}

GrassmannElement GrassmannElement::scaled(const RingElement& c) const {
    GrassmannElement r(n_, kind_);
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : terms_) {
        RingElement v = coeff * c;
        if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
}

GrassmannElement GrassmannElement::exp() const {
    if (terms_.count(0u) != 0)
        throw usage_error("exp: element has a degree-0 term");
    Parity p = parity();
    if (!is_zero() && p != Parity::Even)
        throw usage_error(std::string("exp: element must be even, got ") + parity_name(p));

    GrassmannElement result = unit(n_, kind_);
    GrassmannElement power = result; // invariant: power = f^p / p!
    for (long p = 1;; ++p) {
        power = (power * *this).scaled(Rational(1, p));
        if (power.is_zero()) break;
        result = result + power;
    }
    return result;
}

GrassmannElement GrassmannElement::derive(int i) const {
    check_index(i);
    const uint32_t bit = 1u << (i - 1);
    const uint32_t below = bit - 1;
    GrassmannElement r(n_, kind_);
    for (const auto& [m, c] : terms_) {
        if ((m & bit) == 0) continue;
        const bool neg = (std::popcount(m & below) & 1) != 0;
        r.terms_.emplace(m & ~bit, neg ? -c : c);
    }
    return r;
}

GrassmannElement GrassmannElement::integrate(std::span<const int> order) const {
    uint32_t seen = 0;
    for (int i : order) {
        check_index(i);
        uint32_t bit = 1u << (i - 1);
        if (seen & bit)
            throw usage_error("integrate: repeated index " + std::to_string(i));
        seen |= bit;
    }
    GrassmannElement r(*this);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        r = r.derive(*it);
    return r;
}

RingElement GrassmannElement::top_coefficient() const {
    return coefficient((1u << n_) - 1u); // n_ <= 24, no overflow
}

Parity GrassmannElement::parity() const {
    bool even = false, odd = false;
    for (const auto& [m, c] : terms_)
        ((std::popcount(m) & 1) ? odd : even) = true;
    if (odd && even) return Parity::Mixed;
    if (odd) return Parity::Odd;
    return Parity::Even; // zero counts as even
}

bool GrassmannElement::operator==(const GrassmannElement& o) const {
    check_compatible(o, "compare");
    return terms_ == o.terms_;
}

const RingElement& GrassmannElement::coefficient(uint32_t mask) const {
    static const RingElement zero_rat = RingElement::zero(RingKind::Rational);
    static const RingElement zero_poly = RingElement::zero(RingKind::Polynomial);
    auto it = terms_.find(mask);
    if (it != terms_.end()) return it->second;
    return kind_ == RingKind::Rational ? zero_rat : zero_poly;
}

RingElement GrassmannElement::scalar_part() const {
    return coefficient(0u);
}

bool GrassmannElement::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0u);
}

std::string GrassmannElement::str() const {
    if (terms_.empty()) return "0";
    // sort by (degree, mask value)
    std::vector<std::pair<uint32_t, const RingElement*>> ordered;
    ordered.reserve(terms_.size());
    for (const auto& [m, c] : terms_) ordered.emplace_back(m, &c);
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        int pa = std::popcount(a.first), pb = std::popcount(b.first);
        return pa != pb ? pa < pb : a.first < b.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c->str() << ")";
        if (m != 0) {
            out << " ";
            bool w = false;
            for (int i = 0; i < n_; ++i) {
                if (m & (1u << i)) {
                    if (w) out << "^";
                    out << "x" << (i + 1);
                    w = true;
                }
            }
        }
    }
    return out.str();
}

} // namespace gbc
