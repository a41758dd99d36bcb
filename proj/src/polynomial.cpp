#include "gbc/polynomial.hpp"

#include "gbc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace gbc {

namespace {

struct VarStore {
    std::mutex mu;
    std::deque<std::string> names;
    std::unordered_map<std::string, uint32_t> index;
};

VarStore& store() {
    static VarStore s;
    return s;
}

} // namespace

VarTable& VarTable::global() {
    static VarTable t;
    return t;
}

uint32_t VarTable::intern(std::string_view name) {
    if (name.empty()) throw usage_error("VarTable: empty variable name");
    auto& s = store();
    std::lock_guard<std::mutex> lock(s.mu);
    std::string key(name);
    auto it = s.index.find(key);
    if (it != s.index.end()) return it->second;
    uint32_t idx = static_cast<uint32_t>(s.names.size());
    s.names.push_back(key);
    s.index.emplace(std::move(key), idx);
    return idx;
}

std::string VarTable::name(uint32_t index) const {
    auto& s = store();
    std::lock_guard<std::mutex> lock(s.mu);
    if (index >= s.names.size()) throw usage_error("VarTable: unknown variable index");
    return s.names[index];
}

size_t VarTable::size() const {
    auto& s = store();
    std::lock_guard<std::mutex> lock(s.mu);
    return s.names.size();
}

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    // merge duplicates, drop zero exponents
    std::vector<Factor> out;
    for (const auto& [v, e] : factors_) {
        if (e == 0) continue;
        if (!out.empty() && out.back().first == v)
            out.back().second += e;
        else
            out.emplace_back(v, e);
    }
    factors_ = std::move(out);
}

Monomial Monomial::var(uint32_t index, uint32_t exp) {
    Monomial m;
    if (exp > 0) m.factors_.emplace_back(index, exp);
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<Factor> merged;
    merged.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first) merged.push_back(*a++);
        else if (b->first < a->first) merged.push_back(*b++);
        else { merged.emplace_back(a->first, a->second + b->second); ++a; ++b; }
    }
    merged.insert(merged.end(), a, factors_.end());
    merged.insert(merged.end(), b, o.factors_.end());
    Monomial m;
    m.factors_ = std::move(merged);
    return m;
}

uint32_t Monomial::total_degree() const {
    uint32_t d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // lex on the dense exponent vector: walk both sparse lists in parallel
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
        uint32_t va = ia != a.factors_.end() ? ia->first : UINT32_MAX;
        uint32_t vb = ib != b.factors_.end() ? ib->first : UINT32_MAX;
        if (va < vb) return 1;  // a has a positive power at a more significant slot
        if (vb < va) return -1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia; ++ib;
    }
    return 0;
}

Polynomial::Polynomial(Rational constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial(), std::move(constant));
}

Polynomial Polynomial::variable(std::string_view name) {
    Polynomial p;
    p.terms_.emplace(Monomial::var(VarTable::global().intern(name)), Rational(1));
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial();
    Polynomial r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

Polynomial Polynomial::pow(uint32_t e) const {
    Polynomial r(Rational(1));
    for (uint32_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        bool coeff_shown = !abs.is_one() || m.empty();
        if (coeff_shown) out << abs.str();
        bool need_star = coeff_shown;
        for (const auto& [v, e] : m.factors()) {
            if (need_star) out << " * ";
            out << VarTable::global().name(v);
            if (e > 1) out << "^" << e;
            need_star = true;
        }
    }
    return out.str();
}

namespace {

struct PolyLexer {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() { skip_ws(); return pos >= s.size(); }
    char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }
    char take() { skip_ws(); return s[pos++]; }

    std::string take_number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("Polynomial: expected digits at offset " + std::to_string(pos));
        return std::string(s.substr(start, pos - start));
    }

    std::string take_identifier() {
        skip_ws();
        size_t start = pos;
        auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto body = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        if (pos >= s.size() || !head(s[pos]))
            throw parse_error("Polynomial: expected identifier at offset " + std::to_string(pos));
        ++pos;
        while (pos < s.size() && body(s[pos])) ++pos;
        return std::string(s.substr(start, pos - start));
    }
};

} // namespace

Polynomial Polynomial::parse(std::string_view text) {
    PolyLexer lx{text};
    Polynomial result;
    if (lx.eof()) throw parse_error("Polynomial: empty input");

    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.take();
            sign = c == '-' ? -1 : 1;
        } else if (!first) {
            throw parse_error("Polynomial: expected '+' or '-' between terms");
        }
        first = false;

        Rational coeff(1);
        Monomial mono;
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            char f = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(f)) || (f == '-' && !saw_factor)) {
                // a rational coefficient "p" or "p/q" (leading '-' already folded above)
                if (f == '-') { lx.take(); sign = -sign; }
                std::string num = lx.take_number();
                if (lx.peek() == '/') {
                    lx.take();
                    num += "/" + lx.take_number();
                }
                coeff *= Rational::parse(num);
            } else {
                std::string name = lx.take_identifier();
                uint32_t e = 1;
                if (lx.peek() == '^') {
                    lx.take();
                    e = static_cast<uint32_t>(std::stoul(lx.take_number()));
                }
                mono = mono * Monomial::var(VarTable::global().intern(name), e);
            }
            saw_factor = true;
            if (lx.peek() == '*') { lx.take(); expect_factor = true; }
            else expect_factor = false;
        }
        if (sign < 0) coeff = -coeff;
        result.add_term(mono, coeff);
    }
    return result;
}

} // namespace gbc
