#include "gbc/linalg.hpp"

#include "gbc/errors.hpp"
#include "gbc/perm.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gbc {

// ---------------------------------------------------------------------------
// IndexSet

IndexSet::IndexSet(std::vector<int> indices) : v_(std::move(indices)) {
    std::sort(v_.begin(), v_.end());
    for (size_t i = 0; i + 1 < v_.size(); ++i)
        if (v_[i] == v_[i + 1])
            throw usage_error("IndexSet: repeated index " + std::to_string(v_[i]));
}

bool IndexSet::contains(int i) const {
    return std::binary_search(v_.begin(), v_.end(), i);
}

int IndexSet::sum() const {
    int s = 0;
    for (int i : v_) s += i;
    return s;
}

IndexSet IndexSet::complement(int n) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n) - v_.size());
    for (int i = 1; i <= n; ++i)
        if (!contains(i)) out.push_back(i);
    return IndexSet(std::move(out));
}

void IndexSet::check_range(int n) const {
    for (int i : v_)
        if (i < 1 || i > n)
            throw usage_error("IndexSet: index " + std::to_string(i) + " out of range [1, " +
                              std::to_string(n) + "]");
}

std::string IndexSet::str() const {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < v_.size(); ++i) out << (i ? "," : "") << v_[i];
    out << "}";
    return out.str();
}

// ---------------------------------------------------------------------------
// SquareMatrix

SquareMatrix::SquareMatrix(int n, RingKind kind) : n_(n), kind_(kind) {
    if (n < 0) throw usage_error("SquareMatrix: negative size");
    e_.assign(static_cast<size_t>(n) * n, RingElement::zero(kind));
}

SquareMatrix::SquareMatrix(int n, std::vector<RingElement> entries) : n_(n), kind_(RingKind::Rational) {
    if (n < 0) throw usage_error("SquareMatrix: negative size");
    if (entries.size() != static_cast<size_t>(n) * n)
        throw usage_error("SquareMatrix: expected " + std::to_string(n * n) + " entries, got " +
                          std::to_string(entries.size()));
    if (!entries.empty()) {
        kind_ = entries.front().kind();
        for (const auto& e : entries)
            if (e.kind() != kind_)
                throw usage_error("SquareMatrix: mixed-ring entries");
    }
    e_ = std::move(entries);
}

SquareMatrix SquareMatrix::identity(int n, RingKind kind) {
    SquareMatrix m(n, kind);
    for (int i = 1; i <= n; ++i) m.set(i, i, RingElement::one(kind));
    return m;
}

SquareMatrix SquareMatrix::symbolic(int n, const std::string& prefix) {
    SquareMatrix m(n, RingKind::Polynomial);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.set(i, j, RingElement::variable(prefix + "_" + std::to_string(i) + "_" +
                                              std::to_string(j)));
    return m;
}

const RingElement& SquareMatrix::entry(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw usage_error("SquareMatrix: index out of range");
    return e_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
}

void SquareMatrix::set(int i, int j, RingElement v) {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw usage_error("SquareMatrix: index out of range");
    if (v.kind() != kind_)
        throw usage_error("SquareMatrix: mixed-ring entry");
    e_[static_cast<size_t>(i - 1) * n_ + (j - 1)] = std::move(v);
}

SquareMatrix SquareMatrix::transposed() const {
    SquareMatrix t(n_, kind_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) t.set(j, i, entry(i, j));
    return t;
}

SquareMatrix SquareMatrix::submatrix_erasing(const IndexSet& I, const IndexSet& J) const {
    I.check_range(n_);
    J.check_range(n_);
    IndexSet rows = I.complement(n_);
    IndexSet cols = J.complement(n_);
    SquareMatrix s(static_cast<int>(rows.size()), kind_);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            s.set(static_cast<int>(r + 1), static_cast<int>(c + 1),
                  entry(rows.indices()[r], cols.indices()[c]));
    return s;
}

bool SquareMatrix::is_skew_symmetric() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = i; j <= n_; ++j)
            if (!(entry(i, j) + entry(j, i)).is_zero()) return false;
    return true;
}

bool SquareMatrix::is_symmetric() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (!(entry(i, j) - entry(j, i)).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// AntisymmetricTensor

AntisymmetricTensor::AntisymmetricTensor(int n, int k, RingKind kind)
    : n_(n), k_(k), kind_(kind) {
    if (n < 0) throw usage_error("AntisymmetricTensor: negative index range");
    if (k < 1) throw usage_error("AntisymmetricTensor: arity must be >= 1");
}

AntisymmetricTensor AntisymmetricTensor::symbolic(int n, int k, const std::string& prefix) {
    AntisymmetricTensor t(n, k, RingKind::Polynomial);
    std::vector<int> key(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int slot, int from) {
        if (slot == k) {
            std::string name = prefix;
            for (int v : key) name += "_" + std::to_string(v);
            t.set(key, RingElement::variable(name));
            return;
        }
        for (int v = from; v <= n; ++v) {
            key[static_cast<size_t>(slot)] = v;
            rec(slot + 1, v + 1);
        }
    };
    rec(0, 1);
    return t;
}

void AntisymmetricTensor::set(std::span<const int> key, RingElement v) {
    if (static_cast<int>(key.size()) != k_)
        throw usage_error("AntisymmetricTensor: key arity mismatch");
    for (size_t i = 0; i < key.size(); ++i) {
        if (key[i] < 1 || key[i] > n_)
            throw usage_error("AntisymmetricTensor: index out of range");
        if (i + 1 < key.size() && key[i] >= key[i + 1])
            throw usage_error("AntisymmetricTensor: key must be strictly increasing");
    }
    if (v.kind() != kind_)
        throw usage_error("AntisymmetricTensor: mixed-ring value");
    std::vector<int> k(key.begin(), key.end());
    if (v.is_zero())
        vals_.erase(k);
    else
        vals_[std::move(k)] = std::move(v);
}

RingElement AntisymmetricTensor::at(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != k_)
        throw usage_error("AntisymmetricTensor: lookup arity mismatch");
    std::vector<int> sorted(tuple.begin(), tuple.end());
    int sign = sort_with_sign(sorted);
    if (sign == 0) return RingElement::zero(kind_); // repeated index
    for (int v : sorted)
        if (v < 1 || v > n_)
            throw usage_error("AntisymmetricTensor: index out of range");
    auto it = vals_.find(sorted);
    if (it == vals_.end()) return RingElement::zero(kind_);
    return sign < 0 ? -it->second : it->second;
}

AntisymmetricTensor AntisymmetricTensor::contract_first() const {
    if (k_ < 2) throw usage_error("AntisymmetricTensor: contraction needs arity >= 2");
    AntisymmetricTensor out(n_, k_ - 1, kind_);
    std::vector<int> key(static_cast<size_t>(k_ - 1));
    std::vector<int> full(static_cast<size_t>(k_));
    std::function<void(int, int)> rec = [&](int slot, int from) {
        if (slot == k_ - 1) {
            RingElement sum = RingElement::zero(kind_);
            for (int a = 1; a <= n_; ++a) {
                full[0] = a;
                std::copy(key.begin(), key.end(), full.begin() + 1);
                sum += at(full);
            }
            if (!sum.is_zero()) out.set(key, sum);
            return;
        }
        for (int v = from; v <= n_; ++v) {
            key[static_cast<size_t>(slot)] = v;
            rec(slot + 1, v + 1);
        }
    };
    rec(0, 1);
    return out;
}

AntisymmetricTensor AntisymmetricTensor::forbid_index(int i) const {
    if (i < 1 || i > n_) throw usage_error("AntisymmetricTensor: forbidden index out of range");
    AntisymmetricTensor out(n_ - 1, k_, kind_);
    for (const auto& [key, val] : vals_) {
        if (std::find(key.begin(), key.end(), i) != key.end()) continue;
        std::vector<int> relabeled(key.size());
        for (size_t s = 0; s < key.size(); ++s)
            relabeled[s] = key[s] > i ? key[s] - 1 : key[s];
        out.set(relabeled, val);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Backends

Backend backend_from_string(const std::string& s) {
    if (s == "auto") return Backend::Auto;
    if (s == "direct") return Backend::Direct;
    if (s == "berezin") return Backend::Berezin;
    if (s == "bareiss") return Backend::Bareiss;
    if (s == "all") return Backend::All;
    throw usage_error("unknown backend '" + s + "' (expected auto|direct|berezin|bareiss|all)");
}

std::vector<RingElement> column_sums(const SquareMatrix& A) {
    std::vector<RingElement> out;
    out.reserve(static_cast<size_t>(A.size()));
    for (int j = 1; j <= A.size(); ++j) {
        RingElement s = RingElement::zero(A.kind());
        for (int i = 1; i <= A.size(); ++i) s += A.entry(i, j);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

// Expansion along the first remaining row, memoized over the set of
// remaining columns. Exact in any ring; exponential states but fine for
// the n <= 8 oracle range.
RingElement det_expansion(const SquareMatrix& A) {
    const int n = A.size();
    std::map<uint32_t, RingElement> memo;
    std::function<RingElement(uint32_t, int)> rec = [&](uint32_t cols, int row) -> RingElement {
        if (cols == 0) return RingElement::one(A.kind());
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        RingElement acc = RingElement::zero(A.kind());
        int sign = 1;
        for (int j = 1; j <= n; ++j) {
            uint32_t bit = 1u << (j - 1);
            if (!(cols & bit)) continue;
            const RingElement& a = A.entry(row, j);
            if (!a.is_zero()) {
                RingElement sub = rec(cols & ~bit, row + 1);
                RingElement term = a * sub;
                acc += sign < 0 ? -term : term;
            }
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    if (n > 28) throw usage_error("det: expansion backend capped at n = 28");
    return rec(n == 0 ? 0u : ((1u << n) - 1u), 1);
}

// Fraction-free Bareiss elimination over the rationals.
RingElement det_bareiss(const SquareMatrix& A) {
    if (A.kind() != RingKind::Rational)
        throw usage_error("det: bareiss backend requires rational entries");
    const int n = A.size();
    if (n == 0) return RingElement::one(RingKind::Rational);
    std::vector<std::vector<Rational>> m(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = A.entry(i + 1, j + 1).as_rational();

    int sign = 1;
    Rational prev_pivot(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[r][k].is_zero()) { swap_row = r; break; }
            if (swap_row < 0) return RingElement(Rational(0));
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev_pivot;
            m[i][k] = Rational(0);
        }
        prev_pivot = m[k][k];
    }
    Rational d = m[n - 1][n - 1];
    return RingElement(sign < 0 ? -d : d);
}

RingElement det_berezin(const SquareMatrix& A) {
    const int m = A.size();
    if (2 * m > kMaxGenerators)
        throw guard_error("det: berezin backend needs 2n <= " + std::to_string(kMaxGenerators) +
                          " generators");
    GrassmannElement weight = (-entangled_bilinear(A)).exp();
    std::vector<int> order = entangled_order(m);
    GrassmannElement r = weight.integrate(order);
    if (!r.is_scalar()) throw internal_error("det: berezin integral is not scalar");
    return r.scalar_part();
}

} // namespace

GrassmannElement entangled_bilinear(const SquareMatrix& A) {
    const int m = A.size();
    GrassmannElement f(2 * m, A.kind());
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            const RingElement& a = A.entry(i, j);
            if (a.is_zero()) continue;
            // psibar_i psi_j = x_{2i} x_{2j-1}
            int p = 2 * i, q = 2 * j - 1;
            uint32_t mask = (1u << (p - 1)) | (1u << (q - 1));
            f.add_term(mask, p < q ? a : -a);
        }
    }
    return f;
}

std::vector<int> entangled_order(int m) {
    std::vector<int> order;
    order.reserve(static_cast<size_t>(2 * m));
    for (int i = 1; i <= m; ++i) {
        order.push_back(2 * i);     // d psibar_i
        order.push_back(2 * i - 1); // d psi_i
    }
    return order;
}

RingElement det(const SquareMatrix& A, Backend backend) {
    switch (backend) {
        case Backend::Auto:
            return A.kind() == RingKind::Rational ? det_bareiss(A) : det_expansion(A);
        case Backend::Direct:
            return det_expansion(A);
        case Backend::Bareiss:
            return det_bareiss(A);
        case Backend::Berezin:
            return det_berezin(A);
        case Backend::All: {
            RingElement d = det_expansion(A);
            if (A.kind() == RingKind::Rational && !(det_bareiss(A) == d))
                throw internal_error("det: bareiss backend disagrees with expansion");
            if (!(det_berezin(A) == d))
                throw internal_error("det: berezin backend disagrees with expansion");
            return d;
        }
    }
    throw internal_error("det: unreachable");
}

RingElement minor_det(const SquareMatrix& A, const IndexSet& I, const IndexSet& J,
                      Backend backend) {
    if (I.size() != J.size())
        throw usage_error("minor_det: |I| = " + std::to_string(I.size()) +
                          " but |J| = " + std::to_string(J.size()));
    return det(A.submatrix_erasing(I, J), backend);
}

RingElement signed_minor(const SquareMatrix& A, const IndexSet& I, const IndexSet& J,
                         Backend backend) {
    RingElement m = minor_det(A, I, J, backend);
    return ((I.sum() + J.sum()) & 1) ? -m : m;
}

RingElement signed_minor_berezin(const SquareMatrix& A, const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size()) throw usage_error("signed_minor_berezin: |I| != |J|");
    const int m = A.size();
    I.check_range(m);
    J.check_range(m);
    if (2 * m > kMaxGenerators)
        throw guard_error("signed_minor_berezin: needs 2n <= " + std::to_string(kMaxGenerators));
    // insertion psi_{j1} psibar_{i1} psi_{j2} psibar_{i2} ...
    GrassmannElement ins = GrassmannElement::unit(2 * m, A.kind());
    for (size_t t = 0; t < I.size(); ++t) {
        int j = J.indices()[t], i = I.indices()[t];
        ins = ins * GrassmannElement::generator(2 * m, 2 * j - 1, A.kind());
        ins = ins * GrassmannElement::generator(2 * m, 2 * i, A.kind());
    }
    GrassmannElement weight = (-entangled_bilinear(A)).exp();
    GrassmannElement r = (ins * weight).integrate(entangled_order(m));
    if (!r.is_scalar()) throw internal_error("signed_minor_berezin: non-scalar result");
    return r.scalar_part();
}

namespace {

// Signed sum over perfect matchings; the classical combinatorial Pfaffian.
RingElement pfaffian_direct(const SquareMatrix& A) {
    const int n = A.size();
    if (n == 0) return RingElement::one(A.kind());
    std::vector<int> free_idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) free_idx[static_cast<size_t>(i)] = i + 1;

    RingElement total = RingElement::zero(A.kind());
    RingElement prod = RingElement::one(A.kind());
    // pair the first free index with each later one; crossing sign is
    // (-1)^(number of free indices skipped)
    std::function<void(std::vector<int>&, const RingElement&, int)> rec =
        [&](std::vector<int>& fr, const RingElement& acc, int sign) {
            if (fr.empty()) {
                total += sign < 0 ? -acc : acc;
                return;
            }
            int a = fr[0];
            for (size_t t = 1; t < fr.size(); ++t) {
                int b = fr[static_cast<size_t>(t)];
                const RingElement& w = A.entry(a, b);
                if (w.is_zero()) continue;
                std::vector<int> rest;
                rest.reserve(fr.size() - 2);
                for (size_t s = 1; s < fr.size(); ++s)
                    if (s != t) rest.push_back(fr[s]);
                int s2 = (static_cast<int>(t - 1) & 1) ? -sign : sign;
                RingElement acc2 = acc * w;
                rec(rest, acc2, s2);
            }
        };
    rec(free_idx, prod, 1);
    return total;
}

RingElement pfaffian_berezin(const SquareMatrix& A) {
    const int n = A.size();
    if (n > kMaxGenerators)
        throw guard_error("pfaffian: berezin backend needs n <= " + std::to_string(kMaxGenerators));
    // -1/2 x A x = -sum_{i<j} A_ij x_i x_j for skew A
    GrassmannElement form(n, A.kind());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            form.add_term((1u << (i - 1)) | (1u << (j - 1)), -A.entry(i, j));
    GrassmannElement weight = form.exp();
    // increasing differential order d x_1 ... d x_n
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i + 1;
    GrassmannElement r = weight.integrate(order);
    if (!r.is_scalar()) throw internal_error("pfaffian: non-scalar result");
    return r.scalar_part();
}

} // namespace

RingElement pfaffian(const SquareMatrix& A, Backend backend) {
    if (A.size() % 2 != 0)
        throw usage_error("pfaffian: matrix size must be even, got " + std::to_string(A.size()));
    if (!A.is_skew_symmetric())
        throw usage_error("pfaffian: matrix is not skew-symmetric");
    switch (backend) {
        case Backend::Auto:
        case Backend::Direct:
            return pfaffian_direct(A);
        case Backend::Berezin:
            return pfaffian_berezin(A);
        case Backend::Bareiss:
            throw usage_error("pfaffian: no bareiss backend");
        case Backend::All: {
            RingElement p = pfaffian_direct(A);
            if (!(pfaffian_berezin(A) == p))
                throw internal_error("pfaffian: berezin backend disagrees with matching sum");
            return p;
        }
    }
    throw internal_error("pfaffian: unreachable");
}

namespace {

RingElement hyperpfaffian_direct(const AntisymmetricTensor& T) {
    const int n = T.ground_size();
    const int r = T.arity();
    if (n % r != 0) return RingElement::zero(T.kind());
    RingElement total = RingElement::zero(T.kind());
    std::vector<int> concat;
    concat.reserve(static_cast<size_t>(n));
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    std::vector<int> block(static_cast<size_t>(r));

    std::function<void(int, const RingElement&)> next_block;
    std::function<void(int, int, int, const RingElement&)> fill;

    next_block = [&](int covered, const RingElement& acc) {
        if (covered == n) {
            RingElement term = acc;
            if (permutation_sign(concat) < 0) term = -term;
            total += term;
            return;
        }
        int lead = 1;
        while (used[static_cast<size_t>(lead)]) ++lead;
        used[static_cast<size_t>(lead)] = true;
        block[0] = lead;
        fill(1, lead + 1, covered, acc);
        used[static_cast<size_t>(lead)] = false;
    };

    // choose the remaining r-1 members of the current block, ascending
    fill = [&](int slot, int from, int covered, const RingElement& acc) {
        if (slot == r) {
            RingElement v = T.at(block);
            if (v.is_zero()) return;
            for (int b : block) concat.push_back(b);
            next_block(covered + r, acc * v);
            concat.resize(concat.size() - static_cast<size_t>(r));
            return;
        }
        for (int v = from; v <= n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = true;
            block[static_cast<size_t>(slot)] = v;
            fill(slot + 1, v + 1, covered, acc);
            used[static_cast<size_t>(v)] = false;
        }
    };

    next_block(0, RingElement::one(T.kind()));
    return total;
}

RingElement hyperpfaffian_berezin(const AntisymmetricTensor& T) {
    const int n = T.ground_size();
    const int r = T.arity();
    if (n > kMaxGenerators)
        throw guard_error("hyperpfaffian: berezin backend needs n <= " +
                          std::to_string(kMaxGenerators));
    if (n % r != 0) return RingElement::zero(T.kind());
    // sum over increasing r-tuples of T_key x_key, then exp and top form
    GrassmannElement form(n, T.kind());
    for (const auto& [key, val] : T.values()) {
        uint32_t mask = 0;
        for (int v : key) mask |= 1u << (v - 1);
        form.add_term(mask, val);
    }
    return form.exp().top_coefficient();
}

} // namespace

RingElement hyperpfaffian(const AntisymmetricTensor& T, Backend backend) {
    if (T.arity() % 2 != 0)
        throw usage_error("hyperpfaffian: tensor arity must be even, got " +
                          std::to_string(T.arity()));
    switch (backend) {
        case Backend::Auto:
        case Backend::Direct:
            return hyperpfaffian_direct(T);
        case Backend::Berezin:
            return hyperpfaffian_berezin(T);
        case Backend::Bareiss:
            throw usage_error("hyperpfaffian: no bareiss backend");
        case Backend::All: {
            RingElement p = hyperpfaffian_direct(T);
            if (!(hyperpfaffian_berezin(T) == p))
                throw internal_error("hyperpfaffian: backends disagree");
            return p;
        }
    }
    throw internal_error("hyperpfaffian: unreachable");
}

AntisymmetricTensor tensor_from_skew(const SquareMatrix& A) {
    if (!A.is_skew_symmetric())
        throw usage_error("tensor_from_skew: matrix is not skew-symmetric");
    AntisymmetricTensor t(A.size(), 2, A.kind());
    for (int i = 1; i <= A.size(); ++i)
        for (int j = i + 1; j <= A.size(); ++j) {
            std::vector<int> key{i, j};
            if (!A.entry(i, j).is_zero()) t.set(key, A.entry(i, j));
        }
    return t;
}

SquareMatrix skew_from_tensor(const AntisymmetricTensor& T) {
    if (T.arity() != 2) throw usage_error("skew_from_tensor: arity must be 2");
    SquareMatrix A(T.ground_size(), T.kind());
    for (const auto& [key, val] : T.values()) {
        A.set(key[0], key[1], val);
        A.set(key[1], key[0], -val);
    }
    return A;
}

} // namespace gbc
