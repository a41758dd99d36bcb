#pragma once

#include "gbc/grassmann.hpp"
#include "gbc/ring.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace gbc {

/// Strictly increasing list of 1-based indices inside [n].
class IndexSet {
public:
    IndexSet() = default;
    /// Validates: distinct, sorted ascending after normalization.
    explicit IndexSet(std::vector<int> indices);

    static IndexSet empty() { return IndexSet(); }

    size_t size() const { return v_.size(); }
    bool contains(int i) const;
    int sum() const;
    IndexSet complement(int n) const;
    const std::vector<int>& indices() const { return v_; }

    void check_range(int n) const;

    bool operator==(const IndexSet& o) const { return v_ == o.v_; }

    std::string str() const;

private:
    std::vector<int> v_;
};

/// Dense n x n matrix of ring elements, row-major; entry(i, j) = A_ij
/// with 1-based indices.
class SquareMatrix {
public:
    SquareMatrix(int n, RingKind kind);
    SquareMatrix(int n, std::vector<RingElement> entries);

    static SquareMatrix identity(int n, RingKind kind);
    /// Fully generic matrix with indeterminate entries named
    /// "<prefix>_<i>_<j>".
    static SquareMatrix symbolic(int n, const std::string& prefix = "a");

    int size() const { return n_; }
    RingKind kind() const { return kind_; }

    const RingElement& entry(int i, int j) const;
    void set(int i, int j, RingElement v);

    SquareMatrix transposed() const;
    /// Rows with index in I and columns with index in J erased.
    SquareMatrix submatrix_erasing(const IndexSet& I, const IndexSet& J) const;

    bool is_skew_symmetric() const;
    bool is_symmetric() const;

private:
    int n_;
    RingKind kind_;
    std::vector<RingElement> e_;
};

/// Completely antisymmetric tensor of arity k on index range [n], stored
/// on strictly increasing key tuples. Lookup at an arbitrary tuple applies
/// the sorting sign and returns zero on repeated indices, so full
/// antisymmetry holds by construction.
class AntisymmetricTensor {
public:
    AntisymmetricTensor(int n, int k, RingKind kind);

    /// Generic symbolic tensor: one indeterminate "<prefix>_<i1>_..._<ik>"
    /// per increasing tuple.
    static AntisymmetricTensor symbolic(int n, int k, const std::string& prefix = "y");

    int ground_size() const { return n_; }
    int arity() const { return k_; }
    RingKind kind() const { return kind_; }

    /// Set the value on a strictly increasing tuple.
    void set(std::span<const int> key, RingElement v);
    /// Signed lookup at an arbitrary tuple.
    RingElement at(std::span<const int> tuple) const;

    /// Contract the first slot: B_{t2..tk} = sum_a T_{a,t2..tk}.
    AntisymmetricTensor contract_first() const;
    /// Remove one index value and relabel the survivors to [n-1],
    /// preserving order.
    AntisymmetricTensor forbid_index(int i) const;

    const std::map<std::vector<int>, RingElement>& values() const { return vals_; }

private:
    int n_;
    int k_;
    RingKind kind_;
    std::map<std::vector<int>, RingElement> vals_;
};

enum class Backend { Auto, Direct, Berezin, Bareiss, All };

Backend backend_from_string(const std::string& s);

/// Column sums B_j = sum_i A_ij.
std::vector<RingElement> column_sums(const SquareMatrix& A);

/// Determinant. Direct = Leibniz-style expansion (memoized over column
/// subsets); Bareiss = fraction-free elimination (rational matrices only);
/// Berezin = entangled Gaussian integral over 2n generators. Auto picks
/// Bareiss for rationals and Direct otherwise. All runs every applicable
/// backend and throws internal_error on disagreement.
RingElement det(const SquareMatrix& A, Backend backend = Backend::Auto);

/// det of A with rows I and columns J erased. Requires |I| = |J|.
RingElement minor_det(const SquareMatrix& A, const IndexSet& I, const IndexSet& J,
                      Backend backend = Backend::Auto);
/// (-1)^(sum I + sum J) * minor_det(A, I, J).
RingElement signed_minor(const SquareMatrix& A, const IndexSet& I, const IndexSet& J,
                         Backend backend = Backend::Auto);
/// The entangled Berezin integral with insertion
/// psi_{j1} psibar_{i1} ... psi_{jp} psibar_{ip}; equals signed_minor.
RingElement signed_minor_berezin(const SquareMatrix& A, const IndexSet& I, const IndexSet& J);

/// Pfaffian of a skew-symmetric matrix of even size. Direct = signed sum
/// over perfect matchings; Berezin = full integral of exp(-1/2 x A x) in
/// increasing differential order.
RingElement pfaffian(const SquareMatrix& A, Backend backend = Backend::Auto);

/// Order-r Hyperpfaffian of an even-arity antisymmetric tensor: the signed
/// sum over partitions of [n] into blocks of size r of the product of
/// tensor entries, the sign being that of the concatenation permutation.
/// Zero when r does not divide n. r = 2 is the ordinary Pfaffian. The
/// Berezin backend evaluates the exponential of the associated degree-r
/// form and reads off the top coefficient; both routes agree exactly.
RingElement hyperpfaffian(const AntisymmetricTensor& T, Backend backend = Backend::Auto);

/// Skew matrix <-> arity-2 antisymmetric tensor conversions.
AntisymmetricTensor tensor_from_skew(const SquareMatrix& A);
SquareMatrix skew_from_tensor(const AntisymmetricTensor& T);

// Entangled-pair conventions over R[psi, psibar]: psi_i is generator 2i-1,
// psibar_i is generator 2i, in a 2m-generator algebra.

/// The bilinear form psibar A psi = sum_ij A_ij psibar_i psi_j.
GrassmannElement entangled_bilinear(const SquareMatrix& A);
/// The differential order (2, 1, 4, 3, ..., 2m, 2m-1) realizing
/// "d psibar_1 d psi_1 ... d psibar_m d psi_m".
std::vector<int> entangled_order(int m);

} // namespace gbc
