// Copyright 2026 The hamred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense operators on tensor-product spaces, their exact spectra, and numeric
// checks of two classical eigenvalue bounds for sums of PSD operators.
//
// Spaces are products of "sites". A site is usually a qubit (dimension 2), but
// the legal-clock picture uses a single site of dimension L+1. Site 0 is the
// most significant digit of a basis index, so X on qubit 0 of two qubits is
// X (x) I.

#ifndef HAMRED_CORE_OPS_HPP
#define HAMRED_CORE_OPS_HPP

#include <span>
#include <string>
#include <vector>

#include "core/common.hpp"

namespace hamred {

class HermitianOperator {
  public:
    HermitianOperator() = default;
    /// Throws InvalidArgument unless `m` is square and Hermitian to 1e-10.
    /// The stored matrix is the exact Hermitian part (M + M^dagger)/2.
    explicit HermitianOperator(Matrix m);

    static HermitianOperator zero(Eigen::Index dim);
    static HermitianOperator identity(Eigen::Index dim);

    Eigen::Index dim() const { return m_.rows(); }
    const Matrix &matrix() const { return m_; }
    /// True when every entry has an exactly zero imaginary part.
    bool is_real() const;

    HermitianOperator operator+(const HermitianOperator &o) const;
    HermitianOperator operator-(const HermitianOperator &o) const;
    HermitianOperator scaled(double factor) const;

  private:
    struct Trusted {};
    HermitianOperator(Matrix m, Trusted) : m_(std::move(m)) {}
    Matrix m_;
};

struct LocalTerm {
    std::vector<int> support;
    Matrix block;
    double weight = 1.0;
};

/// Weighted sum of local terms over a fixed list of site dimensions.
class OperatorSum {
  public:
    OperatorSum() = default;
    explicit OperatorSum(std::vector<int> site_dims);
    static OperatorSum qubits(int n);

    const std::vector<int> &site_dims() const { return site_dims_; }
    const std::vector<LocalTerm> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    std::size_t ambient_dim() const;

    /// Validates support (distinct, in range), block shape and Hermiticity.
    void add(LocalTerm term);
    void add(std::vector<int> support, Matrix block, double weight = 1.0);
    /// Appends every term of `other` with its weight multiplied by `factor`.
    void append(const OperatorSum &other, double factor = 1.0);
    OperatorSum scaled(double factor) const;

  private:
    std::vector<int> site_dims_;
    std::vector<LocalTerm> terms_;
};

/// Tensor `term.block` with identity on the other sites. The weight is not
/// applied here; assemble() multiplies it in.
HermitianOperator embed(const LocalTerm &term, std::span<const int> site_dims);
HermitianOperator embed(const LocalTerm &term, int n_qubits);
/// Sum of embedded terms. Throws InvalidArgument for an empty sum.
HermitianOperator assemble(const OperatorSum &sum);
/// Like assemble, but an empty sum yields the zero operator.
HermitianOperator assemble_or_zero(const OperatorSum &sum);
/// Adds factor * sum into a dense accumulator of matching dimension.
void accumulate(const OperatorSum &sum, Matrix &into, double factor = 1.0);
/// Matrix-free product (sum) * x.
Vector apply(const OperatorSum &sum, const Vector &x);
double expectation(const OperatorSum &sum, const Vector &x);
double expectation(const HermitianOperator &h, const Vector &x);

struct Eigensystem {
    RealVector values;  // ascending
    Matrix vectors;     // column k belongs to values[k]
};

/// Dense exact eigendecomposition. Throws CapExceeded above dim_cap().
Eigensystem eig(const HermitianOperator &h);
RealVector eigenvalues(const HermitianOperator &h);
double min_eigenvalue(const HermitianOperator &h);
double max_eigenvalue(const HermitianOperator &h);
/// Max |eigenvalue|.
double spectral_norm(const HermitianOperator &h);
/// Smallest eigenvalue above null_tol * max(1, ||h||). Throws Precondition
/// when every eigenvalue is below the cut (the zero operator).
double min_nonzero_eigenvalue(const HermitianOperator &h, double null_tol = tol::null);
bool is_psd_shifted(const HermitianOperator &h, double alpha, double tolerance = tol::slack);

class Subspace {
  public:
    Subspace() = default;
    /// Columns must be orthonormal to 1e-10; zero columns is allowed.
    explicit Subspace(Matrix basis);
    /// Orthonormal basis of the column span of `vectors` (rank-revealing).
    static Subspace span_of(const Matrix &vectors, double rank_tol = 1e-10);

    Eigen::Index ambient_dim() const { return basis_.rows(); }
    Eigen::Index rank() const { return basis_.cols(); }
    const Matrix &basis() const { return basis_; }
    Matrix projector() const { return basis_ * basis_.adjoint(); }

  private:
    Matrix basis_;
};

/// Eigenvectors with eigenvalue at most null_tol * max(1, ||h||).
Subspace null_space(const HermitianOperator &h, double null_tol = tol::null);
/// S^dagger H S in the basis of S.
HermitianOperator restrict_to(const HermitianOperator &h, const Subspace &s);
/// Largest singular value of S1^dagger S2, clamped to [0, 1].
double subspace_cosine(const Subspace &s1, const Subspace &s2);
/// arccos(subspace_cosine), in [0, pi/2].
double subspace_angle(const Subspace &s1, const Subspace &s2);

struct GeometricLemmaReport {
    double v = 0;           // min over both operators of the smallest nonzero eigenvalue
    double angle = 0;       // angle between the two null spaces
    double cos_angle = 0;
    double bound = 0;       // 2 v sin^2(angle / 2)
    double lambda_min = 0;  // smallest eigenvalue of A1 + A2
    double margin = 0;      // lambda_min - bound
    bool holds = false;
};

/// Throws Precondition when the null spaces intersect nontrivially (largest
/// singular value of N1^dagger N2 within 1e-9 of 1). An empty null space
/// counts as orthogonal to everything.
GeometricLemmaReport check_geometric_lemma(const HermitianOperator &a1, const HermitianOperator &a2,
                                           double null_tol = tol::null, double slack = tol::slack);

struct ProjectionLemmaReport {
    bool applicable = false;
    std::string reason;            // why the hypothesis failed, when it did
    double gap = 0;                // J: smallest nonzero eigenvalue of Y2
    double y1_norm = 0;            // ||Y1||
    double lambda = 0;             // smallest eigenvalue of Y1 + Y2
    double lambda_restricted = 0;  // smallest eigenvalue of Y1 on null(Y2)
    double lower_bound = 0;        // lambda_restricted - ||Y1||^2 / (J - 2||Y1||)
    double lower_margin = 0;       // lambda - lower_bound
    double upper_margin = 0;       // lambda_restricted - lambda
    bool lower_holds = false;
    bool upper_holds = false;

    bool holds() const { return applicable && lower_holds && upper_holds; }
};

/// Never throws for a failed hypothesis; `applicable` is false instead.
ProjectionLemmaReport check_projection_lemma(const HermitianOperator &y1, const HermitianOperator &y2,
                                             double null_tol = tol::null, double slack = tol::slack);

/// Kronecker product, a most significant.
Matrix kron(const Matrix &a, const Matrix &b);
/// |i><j| in dimension dim.
Matrix ketbra(Eigen::Index dim, Eigen::Index i, Eigen::Index j);

/// Max |M - M^dagger| entry.
double hermiticity_defect(const Matrix &m);
/// Max |U^dagger U - I| entry.
double unitarity_defect(const Matrix &u);

}  // namespace hamred

#endif  // HAMRED_CORE_OPS_HPP
