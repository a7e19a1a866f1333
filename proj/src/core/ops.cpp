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

#include "core/ops.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace hamred {

double hermiticity_defect(const Matrix &m) {
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Matrix &u) {
    if (u.size() == 0) return 0.0;
    return (u.adjoint() * u - Matrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix ketbra(Eigen::Index dim, Eigen::Index i, Eigen::Index j) {
    Matrix m = Matrix::Zero(dim, dim);
    m(i, j) = 1.0;
    return m;
}

// ---------------------------------------------------------------------------
// HermitianOperator

HermitianOperator::HermitianOperator(Matrix m) {
    require(m.rows() == m.cols(), ErrorCode::InvalidArgument, "operator matrix must be square");
    double defect = hermiticity_defect(m);
    if (defect > tol::structural) {
        std::ostringstream msg;
        msg << "operator is not Hermitian (max |M - M^dagger| = " << defect << ")";
        fail(ErrorCode::InvalidArgument, msg.str());
    }
    m_ = (m + m.adjoint()) * 0.5;
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim) {
    return HermitianOperator(Matrix::Zero(dim, dim), Trusted{});
}

HermitianOperator HermitianOperator::identity(Eigen::Index dim) {
    return HermitianOperator(Matrix::Identity(dim, dim), Trusted{});
}

bool HermitianOperator::is_real() const {
    const Complex *p = m_.data();
    for (Eigen::Index i = 0; i < m_.size(); ++i) {
        if (p[i].imag() != 0.0) return false;
    }
    return true;
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator &o) const {
    require(dim() == o.dim(), ErrorCode::InvalidArgument, "operator dimensions differ");
    return HermitianOperator(m_ + o.m_, Trusted{});
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator &o) const {
    require(dim() == o.dim(), ErrorCode::InvalidArgument, "operator dimensions differ");
    return HermitianOperator(m_ - o.m_, Trusted{});
}

HermitianOperator HermitianOperator::scaled(double factor) const {
    return HermitianOperator(m_ * factor, Trusted{});
}

// ---------------------------------------------------------------------------
// OperatorSum

OperatorSum::OperatorSum(std::vector<int> site_dims) : site_dims_(std::move(site_dims)) {
    for (int d : site_dims_) {
        require(d >= 1, ErrorCode::InvalidArgument, "site dimension must be at least 1");
    }
}

OperatorSum OperatorSum::qubits(int n) {
    require(n >= 0, ErrorCode::InvalidArgument, "qubit count must be non-negative");
    return OperatorSum(std::vector<int>(static_cast<std::size_t>(n), 2));
}

std::size_t OperatorSum::ambient_dim() const {
    std::size_t dim = 1;
    for (int d : site_dims_) {
        require(dim <= (std::size_t{1} << 62) / static_cast<std::size_t>(d), ErrorCode::CapExceeded,
                "ambient dimension overflows");
        dim *= static_cast<std::size_t>(d);
    }
    return dim;
}

void OperatorSum::add(LocalTerm term) {
    std::size_t block_dim = 1;
    std::vector<bool> seen(site_dims_.size(), false);
    for (int s : term.support) {
        if (s < 0 || static_cast<std::size_t>(s) >= site_dims_.size()) {
            fail(ErrorCode::InvalidArgument, "term support index " + std::to_string(s) + " out of range");
        }
        require(!seen[s], ErrorCode::InvalidArgument, "term support has a repeated index");
        seen[s] = true;
        block_dim *= static_cast<std::size_t>(site_dims_[s]);
    }
    require(term.block.rows() == term.block.cols(), ErrorCode::InvalidArgument, "term block must be square");
    if (static_cast<std::size_t>(term.block.rows()) != block_dim) {
        fail(ErrorCode::InvalidArgument, "term block has dimension " + std::to_string(term.block.rows()) +
                                             " but its support spans " + std::to_string(block_dim));
    }
    require(hermiticity_defect(term.block) <= tol::structural, ErrorCode::InvalidArgument,
            "term block is not Hermitian");
    require(std::isfinite(term.weight), ErrorCode::InvalidArgument, "term weight must be finite");
    terms_.push_back(std::move(term));
}

void OperatorSum::add(std::vector<int> support, Matrix block, double weight) {
    add(LocalTerm{std::move(support), std::move(block), weight});
}

void OperatorSum::append(const OperatorSum &other, double factor) {
    require(other.site_dims_ == site_dims_, ErrorCode::InvalidArgument, "operator sums have different site layouts");
    for (const LocalTerm &t : other.terms_) {
        terms_.push_back(LocalTerm{t.support, t.block, t.weight * factor});
    }
}

OperatorSum OperatorSum::scaled(double factor) const {
    OperatorSum out(site_dims_);
    out.append(*this, factor);
    return out;
}

// ---------------------------------------------------------------------------
// Embedding kernel

namespace {

// Visits every nonzero (row, col, value) of weight * (block on support, identity
// elsewhere) over the given site layout.
template <class Visit>
void for_each_entry(const LocalTerm &term, std::span<const int> site_dims, Visit &&visit) {
    const std::size_t n_sites = site_dims.size();
    std::vector<std::size_t> stride(n_sites, 1);
    std::size_t dim = 1;
    for (std::size_t i = n_sites; i-- > 0;) {
        stride[i] = dim;
        dim *= static_cast<std::size_t>(site_dims[i]);
    }
    const std::size_t k = term.support.size();
    std::vector<std::size_t> local_stride(k, 1);
    std::size_t block_dim = 1;
    for (std::size_t j = k; j-- > 0;) {
        local_stride[j] = block_dim;
        block_dim *= static_cast<std::size_t>(site_dims[term.support[j]]);
    }
    // Offset in the ambient index contributed by each local basis index.
    std::vector<std::size_t> offset(block_dim, 0);
    for (std::size_t lc = 0; lc < block_dim; ++lc) {
        std::size_t o = 0;
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t digit = (lc / local_stride[j]) % static_cast<std::size_t>(site_dims[term.support[j]]);
            o += digit * stride[term.support[j]];
        }
        offset[lc] = o;
    }
    // Sparse rows of the weighted block.
    std::vector<std::vector<std::pair<std::size_t, Complex>>> rows(block_dim);
    for (std::size_t lr = 0; lr < block_dim; ++lr) {
        for (std::size_t lc = 0; lc < block_dim; ++lc) {
            Complex v = term.block(static_cast<Eigen::Index>(lr), static_cast<Eigen::Index>(lc)) * term.weight;
            if (v != Complex(0.0, 0.0)) rows[lr].emplace_back(lc, v);
        }
    }
    for (std::size_t row = 0; row < dim; ++row) {
        std::size_t local_row = 0;
        std::size_t base = row;
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t s = static_cast<std::size_t>(term.support[j]);
            std::size_t digit = (row / stride[s]) % static_cast<std::size_t>(site_dims[s]);
            local_row += digit * local_stride[j];
            base -= digit * stride[s];
        }
        for (const auto &[lc, v] : rows[local_row]) visit(row, base + offset[lc], v);
    }
}

std::size_t checked_dense_dim(std::span<const int> site_dims) {
    std::size_t dim = 1;
    for (int d : site_dims) {
        dim *= static_cast<std::size_t>(d);
        if (dim > dim_cap()) {
            fail(ErrorCode::CapExceeded, "dense dimension exceeds cap " + std::to_string(dim_cap()));
        }
    }
    return dim;
}

void validate_term(const LocalTerm &term, std::span<const int> site_dims) {
    OperatorSum probe(std::vector<int>(site_dims.begin(), site_dims.end()));
    probe.add(term);
}

}  // namespace

HermitianOperator embed(const LocalTerm &term, std::span<const int> site_dims) {
    validate_term(term, site_dims);
    std::size_t dim = checked_dense_dim(site_dims);
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    // The weight belongs to the sum, not to the embedded block.
    const LocalTerm unit{term.support, term.block, 1.0};
    for_each_entry(unit, site_dims, [&](std::size_t r, std::size_t c, Complex v) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += v;
    });
    return HermitianOperator(std::move(m));
}

HermitianOperator embed(const LocalTerm &term, int n_qubits) {
    require(n_qubits >= 0, ErrorCode::InvalidArgument, "qubit count must be non-negative");
    std::vector<int> dims(static_cast<std::size_t>(n_qubits), 2);
    return embed(term, std::span<const int>(dims));
}

void accumulate(const OperatorSum &sum, Matrix &into, double factor) {
    std::size_t dim = checked_dense_dim(sum.site_dims());
    require(static_cast<std::size_t>(into.rows()) == dim && into.rows() == into.cols(), ErrorCode::InvalidArgument,
            "accumulator dimension does not match the operator sum");
    for (const LocalTerm &t : sum.terms()) {
        for_each_entry(t, sum.site_dims(), [&](std::size_t r, std::size_t c, Complex v) {
            into(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += factor * v;
        });
    }
}

HermitianOperator assemble(const OperatorSum &sum) {
    require(!sum.empty(), ErrorCode::InvalidArgument, "cannot assemble an empty operator sum");
    return assemble_or_zero(sum);
}

HermitianOperator assemble_or_zero(const OperatorSum &sum) {
    std::size_t dim = checked_dense_dim(sum.site_dims());
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    accumulate(sum, m);
    return HermitianOperator(std::move(m));
}

Vector apply(const OperatorSum &sum, const Vector &x) {
    std::size_t dim = sum.ambient_dim();
    require(static_cast<std::size_t>(x.size()) == dim, ErrorCode::InvalidArgument,
            "vector dimension does not match the operator sum");
    Vector y = Vector::Zero(x.size());
    for (const LocalTerm &t : sum.terms()) {
        for_each_entry(t, sum.site_dims(), [&](std::size_t r, std::size_t c, Complex v) {
            y(static_cast<Eigen::Index>(r)) += v * x(static_cast<Eigen::Index>(c));
        });
    }
    return y;
}

double expectation(const OperatorSum &sum, const Vector &x) { return x.dot(apply(sum, x)).real(); }

double expectation(const HermitianOperator &h, const Vector &x) {
    require(h.dim() == x.size(), ErrorCode::InvalidArgument, "vector dimension does not match the operator");
    return x.dot(h.matrix() * x).real();
}

// ---------------------------------------------------------------------------
// Spectra

namespace {

Eigensystem eig_impl(const HermitianOperator &h, bool want_vectors) {
    const Eigen::Index n = h.dim();
    if (static_cast<std::size_t>(n) > dim_cap()) {
        fail(ErrorCode::CapExceeded, "eigendecomposition of dimension " + std::to_string(n) + " exceeds cap " +
                                         std::to_string(dim_cap()));
    }
    Eigensystem out;
    out.values.resize(n);
    if (n == 0) return out;
    const char jobz = want_vectors ? 'V' : 'N';
    lapack_int info = 0;
    if (h.is_real()) {
        Eigen::MatrixXd a = h.matrix().real();
        info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, jobz, 'U', static_cast<lapack_int>(n), a.data(),
                              static_cast<lapack_int>(n), out.values.data());
        if (want_vectors) out.vectors = a.cast<Complex>();
    } else {
        Matrix a = h.matrix();
        info = LAPACKE_zheevd(LAPACK_COL_MAJOR, jobz, 'U', static_cast<lapack_int>(n), a.data(),
                              static_cast<lapack_int>(n), out.values.data());
        if (want_vectors) out.vectors = std::move(a);
    }
    if (info != 0) fail(ErrorCode::Internal, "LAPACK eigensolver failed with info " + std::to_string(info));
    return out;
}

double null_cut(const RealVector &values, double null_tol) {
    double norm = values.size() == 0 ? 0.0 : values.cwiseAbs().maxCoeff();
    return null_tol * std::max(1.0, norm);
}

}  // namespace

Eigensystem eig(const HermitianOperator &h) { return eig_impl(h, true); }

RealVector eigenvalues(const HermitianOperator &h) { return eig_impl(h, false).values; }

double min_eigenvalue(const HermitianOperator &h) {
    require(h.dim() > 0, ErrorCode::InvalidArgument, "empty operator has no eigenvalues");
    return eigenvalues(h)(0);
}

double max_eigenvalue(const HermitianOperator &h) {
    require(h.dim() > 0, ErrorCode::InvalidArgument, "empty operator has no eigenvalues");
    RealVector v = eigenvalues(h);
    return v(v.size() - 1);
}

double spectral_norm(const HermitianOperator &h) {
    if (h.dim() == 0) return 0.0;
    return eigenvalues(h).cwiseAbs().maxCoeff();
}

double min_nonzero_eigenvalue(const HermitianOperator &h, double null_tol) {
    RealVector v = eigenvalues(h);
    double cut = null_cut(v, null_tol);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) > cut) return v(i);
    }
    fail(ErrorCode::Precondition, "operator has no eigenvalue above the null tolerance");
}

bool is_psd_shifted(const HermitianOperator &h, double alpha, double tolerance) {
    return min_eigenvalue(h) >= alpha - tolerance;
}

// ---------------------------------------------------------------------------
// Subspaces

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {
    if (basis_.cols() == 0) return;
    require(basis_.cols() <= basis_.rows(), ErrorCode::InvalidArgument, "subspace has more columns than rows");
    double defect = unitarity_defect(basis_);
    if (defect > tol::structural) {
        std::ostringstream msg;
        msg << "subspace basis is not orthonormal (max |B^dagger B - I| = " << defect << ")";
        fail(ErrorCode::InvalidArgument, msg.str());
    }
}

Subspace Subspace::span_of(const Matrix &vectors, double rank_tol) {
    if (vectors.cols() == 0) return Subspace(Matrix(vectors.rows(), 0));
    Eigen::BDCSVD<Matrix> svd(vectors, Eigen::ComputeThinU);
    const RealVector &s = svd.singularValues();
    double cut = rank_tol * std::max(1.0, s.size() ? s(0) : 0.0);
    Eigen::Index rank = 0;
    while (rank < s.size() && s(rank) > cut) ++rank;
    return Subspace(svd.matrixU().leftCols(rank));
}

Subspace null_space(const HermitianOperator &h, double null_tol) {
    Eigensystem es = eig(h);
    double cut = null_cut(es.values, null_tol);
    Eigen::Index k = 0;
    while (k < es.values.size() && es.values(k) <= cut) ++k;
    return Subspace(es.vectors.leftCols(k));
}

HermitianOperator restrict_to(const HermitianOperator &h, const Subspace &s) {
    require(h.dim() == s.ambient_dim(), ErrorCode::InvalidArgument, "subspace ambient dimension differs from operator");
    Matrix r = s.basis().adjoint() * h.matrix() * s.basis();
    return HermitianOperator((r + r.adjoint()) * 0.5);
}

double subspace_cosine(const Subspace &s1, const Subspace &s2) {
    require(s1.ambient_dim() == s2.ambient_dim(), ErrorCode::InvalidArgument, "subspaces have different ambient dimensions");
    require(s1.rank() > 0 && s2.rank() > 0, ErrorCode::InvalidArgument, "subspace angle needs nonzero subspaces");
    Matrix overlap = s1.basis().adjoint() * s2.basis();
    Eigen::BDCSVD<Matrix> svd(overlap);
    double sigma = svd.singularValues()(0);
    return std::clamp(sigma, 0.0, 1.0);
}

double subspace_angle(const Subspace &s1, const Subspace &s2) { return std::acos(subspace_cosine(s1, s2)); }

// ---------------------------------------------------------------------------
// Lemma checkers

GeometricLemmaReport check_geometric_lemma(const HermitianOperator &a1, const HermitianOperator &a2, double null_tol,
                                           double slack) {
    require(a1.dim() == a2.dim(), ErrorCode::InvalidArgument, "operators have different dimensions");
    Subspace n1 = null_space(a1, null_tol);
    Subspace n2 = null_space(a2, null_tol);
    GeometricLemmaReport rep;
    // A positive definite operator has an empty null space, and the angle to
    // an empty space is taken to be a right angle.
    if (n1.rank() == 0 || n2.rank() == 0) {
        rep.cos_angle = 0.0;
    } else {
        rep.cos_angle = subspace_cosine(n1, n2);
        if (rep.cos_angle >= 1.0 - 1e-9) {
            fail(ErrorCode::Precondition, "null spaces intersect nontrivially");
        }
    }
    rep.angle = std::acos(rep.cos_angle);
    rep.v = std::min(min_nonzero_eigenvalue(a1, null_tol), min_nonzero_eigenvalue(a2, null_tol));
    double half = std::sin(rep.angle / 2.0);
    rep.bound = 2.0 * rep.v * half * half;
    rep.lambda_min = min_eigenvalue(a1 + a2);
    rep.margin = rep.lambda_min - rep.bound;
    rep.holds = rep.lambda_min >= rep.bound - slack;
    return rep;
}

ProjectionLemmaReport check_projection_lemma(const HermitianOperator &y1, const HermitianOperator &y2, double null_tol,
                                             double slack) {
    require(y1.dim() == y2.dim(), ErrorCode::InvalidArgument, "operators have different dimensions");
    ProjectionLemmaReport rep;
    Eigensystem es2 = eig(y2);
    double cut = null_cut(es2.values, null_tol);
    if (es2.values.size() > 0 && es2.values(0) < -cut) {
        rep.reason = "Y2 is not positive semidefinite";
        return rep;
    }
    Eigen::Index k = 0;
    while (k < es2.values.size() && es2.values(k) <= cut) ++k;
    if (k == es2.values.size()) {
        rep.reason = "Y2 has no nonzero eigenvalue";
        return rep;
    }
    if (k == 0) {
        rep.reason = "Y2 has an empty null space";
        return rep;
    }
    rep.gap = es2.values(k);
    rep.y1_norm = spectral_norm(y1);
    if (!(rep.gap > 2.0 * rep.y1_norm)) {
        std::ostringstream msg;
        msg << "gap " << rep.gap << " does not exceed 2||Y1|| = " << 2.0 * rep.y1_norm;
        rep.reason = msg.str();
        return rep;
    }
    rep.applicable = true;
    Subspace s(es2.vectors.leftCols(k));
    rep.lambda_restricted = min_eigenvalue(restrict_to(y1, s));
    rep.lambda = min_eigenvalue(y1 + y2);
    rep.lower_bound = rep.lambda_restricted - rep.y1_norm * rep.y1_norm / (rep.gap - 2.0 * rep.y1_norm);
    rep.lower_margin = rep.lambda - rep.lower_bound;
    rep.upper_margin = rep.lambda_restricted - rep.lambda;
    rep.lower_holds = rep.lower_margin >= -slack;
    rep.upper_holds = rep.upper_margin >= -slack;
    return rep;
}

}  // namespace hamred
