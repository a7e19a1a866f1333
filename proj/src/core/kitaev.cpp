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

#include "core/kitaev.hpp"

#include <cmath>
#include <numbers>

namespace hamred {

const char *clock_mode_name(ClockMode mode) { return mode == ClockMode::Legal ? "legal" : "unary"; }

ClockMode clock_mode_from_name(const std::string &name) {
    if (name == "legal") return ClockMode::Legal;
    if (name == "unary") return ClockMode::Unary;
    fail(ErrorCode::InvalidArgument, "unknown clock mode '" + name + "' (expected legal or unary)");
}

const char *term_kind_name(TermKind kind) {
    switch (kind) {
        case TermKind::In: return "in";
        case TermKind::Prop: return "prop";
        case TermKind::Stab: return "stab";
        case TermKind::Out: return "out";
    }
    return "?";
}

namespace {

constexpr std::size_t kMaxVectorDim = std::size_t{1} << 26;

Matrix proj(int which) { return ketbra(2, which, which); }

// A clock factor written as a list of (site, matrix) pieces.
struct ClockPiece {
    std::vector<int> sites;
    Matrix block = Matrix::Identity(1, 1);

    void push(int site, const Matrix &m) {
        sites.push_back(site);
        block = kron(block, m);
    }
};

}  // namespace

std::vector<int> KitaevHamiltonian::clock_sites() const {
    const int base = n_circuit_qubits();
    if (clock_.mode == ClockMode::Legal) return {base};
    std::vector<int> out;
    for (int i = 0; i < clock_.L; ++i) out.push_back(base + i);
    return out;
}

std::size_t KitaevHamiltonian::clock_dim() const {
    if (clock_.mode == ClockMode::Legal) return static_cast<std::size_t>(clock_.L) + 1;
    return std::size_t{1} << clock_.L;
}

std::size_t KitaevHamiltonian::dim() const { return OperatorSum(site_dims_).ambient_dim(); }

std::size_t KitaevHamiltonian::clock_index(int t) const {
    require(t >= 0 && t <= clock_.L, ErrorCode::InvalidArgument, "clock time out of range");
    if (clock_.mode == ClockMode::Legal) return static_cast<std::size_t>(t);
    return (std::size_t{1} << clock_.L) - (std::size_t{1} << (clock_.L - t));
}

OperatorSum KitaevHamiltonian::group(TermKind kind) const {
    OperatorSum out(site_dims_);
    for (const KitaevTerm &t : terms_) {
        if (t.kind == kind) out.add(t.term);
    }
    return out;
}

OperatorSum KitaevHamiltonian::penalty() const {
    OperatorSum out(site_dims_);
    for (const KitaevTerm &t : terms_) {
        if (t.kind != TermKind::Out) out.add(t.term);
    }
    return out;
}

OperatorSum KitaevHamiltonian::total() const {
    OperatorSum out(site_dims_);
    for (const KitaevTerm &t : terms_) out.add(t.term);
    return out;
}

LocalTerm KitaevHamiltonian::at_clock_start(std::vector<int> qubits, const Matrix &qubit_block, double weight) const {
    LocalTerm t{std::move(qubits), qubit_block, weight};
    const int base = n_circuit_qubits();
    if (clock_.mode == ClockMode::Legal) {
        t.support.push_back(base);
        t.block = kron(qubit_block, ketbra(clock_.L + 1, 0, 0));
    } else if (clock_.L >= 1) {
        t.support.push_back(base);
        t.block = kron(qubit_block, proj(0));
    }
    return t;
}

LocalTerm KitaevHamiltonian::at_clock_end(std::vector<int> qubits, const Matrix &qubit_block, double weight) const {
    LocalTerm t{std::move(qubits), qubit_block, weight};
    const int base = n_circuit_qubits();
    if (clock_.mode == ClockMode::Legal) {
        t.support.push_back(base);
        t.block = kron(qubit_block, ketbra(clock_.L + 1, clock_.L, clock_.L));
    } else if (clock_.L >= 1) {
        t.support.push_back(base + clock_.L - 1);
        t.block = kron(qubit_block, proj(1));
    }
    return t;
}

KitaevHamiltonian compile(const VerifierCircuit &v, ClockMode mode) {
    VerifierCircuit circ = normalize_output(v);
    for (const Gate &g : circ.circuit.gates()) {
        if (g.arity() > 2) {
            fail(ErrorCode::InvalidArgument, std::string("gate ") + gate_kind_name(g.kind) + " acts on " +
                                                 std::to_string(g.arity()) +
                                                 " qubits; decompose the circuit before compiling");
        }
    }
    KitaevHamiltonian k;
    k.circuit_ = circ;
    const int n_qubits = circ.circuit.n_qubits();
    const int L = static_cast<int>(circ.circuit.size());
    k.clock_ = ClockEncoding{mode, L};
    k.site_dims_.assign(static_cast<std::size_t>(n_qubits), 2);
    if (mode == ClockMode::Legal) {
        k.site_dims_.push_back(L + 1);
    } else {
        k.site_dims_.insert(k.site_dims_.end(), static_cast<std::size_t>(L), 2);
    }
    OperatorSum validator(k.site_dims_);
    (void)validator.ambient_dim();

    auto push = [&](TermKind kind, int index, LocalTerm term) {
        validator.add(term);
        k.terms_.push_back(KitaevTerm{kind, index, std::move(term)});
    };

    for (int i = 0; i < circ.p; ++i) {
        push(TermKind::In, i + 1, k.at_clock_start({circ.c(i)}, proj(1)));
    }

    const int d0 = n_qubits;  // first clock site
    for (int j = 1; j <= L; ++j) {
        const Gate &g = circ.circuit.gates()[static_cast<std::size_t>(j - 1)];
        const Matrix u = g.unitary();
        ClockPiece pp;  // |j><j| + |j-1><j-1|
        ClockPiece tt;  // |j><j-1|
        if (mode == ClockMode::Legal) {
            Matrix p_c = ketbra(L + 1, j, j) + ketbra(L + 1, j - 1, j - 1);
            pp.push(d0, p_c);
            tt.push(d0, ketbra(L + 1, j, j - 1));
        } else {
            // D_i lives at site d0 + i - 1.
            if (j >= 2) {
                pp.push(d0 + j - 2, proj(1));
                tt.push(d0 + j - 2, proj(1));
            }
            pp.push(d0 + j - 1, Matrix::Identity(2, 2));
            tt.push(d0 + j - 1, ketbra(2, 1, 0));
            if (j <= L - 1) {
                pp.push(d0 + j, proj(0));
                tt.push(d0 + j, proj(0));
            }
        }
        const Eigen::Index gd = u.rows();
        Matrix block = 0.5 * (kron(Matrix::Identity(gd, gd), pp.block) - kron(u, tt.block) -
                              kron(u.adjoint(), tt.block.adjoint()));
        std::vector<int> support = g.targets;
        support.insert(support.end(), pp.sites.begin(), pp.sites.end());
        push(TermKind::Prop, j, LocalTerm{std::move(support), std::move(block), 1.0});
    }

    if (mode == ClockMode::Unary) {
        for (int i = 1; i + 1 <= L; ++i) {
            push(TermKind::Stab, i, LocalTerm{{d0 + i - 1, d0 + i}, ketbra(4, 1, 1), 1.0});
        }
    }

    const int out = circ.m > 0 ? circ.b(0) : circ.output_qubit;
    push(TermKind::Out, 1, k.at_clock_end({out}, proj(0)));
    return k;
}

Vector history_state(const KitaevHamiltonian &k, const Vector &psi_ab) {
    const VerifierCircuit &v = k.circuit();
    const int nq = k.n_circuit_qubits();
    require(psi_ab.size() == (Eigen::Index{1} << (v.n + v.m)), ErrorCode::InvalidArgument,
            "proof state dimension differs from registers A and B");
    require(std::abs(psi_ab.norm() - 1.0) <= 1e-9, ErrorCode::InvalidArgument, "proof state must have unit norm");
    const std::size_t dim = k.dim();
    require(dim <= kMaxVectorDim && nq <= 26, ErrorCode::CapExceeded, "history state exceeds the vector cap");
    const std::size_t cd = k.clock_dim();
    Vector state = Vector::Zero(Eigen::Index{1} << nq);
    for (Eigen::Index i = 0; i < psi_ab.size(); ++i) state(i << v.p) = psi_ab(i);
    Vector out = Vector::Zero(static_cast<Eigen::Index>(dim));
    const double norm = 1.0 / std::sqrt(static_cast<double>(k.L() + 1));
    auto deposit = [&](int t) {
        const std::size_t ci = k.clock_index(t);
        for (Eigen::Index c = 0; c < state.size(); ++c) {
            if (state(c) != Complex(0.0, 0.0)) out(static_cast<Eigen::Index>(static_cast<std::size_t>(c) * cd + ci)) = norm * state(c);
        }
    };
    deposit(0);
    for (int t = 1; t <= k.L(); ++t) {
        apply_gate(state, nq, v.circuit.gates()[static_cast<std::size_t>(t - 1)]);
        deposit(t);
    }
    return out;
}

Subspace hist_projector(const KitaevHamiltonian &k) {
    const Eigen::Index count = Eigen::Index{1} << (k.n() + k.m());
    const std::size_t dim = k.dim();
    require(dim <= kMaxVectorDim && static_cast<std::size_t>(count) * dim <= (std::size_t{1} << 28),
            ErrorCode::CapExceeded, "history-state basis exceeds the memory cap");
    Matrix basis(static_cast<Eigen::Index>(dim), count);
    for (Eigen::Index i = 0; i < count; ++i) {
        Vector e = Vector::Zero(count);
        e(i) = 1.0;
        basis.col(i) = history_state(k, e);
    }
    return Subspace(std::move(basis));
}

KitaevBounds kitaev_bounds(const KitaevHamiltonian &k, double eps) {
    require(eps >= 0.0 && eps < 1.0, ErrorCode::InvalidArgument, "epsilon must lie in [0, 1)");
    KitaevBounds out;
    out.a = eps / (k.L() + 1);
    out.b = min_eigenvalue(assemble(k.total()));
    const double l = std::max(1, k.L());
    out.b_floor = 1e-3 * (1.0 - std::sqrt(eps)) / (l * l * l);
    return out;
}

Matrix change_of_basis_W(const KitaevHamiltonian &k) {
    require(k.clock().mode == ClockMode::Legal, ErrorCode::Precondition,
            "the change of basis is defined in the legal clock picture only");
    const int nq = k.n_circuit_qubits();
    const std::size_t dim = k.dim();
    require(dim <= dim_cap(), ErrorCode::CapExceeded, "change of basis exceeds the dimension cap");
    const Eigen::Index cdim = Eigen::Index{1} << nq;
    const Eigen::Index cd = k.L() + 1;
    Matrix w = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    Matrix prefix = Matrix::Identity(cdim, cdim);  // V_t .. V_1
    for (int t = 0; t <= k.L(); ++t) {
        if (t > 0) {
            const Gate &g = k.circuit().circuit.gates()[static_cast<std::size_t>(t - 1)];
            for (Eigen::Index c = 0; c < cdim; ++c) {
                Vector col = prefix.col(c);
                apply_gate(col, nq, g);
                prefix.col(c) = col;
            }
        }
        Matrix inv = prefix.adjoint();
        for (Eigen::Index r = 0; r < cdim; ++r) {
            for (Eigen::Index c = 0; c < cdim; ++c) {
                if (inv(r, c) != Complex(0.0, 0.0)) w(r * cd + t, c * cd + t) = inv(r, c);
            }
        }
    }
    return w;
}

Matrix propagation_operator(int L) {
    require(L >= 0, ErrorCode::InvalidArgument, "L must be non-negative");
    Matrix e = Matrix::Zero(L + 1, L + 1);
    for (int j = 1; j <= L; ++j) {
        e(j, j) += 0.5;
        e(j - 1, j - 1) += 0.5;
        e(j, j - 1) -= 0.5;
        e(j - 1, j) -= 0.5;
    }
    return e;
}

std::vector<double> propagation_spectrum(int L) {
    require(L >= 1, ErrorCode::InvalidArgument, "propagation spectrum needs L >= 1");
    std::vector<double> out;
    for (int k = 0; k <= L; ++k) out.push_back(1.0 - std::cos(std::numbers::pi * k / (L + 1)));
    return out;
}

std::pair<HermitianOperator, HermitianOperator> lifted_pair(const KitaevHamiltonian &k) {
    const Matrix w = change_of_basis_W(k);
    const Matrix pi = hist_projector(k).projector();
    const Matrix h_in = assemble_or_zero(k.h_in()).matrix();
    const Matrix h_prop = assemble_or_zero(k.h_prop()).matrix();
    Matrix a1 = w * (h_in + static_cast<double>(k.p()) * pi) * w.adjoint();
    Matrix a2 = w * (h_prop + 2.0 * pi) * w.adjoint();
    return {HermitianOperator((a1 + a1.adjoint()) * 0.5), HermitianOperator((a2 + a2.adjoint()) * 0.5)};
}

}  // namespace hamred
