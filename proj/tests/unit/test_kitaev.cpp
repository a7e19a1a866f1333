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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "core/kitaev.hpp"
#include "core/toys.hpp"
#include "unit/test_support.hpp"

namespace hamred {
namespace {

double max_abs(const Matrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

VerifierCircuit make(int n, int m, int p, std::vector<Gate> gates, int output) {
    VerifierCircuit v;
    v.n = n;
    v.m = m;
    v.p = p;
    v.circuit = QuantumCircuit(n + m + p);
    for (auto &g : gates) v.circuit.add(std::move(g));
    v.output_qubit = output;
    v.validate();
    return v;
}

VerifierCircuit random_verifier(int n, int m, int p, int gates, std::mt19937_64 &rng) {
    VerifierCircuit v;
    v.n = n;
    v.m = m;
    v.p = p;
    const int nq = n + m + p;
    v.circuit = QuantumCircuit(nq);
    std::uniform_int_distribution<int> kind(0, 3), q(0, nq - 1);
    for (int i = 0; i < gates; ++i) {
        int a = q(rng), b = q(rng);
        while (nq > 1 && b == a) b = q(rng);
        switch (kind(rng)) {
            case 0: v.circuit.add(Gate::h(a)); break;
            case 1: v.circuit.add(Gate::t(a)); break;
            case 2: v.circuit.add(nq > 1 ? Gate::cnot(a, b) : Gate::x(a)); break;
            default: v.circuit.add(Gate::custom({a}, oracle::random_isometry(2, 2, rng))); break;
        }
    }
    v.output_qubit = m > 0 ? v.b(0) : v.c(0);
    v.validate();
    return v;
}

// History state straight from the defining sum, with the clock index of
// time t computed from the unary or legal convention.
Vector oracle_history(const VerifierCircuit &v, ClockMode mode, const Vector &psi_ab) {
    const int nq = v.circuit.n_qubits();
    const int L = static_cast<int>(v.circuit.size());
    const long cd = mode == ClockMode::Legal ? L + 1 : (1L << L);
    auto clock_idx = [&](int t) {
        if (mode == ClockMode::Legal) return static_cast<long>(t);
        long idx = 0;
        for (int i = 0; i < L; ++i) idx = idx * 2 + (i < t ? 1 : 0);
        return idx;
    };
    Vector state = Vector::Zero(1L << nq);
    for (long i = 0; i < psi_ab.size(); ++i) state(i << v.p) = psi_ab(i);
    Vector out = Vector::Zero((1L << nq) * cd);
    Matrix prefix = Matrix::Identity(1L << nq, 1L << nq);
    for (int t = 0; t <= L; ++t) {
        if (t > 0) {
            const Gate &g = v.circuit.gates()[t - 1];
            prefix = oracle::gate_matrix(gate_kind_name(g.kind), g.targets, nq, g.matrix) * prefix;
        }
        Vector e = Vector::Zero(cd);
        e(clock_idx(t)) = 1.0;
        out += oracle::kron(prefix * state, e) / std::sqrt(L + 1.0);
    }
    return out;
}

TEST(Compile, OneGateHandExpansion) {
    VerifierCircuit v = make(0, 1, 0, {Gate::x(0)}, 0);
    KitaevHamiltonian k = compile(v);
    Matrix expect(4, 4);
    expect << 0.5, 0, 0, -0.5, 0, 1.5, -0.5, 0, 0, -0.5, 0.5, 0, -0.5, 0, 0, 0.5;
    EXPECT_LT(max_abs(assemble(k.total()).matrix() - expect), 1e-15);
    EXPECT_EQ(k.h_prop().size(), 1u);
    EXPECT_EQ(k.h_out().size(), 1u);
    EXPECT_TRUE(k.h_in().empty());
    EXPECT_TRUE(k.h_stab().empty());
}

TEST(Compile, EmptyCircuitFormulas) {
    VerifierCircuit v = make(0, 1, 1, {}, 0);
    KitaevHamiltonian k = compile(v);
    EXPECT_EQ(k.L(), 0);
    EXPECT_TRUE(k.h_prop().empty());
    // Sites: B1, C1, clock of dimension 1.
    EXPECT_LT(max_abs(assemble(k.h_in()).matrix() - oracle::kron(Matrix::Identity(2, 2), oracle::proj(2, 1))), 1e-15);
    EXPECT_LT(max_abs(assemble(k.h_out()).matrix() - oracle::kron(oracle::proj(2, 0), Matrix::Identity(2, 2))), 1e-15);
    Vector psi = Vector::Zero(2);
    psi(1) = 1.0;
    Vector h = history_state(k, psi);
    Vector expect = Vector::Zero(4);
    expect(2) = 1.0;
    EXPECT_LT((h - expect).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Compile, RejectsWideGatesAndMovesOutput) {
    VerifierCircuit wide = make(0, 1, 2, {Gate::mcx({1, 2}, 0)}, 0);
    EXPECT_THROW(compile(wide), Error);
    VerifierCircuit off = make(1, 1, 1, {Gate::cnot(0, 2)}, 2);
    KitaevHamiltonian k = compile(off);
    EXPECT_EQ(k.L(), 2);
    EXPECT_EQ(k.circuit().output_qubit, 1);
    EXPECT_EQ(k.circuit().circuit.gates().back().kind, GateKind::SWAP);
}

TEST(Compile, TermsAreBoundedAndFiveLocal) {
    std::mt19937_64 rng(17);
    for (ClockMode mode : {ClockMode::Legal, ClockMode::Unary}) {
        VerifierCircuit v = random_verifier(1, 1, 1, 4, rng);
        KitaevHamiltonian k = compile(v, mode);
        for (const KitaevTerm &t : k.terms()) {
            EXPECT_LE(t.term.support.size(), 5u);
            Eigen::VectorXd ev = oracle::eigenvalues(t.term.block * t.term.weight);
            EXPECT_GE(ev(0), -1e-12);
            EXPECT_LE(ev(ev.size() - 1), 1 + 1e-12);
        }
    }
}

TEST(History, SingleXExample) {
    VerifierCircuit v = make(0, 1, 0, {Gate::x(0)}, 0);
    Vector psi = Vector::Zero(2);
    psi(0) = 1.0;
    Vector h = history_state(compile(v), psi);
    Vector expect = Vector::Zero(4);
    expect(0) = expect(3) = 1.0 / std::sqrt(2.0);
    EXPECT_LT((h - expect).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(History, MatchesOracleAndIsAnnihilated) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 12; ++trial) {
        const ClockMode mode = trial % 2 ? ClockMode::Unary : ClockMode::Legal;
        VerifierCircuit v = random_verifier(1, 1, 1, 3, rng);
        KitaevHamiltonian k = compile(v, mode);
        Vector psi = oracle::random_state(4, rng);
        Vector h = history_state(k, psi);
        EXPECT_LT((h - oracle_history(k.circuit(), mode, psi)).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(h.norm(), 1.0, 1e-12);
        EXPECT_LT(std::abs(expectation(k.penalty(), h)), 1e-9);
    }
}

TEST(History, BasisIsOrthonormalAndSpansNullSpace) {
    std::mt19937_64 rng(31);
    for (ClockMode mode : {ClockMode::Legal, ClockMode::Unary}) {
        for (int trial = 0; trial < 3; ++trial) {
            VerifierCircuit v = random_verifier(1, 1, 1, 3, rng);
            KitaevHamiltonian k = compile(v, mode);
            Subspace hist = hist_projector(k);
            EXPECT_EQ(hist.rank(), 4);
            EXPECT_LT(max_abs(hist.basis().adjoint() * hist.basis() - Matrix::Identity(4, 4)), 1e-12);
            Subspace null = null_space(assemble(k.penalty()));
            EXPECT_EQ(null.rank(), 4);
            EXPECT_LT(max_abs(null.projector() - hist.projector()), 1e-8);
        }
    }
}

TEST(Clock, UnaryRestrictedToLegalStatesEqualsLegal) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 4; ++trial) {
        VerifierCircuit v = random_verifier(1, 1, 1, 2 + trial, rng);
        KitaevHamiltonian legal = compile(v, ClockMode::Legal);
        KitaevHamiltonian unary = compile(v, ClockMode::Unary);
        const int L = legal.L();
        const long nqd = 1L << legal.n_circuit_qubits();
        Matrix hu = assemble(unary.total()).matrix();
        Matrix hl = assemble(legal.total()).matrix();
        std::vector<long> idx;
        for (long c = 0; c < nqd; ++c) {
            for (int t = 0; t <= L; ++t) idx.push_back(c * (1L << L) + ((1L << L) - (1L << (L - t))));
        }
        Matrix r(idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = hu(idx[i], idx[j]);
        }
        EXPECT_LT(max_abs(r - hl), 1e-14);
        Eigen::VectorXd a = oracle::eigenvalues(r), b = oracle::eigenvalues(hl);
        EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_EQ(unary.h_stab().size(), static_cast<std::size_t>(L - 1));
    }
}

TEST(Bounds, SpecExamples) {
    KitaevHamiltonian det = compile(toys::deterministic_accept());
    EXPECT_EQ(det.L(), 4);
    EXPECT_EQ(kitaev_bounds(det, 0.0).a, 0.0);
    EXPECT_DOUBLE_EQ(kitaev_bounds(det, 0.25).a, 0.05);
    KitaevHamiltonian rej = compile(toys::reject_all(1));
    EXPECT_EQ(rej.L(), 3);
    KitaevBounds b = kitaev_bounds(rej, 0.0);
    EXPECT_GT(b.b, 0.0);
    EXPECT_GE(b.b, b.b_floor);
    EXPECT_NEAR(b.b, oracle::min_eig(assemble(rej.total()).matrix()), 1e-10);
    EXPECT_THROW(kitaev_bounds(rej, 1.0), Error);
}

TEST(Bounds, PenaltyGapAboveFloor) {
    KitaevHamiltonian k = compile(toys::deterministic_accept());
    const double j = min_nonzero_eigenvalue(assemble(k.penalty()));
    EXPECT_GE(j, 1.0 / (2.0 * std::pow(k.L() + 1, 3)));
    Eigen::VectorXd ev = oracle::eigenvalues(assemble(k.penalty()).matrix());
    double first = 0;
    for (long i = 0; i < ev.size(); ++i) {
        if (ev(i) > 1e-9) {
            first = ev(i);
            break;
        }
    }
    EXPECT_NEAR(j, first, 1e-10);
}

TEST(Propagation, SpectrumFormulaExamples) {
    auto s1 = propagation_spectrum(1);
    ASSERT_EQ(s1.size(), 2u);
    EXPECT_NEAR(s1[0], 0.0, 1e-15);
    EXPECT_NEAR(s1[1], 1.0, 1e-15);
    auto s3 = propagation_spectrum(3);
    EXPECT_NEAR(s3[1], 0.2928932188134524, 1e-15);
    EXPECT_NEAR(s3[2], 1.0, 1e-15);
    EXPECT_NEAR(s3[3], 1.7071067811865475, 1e-15);
    for (int L = 1; L <= 6; ++L) {
        Eigen::VectorXd ev = oracle::eigenvalues(propagation_operator(L));
        auto f = propagation_spectrum(L);
        EXPECT_NEAR(f[0], 0.0, 1e-15);
        for (int i = 0; i <= L; ++i) EXPECT_NEAR(ev(i), f[i], 1e-10) << "L=" << L;
    }
}

TEST(ChangeOfBasis, IdentityUnitarityAndConjugation) {
    VerifierCircuit id = make(0, 1, 1, {Gate::identity(0), Gate::identity(1)}, 0);
    KitaevHamiltonian kid = compile(id);
    EXPECT_LT(max_abs(change_of_basis_W(kid) - Matrix::Identity(12, 12)), 1e-15);

    std::mt19937_64 rng(51);
    for (int L = 1; L <= 4; ++L) {
        VerifierCircuit v = random_verifier(1, 1, 1, L, rng);
        KitaevHamiltonian k = compile(v);
        Matrix w = change_of_basis_W(k);
        EXPECT_LT(unitarity_defect(w), 1e-10);
        Matrix hin = assemble_or_zero(k.h_in()).matrix();
        Matrix hprop = assemble(k.h_prop()).matrix();
        EXPECT_LT(max_abs(w * hin * w.adjoint() - hin), 1e-9);
        Matrix conj = w * hprop * w.adjoint();
        EXPECT_LT(max_abs(conj - oracle::kron(Matrix::Identity(8, 8), propagation_operator(L))), 1e-9);
        Eigen::VectorXd ev = oracle::eigenvalues(conj);
        auto f = propagation_spectrum(L);
        for (int kk = 0; kk <= L; ++kk) {
            for (int r = 0; r < 8; ++r) EXPECT_NEAR(ev(kk * 8 + r), f[kk], 1e-9);
        }
    }
    EXPECT_THROW(change_of_basis_W(compile(toys::accept_x1(1), ClockMode::Unary)), Error);
}

TEST(ChangeOfBasis, HistoryProjectorCommutesWithInAndProp) {
    std::mt19937_64 rng(61);
    for (int L = 1; L <= 4; ++L) {
        KitaevHamiltonian k = compile(random_verifier(1, 1, 1, L, rng));
        Matrix pi = hist_projector(k).projector();
        Matrix hin = assemble_or_zero(k.h_in()).matrix();
        Matrix hprop = assemble(k.h_prop()).matrix();
        EXPECT_LT(max_abs(hin * pi - pi * hin), 1e-9);
        EXPECT_LT(max_abs(hprop * pi - pi * hprop), 1e-9);
    }
}

TEST(ChangeOfBasis, LiftedPairSatisfiesGeometricLemma) {
    std::mt19937_64 rng(71);
    for (int L = 1; L <= 5; ++L) {
        KitaevHamiltonian k = compile(random_verifier(1, 1, 1, L, rng));
        auto [a1, a2] = lifted_pair(k);
        GeometricLemmaReport rep = check_geometric_lemma(a1, a2);
        EXPECT_TRUE(rep.holds) << "L=" << L << " margin " << rep.margin;
        EXPECT_LE(rep.cos_angle, std::sqrt(L / (L + 1.0)) + 1e-9) << "L=" << L;
        const double gap = min_nonzero_eigenvalue(assemble(k.h_in()) + assemble(k.h_prop()));
        EXPECT_GE(gap, rep.v / (2.0 * (L + 1)) - 1e-9) << "L=" << L;
    }
}

TEST(ChangeOfBasis, LiftedPairForTwoGateOneAncilla) {
    VerifierCircuit v = make(0, 1, 1, {Gate::h(0), Gate::cnot(0, 1)}, 0);
    auto [a1, a2] = lifted_pair(compile(v));
    GeometricLemmaReport rep = check_geometric_lemma(a1, a2);
    EXPECT_TRUE(rep.holds);
    EXPECT_NEAR(rep.lambda_min, oracle::min_eig(a1.matrix() + a2.matrix()), 1e-10);
}

}  // namespace
}  // namespace hamred
