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

// Circuit-to-Hamiltonian compilation with a clock register.
//
// The clock follows the circuit qubits. In the legal picture it is one site of
// dimension L+1 whose basis vector |t> is time t. In the unary picture it is L
// qubits D_1..D_L and time t is |1^t 0^(L-t)>. Clock projectors are then
// written on at most three neighbouring clock qubits:
//
//   |t><t| + |t-1><t-1|  ->  |1><1|_{D_(t-1)} (x) I_{D_t} (x) |0><0|_{D_(t+1)}
//   |t><t-1|             ->  |1><1|_{D_(t-1)} (x) |1><0|_{D_t} (x) |0><0|_{D_(t+1)}
//   |0><0|               ->  |0><0|_{D_1}
//   |L><L|               ->  |1><1|_{D_L}
//
// with factors outside D_1..D_L dropped, and H_stab penalises |01> on every
// neighbouring pair (D_i, D_(i+1)). Every term stays 5-local.

#ifndef HAMRED_CORE_KITAEV_HPP
#define HAMRED_CORE_KITAEV_HPP

#include <string>
#include <vector>

#include "core/circuits.hpp"
#include "core/ops.hpp"

namespace hamred {

enum class ClockMode { Legal, Unary };
const char *clock_mode_name(ClockMode mode);
/// Accepts "legal" and "unary". Throws InvalidArgument otherwise.
ClockMode clock_mode_from_name(const std::string &name);

struct ClockEncoding {
    ClockMode mode = ClockMode::Legal;
    int L = 0;
};

enum class TermKind { In, Prop, Stab, Out };
const char *term_kind_name(TermKind kind);

/// One projector of the compiled Hamiltonian, with its origin.
struct KitaevTerm {
    TermKind kind;
    int index;  // ancilla index for In, gate index (1-based) for Prop, pair index for Stab
    LocalTerm term;
};

class KitaevHamiltonian {
  public:
    const VerifierCircuit &circuit() const { return circuit_; }
    const ClockEncoding &clock() const { return clock_; }
    int L() const { return clock_.L; }
    int n() const { return circuit_.n; }
    int m() const { return circuit_.m; }
    int p() const { return circuit_.p; }
    int n_circuit_qubits() const { return circuit_.circuit.n_qubits(); }
    const std::vector<int> &site_dims() const { return site_dims_; }
    std::vector<int> clock_sites() const;
    std::size_t clock_dim() const;
    std::size_t dim() const;

    /// Every term in order: In (per ancilla), Prop (per gate), Stab, then Out.
    const std::vector<KitaevTerm> &terms() const { return terms_; }

    OperatorSum h_in() const { return group(TermKind::In); }
    OperatorSum h_prop() const { return group(TermKind::Prop); }
    OperatorSum h_stab() const { return group(TermKind::Stab); }
    OperatorSum h_out() const { return group(TermKind::Out); }
    /// H_in + H_prop + H_stab, whose null space is the history-state space.
    OperatorSum penalty() const;
    /// H_in + H_prop + H_stab + H_out.
    OperatorSum total() const;
    OperatorSum empty_sum() const { return OperatorSum(site_dims_); }

    /// qubit_block (x) |0><0|_clock on (qubits, clock-start support).
    LocalTerm at_clock_start(std::vector<int> qubits, const Matrix &qubit_block, double weight = 1.0) const;
    /// qubit_block (x) |L><L|_clock.
    LocalTerm at_clock_end(std::vector<int> qubits, const Matrix &qubit_block, double weight = 1.0) const;

    /// Basis index of clock time t (legal or unary).
    std::size_t clock_index(int t) const;

  private:
    friend KitaevHamiltonian compile(const VerifierCircuit &v, ClockMode mode);
    OperatorSum group(TermKind kind) const;

    VerifierCircuit circuit_;
    ClockEncoding clock_;
    std::vector<int> site_dims_;
    std::vector<KitaevTerm> terms_;
};

/// Compiles a verifier. The output is first moved to B_1 with a SWAP when it
/// sits elsewhere. Throws InvalidArgument for gates on more than two qubits
/// (run decompose() first) and CapExceeded when the Hilbert space is larger
/// than 2^62.
KitaevHamiltonian compile(const VerifierCircuit &v, ClockMode mode = ClockMode::Legal);

/// History state (L+1)^(-1/2) sum_t V_t..V_1 |psi>_AB |0>_C |t>_D, where
/// psi lives on A (x) B with A most significant.
Vector history_state(const KitaevHamiltonian &k, const Vector &psi_ab);
/// Orthonormal basis of history states of computational-basis proofs.
Subspace hist_projector(const KitaevHamiltonian &k);

struct KitaevBounds {
    double a = 0;        // eps / (L+1)
    double b = 0;        // smallest eigenvalue of the assembled Hamiltonian
    double b_floor = 0;  // 1e-3 (1 - sqrt(eps)) / L^3 sanity floor
};
KitaevBounds kitaev_bounds(const KitaevHamiltonian &k, double eps);

/// sum_j (V_j..V_1)^dagger (x) |j><j| on the full legal space. Throws
/// Precondition in unary mode.
Matrix change_of_basis_W(const KitaevHamiltonian &k);
/// E_D on the (L+1)-dimensional clock: half the path-graph Laplacian.
Matrix propagation_operator(int L);
/// {1 - cos(pi k / (L+1)) : k = 0..L}, ascending.
std::vector<double> propagation_spectrum(int L);

/// A1 = W (H_in + p Pi_hist) W^dagger and A2 = W (H_prop + 2 Pi_hist) W^dagger.
std::pair<HermitianOperator, HermitianOperator> lifted_pair(const KitaevHamiltonian &k);

}  // namespace hamred

#endif  // HAMRED_CORE_KITAEV_HPP
