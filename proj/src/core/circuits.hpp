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

// Gate-level circuits over qubits, exact simulation, and verifier semantics.
//
// A verifier acts on three registers laid out contiguously: A holds a
// classical proof (or the INPUT bits of a cQMA circuit), B holds a quantum
// proof (the CHOICE register), and C holds ancillas that start in |0>.
// Qubit 0 is the most significant bit of a dense basis index.

#ifndef HAMRED_CORE_CIRCUITS_HPP
#define HAMRED_CORE_CIRCUITS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/common.hpp"
#include "core/ops.hpp"

namespace hamred {

enum class GateKind {
    I,
    X,
    Z,
    H,
    T,
    Tdg,
    CNOT,
    SWAP,
    Custom,
    // Multi-controlled X. Targets list the controls first and the flipped
    // qubit last. Only a macro: decompose() lowers it to 1 and 2 qubit gates.
    MCX,
};

const char *gate_kind_name(GateKind kind);
/// Throws Schema for an unknown name.
GateKind gate_kind_from_name(const std::string &name);

struct Gate {
    GateKind kind = GateKind::I;
    std::vector<int> targets;
    Matrix matrix;  // Custom only

    static Gate identity(int q) { return {GateKind::I, {q}, {}}; }
    static Gate x(int q) { return {GateKind::X, {q}, {}}; }
    static Gate z(int q) { return {GateKind::Z, {q}, {}}; }
    static Gate h(int q) { return {GateKind::H, {q}, {}}; }
    static Gate t(int q) { return {GateKind::T, {q}, {}}; }
    static Gate tdg(int q) { return {GateKind::Tdg, {q}, {}}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, {control, target}, {}}; }
    static Gate swap(int a, int b) { return {GateKind::SWAP, {a, b}, {}}; }
    static Gate mcx(std::vector<int> controls, int target);
    static Gate custom(std::vector<int> targets, Matrix u);
    /// Controlled-U with the control as the first target.
    static Gate controlled(int control, int target, const Matrix &u);

    int arity() const { return static_cast<int>(targets.size()); }
    /// Unitary on the targets, first target most significant.
    Matrix unitary() const;
    /// Throws InvalidArgument unless targets are distinct, in [0, n_qubits),
    /// the arity fits the kind, and a custom matrix is unitary.
    void validate(int n_qubits) const;
};

class QuantumCircuit {
  public:
    QuantumCircuit() = default;
    explicit QuantumCircuit(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    void add(Gate g);
    void append(const QuantumCircuit &other);
    /// True when every gate acts on at most two qubits.
    bool is_two_local() const;

  private:
    int n_qubits_ = 0;
    std::vector<Gate> gates_;
};

/// Register layout A = [0, n), B = [n, n+m), C = [n+m, n+m+p).
struct VerifierCircuit {
    QuantumCircuit circuit;
    int n = 0;
    int m = 0;
    int p = 0;
    int output_qubit = 0;
    /// Ancillas in C that no gate touches; decompose() may borrow them.
    std::vector<int> scratch;

    int a(int i) const { return i; }
    int b(int i) const { return n + i; }
    int c(int i) const { return n + m + i; }
    /// Throws InvalidArgument when the layout or scratch list is inconsistent.
    void validate() const;
};

/// cQMA circuits reuse the verifier layout with A as INPUT and B as CHOICE.
using CqmaCircuit = VerifierCircuit;

using Bits = std::vector<std::uint8_t>;
/// "0110" <-> {0,1,1,0}. Throws InvalidArgument on other characters.
Bits parse_bits(const std::string &s);
std::string format_bits(const Bits &bits);
/// Bit i of the result is the i-th character, so x_1 is bit 0.
Bits bits_of(std::uint64_t value, int width);
int hamming_weight(const Bits &bits);

/// Applies one gate in place to a dense state over n_qubits.
void apply_gate(Vector &psi, int n_qubits, const Gate &g);
/// Dense statevector simulation. The state must be unit norm within 1e-9.
Vector apply_circuit(const QuantumCircuit &circuit, const Vector &state);
/// Dense unitary of the whole circuit (small circuits only).
Matrix circuit_unitary(const QuantumCircuit &circuit);

/// Sparse statevector keyed by the set of qubits that are one.
class SparseState {
  public:
    using Key = std::array<std::uint64_t, 4>;
    struct KeyHash {
        std::size_t operator()(const Key &k) const noexcept;
    };
    using Map = std::unordered_map<Key, Complex, KeyHash>;
    using Entries = std::vector<std::pair<Key, Complex>>;

    static constexpr int kMaxQubits = 256;

    explicit SparseState(int n_qubits);
    /// Computational basis state with the listed qubits set to one.
    static SparseState basis(int n_qubits, std::span<const int> ones);

    int n_qubits() const { return n_; }
    const Entries &amplitudes() const { return amps_; }
    void apply(const Gate &g);
    void apply(const QuantumCircuit &c);
    double probability_one(int qubit) const;
    /// Dense vector; needs n_qubits <= 30.
    Vector to_dense() const;

    static bool bit(const Key &k, int q) { return (k[q >> 6] >> (q & 63)) & 1u; }
    static void set_bit(Key &k, int q, bool v);

  private:
    int n_;
    Entries amps_;  // distinct keys
};

/// A_x = (<x|_A <0|_C (x) I_B) V^dagger P_out V (|x>_A |0>_C (x) I_B), a
/// 2^m x 2^m operator. For m = 0 it is the 1x1 acceptance probability.
HermitianOperator acceptance_operator(const VerifierCircuit &v, const Bits &x);
/// Probability of output 1 on input |x>_A |y>_B |0>_C for a unit y on B.
double acceptance_probability(const VerifierCircuit &v, const Bits &x, const Vector &y);

enum class CqmaStatus { Accepts, Rejects, Undetermined };
const char *cqma_status_name(CqmaStatus s);

CqmaStatus cqma_status(const CqmaCircuit &w, const Bits &x, double slack = tol::slack);

struct MonotoneReport {
    bool monotone = false;
    bool determined = true;            // no input was Undetermined
    std::optional<Bits> witness;       // first Undetermined or monotonicity-breaking input
    std::vector<CqmaStatus> statuses;  // indexed by the integer whose bit i is x_{i+1}
    std::optional<int> min_weight;     // min Hamming weight over accepted inputs
};

/// Brute force over all 2^n inputs; n is capped at 16.
MonotoneReport analyze_monotone(const CqmaCircuit &w, double slack = tol::slack);
bool monotone_check(const CqmaCircuit &w);
std::optional<int> min_weight_accepted(const CqmaCircuit &w);

/// Lower every MCX (and anything wider than two qubits) to 1 and 2 qubit
/// gates. Toffoli uses five gates with controlled square roots of X; wider
/// MCX uses a Toffoli ladder through clean ancillas when enough are given,
/// and the recursive square-root construction otherwise.
QuantumCircuit decompose(const QuantumCircuit &circuit, std::span<const int> clean_ancillas = {});
VerifierCircuit decompose(const VerifierCircuit &v);

/// Principal square root of a 2x2 unitary.
Matrix unitary_sqrt(const Matrix &u);

/// W^t built as a tree of copies of W: every copy first copies its INPUT
/// bits into fresh ancillas (deferred measurement) and then runs W on the
/// copies. Inner copies read their INPUT bits from the outputs of child
/// copies. The root's CHOICE block comes first in the composed CHOICE
/// register. t = 1 returns the normalized single copy.
CqmaCircuit compose_amplify(const CqmaCircuit &w, int t);

/// Runs the subcircuits on disjoint qubits and computes the OR of their
/// outputs into a fresh ancilla, which becomes the output. A single
/// subcircuit is returned unchanged.
VerifierCircuit or_of_outputs(const std::vector<VerifierCircuit> &subcircuits);

/// Same verifier with the output moved to B_1 by a trailing SWAP (no-op when
/// it is already there or m = 0).
VerifierCircuit normalize_output(const VerifierCircuit &v);

}  // namespace hamred

#endif  // HAMRED_CORE_CIRCUITS_HPP
