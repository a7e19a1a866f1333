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

#include "core/circuits.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>

#include <Eigen/Eigenvalues>

namespace hamred {

namespace {

constexpr double kPrune = 1e-14;

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

const char *gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::I: return "I";
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::T: return "T";
        case GateKind::Tdg: return "Tdg";
        case GateKind::CNOT: return "CNOT";
        case GateKind::SWAP: return "SWAP";
        case GateKind::Custom: return "custom";
        case GateKind::MCX: return "MCX";
    }
    return "?";
}

GateKind gate_kind_from_name(const std::string &name) {
    static const std::pair<const char *, GateKind> table[] = {
        {"I", GateKind::I},     {"X", GateKind::X},       {"Z", GateKind::Z},       {"H", GateKind::H},
        {"T", GateKind::T},     {"Tdg", GateKind::Tdg},   {"CNOT", GateKind::CNOT}, {"SWAP", GateKind::SWAP},
        {"custom", GateKind::Custom}, {"MCX", GateKind::MCX},
    };
    for (const auto &[n, k] : table) {
        if (name == n) return k;
    }
    fail(ErrorCode::Schema, "unknown gate kind '" + name + "'");
}

// ---------------------------------------------------------------------------
// Gate

Gate Gate::mcx(std::vector<int> controls, int target) {
    controls.push_back(target);
    return {GateKind::MCX, std::move(controls), {}};
}

Gate Gate::custom(std::vector<int> targets, Matrix u) { return {GateKind::Custom, std::move(targets), std::move(u)}; }

Gate Gate::controlled(int control, int target, const Matrix &u) {
    Matrix m = Matrix::Identity(4, 4);
    m.bottomRightCorner(2, 2) = u;
    return custom({control, target}, std::move(m));
}

Matrix Gate::unitary() const {
    const double s = 1.0 / std::numbers::sqrt2;
    switch (kind) {
        case GateKind::I: return Matrix::Identity(2, 2);
        case GateKind::X: return mat2(0, 1, 1, 0);
        case GateKind::Z: return mat2(1, 0, 0, -1);
        case GateKind::H: return mat2(s, s, s, -s);
        case GateKind::T: return mat2(1, 0, 0, std::polar(1.0, std::numbers::pi / 4));
        case GateKind::Tdg: return mat2(1, 0, 0, std::polar(1.0, -std::numbers::pi / 4));
        case GateKind::CNOT: {
            Matrix m = Matrix::Zero(4, 4);
            m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
            return m;
        }
        case GateKind::SWAP: {
            Matrix m = Matrix::Zero(4, 4);
            m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
            return m;
        }
        case GateKind::Custom: return matrix;
        case GateKind::MCX: {
            const Eigen::Index d = Eigen::Index{1} << targets.size();
            Matrix m = Matrix::Identity(d, d);
            m(d - 2, d - 2) = m(d - 1, d - 1) = 0;
            m(d - 2, d - 1) = m(d - 1, d - 2) = 1;
            return m;
        }
    }
    fail(ErrorCode::Internal, "unhandled gate kind");
}

void Gate::validate(int n_qubits) const {
    std::set<int> seen;
    for (int q : targets) {
        if (q < 0 || q >= n_qubits) {
            fail(ErrorCode::InvalidArgument, std::string("gate ") + gate_kind_name(kind) + " target " +
                                                 std::to_string(q) + " outside " + std::to_string(n_qubits) +
                                                 " qubits");
        }
        require(seen.insert(q).second, ErrorCode::InvalidArgument, "gate targets must be distinct");
    }
    switch (kind) {
        case GateKind::I:
        case GateKind::X:
        case GateKind::Z:
        case GateKind::H:
        case GateKind::T:
        case GateKind::Tdg:
            require(arity() == 1, ErrorCode::InvalidArgument, std::string(gate_kind_name(kind)) + " takes one target");
            break;
        case GateKind::CNOT:
        case GateKind::SWAP:
            require(arity() == 2, ErrorCode::InvalidArgument, std::string(gate_kind_name(kind)) + " takes two targets");
            break;
        case GateKind::MCX:
            require(arity() >= 1 && arity() <= 62, ErrorCode::InvalidArgument, "MCX needs between 1 and 62 targets");
            break;
        case GateKind::Custom: {
            require(arity() == 1 || arity() == 2, ErrorCode::InvalidArgument, "custom gates act on one or two qubits");
            const Eigen::Index d = Eigen::Index{1} << arity();
            require(matrix.rows() == d && matrix.cols() == d, ErrorCode::InvalidArgument,
                    "custom gate matrix does not match its arity");
            require(unitarity_defect(matrix) <= tol::structural, ErrorCode::InvalidArgument,
                    "custom gate matrix is not unitary");
            break;
        }
    }
}

// ---------------------------------------------------------------------------
// QuantumCircuit

QuantumCircuit::QuantumCircuit(int n_qubits) : n_qubits_(n_qubits) {
    require(n_qubits >= 0, ErrorCode::InvalidArgument, "qubit count must be non-negative");
}

void QuantumCircuit::add(Gate g) {
    g.validate(n_qubits_);
    gates_.push_back(std::move(g));
}

void QuantumCircuit::append(const QuantumCircuit &other) {
    require(other.n_qubits_ == n_qubits_, ErrorCode::InvalidArgument, "circuits have different widths");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

bool QuantumCircuit::is_two_local() const {
    return std::all_of(gates_.begin(), gates_.end(), [](const Gate &g) { return g.arity() <= 2; });
}

void VerifierCircuit::validate() const {
    require(n >= 0 && m >= 0 && p >= 0, ErrorCode::InvalidArgument, "register sizes must be non-negative");
    require(n + m + p == circuit.n_qubits(), ErrorCode::InvalidArgument,
            "registers A, B, C must cover the circuit exactly");
    require(output_qubit >= 0 && output_qubit < circuit.n_qubits(), ErrorCode::InvalidArgument,
            "output qubit out of range");
    std::set<int> scratch_set;
    for (int q : scratch) {
        require(q >= n + m && q < n + m + p, ErrorCode::InvalidArgument, "scratch qubits must lie in C");
        require(scratch_set.insert(q).second, ErrorCode::InvalidArgument, "scratch qubits must be distinct");
        require(q != output_qubit, ErrorCode::InvalidArgument, "the output qubit cannot be scratch");
    }
    for (const Gate &g : circuit.gates()) {
        for (int q : g.targets) {
            require(!scratch_set.count(q), ErrorCode::InvalidArgument, "a gate touches a scratch qubit");
        }
    }
}

// ---------------------------------------------------------------------------
// Bitstrings

Bits parse_bits(const std::string &s) {
    Bits out;
    out.reserve(s.size());
    for (char ch : s) {
        require(ch == '0' || ch == '1', ErrorCode::InvalidArgument, "bitstring may only contain 0 and 1");
        out.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return out;
}

std::string format_bits(const Bits &bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

Bits bits_of(std::uint64_t value, int width) {
    Bits out(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) out[i] = static_cast<std::uint8_t>((value >> i) & 1u);
    return out;
}

int hamming_weight(const Bits &bits) {
    int w = 0;
    for (auto b : bits) w += b ? 1 : 0;
    return w;
}

// ---------------------------------------------------------------------------
// Dense simulation

namespace {

void apply_dense(Vector &psi, int n, const Gate &g) {
    const std::size_t dim = static_cast<std::size_t>(psi.size());
    if (g.kind == GateKind::I) return;
    if (g.kind == GateKind::MCX) {
        std::size_t ctrl_mask = 0;
        for (int j = 0; j + 1 < g.arity(); ++j) ctrl_mask |= std::size_t{1} << (n - 1 - g.targets[j]);
        std::size_t tmask = std::size_t{1} << (n - 1 - g.targets.back());
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & ctrl_mask) == ctrl_mask && !(i & tmask)) {
                std::swap(psi(static_cast<Eigen::Index>(i)), psi(static_cast<Eigen::Index>(i | tmask)));
            }
        }
        return;
    }
    const Matrix u = g.unitary();
    const int k = g.arity();
    const std::size_t ld = std::size_t{1} << k;
    std::vector<std::size_t> bit(static_cast<std::size_t>(k));
    std::size_t mask = 0;
    for (int j = 0; j < k; ++j) {
        bit[j] = std::size_t{1} << (n - 1 - g.targets[j]);
        mask |= bit[j];
    }
    std::vector<std::size_t> offset(ld, 0);
    for (std::size_t l = 0; l < ld; ++l) {
        for (int j = 0; j < k; ++j) {
            if ((l >> (k - 1 - j)) & 1u) offset[l] |= bit[j];
        }
    }
    Vector in(static_cast<Eigen::Index>(ld));
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & mask) continue;
        for (std::size_t l = 0; l < ld; ++l) in(static_cast<Eigen::Index>(l)) = psi(static_cast<Eigen::Index>(base | offset[l]));
        Vector out = u * in;
        for (std::size_t l = 0; l < ld; ++l) psi(static_cast<Eigen::Index>(base | offset[l])) = out(static_cast<Eigen::Index>(l));
    }
}

}  // namespace

void apply_gate(Vector &psi, int n_qubits, const Gate &g) {
    require(psi.size() == (Eigen::Index{1} << n_qubits), ErrorCode::InvalidArgument,
            "state dimension does not match the qubit count");
    apply_dense(psi, n_qubits, g);
}

Vector apply_circuit(const QuantumCircuit &circuit, const Vector &state) {
    const int n = circuit.n_qubits();
    require(n <= 30, ErrorCode::CapExceeded, "dense simulation is limited to 30 qubits");
    require(state.size() == (Eigen::Index{1} << n), ErrorCode::InvalidArgument,
            "state dimension does not match the circuit width");
    require(std::abs(state.norm() - 1.0) <= 1e-9, ErrorCode::InvalidArgument, "state must have unit norm");
    Vector psi = state;
    for (const Gate &g : circuit.gates()) apply_dense(psi, n, g);
    return psi;
}

Matrix circuit_unitary(const QuantumCircuit &circuit) {
    const int n = circuit.n_qubits();
    require(n <= 30 && (std::size_t{1} << n) <= dim_cap(), ErrorCode::CapExceeded,
            "circuit unitary exceeds the dimension cap");
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix u(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        Vector e = Vector::Zero(dim);
        e(c) = 1;
        for (const Gate &g : circuit.gates()) apply_dense(e, n, g);
        u.col(c) = e;
    }
    return u;
}

// ---------------------------------------------------------------------------
// Sparse simulation

std::size_t SparseState::KeyHash::operator()(const Key &k) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : k) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

void SparseState::set_bit(Key &k, int q, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (q & 63);
    if (v) {
        k[q >> 6] |= m;
    } else {
        k[q >> 6] &= ~m;
    }
}

SparseState::SparseState(int n_qubits) : n_(n_qubits) {
    require(n_qubits >= 0 && n_qubits <= kMaxQubits, ErrorCode::CapExceeded,
            "sparse simulation supports at most 256 qubits");
    amps_.emplace_back(Key{}, 1.0);
}

SparseState SparseState::basis(int n_qubits, std::span<const int> ones) {
    SparseState s(n_qubits);
    Key k{};
    for (int q : ones) {
        require(q >= 0 && q < n_qubits, ErrorCode::InvalidArgument, "basis qubit out of range");
        set_bit(k, q, true);
    }
    s.amps_.clear();
    s.amps_.emplace_back(k, 1.0);
    return s;
}

void SparseState::apply(const Gate &g) {
    if (g.kind == GateKind::I) return;
    for (int q : g.targets) {
        require(q >= 0 && q < n_, ErrorCode::InvalidArgument, "gate target outside the sparse state");
    }
    // Permutation gates relabel keys in place; distinct keys stay distinct.
    switch (g.kind) {
        case GateKind::X:
            for (auto &e : amps_) set_bit(e.first, g.targets[0], !bit(e.first, g.targets[0]));
            return;
        case GateKind::CNOT:
            for (auto &e : amps_) {
                if (bit(e.first, g.targets[0])) set_bit(e.first, g.targets[1], !bit(e.first, g.targets[1]));
            }
            return;
        case GateKind::SWAP:
            for (auto &e : amps_) {
                const bool a = bit(e.first, g.targets[0]);
                set_bit(e.first, g.targets[0], bit(e.first, g.targets[1]));
                set_bit(e.first, g.targets[1], a);
            }
            return;
        case GateKind::MCX: {
            const int t = g.targets.back();
            for (auto &e : amps_) {
                bool fire = true;
                for (int j = 0; j + 1 < g.arity() && fire; ++j) fire = bit(e.first, g.targets[j]);
                if (fire) set_bit(e.first, t, !bit(e.first, t));
            }
            return;
        }
        default: break;
    }
    const Matrix u = g.unitary();
    const int ar = g.arity();
    const Eigen::Index ld = u.rows();
    // Column-sparse form of the gate: nonzero rows of every column.
    std::vector<std::vector<std::pair<Eigen::Index, Complex>>> cols(static_cast<std::size_t>(ld));
    for (Eigen::Index c = 0; c < ld; ++c) {
        for (Eigen::Index r = 0; r < ld; ++r) {
            if (std::abs(u(r, c)) > 0.0) cols[c].emplace_back(r, u(r, c));
        }
    }
    Map next;
    next.reserve(amps_.size() * 2);
    for (const auto &[k, a] : amps_) {
        Eigen::Index local = 0;
        for (int j = 0; j < ar; ++j) local = (local << 1) | (bit(k, g.targets[j]) ? 1 : 0);
        for (const auto &[r, v] : cols[local]) {
            Key nk = k;
            for (int j = 0; j < ar; ++j) set_bit(nk, g.targets[j], (r >> (ar - 1 - j)) & 1);
            next[nk] += v * a;
        }
    }
    amps_.clear();
    for (const auto &[k, a] : next) {
        if (std::abs(a) >= kPrune) amps_.emplace_back(k, a);
    }
}

void SparseState::apply(const QuantumCircuit &c) {
    require(c.n_qubits() == n_, ErrorCode::InvalidArgument, "circuit width differs from the state");
    for (const Gate &g : c.gates()) apply(g);
}

double SparseState::probability_one(int qubit) const {
    double p = 0.0;
    for (const auto &[k, a] : amps_) {
        if (bit(k, qubit)) p += std::norm(a);
    }
    return p;
}

Vector SparseState::to_dense() const {
    require(n_ <= 30, ErrorCode::CapExceeded, "dense conversion is limited to 30 qubits");
    Vector v = Vector::Zero(Eigen::Index{1} << n_);
    for (const auto &[k, a] : amps_) {
        Eigen::Index idx = 0;
        for (int q = 0; q < n_; ++q) {
            if (bit(k, q)) idx |= Eigen::Index{1} << (n_ - 1 - q);
        }
        v(idx) += a;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Verifier semantics

namespace {

SparseState::Key input_key(const VerifierCircuit &v, const Bits &x, std::uint64_t y) {
    SparseState::Key k{};
    for (int i = 0; i < v.n; ++i) SparseState::set_bit(k, v.a(i), x[i] != 0);
    for (int j = 0; j < v.m; ++j) SparseState::set_bit(k, v.b(j), (y >> (v.m - 1 - j)) & 1u);
    return k;
}

}  // namespace

HermitianOperator acceptance_operator(const VerifierCircuit &v, const Bits &x) {
    v.validate();
    require(static_cast<int>(x.size()) == v.n, ErrorCode::InvalidArgument, "input length differs from register A");
    require(v.m < 31 && (std::size_t{1} << v.m) <= dim_cap(), ErrorCode::CapExceeded,
            "quantum proof register exceeds the dimension cap");
    const Eigen::Index dim = Eigen::Index{1} << v.m;
    // Final amplitudes with output 1, grouped by basis state.
    std::unordered_map<SparseState::Key, std::vector<std::pair<Eigen::Index, Complex>>, SparseState::KeyHash> accepted;
    for (Eigen::Index y = 0; y < dim; ++y) {
        SparseState s(v.circuit.n_qubits());
        SparseState::Key k0 = input_key(v, x, static_cast<std::uint64_t>(y));
        std::vector<int> ones;
        for (int q = 0; q < v.circuit.n_qubits(); ++q) {
            if (SparseState::bit(k0, q)) ones.push_back(q);
        }
        s = SparseState::basis(v.circuit.n_qubits(), ones);
        s.apply(v.circuit);
        for (const auto &[k, a] : s.amplitudes()) {
            if (SparseState::bit(k, v.output_qubit)) accepted[k].emplace_back(y, a);
        }
    }
    Matrix a = Matrix::Zero(dim, dim);
    for (const auto &[k, list] : accepted) {
        for (const auto &[i, ai] : list) {
            for (const auto &[j, aj] : list) a(i, j) += std::conj(ai) * aj;
        }
    }
    return HermitianOperator((a + a.adjoint()) * 0.5);
}

double acceptance_probability(const VerifierCircuit &v, const Bits &x, const Vector &y) {
    v.validate();
    require(static_cast<int>(x.size()) == v.n, ErrorCode::InvalidArgument, "input length differs from register A");
    require(y.size() == (Eigen::Index{1} << v.m), ErrorCode::InvalidArgument, "proof dimension differs from register B");
    require(std::abs(y.norm() - 1.0) <= 1e-9, ErrorCode::InvalidArgument, "proof must have unit norm");
    // Linearity: run every basis proof and superpose the results.
    SparseState::Map total;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (y(i) == Complex(0.0, 0.0)) continue;
        SparseState::Key k0 = input_key(v, x, static_cast<std::uint64_t>(i));
        std::vector<int> ones;
        for (int q = 0; q < v.circuit.n_qubits(); ++q) {
            if (SparseState::bit(k0, q)) ones.push_back(q);
        }
        SparseState s = SparseState::basis(v.circuit.n_qubits(), ones);
        s.apply(v.circuit);
        for (const auto &[k, a] : s.amplitudes()) total[k] += y(i) * a;
    }
    double p = 0.0;
    for (const auto &[k, a] : total) {
        if (SparseState::bit(k, v.output_qubit)) p += std::norm(a);
    }
    return p;
}

const char *cqma_status_name(CqmaStatus s) {
    switch (s) {
        case CqmaStatus::Accepts: return "accepts";
        case CqmaStatus::Rejects: return "rejects";
        case CqmaStatus::Undetermined: return "undetermined";
    }
    return "?";
}

CqmaStatus cqma_status(const CqmaCircuit &w, const Bits &x, double slack) {
    double lam = min_eigenvalue(acceptance_operator(w, x));
    if (lam >= 2.0 / 3.0 - slack) return CqmaStatus::Accepts;
    if (lam <= 1.0 / 3.0 + slack) return CqmaStatus::Rejects;
    return CqmaStatus::Undetermined;
}

MonotoneReport analyze_monotone(const CqmaCircuit &w, double slack) {
    require(w.n <= 16, ErrorCode::CapExceeded, "monotonicity brute force is limited to 16 input bits");
    MonotoneReport rep;
    const std::uint64_t count = std::uint64_t{1} << w.n;
    rep.statuses.resize(count);
    for (std::uint64_t v = 0; v < count; ++v) {
        rep.statuses[v] = cqma_status(w, bits_of(v, w.n), slack);
        if (rep.statuses[v] == CqmaStatus::Undetermined && rep.determined) {
            rep.determined = false;
            rep.witness = bits_of(v, w.n);
        }
    }
    rep.monotone = rep.determined;
    for (std::uint64_t v = 0; v < count; ++v) {
        if (rep.statuses[v] != CqmaStatus::Accepts) continue;
        int wt = std::popcount(v);
        if (!rep.min_weight || wt < *rep.min_weight) rep.min_weight = wt;
        if (!rep.monotone) continue;
        for (int i = 0; i < w.n; ++i) {
            std::uint64_t up = v | (std::uint64_t{1} << i);
            if (rep.statuses[up] != CqmaStatus::Accepts) {
                rep.monotone = false;
                rep.witness = bits_of(up, w.n);
                break;
            }
        }
    }
    return rep;
}

bool monotone_check(const CqmaCircuit &w) { return analyze_monotone(w).monotone; }

std::optional<int> min_weight_accepted(const CqmaCircuit &w) { return analyze_monotone(w).min_weight; }

// ---------------------------------------------------------------------------
// Decomposition

Matrix unitary_sqrt(const Matrix &u) {
    require(u.rows() == 2 && u.cols() == 2, ErrorCode::InvalidArgument, "unitary_sqrt expects a 2x2 matrix");
    require(unitarity_defect(u) <= tol::structural, ErrorCode::InvalidArgument, "matrix is not unitary");
    Eigen::ComplexSchur<Matrix> schur(u);
    const Matrix &t = schur.matrixT();
    const Matrix &q = schur.matrixU();
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = std::sqrt(t(0, 0));
    d(1, 1) = std::sqrt(t(1, 1));
    return q * d * q.adjoint();
}

namespace {

void emit_controlled(const std::vector<int> &controls, int target, const Matrix &u, bool is_x,
                     const std::vector<int> &clean, QuantumCircuit &out) {
    const std::size_t k = controls.size();
    if (k == 0) {
        out.add(is_x ? Gate::x(target) : Gate::custom({target}, u));
        return;
    }
    if (k == 1) {
        out.add(is_x ? Gate::cnot(controls[0], target) : Gate::controlled(controls[0], target, u));
        return;
    }
    if (is_x && k >= 3 && clean.size() >= k - 2) {
        // Toffoli ladder: anc[i] holds the AND of the first i+2 controls.
        std::vector<std::pair<std::vector<int>, int>> ladder;
        ladder.push_back({{controls[0], controls[1]}, clean[0]});
        for (std::size_t i = 1; i + 2 < k; ++i) ladder.push_back({{clean[i - 1], controls[i + 1]}, clean[i]});
        for (const auto &[c, t] : ladder) emit_controlled(c, t, u, true, {}, out);
        emit_controlled({clean[k - 3], controls[k - 1]}, target, u, true, {}, out);
        for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) emit_controlled(it->first, it->second, u, true, {}, out);
        return;
    }
    // C^k U = CW(c_k,t) . C^{k-1}X(c_1..c_{k-1} -> c_k) . CW^dagger(c_k,t)
    //         . C^{k-1}X(c_1..c_{k-1} -> c_k) . C^{k-1}W(c_1..c_{k-1} -> t), W^2 = U.
    const Matrix x = Gate::x(0).unitary();
    const Matrix w = unitary_sqrt(is_x ? x : u);
    const int last = controls.back();
    std::vector<int> head(controls.begin(), controls.end() - 1);
    out.add(Gate::controlled(last, target, w));
    emit_controlled(head, last, x, true, clean, out);
    out.add(Gate::controlled(last, target, w.adjoint()));
    emit_controlled(head, last, x, true, clean, out);
    emit_controlled(head, target, w, false, clean, out);
}

}  // namespace

QuantumCircuit decompose(const QuantumCircuit &circuit, std::span<const int> clean_ancillas) {
    std::set<int> clean_set(clean_ancillas.begin(), clean_ancillas.end());
    for (int q : clean_set) {
        require(q >= 0 && q < circuit.n_qubits(), ErrorCode::InvalidArgument, "clean ancilla out of range");
    }
    for (const Gate &g : circuit.gates()) {
        for (int q : g.targets) {
            require(!clean_set.count(q), ErrorCode::InvalidArgument, "a gate touches a clean ancilla");
        }
    }
    std::vector<int> clean(clean_set.begin(), clean_set.end());
    QuantumCircuit out(circuit.n_qubits());
    const Matrix x = Gate::x(0).unitary();
    for (const Gate &g : circuit.gates()) {
        if (g.kind != GateKind::MCX) {
            out.add(g);
            continue;
        }
        std::vector<int> controls(g.targets.begin(), g.targets.end() - 1);
        emit_controlled(controls, g.targets.back(), x, true, clean, out);
    }
    return out;
}

VerifierCircuit decompose(const VerifierCircuit &v) {
    v.validate();
    VerifierCircuit out = v;
    out.circuit = decompose(v.circuit, v.scratch);
    // The ladder may now touch the borrowed qubits.
    out.scratch.clear();
    return out;
}

// ---------------------------------------------------------------------------
// Composition

VerifierCircuit normalize_output(const VerifierCircuit &v) {
    v.validate();
    if (v.m == 0 || v.output_qubit == v.b(0)) return v;
    VerifierCircuit out = v;
    out.circuit.add(Gate::swap(v.output_qubit, v.b(0)));
    out.output_qubit = v.b(0);
    return out;
}

namespace {

Gate remap(const Gate &g, const std::vector<int> &map) {
    Gate out = g;
    for (int &q : out.targets) q = map[q];
    return out;
}

}  // namespace

CqmaCircuit compose_amplify(const CqmaCircuit &w, int t) {
    w.validate();
    require(t >= 1, ErrorCode::InvalidArgument, "amplification power must be at least 1");
    require(w.n >= 1, ErrorCode::InvalidArgument, "amplification needs at least one INPUT bit");
    // Copies are numbered breadth first: copy 0 is the root and the children
    // of copy c are c*n + 1 .. c*n + n. Leaves sit on level t-1.
    std::size_t copies = 0;
    std::size_t level_size = 1;
    std::size_t first_leaf = 0;
    for (int lvl = 0; lvl < t; ++lvl) {
        if (lvl == t - 1) first_leaf = copies;
        copies += level_size;
        require(level_size <= (1u << 20) / static_cast<std::size_t>(w.n), ErrorCode::CapExceeded,
                "amplified circuit is too large");
        level_size *= static_cast<std::size_t>(w.n);
    }
    const std::size_t n_leaves = copies - first_leaf;
    const std::size_t n_input = n_leaves * static_cast<std::size_t>(w.n);
    const std::size_t per_copy_c = static_cast<std::size_t>(w.p + w.n);
    const std::size_t total = n_input + copies * static_cast<std::size_t>(w.m) + copies * per_copy_c;
    require(total <= static_cast<std::size_t>(SparseState::kMaxQubits), ErrorCode::CapExceeded,
            "amplified circuit exceeds the qubit budget");

    CqmaCircuit out;
    out.n = static_cast<int>(n_input);
    out.m = static_cast<int>(copies) * w.m;
    out.p = static_cast<int>(copies * per_copy_c);
    out.circuit = QuantumCircuit(static_cast<int>(total));

    // Qubit map for each copy: W's A_j goes to the copy's private C'_j.
    std::vector<std::vector<int>> maps(copies);
    for (std::size_t c = 0; c < copies; ++c) {
        std::vector<int> &mp = maps[c];
        mp.resize(static_cast<std::size_t>(w.circuit.n_qubits()));
        const int b0 = out.n + static_cast<int>(c) * w.m;
        const int c0 = out.n + out.m + static_cast<int>(c * per_copy_c);
        for (int j = 0; j < w.m; ++j) mp[w.b(j)] = b0 + j;
        for (int j = 0; j < w.p; ++j) mp[w.c(j)] = c0 + j;
        for (int j = 0; j < w.n; ++j) mp[w.a(j)] = c0 + w.p + j;
        for (int q : w.scratch) out.scratch.push_back(mp[q]);
    }
    auto output_of = [&](std::size_t c) { return maps[c][w.output_qubit]; };
    for (std::size_t c = copies; c-- > 0;) {
        for (int j = 0; j < w.n; ++j) {
            int source;
            if (c >= first_leaf) {
                source = static_cast<int>((c - first_leaf) * static_cast<std::size_t>(w.n)) + j;
            } else {
                source = output_of(c * static_cast<std::size_t>(w.n) + 1 + static_cast<std::size_t>(j));
            }
            out.circuit.add(Gate::cnot(source, maps[c][w.a(j)]));
        }
        for (const Gate &g : w.circuit.gates()) out.circuit.add(remap(g, maps[c]));
    }
    out.output_qubit = output_of(0);
    std::sort(out.scratch.begin(), out.scratch.end());
    out.validate();
    return out;
}

VerifierCircuit or_of_outputs(const std::vector<VerifierCircuit> &subcircuits) {
    require(!subcircuits.empty(), ErrorCode::InvalidArgument, "or_of_outputs needs at least one subcircuit");
    for (const auto &s : subcircuits) s.validate();
    if (subcircuits.size() == 1) return subcircuits.front();
    VerifierCircuit out;
    for (const auto &s : subcircuits) {
        out.n += s.n;
        out.m += s.m;
        out.p += s.p;
    }
    out.p += 1;  // OR target
    const int total = out.n + out.m + out.p;
    require(total <= SparseState::kMaxQubits, ErrorCode::CapExceeded, "OR circuit exceeds the qubit budget");
    out.circuit = QuantumCircuit(total);
    int a_off = 0, b_off = out.n, c_off = out.n + out.m;
    std::vector<int> outputs;
    for (const auto &s : subcircuits) {
        std::vector<int> mp(static_cast<std::size_t>(s.circuit.n_qubits()));
        for (int j = 0; j < s.n; ++j) mp[s.a(j)] = a_off + j;
        for (int j = 0; j < s.m; ++j) mp[s.b(j)] = b_off + j;
        for (int j = 0; j < s.p; ++j) mp[s.c(j)] = c_off + j;
        a_off += s.n;
        b_off += s.m;
        c_off += s.p;
        for (const Gate &g : s.circuit.gates()) out.circuit.add(remap(g, mp));
        for (int q : s.scratch) out.scratch.push_back(mp[q]);
        outputs.push_back(mp[s.output_qubit]);
    }
    const int f = total - 1;
    // f = NOT(AND of negated outputs).
    for (int q : outputs) out.circuit.add(Gate::x(q));
    out.circuit.add(Gate::mcx(outputs, f));
    for (int q : outputs) out.circuit.add(Gate::x(q));
    out.circuit.add(Gate::x(f));
    out.output_qubit = f;
    out.validate();
    return out;
}

}  // namespace hamred
