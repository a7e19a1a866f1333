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

// Karp reductions between the problems handled by the library, and exact
// brute-force verifiers for the instances they produce.
//
// Chain:  verifier V + encoding tree  ->  QMW (monotone minimum weight)
//         QMW  ->  QSSC (quantum set cover over 5-local terms)
//         QSSC ->  QIRR (irredundant projector cover with tag and chaperone)
//         verifier -> cq local Hamiltonian, QMW -> weighted local Hamiltonian
//
// Every instance stores its raw thresholds together with the factor `scale`
// that brings the promise gap to at least one. Verifiers compare scaled
// eigenvalues against scaled thresholds with an explicit slack.

#ifndef HAMRED_CORE_REDUCTIONS_HPP
#define HAMRED_CORE_REDUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/circuits.hpp"
#include "core/disperser.hpp"
#include "core/kitaev.hpp"
#include "core/ops.hpp"

namespace hamred {

enum class Verdict { Holds, Fails, Undetermined };
const char *verdict_name(Verdict v);

// ---------------------------------------------------------------------------
// Monotone minimum weight

struct QmwInstance {
    CqmaCircuit W;
    int g = 0;
    int g_prime = 0;
    /// False for the QMSA variant, where W has no CHOICE register.
    bool quantum_choice = true;
    /// Set when the reduction's weight formulas give g > g'. The instance
    /// then carries no usable promise gap; it is kept for inspection.
    bool gap_inverted = false;
    nlohmann::json provenance = nlohmann::json::object();

    /// Throws InvalidArgument unless 0 <= g, g' <= n and g <= g' (or the gap
    /// is flagged as inverted), and the CHOICE width matches the variant.
    void validate() const;
};

/// Wraps a cQMA circuit with explicit thresholds.
QmwInstance make_qmw(CqmaCircuit w, int g, int g_prime);

struct QmwLayout {
    int right_size = 0;    // INPUT width
    int blocks = 0;        // parallel copies of V
    int count_width = 0;   // bits of the popcount register
    int slot_width = 0;    // bits of the slot counter
    std::size_t gates = 0;
};

/// Builds W from V and an encoding tree whose depth equals V's classical
/// width. INPUT is a subset y of the right vertices. W sets a flag when more
/// than half of R is selected; otherwise it marks every tree vertex whose
/// neighbours all lie in y, ANDs them along root paths, loads the decoded
/// leaves into consecutive blocks, runs one copy of V per block on its own
/// CHOICE block, and outputs the OR of the flag and of every active copy.
/// The number of blocks is the largest decode size over all y with at most
/// half of R, found by enumeration (right_size <= 20).
QmwInstance to_qmw(const VerifierCircuit &v, const EncodingTree &tree, QmwLayout *layout = nullptr);
/// Same construction for a verifier without a quantum proof (m = 0).
QmwInstance to_qmsa(const VerifierCircuit &v, const EncodingTree &tree, QmwLayout *layout = nullptr);

struct QmwCheck {
    MonotoneReport monotone;
    bool yes = false;  // some accepted input of weight <= g
    bool no = false;   // no accepted input of weight <= g'
};
QmwCheck verify_qmw(const QmwInstance &q, double slack = tol::slack);

// ---------------------------------------------------------------------------
// Quantum set cover

struct QsscOptions {
    /// Penalty strength. Unset selects the smallest power of two, starting
    /// from n^2 L^5 / eps (n^2 L^5 when eps = 0), for which the projection
    /// bounds and the full-set cover property both certify.
    std::optional<double> delta;
    double epsilon = 0.0;
    ClockMode clock = ClockMode::Legal;
    double slack = tol::slack;
    /// Auto mode gives up beyond this value with NotCertified.
    double max_delta = 1099511627776.0;  // 2^40
};

struct QsscCertificate {
    double lambda_min = 0;  // smallest eigenvalue of the full raw sum
    double margin = 0;      // scale * (lambda_min - alpha)
    ProjectionLemmaReport projection;
    int delta_doublings = 0;
};

struct QsscInstance {
    std::vector<int> site_dims;
    std::vector<OperatorSum> terms;  // raw G_1 .. G_{n+2}
    std::vector<std::string> labels;
    double alpha = 1;
    double beta = 0;
    int g = 0;
    int g_prime = 0;
    double scale = 1;  // multiplies every term and threshold
    double delta = 0;
    double epsilon = 0;
    double zeta = 0;
    double b = 0;
    std::string b_source;
    int n = 0, m = 0, p = 0, L = 0;
    ClockMode clock = ClockMode::Legal;
    /// The compiled Kitaev terms H_1 .. H_r in order, H_out last.
    std::vector<OperatorSum> kitaev_terms;
    std::vector<std::string> kitaev_labels;
    QsscCertificate certificate;
    nlohmann::json provenance = nlohmann::json::object();

    std::size_t dim() const;
    /// Raw sum of the listed terms (0-based indices).
    HermitianOperator subset_sum(const std::vector<int> &subset) const;
    /// Throws InvalidArgument for structural inconsistencies.
    void validate() const;
};

QsscInstance qmw_to_qssc(const QmwInstance &q, const QsscOptions &opts = {});

struct CoverVerdict {
    bool is_cover = false;
    double lambda_min = 0;  // scaled
    double margin = 0;      // scaled lambda_min - scaled alpha
};
CoverVerdict verify_qssc(const QsscInstance &q, const std::vector<int> &subset, double slack = tol::slack);

struct QsscBruteForce {
    int max_size = 0;
    std::uint64_t subsets_checked = 0;
    /// Every subset of size <= max_size has scaled lambda_min <= scaled beta + slack.
    bool below_beta = true;
    std::optional<std::vector<int>> violating_subset;
    double max_lambda = -1e300;  // largest scaled lambda_min seen
    /// Smallest subset of size <= max_size that is a cover, if any.
    std::optional<std::vector<int>> smallest_cover;
};
/// Enumerates every subset of size <= max_size. Throws CapExceeded beyond
/// `cap` subsets.
QsscBruteForce brute_force_qssc(const QsscInstance &q, int max_size, double slack = tol::slack,
                                std::uint64_t cap = 1'000'000);
/// True iff every subset of size <= g' lies below beta.
bool brute_force_no(const QsscInstance &q, double slack = tol::slack);

// ---------------------------------------------------------------------------
// Quantum irredundant cover

enum class QirrMode { Basic, Improved };
const char *qirr_mode_name(QirrMode m);
QirrMode qirr_mode_from_name(const std::string &name);

enum class QirrGroup { Choice, Penalty, Tail };

struct QirrTerm {
    OperatorSum op;  // c * projector
    double c = 1;
    QirrGroup group = QirrGroup::Choice;
    int i = 0;  // QSSC term index (Choice) or 1-based j (Penalty, Tail)
    int j = 0;  // chaperone value + 1 in Improved mode, else 0
    bool padded = false;
    std::string label;
};

struct QirrInstance {
    std::vector<int> site_dims;  // tag, QSSC sites, chaperone qubits
    std::vector<QirrTerm> terms;
    double gamma = 0;
    double delta_threshold = 0;  // the threshold written delta in the definition
    int h = 0;
    int h_prime = 0;
    double scale = 1;
    QirrMode mode = QirrMode::Basic;
    int r = 0;         // Kitaev term count
    int r_padded = 0;  // r rounded up to a power of two
    int chaperone_qubits = 0;
    int n = 0;  // QSSC classical term count
    double penalty = 0;  // Delta of the source instance
    double alpha = 0, beta = 0;
    nlohmann::json provenance = nlohmann::json::object();

    std::size_t dim() const;
    HermitianOperator subset_sum(const std::vector<int> &subset) const;
    /// Number of non-padded terms in a subset.
    int counted_size(const std::vector<int> &subset) const;
    void validate() const;
};

/// Builds the instance from the raw QSSC terms. Throws Precondition when
/// Delta < r' - 1 and Internal when a generated term fails the projector
/// check.
QirrInstance qssc_to_qirr(const QsscInstance &q, QirrMode mode = QirrMode::Basic);

/// Largest violation of (F/c)^2 = F/c over every term, measured on random
/// probe vectors with a fixed seed.
double qirr_projector_defect(const QirrInstance &q, int probes = 4);

/// Indices of the terms picked for a QSSC cover S' (0-based QSSC indices):
/// the classical terms of S' (all chaperone copies in Improved mode) plus
/// every penalty and tail term.
std::vector<int> qirr_succinct_subset(const QirrInstance &q, const std::vector<int> &qssc_subset);

/// max |F_{T'} - (K1 + K2)| for T' = qirr_succinct_subset(S'), with K1 and
/// K2 assembled independently from the raw QSSC terms.
double qirr_k_decomposition_defect(const QirrInstance &q, const QsscInstance &source,
                                   const std::vector<int> &qssc_subset);

enum class QirrRoute { YesSufficient, MissingPenalty, MissingTail, ReducedToCover, NumericSearch, None };
const char *qirr_route_name(QirrRoute r);

struct QirrVerdict {
    Verdict verdict = Verdict::Undetermined;  // Holds = YES certified, Fails = NO certified
    QirrRoute route = QirrRoute::None;
    double lambda_min = 0;      // scaled lambda_min(F_{T'})
    double witness_full = 0;    // scaled <psi|F_T|psi> for the NO witness
    double witness_subset = 0;  // scaled <psi|F_{T'}|psi>
    std::string detail;
};
QirrVerdict verify_qirr(const QirrInstance &q, const std::vector<int> &subset, double slack = tol::slack);

// ---------------------------------------------------------------------------
// Local Hamiltonian with a classical proof

struct CqLhInstance {
    KitaevHamiltonian hamiltonian;  // of the prepared verifier
    int n = 0;                      // classical bits, the leading qubits
    double a = 0;
    double b = 0;
    std::string b_source;
    double epsilon = 0;
    double scale = 1;
    std::optional<int> g;
    std::optional<int> g_prime;
    nlohmann::json provenance = nlohmann::json::object();

    std::size_t dim() const { return hamiltonian.dim(); }
};

/// Copies A into fresh ancillas, runs V'' on the copies, then flips the
/// output. The result accepts exactly when V'' rejects.
VerifierCircuit prepare_lh_verifier(const VerifierCircuit &v);

/// H(c): the prepared verifier with the copy phase replaced by X^{c_j} (an
/// identity gate when c_j = 0) and register A removed.
HermitianOperator effective_hamiltonian(const VerifierCircuit &prepared, int n, const Bits &c,
                                        ClockMode mode = ClockMode::Legal);
VerifierCircuit effective_verifier(const VerifierCircuit &prepared, int n, const Bits &c);

CqLhInstance cq_to_lh(const VerifierCircuit &v, double epsilon = 0.0, ClockMode mode = ClockMode::Legal);
CqLhInstance qmw_to_lh_hw(const QmwInstance &q, double epsilon = 0.0, ClockMode mode = ClockMode::Legal);

/// Energy under H(c) of the history state of the effective verifier fed
/// with its most accepted proof. For a verifier that accepts some proof with
/// certainty this is zero.
double lh_history_witness_energy(const CqLhInstance &q, const Bits &c, Vector *witness = nullptr);

struct CqLhCheck {
    std::vector<double> lambda;  // scaled lambda_min(H(c)) per c (bit i of the index is c_{i+1})
    std::optional<Bits> yes_witness;
    bool yes = false;
    bool no = false;
};
CqLhCheck verify_cqlh(const CqLhInstance &q, double slack = tol::slack);

}  // namespace hamred

#endif  // HAMRED_CORE_REDUCTIONS_HPP
