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

#include "core/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

namespace hamred {

const char *verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds:
            return "holds";
        case Verdict::Fails:
            return "fails";
        case Verdict::Undetermined:
            return "undetermined";
    }
    return "undetermined";
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// Bits needed to store every value in [0, max_value].
int bits_for(int max_value) {
    int w = 1;
    while ((1 << w) <= max_value) ++w;
    return w;
}

// Gate list with helpers for the classical logic of the monotone wrapper.
struct GateList {
    std::vector<Gate> gates;
    std::size_t widest = 0;  // most controls on one MCX

    void mcx(std::vector<int> controls, int target) {
        if (controls.empty()) {
            gates.push_back(Gate::x(target));
        } else if (controls.size() == 1) {
            gates.push_back(Gate::cnot(controls[0], target));
        } else {
            widest = std::max(widest, controls.size());
            gates.push_back(Gate::mcx(std::move(controls), target));
        }
    }

    // Runs `body` with controls that fire exactly when `reg` (most
    // significant bit first) holds `value` and every qubit in `extra` is one.
    template <class Body>
    void on_value(const std::vector<int> &reg, int value, const std::vector<int> &extra, Body &&body) {
        const int w = static_cast<int>(reg.size());
        std::vector<int> flips;
        for (int k = 0; k < w; ++k) {
            if (!((value >> (w - 1 - k)) & 1)) flips.push_back(reg[k]);
        }
        for (int q : flips) gates.push_back(Gate::x(q));
        std::vector<int> controls = extra;
        controls.insert(controls.end(), reg.begin(), reg.end());
        body(controls);
        for (int q : flips) gates.push_back(Gate::x(q));
    }

    // reg += 1 (mod 2^w) when `control` is one. Bit k flips when every less
    // significant bit is one; the most significant bit goes first so that
    // each step still sees the old lower bits.
    void increment(const std::vector<int> &reg, int control) {
        const int w = static_cast<int>(reg.size());
        for (int k = 0; k < w; ++k) {
            std::vector<int> controls{control};
            for (int j = k + 1; j < w; ++j) controls.push_back(reg[j]);
            mcx(std::move(controls), reg[k]);
        }
    }
};

// Largest decode size over every y with at most half of R selected.
int max_decode_size(const EncodingTree &tree) {
    const int r = tree.graph().right_size;
    require(r <= 20, ErrorCode::CapExceeded, "the block count is found by enumeration over at most 20 right vertices");
    int best = 0;
    const std::uint64_t limit = std::uint64_t{1} << r;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (2 * std::popcount(mask) > r) continue;
        best = std::max(best, static_cast<int>(decode(tree, mask).leaves.size()));
    }
    return best;
}

QmwInstance build_monotone_wrapper(const VerifierCircuit &v_in, const EncodingTree &tree, bool quantum,
                                   QmwLayout *layout) {
    v_in.validate();
    const VerifierCircuit &v = v_in;
    require(tree.depth() == v.n, ErrorCode::InvalidArgument,
            "the tree depth (" + std::to_string(tree.depth()) + ") must equal the verifier's classical width (" +
                std::to_string(v.n) + ")");
    if (quantum) {
        require(v.m >= 1, ErrorCode::InvalidArgument, "to_qmw needs a verifier with a quantum proof; use to_qmsa");
    } else {
        require(v.m == 0, ErrorCode::InvalidArgument, "to_qmsa needs a verifier without a quantum proof (m = 0)");
    }
    const DisperserGraph &graph = tree.graph();
    const int R = graph.right_size;
    const int blocks = std::max(1, max_decode_size(tree));
    const int count_width = bits_for(R);
    const int slot_width = bits_for(tree.n_leaves());
    const int nv = v.n, mv = v.m, pv = v.p;

    // Register layout of W.
    int next = 0;
    auto take = [&](int k) {
        std::vector<int> out(static_cast<std::size_t>(k));
        for (int &q : out) q = next++;
        return out;
    };
    const std::vector<int> y = take(R);
    std::vector<std::vector<int>> z(static_cast<std::size_t>(blocks));
    for (auto &blk : z) blk = take(mv);
    const int c_start = next;
    const std::vector<int> count = take(count_width);
    const int t_flag = take(1)[0];
    const std::vector<int> cv = take(tree.n_vertices());
    const std::vector<int> dx = take(tree.n_leaves());
    const std::vector<int> slot = take(slot_width);
    std::vector<std::vector<int>> ell(static_cast<std::size_t>(blocks));
    for (auto &blk : ell) blk = take(nv);
    const std::vector<int> active = take(blocks);
    std::vector<std::vector<int>> vanc(static_cast<std::size_t>(blocks));
    for (auto &blk : vanc) blk = take(pv);
    const std::vector<int> u = take(blocks);
    const int f = take(1)[0];

    GateList gl;
    // Popcount of y.
    for (int i = 0; i < R; ++i) gl.increment(count, y[i]);
    // Flag for more than half of R.
    for (int val = R / 2 + 1; val <= R; ++val) {
        gl.on_value(count, val, {}, [&](const std::vector<int> &ctl) { gl.mcx(ctl, t_flag); });
    }
    // Vertices whose neighbour set lies inside y.
    for (int vert = 0; vert < tree.n_vertices(); ++vert) {
        std::vector<int> ctl;
        const std::uint64_t mask = graph.neighbor_mask(vert);
        for (int r = 0; r < R; ++r) {
            if ((mask >> r) & 1u) ctl.push_back(y[r]);
        }
        gl.mcx(std::move(ctl), cv[vert]);
    }
    // Leaves whose whole path is inside y.
    for (int leaf = 0; leaf < tree.n_leaves(); ++leaf) {
        Bits xb(static_cast<std::size_t>(nv));
        for (int i = 0; i < nv; ++i) xb[i] = static_cast<std::uint8_t>((leaf >> (nv - 1 - i)) & 1);
        std::vector<int> ctl;
        for (int vert : tree.path(xb)) ctl.push_back(cv[vert]);
        gl.mcx(std::move(ctl), dx[leaf]);
    }
    // Load decoded leaves into consecutive blocks.
    for (int leaf = 0; leaf < tree.n_leaves(); ++leaf) {
        for (int b = 0; b < blocks; ++b) {
            gl.on_value(slot, b, {dx[leaf]}, [&](const std::vector<int> &ctl) {
                for (int j = 0; j < nv; ++j) {
                    if ((leaf >> (nv - 1 - j)) & 1) gl.mcx(ctl, ell[b][j]);
                }
                gl.mcx(ctl, active[b]);
            });
        }
        gl.increment(slot, dx[leaf]);
    }
    // One copy of V per block.
    std::vector<int> outputs;
    std::vector<int> inner_scratch;
    for (int b = 0; b < blocks; ++b) {
        std::vector<int> map(static_cast<std::size_t>(v.circuit.n_qubits()));
        for (int j = 0; j < nv; ++j) map[v.a(j)] = ell[b][j];
        for (int j = 0; j < mv; ++j) map[v.b(j)] = z[b][j];
        for (int j = 0; j < pv; ++j) map[v.c(j)] = vanc[b][j];
        for (const Gate &g : v.circuit.gates()) {
            Gate h = g;
            for (int &q : h.targets) q = map[q];
            if (h.kind == GateKind::MCX) gl.widest = std::max(gl.widest, h.targets.size() - 1);
            gl.gates.push_back(std::move(h));
        }
        for (int s : v.scratch) inner_scratch.push_back(map[s]);
        outputs.push_back(map[v.output_qubit]);
    }
    for (int b = 0; b < blocks; ++b) gl.mcx({active[b], outputs[b]}, u[b]);
    // f = OR(t, u_0, ..., u_{B-1}).
    std::vector<int> or_inputs{t_flag};
    or_inputs.insert(or_inputs.end(), u.begin(), u.end());
    for (int q : or_inputs) gl.gates.push_back(Gate::x(q));
    gl.mcx(or_inputs, f);
    for (int q : or_inputs) gl.gates.push_back(Gate::x(q));
    gl.gates.push_back(Gate::x(f));

    // Clean ancillas for lowering the wide MCX gates later.
    const int spare = gl.widest > 2 ? static_cast<int>(gl.widest) - 2 : 0;
    std::vector<int> scratch = take(spare);
    scratch.insert(scratch.end(), inner_scratch.begin(), inner_scratch.end());

    int output = f;
    if (quantum) {
        gl.gates.push_back(Gate::swap(f, z[0][0]));
        output = z[0][0];
    }

    const int total = next;
    require(total <= SparseState::kMaxQubits, ErrorCode::CapExceeded,
            "the wrapper needs " + std::to_string(total) + " qubits; the simulator handles at most " +
                std::to_string(SparseState::kMaxQubits));
    QuantumCircuit circ(total);
    for (Gate &g : gl.gates) circ.add(std::move(g));

    QmwInstance q;
    q.W.circuit = std::move(circ);
    q.W.n = R;
    q.W.m = blocks * mv;
    q.W.p = total - c_start;
    q.W.output_qubit = output;
    q.W.scratch = std::move(scratch);
    q.quantum_choice = quantum;
    q.g = (tree.depth() + 1) * graph.degree;
    q.g_prime = R / 2;
    q.gap_inverted = q.g > q.g_prime;
    q.provenance = {{"reduction", quantum ? "to_qmw" : "to_qmsa"},
                    {"tree_depth", tree.depth()},
                    {"right_size", R},
                    {"degree", graph.degree},
                    {"blocks", blocks},
                    {"source_n", v.n},
                    {"source_m", v.m},
                    {"source_p", v.p}};
    q.validate();
    if (layout) {
        layout->right_size = R;
        layout->blocks = blocks;
        layout->count_width = count_width;
        layout->slot_width = slot_width;
        layout->gates = q.W.circuit.size();
    }
    return q;
}

}  // namespace

void QmwInstance::validate() const {
    W.validate();
    require(g >= 0 && g_prime >= 0, ErrorCode::InvalidArgument, "weight thresholds must be non-negative");
    if (!gap_inverted) {
        require(g <= g_prime, ErrorCode::InvalidArgument, "g must not exceed g'");
        require(g_prime <= W.n, ErrorCode::InvalidArgument, "g' must not exceed the INPUT width");
    }
    require(quantum_choice == (W.m > 0), ErrorCode::InvalidArgument,
            quantum_choice ? "a QMW instance needs a CHOICE register" : "a QMSA instance has no CHOICE register");
}

QmwInstance make_qmw(CqmaCircuit w, int g, int g_prime) {
    QmwInstance q;
    q.quantum_choice = w.m > 0;
    q.W = std::move(w);
    q.g = g;
    q.g_prime = g_prime;
    q.provenance = {{"reduction", "direct"}};
    q.validate();
    return q;
}

QmwInstance to_qmw(const VerifierCircuit &v, const EncodingTree &tree, QmwLayout *layout) {
    return build_monotone_wrapper(v, tree, true, layout);
}

QmwInstance to_qmsa(const VerifierCircuit &v, const EncodingTree &tree, QmwLayout *layout) {
    return build_monotone_wrapper(v, tree, false, layout);
}

QmwCheck verify_qmw(const QmwInstance &q, double slack) {
    q.validate();
    QmwCheck out;
    out.monotone = analyze_monotone(q.W, slack);
    const auto &mw = out.monotone.min_weight;
    out.yes = mw.has_value() && *mw <= q.g;
    out.no = !mw.has_value() || *mw > q.g_prime;
    return out;
}

// ---------------------------------------------------------------------------
// Quantum set cover

std::size_t QsscInstance::dim() const {
    std::size_t d = 1;
    for (int s : site_dims) d *= static_cast<std::size_t>(s);
    return d;
}

HermitianOperator QsscInstance::subset_sum(const std::vector<int> &subset) const {
    const auto d = static_cast<Eigen::Index>(dim());
    require(dim() <= dim_cap(), ErrorCode::CapExceeded, "QSSC dimension exceeds the dense cap");
    Matrix acc = Matrix::Zero(d, d);
    for (int i : subset) {
        require(i >= 0 && i < static_cast<int>(terms.size()), ErrorCode::InvalidArgument,
                "subset index " + std::to_string(i) + " out of range");
        accumulate(terms[static_cast<std::size_t>(i)], acc);
    }
    return HermitianOperator(std::move(acc));
}

void QsscInstance::validate() const {
    require(!terms.empty(), ErrorCode::InvalidArgument, "a QSSC instance needs terms");
    require(labels.size() == terms.size(), ErrorCode::InvalidArgument, "one label per term");
    for (const OperatorSum &t : terms) {
        require(t.site_dims() == site_dims, ErrorCode::InvalidArgument, "every term must live on the instance sites");
    }
    for (const OperatorSum &t : kitaev_terms) {
        require(t.site_dims() == site_dims, ErrorCode::InvalidArgument, "Kitaev terms must live on the instance sites");
    }
    require(kitaev_labels.size() == kitaev_terms.size(), ErrorCode::InvalidArgument, "one label per Kitaev term");
    require(alpha > beta, ErrorCode::InvalidArgument, "alpha must exceed beta");
    require(scale >= 1.0, ErrorCode::InvalidArgument, "scale must be at least one");
    require(g >= 0 && g <= g_prime, ErrorCode::InvalidArgument, "need 0 <= g <= g'");
    require(n + 2 == static_cast<int>(terms.size()), ErrorCode::InvalidArgument, "a QSSC instance has n + 2 terms");
}

namespace {

std::vector<OperatorSum> qssc_terms(const KitaevHamiltonian &k, double delta) {
    const int n = k.n();
    const int L = k.L();
    std::vector<OperatorSum> terms;
    for (int i = 0; i < n; ++i) {
        OperatorSum s(k.site_dims());
        s.add(k.at_clock_start({i}, ketbra(2, 0, 0), L + 1.0));
        terms.push_back(std::move(s));
    }
    OperatorSum pen(k.site_dims());
    pen.append(k.penalty(), delta + 1.0);
    terms.push_back(std::move(pen));
    OperatorSum rest(k.site_dims());
    rest.add({}, Matrix::Ones(1, 1), 1.0);
    rest.append(k.total(), -1.0);
    terms.push_back(std::move(rest));
    return terms;
}

std::string kitaev_label(const KitaevTerm &t) {
    switch (t.kind) {
        case TermKind::In:
            return "in" + std::to_string(t.index);
        case TermKind::Prop:
            return "prop" + std::to_string(t.index);
        case TermKind::Stab:
            return "stab" + std::to_string(t.index);
        case TermKind::Out:
            return "out";
    }
    return "?";
}

}  // namespace

QsscInstance qmw_to_qssc(const QmwInstance &q, const QsscOptions &opts) {
    q.validate();
    require(!q.gap_inverted, ErrorCode::Precondition, "the QMW instance has g > g' and no promise gap");
    require(opts.epsilon >= 0.0 && opts.epsilon < 1.0, ErrorCode::InvalidArgument, "epsilon must lie in [0, 1)");
    require(q.W.n <= 16, ErrorCode::CapExceeded, "the rejection bound enumerates at most 2^16 inputs");

    const CqmaCircuit w = decompose(q.W);
    KitaevHamiltonian k = compile(w, opts.clock);
    const int n = k.n(), m = k.m(), L = k.L();
    const double eps = opts.epsilon;

    QsscInstance out;
    out.site_dims = k.site_dims();
    out.n = n;
    out.m = m;
    out.p = k.p();
    out.L = L;
    out.clock = opts.clock;
    out.epsilon = eps;
    out.g = q.g + 2;
    out.g_prime = q.g_prime + 2;

    // Acceptance gap of the source: the smallest worst-case rejection
    // probability over rejected inputs.
    const MonotoneReport mono = analyze_monotone(k.circuit(), opts.slack);
    double b = std::numeric_limits<double>::infinity();
    int rejected = 0;
    for (std::size_t idx = 0; idx < mono.statuses.size(); ++idx) {
        if (mono.statuses[idx] != CqmaStatus::Rejects) continue;
        ++rejected;
        const HermitianOperator ax = acceptance_operator(k.circuit(), bits_of(idx, n));
        b = std::min(b, (1.0 - min_eigenvalue(ax)) / (L + 1));
    }
    if (rejected == 0) {
        b = (1.0 - eps) / (L + 1);
        out.b_source = "no rejected input; (1 - eps) / (L + 1)";
    } else {
        out.b_source = "min over " + std::to_string(rejected) + " rejected inputs of (1 - lambda_min(A_x)) / (L + 1)";
    }
    out.b = b;
    out.zeta = 2.0 * (1.0 + std::ldexp(1.0, 2 * (n + m))) / (L + 1);
    out.alpha = 1.0 - (out.zeta + 1.0) * eps;
    out.beta = 1.0 - b;
    require(out.alpha > out.beta, ErrorCode::NotCertified,
            "empty promise gap: alpha = " + fmt(out.alpha) + " <= beta = " + fmt(out.beta) + "; lower epsilon");
    out.scale = std::max(1.0, 1.0 / (out.alpha - out.beta));

    for (const KitaevTerm &t : k.terms()) {
        OperatorSum s(k.site_dims());
        s.add(t.term);
        out.kitaev_terms.push_back(std::move(s));
        out.kitaev_labels.push_back(kitaev_label(t));
    }

    // Fixed pieces of the certification.
    const auto d = static_cast<Eigen::Index>(k.dim());
    require(k.dim() <= dim_cap(), ErrorCode::CapExceeded, "QSSC dimension exceeds the dense cap");
    Matrix y1 = Matrix::Zero(d, d);
    for (int i = 0; i < n; ++i) {
        OperatorSum s(k.site_dims());
        s.add(k.at_clock_start({i}, ketbra(2, 0, 0), L + 1.0));
        accumulate(s, y1);
    }
    accumulate(k.h_out(), y1, -1.0);
    const HermitianOperator y1_op(std::move(y1));
    const HermitianOperator pen = assemble_or_zero(k.penalty());

    auto certify = [&](double delta, QsscCertificate &cert) {
        out.terms = qssc_terms(k, delta);
        std::vector<int> all(out.terms.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        cert.projection = check_projection_lemma(y1_op, pen.scaled(delta), tol::null, opts.slack);
        cert.lambda_min = min_eigenvalue(out.subset_sum(all));
        cert.margin = out.scale * (cert.lambda_min - out.alpha);
        return cert.projection.holds() && cert.margin >= -opts.slack;
    };

    QsscCertificate cert;
    double delta = 0;
    if (opts.delta) {
        delta = *opts.delta;
        require(delta > 0.0 && std::isfinite(delta), ErrorCode::InvalidArgument, "Delta must be positive");
        if (!certify(delta, cert)) {
            fail(ErrorCode::NotCertified,
                 "Delta = " + fmt(delta) + " does not certify: scaled margin " + fmt(cert.margin) +
                     ", projection bounds " + (cert.projection.holds() ? "hold" : "fail") +
                     (cert.projection.reason.empty() ? "" : " (" + cert.projection.reason + ")"));
        }
    } else {
        const double base = double(n) * n * std::pow(double(std::max(L, 1)), 5) / (eps > 0 ? eps : 1.0);
        delta = 1.0;
        while (delta < base) delta *= 2.0;
        require(delta <= opts.max_delta, ErrorCode::NotCertified,
                "the starting Delta " + fmt(delta) + " already exceeds max_delta " + fmt(opts.max_delta));
        while (!certify(delta, cert)) {
            if (delta * 2.0 > opts.max_delta) {
                fail(ErrorCode::NotCertified, "no Delta up to " + fmt(opts.max_delta) +
                                                  " certifies; last scaled margin " + fmt(cert.margin));
            }
            delta *= 2.0;
            ++cert.delta_doublings;
        }
    }
    out.delta = delta;
    out.certificate = cert;
    out.labels.clear();
    for (int i = 1; i <= n + 2; ++i) out.labels.push_back("G" + std::to_string(i));
    out.provenance = {{"reduction", "qmw_to_qssc"},
                      {"source", q.provenance},
                      {"delta_mode", opts.delta ? "explicit" : "auto"},
                      {"monotone", mono.monotone},
                      {"source_g", q.g},
                      {"source_g_prime", q.g_prime}};
    out.validate();
    return out;
}

CoverVerdict verify_qssc(const QsscInstance &q, const std::vector<int> &subset, double slack) {
    CoverVerdict out;
    const double lam = subset.empty() ? 0.0 : min_eigenvalue(q.subset_sum(subset));
    out.lambda_min = q.scale * lam;
    out.margin = out.lambda_min - q.scale * q.alpha;
    out.is_cover = out.margin >= -slack;
    return out;
}

QsscBruteForce brute_force_qssc(const QsscInstance &q, int max_size, double slack, std::uint64_t cap) {
    const int t = static_cast<int>(q.terms.size());
    require(max_size >= 0, ErrorCode::InvalidArgument, "max_size must be non-negative");
    max_size = std::min(max_size, t);
    std::uint64_t total = 0;
    for (int s = 0; s <= max_size; ++s) {
        long double c = 1;
        for (int i = 1; i <= s; ++i) c = c * (t - s + i) / i;
        total += static_cast<std::uint64_t>(c + 0.5L);
        require(total <= cap, ErrorCode::CapExceeded,
                "more than " + std::to_string(cap) + " subsets of size <= " + std::to_string(max_size));
    }
    QsscBruteForce out;
    out.max_size = max_size;
    const double beta_s = q.scale * q.beta;
    for (int s = 0; s <= max_size; ++s) {
        std::vector<int> idx(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            const CoverVerdict v = verify_qssc(q, idx, slack);
            ++out.subsets_checked;
            out.max_lambda = std::max(out.max_lambda, v.lambda_min);
            if (v.lambda_min > beta_s + slack && out.below_beta) {
                out.below_beta = false;
                out.violating_subset = idx;
            }
            if (v.is_cover && !out.smallest_cover) out.smallest_cover = idx;
            int i = s - 1;
            while (i >= 0 && idx[i] == t - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

bool brute_force_no(const QsscInstance &q, double slack) { return brute_force_qssc(q, q.g_prime, slack).below_beta; }

// ---------------------------------------------------------------------------
// Local Hamiltonian with a classical proof

VerifierCircuit prepare_lh_verifier(const VerifierCircuit &v_in) {
    const VerifierCircuit v = decompose(v_in);
    const int n = v.n, m = v.m, p = v.p;
    const int total = n + m + p + n;
    QuantumCircuit circ(total);
    // New C = old C followed by the n copies.
    auto copy = [&](int j) { return n + m + p + j; };
    for (int j = 0; j < n; ++j) circ.add(Gate::cnot(j, copy(j)));
    std::vector<int> map(static_cast<std::size_t>(v.circuit.n_qubits()));
    for (int j = 0; j < n; ++j) map[v.a(j)] = copy(j);
    for (int j = 0; j < m; ++j) map[v.b(j)] = n + j;
    for (int j = 0; j < p; ++j) map[v.c(j)] = n + m + j;
    for (const Gate &g : v.circuit.gates()) {
        Gate h = g;
        for (int &q : h.targets) q = map[q];
        circ.add(std::move(h));
    }
    const int out_q = map[v.output_qubit];
    circ.add(Gate::x(out_q));
    VerifierCircuit out;
    out.circuit = std::move(circ);
    out.n = n;
    out.m = m;
    out.p = p + n;
    out.output_qubit = out_q;
    for (int s : v.scratch) out.scratch.push_back(map[s]);
    out.validate();
    return out;
}

VerifierCircuit effective_verifier(const VerifierCircuit &prepared, int n, const Bits &c) {
    prepared.validate();
    require(prepared.n == n, ErrorCode::InvalidArgument, "classical width does not match the prepared verifier");
    require(static_cast<int>(c.size()) == n, ErrorCode::InvalidArgument, "c must have n bits");
    const auto &gates = prepared.circuit.gates();
    require(static_cast<int>(gates.size()) >= n, ErrorCode::InvalidArgument, "the copy phase is missing");
    const int total = prepared.circuit.n_qubits() - n;
    QuantumCircuit circ(total);
    for (int j = 0; j < n; ++j) {
        const Gate &g = gates[static_cast<std::size_t>(j)];
        require(g.kind == GateKind::CNOT && g.targets[0] == j && g.targets[1] >= prepared.n + prepared.m,
                ErrorCode::InvalidArgument, "gate " + std::to_string(j + 1) + " is not the copy of A_" +
                                                std::to_string(j + 1));
        const int target = g.targets[1] - n;
        circ.add(c[j] ? Gate::x(target) : Gate::identity(target));
    }
    for (std::size_t k = static_cast<std::size_t>(n); k < gates.size(); ++k) {
        Gate h = gates[k];
        for (int &q : h.targets) {
            require(q >= n, ErrorCode::InvalidArgument, "register A is used after the copy phase");
            q -= n;
        }
        circ.add(std::move(h));
    }
    VerifierCircuit out;
    out.circuit = std::move(circ);
    out.n = 0;
    out.m = prepared.m;
    out.p = prepared.p;
    out.output_qubit = prepared.output_qubit - n;
    for (int s : prepared.scratch) out.scratch.push_back(s - n);
    out.validate();
    return out;
}

HermitianOperator effective_hamiltonian(const VerifierCircuit &prepared, int n, const Bits &c, ClockMode mode) {
    return assemble(compile(effective_verifier(prepared, n, c), mode).total());
}

CqLhInstance cq_to_lh(const VerifierCircuit &v, double epsilon, ClockMode mode) {
    v.validate();
    require(epsilon >= 0.0 && epsilon < 1.0, ErrorCode::InvalidArgument, "epsilon must lie in [0, 1)");
    require(v.n <= 16, ErrorCode::CapExceeded, "the energy bound enumerates at most 2^16 classical proofs");
    const VerifierCircuit vd = decompose(v);
    CqLhInstance out;
    out.hamiltonian = compile(prepare_lh_verifier(vd), mode);
    out.n = v.n;
    out.epsilon = epsilon;
    const int L = out.hamiltonian.L();
    out.a = epsilon / (L + 1);

    double b = std::numeric_limits<double>::infinity();
    int accepted = 0;
    const std::uint64_t count = std::uint64_t{1} << v.n;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const Bits c = bits_of(idx, v.n);
        if (cqma_status(vd, c) != CqmaStatus::Accepts) continue;
        ++accepted;
        b = std::min(b, min_eigenvalue(effective_hamiltonian(out.hamiltonian.circuit(), v.n, c, mode)));
    }
    if (accepted == 0) {
        const double l = std::max(1, L);
        b = 1e-3 * (1.0 - std::sqrt(epsilon)) / (l * l * l);
        out.b_source = "no accepted proof; floor 1e-3 (1 - sqrt(eps)) / L^3";
    } else {
        out.b_source = "min over " + std::to_string(accepted) + " accepted proofs of lambda_min(H(c))";
    }
    out.b = b;
    out.scale = b > out.a ? std::max(1.0, 1.0 / (b - out.a)) : 1.0;
    out.provenance = {{"reduction", "cq_to_lh"},
                      {"clock", clock_mode_name(mode)},
                      {"source_n", v.n},
                      {"source_m", v.m},
                      {"source_p", v.p}};
    return out;
}

CqLhInstance qmw_to_lh_hw(const QmwInstance &q, double epsilon, ClockMode mode) {
    q.validate();
    CqLhInstance out = cq_to_lh(q.W, epsilon, mode);
    out.g = q.g;
    out.g_prime = q.g_prime;
    out.provenance["reduction"] = "qmw_to_lh_hw";
    out.provenance["source"] = q.provenance;
    return out;
}

double lh_history_witness_energy(const CqLhInstance &q, const Bits &c, Vector *witness) {
    const VerifierCircuit vc = effective_verifier(q.hamiltonian.circuit(), q.n, c);
    const KitaevHamiltonian kc = compile(vc, q.hamiltonian.clock().mode);
    const Eigensystem es = eig(acceptance_operator(kc.circuit(), {}));
    const Vector psi = es.vectors.col(es.vectors.cols() - 1);
    Vector hist = history_state(kc, psi);
    const double energy = expectation(kc.total(), hist);
    if (witness) *witness = std::move(hist);
    return energy;
}

CqLhCheck verify_cqlh(const CqLhInstance &q, double slack) {
    CqLhCheck out;
    out.no = true;
    const std::uint64_t count = std::uint64_t{1} << q.n;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const Bits c = bits_of(idx, q.n);
        const double lam = q.scale * min_eigenvalue(effective_hamiltonian(q.hamiltonian.circuit(), q.n, c,
                                                                          q.hamiltonian.clock().mode));
        out.lambda.push_back(lam);
        const int w = hamming_weight(c);
        if ((!q.g || w <= *q.g) && lam >= q.scale * q.b - slack && !out.yes) {
            out.yes = true;
            out.yes_witness = c;
        }
        if ((!q.g_prime || w <= *q.g_prime) && lam > q.scale * q.a + slack) out.no = false;
    }
    return out;
}

}  // namespace hamred
