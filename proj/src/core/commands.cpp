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

#include "core/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>

#include "core/toys.hpp"

namespace hamred::cmd {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_object(const json &options) {
    require(options.is_null() || options.is_object(), ErrorCode::InvalidArgument, "options must be a JSON object");
}

bool has(const json &options, const char *key) {
    return options.is_object() && options.contains(key) && !options.at(key).is_null();
}

template <class T>
T get(const json &options, const char *key, T fallback) {
    if (!has(options, key)) return fallback;
    try {
        return options.at(key).get<T>();
    } catch (const json::exception &) {
        fail(ErrorCode::InvalidArgument, std::string("option '") + key + "' has the wrong type");
    }
}

template <class T>
std::optional<T> get_opt(const json &options, const char *key) {
    if (!has(options, key)) return std::nullopt;
    return get<T>(options, key, T{});
}

template <class T>
const T &expect(const Artifact &a, const char *command, const char *wanted) {
    const T *p = std::get_if<T>(&a);
    require(p != nullptr, ErrorCode::InvalidArgument,
            std::string(command) + " expects a " + wanted + ", got a " + io::artifact_kind(a));
    return *p;
}

json bits_json(const Bits &b) { return format_bits(b); }

json subset_json(const std::optional<std::vector<int>> &s) {
    if (!s) return nullptr;
    return *s;
}

// Verdict for a value that must be >= 0 up to the slack.
Verdict at_least_zero(double margin, double slack) { return margin >= -slack ? Verdict::Holds : Verdict::Fails; }

json qssc_summary(const QsscInstance &q) {
    return {{"dim", q.dim()},
            {"terms", q.terms.size()},
            {"alpha", q.alpha},
            {"beta", q.beta},
            {"scale", q.scale},
            {"g", q.g},
            {"g_prime", q.g_prime},
            {"delta", q.delta},
            {"delta_doublings", q.certificate.delta_doublings},
            {"b", q.b},
            {"b_source", q.b_source},
            {"lambda_min", q.certificate.lambda_min},
            {"L", q.L}};
}

json qirr_summary(const QirrInstance &q) {
    return {{"dim", q.dim()},       {"terms", q.terms.size()}, {"gamma", q.gamma}, {"delta", q.delta_threshold},
            {"h", q.h},             {"h_prime", q.h_prime},    {"r", q.r},         {"r_padded", q.r_padded},
            {"mode", qirr_mode_name(q.mode)}, {"scale", q.scale}};
}

json cqlh_summary(const CqLhInstance &q) {
    json j = {{"dim", q.dim()},  {"n", q.n},         {"a", q.a},          {"b", q.b},
              {"b_source", q.b_source}, {"scale", q.scale}, {"L", q.hamiltonian.L()}};
    if (q.g) j["g"] = *q.g;
    if (q.g_prime) j["g_prime"] = *q.g_prime;
    return j;
}

HermitianOperator operator_of(const Artifact &a, const json &options, const char *command) {
    if (const auto *h = std::get_if<HermitianOperator>(&a)) return *h;
    if (const auto *s = std::get_if<OperatorSum>(&a)) return assemble_or_zero(*s);
    if (const auto *k = std::get_if<KitaevHamiltonian>(&a)) return assemble_or_zero(k->total());
    if (const auto *q = std::get_if<QsscInstance>(&a)) {
        std::vector<int> all(q->terms.size());
        std::iota(all.begin(), all.end(), 0);
        return q->subset_sum(get<std::vector<int>>(options, "subset", all)).scaled(q->scale);
    }
    if (const auto *q = std::get_if<QirrInstance>(&a)) {
        std::vector<int> all(q->terms.size());
        std::iota(all.begin(), all.end(), 0);
        return q->subset_sum(get<std::vector<int>>(options, "subset", all)).scaled(q->scale);
    }
    if (const auto *q = std::get_if<CqLhInstance>(&a)) return assemble_or_zero(q->hamiltonian.total()).scaled(q->scale);
    fail(ErrorCode::InvalidArgument,
         std::string(command) + " expects an operator, operator sum or Hamiltonian, got a " + io::artifact_kind(a));
}

void check_tree(RunReport &r, const EncodingTree &t, int k) {
    int roundtrip_failures = 0;
    int worst_visits = 0;
    for (std::uint64_t leaf = 0; leaf < static_cast<std::uint64_t>(t.n_leaves()); ++leaf) {
        const Bits x = bits_of(leaf, t.depth());
        const DecodeResult d = decode(t, encode_mask(t, x));
        if (std::find(d.leaves.begin(), d.leaves.end(), x) == d.leaves.end()) ++roundtrip_failures;
        worst_visits = std::max(worst_visits, d.visited);
    }
    r.add("encode_decode_roundtrip", roundtrip_failures == 0, -static_cast<double>(roundtrip_failures),
          std::to_string(t.n_leaves()) + " leaves");
    const int bound = decode_visit_bound(k, t.depth());
    r.add("decode_visit_bound", worst_visits <= bound, static_cast<double>(bound - worst_visits),
          "most visits " + std::to_string(worst_visits) + ", bound " + std::to_string(bound));
}

void check_disperser(RunReport &r, const DisperserGraph &g, const json &options) {
    const int k = get<int>(options, "k", 0);
    const double eps = get<double>(options, "eps", 0.5);
    DisperserCheckOptions o;
    o.enumeration_cap = get<std::uint64_t>(options, "cap", o.enumeration_cap);
    o.sample_seed = get_opt<std::uint64_t>(options, "sample_seed");
    if (o.sample_seed) r.seed = *o.sample_seed;
    const DisperserVerdict v = verify_disperser(g, k, eps, o);
    r.data["subsets_checked"] = v.subsets_checked;
    r.data["exhaustive"] = v.exhaustive;
    r.data["required"] = v.required;
    r.data["min_coverage"] = v.min_coverage;
    r.data["witness"] = subset_json(v.witness);
    const Verdict verdict = v.holds ? (v.exhaustive ? Verdict::Holds : Verdict::Undetermined) : Verdict::Fails;
    r.add("disperser", verdict, static_cast<double>(v.min_coverage - v.required),
          std::to_string(v.subsets_checked) + (v.exhaustive ? " subsets checked" : " subsets sampled"));
}

template <class F>
auto timed(RunReport &r, F &&f) {
    const auto start = Clock::now();
    auto result = f();
    r.seconds = seconds_since(start);
    return result;
}

}  // namespace

void RunReport::add(std::string name, Verdict v, double margin, std::string detail) {
    checks.push_back({std::move(name), v, margin, std::move(detail)});
}

void RunReport::add(std::string name, bool holds, double margin, std::string detail) {
    add(std::move(name), holds ? Verdict::Holds : Verdict::Fails, margin, std::move(detail));
}

Verdict RunReport::verdict() const {
    bool undetermined = false;
    for (const Check &c : checks) {
        if (c.verdict == Verdict::Fails) return Verdict::Fails;
        undetermined |= c.verdict == Verdict::Undetermined;
    }
    return undetermined ? Verdict::Undetermined : Verdict::Holds;
}

json RunReport::to_json() const {
    json cs = json::array();
    for (const Check &c : checks) {
        json margin = std::isfinite(c.margin) ? json(c.margin) : json(nullptr);
        cs.push_back({{"name", c.name}, {"verdict", verdict_name(c.verdict)}, {"margin", margin}, {"detail", c.detail}});
    }
    return {{"version", io::kVersion},
            {"kind", "report"},
            {"command", command},
            {"parameters", parameters},
            {"verdict", verdict_name(verdict())},
            {"checks", cs},
            {"data", data},
            {"seed", seed ? json(*seed) : json(nullptr)},
            {"timing", {{"seconds", seconds}}}};
}

int exit_code(const RunReport &r) {
    switch (r.verdict()) {
        case Verdict::Holds: return 0;
        case Verdict::Fails: return 1;
        case Verdict::Undetermined: return 2;
    }
    return 1;
}

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
        case ErrorCode::Schema: return 3;
        case ErrorCode::CapExceeded: return 2;
        default: return 1;
    }
}

std::vector<std::string> toy_names() {
    return {"accept_x1", "deterministic_accept", "reject_all",           "accept_all",          "and2",
            "parity",    "identity",             "classical_x1",         "classical_accept_all", "classical_reject_all"};
}

VerifierCircuit toy(const std::string &name, int n) {
    using namespace toys;
    static const std::map<std::string, std::function<VerifierCircuit(int)>> table = {
        {"accept_x1", accept_x1},
        {"deterministic_accept", [](int) { return deterministic_accept(); }},
        {"reject_all", reject_all},
        {"accept_all", accept_all},
        {"and2", [](int) { return and2(); }},
        {"parity", [](int) { return parity(); }},
        {"identity", [](int) { return identity_verifier(); }},
        {"classical_x1", classical_x1},
        {"classical_accept_all", classical_accept_all},
        {"classical_reject_all", classical_reject_all},
    };
    const auto it = table.find(name);
    require(it != table.end(), ErrorCode::InvalidArgument, "unknown toy circuit '" + name + "'");
    return it->second(n);
}

Produced compile_circuit(const Artifact &circuit, const json &options) {
    require_object(options);
    RunReport r;
    r.command = "compile";
    const VerifierCircuit &v = expect<VerifierCircuit>(circuit, "compile", "circuit");
    const ClockMode mode = clock_mode_from_name(get<std::string>(options, "clock", "legal"));
    const bool lowered = !v.circuit.is_two_local();
    r.parameters = {{"clock", clock_mode_name(mode)}, {"decomposed", lowered}};
    KitaevHamiltonian k = timed(r, [&] { return compile(lowered ? decompose(v) : v, mode); });
    json counts = json::object();
    for (TermKind kind : {TermKind::In, TermKind::Prop, TermKind::Stab, TermKind::Out}) counts[term_kind_name(kind)] = 0;
    for (const KitaevTerm &t : k.terms()) counts[term_kind_name(t.kind)] = counts[term_kind_name(t.kind)].get<int>() + 1;
    r.data = {{"L", k.L()},
              {"circuit_qubits", k.n_circuit_qubits()},
              {"sites", k.site_dims().size()},
              {"dim", k.dim()},
              {"terms", k.terms().size()},
              {"term_groups", counts}};
    return {std::move(k), std::move(r)};
}

Produced reduce(const std::string &kind, const std::vector<Artifact> &inputs, const json &options) {
    require_object(options);
    RunReport r;
    r.command = "reduce " + kind;
    r.parameters = options.is_object() ? options : json::object();
    r.parameters["kind"] = kind;
    json input_kinds = json::array();
    for (const Artifact &a : inputs) input_kinds.push_back(io::artifact_kind(a));
    r.parameters["inputs"] = input_kinds;
    if (has(options, "seed")) r.seed = get<std::uint64_t>(options, "seed", 0);
    auto need = [&](std::size_t lo, std::size_t hi) {
        require(inputs.size() >= lo && inputs.size() <= hi, ErrorCode::InvalidArgument,
                "reduce " + kind + " takes " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) +
                    " input file(s), got " + std::to_string(inputs.size()));
    };
    const ClockMode clock = clock_mode_from_name(get<std::string>(options, "clock", "legal"));
    const double epsilon = get<double>(options, "epsilon", 0.0);
    const double slack = get<double>(options, "slack", tol::slack);

    if (kind == "qmw" || kind == "qmsa") {
        need(1, 2);
        const VerifierCircuit &v = expect<VerifierCircuit>(inputs[0], r.command.c_str(), "circuit");
        QmwInstance q;
        if (inputs.size() == 2) {
            const EncodingTree &t = expect<EncodingTree>(inputs[1], r.command.c_str(), "tree");
            QmwLayout layout;
            q = timed(r, [&] { return kind == "qmw" ? to_qmw(v, t, &layout) : to_qmsa(v, t, &layout); });
            r.data["layout"] = {{"right_size", layout.right_size},
                                {"blocks", layout.blocks},
                                {"count_width", layout.count_width},
                                {"slot_width", layout.slot_width},
                                {"gates", layout.gates}};
        } else {
            require(has(options, "g") && has(options, "g_prime"), ErrorCode::InvalidArgument,
                    "reduce " + kind + " without a tree needs the g and g_prime options");
            if (kind == "qmsa") {
                require(v.m == 0, ErrorCode::InvalidArgument, "qmsa needs a circuit without a quantum proof (m = 0)");
            } else {
                require(v.m > 0, ErrorCode::InvalidArgument, "qmw needs a circuit with a quantum proof (m > 0)");
            }
            q = timed(r, [&] { return make_qmw(v, get<int>(options, "g", 0), get<int>(options, "g_prime", 0)); });
        }
        r.data["n"] = q.W.n;
        r.data["m"] = q.W.m;
        r.data["p"] = q.W.p;
        r.data["gates"] = q.W.circuit.size();
        r.data["g"] = q.g;
        r.data["g_prime"] = q.g_prime;
        r.add("promise_gap", !q.gap_inverted, static_cast<double>(q.g_prime - q.g),
              q.gap_inverted ? "g exceeds g' at this tree size" : "");
        return {std::move(q), std::move(r)};
    }
    if (kind == "qssc") {
        need(1, 1);
        const QmwInstance &q = expect<QmwInstance>(inputs[0], r.command.c_str(), "qmw instance");
        QsscOptions o;
        o.delta = get_opt<double>(options, "delta");
        o.epsilon = epsilon;
        o.clock = clock;
        o.slack = slack;
        o.max_delta = get<double>(options, "max_delta", o.max_delta);
        QsscInstance s = timed(r, [&] { return qmw_to_qssc(q, o); });
        r.data = qssc_summary(s);
        const ProjectionLemmaReport &p = s.certificate.projection;
        r.add("projection_lemma", p.holds(), std::min(p.lower_margin, p.upper_margin), p.reason);
        r.add("full_set_cover", at_least_zero(s.certificate.margin, slack), s.certificate.margin);
        return {std::move(s), std::move(r)};
    }
    if (kind == "qirr") {
        need(1, 1);
        const QsscInstance &s = expect<QsscInstance>(inputs[0], r.command.c_str(), "qssc instance");
        const QirrMode mode = qirr_mode_from_name(get<std::string>(options, "mode", "basic"));
        QirrInstance q = timed(r, [&] { return qssc_to_qirr(s, mode); });
        r.data = qirr_summary(q);
        const double defect = qirr_projector_defect(q);
        r.add("projector_terms", defect <= tol::null, tol::null - defect);
        return {std::move(q), std::move(r)};
    }
    if (kind == "lh" || kind == "lh-hw") {
        need(1, 1);
        CqLhInstance q = timed(r, [&] {
            if (kind == "lh") return cq_to_lh(expect<VerifierCircuit>(inputs[0], r.command.c_str(), "circuit"), epsilon, clock);
            return qmw_to_lh_hw(expect<QmwInstance>(inputs[0], r.command.c_str(), "qmw instance"), epsilon, clock);
        });
        r.data = cqlh_summary(q);
        r.add("promise_gap", q.b > q.a, q.b - q.a, "b = " + q.b_source);
        return {std::move(q), std::move(r)};
    }
    if (kind == "amplify") {
        need(1, 1);
        const VerifierCircuit &v = expect<VerifierCircuit>(inputs[0], r.command.c_str(), "circuit");
        const int t = get<int>(options, "t", 2);
        VerifierCircuit w = timed(r, [&] { return compose_amplify(v, t); });
        r.data = {{"n", w.n}, {"m", w.m}, {"p", w.p}, {"gates", w.circuit.size()}, {"source_gates", v.circuit.size()}};
        return {std::move(w), std::move(r)};
    }
    fail(ErrorCode::InvalidArgument, "unknown reduction '" + kind + "' (qmw, qmsa, qssc, qirr, lh, lh-hw, amplify)");
}

RunReport verify(const Artifact &artifact, const json &options) {
    require_object(options);
    RunReport r;
    r.command = "verify";
    r.parameters = options.is_object() ? options : json::object();
    r.parameters["kind"] = io::artifact_kind(artifact);
    const double slack = get<double>(options, "slack", tol::slack);
    const auto start = Clock::now();

    auto monotone_check = [&](const MonotoneReport &m) {
        const Verdict v = !m.determined ? Verdict::Undetermined : (m.monotone ? Verdict::Holds : Verdict::Fails);
        r.add("monotone", v, 0.0, m.witness ? "witness " + format_bits(*m.witness) : "");
        r.data["min_weight"] = m.min_weight ? json(*m.min_weight) : json(nullptr);
        r.data["accepted"] = std::count(m.statuses.begin(), m.statuses.end(), CqmaStatus::Accepts);
    };

    if (const auto *v = std::get_if<VerifierCircuit>(&artifact)) {
        monotone_check(analyze_monotone(*v, slack));
    } else if (const auto *q = std::get_if<QmwInstance>(&artifact)) {
        const QmwCheck c = verify_qmw(*q, slack);
        monotone_check(c.monotone);
        r.data["yes"] = c.yes;
        r.data["no"] = c.no;
        r.add("promise", c.yes != c.no, 0.0, c.yes ? "yes instance" : (c.no ? "no instance" : "neither"));
    } else if (const auto *s = std::get_if<QsscInstance>(&artifact)) {
        r.data = qssc_summary(*s);
        if (has(options, "subset")) {
            const auto subset = get<std::vector<int>>(options, "subset", {});
            const CoverVerdict c = verify_qssc(*s, subset, slack);
            r.data["lambda_min"] = c.lambda_min;
            r.add("cover", c.is_cover, c.margin, c.is_cover ? "IsCover" : "NotCover");
        } else if (get<bool>(options, "brute_force", false)) {
            const int k = get<int>(options, "max_size", s->g_prime);
            const QsscBruteForce b = brute_force_qssc(*s, k, slack, get<std::uint64_t>(options, "cap", 1'000'000));
            r.data["max_size"] = b.max_size;
            r.data["subsets_checked"] = b.subsets_checked;
            r.data["max_lambda"] = b.max_lambda;
            r.data["violating_subset"] = subset_json(b.violating_subset);
            r.data["smallest_cover"] = subset_json(b.smallest_cover);
            r.add("below_beta", b.below_beta, s->scale * s->beta - b.max_lambda,
                  "every subset of size <= " + std::to_string(k));
        } else {
            std::vector<int> all(s->terms.size());
            std::iota(all.begin(), all.end(), 0);
            const CoverVerdict c = verify_qssc(*s, all, slack);
            r.add("full_set_cover", c.is_cover, c.margin);
            const ProjectionLemmaReport &p = s->certificate.projection;
            r.add("projection_lemma", p.holds(), std::min(p.lower_margin, p.upper_margin), p.reason);
        }
    } else if (const auto *q = std::get_if<QirrInstance>(&artifact)) {
        r.data = qirr_summary(*q);
        std::vector<int> subset(q->terms.size());
        std::iota(subset.begin(), subset.end(), 0);
        if (has(options, "subset")) {
            subset = get<std::vector<int>>(options, "subset", {});
        } else if (has(options, "cover")) {
            subset = qirr_succinct_subset(*q, get<std::vector<int>>(options, "cover", {}));
        }
        const QirrVerdict c = verify_qirr(*q, subset, slack);
        r.data["subset"] = subset;
        r.data["counted_size"] = q->counted_size(subset);
        r.data["route"] = qirr_route_name(c.route);
        r.data["lambda_min"] = c.lambda_min;
        r.data["witness_full"] = c.witness_full;
        r.data["witness_subset"] = c.witness_subset;
        const double margin = c.verdict == Verdict::Holds ? c.lambda_min - q->scale * q->gamma : 0.0;
        r.add("irredundant_cover", c.verdict, margin, c.detail);
    } else if (const auto *q = std::get_if<CqLhInstance>(&artifact)) {
        r.data = cqlh_summary(*q);
        const CqLhCheck c = verify_cqlh(*q, slack);
        r.data["lambda"] = c.lambda;
        r.data["yes"] = c.yes;
        r.data["no"] = c.no;
        r.data["yes_witness"] = c.yes_witness ? bits_json(*c.yes_witness) : json(nullptr);
        r.add("promise", c.yes != c.no, 0.0, c.yes ? "yes instance" : (c.no ? "no instance" : "neither"));
    } else if (const auto *g = std::get_if<DisperserGraph>(&artifact)) {
        check_disperser(r, *g, options);
    } else if (const auto *t = std::get_if<EncodingTree>(&artifact)) {
        check_disperser(r, t->graph(), options);
        check_tree(r, *t, get<int>(options, "k", 0));
    } else {
        fail(ErrorCode::InvalidArgument, "verify does not accept a " + io::artifact_kind(artifact) + "; use spectrum");
    }
    r.seconds = seconds_since(start);
    return r;
}

RunReport spectrum(const Artifact *artifact, const json &options) {
    require_object(options);
    RunReport r;
    r.command = "spectrum";
    r.parameters = options.is_object() ? options : json::object();
    const auto start = Clock::now();
    const int k = get<int>(options, "k", 6);
    require(k >= 1, ErrorCode::InvalidArgument, "k must be positive");
    if (has(options, "propagation")) {
        require(artifact == nullptr, ErrorCode::InvalidArgument, "spectrum --propagation takes no input file");
        const int L = get<int>(options, "propagation", 0);
        require(L >= 1, ErrorCode::InvalidArgument, "the propagation length must be at least 1");
        const RealVector values = eigenvalues(HermitianOperator(propagation_operator(L)));
        double worst = 0;
        std::vector<double> listed, expected;
        for (int j = 0; j <= L; ++j) {
            const double f = 1.0 - std::cos(std::numbers::pi * j / (L + 1));
            worst = std::max(worst, std::abs(values[j] - f));
            listed.push_back(values[j]);
            expected.push_back(f);
        }
        r.data = {{"eigenvalues", listed}, {"formula", expected}, {"max_deviation", worst}};
        r.add("matches_formula", worst <= tol::structural, tol::structural - worst);
    } else {
        require(artifact != nullptr, ErrorCode::InvalidArgument, "spectrum needs an input file or --propagation");
        r.parameters["kind"] = io::artifact_kind(*artifact);
        const HermitianOperator h = operator_of(*artifact, options, "spectrum");
        const RealVector values = eigenvalues(h);
        std::vector<double> listed;
        for (Eigen::Index j = 0; j < std::min<Eigen::Index>(k, values.size()); ++j) listed.push_back(values[j]);
        r.data = {{"dim", h.dim()}, {"eigenvalues", listed}};
    }
    r.seconds = seconds_since(start);
    return r;
}

Produced disperser_find(const json &options) {
    require_object(options);
    RunReport r;
    r.command = "disperser find";
    r.parameters = options.is_object() ? options : json::object();
    const std::optional<int> depth = get_opt<int>(options, "depth");
    const int left = depth ? (2 << *depth) - 1 : get<int>(options, "left", 0);
    const int right = get<int>(options, "right", 0);
    const int degree = get<int>(options, "degree", 0);
    const int k = get<int>(options, "k", 0);
    const double eps = get<double>(options, "eps", 0.5);
    const std::uint64_t seed = get<std::uint64_t>(options, "seed", 1);
    const int attempts = get<int>(options, "attempts", 1000);
    r.seed = seed;
    r.parameters["left"] = left;
    r.parameters["seed"] = seed;
    const auto start = Clock::now();
    DisperserGraph g = find_disperser(left, right, degree, k, eps, seed, attempts);
    json check = {{"k", k}, {"eps", eps}};
    check_disperser(r, g, check);
    if (depth) {
        EncodingTree t(*depth, std::move(g));
        check_tree(r, t, k);
        r.seconds = seconds_since(start);
        return {std::move(t), std::move(r)};
    }
    r.seconds = seconds_since(start);
    return {std::move(g), std::move(r)};
}

RunReport disperser_verify(const Artifact &graph_or_tree, const json &options) {
    require_object(options);
    require(std::holds_alternative<DisperserGraph>(graph_or_tree) || std::holds_alternative<EncodingTree>(graph_or_tree),
            ErrorCode::InvalidArgument,
            "disperser verify expects a graph or tree, got a " + io::artifact_kind(graph_or_tree));
    RunReport r = verify(graph_or_tree, options);
    r.command = "disperser verify";
    return r;
}

RunReport lemma(const std::string &kind, const Artifact &a, const Artifact &b, const json &options) {
    require_object(options);
    RunReport r;
    r.command = "lemma " + kind;
    r.parameters = options.is_object() ? options : json::object();
    const double null_tol = get<double>(options, "null_tol", tol::null);
    const double slack = get<double>(options, "slack", tol::slack);
    const HermitianOperator x = operator_of(a, json::object(), r.command.c_str());
    const HermitianOperator y = operator_of(b, json::object(), r.command.c_str());
    const auto start = Clock::now();
    if (kind == "geometric") {
        const GeometricLemmaReport g = check_geometric_lemma(x, y, null_tol, slack);
        r.data = {{"v", g.v},           {"angle", g.angle},          {"cos_angle", g.cos_angle},
                  {"bound", g.bound},   {"lambda_min", g.lambda_min}};
        r.add("geometric_lemma", g.holds, g.margin);
    } else if (kind == "projection") {
        const ProjectionLemmaReport p = check_projection_lemma(x, y, null_tol, slack);
        r.data = {{"gap", p.gap},
                  {"y1_norm", p.y1_norm},
                  {"lambda", p.lambda},
                  {"lambda_restricted", p.lambda_restricted},
                  {"lower_bound", p.lower_bound}};
        r.add("hypothesis", p.applicable, p.gap - 2 * p.y1_norm, p.reason);
        if (p.applicable) {
            r.add("lower_bound", p.lower_holds, p.lower_margin);
            r.add("upper_bound", p.upper_holds, p.upper_margin);
        }
    } else {
        fail(ErrorCode::InvalidArgument, "unknown lemma '" + kind + "' (geometric, projection)");
    }
    r.seconds = seconds_since(start);
    return r;
}

}  // namespace hamred::cmd
