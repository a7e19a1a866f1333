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

#include "core/serialize.hpp"

#include <cmath>
#include <limits>

namespace hamred::io {

namespace {

[[noreturn]] void schema(const std::string &path, const std::string &what) {
    fail(ErrorCode::Schema, path + ": " + what);
}

// Read access to one JSON value with its path, for error messages.
class Node {
  public:
    Node(const json &j, std::string path) : j_(j), path_(std::move(path)) {}

    const json &raw() const { return j_; }
    const std::string &path() const { return path_; }

    Node at(const std::string &key) const {
        if (!j_.is_object()) schema(path_, "expected an object");
        auto it = j_.find(key);
        if (it == j_.end()) schema(path_ + "." + key, "missing field");
        return Node(*it, path_ + "." + key);
    }
    bool has(const std::string &key) const { return j_.is_object() && j_.contains(key) && !j_.at(key).is_null(); }
    Node at(std::size_t i) const { return Node(j_.at(i), path_ + "[" + std::to_string(i) + "]"); }

    std::size_t size() const {
        if (!j_.is_array()) schema(path_, "expected an array");
        return j_.size();
    }
    long long integer() const {
        if (!j_.is_number_integer()) schema(path_, "expected an integer");
        return j_.get<long long>();
    }
    int int_in(long long lo, long long hi) const {
        const long long v = integer();
        if (v < lo || v > hi) {
            schema(path_, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]");
        }
        return static_cast<int>(v);
    }
    double number() const {
        if (!j_.is_number()) schema(path_, "expected a number");
        const double v = j_.get<double>();
        if (!std::isfinite(v)) schema(path_, "expected a finite number");
        return v;
    }
    bool boolean() const {
        if (!j_.is_boolean()) schema(path_, "expected a boolean");
        return j_.get<bool>();
    }
    std::string string() const {
        if (!j_.is_string()) schema(path_, "expected a string");
        return j_.get<std::string>();
    }
    std::vector<int> ints(long long lo = std::numeric_limits<int>::min(),
                          long long hi = std::numeric_limits<int>::max()) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).int_in(lo, hi));
        return out;
    }
    std::vector<std::string> strings() const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).string());
        return out;
    }

  private:
    const json &j_;
    std::string path_;
};

// Library errors raised while rebuilding an object become schema errors at
// the object's path.
template <class F>
auto rebuild(const std::string &path, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error &e) {
        // Errors from nested readers already start with their path.
        if (e.code() == ErrorCode::CapExceeded || std::string(e.what()).rfind("$", 0) == 0) throw;
        schema(path, e.what());
    }
}

std::string kind_at(const Node &n) {
    if (!n.raw().is_object()) schema(n.path(), "expected an object");
    const std::string version = n.at("version").string();
    if (version != kVersion) schema(n.path() + ".version", "unsupported version '" + version + "' (expected hamred/1)");
    return n.at("kind").string();
}

void expect_kind(const Node &n, std::initializer_list<const char *> kinds) {
    const std::string k = kind_at(n);
    for (const char *want : kinds) {
        if (k == want) return;
    }
    std::string list;
    for (const char *want : kinds) list += (list.empty() ? "" : " or ") + std::string(want);
    schema(n.path() + ".kind", "expected " + list + ", got '" + k + "'");
}

json envelope(const char *kind) { return json{{"version", kVersion}, {"kind", kind}}; }

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from(const Node &n) {
    if (n.raw().is_number()) return {n.number(), 0.0};
    if (!n.raw().is_array() || n.raw().size() != 2) schema(n.path(), "expected a number or an [re, im] pair");
    return {n.at(0).number(), n.at(1).number()};
}

json provenance_or_empty(const Node &n) { return n.has("provenance") ? n.at("provenance").raw() : json::object(); }

json projection_to_json(const ProjectionLemmaReport &r) {
    return {{"applicable", r.applicable}, {"reason", r.reason},
            {"gap", r.gap},               {"y1_norm", r.y1_norm},
            {"lambda", r.lambda},         {"lambda_restricted", r.lambda_restricted},
            {"lower_bound", r.lower_bound}, {"lower_margin", r.lower_margin},
            {"upper_margin", r.upper_margin}, {"lower_holds", r.lower_holds},
            {"upper_holds", r.upper_holds}};
}

ProjectionLemmaReport projection_from(const Node &n) {
    ProjectionLemmaReport r;
    r.applicable = n.at("applicable").boolean();
    r.reason = n.at("reason").string();
    r.gap = n.at("gap").number();
    r.y1_norm = n.at("y1_norm").number();
    r.lambda = n.at("lambda").number();
    r.lambda_restricted = n.at("lambda_restricted").number();
    r.lower_bound = n.at("lower_bound").number();
    r.lower_margin = n.at("lower_margin").number();
    r.upper_margin = n.at("upper_margin").number();
    r.lower_holds = n.at("lower_holds").boolean();
    r.upper_holds = n.at("upper_holds").boolean();
    return r;
}

json operator_sums_to_json(const std::vector<OperatorSum> &v) {
    json out = json::array();
    for (const OperatorSum &s : v) out.push_back(to_json(s));
    return out;
}

std::vector<OperatorSum> operator_sums_from(const Node &n) {
    std::vector<OperatorSum> out;
    for (std::size_t i = 0; i < n.size(); ++i) out.push_back(operator_sum_from_json(n.at(i).raw(), n.at(i).path()));
    return out;
}

QirrGroup group_from(const Node &n) {
    const std::string s = n.string();
    if (s == "choice") return QirrGroup::Choice;
    if (s == "penalty") return QirrGroup::Penalty;
    if (s == "tail") return QirrGroup::Tail;
    schema(n.path(), "unknown term group '" + s + "'");
}

const char *group_name(QirrGroup g) {
    switch (g) {
        case QirrGroup::Choice:
            return "choice";
        case QirrGroup::Penalty:
            return "penalty";
        case QirrGroup::Tail:
            return "tail";
    }
    return "choice";
}

ClockMode clock_from(const Node &n) {
    const std::string s = n.string();
    if (s == "legal") return ClockMode::Legal;
    if (s == "unary") return ClockMode::Unary;
    schema(n.path(), "unknown clock mode '" + s + "'");
}

}  // namespace

json parse_text(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        fail(ErrorCode::Schema, "$: malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

std::string kind_of(const json &j) { return kind_at(Node(j, "$")); }

json matrix_to_json(const Matrix &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json &j, const std::string &path) {
    const Node n(j, path);
    const std::size_t rows = n.size();
    if (rows == 0) return Matrix(0, 0);
    const std::size_t cols = n.at(0).size();
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        const Node row = n.at(r);
        if (row.size() != cols) schema(row.path(), "ragged matrix row");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex_from(row.at(c));
    }
    return m;
}

// ---------------------------------------------------------------------------

json to_json(const VerifierCircuit &v) {
    json j = envelope("circuit");
    j["qubits"] = v.circuit.n_qubits();
    j["n"] = v.n;
    j["m"] = v.m;
    j["p"] = v.p;
    j["output"] = v.output_qubit;
    j["scratch"] = v.scratch;
    json gates = json::array();
    for (const Gate &g : v.circuit.gates()) {
        json gj{{"kind", gate_kind_name(g.kind)}, {"targets", g.targets}};
        if (g.kind == GateKind::Custom) gj["matrix"] = matrix_to_json(g.matrix);
        gates.push_back(std::move(gj));
    }
    j["gates"] = std::move(gates);
    return j;
}

VerifierCircuit circuit_from_json(const json &j, const std::string &path) {
    const Node n(j, path);
    expect_kind(n, {"circuit"});
    VerifierCircuit v;
    v.n = n.at("n").int_in(0, SparseState::kMaxQubits);
    v.m = n.at("m").int_in(0, SparseState::kMaxQubits);
    v.p = n.at("p").int_in(0, SparseState::kMaxQubits);
    const int total = n.has("qubits") ? n.at("qubits").int_in(0, SparseState::kMaxQubits) : v.n + v.m + v.p;
    if (total != v.n + v.m + v.p) schema(path + ".qubits", "must equal n + m + p");
    v.output_qubit = n.at("output").int_in(0, std::max(0, total - 1));
    if (n.has("scratch")) v.scratch = n.at("scratch").ints(0, total - 1);
    QuantumCircuit c(total);
    const Node gates = n.at("gates");
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Node g = gates.at(i);
        Gate gate;
        const std::string kind = g.at("kind").string();
        gate.kind = rebuild(g.at("kind").path(), [&] { return gate_kind_from_name(kind); });
        gate.targets = g.at("targets").ints(0, total - 1);
        if (gate.kind == GateKind::Custom) gate.matrix = matrix_from_json(g.at("matrix").raw(), g.path() + ".matrix");
        rebuild(g.path(), [&] {
            c.add(std::move(gate));
            return 0;
        });
    }
    v.circuit = std::move(c);
    rebuild(path, [&] {
        v.validate();
        return 0;
    });
    return v;
}

json to_json(const OperatorSum &s) {
    json j = envelope("operator_sum");
    j["site_dims"] = s.site_dims();
    json terms = json::array();
    for (const LocalTerm &t : s.terms()) {
        terms.push_back({{"support", t.support}, {"block", matrix_to_json(t.block)}, {"weight", t.weight}});
    }
    j["terms"] = std::move(terms);
    return j;
}

OperatorSum operator_sum_from_json(const json &j, const std::string &path) {
    const Node n(j, path);
    expect_kind(n, {"operator_sum"});
    const std::vector<int> dims = n.at("site_dims").ints(1, 1 << 20);
    OperatorSum s(dims);
    const Node terms = n.at("terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const Node t = terms.at(i);
        LocalTerm lt;
        lt.support = t.at("support").ints();
        lt.block = matrix_from_json(t.at("block").raw(), t.path() + ".block");
        lt.weight = t.has("weight") ? t.at("weight").number() : 1.0;
        rebuild(t.path(), [&] {
            s.add(std::move(lt));
            return 0;
        });
    }
    return s;
}

json to_json(const HermitianOperator &h) {
    json j = envelope("operator");
    j["dim"] = h.dim();
    j["matrix"] = matrix_to_json(h.matrix());
    return j;
}

HermitianOperator operator_from_json(const json &j, const std::string &path) {
    const Node n(j, path);
    expect_kind(n, {"operator"});
    Matrix m = matrix_from_json(n.at("matrix").raw(), path + ".matrix");
    if (n.has("dim") && n.at("dim").integer() != m.rows()) schema(path + ".dim", "does not match the matrix");
    return rebuild(path + ".matrix", [&] { return HermitianOperator(std::move(m)); });
}

json to_json(const KitaevHamiltonian &k) {
    json j = envelope("kitaev_hamiltonian");
    j["clock"] = clock_mode_name(k.clock().mode);
    j["circuit"] = to_json(k.circuit());
    j["summary"] = {{"L", k.L()},
                    {"qubits", k.n_circuit_qubits()},
                    {"dim", k.dim()},
                    {"terms", k.terms().size()},
                    {"in", k.h_in().size()},
                    {"prop", k.h_prop().size()},
                    {"stab", k.h_stab().size()},
                    {"out", k.h_out().size()}};
    j["hamiltonian"] = to_json(k.total());
    return j;
}

KitaevHamiltonian kitaev_from_json(const json &j, const std::string &path) {
    const Node n(j, path);
    expect_kind(n, {"kitaev_hamiltonian"});
    const ClockMode mode = clock_from(n.at("clock"));
    const VerifierCircuit v = circuit_from_json(n.at("circuit").raw(), path + ".circuit");
    return rebuild(path + ".circuit", [&] { return compile(v, mode); });
}

json to_json(const DisperserGraph &g) {
    json j = envelope("graph");
    j["left_size"] = g.left_size;
    j["right_size"] = g.right_size;
    j["degree"] = g.degree;
    j["neighbors"] = g.neighbors;
    return j;
}

DisperserGraph graph_from_json(const json &j, const std::string &path) {
    const Node n(j, path);
    expect_kind(n, {"graph"});
    DisperserGraph g;
    g.left_size = n.at("left_size").int_in(1, 1 << 22);
    g.right_size = n.at("right_size").int_in(1, 64);
    g.degree = n.at("degree").int_in(1, 64);
    const Node nb = n.at("neighbors");
    for (std::size_t i = 0; i < nb.size(); ++i) g.neighbors.push_back(nb.at(i).ints(0, g.right_size - 1));
    rebuild(path, [&] {
        g.validate();
        return 0;
    });
    return g;
}

json to_json(const EncodingTree &t) {
    json j = envelope("tree");
    j["depth"] = t.depth();
    j["ordering"] = "breadth_first";
    j["graph"] = to_json(t.graph());
    return j;
}

EncodingTree tree_from_json(const json &j, const std::string &path) {
    const Node n(j, path);
    expect_kind(n, {"tree"});
    const int depth = n.at("depth").int_in(0, 20);
    if (n.has("ordering") && n.at("ordering").string() != "breadth_first") {
        schema(path + ".ordering", "only breadth_first is supported");
    }
    DisperserGraph g = graph_from_json(n.at("graph").raw(), path + ".graph");
    return rebuild(path, [&] { return EncodingTree(depth, std::move(g)); });
}

json to_json(const QmwInstance &q) {
    json j = envelope(q.quantum_choice ? "qmw" : "qmsa");
    j["W"] = to_json(q.W);
    j["g"] = q.g;
    j["g_prime"] = q.g_prime;
    j["gap_inverted"] = q.gap_inverted;
    j["provenance"] = q.provenance;
    return j;
}

QmwInstance qmw_from_json(const json &j, const std::string &path) {
    const Node n(j, path);
    expect_kind(n, {"qmw", "qmsa"});
    QmwInstance q;
    q.W = circuit_from_json(n.at("W").raw(), path + ".W");
    q.g = n.at("g").int_in(0, 1 << 20);
    q.g_prime = n.at("g_prime").int_in(0, 1 << 20);
    q.gap_inverted = n.has("gap_inverted") && n.at("gap_inverted").boolean();
    q.quantum_choice = kind_at(n) == "qmw";
    q.provenance = provenance_or_empty(n);
    rebuild(path, [&] {
        q.validate();
        return 0;
    });
    return q;
}

json to_json(const QsscInstance &q) {
    json j = envelope("qssc");
    j["site_dims"] = q.site_dims;
    j["terms"] = operator_sums_to_json(q.terms);
    j["labels"] = q.labels;
    j["alpha"] = q.alpha;
    j["beta"] = q.beta;
    j["g"] = q.g;
    j["g_prime"] = q.g_prime;
    j["scale"] = q.scale;
    j["delta"] = q.delta;
    j["epsilon"] = q.epsilon;
    j["zeta"] = q.zeta;
    j["b"] = q.b;
    j["b_source"] = q.b_source;
    j["n"] = q.n;
    j["m"] = q.m;
    j["p"] = q.p;
    j["L"] = q.L;
    j["clock"] = clock_mode_name(q.clock);
    j["kitaev_terms"] = operator_sums_to_json(q.kitaev_terms);
    j["kitaev_labels"] = q.kitaev_labels;
    j["certificate"] = {{"lambda_min", q.certificate.lambda_min},
                        {"margin", q.certificate.margin},
                        {"delta_doublings", q.certificate.delta_doublings},
                        {"projection", projection_to_json(q.certificate.projection)}};
    j["provenance"] = q.provenance;
    return j;
}

QsscInstance qssc_from_json(const json &j, const std::string &path) {
    const Node n(j, path);
    expect_kind(n, {"qssc"});
    QsscInstance q;
    q.site_dims = n.at("site_dims").ints(1, 1 << 20);
    q.terms = operator_sums_from(n.at("terms"));
    q.labels = n.at("labels").strings();
    q.alpha = n.at("alpha").number();
    q.beta = n.at("beta").number();
    q.g = n.at("g").int_in(0, 1 << 20);
    q.g_prime = n.at("g_prime").int_in(0, 1 << 20);
    q.scale = n.at("scale").number();
    q.delta = n.at("delta").number();
    q.epsilon = n.at("epsilon").number();
    q.zeta = n.at("zeta").number();
    q.b = n.at("b").number();
    q.b_source = n.at("b_source").string();
    q.n = n.at("n").int_in(0, 64);
    q.m = n.at("m").int_in(0, 256);
    q.p = n.at("p").int_in(0, 256);
    q.L = n.at("L").int_in(0, 1 << 20);
    q.clock = clock_from(n.at("clock"));
    q.kitaev_terms = operator_sums_from(n.at("kitaev_terms"));
    q.kitaev_labels = n.at("kitaev_labels").strings();
    const Node c = n.at("certificate");
    q.certificate.lambda_min = c.at("lambda_min").number();
    q.certificate.margin = c.at("margin").number();
    q.certificate.delta_doublings = c.at("delta_doublings").int_in(0, 1 << 20);
    q.certificate.projection = projection_from(c.at("projection"));
    q.provenance = provenance_or_empty(n);
    rebuild(path, [&] {
        q.validate();
        return 0;
    });
    return q;
}

json to_json(const QirrInstance &q) {
    json j = envelope("qirr");
    j["site_dims"] = q.site_dims;
    json terms = json::array();
    for (const QirrTerm &t : q.terms) {
        terms.push_back({{"label", t.label},
                         {"group", group_name(t.group)},
                         {"i", t.i},
                         {"j", t.j},
                         {"c", t.c},
                         {"padded", t.padded},
                         {"op", to_json(t.op)}});
    }
    j["terms"] = std::move(terms);
    j["gamma"] = q.gamma;
    j["delta"] = q.delta_threshold;
    j["h"] = q.h;
    j["h_prime"] = q.h_prime;
    j["scale"] = q.scale;
    j["mode"] = qirr_mode_name(q.mode);
    j["r"] = q.r;
    j["r_padded"] = q.r_padded;
    j["chaperone_qubits"] = q.chaperone_qubits;
    j["n"] = q.n;
    j["penalty"] = q.penalty;
    j["alpha"] = q.alpha;
    j["beta"] = q.beta;
    j["provenance"] = q.provenance;
    return j;
}

QirrInstance qirr_from_json(const json &j, const std::string &path) {
    const Node n(j, path);
    expect_kind(n, {"qirr"});
    QirrInstance q;
    q.site_dims = n.at("site_dims").ints(1, 1 << 20);
    const Node terms = n.at("terms");
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const Node t = terms.at(k);
        QirrTerm term;
        term.label = t.at("label").string();
        term.group = group_from(t.at("group"));
        term.i = t.at("i").int_in(0, 1 << 20);
        term.j = t.at("j").int_in(0, 1 << 20);
        term.c = t.at("c").number();
        term.padded = t.at("padded").boolean();
        term.op = operator_sum_from_json(t.at("op").raw(), t.path() + ".op");
        q.terms.push_back(std::move(term));
    }
    q.gamma = n.at("gamma").number();
    q.delta_threshold = n.at("delta").number();
    q.h = n.at("h").int_in(0, 1 << 30);
    q.h_prime = n.at("h_prime").int_in(0, 1 << 30);
    q.scale = n.at("scale").number();
    q.mode = rebuild(path + ".mode", [&] { return qirr_mode_from_name(n.at("mode").string()); });
    q.r = n.at("r").int_in(1, 1 << 20);
    q.r_padded = n.at("r_padded").int_in(1, 1 << 20);
    q.chaperone_qubits = n.at("chaperone_qubits").int_in(0, 30);
    q.n = n.at("n").int_in(0, 64);
    q.penalty = n.at("penalty").number();
    q.alpha = n.at("alpha").number();
    q.beta = n.at("beta").number();
    q.provenance = provenance_or_empty(n);
    rebuild(path, [&] {
        q.validate();
        return 0;
    });
    return q;
}

json to_json(const CqLhInstance &q) {
    json j = envelope("cqlh");
    j["circuit"] = to_json(q.hamiltonian.circuit());
    j["clock"] = clock_mode_name(q.hamiltonian.clock().mode);
    j["n"] = q.n;
    j["a"] = q.a;
    j["b"] = q.b;
    j["b_source"] = q.b_source;
    j["epsilon"] = q.epsilon;
    j["scale"] = q.scale;
    j["g"] = q.g ? json(*q.g) : json(nullptr);
    j["g_prime"] = q.g_prime ? json(*q.g_prime) : json(nullptr);
    j["summary"] = {{"L", q.hamiltonian.L()}, {"dim", q.hamiltonian.dim()}, {"terms", q.hamiltonian.terms().size()}};
    j["provenance"] = q.provenance;
    return j;
}

CqLhInstance cqlh_from_json(const json &j, const std::string &path) {
    const Node n(j, path);
    expect_kind(n, {"cqlh"});
    CqLhInstance q;
    const VerifierCircuit v = circuit_from_json(n.at("circuit").raw(), path + ".circuit");
    const ClockMode mode = clock_from(n.at("clock"));
    q.hamiltonian = rebuild(path + ".circuit", [&] { return compile(v, mode); });
    q.n = n.at("n").int_in(0, 64);
    if (q.n != v.n) schema(path + ".n", "does not match the circuit");
    q.a = n.at("a").number();
    q.b = n.at("b").number();
    q.b_source = n.at("b_source").string();
    q.epsilon = n.at("epsilon").number();
    q.scale = n.at("scale").number();
    if (n.has("g")) q.g = n.at("g").int_in(0, 1 << 20);
    if (n.has("g_prime")) q.g_prime = n.at("g_prime").int_in(0, 1 << 20);
    q.provenance = provenance_or_empty(n);
    return q;
}

// ---------------------------------------------------------------------------

Artifact artifact_from_json(const json &j) {
    const std::string kind = kind_of(j);
    if (kind == "circuit") return circuit_from_json(j);
    if (kind == "operator_sum") return operator_sum_from_json(j);
    if (kind == "operator") return operator_from_json(j);
    if (kind == "kitaev_hamiltonian") return kitaev_from_json(j);
    if (kind == "graph") return graph_from_json(j);
    if (kind == "tree") return tree_from_json(j);
    if (kind == "qmw" || kind == "qmsa") return qmw_from_json(j);
    if (kind == "qssc") return qssc_from_json(j);
    if (kind == "qirr") return qirr_from_json(j);
    if (kind == "cqlh") return cqlh_from_json(j);
    schema("$.kind", "unknown artifact kind '" + kind + "'");
}

json artifact_to_json(const Artifact &a) {
    return std::visit([](const auto &v) { return to_json(v); }, a);
}

std::string artifact_kind(const Artifact &a) {
    struct Kind {
        std::string operator()(const VerifierCircuit &) const { return "circuit"; }
        std::string operator()(const OperatorSum &) const { return "operator_sum"; }
        std::string operator()(const HermitianOperator &) const { return "operator"; }
        std::string operator()(const KitaevHamiltonian &) const { return "kitaev_hamiltonian"; }
        std::string operator()(const DisperserGraph &) const { return "graph"; }
        std::string operator()(const EncodingTree &) const { return "tree"; }
        std::string operator()(const QmwInstance &q) const { return q.quantum_choice ? "qmw" : "qmsa"; }
        std::string operator()(const QsscInstance &) const { return "qssc"; }
        std::string operator()(const QirrInstance &) const { return "qirr"; }
        std::string operator()(const CqLhInstance &) const { return "cqlh"; }
    };
    return std::visit(Kind{}, a);
}

}  // namespace hamred::io
