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

#include "core/serialize.hpp"
#include "core/toys.hpp"

namespace hamred::io {
namespace {

// Emits, prints, re-parses and emits again; both documents must agree.
template <class T, class Reader>
T roundtrip(const T &value, Reader read) {
    const json first = to_json(value);
    const T back = read(parse_text(first.dump()), "$");
    EXPECT_EQ(to_json(back), first);
    return back;
}

void expect_schema_error(const std::function<void()> &f, const std::string &path_fragment) {
    try {
        f();
        FAIL() << "expected a schema error";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Schema) << e.what();
        EXPECT_NE(std::string(e.what()).find(path_fragment), std::string::npos) << e.what();
    }
}

TEST(Serialize, CircuitRoundTrip) {
    VerifierCircuit v = toys::accept_x1(2);
    v.circuit.add(Gate::h(0));
    v.circuit.add(Gate::controlled(0, 1, Matrix::Identity(2, 2) * Complex(0, 1)));
    const VerifierCircuit back = roundtrip(v, circuit_from_json);
    EXPECT_EQ(back.n, v.n);
    EXPECT_EQ(back.output_qubit, v.output_qubit);
    EXPECT_EQ(back.circuit.size(), v.circuit.size());
    EXPECT_LE((circuit_unitary(back.circuit) - circuit_unitary(v.circuit)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Serialize, OperatorsRoundTrip) {
    OperatorSum s({2, 3});
    Matrix b = Matrix::Zero(3, 3);
    b(0, 1) = Complex(0.25, -0.5);
    b(1, 0) = Complex(0.25, 0.5);
    s.add({1}, b, 0.1);
    s.add({0}, Matrix::Identity(2, 2), -2.0 / 3.0);
    const OperatorSum back = roundtrip(s, operator_sum_from_json);
    EXPECT_EQ((assemble(back).matrix() - assemble(s).matrix()).cwiseAbs().maxCoeff(), 0.0);

    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    roundtrip(HermitianOperator(z), operator_from_json);
}

TEST(Serialize, KitaevRoundTrip) {
    const KitaevHamiltonian k = compile(toys::deterministic_accept(), ClockMode::Unary);
    const KitaevHamiltonian back = roundtrip(k, kitaev_from_json);
    EXPECT_EQ(back.clock().mode, ClockMode::Unary);
    EXPECT_EQ(back.terms().size(), k.terms().size());
}

TEST(Serialize, GraphAndTreeRoundTrip) {
    const DisperserGraph g{3, 8, 2, {{0, 1}, {2, 2}, {4, 5}}};
    const DisperserGraph gb = roundtrip(g, graph_from_json);
    EXPECT_EQ(gb.neighbors, g.neighbors);
    const EncodingTree t(1, g);
    const EncodingTree tb = roundtrip(t, tree_from_json);
    EXPECT_EQ(tb.depth(), 1);
}

TEST(Serialize, InstancesRoundTrip) {
    const QmwInstance q = make_qmw(toys::accept_x1(1), 1, 1);
    const QmwInstance qb = roundtrip(q, qmw_from_json);
    EXPECT_EQ(qb.g, 1);
    EXPECT_TRUE(qb.quantum_choice);

    const QmwInstance qmsa = make_qmw(toys::classical_x1(1), 0, 1);
    EXPECT_EQ(kind_of(to_json(qmsa)), "qmsa");
    EXPECT_FALSE(roundtrip(qmsa, qmw_from_json).quantum_choice);

    const QsscInstance s = qmw_to_qssc(q);
    const QsscInstance sb = roundtrip(s, qssc_from_json);
    EXPECT_EQ((sb.subset_sum({0, 1, 2}).matrix() - s.subset_sum({0, 1, 2}).matrix()).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(sb.certificate.projection.holds(), s.certificate.projection.holds());

    const QirrInstance r = qssc_to_qirr(s, QirrMode::Improved);
    const QirrInstance rb = roundtrip(r, qirr_from_json);
    EXPECT_EQ(rb.mode, QirrMode::Improved);
    EXPECT_EQ(rb.terms.size(), r.terms.size());

    const CqLhInstance lh = qmw_to_lh_hw(q);
    const CqLhInstance lb = roundtrip(lh, cqlh_from_json);
    EXPECT_EQ(lb.g, 1);
    EXPECT_EQ(lb.dim(), lh.dim());
}

TEST(Serialize, ArtifactDispatch) {
    const Artifact a = artifact_from_json(to_json(toys::parity()));
    EXPECT_EQ(artifact_kind(a), "circuit");
    EXPECT_TRUE(std::holds_alternative<VerifierCircuit>(a));
    EXPECT_EQ(artifact_to_json(a), to_json(toys::parity()));
    expect_schema_error([] { artifact_from_json(json{{"version", "hamred/1"}, {"kind", "banana"}}); }, "$.kind");
}

TEST(Serialize, SchemaErrorsCarryPaths) {
    expect_schema_error([] { parse_text("{\"version\": "); }, "malformed JSON");
    expect_schema_error([] { circuit_from_json(json{{"kind", "circuit"}}); }, "$.version");
    expect_schema_error([] { circuit_from_json(json{{"version", "hamred/0"}, {"kind", "circuit"}}); },
                        "unsupported version");

    json c = to_json(toys::accept_x1(2));
    c["gates"][1].erase("targets");
    expect_schema_error([&] { circuit_from_json(c); }, "$.gates[1].targets");

    c = to_json(toys::accept_x1(2));
    c["gates"][0]["targets"] = json::array({0, 99});
    expect_schema_error([&] { circuit_from_json(c); }, "$.gates[0].targets[1]");

    c = to_json(toys::accept_x1(2));
    c["gates"][0]["kind"] = "Toffoli3000";
    expect_schema_error([&] { circuit_from_json(c); }, "$.gates[0].kind");

    c = to_json(toys::accept_x1(2));
    c["gates"][0] = {{"kind", "custom"}, {"targets", {0}}, {"matrix", {{1, 1}, {0, 1}}}};
    expect_schema_error([&] { circuit_from_json(c); }, "$.gates[0]");

    json q = to_json(make_qmw(toys::accept_x1(1), 1, 1));
    q["W"]["kind"] = "graph";
    expect_schema_error([&] { qmw_from_json(q); }, "$.W.kind");

    json s = to_json(OperatorSum({2}));
    s["terms"] = json::array({{{"support", {0}}, {"block", {{1, 2}, {3, 4}}}}});
    expect_schema_error([&] { operator_sum_from_json(s); }, "$.terms[0]");
}

}  // namespace
}  // namespace hamred::io
