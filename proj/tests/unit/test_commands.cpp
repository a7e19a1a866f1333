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

#include "core/commands.hpp"
#include "core/toys.hpp"

namespace hamred::cmd {
namespace {

std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

const Check &find_check(const RunReport &r, const std::string &name) {
    for (const Check &c : r.checks)
        if (c.name == name) return c;
    throw std::runtime_error("no check named " + name);
}

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorCode::Internal;
}

TEST(Commands, VerdictAggregationAndExitCodes) {
    RunReport r;
    EXPECT_EQ(r.verdict(), Verdict::Holds);
    EXPECT_EQ(exit_code(r), 0);
    r.add("a", true, 1.0);
    r.add("b", Verdict::Undetermined, 0.0);
    EXPECT_EQ(exit_code(r), 2);
    r.add("c", false, -1.0);
    EXPECT_EQ(exit_code(r), 1);
    EXPECT_EQ(exit_code(ErrorCode::Schema), 3);
    EXPECT_EQ(exit_code(ErrorCode::InvalidArgument), 3);
    EXPECT_EQ(exit_code(ErrorCode::CapExceeded), 2);
    EXPECT_EQ(exit_code(ErrorCode::NotCertified), 1);

    const json j = r.to_json();
    EXPECT_EQ(j["kind"], "report");
    EXPECT_EQ(j["verdict"], "fails");
    EXPECT_EQ(j["checks"].size(), 3u);
    EXPECT_EQ(j["checks"][2]["margin"], -1.0);
}

TEST(Commands, CompileEmptyCircuitHasNoPropagationTerms) {
    VerifierCircuit v;
    v.n = 1;
    v.p = 1;
    v.circuit = QuantumCircuit(2);
    v.output_qubit = 1;
    const Produced p = compile_circuit(v, json::object());
    EXPECT_EQ(p.report.data["L"], 0);
    EXPECT_EQ(p.report.data["term_groups"]["prop"], 0);
    EXPECT_TRUE(std::get<KitaevHamiltonian>(p.artifact).h_prop().empty());
}

TEST(Commands, CompileSingleGateListsFourGroups) {
    VerifierCircuit v;
    v.n = 1;
    v.p = 1;
    v.circuit = QuantumCircuit(2);
    v.circuit.add(Gate::x(1));
    v.output_qubit = 1;
    for (const char *clock : {"legal", "unary"}) {
        const Produced p = compile_circuit(v, {{"clock", clock}});
        const json &groups = p.report.data["term_groups"];
        ASSERT_EQ(groups.size(), 4u);
        // One ancilla initialisation, one propagation step, one output check,
        // and no clock-validity pairs for a single step.
        EXPECT_EQ(groups["in"], 1);
        EXPECT_EQ(groups["prop"], 1);
        EXPECT_EQ(groups["stab"], 0);
        EXPECT_EQ(groups["out"], 1);
        EXPECT_EQ(p.report.data["L"], 1);
    }
}

TEST(Commands, CompileLowersWideGates) {
    const Produced p = compile_circuit(toys::and2(), json::object());
    EXPECT_TRUE(p.report.parameters["decomposed"].get<bool>());
    EXPECT_GT(p.report.data["L"].get<int>(), 2);
}

TEST(Commands, ReduceChainAndCovers) {
    const Produced q = cmd::reduce("qmw", {toys::accept_x1(1)}, {{"g", 1}, {"g_prime", 1}});
    EXPECT_EQ(q.report.verdict(), Verdict::Holds);
    const Produced s = cmd::reduce("qssc", {q.artifact}, json::object());
    EXPECT_EQ(s.report.verdict(), Verdict::Holds);
    EXPECT_EQ(find_check(s.report, "projection_lemma").verdict, Verdict::Holds);

    const RunReport full = verify(s.artifact, {{"subset", {0, 1, 2}}});
    EXPECT_EQ(find_check(full, "cover").detail, "IsCover");
    const RunReport empty = verify(s.artifact, {{"subset", json::array()}});
    EXPECT_EQ(find_check(empty, "cover").detail, "NotCover");
    EXPECT_EQ(exit_code(empty), 1);

    const Produced r = cmd::reduce("qirr", {s.artifact}, {{"mode", "improved"}});
    EXPECT_EQ(r.report.verdict(), Verdict::Holds);
    const RunReport yes = verify(r.artifact, {{"cover", {0, 1, 2}}});
    EXPECT_EQ(yes.verdict(), Verdict::Holds);
    EXPECT_EQ(yes.data["route"], "yes_sufficient");
}

TEST(Commands, ReduceErrors) {
    EXPECT_EQ(code_of([] { cmd::reduce("qmsa", {toys::accept_x1(1)}, {{"g", 1}, {"g_prime", 1}}); }),
              ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { cmd::reduce("qmw", {toys::accept_x1(1)}, json::object()); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { cmd::reduce("banana", {}, json::object()); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { cmd::reduce("qssc", {toys::accept_x1(1)}, json::object()); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { cmd::reduce("qssc", {make_qmw(toys::accept_x1(1), 1, 1)}, {{"delta", "big"}}); }),
              ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { cmd::reduce("qssc", {make_qmw(toys::accept_x1(1), 1, 1)}, {{"delta", 1.0}}); }),
              ErrorCode::NotCertified);
}

TEST(Commands, BruteForceNoOnAndChain) {
    // and2 accepts only 11, so with g = g' = 1 the QMW instance is NO and
    // every QSSC subset of size up to g' + 2 stays below beta.
    const Produced q = cmd::reduce("qmw", {toys::and2()}, {{"g", 1}, {"g_prime", 1}});
    const Produced s = cmd::reduce("qssc", {q.artifact}, json::object());
    const RunReport r = verify(s.artifact, {{"brute_force", true}});
    EXPECT_EQ(r.verdict(), Verdict::Holds);
    const int terms = 4;
    EXPECT_EQ(r.data["subsets_checked"].get<std::uint64_t>(),
              binomial(terms, 0) + binomial(terms, 1) + binomial(terms, 2) + binomial(terms, 3));
    EXPECT_TRUE(r.data["smallest_cover"].is_null());
}

TEST(Commands, SpectrumOfPauliZ) {
    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    const Artifact a = HermitianOperator(z);
    const RunReport r = spectrum(&a, json::object());
    EXPECT_EQ(r.data["eigenvalues"], json::array({-1.0, 1.0}));
}

TEST(Commands, SpectrumPropagationFormula) {
    const RunReport r = spectrum(nullptr, {{"propagation", 3}});
    EXPECT_EQ(r.verdict(), Verdict::Holds);
    const auto values = r.data["eigenvalues"].get<std::vector<double>>();
    ASSERT_EQ(values.size(), 4u);
    for (int k = 0; k <= 3; ++k) EXPECT_NEAR(values[k], 1 - std::cos(std::numbers::pi * k / 4), 1e-10);
}

TEST(Commands, DisperserFindAndVerify) {
    const Produced g = disperser_find({{"left", 16}, {"right", 8}, {"degree", 4}, {"k", 2}, {"eps", 0.5}, {"seed", 1}});
    EXPECT_EQ(g.report.verdict(), Verdict::Holds);
    EXPECT_EQ(g.report.seed, 1u);
    const RunReport v = disperser_verify(g.artifact, {{"k", 2}, {"eps", 0.5}});
    EXPECT_EQ(v.verdict(), Verdict::Holds);
    EXPECT_EQ(v.data["subsets_checked"].get<std::uint64_t>(), binomial(16, 4));

    const Produced t = disperser_find({{"depth", 4}, {"right", 8}, {"degree", 4}, {"k", 2}, {"eps", 0.5}, {"seed", 1}});
    EXPECT_TRUE(std::holds_alternative<EncodingTree>(t.artifact));
    EXPECT_EQ(find_check(t.report, "encode_decode_roundtrip").verdict, Verdict::Holds);
    EXPECT_EQ(find_check(t.report, "decode_visit_bound").verdict, Verdict::Holds);

    const DisperserGraph sparse{4, 4, 1, {{0}, {0}, {0}, {0}}};
    EXPECT_EQ(disperser_verify(sparse, {{"k", 1}, {"eps", 0.0}}).verdict(), Verdict::Fails);
}

TEST(Commands, LemmaOnAnalyticPair) {
    Matrix p0 = Matrix::Zero(2, 2), pp = Matrix::Constant(2, 2, 0.5);
    p0(0, 0) = 1;
    const RunReport r = lemma("geometric", HermitianOperator(p0), HermitianOperator(pp), json::object());
    EXPECT_EQ(r.verdict(), Verdict::Holds);
    EXPECT_NEAR(r.data["bound"].get<double>(), 1 - std::sqrt(0.5), 1e-12);
    EXPECT_EQ(code_of([&] { lemma("banana", HermitianOperator(p0), HermitianOperator(pp), json::object()); }),
              ErrorCode::InvalidArgument);
}

TEST(Commands, ReportsAreDeterministicApartFromTiming) {
    auto run = [] {
        json j = disperser_find({{"left", 8}, {"right", 4}, {"degree", 2}, {"k", 1}, {"eps", 0.5}, {"seed", 9}})
                     .report.to_json();
        j.erase("timing");
        return j;
    };
    EXPECT_EQ(run(), run());
}

TEST(Commands, ToyNamesResolve) {
    for (const std::string &name : toy_names()) EXPECT_NO_THROW(toy(name, 2).validate()) << name;
    EXPECT_EQ(code_of([] { toy("banana", 1); }), ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace hamred::cmd
