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

// Command layer shared by the C API and the command-line tool. Every command
// takes artifacts plus a JSON object of options and returns a RunReport; the
// producing commands also return an artifact.

#ifndef HAMRED_CORE_COMMANDS_HPP
#define HAMRED_CORE_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/serialize.hpp"

namespace hamred::cmd {

using io::Artifact;
using io::json;

struct Check {
    std::string name;
    Verdict verdict = Verdict::Undetermined;
    double margin = 0;  // positive when the check holds with room to spare
    std::string detail;
};

struct RunReport {
    std::string command;
    json parameters = json::object();
    std::vector<Check> checks;
    json data = json::object();
    std::optional<std::uint64_t> seed;
    double seconds = 0;

    void add(std::string name, Verdict v, double margin, std::string detail = {});
    void add(std::string name, bool holds, double margin, std::string detail = {});
    /// Fails if any check fails, else Undetermined if any is, else Holds.
    Verdict verdict() const;
    json to_json() const;
};

/// 0 when every check holds, 1 when one fails, 2 when one is undetermined.
int exit_code(const RunReport &r);
/// Exit code for an error escaping a command: 3 for usage and schema
/// problems, 2 when a cap stopped the computation, 1 otherwise.
int exit_code(ErrorCode code);

struct Produced {
    Artifact artifact;
    RunReport report;
};

/// Built-in toy circuits: accept_x1, deterministic_accept, reject_all,
/// accept_all, and2, parity, identity, classical_x1, classical_accept_all,
/// classical_reject_all. `n` sizes the families that take one.
VerifierCircuit toy(const std::string &name, int n);
std::vector<std::string> toy_names();

/// Options: clock ("legal" or "unary").
Produced compile_circuit(const Artifact &circuit, const json &options);

/// kind: qmw, qmsa, qssc, qirr, lh, lh-hw, amplify.
///   qmw / qmsa: inputs [circuit, tree], or [circuit] with options g, g_prime
///   qssc: [qmw] with delta, epsilon, clock, max_delta
///   qirr: [qssc] with mode
///   lh:   [circuit] with epsilon, clock
///   lh-hw: [qmw] with epsilon, clock
///   amplify: [circuit] with t
Produced reduce(const std::string &kind, const std::vector<Artifact> &inputs, const json &options);

/// Options: slack, subset (0-based term indices), cover (QSSC indices, for
/// qirr), brute_force, max_size, k and eps (graphs and trees).
RunReport verify(const Artifact &artifact, const json &options);

/// Options: k (how many of the lowest eigenvalues), subset, propagation (an
/// integer L; then no artifact is needed).
RunReport spectrum(const Artifact *artifact, const json &options);

/// Options: left, right, degree, k, eps, seed, attempts; depth instead of
/// left produces a tree.
Produced disperser_find(const json &options);
/// Options: k, eps, cap, sample_seed.
RunReport disperser_verify(const Artifact &graph_or_tree, const json &options);

/// kind: geometric or projection. Options: null_tol, slack.
RunReport lemma(const std::string &kind, const Artifact &a, const Artifact &b, const json &options);

}  // namespace hamred::cmd

#endif  // HAMRED_CORE_COMMANDS_HPP
