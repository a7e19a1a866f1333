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

// JSON file formats. Every artifact is an object with "version": "hamred/1"
// and a "kind" tag; complex numbers are [re, im] pairs and matrices are
// arrays of rows. Readers raise ErrorCode::Schema with a JSON path such as
// "$.gates[3].targets" naming the offending value.

#ifndef HAMRED_CORE_SERIALIZE_HPP
#define HAMRED_CORE_SERIALIZE_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "core/circuits.hpp"
#include "core/disperser.hpp"
#include "core/kitaev.hpp"
#include "core/ops.hpp"
#include "core/reductions.hpp"

namespace hamred::io {

using json = nlohmann::json;

inline constexpr const char *kVersion = "hamred/1";

/// Parses text, raising Schema with the byte offset on malformed input.
json parse_text(const std::string &text);
/// Checks the version field and returns the kind tag.
std::string kind_of(const json &j);

json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const json &j, const std::string &path = "$");

json to_json(const VerifierCircuit &v);
VerifierCircuit circuit_from_json(const json &j, const std::string &path = "$");

json to_json(const OperatorSum &s);
OperatorSum operator_sum_from_json(const json &j, const std::string &path = "$");

json to_json(const HermitianOperator &h);
HermitianOperator operator_from_json(const json &j, const std::string &path = "$");

/// Stores the circuit and clock mode together with the compiled terms; the
/// reader recompiles from the circuit.
json to_json(const KitaevHamiltonian &k);
KitaevHamiltonian kitaev_from_json(const json &j, const std::string &path = "$");

json to_json(const DisperserGraph &g);
DisperserGraph graph_from_json(const json &j, const std::string &path = "$");

json to_json(const EncodingTree &t);
EncodingTree tree_from_json(const json &j, const std::string &path = "$");

/// Kind "qmw", or "qmsa" when the instance has no CHOICE register.
json to_json(const QmwInstance &q);
QmwInstance qmw_from_json(const json &j, const std::string &path = "$");

json to_json(const QsscInstance &q);
QsscInstance qssc_from_json(const json &j, const std::string &path = "$");

json to_json(const QirrInstance &q);
QirrInstance qirr_from_json(const json &j, const std::string &path = "$");

/// Stores the prepared circuit; the reader recompiles it.
json to_json(const CqLhInstance &q);
CqLhInstance cqlh_from_json(const json &j, const std::string &path = "$");

using Artifact = std::variant<VerifierCircuit, OperatorSum, HermitianOperator, KitaevHamiltonian, DisperserGraph,
                              EncodingTree, QmwInstance, QsscInstance, QirrInstance, CqLhInstance>;

/// Dispatches on the kind tag.
Artifact artifact_from_json(const json &j);
json artifact_to_json(const Artifact &a);
std::string artifact_kind(const Artifact &a);

}  // namespace hamred::io

#endif  // HAMRED_CORE_SERIALIZE_HPP
