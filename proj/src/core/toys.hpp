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

// Small deterministic verifiers used by tests, examples and the data files.
//
// Most of them open with CNOT(B1 -> C1), CNOT(C1 -> B1), which moves the
// quantum proof out of B1 and leaves B1 in |0>. Whatever follows then acts on
// a known state, so acceptance does not depend on the proof.

#ifndef HAMRED_CORE_TOYS_HPP
#define HAMRED_CORE_TOYS_HPP

#include "core/circuits.hpp"

namespace hamred::toys {

/// Accepts exactly the inputs with x_1 = 1, for every proof (m = p = 1, L = 3).
VerifierCircuit accept_x1(int n);

/// n = m = p = 1 with L = 4: clears B1, flips it, and copies A1 into C1.
/// Accepts every input with certainty.
VerifierCircuit deterministic_accept();

/// Clears B1 and flips C1 instead, so every input is rejected (L = 3).
VerifierCircuit reject_all(int n);

/// Clears B1 and flips it, so every input is accepted (L = 3).
VerifierCircuit accept_all(int n);

/// Accepts x_1 AND x_2 through an MCX into C1 swapped onto B1 (n = 2).
VerifierCircuit and2();

/// Accepts when x_1 XOR x_2 is 0. Not monotone (n = 2).
VerifierCircuit parity();

/// n = 0, m = 1, p = 0 with an identity gate; accepts |1> and rejects |0>, so
/// the universal quantifier rejects.
VerifierCircuit identity_verifier();

/// Classical-input circuits without a quantum proof (m = 0) accepting when
/// x_1 = 1, always, and never.
VerifierCircuit classical_x1(int n);
VerifierCircuit classical_accept_all(int n);
VerifierCircuit classical_reject_all(int n);

}  // namespace hamred::toys

#endif  // HAMRED_CORE_TOYS_HPP
