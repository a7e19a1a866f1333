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

#include "core/toys.hpp"

namespace hamred::toys {

namespace {

VerifierCircuit layout(int n, int m, int p) {
    require(n >= 0 && m >= 0 && p >= 0, ErrorCode::InvalidArgument, "register sizes must be non-negative");
    VerifierCircuit v;
    v.n = n;
    v.m = m;
    v.p = p;
    v.circuit = QuantumCircuit(n + m + p);
    return v;
}

// B1 <- |0>, with the proof parked in C1.
void clear_b1(VerifierCircuit &v) {
    v.circuit.add(Gate::cnot(v.b(0), v.c(0)));
    v.circuit.add(Gate::cnot(v.c(0), v.b(0)));
}

VerifierCircuit finish(VerifierCircuit &v, int output) {
    v.output_qubit = output;
    v.validate();
    return v;
}

}  // namespace

VerifierCircuit accept_x1(int n) {
    require(n >= 1, ErrorCode::InvalidArgument, "accept_x1 needs at least one input bit");
    VerifierCircuit v = layout(n, 1, 1);
    clear_b1(v);
    v.circuit.add(Gate::cnot(v.a(0), v.b(0)));
    return finish(v, v.b(0));
}

VerifierCircuit deterministic_accept() {
    VerifierCircuit v = layout(1, 1, 1);
    clear_b1(v);
    v.circuit.add(Gate::x(v.b(0)));
    v.circuit.add(Gate::cnot(v.a(0), v.c(0)));
    return finish(v, v.b(0));
}

VerifierCircuit reject_all(int n) {
    VerifierCircuit v = layout(n, 1, 1);
    clear_b1(v);
    v.circuit.add(Gate::x(v.c(0)));
    return finish(v, v.b(0));
}

VerifierCircuit accept_all(int n) {
    VerifierCircuit v = layout(n, 1, 1);
    clear_b1(v);
    v.circuit.add(Gate::x(v.b(0)));
    return finish(v, v.b(0));
}

VerifierCircuit and2() {
    VerifierCircuit v = layout(2, 1, 1);
    v.circuit.add(Gate::mcx({v.a(0), v.a(1)}, v.c(0)));
    v.circuit.add(Gate::swap(v.b(0), v.c(0)));
    return finish(v, v.b(0));
}

VerifierCircuit parity() {
    VerifierCircuit v = layout(2, 1, 1);
    clear_b1(v);
    v.circuit.add(Gate::cnot(v.a(0), v.b(0)));
    v.circuit.add(Gate::cnot(v.a(1), v.b(0)));
    v.circuit.add(Gate::x(v.b(0)));
    return finish(v, v.b(0));
}

VerifierCircuit identity_verifier() {
    VerifierCircuit v = layout(0, 1, 0);
    v.circuit.add(Gate::identity(v.b(0)));
    return finish(v, v.b(0));
}

VerifierCircuit classical_x1(int n) {
    require(n >= 1, ErrorCode::InvalidArgument, "classical_x1 needs at least one input bit");
    VerifierCircuit v = layout(n, 0, 1);
    v.circuit.add(Gate::cnot(v.a(0), v.c(0)));
    return finish(v, v.c(0));
}

VerifierCircuit classical_accept_all(int n) {
    VerifierCircuit v = layout(n, 0, 1);
    v.circuit.add(Gate::x(v.c(0)));
    return finish(v, v.c(0));
}

VerifierCircuit classical_reject_all(int n) {
    VerifierCircuit v = layout(n, 0, 1);
    v.circuit.add(Gate::identity(v.c(0)));
    return finish(v, v.c(0));
}

}  // namespace hamred::toys
