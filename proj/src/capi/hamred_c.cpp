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

#include "hamred/hamred.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "core/commands.hpp"

struct hamred_artifact {
    hamred::io::Artifact value;
    std::string kind;
};

struct hamred_report {
    hamred::cmd::RunReport value;
};

namespace {

using hamred::ErrorCode;
using hamred::cmd::json;

thread_local std::string last_error;

hamred_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return HAMRED_ERR_INVALID_ARGUMENT;
        case ErrorCode::Schema: return HAMRED_ERR_SCHEMA;
        case ErrorCode::CapExceeded: return HAMRED_ERR_CAP_EXCEEDED;
        case ErrorCode::Precondition: return HAMRED_ERR_PRECONDITION;
        case ErrorCode::NotCertified: return HAMRED_ERR_NOT_CERTIFIED;
        case ErrorCode::SearchExhausted: return HAMRED_ERR_SEARCH_EXHAUSTED;
        case ErrorCode::Internal: return HAMRED_ERR_INTERNAL;
    }
    return HAMRED_ERR_INTERNAL;
}

ErrorCode code_of(hamred_status s) {
    switch (s) {
        case HAMRED_ERR_INVALID_ARGUMENT: return ErrorCode::InvalidArgument;
        case HAMRED_ERR_SCHEMA: return ErrorCode::Schema;
        case HAMRED_ERR_CAP_EXCEEDED: return ErrorCode::CapExceeded;
        case HAMRED_ERR_PRECONDITION: return ErrorCode::Precondition;
        case HAMRED_ERR_NOT_CERTIFIED: return ErrorCode::NotCertified;
        case HAMRED_ERR_SEARCH_EXHAUSTED: return ErrorCode::SearchExhausted;
        default: return ErrorCode::Internal;
    }
}

// Runs f, translating every exception into a status and a stored message.
template <class F>
hamred_status guarded(F &&f) {
    try {
        last_error.clear();
        f();
        return HAMRED_OK;
    } catch (const hamred::Error &e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return HAMRED_ERR_CAP_EXCEEDED;
    } catch (const std::exception &e) {
        last_error = e.what();
        return HAMRED_ERR_INTERNAL;
    }
}

void require_arg(const void *p, const char *name) {
    hamred::require(p != nullptr, ErrorCode::InvalidArgument, std::string(name) + " must not be NULL");
}

json options_of(const char *text) {
    if (text == nullptr || *text == '\0') return json::object();
    json j = hamred::io::parse_text(text);
    hamred::require(j.is_object(), ErrorCode::InvalidArgument, "options must be a JSON object");
    return j;
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hamred_artifact *wrap(hamred::io::Artifact a) {
    auto *h = new hamred_artifact{std::move(a), {}};
    h->kind = hamred::io::artifact_kind(h->value);
    return h;
}

void hand_out(hamred::cmd::Produced &&p, hamred_artifact **out, hamred_report **report) {
    require_arg(out, "out");
    hamred_artifact *a = wrap(std::move(p.artifact));
    if (report != nullptr) *report = new hamred_report{std::move(p.report)};
    *out = a;
}

void hand_out(hamred::cmd::RunReport &&r, hamred_report **report) {
    require_arg(report, "report");
    *report = new hamred_report{std::move(r)};
}

}  // namespace

extern "C" {

const char *hamred_version(void) { return hamred::io::kVersion; }

const char *hamred_status_name(hamred_status status) {
    if (status == HAMRED_OK) return "Ok";
    return hamred::error_code_name(code_of(status));
}

const char *hamred_last_error(void) { return last_error.c_str(); }

int hamred_status_exit_code(hamred_status status) {
    return status == HAMRED_OK ? 0 : hamred::cmd::exit_code(code_of(status));
}

size_t hamred_dim_cap(void) { return hamred::dim_cap(); }

void hamred_set_dim_cap(size_t cap) { hamred::set_dim_cap(cap); }

void hamred_string_free(char *s) { std::free(s); }

hamred_status hamred_artifact_parse(const char *json_text, hamred_artifact **out) {
    return guarded([&] {
        require_arg(json_text, "json_text");
        require_arg(out, "out");
        *out = wrap(hamred::io::artifact_from_json(hamred::io::parse_text(json_text)));
    });
}

hamred_status hamred_artifact_load(const char *path, hamred_artifact **out) {
    return guarded([&] {
        require_arg(path, "path");
        require_arg(out, "out");
        std::ifstream in(path, std::ios::binary);
        hamred::require(static_cast<bool>(in), ErrorCode::InvalidArgument, std::string("cannot open ") + path);
        std::ostringstream text;
        text << in.rdbuf();
        *out = wrap(hamred::io::artifact_from_json(hamred::io::parse_text(text.str())));
    });
}

hamred_status hamred_artifact_to_json(const hamred_artifact *a, char **out) {
    return guarded([&] {
        require_arg(a, "artifact");
        require_arg(out, "out");
        *out = copy_string(hamred::io::artifact_to_json(a->value).dump(2));
    });
}

hamred_status hamred_artifact_save(const hamred_artifact *a, const char *path) {
    return guarded([&] {
        require_arg(a, "artifact");
        require_arg(path, "path");
        std::ofstream f(path, std::ios::binary);
        hamred::require(static_cast<bool>(f), ErrorCode::InvalidArgument, std::string("cannot write ") + path);
        f << hamred::io::artifact_to_json(a->value).dump(2) << '\n';
        hamred::require(static_cast<bool>(f), ErrorCode::InvalidArgument, std::string("failed writing ") + path);
    });
}

const char *hamred_artifact_kind(const hamred_artifact *a) { return a == nullptr ? "" : a->kind.c_str(); }

void hamred_artifact_free(hamred_artifact *a) { delete a; }

hamred_status hamred_toy(const char *name, int n, hamred_artifact **out) {
    return guarded([&] {
        require_arg(name, "name");
        require_arg(out, "out");
        *out = wrap(hamred::cmd::toy(name, n));
    });
}

const char *hamred_toy_names(void) {
    static const std::string names = [] {
        std::string s;
        for (const std::string &n : hamred::cmd::toy_names()) s += (s.empty() ? "" : " ") + n;
        return s;
    }();
    return names.c_str();
}

hamred_status hamred_compile(const hamred_artifact *circuit, const char *options_json, hamred_artifact **out,
                             hamred_report **report) {
    return guarded([&] {
        require_arg(circuit, "circuit");
        hand_out(hamred::cmd::compile_circuit(circuit->value, options_of(options_json)), out, report);
    });
}

hamred_status hamred_reduce(const char *kind, const hamred_artifact *const *inputs, size_t n_inputs,
                            const char *options_json, hamred_artifact **out, hamred_report **report) {
    return guarded([&] {
        require_arg(kind, "kind");
        if (n_inputs > 0) require_arg(inputs, "inputs");
        std::vector<hamred::io::Artifact> in;
        for (size_t i = 0; i < n_inputs; ++i) {
            require_arg(inputs[i], "input");
            in.push_back(inputs[i]->value);
        }
        hand_out(hamred::cmd::reduce(kind, in, options_of(options_json)), out, report);
    });
}

hamred_status hamred_verify(const hamred_artifact *a, const char *options_json, hamred_report **report) {
    return guarded([&] {
        require_arg(a, "artifact");
        hand_out(hamred::cmd::verify(a->value, options_of(options_json)), report);
    });
}

hamred_status hamred_spectrum(const hamred_artifact *a, const char *options_json, hamred_report **report) {
    return guarded([&] {
        hand_out(hamred::cmd::spectrum(a == nullptr ? nullptr : &a->value, options_of(options_json)), report);
    });
}

hamred_status hamred_disperser_find(const char *options_json, hamred_artifact **out, hamred_report **report) {
    return guarded([&] { hand_out(hamred::cmd::disperser_find(options_of(options_json)), out, report); });
}

hamred_status hamred_disperser_verify(const hamred_artifact *graph_or_tree, const char *options_json,
                                      hamred_report **report) {
    return guarded([&] {
        require_arg(graph_or_tree, "graph_or_tree");
        hand_out(hamred::cmd::disperser_verify(graph_or_tree->value, options_of(options_json)), report);
    });
}

hamred_status hamred_lemma(const char *kind, const hamred_artifact *a, const hamred_artifact *b,
                           const char *options_json, hamred_report **report) {
    return guarded([&] {
        require_arg(kind, "kind");
        require_arg(a, "a");
        require_arg(b, "b");
        hand_out(hamred::cmd::lemma(kind, a->value, b->value, options_of(options_json)), report);
    });
}

hamred_verdict hamred_report_verdict(const hamred_report *r) {
    if (r == nullptr) return HAMRED_VERDICT_UNDETERMINED;
    switch (r->value.verdict()) {
        case hamred::Verdict::Holds: return HAMRED_VERDICT_HOLDS;
        case hamred::Verdict::Fails: return HAMRED_VERDICT_FAILS;
        case hamred::Verdict::Undetermined: return HAMRED_VERDICT_UNDETERMINED;
    }
    return HAMRED_VERDICT_UNDETERMINED;
}

int hamred_report_exit_code(const hamred_report *r) { return r == nullptr ? 2 : hamred::cmd::exit_code(r->value); }

size_t hamred_report_check_count(const hamred_report *r) { return r == nullptr ? 0 : r->value.checks.size(); }

hamred_status hamred_report_to_json(const hamred_report *r, char **out) {
    return guarded([&] {
        require_arg(r, "report");
        require_arg(out, "out");
        *out = copy_string(r->value.to_json().dump(2));
    });
}

void hamred_report_free(hamred_report *r) { delete r; }

}  // extern "C"
