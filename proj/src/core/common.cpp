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

#include "core/common.hpp"

#include <atomic>
#include <cstdlib>

namespace hamred {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::Schema: return "schema";
        case ErrorCode::CapExceeded: return "cap_exceeded";
        case ErrorCode::Precondition: return "precondition";
        case ErrorCode::NotCertified: return "not_certified";
        case ErrorCode::SearchExhausted: return "search_exhausted";
        case ErrorCode::Internal: return "internal";
    }
    return "unknown";
}

void fail(ErrorCode code, const std::string &what) { throw Error(code, what); }

namespace {

std::size_t initial_dim_cap() {
    if (const char *env = std::getenv("HAMRED_DIM_CAP")) {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 8192;
}

std::atomic<std::size_t> &cap_storage() {
    static std::atomic<std::size_t> cap{initial_dim_cap()};
    return cap;
}

}  // namespace

std::size_t dim_cap() { return cap_storage().load(); }

void set_dim_cap(std::size_t cap) {
    require(cap > 0, ErrorCode::InvalidArgument, "dimension cap must be positive");
    cap_storage().store(cap);
}

}  // namespace hamred
