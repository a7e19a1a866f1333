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

#include "core/disperser.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <random>

namespace hamred {

void DisperserGraph::validate() const {
    require(left_size >= 1, ErrorCode::InvalidArgument, "disperser needs at least one left vertex");
    require(right_size >= 1 && right_size <= 64, ErrorCode::InvalidArgument, "right side must have 1 to 64 vertices");
    require(degree >= 1, ErrorCode::InvalidArgument, "degree must be positive");
    require(static_cast<int>(neighbors.size()) == left_size, ErrorCode::InvalidArgument,
            "neighbour lists do not match the left size");
    for (const auto &list : neighbors) {
        require(static_cast<int>(list.size()) == degree, ErrorCode::InvalidArgument,
                "every left vertex must have exactly `degree` neighbours");
        for (int r : list) {
            require(r >= 0 && r < right_size, ErrorCode::InvalidArgument, "neighbour index out of range");
        }
    }
}

std::uint64_t DisperserGraph::neighbor_mask(int v) const {
    std::uint64_t m = 0;
    for (int r : neighbors[static_cast<std::size_t>(v)]) m |= std::uint64_t{1} << r;
    return m;
}

DisperserGraph DisperserGraph::complete(int left_size, int right_size) {
    DisperserGraph g{left_size, right_size, right_size, {}};
    std::vector<int> all(static_cast<std::size_t>(right_size));
    for (int r = 0; r < right_size; ++r) all[r] = r;
    g.neighbors.assign(static_cast<std::size_t>(left_size), all);
    g.validate();
    return g;
}

namespace {

int required_coverage(int right_size, double eps) {
    return static_cast<int>(std::ceil((1.0 - eps) * right_size - 1e-12));
}

// C(n, r), saturating at `limit + 1`.
std::uint64_t binomial_capped(int n, int r, std::uint64_t limit) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long double acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > static_cast<long double>(limit)) return limit + 1;
    }
    return static_cast<std::uint64_t>(acc + 0.5L);
}

}  // namespace

DisperserVerdict verify_disperser(const DisperserGraph &g, int k, double eps, const DisperserCheckOptions &opts) {
    g.validate();
    require(k >= 0 && k < 31, ErrorCode::InvalidArgument, "k must lie in [0, 30]");
    require(eps >= 0.0 && eps <= 1.0, ErrorCode::InvalidArgument, "eps must lie in [0, 1]");
    DisperserVerdict out;
    out.required = required_coverage(g.right_size, eps);
    out.min_coverage = g.right_size;
    const int size = 1 << k;
    if (size > g.left_size) {
        out.holds = true;  // no subset of that size exists
        return out;
    }
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(g.left_size));
    for (int v = 0; v < g.left_size; ++v) masks[v] = g.neighbor_mask(v);

    const std::uint64_t total = binomial_capped(g.left_size, size, opts.enumeration_cap);
    if (total > opts.enumeration_cap) {
        if (!opts.sample_seed) {
            fail(ErrorCode::CapExceeded, "C(" + std::to_string(g.left_size) + ", " + std::to_string(size) +
                                             ") subsets exceed the enumeration cap; enable sampling");
        }
        out.exhaustive = false;
        std::mt19937_64 rng(*opts.sample_seed);
        std::vector<int> pool(static_cast<std::size_t>(g.left_size));
        for (int v = 0; v < g.left_size; ++v) pool[v] = v;
        for (std::uint64_t trial = 0; trial < opts.sample_trials; ++trial) {
            // Partial Fisher-Yates for a uniform subset.
            for (int i = 0; i < size; ++i) {
                std::uniform_int_distribution<int> pick(i, g.left_size - 1);
                std::swap(pool[i], pool[pick(rng)]);
            }
            std::uint64_t m = 0;
            for (int i = 0; i < size; ++i) m |= masks[pool[i]];
            const int cov = std::popcount(m);
            ++out.subsets_checked;
            out.min_coverage = std::min(out.min_coverage, cov);
            if (cov < out.required) {
                std::vector<int> w(pool.begin(), pool.begin() + size);
                std::sort(w.begin(), w.end());
                out.witness = std::move(w);
                return out;
            }
        }
        out.holds = true;
        return out;
    }

    // Lexicographic enumeration with prefix unions kept on a stack.
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::vector<std::uint64_t> prefix(static_cast<std::size_t>(size) + 1, 0);
    for (int i = 0; i < size; ++i) {
        idx[i] = i;
        prefix[i + 1] = prefix[i] | masks[i];
    }
    while (true) {
        const int cov = std::popcount(prefix[size]);
        ++out.subsets_checked;
        out.min_coverage = std::min(out.min_coverage, cov);
        if (cov < out.required) {
            out.witness = idx;
            return out;
        }
        int i = size - 1;
        while (i >= 0 && idx[i] == g.left_size - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        prefix[i + 1] = prefix[i] | masks[idx[i]];
        for (int j = i + 1; j < size; ++j) {
            idx[j] = idx[j - 1] + 1;
            prefix[j + 1] = prefix[j] | masks[idx[j]];
        }
    }
    out.holds = true;
    return out;
}

DisperserGraph find_disperser(int left_size, int right_size, int degree, int k, double eps, std::uint64_t seed,
                              int max_attempts) {
    require(left_size >= 1 && right_size >= 1 && right_size <= 64 && degree >= 1, ErrorCode::InvalidArgument,
            "disperser sizes must be positive and the right side at most 64");
    const int required = required_coverage(right_size, eps);
    const int size = 1 << k;
    if (size <= left_size && static_cast<long long>(size) * degree < required) {
        fail(ErrorCode::SearchExhausted, "no graph can pass: " + std::to_string(size) + " vertices of degree " +
                                             std::to_string(degree) + " cover at most " +
                                             std::to_string(size * degree) + " < " + std::to_string(required) +
                                             " right vertices (0 attempts)");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, right_size - 1);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        DisperserGraph g{left_size, right_size, degree, {}};
        g.neighbors.resize(static_cast<std::size_t>(left_size));
        for (auto &list : g.neighbors) {
            list.resize(static_cast<std::size_t>(degree));
            for (int &r : list) r = pick(rng);
        }
        if (verify_disperser(g, k, eps).holds) return g;
    }
    fail(ErrorCode::SearchExhausted, "no disperser found after " + std::to_string(max_attempts) + " attempts");
}

EncodingTree::EncodingTree(int depth, DisperserGraph graph) : depth_(depth), graph_(std::move(graph)) {
    require(depth >= 0 && depth <= 20, ErrorCode::InvalidArgument, "tree depth must lie in [0, 20]");
    graph_.validate();
    require(graph_.left_size == (2 << depth) - 1, ErrorCode::InvalidArgument,
            "a tree of depth " + std::to_string(depth) + " needs " + std::to_string((2 << depth) - 1) +
                " left vertices");
}

int EncodingTree::leaf_vertex(const Bits &x) const { return path(x).back(); }

std::vector<int> EncodingTree::path(const Bits &x) const {
    require(static_cast<int>(x.size()) == depth_, ErrorCode::InvalidArgument,
            "leaf string length must equal the tree depth");
    std::vector<int> out{0};
    int v = 0;
    for (auto b : x) {
        v = 2 * v + 1 + (b ? 1 : 0);
        out.push_back(v);
    }
    return out;
}

std::uint64_t encode_mask(const EncodingTree &t, const Bits &x) {
    std::uint64_t m = 0;
    for (int v : t.path(x)) m |= t.graph().neighbor_mask(v);
    return m;
}

std::vector<int> encode(const EncodingTree &t, const Bits &x) {
    const std::uint64_t m = encode_mask(t, x);
    std::vector<int> out;
    for (int r = 0; r < t.graph().right_size; ++r) {
        if ((m >> r) & 1u) out.push_back(r);
    }
    return out;
}

DecodeResult decode(const EncodingTree &t, std::uint64_t r_y) {
    DecodeResult out;
    const int first_leaf = (1 << t.depth()) - 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        ++out.visited;
        const std::uint64_t nm = t.graph().neighbor_mask(v);
        if ((nm & ~r_y) != 0) continue;
        if (v >= first_leaf) {
            const int leaf = v - first_leaf;
            Bits x(static_cast<std::size_t>(t.depth()));
            for (int i = 0; i < t.depth(); ++i) x[i] = static_cast<std::uint8_t>((leaf >> (t.depth() - 1 - i)) & 1);
            out.leaves.push_back(std::move(x));
        } else {
            queue.push_back(2 * v + 1);
            queue.push_back(2 * v + 2);
        }
    }
    return out;
}

DecodeResult decode(const EncodingTree &t, const std::vector<int> &r_y) {
    std::uint64_t m = 0;
    for (int r : r_y) {
        require(r >= 0 && r < t.graph().right_size, ErrorCode::InvalidArgument, "right vertex out of range");
        m |= std::uint64_t{1} << r;
    }
    return decode(t, m);
}

int decode_visit_bound(int k, int depth) { return ((1 << k) + 1) * 2 * depth; }

}  // namespace hamred
