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

// Bipartite dispersers at desk scale and the tree encoding built on them.
//
// A (k, eps)-disperser is a left-regular bipartite graph in which every set of
// 2^k left vertices has at least (1 - eps)|R| distinct right neighbours. The
// encoding tree places the left vertices on a complete binary tree in breadth
// first order: vertex 0 is the root and the children of v are 2v+1 (bit 0) and
// 2v+2 (bit 1). A leaf x is encoded by the union of the neighbour sets along
// its root-to-leaf path.

#ifndef HAMRED_CORE_DISPERSER_HPP
#define HAMRED_CORE_DISPERSER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "core/circuits.hpp"
#include "core/common.hpp"

namespace hamred {

struct DisperserGraph {
    int left_size = 0;
    int right_size = 0;
    int degree = 0;
    std::vector<std::vector<int>> neighbors;  // duplicates allowed

    /// Throws InvalidArgument on a malformed graph; right_size is capped at 64.
    void validate() const;
    /// Distinct neighbours of v as a bitmask over the right side.
    std::uint64_t neighbor_mask(int v) const;
    /// Complete bipartite graph with degree right_size.
    static DisperserGraph complete(int left_size, int right_size);
};

struct DisperserVerdict {
    bool holds = false;
    bool exhaustive = true;
    std::uint64_t subsets_checked = 0;
    int required = 0;                  // ceil((1 - eps) |R|)
    int min_coverage = 0;              // smallest neighbourhood seen
    std::optional<std::vector<int>> witness;  // violating subset
};

struct DisperserCheckOptions {
    std::uint64_t enumeration_cap = 10'000'000;
    /// When set, subsets beyond the cap are sampled with this seed instead of
    /// raising CapExceeded.
    std::optional<std::uint64_t> sample_seed;
    std::uint64_t sample_trials = 100'000;
};

DisperserVerdict verify_disperser(const DisperserGraph &g, int k, double eps, const DisperserCheckOptions &opts = {});

/// Seeded random search over graphs with neighbours drawn uniformly with
/// replacement, each candidate checked by verify_disperser. Throws
/// SearchExhausted after max_attempts candidates, or at once when no graph
/// with these parameters can pass.
DisperserGraph find_disperser(int left_size, int right_size, int degree, int k, double eps, std::uint64_t seed,
                              int max_attempts = 1000);

class EncodingTree {
  public:
    EncodingTree() = default;
    /// The graph must have exactly 2^(depth+1) - 1 left vertices.
    EncodingTree(int depth, DisperserGraph graph);

    int depth() const { return depth_; }
    const DisperserGraph &graph() const { return graph_; }
    int n_vertices() const { return graph_.left_size; }
    int n_leaves() const { return 1 << depth_; }
    /// Tree vertex of leaf x.
    int leaf_vertex(const Bits &x) const;
    /// Root-to-leaf vertex path of x (depth + 1 vertices).
    std::vector<int> path(const Bits &x) const;

  private:
    int depth_ = 0;
    DisperserGraph graph_;
};

/// Sorted distinct right vertices on the path of x.
std::vector<int> encode(const EncodingTree &t, const Bits &x);
std::uint64_t encode_mask(const EncodingTree &t, const Bits &x);

struct DecodeResult {
    std::vector<Bits> leaves;  // in left-to-right order
    int visited = 0;           // tree vertices examined by the pruned search
};

/// Breadth-first search that prunes every vertex whose neighbour set is not
/// contained in r_y. Returns exactly the leaves whose whole path is contained.
DecodeResult decode(const EncodingTree &t, std::uint64_t r_y);
DecodeResult decode(const EncodingTree &t, const std::vector<int> &r_y);

/// (2^k + 1) * 2 * depth, the visited-vertex bound for pruned search.
int decode_visit_bound(int k, int depth);

}  // namespace hamred

#endif  // HAMRED_CORE_DISPERSER_HPP
