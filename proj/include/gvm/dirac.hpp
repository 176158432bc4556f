/*
Copyright 2026 The gvmhom Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gvm/verma.hpp"
#include "gvm/weight.hpp"

namespace gvm {

/// Arrow in operator direction: from -> to encodes a nonzero standard
/// homomorphism M_p(to) -> M_p(from). grading_eval drops by `bound`.
struct HomArrow {
    std::size_t from;
    std::size_t to;
    std::optional<int> order;
    HalfInt bound;

    friend bool operator==(const HomArrow&, const HomArrow&) = default;
};

struct HomGraph {
    std::vector<Weight> vertices;  ///< canonical text order
    std::vector<HomArrow> arrows;  ///< sorted by (from, to)
    bool singular = false;
    bool half_rank_case = false;

    std::optional<std::size_t> index_of(const Weight& w) const;
    /// Number of arrows whose order is exactly `order`.
    std::size_t count_order(int order) const;
};

using IndexPair = std::pair<std::size_t, std::size_t>;
using IndexTriple = std::array<std::size_t, 3>;

struct OrbitReport {
    ParabolicContext ctx{1, 3};
    Weight lambda;
    Weight dominant;
    HomGraph graph;
    /// Per vertex: first block is a signed selection of (2k-1)/2..1/2 and the
    /// second block is (n-1)/2..1. Only the half-rank case has vertices outside.
    std::vector<bool> in_dirac_family;
    /// Operator-direction pairs (from, to) with a nonzero standard homomorphism, from != to.
    std::vector<IndexPair> full_relation;
    bool matches_sk = false;
    std::vector<IndexTriple> complex_violations;
};

/// [(2k-1)/2, ..., 1/2 | (n-1)/2, ..., 1]
Weight dirac_weight(int k, int n);

/// Prefixes (2k-1)/2 to the first block of a weight with k-1 first-block entries.
Weight embed_i(const Weight& lambda, int k);
/// Appends -(2k-1)/2 to the first block of a weight with k-1 first-block entries.
Weight embed_j(const Weight& lambda, int k);

/// The recursively defined graph S_k on the 2^k Dirac-family weights of ctx,
/// with orders inherited through the embeddings (connecting arrows order 2).
HomGraph sk_graph(const ParabolicContext& ctx);

/// Covering pairs of an acyclic relation on n vertices, sorted.
std::vector<IndexPair> transitive_reduction(std::size_t n, const std::vector<IndexPair>& relation);

struct AnalyzeOptions {
    int max_rank = 7;
    /// Zero picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Full homomorphism analysis of the p-dominant part of the Dirac orbit.
/// Throws RankTooLarge when k + (n-1)/2 exceeds options.max_rank.
OrbitReport analyze_orbit(int k, int n, const AnalyzeOptions& options = {});
OrbitReport analyze_orbit(int k, int n, HomCache& cache, const AnalyzeOptions& options = {});

/// The vertices of the Dirac family and the arrows between them.
HomGraph dirac_family_subgraph(const OrbitReport& report);

}  // namespace gvm
