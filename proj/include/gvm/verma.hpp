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

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "gvm/weight.hpp"

namespace gvm {

/// Outcome of a standard homomorphism query M_p(mu) -> M_p(lambda).
struct HomVerdict {
    bool true_verma_exists = false;
    bool standard_nonzero = false;
    /// Lowest-index alpha with M_b(mu) inside M_b(s_alpha lambda), when the map vanishes.
    std::optional<Root> vanishing_witness;
    /// (lambda - mu)(E).
    HalfInt order_bound;
};

struct OperatorOrder {
    std::optional<int> order;  ///< set only when the bound is 1 or 2
    HalfInt bound;
};

/// Does a nonzero homomorphism M_b(mu) -> M_b(lambda) exist?
///
/// Searches down from lambda through reflections whose coroot pairing is a
/// positive integer. States whose difference to mu leaves the positive
/// root cone (some prefix sum negative) are discarded.
bool verma_hom_exists(const Weight& mu, const Weight& lambda);

/// Standard homomorphism M_p(mu) -> M_p(lambda) decided via the vanishing
/// criterion over the Levi simple roots. Throws NotPDominant.
HomVerdict standard_hom_nonzero(const Weight& mu, const Weight& lambda, const ParabolicContext& ctx);

/// Order bound of the dual operator; caller must know the homomorphism is nonzero.
OperatorOrder operator_order(const Weight& mu, const Weight& lambda);

/// All weights w(dominant) in P_p^{++} + delta, in canonical text order.
std::vector<Weight> orbit_p_dominant(const Weight& dominant, const ParabolicContext& ctx);

/// Memoizing front end for the homomorphism queries. Concurrent readers,
/// serialized writers.
class HomCache {
public:
    bool verma_hom_exists(const Weight& mu, const Weight& lambda);
    HomVerdict standard_hom_nonzero(const Weight& mu, const Weight& lambda, const ParabolicContext& ctx);
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, bool> verdicts_;
};

}  // namespace gvm
