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
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gvm/dirac.hpp"
#include "gvm/verma.hpp"
#include "gvm/weyl.hpp"

namespace gvm {

enum class CheckStatus { Pass, Fail, Flag, Info };

const char* to_string(CheckStatus status) noexcept;

struct CheckRow {
    std::string name;
    CheckStatus status;
    std::string detail;
};

/// Tally of one exhaustive or randomized invariant sweep.
struct SuiteResult {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const noexcept { return failures == 0; }
    void fail(std::string what);
    std::string summary() const;
};

/// bruhat_leq against bruhat_leq_oracle on every pair of W(B_rank).
SuiteResult check_bruhat_oracle(std::size_t rank);

/// verma_hom_exists(w' delta, w delta) <=> w <= w' on every pair of W(B_rank).
SuiteResult check_verma_matches_bruhat(std::size_t rank);

/// Every arrow w -> w' of the parabolic Hasse graph lowers w(delta)(E) by a positive integer.
SuiteResult check_hasse_grading_drop(const ParabolicContext& ctx);

/// For orbit weights w(l), w'(l) joined by a parabolic Hasse arrow w -> w' with a true
/// Verma homomorphism, the standard homomorphism must be nonzero.
SuiteResult check_hasse_arrows_give_standard_homs(const OrbitReport& report, HomCache& cache);

/// Randomized algebraic identities: reflection involution, pairing sign flip,
/// fixed points, length parity, apply composition, coset decomposition, and
/// dominant_rep idempotence. Coset checks need rank >= 2.
SuiteResult check_random_properties(std::size_t rank, std::size_t cases, std::uint64_t seed);

/// The declared assertions for one orbit analysis.
std::vector<CheckRow> orbit_checks(const OrbitReport& report);

using Grid = std::vector<std::pair<int, int>>;

/// k in {1,2,3}, n in {3,5,7}.
Grid default_grid();

/// "default", "extended" (default plus k=4, n=3) or a list "k:n,k:n,...".
Grid parse_grid(std::string_view text);

struct VerifyOptions {
    Grid grid = default_grid();
    bool oracle = false;
    int max_rank = 7;
    std::size_t property_cases = 1000;
    std::uint64_t seed = 20260101;
};

struct VerifyReport {
    std::vector<CheckRow> rows;

    bool all_passed() const noexcept;
    std::string table() const;
};

VerifyReport run_verification_suite(const VerifyOptions& options);

}  // namespace gvm
