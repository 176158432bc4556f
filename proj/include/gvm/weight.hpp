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
#include <string>
#include <string_view>
#include <vector>

#include "gvm/error.hpp"
#include "gvm/half_int.hpp"

namespace gvm {

/// Parabolic pair (so(n+2k), p) with the k-th node of B_m crossed, m = k + (n-1)/2.
class ParabolicContext {
public:
    /// Throws InvalidArgument unless n is odd, n >= 3 and k >= 1.
    ParabolicContext(int k, int n);

    int k() const noexcept { return k_; }
    int n() const noexcept { return n_; }
    int rank() const noexcept { return k_ + (n_ - 1) / 2; }

    /// True when the orbit carries the second family of p-dominant weights.
    bool is_half_rank_case() const noexcept { return k_ == (n_ - 1) / 2; }

    friend bool operator==(const ParabolicContext&, const ParabolicContext&) = default;

private:
    int k_;
    int n_;
};

/// Weight in the epsilon basis, split into blocks [a_1..a_k | b_1..b_{m-k}].
///
/// A split of zero means "no block structure" for printing purposes, so
/// g-dominant representatives print as a plain list.
class Weight {
public:
    Weight() = default;
    Weight(std::vector<HalfInt> coords, std::size_t split);

    std::size_t rank() const noexcept { return coords_.size(); }
    std::size_t split() const noexcept { return split_; }
    const std::vector<HalfInt>& coords() const noexcept { return coords_; }
    HalfInt operator[](std::size_t i) const { return coords_[i]; }

    /// Same coordinates with a different block split.
    Weight with_split(std::size_t split) const { return Weight(coords_, split); }

    std::string to_string() const;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

private:
    std::vector<HalfInt> coords_;
    std::size_t split_ = 0;
};

/// Canonical bracket form, e.g. "[3/2,-1/2|3,2,1]".
std::string to_string(const Weight& w);

/// Inverse of to_string. Accepts integer and "p/2" tokens, optional whitespace,
/// ASCII or Unicode minus, and at most one '|'. Throws Error(Parse).
Weight parse_weight(std::string_view text);

/// Positive root of B_m. Indices are zero-based and i < j for the long roots.
struct Root {
    enum class Kind { Diff, Sum, Short };

    Kind kind;
    std::size_t i;
    std::size_t j;

    static Root diff(std::size_t i, std::size_t j) { return {Kind::Diff, i, j}; }
    static Root sum(std::size_t i, std::size_t j) { return {Kind::Sum, i, j}; }
    static Root short_root(std::size_t i) { return {Kind::Short, i, i}; }

    /// Coefficients in the epsilon basis.
    std::vector<int> vector(std::size_t rank) const;
    /// One-based display: "e1-e2", "e1+e2", "e3".
    std::string to_string() const;

    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root&, const Root&) = default;
};

/// All m^2 positive roots of B_m in a fixed order.
std::vector<Root> positive_roots(std::size_t rank);

/// alpha_1..alpha_m: e_i - e_{i+1} and the short root e_m.
std::vector<Root> simple_roots(std::size_t rank);

/// Simple roots of the Levi factor (every simple root except alpha_k).
std::vector<Root> levi_simple_roots(const ParabolicContext& ctx);

/// lambda(H_beta) with the coroot normalization 2(lambda,beta)/(beta,beta).
HalfInt pairing(const Weight& lambda, const Root& beta);

/// s_beta(lambda) = lambda - lambda(H_beta) beta.
Weight reflect(const Weight& lambda, const Root& beta);

/// Half the sum of positive roots: coordinate i is m - i + 1/2.
Weight delta(const ParabolicContext& ctx);

/// Evaluation on the grading element: sum of the first-block coordinates.
HalfInt grading_eval(const Weight& lambda);

/// Membership in P_p^{++} + delta for the parabolic pair of ctx.
bool is_p_dominant_integral_shifted(const Weight& lambda, const ParabolicContext& ctx);

/// Coordinates of lambda are descending, all >= 0.
bool is_dominant(const Weight& lambda);

/// The g-dominant weight on the W-orbit of lambda (split 0).
Weight dominant_rep(const Weight& lambda);

/// True iff the weight pairs to zero with some positive coroot.
bool is_singular(const Weight& lambda);

Weight operator-(const Weight& a, const Weight& b);

}  // namespace gvm
