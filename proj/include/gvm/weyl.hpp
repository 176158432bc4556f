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
#include <iterator>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gvm/weight.hpp"

namespace gvm {

/// Element of W(B_m) as a signed permutation.
///
/// images()[i] = +-(j+1) means e_{i+1} -> +-e_{j+1}. Products compose as linear
/// maps: (u*v)(x) = u(v(x)).
class WeylElem {
public:
    WeylElem() = default;
    explicit WeylElem(std::vector<int> images);

    static WeylElem identity(std::size_t rank);
    static WeylElem reflection(const Root& beta, std::size_t rank);

    std::size_t rank() const noexcept { return images_.size(); }
    const std::vector<int>& images() const noexcept { return images_; }

    WeylElem inverse() const;
    bool is_identity() const noexcept;

    /// Packed 4-bit-per-entry encoding, injective for rank <= 7.
    std::uint64_t key() const noexcept;
    std::string to_string() const;

    friend WeylElem operator*(const WeylElem& u, const WeylElem& v);
    friend bool operator==(const WeylElem&, const WeylElem&) = default;
    friend auto operator<=>(const WeylElem&, const WeylElem&) = default;

private:
    std::vector<int> images_;
};

Weight apply(const WeylElem& w, const Weight& lambda);

/// Number of positive roots sent to negative roots.
int length(const WeylElem& w);

/// Iterates all 2^m m! elements without materializing them.
class WeylGroup {
public:
    explicit WeylGroup(std::size_t rank) : rank_(rank) {}

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = WeylElem;
        using difference_type = std::ptrdiff_t;
        using pointer = const WeylElem*;
        using reference = const WeylElem&;

        iterator() = default;
        explicit iterator(std::size_t rank);

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || current_ == o.current_); }

    private:
        void rebuild();

        std::vector<int> perm_;
        std::uint64_t signs_ = 0;
        WeylElem current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(rank_); }
    iterator end() const { return iterator(); }
    std::uint64_t size() const noexcept;

private:
    std::size_t rank_;
};

/// Bruhat order by breadth-first search through length-raising reflections.
bool bruhat_leq(const WeylElem& w, const WeylElem& w_prime);

/// Bruhat order via the subword property of one greedy reduced word of w_prime.
bool bruhat_leq_oracle(const WeylElem& w, const WeylElem& w_prime);

/// Reduced word of w as zero-based simple-reflection indices, w = s_{i_0} s_{i_1} ...
/// Chosen by always peeling off the lowest-index left descent.
std::vector<std::size_t> greedy_reduced_word(const WeylElem& w);

/// Memoized Bruhat comparisons; safe for concurrent use.
class BruhatCache {
public:
    bool leq(const WeylElem& w, const WeylElem& w_prime);
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, bool>> verdicts_;
};

struct CosetDecomposition {
    WeylElem levi_part;  ///< in W_p
    WeylElem min_rep;    ///< in W^p
};

/// w = levi_part * min_rep with lengths adding up.
CosetDecomposition min_coset_rep(const WeylElem& w, const ParabolicContext& ctx);

/// w in W^p, i.e. w(delta) is strictly p-dominant.
bool in_wp(const WeylElem& w, const ParabolicContext& ctx);

struct HasseArrow {
    std::size_t from;
    std::size_t to;
    Root gamma;  ///< vertices[to] = s_gamma * vertices[from]
};

struct HasseGraph {
    std::vector<WeylElem> vertices;  ///< sorted by (length, key)
    std::vector<int> lengths;
    std::vector<HasseArrow> arrows;
};

inline constexpr int kMaxHasseRank = 5;

/// Parabolic Hasse graph on W^p, restricted to elements of length <= max_length
/// (negative means unbounded). Throws RankTooLarge above kMaxHasseRank.
HasseGraph parabolic_hasse(const ParabolicContext& ctx, int max_length = -1);

/// The unique w with apply(w, dominant) == target.
/// Throws NotDominant, SingularWeight or NotOnOrbit.
WeylElem elem_taking(const Weight& dominant, const Weight& target);

/// beta with u = s_beta, if u is a reflection.
std::optional<Root> as_reflection(const WeylElem& u);

}  // namespace gvm
