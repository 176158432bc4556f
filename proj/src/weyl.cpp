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

#include "gvm/weyl.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <unordered_set>

namespace gvm {

namespace {

int sign_of(int x) { return x < 0 ? -1 : 1; }
std::size_t slot_of(int x) { return static_cast<std::size_t>(std::abs(x) - 1); }

const std::vector<WeylElem>& reflections_for(std::size_t rank) {
    // rank is bounded by the callers; build lazily per rank
    static std::mutex mutex;
    static std::unordered_map<std::size_t, std::vector<WeylElem>> table;
    std::lock_guard lock(mutex);
    auto& refl = table[rank];
    if (refl.empty()) {
        for (const auto& beta : positive_roots(rank)) {
            refl.push_back(WeylElem::reflection(beta, rank));
        }
    }
    return refl;
}

}  // namespace

WeylElem::WeylElem(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x == 0 || static_cast<std::size_t>(std::abs(x)) > images_.size() || seen[slot_of(x)]) {
            throw Error(ErrorCode::InvalidArgument, "not a signed permutation");
        }
        seen[slot_of(x)] = true;
    }
}

WeylElem WeylElem::identity(std::size_t rank) {
    std::vector<int> images(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        images[i] = static_cast<int>(i) + 1;
    }
    return WeylElem(std::move(images));
}

WeylElem WeylElem::reflection(const Root& beta, std::size_t rank) {
    auto w = identity(rank);
    auto& img = w.images_;
    const int i = static_cast<int>(beta.i) + 1;
    const int j = static_cast<int>(beta.j) + 1;
    switch (beta.kind) {
    case Root::Kind::Diff:
        img[beta.i] = j;
        img[beta.j] = i;
        break;
    case Root::Kind::Sum:
        img[beta.i] = -j;
        img[beta.j] = -i;
        break;
    case Root::Kind::Short: img[beta.i] = -i; break;
    }
    return w;
}

WeylElem WeylElem::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j) {
        inv[slot_of(images_[j])] = sign_of(images_[j]) * (static_cast<int>(j) + 1);
    }
    WeylElem w;
    w.images_ = std::move(inv);
    return w;
}

bool WeylElem::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<int>(i) + 1) {
            return false;
        }
    }
    return true;
}

std::uint64_t WeylElem::key() const noexcept {
    std::uint64_t k = images_.size();
    for (int x : images_) {
        k = (k << 4) | static_cast<std::uint64_t>(x + 8);
    }
    return k;
}

std::string WeylElem::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(images_[i]);
    }
    return out + ")";
}

WeylElem operator*(const WeylElem& u, const WeylElem& v) {
    if (u.rank() != v.rank()) {
        throw Error(ErrorCode::InvalidArgument, "rank mismatch in Weyl group product");
    }
    WeylElem out;
    out.images_.resize(v.images_.size());
    for (std::size_t j = 0; j < v.images_.size(); ++j) {
        const int x = v.images_[j];
        out.images_[j] = sign_of(x) * u.images_[slot_of(x)];
    }
    return out;
}

Weight apply(const WeylElem& w, const Weight& lambda) {
    if (w.rank() != lambda.rank()) {
        throw Error(ErrorCode::InvalidArgument, "rank mismatch applying Weyl group element");
    }
    std::vector<HalfInt> coords(lambda.rank());
    const auto& img = w.images();
    for (std::size_t j = 0; j < img.size(); ++j) {
        coords[slot_of(img[j])] = sign_of(img[j]) * lambda[j];
    }
    return Weight(std::move(coords), lambda.split());
}

int length(const WeylElem& w) {
    const auto& img = w.images();
    const std::size_t m = img.size();
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const int si = sign_of(img[i]);
        const std::size_t pi = slot_of(img[i]);
        if (si < 0) {
            ++inversions;  // e_i
        }
        for (std::size_t j = i + 1; j < m; ++j) {
            const int sj = sign_of(img[j]);
            const std::size_t pj = slot_of(img[j]);
            // image of e_i - e_j is si e_pi - sj e_pj; sign decided at the smaller slot
            const int diff_lead = pi < pj ? si : -sj;
            const int sum_lead = pi < pj ? si : sj;
            inversions += (diff_lead < 0) + (sum_lead < 0);
        }
    }
    return inversions;
}

WeylGroup::iterator::iterator(std::size_t rank) : perm_(rank), done_(false) {
    for (std::size_t i = 0; i < rank; ++i) {
        perm_[i] = static_cast<int>(i) + 1;
    }
    rebuild();
}

WeylGroup::iterator& WeylGroup::iterator::operator++() {
    ++signs_;
    if (signs_ == (std::uint64_t{1} << perm_.size())) {
        signs_ = 0;
        if (!std::next_permutation(perm_.begin(), perm_.end())) {
            done_ = true;
            return *this;
        }
    }
    rebuild();
    return *this;
}

void WeylGroup::iterator::rebuild() {
    std::vector<int> images(perm_.size());
    for (std::size_t j = 0; j < perm_.size(); ++j) {
        images[j] = ((signs_ >> j) & 1U) ? -perm_[j] : perm_[j];
    }
    current_ = WeylElem(std::move(images));
}

std::uint64_t WeylGroup::size() const noexcept {
    std::uint64_t n = std::uint64_t{1} << rank_;
    for (std::size_t i = 2; i <= rank_; ++i) {
        n *= i;
    }
    return n;
}

bool bruhat_leq(const WeylElem& w, const WeylElem& w_prime) {
    if (w.rank() != w_prime.rank()) {
        throw Error(ErrorCode::InvalidArgument, "rank mismatch in Bruhat comparison");
    }
    if (w == w_prime) {
        return true;
    }
    const int target_len = length(w_prime);
    int level = length(w);
    if (level >= target_len) {
        return false;
    }
    const auto& refl = reflections_for(w.rank());
    std::vector<WeylElem> frontier{w};
    while (level < target_len && !frontier.empty()) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<WeylElem> next;
        for (const auto& u : frontier) {
            for (const auto& s : refl) {
                auto v = s * u;
                if (length(v) != level + 1 || !seen.insert(v.key()).second) {
                    continue;
                }
                if (v == w_prime) {
                    return true;
                }
                next.push_back(std::move(v));
            }
        }
        frontier = std::move(next);
        ++level;
    }
    return false;
}

std::vector<std::size_t> greedy_reduced_word(const WeylElem& w) {
    const auto rank = w.rank();
    std::vector<WeylElem> simple;
    for (const auto& alpha : simple_roots(rank)) {
        simple.push_back(WeylElem::reflection(alpha, rank));
    }
    std::vector<std::size_t> word;
    auto cur = w;
    int len = length(cur);
    while (len > 0) {
        for (std::size_t i = 0; i < simple.size(); ++i) {
            auto u = simple[i] * cur;
            if (const int l = length(u); l < len) {
                word.push_back(i);
                cur = std::move(u);
                len = l;
                break;
            }
        }
    }
    return word;
}

bool bruhat_leq_oracle(const WeylElem& w, const WeylElem& w_prime) {
    if (w.rank() != w_prime.rank()) {
        throw Error(ErrorCode::InvalidArgument, "rank mismatch in Bruhat comparison");
    }
    const auto rank = w.rank();
    const auto word = greedy_reduced_word(w_prime);
    const auto target_len = static_cast<unsigned>(length(w));
    if (target_len > word.size()) {
        return false;
    }
    std::vector<WeylElem> simple;
    for (const auto& alpha : simple_roots(rank)) {
        simple.push_back(WeylElem::reflection(alpha, rank));
    }
    const std::uint64_t subsets = std::uint64_t{1} << word.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        if (static_cast<unsigned>(std::popcount(mask)) != target_len) {
            continue;
        }
        auto u = WeylElem::identity(rank);
        for (std::size_t b = 0; b < word.size(); ++b) {
            if ((mask >> b) & 1U) {
                u = u * simple[word[b]];
            }
        }
        if (u == w) {
            return true;
        }
    }
    return false;
}

bool BruhatCache::leq(const WeylElem& w, const WeylElem& w_prime) {
    const auto a = w.key();
    const auto b = w_prime.key();
    {
        std::shared_lock lock(mutex_);
        if (auto it = verdicts_.find(a); it != verdicts_.end()) {
            if (auto jt = it->second.find(b); jt != it->second.end()) {
                return jt->second;
            }
        }
    }
    const bool verdict = bruhat_leq(w, w_prime);
    std::unique_lock lock(mutex_);
    verdicts_[a][b] = verdict;
    return verdict;
}

std::size_t BruhatCache::size() const {
    std::shared_lock lock(mutex_);
    std::size_t n = 0;
    for (const auto& [_, row] : verdicts_) {
        n += row.size();
    }
    return n;
}

CosetDecomposition min_coset_rep(const WeylElem& w, const ParabolicContext& ctx) {
    const auto rank = static_cast<std::size_t>(ctx.rank());
    if (w.rank() != rank) {
        throw Error(ErrorCode::InvalidArgument, "rank mismatch in coset decomposition");
    }
    std::vector<WeylElem> levi;
    for (const auto& alpha : levi_simple_roots(ctx)) {
        levi.push_back(WeylElem::reflection(alpha, rank));
    }
    CosetDecomposition out{WeylElem::identity(rank), w};
    int len = length(out.min_rep);
    bool lowered = true;
    while (lowered) {
        lowered = false;
        for (const auto& s : levi) {
            auto u = s * out.min_rep;
            if (const int l = length(u); l < len) {
                out.min_rep = std::move(u);
                out.levi_part = out.levi_part * s;
                len = l;
                lowered = true;
                break;
            }
        }
    }
    return out;
}

bool in_wp(const WeylElem& w, const ParabolicContext& ctx) {
    const auto image = apply(w, delta(ctx));
    for (const auto& alpha : levi_simple_roots(ctx)) {
        if (pairing(image, alpha).twice() <= 0) {
            return false;
        }
    }
    return true;
}

HasseGraph parabolic_hasse(const ParabolicContext& ctx, int max_length) {
    const auto rank = static_cast<std::size_t>(ctx.rank());
    if (ctx.rank() > kMaxHasseRank) {
        throw Error(ErrorCode::RankTooLarge, "parabolic Hasse graph needs rank <= " + std::to_string(kMaxHasseRank) +
                                                 ", got rank " + std::to_string(ctx.rank()));
    }
    std::vector<std::pair<int, WeylElem>> members;
    for (const auto& w : WeylGroup(rank)) {
        if (!in_wp(w, ctx)) {
            continue;
        }
        const int l = length(w);
        if (max_length < 0 || l <= max_length) {
            members.emplace_back(l, w);
        }
    }
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second.key() < b.second.key();
    });

    HasseGraph graph;
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (auto& [l, w] : members) {
        index.emplace(w.key(), graph.vertices.size());
        graph.lengths.push_back(l);
        graph.vertices.push_back(std::move(w));
    }
    const auto roots = positive_roots(rank);
    const auto& refl = reflections_for(rank);
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        for (std::size_t r = 0; r < roots.size(); ++r) {
            auto u = refl[r] * graph.vertices[v];
            auto it = index.find(u.key());
            if (it != index.end() && graph.lengths[it->second] == graph.lengths[v] + 1) {
                graph.arrows.push_back({v, it->second, roots[r]});
            }
        }
    }
    return graph;
}

WeylElem elem_taking(const Weight& dominant, const Weight& target) {
    if (dominant.rank() != target.rank()) {
        throw Error(ErrorCode::NotOnOrbit, "rank mismatch between " + dominant.to_string() + " and " + target.to_string());
    }
    if (!is_dominant(dominant)) {
        throw Error(ErrorCode::NotDominant, dominant.to_string() + " is not dominant");
    }
    if (is_singular(dominant)) {
        throw Error(ErrorCode::SingularWeight,
                    dominant.to_string() + " is singular; the Weyl group element is not unique");
    }
    if (dominant_rep(target).coords() != dominant.coords()) {
        throw Error(ErrorCode::NotOnOrbit, target.to_string() + " is not on the orbit of " + dominant.to_string());
    }
    std::vector<int> images(dominant.rank());
    for (std::size_t i = 0; i < dominant.rank(); ++i) {
        for (std::size_t j = 0; j < target.rank(); ++j) {
            if (target[j].abs() == dominant[i]) {
                images[i] = (target[j].twice() < 0 ? -1 : 1) * (static_cast<int>(j) + 1);
                break;
            }
        }
    }
    return WeylElem(std::move(images));
}

std::optional<Root> as_reflection(const WeylElem& u) {
    for (const auto& beta : positive_roots(u.rank())) {
        if (WeylElem::reflection(beta, u.rank()) == u) {
            return beta;
        }
    }
    return std::nullopt;
}

}  // namespace gvm
