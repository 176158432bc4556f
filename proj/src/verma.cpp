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

#include "gvm/verma.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <set>
#include <unordered_set>

namespace gvm {

namespace {

using Coords = std::vector<std::int64_t>;  // doubled coordinates

struct CoordsHash {
    std::size_t operator()(const Coords& c) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : c) {
            h ^= static_cast<std::size_t>(x + 0x9e3779b9);
            h *= 1099511628211ULL;
        }
        return h;
    }
};

Coords doubled(const Weight& w) {
    Coords c(w.rank());
    for (std::size_t i = 0; i < w.rank(); ++i) {
        c[i] = w[i].twice();
    }
    return c;
}

/// x - target lies in the nonnegative cone of B_m simple roots iff every prefix
/// sum of the difference is nonnegative.
bool above(const Coords& x, const Coords& target) {
    std::int64_t prefix = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        prefix += x[i] - target[i];
        if (prefix < 0) {
            return false;
        }
    }
    return true;
}

HomVerdict decide_standard(const Weight& mu, const Weight& lambda, const ParabolicContext& ctx,
                           const std::function<bool(const Weight&, const Weight&)>& verma) {
    if (!is_p_dominant_integral_shifted(mu, ctx)) {
        throw Error(ErrorCode::NotPDominant, mu.to_string() + " is not p-dominant and p-integral (shifted)");
    }
    if (!is_p_dominant_integral_shifted(lambda, ctx)) {
        throw Error(ErrorCode::NotPDominant, lambda.to_string() + " is not p-dominant and p-integral (shifted)");
    }
    HomVerdict v;
    v.order_bound = grading_eval(lambda) - grading_eval(mu);
    v.true_verma_exists = verma(mu, lambda);
    if (!v.true_verma_exists) {
        return v;
    }
    for (const auto& alpha : levi_simple_roots(ctx)) {
        if (verma(mu, reflect(lambda, alpha))) {
            v.vanishing_witness = alpha;
            return v;
        }
    }
    v.standard_nonzero = true;
    return v;
}

}  // namespace

bool verma_hom_exists(const Weight& mu, const Weight& lambda) {
    if (mu.rank() != lambda.rank()) {
        throw Error(ErrorCode::InvalidArgument, "rank mismatch in Verma homomorphism query");
    }
    const Coords target = doubled(mu);
    const Coords start = doubled(lambda);
    if (start == target) {
        return true;
    }
    if (!above(start, target)) {
        return false;
    }
    const std::size_t m = start.size();
    std::unordered_set<Coords, CoordsHash> seen{start};
    std::deque<Coords> queue{start};
    while (!queue.empty()) {
        Coords x = std::move(queue.front());
        queue.pop_front();
        auto visit = [&](Coords&& y) {
            if (y == target) {
                return true;
            }
            if (above(y, target) && seen.insert(y).second) {
                queue.push_back(std::move(y));
            }
            return false;
        };
        for (std::size_t i = 0; i < m; ++i) {
            // short root e_i: pairing 2 a_i, always integral
            if (x[i] > 0) {
                Coords y = x;
                y[i] = -y[i];
                if (visit(std::move(y))) {
                    return true;
                }
            }
            for (std::size_t j = i + 1; j < m; ++j) {
                const auto d = x[i] - x[j];
                if (d > 0 && d % 2 == 0) {
                    Coords y = x;
                    std::swap(y[i], y[j]);
                    if (visit(std::move(y))) {
                        return true;
                    }
                }
                const auto s = x[i] + x[j];
                if (s > 0 && s % 2 == 0) {
                    Coords y = x;
                    y[i] = -x[j];
                    y[j] = -x[i];
                    if (visit(std::move(y))) {
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

HomVerdict standard_hom_nonzero(const Weight& mu, const Weight& lambda, const ParabolicContext& ctx) {
    return decide_standard(mu, lambda, ctx, [](const Weight& a, const Weight& b) { return verma_hom_exists(a, b); });
}

OperatorOrder operator_order(const Weight& mu, const Weight& lambda) {
    OperatorOrder out;
    out.bound = grading_eval(lambda) - grading_eval(mu);
    if (out.bound == HalfInt(1) || out.bound == HalfInt(2)) {
        out.order = static_cast<int>(out.bound.as_integer());
    }
    return out;
}

std::vector<Weight> orbit_p_dominant(const Weight& dominant, const ParabolicContext& ctx) {
    const auto m = static_cast<std::size_t>(ctx.rank());
    const auto k = static_cast<std::size_t>(ctx.k());
    if (dominant.rank() != m) {
        throw Error(ErrorCode::InvalidArgument, "rank mismatch in orbit enumeration");
    }
    if (!is_dominant(dominant)) {
        throw Error(ErrorCode::NotDominant, dominant.to_string() + " is not dominant");
    }
    const auto& values = dominant.coords();
    std::set<Weight> found;
    std::vector<bool> used(m, false);
    std::vector<HalfInt> first;

    // second block: the unused values, all positive, descending
    auto finish = [&] {
        std::vector<HalfInt> coords = first;
        for (std::size_t i = 0; i < m; ++i) {
            if (!used[i]) {
                coords.push_back(values[i]);
            }
        }
        Weight w(std::move(coords), k);
        if (is_p_dominant_integral_shifted(w, ctx)) {
            found.insert(std::move(w));
        }
    };

    std::function<void()> extend = [&] {
        if (first.size() == k) {
            finish();
            return;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (used[i]) {
                continue;
            }
            for (int sign : {1, -1}) {
                if (sign < 0 && values[i].is_zero()) {
                    continue;
                }
                const HalfInt v = sign * values[i];
                if (!first.empty()) {
                    const auto gap = first.back() - v;
                    if (!gap.is_positive_integer()) {
                        continue;
                    }
                }
                used[i] = true;
                first.push_back(v);
                extend();
                first.pop_back();
                used[i] = false;
            }
        }
    };
    extend();

    std::vector<Weight> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) { return a.to_string() < b.to_string(); });
    return out;
}

bool HomCache::verma_hom_exists(const Weight& mu, const Weight& lambda) {
    std::string key = lambda.to_string();
    key += ';';
    key += mu.to_string();
    {
        std::shared_lock lock(mutex_);
        if (auto it = verdicts_.find(key); it != verdicts_.end()) {
            return it->second;
        }
    }
    const bool verdict = gvm::verma_hom_exists(mu, lambda);
    std::unique_lock lock(mutex_);
    verdicts_.emplace(std::move(key), verdict);
    return verdict;
}

HomVerdict HomCache::standard_hom_nonzero(const Weight& mu, const Weight& lambda, const ParabolicContext& ctx) {
    return decide_standard(mu, lambda, ctx,
                           [this](const Weight& a, const Weight& b) { return verma_hom_exists(a, b); });
}

std::size_t HomCache::size() const {
    std::shared_lock lock(mutex_);
    return verdicts_.size();
}

}  // namespace gvm
