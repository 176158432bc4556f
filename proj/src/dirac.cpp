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

#include "gvm/dirac.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>
#include <tuple>

namespace gvm {

namespace {

using Block = std::vector<HalfInt>;

/// S_k on first blocks only; arrows are (from, to, order).
struct Skeleton {
    std::vector<Block> vertices;
    std::vector<std::tuple<std::size_t, std::size_t, int>> arrows;
};

Block prepend(HalfInt head, const Block& tail) {
    Block out{head};
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

Block append(const Block& head, HalfInt tail) {
    Block out = head;
    out.push_back(tail);
    return out;
}

Skeleton build_skeleton(int k) {
    if (k == 0) {
        return {{Block{}}, {}};
    }
    if (k == 1) {
        return {{Block{HalfInt::halves(1)}, Block{HalfInt::halves(-1)}}, {{0, 1, 1}}};
    }
    const HalfInt top = HalfInt::halves(2 * k - 1);
    const HalfInt next = HalfInt::halves(2 * k - 3);
    const Skeleton prev = build_skeleton(k - 1);
    const std::size_t half = prev.vertices.size();

    Skeleton s;
    for (const auto& v : prev.vertices) {
        s.vertices.push_back(prepend(top, v));
    }
    for (const auto& v : prev.vertices) {
        s.vertices.push_back(append(v, -top));
    }
    for (const auto& [a, b, order] : prev.arrows) {
        s.arrows.emplace_back(a, b, order);
        s.arrows.emplace_back(a + half, b + half, order);
    }
    std::map<Block, std::size_t> index;
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        index.emplace(s.vertices[i], i);
    }
    // i_k j_{k-1}(x) -> j_k i_{k-1}(x) for x in R_{k-2}
    for (const auto& x : build_skeleton(k - 2).vertices) {
        const auto from = prepend(top, append(x, -next));
        const auto to = append(prepend(next, x), -top);
        s.arrows.emplace_back(index.at(from), index.at(to), 2);
    }
    return s;
}

Block dirac_tail(int n) {
    Block tail;
    for (int b = (n - 1) / 2; b >= 1; --b) {
        tail.emplace_back(b);
    }
    return tail;
}

void sort_graph(HomGraph& g) {
    std::vector<std::size_t> order(g.vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::vector<std::string> labels;
    for (const auto& v : g.vertices) {
        labels.push_back(v.to_string());
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    std::vector<std::size_t> rank(order.size());
    std::vector<Weight> sorted;
    for (std::size_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = i;
        sorted.push_back(g.vertices[order[i]]);
    }
    g.vertices = std::move(sorted);
    for (auto& a : g.arrows) {
        a.from = rank[a.from];
        a.to = rank[a.to];
    }
    std::sort(g.arrows.begin(), g.arrows.end(),
              [](const HomArrow& a, const HomArrow& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
}

}  // namespace

std::optional<std::size_t> HomGraph::index_of(const Weight& w) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] == w) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t HomGraph::count_order(int order) const {
    return static_cast<std::size_t>(
        std::count_if(arrows.begin(), arrows.end(), [order](const HomArrow& a) { return a.order == order; }));
}

Weight dirac_weight(int k, int n) {
    const ParabolicContext ctx(k, n);
    Block coords;
    for (int a = 2 * k - 1; a >= 1; a -= 2) {
        coords.push_back(HalfInt::halves(a));
    }
    for (auto b : dirac_tail(n)) {
        coords.push_back(b);
    }
    return Weight(std::move(coords), static_cast<std::size_t>(ctx.k()));
}

Weight embed_i(const Weight& lambda, int k) {
    if (k < 1 || lambda.split() != static_cast<std::size_t>(k - 1)) {
        throw Error(ErrorCode::InvalidArgument, "embed_i expects k-1 first-block entries in " + lambda.to_string());
    }
    return Weight(prepend(HalfInt::halves(2 * k - 1), lambda.coords()), lambda.split() + 1);
}

Weight embed_j(const Weight& lambda, int k) {
    if (k < 1 || lambda.split() != static_cast<std::size_t>(k - 1)) {
        throw Error(ErrorCode::InvalidArgument, "embed_j expects k-1 first-block entries in " + lambda.to_string());
    }
    auto coords = lambda.coords();
    coords.insert(coords.begin() + static_cast<std::ptrdiff_t>(lambda.split()), HalfInt::halves(1 - 2 * k));
    return Weight(std::move(coords), lambda.split() + 1);
}

HomGraph sk_graph(const ParabolicContext& ctx) {
    const auto skeleton = build_skeleton(ctx.k());
    const auto tail = dirac_tail(ctx.n());
    HomGraph g;
    g.half_rank_case = ctx.is_half_rank_case();
    for (const auto& first : skeleton.vertices) {
        auto coords = first;
        coords.insert(coords.end(), tail.begin(), tail.end());
        g.vertices.emplace_back(std::move(coords), static_cast<std::size_t>(ctx.k()));
    }
    for (const auto& [a, b, order] : skeleton.arrows) {
        g.arrows.push_back({a, b, order, grading_eval(g.vertices[a]) - grading_eval(g.vertices[b])});
    }
    g.singular = is_singular(dirac_weight(ctx.k(), ctx.n()));
    sort_graph(g);
    return g;
}

std::vector<IndexPair> transitive_reduction(std::size_t n, const std::vector<IndexPair>& relation) {
    std::vector<std::vector<std::size_t>> succ(n);
    for (const auto& [a, b] : relation) {
        succ[a].push_back(b);
    }
    // reach[a][b]: path of length >= 1 from a to b
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> stack(succ[s].begin(), succ[s].end());
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            if (reach[s][v]) {
                continue;
            }
            reach[s][v] = true;
            stack.insert(stack.end(), succ[v].begin(), succ[v].end());
        }
    }
    std::set<IndexPair> covering;
    for (const auto& [a, b] : relation) {
        bool through = false;
        for (auto v : succ[a]) {
            if (v != b && reach[v][b]) {
                through = true;
                break;
            }
        }
        if (!through) {
            covering.emplace(a, b);
        }
    }
    return {covering.begin(), covering.end()};
}

OrbitReport analyze_orbit(int k, int n, const AnalyzeOptions& options) {
    HomCache cache;
    return analyze_orbit(k, n, cache, options);
}

OrbitReport analyze_orbit(int k, int n, HomCache& cache, const AnalyzeOptions& options) {
    const ParabolicContext ctx(k, n);
    if (ctx.rank() > options.max_rank) {
        throw Error(ErrorCode::RankTooLarge, "orbit analysis needs rank <= " + std::to_string(options.max_rank) +
                                                 ", got rank " + std::to_string(ctx.rank()));
    }
    OrbitReport report;
    report.ctx = ctx;
    report.lambda = dirac_weight(k, n);
    report.dominant = dominant_rep(report.lambda);
    report.graph.singular = is_singular(report.dominant);
    report.graph.half_rank_case = ctx.is_half_rank_case();
    report.graph.vertices = orbit_p_dominant(report.dominant, ctx);

    const auto& verts = report.graph.vertices;
    const std::size_t count = verts.size();
    const auto tail = dirac_tail(n);
    for (const auto& v : verts) {
        const Block second(v.coords().begin() + k, v.coords().end());
        report.in_dirac_family.push_back(second == tail);
    }

    std::vector<IndexPair> tasks;
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            if (a != b) {
                tasks.emplace_back(a, b);
            }
        }
    }
    std::vector<char> nonzero(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) {
            const auto [a, b] = tasks[t];
            // arrow a -> b  <=>  nonzero standard M_p(verts[b]) -> M_p(verts[a])
            nonzero[t] = cache.standard_hom_nonzero(verts[b], verts[a], ctx).standard_nonzero ? 1 : 0;
        }
    };
    unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned i = 1; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        worker();
    }
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        if (nonzero[t] != 0) {
            report.full_relation.push_back(tasks[t]);
        }
    }

    for (const auto& [a, b] : transitive_reduction(count, report.full_relation)) {
        const auto ord = operator_order(verts[b], verts[a]);
        report.graph.arrows.push_back({a, b, ord.order, ord.bound});
    }

    const std::set<IndexPair> relation(report.full_relation.begin(), report.full_relation.end());
    for (const auto& first : report.graph.arrows) {
        for (const auto& second : report.graph.arrows) {
            if (first.to == second.from && relation.contains({first.from, second.to})) {
                report.complex_violations.push_back({first.from, first.to, second.to});
            }
        }
    }
    std::sort(report.complex_violations.begin(), report.complex_violations.end());

    const auto family = dirac_family_subgraph(report);
    const auto expected = sk_graph(ctx);
    report.matches_sk = family.vertices == expected.vertices && family.arrows == expected.arrows;
    return report;
}

HomGraph dirac_family_subgraph(const OrbitReport& report) {
    HomGraph g;
    g.singular = report.graph.singular;
    g.half_rank_case = report.graph.half_rank_case;
    std::vector<std::size_t> remap(report.graph.vertices.size(), SIZE_MAX);
    for (std::size_t i = 0; i < report.graph.vertices.size(); ++i) {
        if (report.in_dirac_family[i]) {
            remap[i] = g.vertices.size();
            g.vertices.push_back(report.graph.vertices[i]);
        }
    }
    for (const auto& a : report.graph.arrows) {
        if (remap[a.from] != SIZE_MAX && remap[a.to] != SIZE_MAX) {
            g.arrows.push_back({remap[a.from], remap[a.to], a.order, a.bound});
        }
    }
    return g;
}

}  // namespace gvm
