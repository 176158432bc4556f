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

#include "gvm/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>

namespace gvm {

const char* to_string(CheckStatus status) noexcept {
    switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Flag: return "FLAG";
    case CheckStatus::Info: return "INFO";
    }
    return "?";
}

void SuiteResult::fail(std::string what) {
    if (failures++ == 0) {
        first_failure = std::move(what);
    }
}

std::string SuiteResult::summary() const {
    std::string s = std::to_string(checked) + " checked, " + std::to_string(failures) + " failed";
    if (!ok()) {
        s += "; first: " + first_failure;
    }
    return s;
}

namespace {

Weight delta_of_rank(std::size_t rank) {
    std::vector<HalfInt> coords;
    for (std::size_t i = 0; i < rank; ++i) {
        coords.push_back(HalfInt::halves(static_cast<std::int64_t>(2 * (rank - i) - 1)));
    }
    return Weight(std::move(coords), 0);
}

bool in_levi_subgroup(const WeylElem& w, const ParabolicContext& ctx) {
    const auto k = static_cast<std::size_t>(ctx.k());
    const auto& img = w.images();
    for (std::size_t i = 0; i < img.size(); ++i) {
        const auto slot = static_cast<std::size_t>(std::abs(img[i]) - 1);
        if (i < k && (img[i] < 0 || slot >= k)) {
            return false;
        }
        if (i >= k && slot < k) {
            return false;
        }
    }
    return true;
}

CheckRow row(std::string name, bool ok, std::string detail) {
    return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

}  // namespace

SuiteResult check_bruhat_oracle(std::size_t rank) {
    SuiteResult r;
    const WeylGroup group(rank);
    for (const auto& w : group) {
        for (const auto& w_prime : group) {
            ++r.checked;
            if (bruhat_leq(w, w_prime) != bruhat_leq_oracle(w, w_prime)) {
                r.fail(w.to_string() + " vs " + w_prime.to_string());
            }
        }
    }
    return r;
}

SuiteResult check_verma_matches_bruhat(std::size_t rank) {
    SuiteResult r;
    const auto rho = delta_of_rank(rank);
    BruhatCache bruhat;
    const WeylGroup group(rank);
    for (const auto& w : group) {
        const auto upper = apply(w, rho);
        for (const auto& w_prime : group) {
            ++r.checked;
            const bool hom = verma_hom_exists(apply(w_prime, rho), upper);
            if (hom != bruhat.leq(w, w_prime)) {
                r.fail(w.to_string() + " vs " + w_prime.to_string());
            }
        }
    }
    return r;
}

SuiteResult check_hasse_grading_drop(const ParabolicContext& ctx) {
    SuiteResult r;
    const auto graph = parabolic_hasse(ctx);
    const auto rho = delta(ctx);
    for (const auto& a : graph.arrows) {
        ++r.checked;
        const auto drop = grading_eval(apply(graph.vertices[a.from], rho)) - grading_eval(apply(graph.vertices[a.to], rho));
        if (!drop.is_positive_integer()) {
            r.fail(graph.vertices[a.from].to_string() + " -> " + graph.vertices[a.to].to_string() + " drops " +
                   drop.to_string());
        }
    }
    return r;
}

SuiteResult check_hasse_arrows_give_standard_homs(const OrbitReport& report, HomCache& cache) {
    SuiteResult r;
    const auto& verts = report.graph.vertices;
    if (is_singular(report.dominant)) {
        r.fail("dominant representative " + report.dominant.to_string() + " is singular");
        return r;
    }
    std::vector<WeylElem> elems;
    std::vector<int> lengths;
    for (const auto& v : verts) {
        elems.push_back(elem_taking(report.dominant, v));
        lengths.push_back(length(elems.back()));
    }
    for (std::size_t a = 0; a < verts.size(); ++a) {
        const auto inv = elems[a].inverse();
        for (std::size_t b = 0; b < verts.size(); ++b) {
            if (a == b || lengths[b] != lengths[a] + 1 || !as_reflection(elems[b] * inv)) {
                continue;
            }
            if (!in_wp(elems[a], report.ctx) || !in_wp(elems[b], report.ctx)) {
                r.fail(verts[a].to_string() + " or " + verts[b].to_string() + " outside W^p");
                continue;
            }
            if (!cache.verma_hom_exists(verts[b], verts[a])) {
                continue;
            }
            ++r.checked;
            if (!cache.standard_hom_nonzero(verts[b], verts[a], report.ctx).standard_nonzero) {
                r.fail("standard map " + verts[b].to_string() + " -> " + verts[a].to_string() + " vanishes");
            }
        }
    }
    return r;
}

SuiteResult check_random_properties(std::size_t rank, std::size_t cases, std::uint64_t seed) {
    SuiteResult r;
    std::mt19937_64 rng(seed ^ (rank * 0x9E3779B97F4A7C15ULL));
    std::uniform_int_distribution<std::int64_t> coord(-12, 12);
    std::uniform_int_distribution<std::size_t> split(0, rank);
    const auto roots = positive_roots(rank);
    std::uniform_int_distribution<std::size_t> pick_root(0, roots.size() - 1);

    auto random_elem = [&] {
        std::vector<int> images(rank);
        for (std::size_t i = 0; i < rank; ++i) {
            images[i] = static_cast<int>(i) + 1;
        }
        std::shuffle(images.begin(), images.end(), rng);
        for (auto& x : images) {
            if (rng() & 1U) {
                x = -x;
            }
        }
        return WeylElem(std::move(images));
    };

    for (std::size_t c = 0; c < cases; ++c) {
        std::vector<HalfInt> coords(rank);
        for (auto& x : coords) {
            x = HalfInt::from_twice(coord(rng));
        }
        const Weight lambda(std::move(coords), split(rng));
        const auto& beta = roots[pick_root(rng)];
        const auto reflected = reflect(lambda, beta);
        const auto label = lambda.to_string() + " / " + beta.to_string();
        ++r.checked;

        if (reflect(reflected, beta) != lambda) {
            r.fail("involution: " + label);
        }
        if (dominant_rep(reflected) != dominant_rep(lambda)) {
            r.fail("absolute values: " + label);
        }
        if (pairing(reflected, beta) != -pairing(lambda, beta)) {
            r.fail("pairing sign flip: " + label);
        }
        if ((reflected == lambda) != pairing(lambda, beta).is_zero()) {
            r.fail("fixed point: " + label);
        }
        if (apply(WeylElem::reflection(beta, rank), lambda) != reflected) {
            r.fail("reflection element: " + label);
        }

        const auto dom = dominant_rep(lambda);
        if (dominant_rep(dom) != dom || !is_dominant(dom)) {
            r.fail("dominant_rep idempotence: " + label);
        }

        const auto u = random_elem();
        const auto v = random_elem();
        if (apply(u * v, lambda) != apply(u, apply(v, lambda))) {
            r.fail("apply composition: " + u.to_string() + " " + v.to_string());
        }
        const auto s = WeylElem::reflection(beta, rank);
        if ((length(s * u) - length(u)) % 2 == 0) {
            r.fail("length parity: " + beta.to_string() + " " + u.to_string());
        }
        if (length(u.inverse()) != length(u)) {
            r.fail("inverse length: " + u.to_string());
        }

        if (rank >= 2) {
            const int k = 1 + static_cast<int>(rng() % (rank - 1));
            const ParabolicContext ctx(k, 2 * (static_cast<int>(rank) - k) + 1);
            const auto dec = min_coset_rep(u, ctx);
            if (dec.levi_part * dec.min_rep != u || length(dec.levi_part) + length(dec.min_rep) != length(u) ||
                !in_wp(dec.min_rep, ctx) || !in_levi_subgroup(dec.levi_part, ctx)) {
                r.fail("coset decomposition: " + u.to_string() + " k=" + std::to_string(k));
            }
        }
    }
    return r;
}

std::vector<CheckRow> orbit_checks(const OrbitReport& report) {
    const int k = report.ctx.k();
    const auto tag = "orbit k=" + std::to_string(k) + " n=" + std::to_string(report.ctx.n()) + ": ";
    const auto& g = report.graph;
    std::vector<CheckRow> rows;

    rows.push_back(row(tag + "nonsingular dominant representative", !g.singular, report.dominant.to_string()));

    const auto family = dirac_family_subgraph(report);
    const std::size_t expected = std::size_t{1} << k;
    const std::size_t extra = g.vertices.size() - family.vertices.size();
    rows.push_back(row(tag + "2^k Dirac-family weights", family.vertices.size() == expected && (g.half_rank_case || extra == 0),
                       std::to_string(family.vertices.size()) + " family, " + std::to_string(extra) + " other"));
    if (g.half_rank_case) {
        rows.push_back({tag + "second weight family present", CheckStatus::Flag,
                        std::to_string(extra) + " weights with integral first block"});
    }

    rows.push_back(row(tag + "graph matches S_k", report.matches_sk,
                       std::to_string(family.arrows.size()) + " family arrows"));

    bool orders_ok = true;
    for (const auto& a : family.arrows) {
        orders_ok = orders_ok && a.order && (*a.order == 1 || *a.order == 2) && HalfInt(*a.order) == a.bound;
    }
    for (const auto& a : g.arrows) {
        orders_ok = orders_ok && a.bound.twice() > 0 &&
                    grading_eval(g.vertices[a.from]) - grading_eval(g.vertices[a.to]) == a.bound;
    }
    rows.push_back(row(tag + "orders in {1,2} equal grading drop", orders_ok,
                       std::to_string(family.count_order(1)) + " of order 1, " + std::to_string(family.count_order(2)) +
                           " of order 2"));

    if (g.half_rank_case) {
        std::size_t crossing = 0;
        for (const auto& [a, b] : report.full_relation) {
            crossing += report.in_dirac_family[a] != report.in_dirac_family[b];
        }
        rows.push_back(row(tag + "no homomorphisms across families", crossing == 0,
                           std::to_string(crossing) + " crossing pairs"));
    }

    if (k == 2) {
        std::set<IndexPair> arrows;
        for (const auto& a : g.arrows) {
            arrows.emplace(a.from, a.to);
        }
        const std::set<IndexPair> relation(report.full_relation.begin(), report.full_relation.end());
        rows.push_back(row(tag + "sequence is a complex", report.complex_violations.empty() && arrows == relation,
                           std::to_string(report.complex_violations.size()) + " nonzero compositions"));
    } else if (k >= 3) {
        rows.push_back({tag + "nonzero standard maps along length-2 paths", CheckStatus::Info,
                        std::to_string(report.complex_violations.size()) + " (recorded, not asserted)"});
    }
    return rows;
}

Grid default_grid() {
    Grid grid;
    for (int k = 1; k <= 3; ++k) {
        for (int n : {3, 5, 7}) {
            grid.emplace_back(k, n);
        }
    }
    return grid;
}

Grid parse_grid(std::string_view text) {
    if (text == "default") {
        return default_grid();
    }
    if (text == "extended") {
        auto grid = default_grid();
        grid.emplace_back(4, 3);
        return grid;
    }
    Grid grid;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const auto item = text.substr(start, end - start);
        const auto colon = item.find(':');
        int k = 0;
        int n = 0;
        if (colon == std::string_view::npos ||
            std::from_chars(item.data(), item.data() + colon, k).ptr != item.data() + colon ||
            std::from_chars(item.data() + colon + 1, item.data() + item.size(), n).ptr != item.data() + item.size()) {
            throw Error(ErrorCode::Parse, "bad grid entry '" + std::string(item) + "', expected k:n");
        }
        static_cast<void>(ParabolicContext(k, n));  // validates k and n
        grid.emplace_back(k, n);
        start = end + 1;
    }
    return grid;
}

bool VerifyReport::all_passed() const noexcept {
    return std::none_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.status == CheckStatus::Fail; });
}

std::string VerifyReport::table() const {
    std::size_t width = 0;
    for (const auto& r : rows) {
        width = std::max(width, r.name.size());
    }
    std::ostringstream out;
    for (const auto& r : rows) {
        out << to_string(r.status) << "  " << r.name << std::string(width - r.name.size() + 2, ' ') << r.detail << '\n';
    }
    const auto failed = std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return r.status == CheckStatus::Fail; });
    out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << '\n';
    return out.str();
}

VerifyReport run_verification_suite(const VerifyOptions& options) {
    VerifyReport report;
    HomCache cache;
    AnalyzeOptions analyze;
    analyze.max_rank = options.max_rank;
    for (const auto& [k, n] : options.grid) {
        const ParabolicContext ctx(k, n);
        const auto tag = "orbit k=" + std::to_string(k) + " n=" + std::to_string(n);
        if (ctx.rank() > options.max_rank) {
            report.rows.push_back({tag, CheckStatus::Fail, "rank " + std::to_string(ctx.rank()) + " exceeds max rank"});
            continue;
        }
        const auto orbit = analyze_orbit(k, n, cache, analyze);
        for (auto& r : orbit_checks(orbit)) {
            report.rows.push_back(std::move(r));
        }
        if (options.oracle && !orbit.graph.singular) {
            const auto res = check_hasse_arrows_give_standard_homs(orbit, cache);
            report.rows.push_back(row(tag + ": Hasse arrows give nonzero standard maps", res.ok(), res.summary()));
        }
    }
    if (!options.oracle) {
        return report;
    }
    for (std::size_t rank : {2U, 3U}) {
        const auto res = check_bruhat_oracle(rank);
        report.rows.push_back(row("Bruhat search = subword oracle, B" + std::to_string(rank), res.ok(), res.summary()));
    }
    {
        const auto res = check_verma_matches_bruhat(3);
        report.rows.push_back(row("Verma homomorphisms = Bruhat order on delta orbit, B3", res.ok(), res.summary()));
    }
    for (const auto& [k, n] : Grid{{1, 5}, {2, 3}, {2, 5}, {2, 7}}) {
        const ParabolicContext ctx(k, n);
        const auto res = check_hasse_grading_drop(ctx);
        report.rows.push_back(row("Hasse arrows drop grading, B" + std::to_string(ctx.rank()) + " k=" + std::to_string(k),
                                  res.ok(), res.summary()));
    }
    for (std::size_t rank = 1; rank <= 5; ++rank) {
        const auto res = check_random_properties(rank, options.property_cases, options.seed);
        report.rows.push_back(row("randomized identities, rank " + std::to_string(rank), res.ok(), res.summary()));
    }
    return report;
}

}  // namespace gvm
