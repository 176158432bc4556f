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

// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "gvm/dirac.hpp"
#include "gvm/verify.hpp"
#include "gvm/weyl.hpp"

using namespace gvm;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = limit_seconds <= 0 || secs < limit_seconds;
    const bool ok = o.ok && in_time;
    failures += ok ? 0 : 1;
    std::printf("[%s] C%d %s: %s%s (%.3f s)\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(),
                in_time ? "" : ", over time limit", secs);
    std::fflush(stdout);
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        out += (out.empty() ? "" : " ") + p;
    }
    return out;
}

std::string count_text(const char* what, std::size_t got, std::size_t want) {
    return std::string(what) + "=" + std::to_string(got) + (got == want ? "" : " (want " + std::to_string(want) + ")");
}

/// Arrows of S_k added at the top level of the recursion.
std::size_t top_level_connecting(const HomGraph& family, int k) {
    const auto top = HalfInt::halves(2 * k - 1);
    std::size_t c = 0;
    for (const auto& a : family.arrows) {
        const auto& from = family.vertices[a.from];
        const auto& to = family.vertices[a.to];
        c += (from[0] == top && to[0] != top) ? 1 : 0;
    }
    return c;
}

Outcome sk_criterion(int k, int n, std::size_t weights, std::size_t arrows, std::size_t order2) {
    const auto r = analyze_orbit(k, n);
    const auto family = dirac_family_subgraph(r);
    const bool ok = family.vertices.size() == weights && family.arrows.size() == arrows &&
                    family.count_order(2) == order2 && r.matches_sk;
    std::vector<std::string> parts{count_text("weights", family.vertices.size(), weights),
                                   count_text("arrows", family.arrows.size(), arrows),
                                   count_text("order2", family.count_order(2), order2),
                                   "top-level connecting=" + std::to_string(top_level_connecting(family, k)),
                                   std::string("matches_sk=") + (r.matches_sk ? "true" : "false")};
    if (r.graph.half_rank_case) {
        parts.push_back("orbit total=" + std::to_string(r.graph.vertices.size()) + " (second family flagged)");
    }
    return {ok, join(parts)};
}

}  // namespace

int main() {
    criterion(1, "k=2 n=7 orbit", 1.0, [] {
        const auto r = analyze_orbit(2, 7);
        std::set<std::string> got;
        for (const auto& v : r.graph.vertices) {
            got.insert(v.to_string());
        }
        const std::set<std::string> want{"[3/2,1/2|3,2,1]", "[3/2,-1/2|3,2,1]", "[1/2,-3/2|3,2,1]",
                                         "[-1/2,-3/2|3,2,1]"};
        // walk the chain from the top weight and read the orders
        std::vector<int> orders;
        bool chain = r.graph.arrows.size() == 3;
        auto cur = r.graph.index_of(r.lambda);
        chain = chain && cur.has_value();
        for (int step = 0; chain && step < 3; ++step) {
            const auto it = std::find_if(r.graph.arrows.begin(), r.graph.arrows.end(),
                                         [&](const HomArrow& a) { return a.from == *cur; });
            if (it == r.graph.arrows.end() || !it->order) {
                chain = false;
                break;
            }
            orders.push_back(*it->order);
            cur = it->to;
        }
        const bool ok = got == want && chain && orders == std::vector<int>{1, 2, 1} && r.matches_sk &&
                        r.complex_violations.empty();
        std::string ord;
        for (int o : orders) {
            ord += std::to_string(o);
        }
        return Outcome{ok, "weights=" + std::to_string(got.size()) + " arrows=" + std::to_string(r.graph.arrows.size()) +
                               " orders=" + ord + " matches_sk=" + (r.matches_sk ? "true" : "false") +
                               " complex_violations=" + std::to_string(r.complex_violations.size())};
    });

    criterion(2, "k=3 n=7 orbit", 30.0, [] { return sk_criterion(3, 7, 8, 8, 2); });

    criterion(3, "k=4 n=3 orbit", 30.0, [] { return sk_criterion(4, 3, 16, 20, 4); });

    criterion(4, "k=2 n=5 two families", 5.0, [] {
        const auto r = analyze_orbit(2, 5);
        std::size_t listed = 0;
        for (const char* s : {"[2,1|3/2,1/2]", "[2,-1|3/2,1/2]", "[1,-2|3/2,1/2]", "[-1,-2|3/2,1/2]"}) {
            listed += r.graph.index_of(parse_weight(s)).has_value() ? 1 : 0;
        }
        std::size_t crossing = 0;
        for (const auto& [a, b] : r.full_relation) {
            crossing += r.in_dirac_family[a] != r.in_dirac_family[b] ? 1 : 0;
        }
        const bool ok = r.graph.vertices.size() == 8 && listed == 4 && crossing == 0;
        return Outcome{ok, count_text("weights", r.graph.vertices.size(), 8) + " " + count_text("listed", listed, 4) +
                               " " + count_text("crossing pairs", crossing, 0)};
    });

    criterion(5, "Bruhat search = subword oracle", 10.0, [] {
        const auto b2 = check_bruhat_oracle(2);
        const auto b3 = check_bruhat_oracle(3);
        const bool ok = b2.ok() && b3.ok() && b2.checked == 64 && b3.checked == 2304;
        return Outcome{ok, "B2 " + b2.summary() + ", B3 " + b3.summary()};
    });

    criterion(6, "Verma homomorphisms = Bruhat order on delta, B3", 0, [] {
        const auto res = check_verma_matches_bruhat(3);
        return Outcome{res.ok() && res.checked == 2304, res.summary()};
    });

    criterion(7, "Hasse arrows drop grading, B4 k=2", 10.0, [] {
        const ParabolicContext ctx(2, 5);
        const auto res = check_hasse_grading_drop(ctx);
        return Outcome{res.ok() && res.checked > 0, res.summary()};
    });

    criterion(8, "Hasse arrows give nonzero standard maps", 0, [] {
        HomCache cache;
        std::vector<std::string> parts;
        bool ok = true;
        for (const auto& [k, n] : Grid{{2, 7}, {3, 7}}) {
            const auto res = check_hasse_arrows_give_standard_homs(analyze_orbit(k, n, cache), cache);
            ok = ok && res.ok() && res.checked > 0;
            parts.push_back("(" + std::to_string(k) + "," + std::to_string(n) + ") " + res.summary());
        }
        return Outcome{ok, join(parts)};
    });

    criterion(9, "randomized identities, 10000 cases per rank <= 5", 10.0, [] {
        std::vector<std::string> parts;
        bool ok = true;
        for (std::size_t rank = 1; rank <= 5; ++rank) {
            const auto res = check_random_properties(rank, 10000, 20260101);
            ok = ok && res.ok() && res.checked == 10000;
            parts.push_back("B" + std::to_string(rank) + " " + res.summary());
        }
        return Outcome{ok, join(parts)};
    });

    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
