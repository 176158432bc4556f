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

#include <gtest/gtest.h>

#include <map>
#include <queue>
#include <set>

#include "gvm/weyl.hpp"

using namespace gvm;

namespace {

Weight W(const char* s) { return parse_weight(s); }

std::vector<WeylElem> all_elements(std::size_t rank) {
    std::vector<WeylElem> out;
    for (const auto& w : WeylGroup(rank)) {
        out.push_back(w);
    }
    return out;
}

// word lengths by BFS on the Cayley graph with simple generators
std::map<WeylElem, int> cayley_lengths(std::size_t rank) {
    std::vector<WeylElem> gens;
    for (const auto& a : simple_roots(rank)) {
        gens.push_back(WeylElem::reflection(a, rank));
    }
    std::map<WeylElem, int> dist{{WeylElem::identity(rank), 0}};
    std::queue<WeylElem> q;
    q.push(WeylElem::identity(rank));
    while (!q.empty()) {
        const auto w = q.front();
        q.pop();
        for (const auto& s : gens) {
            const auto v = s * w;
            if (dist.emplace(v, dist[w] + 1).second) {
                q.push(v);
            }
        }
    }
    return dist;
}

}  // namespace

TEST(WeylElem, IdentityAndInverse) {
    const auto e = WeylElem::identity(3);
    EXPECT_TRUE(e.is_identity());
    EXPECT_EQ(length(e), 0);
    for (const auto& w : WeylGroup(3)) {
        EXPECT_TRUE((w * w.inverse()).is_identity());
        EXPECT_EQ(length(w.inverse()), length(w));
    }
}

TEST(WeylElem, RejectsNonPermutations) {
    EXPECT_THROW(WeylElem({1, 1}), Error);
    EXPECT_THROW(WeylElem({0, 2}), Error);
    EXPECT_THROW(WeylElem({1, 3}), Error);
}

TEST(WeylElem, ToString) {
    EXPECT_EQ(WeylElem({1, -2, 3}).to_string(), "(1,-2,3)");
}

TEST(Apply, SimpleCases) {
    const auto lambda = W("[3/2,1/2]");
    EXPECT_EQ(apply(WeylElem::identity(2), lambda), lambda);
    EXPECT_EQ(apply(WeylElem::reflection(Root::diff(0, 1), 2), lambda), W("[1/2,3/2]"));
}

TEST(Apply, IsAGroupAction) {
    const auto lambda = W("[5/2,-1|3/2]");
    const auto elems = all_elements(3);
    for (const auto& u : elems) {
        EXPECT_EQ(apply(u, apply(u.inverse(), lambda)), lambda);
        for (const auto& v : elems) {
            EXPECT_EQ(apply(u * v, lambda), apply(u, apply(v, lambda)));
        }
    }
}

TEST(Apply, ReflectionElementMatchesReflect) {
    const auto lambda = W("[7/2,-2,1/2|3,-5/2]");
    for (const auto& beta : positive_roots(5)) {
        EXPECT_EQ(apply(WeylElem::reflection(beta, 5), lambda), reflect(lambda, beta));
    }
}

TEST(WeylGroup, EnumeratesWholeGroup) {
    for (std::size_t m = 1; m <= 4; ++m) {
        const auto elems = all_elements(m);
        const std::set<WeylElem> distinct(elems.begin(), elems.end());
        EXPECT_EQ(elems.size(), WeylGroup(m).size());
        EXPECT_EQ(distinct.size(), elems.size());
    }
    EXPECT_EQ(WeylGroup(6).size(), 46080U);
}

TEST(Length, MatchesCayleyGraphDistance) {
    for (std::size_t m = 1; m <= 4; ++m) {
        const auto dist = cayley_lengths(m);
        EXPECT_EQ(dist.size(), WeylGroup(m).size());
        int longest = 0;
        for (const auto& [w, d] : dist) {
            EXPECT_EQ(length(w), d) << w.to_string();
            longest = std::max(longest, d);
        }
        EXPECT_EQ(longest, static_cast<int>(m * m));
    }
}

TEST(Length, SimpleReflectionsHaveLengthOne) {
    for (const auto& a : simple_roots(5)) {
        EXPECT_EQ(length(WeylElem::reflection(a, 5)), 1);
    }
    std::vector<int> minus(5);
    for (int i = 0; i < 5; ++i) {
        minus[i] = -(i + 1);
    }
    EXPECT_EQ(length(WeylElem(minus)), 25);
}

TEST(Length, ReflectionFlipsParity) {
    for (const auto& w : WeylGroup(3)) {
        for (const auto& beta : positive_roots(3)) {
            const int d = length(WeylElem::reflection(beta, 3) * w) - length(w);
            EXPECT_NE(d % 2, 0);
        }
    }
}

TEST(GreedyReducedWord, HasLengthManyLetters) {
    for (const auto& w : WeylGroup(3)) {
        const auto word = greedy_reduced_word(w);
        EXPECT_EQ(static_cast<int>(word.size()), length(w));
        auto prod = WeylElem::identity(3);
        const auto simples = simple_roots(3);
        for (const auto i : word) {
            prod = prod * WeylElem::reflection(simples[i], 3);
        }
        EXPECT_EQ(prod, w);
    }
}

TEST(Bruhat, ReflexiveAndIdentityMinimum) {
    const auto e = WeylElem::identity(3);
    for (const auto& w : WeylGroup(3)) {
        EXPECT_TRUE(bruhat_leq(w, w));
        EXPECT_TRUE(bruhat_leq(e, w));
        EXPECT_TRUE(bruhat_leq_oracle(e, w));
        if (!w.is_identity()) {
            EXPECT_FALSE(bruhat_leq_oracle(w, e));
            EXPECT_FALSE(bruhat_leq(w, e));
        }
    }
}

TEST(Bruhat, ComparablePairCountsFromOracleScript) {
    for (const auto& [m, expected] : std::vector<std::pair<std::size_t, int>>{{2, 33}, {3, 847}}) {
        const auto elems = all_elements(m);
        int count = 0;
        for (const auto& u : elems) {
            for (const auto& v : elems) {
                const bool a = bruhat_leq(u, v);
                EXPECT_EQ(a, bruhat_leq_oracle(u, v)) << u.to_string() << " " << v.to_string();
                count += a ? 1 : 0;
            }
        }
        EXPECT_EQ(count, expected) << "rank " << m;
    }
}

TEST(Bruhat, ReflectionPairsAreComparableOneWay) {
    for (const auto& w : WeylGroup(3)) {
        for (const auto& beta : positive_roots(3)) {
            const auto v = WeylElem::reflection(beta, 3) * w;
            EXPECT_NE(bruhat_leq(w, v), bruhat_leq(v, w));
        }
    }
}

TEST(Bruhat, ChainsStayInsideWp) {
    // comparable elements of W^p are linked by a chain through W^p
    const ParabolicContext ctx(1, 5);  // B_3
    std::vector<WeylElem> wp;
    for (const auto& w : WeylGroup(3)) {
        if (in_wp(w, ctx)) {
            wp.push_back(w);
        }
    }
    std::map<WeylElem, std::set<WeylElem>> up;
    for (const auto& w : wp) {
        for (const auto& beta : positive_roots(3)) {
            const auto v = WeylElem::reflection(beta, 3) * w;
            if (in_wp(v, ctx) && length(v) == length(w) + 1) {
                up[w].insert(v);
            }
        }
    }
    for (const auto& u : wp) {
        std::set<WeylElem> seen{u};
        std::queue<WeylElem> q;
        q.push(u);
        while (!q.empty()) {
            const auto x = q.front();
            q.pop();
            for (const auto& y : up[x]) {
                if (seen.insert(y).second) {
                    q.push(y);
                }
            }
        }
        for (const auto& v : wp) {
            EXPECT_EQ(bruhat_leq(u, v), seen.count(v) == 1) << u.to_string() << " " << v.to_string();
        }
    }
}

TEST(BruhatCache, AgreesWithDirectComputation) {
    BruhatCache cache;
    const auto elems = all_elements(2);
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& u : elems) {
            for (const auto& v : elems) {
                EXPECT_EQ(cache.leq(u, v), bruhat_leq(u, v));
            }
        }
    }
    EXPECT_EQ(cache.size(), 64U);
}

TEST(Wp, MembershipExamples) {
    const ParabolicContext ctx(2, 5);
    EXPECT_TRUE(in_wp(WeylElem::identity(4), ctx));
    EXPECT_FALSE(in_wp(WeylElem::reflection(Root::diff(0, 1), 4), ctx));
}

TEST(Wp, SizesFromOracleScript) {
    struct Case {
        int k, n;
        std::size_t levi, wp, arrows;
    };
    for (const auto& c : std::vector<Case>{{1, 3, 2, 4, 3}, {1, 5, 8, 6, 5}, {2, 3, 4, 12, 16}, {2, 5, 16, 24, 37}}) {
        const ParabolicContext ctx(c.k, c.n);
        const auto m = static_cast<std::size_t>(ctx.rank());
        std::size_t levi = 0;
        std::size_t wp = 0;
        for (const auto& w : WeylGroup(m)) {
            const auto d = min_coset_rep(w, ctx);
            levi += d.min_rep.is_identity() ? 1 : 0;
            wp += in_wp(w, ctx) ? 1 : 0;
        }
        EXPECT_EQ(levi, c.levi);
        EXPECT_EQ(wp, c.wp);
        const auto g = parabolic_hasse(ctx);
        EXPECT_EQ(g.vertices.size(), c.wp);
        EXPECT_EQ(g.arrows.size(), c.arrows) << c.k << "," << c.n;
    }
}

TEST(Wp, LargerCaseFromOracleScript) {
    const auto g = parabolic_hasse(ParabolicContext(2, 7));
    EXPECT_EQ(g.vertices.size(), 40U);
    EXPECT_EQ(g.arrows.size(), 66U);
}

TEST(CosetDecomposition, ReassemblesAndLengthsAdd) {
    const ParabolicContext ctx(2, 5);
    for (const auto& w : WeylGroup(4)) {
        const auto d = min_coset_rep(w, ctx);
        EXPECT_EQ(d.levi_part * d.min_rep, w);
        EXPECT_EQ(length(d.levi_part) + length(d.min_rep), length(w));
        EXPECT_TRUE(in_wp(d.min_rep, ctx));
        if (in_wp(w, ctx)) {
            EXPECT_TRUE(d.levi_part.is_identity());
        }
    }
}

TEST(CosetDecomposition, CrossedReflectionOutsideLevi) {
    const ParabolicContext ctx(2, 5);
    for (const auto& a : levi_simple_roots(ctx)) {
        const auto s = WeylElem::reflection(a, 4);
        const auto d = min_coset_rep(s, ctx);
        EXPECT_EQ(d.levi_part, s);
        EXPECT_TRUE(d.min_rep.is_identity());
    }
    const auto crossed = WeylElem::reflection(Root::diff(1, 2), 4);
    const auto d = min_coset_rep(crossed, ctx);
    EXPECT_TRUE(d.levi_part.is_identity());
    EXPECT_EQ(d.min_rep, crossed);
}

TEST(Hasse, TwoByOneIsAChain) {
    const ParabolicContext ctx(1, 3);
    const auto g = parabolic_hasse(ctx);
    ASSERT_EQ(g.vertices.size(), 4U);
    ASSERT_EQ(g.arrows.size(), 3U);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(g.arrows[i].from, i);
        EXPECT_EQ(g.arrows[i].to, i + 1);
    }
}

TEST(Hasse, ArrowsAreReflectionsRaisingLength) {
    const ParabolicContext ctx(2, 5);
    const auto g = parabolic_hasse(ctx);
    for (const auto& a : g.arrows) {
        const auto& u = g.vertices[a.from];
        const auto& v = g.vertices[a.to];
        EXPECT_EQ(WeylElem::reflection(a.gamma, 4) * u, v);
        EXPECT_EQ(length(v), length(u) + 1);
        EXPECT_TRUE(in_wp(u, ctx));
        EXPECT_TRUE(in_wp(v, ctx));
    }
}

TEST(Hasse, GradingDropsByPositiveInteger) {
    for (const auto& [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 3}, {2, 7}}) {
        const ParabolicContext ctx(k, n);
        const auto rho = delta(ctx);
        const auto g = parabolic_hasse(ctx);
        for (const auto& a : g.arrows) {
            const auto drop = grading_eval(apply(g.vertices[a.from], rho)) - grading_eval(apply(g.vertices[a.to], rho));
            EXPECT_TRUE(drop.is_positive_integer()) << k << "," << n;
        }
    }
}

TEST(Hasse, MaxLengthTruncates) {
    const ParabolicContext ctx(2, 5);
    const auto g = parabolic_hasse(ctx, 2);
    for (const int l : g.lengths) {
        EXPECT_LE(l, 2);
    }
    EXPECT_LT(g.vertices.size(), 24U);
}

TEST(Hasse, RefusesLargeRank) {
    try {
        parabolic_hasse(ParabolicContext(3, 7));
        FAIL() << "expected refusal";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RankTooLarge);
    }
}

TEST(ElemTaking, Examples) {
    const auto dom = W("[3,2,3/2,1,1/2]");
    EXPECT_TRUE(elem_taking(dom, dom).is_identity());
    const ParabolicContext ctx(2, 7);
    const auto lambda = W("[3/2,1/2|3,2,1]");
    const auto w = elem_taking(dom, lambda.with_split(0));
    EXPECT_EQ(apply(w, dom).coords(), lambda.coords());
    EXPECT_EQ(apply(w, delta(ctx)), W("[5/2,1/2|9/2,7/2,3/2]"));
}

TEST(ElemTaking, Errors) {
    auto code_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    EXPECT_EQ(code_of([] { elem_taking(W("[1,1]"), W("[1,1]")); }), ErrorCode::SingularWeight);
    EXPECT_EQ(code_of([] { elem_taking(W("[2,1]"), W("[3,1]")); }), ErrorCode::NotOnOrbit);
    EXPECT_EQ(code_of([] { elem_taking(W("[1,2]"), W("[2,1]")); }), ErrorCode::NotDominant);
}

TEST(AsReflection, RecognisesReflections) {
    for (const auto& beta : positive_roots(4)) {
        const auto r = as_reflection(WeylElem::reflection(beta, 4));
        ASSERT_TRUE(r.has_value());
        EXPECT_EQ(*r, beta);
    }
    EXPECT_FALSE(as_reflection(WeylElem::identity(3)).has_value());
    EXPECT_FALSE(as_reflection(WeylElem({2, 3, 1})).has_value());
}
