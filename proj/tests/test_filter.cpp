#include "catalog.hpp"

#include "partalg/filter.hpp"
#include "partalg/filter_io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace partalg;

namespace {
Filter F(std::vector<Partition> g, int k, int l) { return Filter(std::move(g), Hook{k, l}); }
Filter bare(std::vector<Partition> g) { return Filter(std::move(g)); }
} // namespace

TEST(Filter, Member) {
    EXPECT_TRUE(bare({{2, 1}}).member(Partition({3, 2})));
    EXPECT_FALSE(bare({{2, 1}}).member(Partition::column(5)));
    for (const auto& lam : enumerate_up_to(6)) EXPECT_TRUE(bare({Partition{}}).member(lam));
}

TEST(Filter, Minimize) {
    std::vector<Partition> g1{{2, 1}, {2, 2}, {3}};
    EXPECT_EQ(minimize(g1).generators(), (std::vector<Partition>{{3}, {2, 1}}));
    std::vector<Partition> g2{{4, 2}};
    EXPECT_EQ(minimize(g2).generators(), g2);
    std::vector<Partition> g3{{1, 1}, {2}, {1}};
    EXPECT_EQ(minimize(g3).generators(), (std::vector<Partition>{{1}}));
}

TEST(Filter, AmbientRectangleIsAdjoined) {
    const auto f = F({{3}}, 2, 0);
    EXPECT_TRUE(f.member(Partition({1, 1, 1})));
    EXPECT_EQ(Filter::ambient_rectangle(Hook{2, 1}), Partition({2, 2, 2}));
    EXPECT_THROW(F({{1}}, -1, 0), InvalidArgument);
}

TEST(Filter, Union) {
    EXPECT_EQ(unite(bare({{2}}), bare({{1, 1}})).generators(), (std::vector<Partition>{{2}, {1, 1}}));
    const auto o = F({{2, 1}, {4}}, 2, 1);
    EXPECT_EQ(unite(o, o), o);
    EXPECT_EQ(unite(bare({{3}}), bare({{2}})), bare({{2}}));
    EXPECT_EQ(unite(F({{3}}, 2, 0), bare({{2, 2}})).ambient(), (Hook{2, 0}));
    EXPECT_THROW(unite(F({{3}}, 2, 0), F({{3}}, 1, 1)), AmbientError);
}

TEST(Filter, ComplementAt) {
    EXPECT_EQ(complement_at(F({{1, 1}}, 2, 0), 5), std::vector<Partition>{Partition({5})});
    EXPECT_EQ(complement_at(F({{2, 1}}, 3, 3), 4), (std::vector<Partition>{{4}, {1, 1, 1, 1}}));
    for (int n = 0; n <= 5; ++n) EXPECT_TRUE(complement_at(F({Partition{}}, 2, 1), n).empty());
    EXPECT_THROW(complement_at(bare({{2}}), 3), AmbientError);
}

TEST(Filter, Hr) {
    EXPECT_EQ(hr(F({Partition{}}, 2, 1)), 0);
    EXPECT_EQ(hr(F({{1, 1}}, 2, 0)), 2);
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l)
            EXPECT_EQ(hr(F({Filter::ambient_rectangle(Hook{k, l})}, k, l)), k + l + 1) << k << "," << l;
    EXPECT_THROW(hr(bare({{2}})), AmbientError);
}

TEST(Filter, HookRectangleWitnessIsMember) {
    for (const auto& f : catalog::filters())
        for (int a1 = 0; a1 <= 4; ++a1)
            for (int a2 = 0; a2 <= 4; ++a2) {
                const auto b = hook_rectangle_witness(f, a1, a2);
                EXPECT_EQ(b.has_value(), admits_hook_rectangle(f, a1, a2));
                if (b) EXPECT_TRUE(f.member(hook_rectangle(a1, a2, *b)));
                // brute force over b
                bool any = false;
                for (int bb = std::max({a1, a2, 1}); bb <= 12 && !any; ++bb) any = f.member(hook_rectangle(a1, a2, bb));
                EXPECT_EQ(any, admits_hook_rectangle(f, a1, a2));
            }
}

TEST(Filter, ExpGrowth) {
    EXPECT_EQ(exp_growth(F({{1, 1}}, 2, 0)), 1);
    EXPECT_EQ(exp_growth(F({{1, 1, 1}}, 2, 0)), 2);
    EXPECT_EQ(exp_growth(F({{2, 2}}, 1, 1)), 2);
    EXPECT_EQ(exp_growth(F({{3}, {1, 1}}, 1, 0)), 0);
    EXPECT_EQ(exp_growth(F({Partition{}}, 1, 0)), 0);
}

TEST(Filter, PiClassical) {
    EXPECT_EQ(is_pi_classical(F({{2, 2}}, 2, 0)), 2);
    EXPECT_EQ(is_pi_classical(F({{1, 1, 1}}, 3, 0)), std::nullopt);
    EXPECT_EQ(is_pi_classical(F({{1, 1}}, 2, 0)), 1);
    EXPECT_THROW(is_pi_classical(F({{2, 2}}, 1, 1)), AmbientError);
    EXPECT_EQ(classical_identity_degree(2, 2), 3);
    EXPECT_EQ(classical_identity_degree(1, 1), 1);
    EXPECT_EQ(classical_identity_degree(3, 4), 10);
}

TEST(Filter, PiSuper) {
    EXPECT_EQ(is_pi_super(F({{1, 1}}, 2, 0)), 2);
    EXPECT_EQ(is_pi_super(F({{2}}, 3, 3)), 2);
    EXPECT_EQ(is_pi_super(F({{2, 2}}, 1, 1)), std::nullopt);
    EXPECT_EQ(super_identity_factors(3), 9);
}

TEST(Filter, NilpotencyBound) {
    for (int k = 1; k <= 3; ++k)
        for (int a = 1; a <= 4; ++a) EXPECT_EQ(nilpotency_bound(F({Partition::row(a)}, k, 0)), k * (a - 1) + 1);
    EXPECT_EQ(nilpotency_bound(F({{3}, {1, 1}}, 1, 0)), 3);
    EXPECT_EQ(nilpotency_bound(F({{1, 1}}, 2, 0)), std::nullopt);
    EXPECT_EQ(nilpotency_bound(F({Partition{}}, 2, 0)), 0);
}

TEST(Filter, CatalogProperties) {
    const auto cat = catalog::filters();
    ASSERT_GE(cat.size(), 20u);
    for (const auto& f : cat) {
        const Hook h = *f.ambient();
        const int a = hr(f);
        EXPECT_GE(a, 0);
        EXPECT_LE(a, h.k + h.l + 1);
        // polynomial growth iff PI
        EXPECT_EQ(is_pi_super(f).has_value(), a <= 2);
        EXPECT_EQ(is_pi_super(f).has_value(), exp_growth(f) <= 1);
        if (h.l == 0) EXPECT_EQ(is_pi_classical(f).has_value(), is_pi_super(f).has_value());
        // generators form an antichain
        for (const auto& x : f.generators())
            for (const auto& y : f.generators())
                if (!(x == y)) EXPECT_FALSE(contained_in(x, y));
        // complement eventually empty iff hr ≤ 1
        const auto bound = nilpotency_bound(f);
        EXPECT_EQ(bound.has_value(), a <= 1);
        const int horizon = bound ? 3 * std::max(*bound, 1) : 12;
        bool tail_empty = true;
        for (int n = horizon / 2; n <= horizon; ++n) tail_empty = tail_empty && complement_at(f, n).empty();
        EXPECT_EQ(tail_empty, a <= 1);
        if (bound) {
            for (int n = *bound; n <= horizon; ++n) EXPECT_TRUE(complement_at(f, n).empty());
            if (*bound > 0) EXPECT_FALSE(complement_at(f, *bound - 1).empty());
        }
    }
}

TEST(Filter, HrIsAntitone) {
    const auto cat = catalog::filters();
    for (const auto& a : cat)
        for (const auto& b : cat) {
            if (!(*a.ambient() == *b.ambient())) continue;
            // a ⊆ b when every generator of a is in b
            bool sub = true;
            for (const auto& g : a.generators()) sub = sub && b.member(g);
            if (sub) EXPECT_GE(hr(a), hr(b));
        }
}

TEST(Filter, MinimizePreservesMembership) {
    std::mt19937 rng(11);
    const auto pool = enumerate_up_to(7);
    std::uniform_int_distribution<std::size_t> pick(1, pool.size() - 1), count(1, 6);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Partition> gens;
        for (std::size_t i = count(rng); i > 0; --i) gens.push_back(pool[pick(rng)]);
        const Filter f = minimize(gens);
        EXPECT_EQ(minimize(f.generators()), f);
        for (const auto& lam : enumerate_up_to(12)) EXPECT_EQ(f.member(lam), member_of_generated(gens, lam));
    }
}

TEST(FilterIO, RoundTrip) {
    const auto f = parse_filter(R"({"k":2, "l":0, "generators":[[2,1],[3]]})");
    EXPECT_EQ(f.ambient(), (Hook{2, 0}));
    EXPECT_EQ(f.generators(), (std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}}));
    EXPECT_EQ(filter_from_json(filter_to_json(f)), f);
    const auto g = parse_filter(R"({"generators":["7^3,2^4", []]})");
    EXPECT_FALSE(g.ambient().has_value());
    EXPECT_EQ(g.generators(), std::vector<Partition>{Partition{}});
    EXPECT_THROW(parse_filter("{"), InvalidArgument);
    EXPECT_THROW(parse_filter(R"({"k":1,"generators":[]})"), InvalidArgument);
    EXPECT_THROW(parse_filter(R"({"k":1,"l":0,"generators":[[1,2]]})"), InvalidArgument);
    EXPECT_THROW(load_filter("/nonexistent/filter.json"), InvalidArgument);
}
