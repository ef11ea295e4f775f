#include "catalog.hpp"

#include "partalg/dims.hpp"
#include "partalg/oracle/modules.hpp"

#include <gtest/gtest.h>

using namespace partalg;
using namespace partalg::oracle;

namespace {
Filter F(std::vector<Partition> g, int k, int l) { return Filter(std::move(g), Hook{k, l}); }

TensorVector word(std::initializer_list<int> letters, int alphabet, Rational c = 1) {
    Word w;
    for (int z : letters) w.push_back(static_cast<std::uint8_t>(z));
    return TensorVector::from_word(w, alphabet, c);
}

// Sum of W_lam over lam ⊢ n with pred(lam).
template <class Pred>
TensorSubspace sum_where(const SuperBasis& b, int n, Pred pred) {
    std::vector<Partition> parts;
    for (const auto& lam : enumerate(n))
        if (pred(lam)) parts.push_back(lam);
    return ideal_subspace(std::span<const Partition>(parts), b, n);
}
} // namespace

TEST(Modules, Examples) {
    EXPECT_EQ(module_W(Partition({2}), SuperBasis{2, 0}, 2).dim(), 3u);
    EXPECT_EQ(module_W(Partition({1, 1}), SuperBasis{1, 1}, 2).dim(), 2u);
    EXPECT_EQ(module_W(Partition({1, 1, 1}), SuperBasis{2, 0}, 3).dim(), 0u);
    EXPECT_THROW(module_W(Partition({2}), SuperBasis{2, 0}, 3), InvalidArgument);
    EXPECT_EQ(module_W(Partition{}, SuperBasis{2, 0}, 0).dim(), 1u);
}

TEST(Modules, DecompositionMatchesFormula) {
    for (auto b : {SuperBasis{2, 0}, SuperBasis{1, 1}, SuperBasis{2, 1}})
        for (int n = 0; n <= 4; ++n) {
            std::size_t total = 0;
            TensorSubspace sum(b.size(), n);
            for (const auto& lam : enumerate(n)) {
                const auto w = module_W(lam, b, n);
                EXPECT_EQ(BigInt(static_cast<unsigned long>(w.dim())), w_dim(lam, b.k, b.l)) << lam;
                total += w.dim();
                sum.insert_all(w);
            }
            // the sum is direct and fills T^n(V)
            EXPECT_EQ(total, sum.ambient_dim());
            EXPECT_EQ(sum.dim(), sum.ambient_dim());
        }
}

TEST(Modules, TableauIndependence) {
    for (auto b : {SuperBasis{2, 0}, SuperBasis{1, 1}, SuperBasis{1, 2}})
        for (int n = 2; n <= 4; ++n)
            for (const auto& lam : enumerate(n)) {
                const auto a = module_W(lam, b, n, row_reading_tableau(lam));
                const auto c = module_W(lam, b, n, column_reading_tableau(lam));
                EXPECT_EQ(a, c) << lam;
            }
    EXPECT_THROW(module_W(Partition({2, 1}), SuperBasis{2, 0}, 3, row_reading_tableau(Partition({3}))),
                 InvalidArgument);
}

TEST(Modules, IdealSubspaceExamples) {
    EXPECT_EQ(ideal_subspace(F({{1, 1}}, 2, 0), SuperBasis{2, 0}, 2).dim(), 1u);
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(ideal_subspace(F({Partition{}}, 1, 1), SuperBasis{1, 1}, n), TensorSubspace::full(2, n));
    EXPECT_EQ(ideal_subspace(F({{2, 1}}, 2, 0), SuperBasis{2, 0}, 3).dim(), 4u);
}

TEST(Modules, SuperCommutationRelations) {
    const SuperBasis b{2, 2};
    const auto ideal = ideal_subspace(F({{1, 1}}, 2, 2), b, 2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const int sign = (b.is_odd(i) && b.is_odd(j)) ? 1 : -1;
            EXPECT_TRUE(ideal.contains(word({i, j}, 4) + word({j, i}, 4, sign))) << i << j;
        }
    // and nothing else: the quotient in degree 2 has the supercommutative dimension
    EXPECT_EQ(16 - ideal.dim(), 3u + 4u + 1u);
}

TEST(Modules, CheckIdeal) {
    for (const auto& f : catalog::ideal_filters()) {
        const Hook h = *f.ambient();
        const auto members = members_up_to(f, 3);
        EXPECT_TRUE(check_ideal(members, SuperBasis{h.k, h.l}, 3).is_ideal);
    }
    for (const auto& nf : catalog::non_filters()) {
        const auto r = check_ideal(nf.set, SuperBasis{nf.k, nf.l}, 3);
        EXPECT_FALSE(r.is_ideal);
    }
    const auto r = check_ideal(std::vector<Partition>{{1, 1}}, SuperBasis{2, 0}, 3);
    EXPECT_EQ(r.failing_degree, 2);
    // all partitions: the whole tensor algebra
    EXPECT_TRUE(check_ideal(enumerate_up_to(3), SuperBasis{1, 1}, 3).is_ideal);
    // sizes ≤ 4 of <(1,1)>
    EXPECT_TRUE(check_ideal(members_up_to(F({{1, 1}}, 2, 0), 4), SuperBasis{2, 0}, 4).is_ideal);
}

TEST(Modules, EvaluateIdentityExamples) {
    const auto sym = F({{1, 1}}, 2, 0);
    for (int n = 0; n <= 5; ++n) EXPECT_TRUE(evaluate_identity(commutator_product(1), sym, SuperBasis{2, 0}, n).holds);
    const auto sc = F({{1, 1}}, 1, 1);
    for (int n = 0; n <= 5; ++n) EXPECT_TRUE(evaluate_identity(named_polynomial("lie3"), sc, SuperBasis{1, 1}, n).holds);
    // one odd letter squares to zero, so that quotient is still commutative;
    // with two odd letters u1 u2 = -u2 u1 breaks commutativity
    EXPECT_TRUE(evaluate_identity(commutator_product(1), sc, SuperBasis{1, 1}, 3).holds);
    const auto r = evaluate_identity(commutator_product(1), F({{1, 1}}, 1, 2), SuperBasis{1, 2}, 2);
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(*r.witness, (std::vector<Word>{Word{1}, Word{2}}));
}

TEST(Modules, ClassicalIdentityFromSquare) {
    const auto omega = F({{2, 2}}, 2, 0);
    const auto c = is_pi_classical(omega);
    ASSERT_EQ(c, 2);
    const int m = classical_identity_degree(*c, 2);
    EXPECT_EQ(m, 3);
    const auto r = evaluate_identity(commutator_product(m), omega, SuperBasis{2, 0}, 2 * m, true);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.substitutions, 64u);
    EXPECT_FALSE(evaluate_identity(commutator_product(1), omega, SuperBasis{2, 0}, 2).holds);
}

TEST(Modules, CommutatorGrading) {
    const SuperBasis b{2, 0};
    for (int n = 2; n <= 5; ++n) {
        const auto rest = sum_where(b, n, [&](const Partition& lam) { return lam != Partition::row(n); });
        for (int a = 1; a < n; ++a)
            for (const auto& s1 : all_words(2, a))
                for (const auto& s2 : all_words(2, n - a)) {
                    std::vector<Word> args{s1, s2};
                    EXPECT_TRUE(rest.contains(evaluate_on_words(commutator_product(1), args, 2)));
                }
    }
    // products of j commutators live in the W_lam with c(lam) ≥ j
    for (int j = 1; j <= 2; ++j) {
        const int n = 2 * j + 1;
        const auto high = sum_where(b, n, [&](const Partition& lam) { return c_stat(lam) >= j; });
        for_each_word_tuple(2 * j, n, 2, false, [&](std::span<const Word> t) {
            EXPECT_TRUE(high.contains(evaluate_on_words(commutator_product(j), t, 2)));
            return true;
        });
    }
}

TEST(Modules, GeneratedIdeal) {
    const SuperBasis b{2, 0};
    for (int n = 0; n <= 4; ++n) {
        const auto comm = quadratic_relations(b, -1);
        const auto anti = quadratic_relations(b, +1);
        EXPECT_EQ(generated_ideal(comm, b, n), ideal_subspace(F({{1, 1}}, 2, 0), b, n)) << n;
        EXPECT_EQ(generated_ideal(anti, b, n), ideal_subspace(F({{2}}, 2, 0), b, n)) << n;
    }
    EXPECT_EQ(generated_ideal(std::vector<TensorVector>{}, b, 3).dim(), 0u);
}

TEST(Modules, Caps) {
    EXPECT_THROW(module_W(Partition({4, 3}), SuperBasis{2, 2}, 7), CapExceeded);
    // the empty set is trivially closed, so every degree up to the cap is visited
    EXPECT_THROW(check_ideal(std::vector<Partition>{}, SuperBasis{4, 4}, 5), CapExceeded);
}
