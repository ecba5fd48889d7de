#include <doctest.h>

#include "oracles.hpp"
#include "powersub/errors.hpp"
#include "powersub/subgroups.hpp"

#include <algorithm>
#include <random>

using namespace powersub;

namespace {

ElementSet random_subset(std::mt19937& rng, std::size_t n, double density) {
    std::bernoulli_distribution pick(density);
    ElementSet s(n);
    for (Elem a = 0; a < n; ++a)
        if (pick(rng)) s.insert(a);
    return s;
}

// Lexicographic S3: 0=id, 1=(2 3), 2=(1 2), 3=(1 2 3), 4=(1 3 2), 5=(1 3).
constexpr Elem kS3_23 = 1, kS3_12 = 2, kS3_123 = 3;

} // namespace

TEST_CASE("closure") {
    const auto c6 = make_cyclic(6);
    CHECK(closure(c6, ElementSet(6)) == ElementSet(6, {0}));
    CHECK(closure(c6, ElementSet(6, {2})) == ElementSet(6, {0, 2, 4}));

    const auto s3 = make_symmetric(3);
    const ElementSet two_transpositions(6, {kS3_12, kS3_23});
    CHECK(oracle::fixpoint_closure(s3, two_transpositions) == ElementSet::full(6));
    CHECK(closure(s3, two_transpositions) == ElementSet::full(6));

    const Elem gens[] = {kS3_123};
    CHECK(closure(s3, std::span<const Elem>(gens)) == ElementSet(6, {0, 3, 4}));
}

TEST_CASE("closure agrees with the fixpoint oracle and is a closure operator") {
    std::mt19937 rng(12345);
    const std::vector<GroupTable> groups = {make_symmetric(4), make_generalized_quaternion(16),
                                            make_dihedral(6), make_elementary_abelian(3, 3)};
    for (const auto& g : groups) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto s = random_subset(rng, g.order(), 0.08);
            const auto c = closure(g, s);
            REQUIRE(c == oracle::fixpoint_closure(g, s));
            CHECK(s.is_subset_of(c));
            CHECK(closure(g, c) == c);
            CHECK(is_subgroup(g, c));
            CHECK(g.order() % c.size() == 0);
            auto bigger = s;
            bigger |= random_subset(rng, g.order(), 0.05);
            CHECK(c.is_subset_of(closure(g, bigger)));
        }
    }
}

TEST_CASE("is_subgroup") {
    const auto c6 = make_cyclic(6);
    CHECK(is_subgroup(c6, ElementSet(6, {0})));
    CHECK(is_subgroup(c6, ElementSet(6, {0, 3})));
    CHECK_FALSE(is_subgroup(c6, ElementSet(6, {0, 1})));
    CHECK_FALSE(is_subgroup(c6, ElementSet(6)));
    CHECK_FALSE(is_subgroup(c6, ElementSet(6, {3})));
}

TEST_CASE("subgroup counts") {
    CHECK(all_subgroups(make_cyclic(12)).size() == 6);

    const auto q8 = make_generalized_quaternion(8);
    CHECK(oracle::subgroups_by_subset_scan(q8).size() == 6);
    CHECK(all_subgroups(q8).size() == 6);

    const auto d4 = make_dihedral(4);
    CHECK(oracle::subgroups_by_subset_scan(d4).size() == 10);
    CHECK(all_subgroups(d4).size() == 10);

    const auto s4 = make_symmetric(4);
    const auto s4_oracle = oracle::subgroups_by_pair_joins(s4);
    CHECK(s4_oracle.size() == 30);
    CHECK(all_subgroups(s4) == s4_oracle);

    CHECK(all_subgroups(make_cyclic(1)).size() == 1);
    CHECK(all_subgroups(make_elementary_abelian(2, 4)).size() == 67);
}

TEST_CASE("all_subgroups matches the subset-scan oracle up to order 16") {
    const std::vector<GroupTable> groups = {
        make_cyclic(16),           make_dihedral(8),
        make_generalized_quaternion(16), make_elementary_abelian(2, 4),
        direct_product(make_cyclic(4), make_cyclic(4)),
        direct_product(make_generalized_quaternion(8), make_cyclic(2)),
        make_alternating(4),       make_dihedral(6),
    };
    for (const auto& g : groups) {
        INFO(g.name());
        const auto subs = all_subgroups(g);
        CHECK(subs == oracle::subgroups_by_subset_scan(g));
        CHECK(subs.front() == ElementSet(g.order(), {g.identity()}));
        CHECK(subs.back() == ElementSet::full(g.order()));
        CHECK(std::is_sorted(subs.begin(), subs.end()));
    }
}

TEST_CASE("serial and parallel enumeration agree") {
    for (const auto& g : {make_symmetric(4), make_elementary_abelian(2, 5), make_dihedral(12),
                          direct_product(make_generalized_quaternion(8), make_cyclic(6))}) {
        INFO(g.name());
        CHECK(all_subgroups(g) == all_subgroups_serial(g));
    }
}

TEST_CASE("all_subgroups contains every sampled closure") {
    std::mt19937 rng(99);
    const auto g = direct_product(make_dihedral(4), make_cyclic(3));
    const auto subs = all_subgroups(g);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = closure(g, random_subset(rng, g.order(), 0.06));
        CHECK(std::binary_search(subs.begin(), subs.end(), c));
    }
}

TEST_CASE("conjugation and normality") {
    const auto s3 = make_symmetric(3);
    const ElementSet h12(6, {0, kS3_12});
    CHECK(conjugate(s3, h12, 0) == h12);
    CHECK(conjugate(s3, h12, kS3_123) == ElementSet(6, {0, kS3_23}));
    CHECK_FALSE(is_normal(s3, h12));
    CHECK(is_normal(s3, ElementSet(6, {0, 3, 4})));

    const auto q8 = make_generalized_quaternion(8);
    CHECK(is_normal(q8, ElementSet(8, {0, 2})));

    const auto c12 = make_cyclic(12);
    for (const auto& s : all_subgroups(c12)) CHECK(is_normal(c12, s));

    const auto s4 = make_symmetric(4);
    for (const auto& s : all_subgroups(s4))
        for (Elem x = 0; x < s4.order(); ++x) {
            const auto c = conjugate(s4, s, x);
            CHECK(c.size() == s.size());
            CHECK(conjugate(s4, c, s4.inv(x)) == s);
            if (is_normal(s4, s)) CHECK(c == s);
        }
}

TEST_CASE("quotients") {
    const auto q8 = make_generalized_quaternion(8);

    const auto by_trivial = quotient(q8, ElementSet(8, {0}));
    CHECK(by_trivial.table == q8);

    const auto by_all = quotient(q8, ElementSet::full(8));
    CHECK(by_all.table.order() == 1);

    const ElementSet center(8, {0, 2});
    const auto q = quotient(q8, center);
    CHECK(q.table.order() == 4);
    CHECK(exponent(q.table) == 2);
    CHECK(q.coset_reps == std::vector<Elem>{0, 1, 4, 5});
    CHECK_FALSE(verify_group_axioms(q.table).has_value());

    CHECK(lift_subgroup(q, ElementSet(4, {0})) == center);
    CHECK(lift_subgroup(q, ElementSet::full(4)) == ElementSet::full(8));
    CHECK(lift_subgroup(q, ElementSet(4, {0, 1})) == ElementSet(8, {0, 1, 2, 3}));

    const auto s3 = make_symmetric(3);
    CHECK_THROWS_AS(quotient(s3, ElementSet(6, {0, kS3_12})), PreconditionError);
    CHECK_THROWS_AS(quotient(s3, ElementSet(6, {0, kS3_123})), PreconditionError);
}

TEST_CASE("quotient is a homomorphism and lift/projection are inverse") {
    for (const auto& g : {make_symmetric(4), make_dihedral(6), make_generalized_quaternion(16),
                          direct_product(make_cyclic(4), make_cyclic(2))}) {
        const auto subs = all_subgroups(g);
        for (const auto& n : subs) {
            if (!is_normal(g, n)) continue;
            INFO(g.name() << " / " << n.to_hex());
            const auto q = quotient(g, n);
            REQUIRE_FALSE(verify_group_axioms(q.table).has_value());
            CHECK(q.table.order() * n.size() == g.order());
            CHECK(q.coset_of[g.identity()] == q.table.identity());
            for (Elem a = 0; a < g.order(); ++a)
                for (Elem b = 0; b < g.order(); ++b)
                    REQUIRE(q.coset_of[g.mul(a, b)] == q.table.mul(q.coset_of[a], q.coset_of[b]));
            for (std::size_t i = 0; i < q.coset_reps.size(); ++i) {
                CHECK(q.coset_of[q.coset_reps[i]] == i);
                for (Elem a = 0; a < q.coset_reps[i]; ++a) CHECK(q.coset_of[a] != i);
            }
            for (const auto& a : subs) {
                if (!n.is_subset_of(a)) continue;
                const auto projected = project_subgroup(q, a);
                CHECK(is_subgroup(q.table, projected));
                CHECK(lift_subgroup(q, projected) == a);
            }
            for (const auto& qs : all_subgroups(q.table))
                CHECK(project_subgroup(q, lift_subgroup(q, qs)) == qs);
        }
    }
}

TEST_CASE("induced group") {
    const auto s4 = make_symmetric(4);
    for (const auto& s : all_subgroups(s4)) {
        const auto ind = induced_group(s4, s);
        CHECK(ind.table.order() == s.size());
        CHECK_FALSE(verify_group_axioms(ind.table).has_value());
    }
    CHECK_THROWS_AS(induced_group(make_cyclic(6), ElementSet(6, {0, 1})), PreconditionError);
}

TEST_CASE("order cap applies to enumeration") {
    const auto c300 = make_cyclic(300, 1000);
    CHECK_THROWS_AS(all_subgroups(c300), SizeError);
}
