#include "doctest.h"
#include "fixtures.hpp"

#include "pbck/axioms.hpp"
#include "pbck/error.hpp"
#include "pbck/states.hpp"

#include <vector>

using namespace pbck;

TEST_CASE("the ten maps on a6 classify exactly as published") {
    const auto a = fx::a6();
    const auto maps = fx::a6_maps();

    struct expected {
        bool t1, t2, n1, n2;
        std::uint64_t kernel;
    };
    const expected table[10] = {
        {true, false, false, false, 56}, // mu1
        {true, false, false, false, 56}, // mu2
        {true, false, true, false, 32},  // mu3 = Id
        {true, false, false, false, 56}, // mu4
        {true, false, true, false, 32},  // mu5
        {true, true, true, true, 62},    // mu6
        {true, false, false, false, 56}, // mu7
        {true, false, false, false, 56}, // mu8
        {true, false, true, false, 32},  // mu9
        {true, true, true, true, 63},    // mu10 = 1_A
    };
    for (int i = 0; i < 10; ++i) {
        CAPTURE(i);
        const auto cls = classify_map(a, maps[i]);
        CHECK(cls.is_type1 == table[i].t1);
        CHECK(cls.is_type2 == table[i].t2);
        CHECK(cls.is_normal1 == table[i].n1);
        CHECK(cls.is_normal2 == table[i].n2);
        CHECK(cls.kernel.bits == table[i].kernel);
        // a6 carries a meet-semilattice order, so IS4 is decidable: all ten satisfy it
        REQUIRE(cls.satisfies_is4.has_value());
        CHECK(*cls.satisfies_is4);

        CHECK(check_state(a, maps[i], state_kind::type1).pass() == table[i].t1);
        CHECK(check_state(a, maps[i], state_kind::type2).pass() == table[i].t2);
    }
}

TEST_CASE("state reports carry the failing clause") {
    const auto a = fx::a6();
    const auto rep = check_state(a, fx::a6_maps()[0], state_kind::type2);
    CHECK(rep.suite == "TYPE2");
    CHECK_FALSE(rep.pass());
    const auto* c = rep.find("IS2'");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->pass);
    CHECK(rep.find("IS1")->pass);
    CHECK(rep.find("IS3")->pass);
}

TEST_CASE("full-space enumerations on a6 reproduce the published sets") {
    const auto a = fx::a6();
    const auto maps = fx::a6_maps();

    const auto t1 = enumerate_states(a, map_kind::type1);
    CHECK(t1 == maps); // all ten, in lexicographic = published order

    const auto t2 = enumerate_states(a, map_kind::type2);
    CHECK(t2 == std::vector<unary_map>{maps[5], maps[9]});

    const auto sm = enumerate_states(a, map_kind::morphism);
    CHECK(sm == std::vector<unary_map>{maps[2], maps[5], maps[9]});
}

TEST_CASE("full-space enumerations on a4c") {
    const auto a = fx::a4c();
    const auto maps = fx::a4c_maps();
    CHECK(enumerate_states(a, map_kind::type1) == maps);
    CHECK(enumerate_states(a, map_kind::type2) == maps);
    CHECK(enumerate_states(a, map_kind::morphism) ==
          std::vector<unary_map>{maps[1], maps[3]});

    // every map is a normal state of both types with a commutative kernel
    for (const auto& mu : maps) {
        const auto cls = classify_map(a, mu);
        CHECK(cls.is_normal1);
        CHECK(cls.is_normal2);
        CHECK(classify_subset(a, cls.kernel).is_commutative);
    }
}

TEST_CASE("full-space enumerations on the corrected a4l") {
    const auto a = fx::a4l();
    const auto t1 = enumerate_states(a, map_kind::type1);
    CHECK(t1 == std::vector<unary_map>{{{0, 0, 3, 3}}, {{0, 1, 2, 3}}, {{1, 1, 3, 3}},
                                       {{3, 3, 3, 3}}});
    CHECK(enumerate_states(a, map_kind::type2) == std::vector<unary_map>{{{3, 3, 3, 3}}});
    CHECK(enumerate_states(a, map_kind::morphism) ==
          std::vector<unary_map>{{{0, 1, 2, 3}}, {{3, 3, 3, 3}}});
}

TEST_CASE("the published a4l map is a type1 state but nothing stronger") {
    const auto a = fx::a4l();
    const auto cls = classify_map(a, fx::a4l_mu());
    CHECK(cls.is_type1);
    CHECK_FALSE(cls.is_type2);
    CHECK_FALSE(cls.is_normal1); // kernel {b,1} is not normal
    CHECK_FALSE(cls.is_normal2);
    CHECK(cls.kernel.bits == 12);
    REQUIRE(cls.satisfies_is4.has_value());
    CHECK(*cls.satisfies_is4);
}

TEST_CASE("kernels and images") {
    const auto a = fx::a6();
    const auto cls6 = classify_map(a, fx::a6_maps()[5]);
    CHECK(cls6.image_set.bits == 33); // {0, 1}
    const auto cls3 = classify_map(a, fx::a6_maps()[2]);
    CHECK(cls3.image_set == subset::full(6));

    // state properties: Im(mu) = fixed points, closed under both arrows,
    // and Ker(mu) meets Im(mu) only in the top
    for (const auto& mu : fx::a6_maps()) {
        const auto cls = classify_map(a, mu);
        subset fixed;
        for (element x = 0; x < 6; ++x)
            if (mu(x) == x) fixed = fixed.with(x);
        CHECK(cls.image_set == fixed);
        for (element x : cls.image_set.members(6))
            for (element y : cls.image_set.members(6)) {
                CHECK(cls.image_set.contains(mu(a.arrow(x, y))));
                CHECK(cls.image_set.contains(a.arrow(mu(x), mu(y))));
            }
        CHECK((cls.kernel.bits & cls.image_set.bits) == (std::uint64_t{1} << 5));
    }
}

TEST_CASE("states are subadditive across the arrows") {
    // mu(x -> y) <= mu(x) -> mu(y), and the squiggle twin
    const auto a = fx::a6();
    for (const auto& mu : enumerate_states(a, map_kind::type1))
        for (element x = 0; x < 6; ++x)
            for (element y = 0; y < 6; ++y) {
                CHECK(a.leq(mu(a.arrow(x, y)), a.arrow(mu(x), mu(y))));
                CHECK(a.leq(mu(a.squiggle(x, y)), a.squiggle(mu(x), mu(y))));
            }
}

TEST_CASE("lifting a normal type2 state to the quotient") {
    const auto a = fx::a6();
    const auto lifted = lift_to_quotient(a, fx::a6_maps()[5]); // mu6
    CHECK(lifted.quot.algebra.size() == 2);
    CHECK(lifted.mu_bar == unary_map{{0, 1}});
    const auto cls = classify_map(lifted.quot.algebra, lifted.mu_bar);
    CHECK(cls.is_normal1);
    CHECK(cls.is_normal2);

    const auto full = lift_to_quotient(a, fx::a6_maps()[9]); // mu10: one block
    CHECK(full.quot.algebra.size() == 1);
    CHECK(full.mu_bar == unary_map{{0}});

    // mu5 is a normal type1 state but not type2: no lift
    CHECK_THROWS_AS((void)lift_to_quotient(a, fx::a6_maps()[4]), error);
    try {
        (void)lift_to_quotient(a, fx::a6_maps()[2]);
    } catch (const error& e) {
        CHECK(e.code() == errc::precondition_violated);
    }
}

TEST_CASE("enumeration respects its node budget") {
    const auto a = fx::a6();
    CHECK_THROWS_AS((void)enumerate_states(a, map_kind::type1, 10), error);
    try {
        (void)enumerate_states(a, map_kind::type1, 10);
    } catch (const error& e) {
        CHECK(e.code() == errc::budget_exceeded);
    }
}

TEST_CASE("diagonal morphisms of a product are states") {
    const auto a2 = fx::a2();
    const auto p = direct_product(a2, a2);
    const unary_map left{{0, 0, 3, 3}};  // (x,y) -> (x,x)
    const unary_map right{{0, 3, 0, 3}}; // (x,y) -> (y,y)
    for (const auto& mu : {left, right}) {
        const auto cls = classify_map(p, mu);
        CHECK(cls.is_type1);
        CHECK(cls.is_normal1);
    }
    CHECK(classify_map(p, left).kernel.bits == 0b1100);
    CHECK(classify_map(p, right).kernel.bits == 0b1010);
}
