#include "doctest.h"
#include "fixtures.hpp"

#include "pbck/axioms.hpp"
#include "pbck/error.hpp"

using namespace pbck;

namespace {

bool passes(const finite_algebra& a, axiom_system sys) {
    return check_axiom_system(a, sys).pass();
}

} // namespace

TEST_CASE("valid fixtures pass every axiom suite they belong to") {
    for (const auto& a : {fx::a2(), fx::a6(), fx::a4c(), fx::a4l()}) {
        CAPTURE(a.size());
        CHECK(passes(a, axiom_system::relational));
        CHECK(passes(a, axiom_system::equational));
        // both weakenings must also hold
        CHECK(passes(a, axiom_system::pseudo_bci));
        CHECK(passes(a, axiom_system::pseudo_be));
        CHECK(is_pbck(a));
    }
}

TEST_CASE("the printed a4l tables fail with pinned witnesses") {
    const auto a = fx::a4l_printed();
    CHECK_FALSE(is_pbck(a));

    const auto rep = check_axiom_system(a, axiom_system::equational);
    REQUIRE(rep.clauses.size() == 6);
    // 1->a = b poisons exactly the first four clauses
    const auto* c3 = rep.find("psBCK3'");
    REQUIRE(c3 != nullptr);
    CHECK_FALSE(c3->pass);
    CHECK(c3->detail == "1->a = b, expected a");
    REQUIRE(c3->witnesses.size() == 1);
    CHECK(c3->witnesses[0] == std::vector<element>{1});
    CHECK_FALSE(rep.find("psBCK1'")->pass);
    CHECK(rep.find("psBCK1'")->witnesses[0] == std::vector<element>{2, 3, 1});
    CHECK_FALSE(rep.find("psBCK2'")->pass);
    CHECK_FALSE(rep.find("psBCK4'")->pass);
    CHECK(rep.find("psBCK5'")->pass);
    CHECK(rep.find("psBCK6'")->pass);

    CHECK_FALSE(passes(a, axiom_system::relational));
    CHECK_FALSE(passes(a, axiom_system::pseudo_bci));
}

TEST_CASE("witness_mode::all collects every violating tuple") {
    const auto rep =
        check_axiom_system(fx::a4l_printed(), axiom_system::equational, witness_mode::all);
    const auto* c3 = rep.find("psBCK3'");
    REQUIRE(c3 != nullptr);
    // 1->a is the only wrong entry of the printed bottom row
    CHECK(c3->witnesses == std::vector<std::vector<element>>{{1}});
    const auto* c1 = rep.find("psBCK1'");
    REQUIRE(c1 != nullptr);
    CHECK(c1->witnesses.size() > 1);
    CHECK(c1->witnesses[0] == std::vector<element>{2, 3, 1});
}

TEST_CASE("clause_holds re-evaluates reported witnesses") {
    const auto bad = fx::a4l_printed();
    CHECK_FALSE(clause_holds(bad, "EQUATIONAL", "psBCK3'", std::vector<element>{1}));
    CHECK(clause_holds(bad, "EQUATIONAL", "psBCK3'", std::vector<element>{3}));
    CHECK(clause_holds(fx::a6(), "EQUATIONAL", "psBCK1'", std::vector<element>{1, 2, 3}));
    CHECK_THROWS_AS((void)clause_holds(bad, "EQUATIONAL", "no-such-clause",
                                       std::vector<element>{1}),
                    error);
    // every reported witness of every clause must really violate its clause
    const auto rep = check_axiom_system(bad, axiom_system::equational, witness_mode::all);
    for (const auto& cl : rep.clauses)
        for (const auto& w : cl.witnesses) CHECK_FALSE(clause_holds(bad, "EQUATIONAL", cl.name, w));
}

TEST_CASE("derived order of a6") {
    const auto a = fx::a6();
    const auto ord = derive_order(a);
    CHECK_FALSE(ord.linear);
    REQUIRE(ord.least.has_value());
    CHECK(*ord.least == 0);

    // 0 < a < b < c < 1 and d < c with d incomparable to a and b
    CHECK(ord.leq(1, 2));
    CHECK(ord.leq(2, 3));
    CHECK(ord.leq(4, 3));
    CHECK_FALSE(ord.leq(1, 4));
    CHECK_FALSE(ord.leq(4, 1));
    CHECK_FALSE(ord.leq(2, 4));
    CHECK_FALSE(ord.leq(3, 2));
    for (element x = 0; x < 6; ++x) {
        CHECK(ord.leq(x, x));
        CHECK(ord.leq(x, 5));
    }
}

TEST_CASE("glb and lub on a6") {
    const auto a = fx::a6();
    const auto ord = derive_order(a);
    auto g = [&](element x, element y) { return glb(a, ord, x, y); };
    auto l = [&](element x, element y) { return lub(a, ord, x, y); };
    CHECK(g(1, 4) == 0);
    CHECK(l(1, 4) == 3);
    CHECK(g(2, 4) == 0);
    CHECK(l(2, 4) == 3);
    CHECK(g(1, 2) == 1);
    CHECK(l(1, 2) == 2);
    CHECK(g(3, 3) == 3);
    CHECK(l(0, 5) == 5);
}

TEST_CASE("glb can be empty on the unbounded fixture") {
    const auto a = fx::a4c();
    const auto ord = derive_order(a);
    CHECK_FALSE(ord.least.has_value());
    CHECK_FALSE(glb(a, ord, 0, 1).has_value()); // a, b share no lower bound
    CHECK(lub(a, ord, 0, 1) == 2);
}

TEST_CASE("boundedness profiles") {
    const auto p6 = boundedness_profile(fx::a6(), 0);
    CHECK(p6.least == 0);
    CHECK(p6.good == true);
    CHECK(p6.pointed_involutive == false);

    const auto p2 = boundedness_profile(fx::a2(), 0);
    CHECK(p2.least == 0);
    CHECK(p2.good == true);
    CHECK(p2.pointed_involutive == true);

    const auto p4 = boundedness_profile(fx::a4c());
    CHECK_FALSE(p4.least.has_value());
    CHECK_FALSE(p4.good.has_value());
    CHECK_FALSE(p4.pointed_involutive.has_value());

    CHECK_THROWS_AS((void)boundedness_profile(fx::a6(), 6), error);
    CHECK_THROWS_AS((void)boundedness_profile(fx::a4l_printed()), error);
}

TEST_CASE("structure kinds") {
    const auto k6 = structure_kind(fx::a6());
    CHECK_FALSE(k6.linear);
    CHECK(k6.meet_semilattice);
    CHECK(k6.join_semilattice);
    CHECK(k6.lattice);

    const auto k4c = structure_kind(fx::a4c());
    CHECK_FALSE(k4c.linear);
    CHECK_FALSE(k4c.meet_semilattice);
    CHECK(k4c.join_semilattice);
    CHECK_FALSE(k4c.lattice);

    const auto k4l = structure_kind(fx::a4l());
    CHECK(k4l.linear);
    CHECK(k4l.lattice);
}

TEST_CASE("basic laws hold on every valid fixture") {
    for (const auto& a : {fx::a2(), fx::a6(), fx::a4c(), fx::a4l()}) {
        const auto rep = check_basic_laws(a);
        CHECK(rep.pass());
        CHECK(rep.clauses.size() == 6);
    }
    CHECK_THROWS_AS((void)check_basic_laws(fx::a4l_printed()), error);
}

TEST_CASE("direct products") {
    const auto p = direct_product(fx::a2(), fx::a2());
    CHECK(p.size() == 4);
    CHECK(p.top() == 3);
    CHECK(p.name_of(0) == "(0,0)");
    CHECK(p.name_of(2) == "(1,0)");
    CHECK(is_pbck(p));
    // componentwise: (0,1) -> (1,0) = (0->1, 1->0) = (1,0)
    CHECK(p.arrow(1, 2) == 2);

    const auto q = direct_product(fx::a6(), fx::a4c());
    CHECK(q.size() == 24);
    CHECK(is_pbck(q));
    CHECK(structure_kind(q).join_semilattice);

    CHECK_THROWS_AS((void)direct_product(fx::a4l_printed(), fx::a2()), error);
    // raw variant skips the axiom gate but keeps the table arithmetic
    const auto raw = direct_product_raw(fx::a4l_printed(), fx::a2());
    CHECK(raw.size() == 8);
    CHECK_FALSE(is_pbck(raw));
}

TEST_CASE("product size is capped at one machine word") {
    const auto p36 = direct_product(fx::a6(), fx::a6());
    CHECK(p36.size() == 36);
    CHECK_THROWS_AS((void)direct_product(p36, fx::a2()), error);
    try {
        (void)direct_product(p36, fx::a2());
    } catch (const error& e) {
        CHECK(e.code() == errc::size_limit);
    }
}

TEST_CASE("constructor rejects malformed tables") {
    auto mk = [](int n, std::vector<element> ar, std::vector<element> sq, element top) {
        return finite_algebra(n, std::move(ar), std::move(sq), top);
    };
    CHECK_THROWS_AS((void)mk(2, {1, 1, 0}, {1, 1, 0, 1}, 1), error);     // short table
    CHECK_THROWS_AS((void)mk(2, {1, 1, 0, 2}, {1, 1, 0, 1}, 1), error);  // entry out of range
    CHECK_THROWS_AS((void)mk(2, {1, 1, 0, 1}, {1, 1, 0, 1}, 2), error);  // bad top
    CHECK_THROWS_AS((void)mk(0, {}, {}, 0), error);
    CHECK_THROWS_AS((void)finite_algebra(2, {1, 1, 0, 1}, {1, 1, 0, 1}, 1, {"x", "x"}), error);
    CHECK_THROWS_AS((void)finite_algebra(2, {1, 1, 0, 1}, {1, 1, 0, 1}, 1, {"x"}), error);
}

TEST_CASE("element naming") {
    const auto a = fx::a6();
    CHECK(a.element_named("d") == 4);
    CHECK(a.element_named("1") == 5);
    CHECK_FALSE(a.element_named("z").has_value());
    CHECK(a.name_of(3) == "c");

    const finite_algebra anon(2, {1, 1, 0, 1}, {1, 1, 0, 1}, 1);
    CHECK(anon.element_named("0") == 0);
    CHECK(anon.element_named("1") == 1);
    CHECK_FALSE(anon.element_named("2").has_value());
    CHECK(anon.name_of(1) == "1");
}

TEST_CASE("subset helpers") {
    const auto s = subset::of({3, 4, 5});
    CHECK(s.bits == 56);
    CHECK(s.count() == 3);
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(2));
    CHECK(s.without(4).bits == 40);
    CHECK(s.subset_of(subset::full(6)));
    CHECK_FALSE(subset::full(6).subset_of(s));
    CHECK(s.members(6) == std::vector<element>{3, 4, 5});
    CHECK(subset_to_string(fx::a6(), s) == "{c,d,1}");
    CHECK(subset_to_string(fx::a6(), subset{}) == "{}");
}
