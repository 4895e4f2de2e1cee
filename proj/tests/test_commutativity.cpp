#include "doctest.h"
#include "fixtures.hpp"

#include "pbck/axioms.hpp"
#include "pbck/commutativity.hpp"
#include "pbck/error.hpp"
#include "pbck/io.hpp"

#include <utility>

using namespace pbck;

namespace {

constexpr commutativity_method all_methods[] = {
    commutativity_method::def,          commutativity_method::one_sided,
    commutativity_method::yutani_kuhr,  commutativity_method::kuhr_k,
    commutativity_method::palasinski_p, commutativity_method::cornish_c,
    commutativity_method::char_b,       commutativity_method::char_c,
    commutativity_method::char_d,
};

} // namespace

TEST_CASE("the nine methods agree on the fixtures") {
    for (auto m : all_methods) {
        CAPTURE(method_name(m));
        CHECK(check_commutative(fx::a4c(), m).pass());
        CHECK(check_commutative(fx::a2(), m).pass());
        CHECK_FALSE(check_commutative(fx::a6(), m).pass());
        CHECK_FALSE(check_commutative(fx::a4l(), m).pass());
    }
    CHECK(is_commutative(fx::a4c()));
    CHECK(is_commutative(fx::a2()));
    CHECK_FALSE(is_commutative(fx::a6()));
    CHECK_FALSE(is_commutative(fx::a4l()));
}

TEST_CASE("method preconditions") {
    CHECK(method_needs_pbck(commutativity_method::def));
    CHECK(method_needs_pbck(commutativity_method::one_sided));
    CHECK(method_needs_pbck(commutativity_method::char_b));
    CHECK(method_needs_pbck(commutativity_method::char_c));
    CHECK(method_needs_pbck(commutativity_method::char_d));
    CHECK_FALSE(method_needs_pbck(commutativity_method::yutani_kuhr));
    CHECK_FALSE(method_needs_pbck(commutativity_method::kuhr_k));
    CHECK_FALSE(method_needs_pbck(commutativity_method::palasinski_p));
    CHECK_FALSE(method_needs_pbck(commutativity_method::cornish_c));

    const auto bad = fx::a4l_printed();
    for (auto m : all_methods) {
        CAPTURE(method_name(m));
        if (method_needs_pbck(m))
            CHECK_THROWS_AS((void)check_commutative(bad, m), error);
        else
            CHECK_NOTHROW((void)check_commutative(bad, m));
    }
    CHECK_FALSE(is_commutative(bad)); // non-algebras are never commutative
}

TEST_CASE("a6 counterexamples are pinned") {
    const auto a = fx::a6();

    const auto def = check_commutative(a, commutativity_method::def);
    const auto* d1 = def.find("def1");
    REQUIRE(d1 != nullptr);
    CHECK_FALSE(d1->pass);
    CHECK(d1->witnesses[0] == std::vector<element>{0, 1});
    CHECK(d1->detail == "(x->y)~>y = (y->x)~>x: lhs = a, rhs = 1 at (x,y)=(0,a)");

    const auto os = check_commutative(a, commutativity_method::one_sided);
    const auto* o1 = os.find("os1");
    REQUIRE(o1 != nullptr);
    CHECK_FALSE(o1->pass);
    CHECK(o1->witnesses[0] == std::vector<element>{1, 0});

    // the standalone systems localize the failure in their first clause
    const std::pair<commutativity_method, const char*> localized[] = {
        {commutativity_method::yutani_kuhr, "Y1"},
        {commutativity_method::kuhr_k, "K1"},
        {commutativity_method::palasinski_p, "P2"},
        {commutativity_method::char_c, "c1"},
    };
    for (auto [m, clause] : localized) {
        const auto rep = check_commutative(a, m);
        const auto* c = rep.find(clause);
        REQUIRE(c != nullptr);
        CHECK_FALSE(c->pass);
        CHECK(c->witnesses[0] == std::vector<element>{0, 1});
    }
    const auto cc = check_commutative(a, commutativity_method::cornish_c);
    CHECK(cc.find("C2")->witnesses[0] == std::vector<element>{0, 1, 2});
    const auto cb = check_commutative(a, commutativity_method::char_b);
    CHECK(cb.find("b1")->witnesses[0] == std::vector<element>{0, 1});
    CHECK(cb.find("b1")->detail == "x->y = ((y->x)~>x)->y: lhs = 1, rhs = a at (x,y)=(0,a)");
}

TEST_CASE("the corrected a4l fails both defining identities") {
    const auto rep = check_commutative(fx::a4l(), commutativity_method::def);
    const auto* d1 = rep.find("def1");
    const auto* d2 = rep.find("def2");
    REQUIRE(d1 != nullptr);
    REQUIRE(d2 != nullptr);
    CHECK(d1->witnesses[0] == std::vector<element>{0, 1});
    CHECK(d1->detail == "(x->y)~>y = (y->x)~>x: lhs = a, rhs = b at (x,y)=(0,a)");
    CHECK(d2->witnesses[0] == std::vector<element>{0, 2});
    CHECK(d2->detail == "(x~>y)->y = (y~>x)->x: lhs = b, rhs = 1 at (x,y)=(0,b)");
}

TEST_CASE("reported witnesses violate their clauses") {
    const auto a = fx::a6();
    for (auto m : all_methods) {
        const auto rep = check_commutative(a, m, witness_mode::all);
        for (const auto& cl : rep.clauses)
            for (const auto& w : cl.witnesses) {
                CAPTURE(rep.suite);
                CAPTURE(cl.name);
                CHECK_FALSE(clause_holds(a, rep.suite, cl.name, w));
            }
    }
}

TEST_CASE("join matches the defining term and the order lub") {
    const auto a = fx::a4c();
    CHECK(join(a, 0, 1) == 2); // a v b = c
    const auto ord = derive_order(a);
    for (element x = 0; x < a.size(); ++x)
        for (element y = 0; y < a.size(); ++y) {
            CHECK(join(a, x, y) == a.squiggle(a.arrow(x, y), y));
            CHECK(join(a, x, y) == lub(a, ord, x, y));
            CHECK(join(a, x, y) == join(a, y, x));
        }
    CHECK(join(fx::a2(), 0, 1) == 1);
    CHECK_THROWS_AS((void)join(fx::a6(), 0, 1), error); // not commutative
}

TEST_CASE("order-determining measure families") {
    const auto a2 = fx::a2();
    const measure unit{{rational(1), rational(0)}};
    CHECK(check_order_determining(a2, {unit}));

    const auto a6 = fx::a6();
    const measure ind{{rational(1, 2), {}, {}, {}, {}, {}}};
    CHECK_FALSE(check_order_determining(a6, {ind}));

    const measure not_a_measure{{rational(1), rational(1)}};
    CHECK_THROWS_AS((void)check_order_determining(a2, {not_a_measure}), error);
}
