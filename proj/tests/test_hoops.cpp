#include "doctest.h"
#include "fixtures.hpp"

#include "pbck/commutativity.hpp"
#include "pbck/deduction.hpp"
#include "pbck/error.hpp"
#include "pbck/hoops.hpp"

#include <string>
#include <vector>

using namespace pbck;

TEST_CASE("chain hoops pass their levels") {
    CHECK(check_hoop(fx::h2(), hoop_level::hoop).pass());
    for (auto lvl : {hoop_level::hoop, hoop_level::wajsberg, hoop_level::basic})
        CHECK(check_hoop(fx::hl3(), lvl).pass());

    // the Goedel chain is basic but not Wajsberg
    CHECK(check_hoop(fx::hg3(), hoop_level::hoop).pass());
    CHECK(check_hoop(fx::hg3(), hoop_level::basic).pass());
    const auto w = check_hoop(fx::hg3(), hoop_level::wajsberg);
    CHECK(w.suite == "WAJSBERG");
    CHECK_FALSE(w.pass());
    CHECK(w.find("W1")->witnesses[0] == std::vector<element>{0, 1});
    CHECK(w.find("W1")->detail == "(x->y)~>y = (y->x)~>x: lhs = a, rhs = 1 at (x,y)=(0,a)");
    CHECK(w.find("W2")->witnesses[0] == std::vector<element>{0, 1});
    CHECK(w.find("W2")->detail == "(x~>y)->y = (y~>x)->x: lhs = a, rhs = 1 at (x,y)=(0,a)");
}

TEST_CASE("basic-level report appends B1 and B2") {
    const auto b = check_hoop(fx::hg3(), hoop_level::basic);
    CHECK(b.suite == "BASIC");
    CHECK(b.clauses.size() == 7);
    CHECK(b.find("B1")->pass);
    CHECK(b.find("B2")->pass);
    CHECK(check_hoop(fx::hg3(), hoop_level::hoop).clauses.size() == 5);
    CHECK(check_hoop(fx::hg3(), hoop_level::wajsberg).clauses.size() == 7);
}

TEST_CASE("pairing a6 with its meet is not a hoop") {
    const auto a = fx::a6();
    std::vector<element> meet(36);
    const auto ord = derive_order(a);
    for (element x = 0; x < 6; ++x)
        for (element y = 0; y < 6; ++y) meet[x * 6 + y] = *glb(a, ord, x, y);
    const hoop_algebra h{a, meet};

    const auto rep = check_hoop(h, hoop_level::hoop);
    CHECK_FALSE(rep.pass());
    CHECK(rep.find("psH1")->pass);
    CHECK(rep.find("psH2")->pass);
    CHECK_FALSE(rep.find("psH3")->pass);
    CHECK(rep.find("psH3")->witnesses[0] == std::vector<element>{1, 1, 4});
    CHECK(rep.find("psH3")->detail ==
          "(x.y)->z = x->(y->z): lhs = c, rhs = 1 at (x,y,z)=(a,a,d)");
    CHECK_FALSE(rep.find("psH4")->pass);
    CHECK(rep.find("psH4")->witnesses[0] == std::vector<element>{1, 1, 4});
    CHECK_FALSE(rep.find("psH5")->pass);
    CHECK(rep.find("psH5")->detail ==
          "(x->y).x = (y->x).y: lhs = a, rhs = b at (x,y)=(a,b)");

    CHECK_THROWS_AS((void)to_pbck(h), error);
    try {
        (void)to_pbck(h);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_a_hoop);
        CHECK(std::string(e.what()).find("psH3") != std::string::npos);
    }
}

TEST_CASE("hoop reducts") {
    CHECK(to_pbck(fx::hl3()) == fx::hl3().base);
    CHECK(to_pbck(fx::hg3()) == fx::hg3().base);
    CHECK(to_pbck(fx::h2()) == fx::a2());
    CHECK(is_commutative(to_pbck(fx::hl3()))); // Wajsberg forces commutativity
    CHECK_FALSE(is_commutative(to_pbck(fx::hg3())));
}

TEST_CASE("divisibility: (x->y).x is the meet") {
    for (const auto& h : {fx::hl3(), fx::hg3()}) {
        const auto a = to_pbck(h);
        const auto ord = derive_order(a);
        for (element x = 0; x < a.size(); ++x)
            for (element y = 0; y < a.size(); ++y)
                CHECK(h.times(a.arrow(x, y), x) == *glb(a, ord, x, y));
    }
}

TEST_CASE("simple chains") {
    CHECK(is_simple(fx::hl3().base));
    CHECK_FALSE(is_simple(fx::hg3().base)); // {a,1} is a proper deductive system
    CHECK(enumerate_ds(fx::hg3().base).size() == 3);
}

TEST_CASE("hoop constructor validates the product table") {
    CHECK_THROWS_AS((hoop_algebra{fx::a2(), {0, 0, 0}}), error);
    try {
        hoop_algebra bad{fx::a2(), {0, 0, 0}};
    } catch (const error& e) {
        CHECK(e.code() == errc::invalid_structure);
    }
}
