#pragma once

// in-code copies of the shipped fixtures; test_io checks file == code, the
// other suites build on the in-code forms so a broken parser cannot mask an
// algebra regression (or vice versa).

#include <string>
#include <vector>

#include "pbck/algebra.hpp"
#include "pbck/hoops.hpp"

namespace fx {

inline std::string dir() { return PBCK_FIXTURES_DIR; }
inline std::string path(const std::string& name) { return dir() + "/" + name; }

// two-element chain 0 < 1, arrow = squiggle
inline pbck::finite_algebra a2() {
    return {2, {1, 1, 0, 1}, {1, 1, 0, 1}, 1, {"0", "1"}};
}

// six-element lattice 0 < a < b < c < 1, d < c, d incomparable to a and b;
// arrow and squiggle genuinely differ
inline pbck::finite_algebra a6() {
    return {6,
            {5, 5, 5, 5, 5, 5,  //
             0, 5, 5, 5, 3, 5,  //
             0, 2, 5, 5, 3, 5,  //
             0, 2, 2, 5, 3, 5,  //
             0, 2, 2, 5, 5, 5,  //
             0, 1, 2, 3, 4, 5},
            {5, 5, 5, 5, 5, 5,  //
             0, 5, 5, 5, 3, 5,  //
             0, 3, 5, 5, 3, 5,  //
             0, 1, 2, 5, 3, 5,  //
             0, 1, 2, 5, 5, 5,  //
             0, 1, 2, 3, 4, 5},
            5,
            {"0", "a", "b", "c", "d", "1"}};
}

// commutative, unbounded: a and b incomparable below c < 1
inline pbck::finite_algebra a4c() {
    return {4, {3, 2, 3, 3, 2, 3, 3, 3, 2, 2, 3, 3, 0, 1, 2, 3},
            {3, 2, 3, 3, 2, 3, 3, 3, 2, 2, 3, 3, 0, 1, 2, 3}, 3, {"a", "b", "c", "1"}};
}

// chain 0 < a < b < 1 with the bottom arrow row as printed: 1->a = b breaks
// the identity 1->x = x, so this table pair is not a pseudo BCK-algebra
inline pbck::finite_algebra a4l_printed() {
    return {4, {3, 3, 3, 3, 1, 3, 3, 3, 1, 1, 3, 3, 0, 2, 2, 3},
            {3, 3, 3, 3, 1, 3, 3, 3, 1, 1, 3, 3, 0, 2, 2, 3}, 3, {"0", "a", "b", "1"}};
}

// repaired reading: linear, non-commutative, arrow != squiggle
inline pbck::finite_algebra a4l() {
    return {4, {3, 3, 3, 3, 1, 3, 3, 3, 1, 1, 3, 3, 0, 1, 2, 3},
            {3, 3, 3, 3, 2, 3, 3, 3, 0, 1, 3, 3, 0, 1, 2, 3}, 3, {"0", "a", "b", "1"}};
}

// two-element hoop: product is meet
inline pbck::hoop_algebra h2() { return {a2(), {0, 0, 0, 1}}; }

// three-element chain with idempotent product (x.y = min)
inline pbck::hoop_algebra hg3() {
    return {{3, {2, 2, 2, 0, 2, 2, 0, 1, 2}, {2, 2, 2, 0, 2, 2, 0, 1, 2}, 2, {"0", "a", "1"}},
            {0, 0, 0, 0, 1, 1, 0, 1, 2}};
}

// three-element chain with truncated-sum product; satisfies W1/W2
inline pbck::hoop_algebra hl3() {
    return {{3, {2, 2, 2, 1, 2, 2, 0, 1, 2}, {2, 2, 2, 1, 2, 2, 0, 1, 2}, 2, {"0", "a", "1"}},
            {0, 0, 0, 0, 0, 1, 0, 1, 2}};
}

// the ten unary maps studied on a6, in their published numbering
inline std::vector<pbck::unary_map> a6_maps() {
    return {{{0, 0, 0, 5, 5, 5}}, {{0, 1, 1, 5, 5, 5}}, {{0, 1, 2, 3, 4, 5}},
            {{0, 2, 2, 5, 5, 5}}, {{0, 4, 3, 3, 4, 5}}, {{0, 5, 5, 5, 5, 5}},
            {{1, 1, 1, 5, 5, 5}}, {{2, 2, 2, 5, 5, 5}}, {{4, 4, 3, 3, 4, 5}},
            {{5, 5, 5, 5, 5, 5}}};
}

// the four state operators on a4c
inline std::vector<pbck::unary_map> a4c_maps() {
    return {{{0, 0, 2, 3}}, {{0, 1, 2, 3}}, {{1, 1, 2, 3}}, {{3, 3, 3, 3}}};
}

// the map published alongside a4l: 0,a -> a; b,1 -> 1
inline pbck::unary_map a4l_mu() { return {{1, 1, 3, 3}}; }

} // namespace fx
