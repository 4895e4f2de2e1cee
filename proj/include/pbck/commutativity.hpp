#pragma once

#include "pbck/algebra.hpp"
#include "pbck/deduction.hpp"
#include "pbck/report.hpp"

namespace pbck {

// The nine ways to decide commutativity. DEF, ONE_SIDED and the three
// characterizations presuppose a pseudo BCK-algebra; YUTANI_KUHR, KUHR_K,
// PALASINSKI_P and CORNISH_C are standalone axiom systems applicable to any
// table pair.
enum class commutativity_method {
    def,
    one_sided,
    yutani_kuhr,
    kuhr_k,
    palasinski_p,
    cornish_c,
    char_b,
    char_c,
    char_d,
};

[[nodiscard]] const char* method_name(commutativity_method m);

// true for the methods that presuppose the equational axioms.
[[nodiscard]] bool method_needs_pbck(commutativity_method m);

check_report check_commutative(const finite_algebra& a, commutativity_method m,
                               witness_mode wm = witness_mode::first);

// Convenience verdict: pseudo BCK-algebra satisfying the defining identities.
[[nodiscard]] bool is_commutative(const finite_algebra& a);

// x v y = (x->y)~>y. pre: a commutative pseudo BCK-algebra.
element join(const finite_algebra& a, element x, element y);

// True iff for every pair (x, y): (forall m in measures: m(x) >= m(y))
// implies x <= y. Every entry must be a measure (NOT_A_MEASURE otherwise).
bool check_order_determining(const finite_algebra& a, const std::vector<measure>& measures);

} // namespace pbck
