#pragma once

#include "pbck/algebra.hpp"
#include "pbck/deduction.hpp"
#include "pbck/report.hpp"

namespace pbck {

struct morphism_report {
    bool is_endomorphism = false; // preserves ->, ~> and top
    bool is_idempotent = false;   // mu(mu(x)) = mu(x)
    bool is_sm = false;           // both of the above
    subset kernel;                // {x : mu(x) = top}
    check_report detail;
};

morphism_report is_state_morphism(const finite_algebra& a, const unary_map& mu,
                                  witness_mode wm = witness_mode::first);

// verifies that all four displayed sets {mu(x)->x}, {x->mu(x)}, {mu(x)~>x},
// {x~>mu(x)} equal Ker(mu), and that Ker(mu)={top} forces mu = Id.
// pre: mu is a state-morphism.
check_report kernel_characterizations(const finite_algebra& a, const unary_map& mu);

// mu(D) subseteq D. pre: mu a state-morphism, D a deductive system.
bool mu_state_ds(const finite_algebra& a, const unary_map& mu, subset d);

// mu^-1(D), with the companion theorem clauses re-verified as post-checks.
// pre: mu a state-morphism, D a deductive system.
subset preimage_ds(const finite_algebra& a, const unary_map& mu, subset d);

struct quotient_sm_result {
    quotient_result quot; // quotient by Ker(mu)
    unary_map mu_bar;     // [x] |-> [mu(x)], a state-morphism on the quotient
};

// pre: mu a state-morphism; post-checks the lift and pi o mu = pi.
quotient_sm_result quotient_sm(const finite_algebra& a, const unary_map& mu);

// clause (1): every normal type2 state is a state-morphism;
// clause (2), present only when a is commutative: every type1 or type2 state
// is a state-morphism. pre: the derived order of a is linear.
check_report check_linear_theorems(const finite_algebra& a);

} // namespace pbck
