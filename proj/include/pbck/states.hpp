#pragma once

#include "pbck/algebra.hpp"
#include "pbck/deduction.hpp"
#include "pbck/report.hpp"

#include <optional>
#include <vector>

namespace pbck {

enum class state_kind { type1, type2 };

// IS1 + IS2 + IS3 for type1, IS1 + IS2' + IS3 for type2
check_report check_state(const finite_algebra& a, const unary_map& mu, state_kind kind,
                         witness_mode wm = witness_mode::first);

struct state_classification {
    bool is_type1 = false;
    bool is_type2 = false;
    bool is_normal1 = false; // type1 with normal kernel
    bool is_normal2 = false; // type2 with normal kernel
    std::optional<bool> satisfies_is4; // only meaningful on meet-semilattices
    subset kernel;    // {x : mu(x) = top}
    subset image_set; // {mu(x) : x}
    check_report detail; // clauses IS1, IS2, IS2', IS3 (+ IS4 when applicable)
};

state_classification classify_map(const finite_algebra& a, const unary_map& mu,
                                  witness_mode wm = witness_mode::first);

enum class map_kind { type1, type2, morphism };

inline constexpr long long default_state_budget = 100'000'000;

// all maps of the requested kind, in lexicographic image order
std::vector<unary_map> enumerate_states(const finite_algebra& a, map_kind kind,
                                        long long node_budget = default_state_budget);

struct lifted_state {
    quotient_result quot; // quotient by Ker(mu)
    unary_map mu_bar;     // [x] |-> [mu(x)]
};

// requires mu to be a normal type2 state; the lift is re-verified well-defined and
// must pass both normal state checks on the quotient
lifted_state lift_to_quotient(const finite_algebra& a, const unary_map& mu);

} // namespace pbck
