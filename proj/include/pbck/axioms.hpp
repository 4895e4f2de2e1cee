#pragma once

#include <optional>
#include <span>

#include "pbck/algebra.hpp"
#include "pbck/report.hpp"

namespace pbck {

enum class axiom_system {
    relational, // psBCK1..psBCK6 over the derived order
    equational, // psBCK1'..psBCK6'
    pseudo_bci, // equational set minus psBCK5'
    pseudo_be,  // psBE1..psBE5
};

check_report check_axiom_system(const finite_algebra& a, axiom_system sys,
                                witness_mode wm = witness_mode::first);

// Fast verdict-only path for the equational system (no report machinery).
[[nodiscard]] bool is_pbck(const finite_algebra& a);

// Re-evaluates a single named clause of one of the algebra-level suites
// ("relational", "equational", "pseudo-bci", "pseudo-be", the commutativity
// methods, "basic-laws") at a witness tuple. Used to validate that reported
// witnesses really violate their clause.
[[nodiscard]] bool clause_holds(const finite_algebra& a, std::string_view suite,
                                std::string_view clause, std::span<const element> tuple);

// Lemma-level consequences L1..L6 of the equational axioms.
// pre: a passes the equational system.
check_report check_basic_laws(const finite_algebra& a, witness_mode wm = witness_mode::first);

struct boundedness {
    std::optional<element> least;                 // 0 when bounded
    std::optional<bool> good;                     // only when bounded
    std::optional<bool> pointed_involutive;       // only when point_at given
};

// pre: a passes the equational system; point_at, when given, is a carrier index.
boundedness boundedness_profile(const finite_algebra& a, std::optional<element> point_at = {});

struct structure_kind_flags {
    bool linear = false;
    bool meet_semilattice = false;
    bool join_semilattice = false;
    bool lattice = false;
};

// pre: a passes the equational system.
structure_kind_flags structure_kind(const finite_algebra& a);

// Componentwise product with row-major carrier encoding (x1,x2) -> x1*n2+x2.
// No axiom precondition; used by tests to probe verdict preservation.
finite_algebra direct_product_raw(const finite_algebra& a1, const finite_algebra& a2);

// pre: both factors pass the equational system; product size <= carrier_cap.
finite_algebra direct_product(const finite_algebra& a1, const finite_algebra& a2);

} // namespace pbck
