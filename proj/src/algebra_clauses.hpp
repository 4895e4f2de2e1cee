#pragma once

#include <span>
#include <string_view>

#include "clause_runner.hpp"

namespace pbck::detail {

// Clause lists for the algebra-level suites: axiom systems, basic laws and
// the commutativity methods. Suites are keyed by their report tag
// ("EQUATIONAL", "DEF", ...). Empty span for unknown tags.
std::span<const clause<finite_algebra>> suite_clauses(std::string_view suite);

} // namespace pbck::detail
