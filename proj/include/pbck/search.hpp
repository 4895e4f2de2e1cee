#pragma once

#include "pbck/algebra.hpp"

#include <vector>

namespace pbck {

struct search_config {
    int size = 2; // carrier size, 1..5; top is pinned at size-1
    bool commutative_only = false;
    bool up_to_iso = false; // one representative per isomorphism class
    long long node_budget = 50'000'000;
};

// Pruned backtracking enumeration of every pseudo BCK-algebra table pair on
// {0..size-1}. Deterministic: results sorted by (arrow, squiggle) tables.
std::vector<finite_algebra> enumerate_models(const search_config& cfg);

// Same result, with the search tree split across OpenMP workers at the first
// two free cells. Falls back to the serial task loop when OpenMP is absent.
std::vector<finite_algebra> enumerate_models_parallel(const search_config& cfg);

// Filter-only reference path: enumerates raw table pairs (only the cells fixed
// by psBCK3'/4'/5' are pre-filled) and keeps the ones passing the full
// equational check. Exponential; limited to size <= 3.
std::vector<finite_algebra> enumerate_models_naive(const search_config& cfg);

} // namespace pbck
