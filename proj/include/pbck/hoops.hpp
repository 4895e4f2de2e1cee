#pragma once

#include "pbck/algebra.hpp"
#include "pbck/report.hpp"

#include <vector>

namespace pbck {

// Candidate pseudo-hoop: the arrow reduct plus a product table. Being a
// pseudo-hoop is NOT a type invariant; check_hoop decides it.
struct hoop_algebra {
    finite_algebra base;
    std::vector<element> prod; // n*n row-major table for (.)

    hoop_algebra(finite_algebra b, std::vector<element> p);

    [[nodiscard]] element times(element x, element y) const {
        return prod[x * base.size() + y];
    }
};

enum class hoop_level {
    hoop,     // psH1..psH5
    wajsberg, // psH1..psH5 + W1, W2
    basic,    // psH1..psH5 + B1, B2
};

check_report check_hoop(const hoop_algebra& h, hoop_level level,
                        witness_mode wm = witness_mode::first);

// The arrow reduct. pre: h passes check_hoop(hoop); post-asserts the reduct
// passes the equational system and is a meet-semilattice with x^y = (x->y).x.
finite_algebra to_pbck(const hoop_algebra& h);

} // namespace pbck
