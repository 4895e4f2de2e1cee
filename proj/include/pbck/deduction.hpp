#pragma once

#include <boost/rational.hpp>
#include <vector>

#include "pbck/algebra.hpp"
#include "pbck/report.hpp"

namespace pbck {

// Verdicts for one subset. is_normal / is_commutative can only be true when
// is_ds is; their clauses are evaluated (and reported) only for deductive
// systems. detail carries clauses (i), (ii), (ii'), then (iii), cds1, cds2.
struct ds_classification {
    bool is_ds = false;
    bool is_normal = false;
    bool is_commutative = false;
    check_report detail;
};

// pre: a is a pseudo BCK-algebra.
ds_classification classify_subset(const finite_algebra& a, subset s,
                                  witness_mode wm = witness_mode::first);

// Three-condition characterization of "commutative deductive system".
// Must agree with classify_subset's (is_ds && is_commutative) on every subset.
bool classify_subset_alt_commutative(const finite_algebra& a, subset s);

enum class ds_filter { all, normal, commutative };

// All deductive systems matching the filter, in ascending bitmask order.
// pre: a is a pseudo BCK-algebra.
std::vector<subset> enumerate_ds(const finite_algebra& a, ds_filter filter = ds_filter::all);

// Least deductive system containing seed.
subset generated_ds(const finite_algebra& a, subset seed);

// pre: a is a pseudo BCK-algebra with exactly the systems {1} and A.
bool is_simple(const finite_algebra& a);

struct quotient_result {
    finite_algebra algebra;          // the quotient A/H
    std::vector<element> projection; // carrier index -> block index
    std::vector<subset> blocks;      // indexed like the quotient carrier, sorted by least member
};

// Quotient by a normal deductive system h via the congruence
// x ~ y iff x->y in h and y->x in h. Blocks are sorted by least member and
// named by their least member's name. Well-definedness of the induced tables
// and Ker(projection) = h are re-verified, not trusted.
quotient_result quotient(const finite_algebra& a, subset h);

using rational = boost::rational<long long>;

// Total assignment of nonnegative values, one per carrier element.
struct measure {
    std::vector<rational> values;

    [[nodiscard]] const rational& operator()(element x) const { return values[x]; }
};

// m is a measure iff m(x->y) = m(x~>y) = m(y) - m(x) whenever y <= x.
// On failure the offending pair (x, y) with y <= x is written to *violation.
bool is_measure(const finite_algebra& a, const measure& m,
                std::vector<element>* violation = nullptr);

// Ker0(m) = {x : m(x) = 0}. pre: m is a measure (NOT_A_MEASURE otherwise).
// Post-checks that the kernel is a normal and commutative deductive system
// and that the quotient by it is commutative; a violation would contradict
// the theory, so it raises POSTCONDITION_FAILED loudly.
subset measure_kernel(const finite_algebra& a, const measure& m);

enum class arrow_side { arrow, squiggle };

// Iterated arrow x ->^k y (or x ~>^k y): k = 0 gives y, else x -> (x ->^{k-1} y).
element iter_arrow(const finite_algebra& a, element x, element y, long long k, arrow_side side);

} // namespace pbck
