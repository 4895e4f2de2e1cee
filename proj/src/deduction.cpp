#include "pbck/deduction.hpp"

#include "pbck/axioms.hpp"
#include "pbck/commutativity.hpp"

#include "clause_runner.hpp"

namespace pbck {

namespace {

struct subset_ctx {
    const finite_algebra& a;
    subset s;
};

using SC = detail::clause<subset_ctx>;

std::string pair_at(const subset_ctx& c, const element* t) {
    return " at (x,y)=(" + c.a.name_of(t[0]) + "," + c.a.name_of(t[1]) + ")";
}

const SC ds_clauses[] = {
    {"(i)", 0, [](const subset_ctx& c, const element*) { return c.s.contains(c.a.top()); },
     [](const subset_ctx& c, const element*) {
         return c.a.name_of(c.a.top()) + " is not a member";
     }},
    {"(ii)", 2,
     [](const subset_ctx& c, const element* t) {
         return !(c.s.contains(t[0]) && c.s.contains(c.a.arrow(t[0], t[1]))) ||
                c.s.contains(t[1]);
     },
     [](const subset_ctx& c, const element* t) {
         return "x and x->y are members but y is not" + pair_at(c, t);
     }},
    {"(ii')", 2,
     [](const subset_ctx& c, const element* t) {
         return !(c.s.contains(t[0]) && c.s.contains(c.a.squiggle(t[0], t[1]))) ||
                c.s.contains(t[1]);
     },
     [](const subset_ctx& c, const element* t) {
         return "x and x~>y are members but y is not" + pair_at(c, t);
     }},
};

const SC normal_clauses[] = {
    {"(iii)", 2,
     [](const subset_ctx& c, const element* t) {
         return c.s.contains(c.a.arrow(t[0], t[1])) == c.s.contains(c.a.squiggle(t[0], t[1]));
     },
     [](const subset_ctx& c, const element* t) {
         return "x->y and x~>y disagree on membership" + pair_at(c, t);
     }},
};

const SC commutative_clauses[] = {
    {"cds1", 2,
     [](const subset_ctx& c, const element* t) {
         const auto& a = c.a;
         return !c.s.contains(a.arrow(t[1], t[0])) ||
                c.s.contains(a.arrow(a.squiggle(a.arrow(t[0], t[1]), t[1]), t[0]));
     },
     [](const subset_ctx& c, const element* t) {
         return "y->x is a member but ((x->y)~>y)->x is not" + pair_at(c, t);
     }},
    {"cds2", 2,
     [](const subset_ctx& c, const element* t) {
         const auto& a = c.a;
         return !c.s.contains(a.squiggle(t[1], t[0])) ||
                c.s.contains(a.squiggle(a.arrow(a.squiggle(t[0], t[1]), t[1]), t[0]));
     },
     [](const subset_ctx& c, const element* t) {
         return "y~>x is a member but ((x~>y)->y)~>x is not" + pair_at(c, t);
     }},
};

void require_pbck(const finite_algebra& a, const char* op) {
    if (!is_pbck(a))
        throw error(errc::precondition_violated,
                    std::string(op) + " requires a pseudo BCK-algebra");
}

void require_subset(const finite_algebra& a, subset s) {
    if (!s.subset_of(a.carrier()))
        throw error(errc::invalid_point, "subset has bits outside the carrier");
}

// Fast DS predicate used by the enumerator.
bool ds_fast(const finite_algebra& a, subset s) {
    if (!s.contains(a.top())) return false;
    const int n = a.size();
    for (element x = 0; x < n; ++x) {
        if (!s.contains(x)) continue;
        for (element y = 0; y < n; ++y) {
            if (s.contains(y)) continue;
            if (s.contains(a.arrow(x, y)) || s.contains(a.squiggle(x, y))) return false;
        }
    }
    return true;
}

bool normal_fast(const finite_algebra& a, subset s) {
    const int n = a.size();
    for (element x = 0; x < n; ++x)
        for (element y = 0; y < n; ++y)
            if (s.contains(a.arrow(x, y)) != s.contains(a.squiggle(x, y))) return false;
    return true;
}

bool commutative_fast(const finite_algebra& a, subset s) {
    const int n = a.size();
    for (element x = 0; x < n; ++x)
        for (element y = 0; y < n; ++y) {
            if (s.contains(a.arrow(y, x)) &&
                !s.contains(a.arrow(a.squiggle(a.arrow(x, y), y), x)))
                return false;
            if (s.contains(a.squiggle(y, x)) &&
                !s.contains(a.squiggle(a.arrow(a.squiggle(x, y), y), x)))
                return false;
        }
    return true;
}

} // namespace

ds_classification classify_subset(const finite_algebra& a, subset s, witness_mode wm) {
    require_pbck(a, "classify_subset");
    require_subset(a, s);
    const subset_ctx ctx{a, s};
    ds_classification out;
    out.detail = detail::run_clauses<subset_ctx>("DS", a.size(), ctx,
                                                 std::span<const SC>(ds_clauses), wm);
    out.is_ds = out.detail.pass();
    if (out.is_ds) {
        auto more = detail::run_clauses<subset_ctx>("DS", a.size(), ctx,
                                                    std::span<const SC>(normal_clauses), wm);
        out.is_normal = more.pass();
        for (auto& cl : more.clauses) out.detail.clauses.push_back(std::move(cl));
        auto comm = detail::run_clauses<subset_ctx>("DS", a.size(), ctx,
                                                    std::span<const SC>(commutative_clauses), wm);
        out.is_commutative = comm.pass();
        for (auto& cl : comm.clauses) out.detail.clauses.push_back(std::move(cl));
    }
    return out;
}

bool classify_subset_alt_commutative(const finite_algebra& a, subset s) {
    require_pbck(a, "classify_subset_alt_commutative");
    require_subset(a, s);
    if (!s.contains(a.top())) return false;
    const int n = a.size();
    for (element x = 0; x < n; ++x)
        for (element y = 0; y < n; ++y) {
            const element u1 = a.arrow(a.squiggle(a.arrow(x, y), y), x);
            const element u2 = a.squiggle(a.arrow(a.squiggle(x, y), y), x);
            for (element z = 0; z < n; ++z) {
                if (!s.contains(z)) continue;
                if (s.contains(a.arrow(z, a.arrow(y, x))) && !s.contains(u1)) return false;
                if (s.contains(a.squiggle(z, a.squiggle(y, x))) && !s.contains(u2)) return false;
            }
        }
    return true;
}

std::vector<subset> enumerate_ds(const finite_algebra& a, ds_filter filter) {
    require_pbck(a, "enumerate_ds");
    const int n = a.size();
    const element t = a.top();
    const std::uint64_t below = (std::uint64_t{1} << t) - 1;
    const std::uint64_t count = n == 1 ? 1 : std::uint64_t{1} << (n - 1);
    std::vector<subset> out;
    for (std::uint64_t rest = 0; rest < count; ++rest) {
        // spread the free bits around the forced top bit; ascending rest keeps
        // the resulting masks ascending
        const subset s{(rest & below) | ((rest & ~below) << 1) | (std::uint64_t{1} << t)};
        if (ds_fast(a, s) &&
            (filter == ds_filter::all || (filter == ds_filter::normal && normal_fast(a, s)) ||
             (filter == ds_filter::commutative && commutative_fast(a, s))))
            out.push_back(s);
    }
    return out;
}

subset generated_ds(const finite_algebra& a, subset seed) {
    require_pbck(a, "generated_ds");
    require_subset(a, seed);
    subset s = seed.with(a.top());
    bool grew = true;
    while (grew) {
        grew = false;
        for (element x = 0; x < a.size(); ++x) {
            if (!s.contains(x)) continue;
            for (element y = 0; y < a.size(); ++y) {
                if (s.contains(y)) continue;
                if (s.contains(a.arrow(x, y)) || s.contains(a.squiggle(x, y))) {
                    s = s.with(y);
                    grew = true;
                }
            }
        }
    }
    return s;
}

bool is_simple(const finite_algebra& a) {
    return enumerate_ds(a, ds_filter::all).size() == 2;
}

quotient_result quotient(const finite_algebra& a, subset h) {
    require_pbck(a, "quotient");
    require_subset(a, h);
    {
        const auto cls = classify_subset(a, h);
        if (!cls.is_ds)
            throw error(errc::not_ds, subset_to_string(a, h) + " is not a deductive system: " +
                                          cls.detail.clauses[0].detail);
        if (!cls.is_normal) {
            const auto* c = cls.detail.find("(iii)");
            throw error(errc::not_normal, subset_to_string(a, h) + " is not normal: " +
                                              (c ? c->detail : std::string("(iii) fails")));
        }
    }
    const int n = a.size();
    const auto related = [&](element x, element y) {
        return h.contains(a.arrow(x, y)) && h.contains(a.arrow(y, x));
    };
    for (element x = 0; x < n; ++x)
        for (element y = 0; y < n; ++y)
            for (element z = 0; z < n; ++z)
                if (related(x, y) && related(y, z) && !related(x, z))
                    throw error(errc::well_definedness_failure,
                                "congruence candidate is not transitive at (" + a.name_of(x) +
                                    "," + a.name_of(y) + "," + a.name_of(z) + ")");

    std::vector<subset> blocks;
    std::vector<element> block_of(n, -1);
    for (element x = 0; x < n; ++x) {
        if (block_of[x] != -1) continue;
        const element b = static_cast<element>(blocks.size());
        subset blk;
        for (element y = 0; y < n; ++y)
            if (related(x, y)) {
                blk = blk.with(y);
                block_of[y] = b;
            }
        blocks.push_back(blk);
    }
    const int m = static_cast<int>(blocks.size());
    const element qtop = block_of[a.top()];
    if (blocks[qtop] != h)
        throw error(errc::postcondition_failed, "Ker(projection) differs from the given system");

    std::vector<element> qarrow(m * m), qsquiggle(m * m);
    for (element bx = 0; bx < m; ++bx)
        for (element by = 0; by < m; ++by) {
            element va = -1, vs = -1;
            for (element x = 0; x < n; ++x) {
                if (block_of[x] != bx) continue;
                for (element y = 0; y < n; ++y) {
                    if (block_of[y] != by) continue;
                    const element ra = block_of[a.arrow(x, y)];
                    const element rs = block_of[a.squiggle(x, y)];
                    if (va == -1) {
                        va = ra;
                        vs = rs;
                    } else if (va != ra || vs != rs) {
                        throw error(errc::well_definedness_failure,
                                    "quotient operation depends on representatives at blocks (" +
                                        std::to_string(bx) + "," + std::to_string(by) + ")");
                    }
                }
            }
            qarrow[bx * m + by] = va;
            qsquiggle[bx * m + by] = vs;
        }

    std::vector<std::string> names;
    if (a.named()) {
        names.reserve(m);
        for (const auto& blk : blocks)
            names.push_back("[" + a.name_of(blk.members(n).front()) + "]");
    }
    quotient_result out{finite_algebra(m, std::move(qarrow), std::move(qsquiggle), qtop,
                                       std::move(names)),
                        std::move(block_of), std::move(blocks)};
    if (!is_pbck(out.algebra))
        throw error(errc::postcondition_failed, "quotient fails the equational axioms");
    return out;
}

static void validate_measure(const finite_algebra& a, const measure& m) {
    if (static_cast<int>(m.values.size()) != a.size())
        throw error(errc::invalid_structure, "measure must assign a value to every element");
    for (const auto& v : m.values)
        if (v < 0) throw error(errc::invalid_structure, "measure values must be nonnegative");
}

bool is_measure(const finite_algebra& a, const measure& m, std::vector<element>* violation) {
    require_pbck(a, "is_measure");
    validate_measure(a, m);
    for (element x = 0; x < a.size(); ++x)
        for (element y = 0; y < a.size(); ++y) {
            if (!a.leq(y, x)) continue;
            const rational want = m(y) - m(x);
            if (m(a.arrow(x, y)) != want || m(a.squiggle(x, y)) != want) {
                if (violation) *violation = {x, y};
                return false;
            }
        }
    return true;
}

subset measure_kernel(const finite_algebra& a, const measure& m) {
    std::vector<element> violation;
    if (!is_measure(a, m, &violation))
        throw error(errc::not_a_measure, "kernel of a non-measure (witness pair (" +
                                             a.name_of(violation[0]) + "," +
                                             a.name_of(violation[1]) + "))");
    subset k;
    // compare via numerator(): boost::rational's mixed-mode == self-recurses
    // under C++20 comparison rewriting (no (rational, int) overload exists,
    // so the reversed (int, rational) candidate keeps re-selecting itself)
    for (element x = 0; x < a.size(); ++x)
        if (m(x).numerator() == 0) k = k.with(x);
    const auto cls = classify_subset(a, k);
    if (!cls.is_ds || !cls.is_normal || !cls.is_commutative)
        throw error(errc::postcondition_failed,
                    "measure kernel " + subset_to_string(a, k) +
                        " is not a normal commutative deductive system");
    if (!is_commutative(quotient(a, k).algebra))
        throw error(errc::postcondition_failed,
                    "quotient by measure kernel is not commutative");
    return k;
}

element iter_arrow(const finite_algebra& a, element x, element y, long long k, arrow_side side) {
    if (x < 0 || x >= a.size() || y < 0 || y >= a.size())
        throw error(errc::invalid_point, "iter_arrow argument out of range");
    if (k < 0) throw error(errc::invalid_structure, "iteration count must be nonnegative");
    element v = y;
    for (long long i = 0; i < k; ++i) {
        const element next = side == arrow_side::arrow ? a.arrow(x, v) : a.squiggle(x, v);
        if (next == v) return v; // fixpoint, all further iterates agree
        v = next;
    }
    return v;
}

} // namespace pbck
