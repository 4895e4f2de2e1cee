#include "pbck/hoops.hpp"

#include "pbck/axioms.hpp"

#include "clause_runner.hpp"

namespace pbck {

namespace {

using HC = detail::clause<hoop_algebra>;

element ar(const hoop_algebra& h, element x, element y) { return h.base.arrow(x, y); }
element sq(const hoop_algebra& h, element x, element y) { return h.base.squiggle(x, y); }
bool le(const hoop_algebra& h, element x, element y) { return h.base.leq(x, y); }

std::string tup(const hoop_algebra& h, const element* t, int arity) {
    std::string s = arity == 1 ? " at x=" : (arity == 2 ? " at (x,y)=(" : " at (x,y,z)=(");
    for (int i = 0; i < arity; ++i) {
        if (i) s += ',';
        s += h.base.name_of(t[i]);
    }
    if (arity > 1) s += ')';
    return s;
}

std::string mismatch(const hoop_algebra& h, const char* schema, element lhs, element rhs,
                     const element* t, int arity) {
    return std::string(schema) + ": lhs = " + h.base.name_of(lhs) + ", rhs = " +
           h.base.name_of(rhs) + tup(h, t, arity);
}

const HC hoop_clauses[] = {
    {"psH1", 1,
     [](const hoop_algebra& h, const element* t) {
         const element one = h.base.top();
         return h.times(t[0], one) == t[0] && h.times(one, t[0]) == t[0];
     },
     [](const hoop_algebra& h, const element* t) {
         const element one = h.base.top();
         if (h.times(t[0], one) != t[0])
             return mismatch(h, "x.1 = x", h.times(t[0], one), t[0], t, 1);
         return mismatch(h, "1.x = x", h.times(one, t[0]), t[0], t, 1);
     }},
    {"psH2", 1,
     [](const hoop_algebra& h, const element* t) {
         const element one = h.base.top();
         return ar(h, t[0], t[0]) == one && sq(h, t[0], t[0]) == one;
     },
     [](const hoop_algebra& h, const element* t) {
         if (ar(h, t[0], t[0]) != h.base.top())
             return mismatch(h, "x->x = 1", ar(h, t[0], t[0]), h.base.top(), t, 1);
         return mismatch(h, "x~>x = 1", sq(h, t[0], t[0]), h.base.top(), t, 1);
     }},
    {"psH3", 3,
     [](const hoop_algebra& h, const element* t) {
         return ar(h, h.times(t[0], t[1]), t[2]) == ar(h, t[0], ar(h, t[1], t[2]));
     },
     [](const hoop_algebra& h, const element* t) {
         return mismatch(h, "(x.y)->z = x->(y->z)", ar(h, h.times(t[0], t[1]), t[2]),
                         ar(h, t[0], ar(h, t[1], t[2])), t, 3);
     }},
    {"psH4", 3,
     [](const hoop_algebra& h, const element* t) {
         return sq(h, h.times(t[0], t[1]), t[2]) == sq(h, t[1], sq(h, t[0], t[2]));
     },
     [](const hoop_algebra& h, const element* t) {
         return mismatch(h, "(x.y)~>z = y~>(x~>z)", sq(h, h.times(t[0], t[1]), t[2]),
                         sq(h, t[1], sq(h, t[0], t[2])), t, 3);
     }},
    {"psH5", 2,
     [](const hoop_algebra& h, const element* t) {
         const element v = h.times(ar(h, t[0], t[1]), t[0]);
         return h.times(ar(h, t[1], t[0]), t[1]) == v &&
                h.times(t[0], sq(h, t[0], t[1])) == v && h.times(t[1], sq(h, t[1], t[0])) == v;
     },
     [](const hoop_algebra& h, const element* t) {
         const element v = h.times(ar(h, t[0], t[1]), t[0]);
         if (h.times(ar(h, t[1], t[0]), t[1]) != v)
             return mismatch(h, "(x->y).x = (y->x).y", v, h.times(ar(h, t[1], t[0]), t[1]), t, 2);
         if (h.times(t[0], sq(h, t[0], t[1])) != v)
             return mismatch(h, "(x->y).x = x.(x~>y)", v, h.times(t[0], sq(h, t[0], t[1])), t, 2);
         return mismatch(h, "(x->y).x = y.(y~>x)", v, h.times(t[1], sq(h, t[1], t[0])), t, 2);
     }},
};

const HC wajsberg_clauses[] = {
    {"W1", 2,
     [](const hoop_algebra& h, const element* t) {
         return sq(h, ar(h, t[0], t[1]), t[1]) == sq(h, ar(h, t[1], t[0]), t[0]);
     },
     [](const hoop_algebra& h, const element* t) {
         return mismatch(h, "(x->y)~>y = (y->x)~>x", sq(h, ar(h, t[0], t[1]), t[1]),
                         sq(h, ar(h, t[1], t[0]), t[0]), t, 2);
     }},
    {"W2", 2,
     [](const hoop_algebra& h, const element* t) {
         return ar(h, sq(h, t[0], t[1]), t[1]) == ar(h, sq(h, t[1], t[0]), t[0]);
     },
     [](const hoop_algebra& h, const element* t) {
         return mismatch(h, "(x~>y)->y = (y~>x)->x", ar(h, sq(h, t[0], t[1]), t[1]),
                         ar(h, sq(h, t[1], t[0]), t[0]), t, 2);
     }},
};

const HC basic_clauses[] = {
    {"B1", 3,
     [](const hoop_algebra& h, const element* t) {
         return le(h, ar(h, ar(h, t[0], t[1]), t[2]),
                   ar(h, ar(h, ar(h, t[1], t[0]), t[2]), t[2]));
     },
     [](const hoop_algebra& h, const element* t) {
         return mismatch(h, "(x->y)->z <= ((y->x)->z)->z", ar(h, ar(h, t[0], t[1]), t[2]),
                         ar(h, ar(h, ar(h, t[1], t[0]), t[2]), t[2]), t, 3);
     }},
    {"B2", 3,
     [](const hoop_algebra& h, const element* t) {
         return le(h, sq(h, sq(h, t[0], t[1]), t[2]),
                   sq(h, sq(h, sq(h, t[1], t[0]), t[2]), t[2]));
     },
     [](const hoop_algebra& h, const element* t) {
         return mismatch(h, "(x~>y)~>z <= ((y~>x)~>z)~>z", sq(h, sq(h, t[0], t[1]), t[2]),
                         sq(h, sq(h, sq(h, t[1], t[0]), t[2]), t[2]), t, 3);
     }},
};

} // namespace

hoop_algebra::hoop_algebra(finite_algebra b, std::vector<element> p)
    : base(std::move(b)), prod(std::move(p)) {
    const int n = base.size();
    if (static_cast<int>(prod.size()) != n * n)
        throw error(errc::invalid_structure, "prod table must have n*n entries");
    for (element v : prod)
        if (v < 0 || v >= n)
            throw error(errc::invalid_structure, "prod table entry out of range");
}

check_report check_hoop(const hoop_algebra& h, hoop_level level, witness_mode wm) {
    const int n = h.base.size();
    const char* suite = level == hoop_level::hoop      ? "HOOP"
                        : level == hoop_level::wajsberg ? "WAJSBERG"
                                                        : "BASIC";
    auto report =
        detail::run_clauses<hoop_algebra>(suite, n, h, std::span<const HC>(hoop_clauses), wm);
    if (level == hoop_level::wajsberg)
        for (auto& cl : detail::run_clauses<hoop_algebra>(suite, n, h,
                                                          std::span<const HC>(wajsberg_clauses), wm)
                            .clauses)
            report.clauses.push_back(std::move(cl));
    if (level == hoop_level::basic)
        for (auto& cl :
             detail::run_clauses<hoop_algebra>(suite, n, h, std::span<const HC>(basic_clauses), wm)
                 .clauses)
            report.clauses.push_back(std::move(cl));
    return report;
}

finite_algebra to_pbck(const hoop_algebra& h) {
    const auto report = check_hoop(h, hoop_level::hoop);
    if (!report.pass()) {
        std::string why;
        for (const auto& cl : report.clauses)
            if (!cl.pass) {
                why = cl.name + ": " + cl.detail;
                break;
            }
        throw error(errc::not_a_hoop, "not a pseudo-hoop (" + why + ")");
    }
    if (!is_pbck(h.base))
        throw error(errc::postcondition_failed, "hoop reduct fails the equational axioms");
    if (!structure_kind(h.base).meet_semilattice)
        throw error(errc::postcondition_failed, "hoop reduct is not a meet-semilattice");
    const order_relation ord = derive_order(h.base);
    for (element x = 0; x < h.base.size(); ++x)
        for (element y = 0; y < h.base.size(); ++y)
            if (glb(h.base, ord, x, y) != h.times(h.base.arrow(x, y), x))
                throw error(errc::postcondition_failed,
                            "x^y != (x->y).x at (" + h.base.name_of(x) + "," +
                                h.base.name_of(y) + ")");
    return h.base;
}

} // namespace pbck
