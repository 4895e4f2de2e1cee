#include "pbck/morphisms.hpp"

#include "pbck/axioms.hpp"
#include "pbck/commutativity.hpp"
#include "pbck/states.hpp"

#include "clause_runner.hpp"

#include <algorithm>

namespace pbck {

namespace {

struct map_ctx {
    const finite_algebra& a;
    const unary_map& mu;
};

using MC = detail::clause<map_ctx>;

std::string at_pair(const map_ctx& c, const element* t) {
    return " at (x,y)=(" + c.a.name_of(t[0]) + "," + c.a.name_of(t[1]) + ")";
}

const MC endo_clauses[] = {
    {"hom->", 2,
     [](const map_ctx& c, const element* t) {
         return c.mu(c.a.arrow(t[0], t[1])) == c.a.arrow(c.mu(t[0]), c.mu(t[1]));
     },
     [](const map_ctx& c, const element* t) {
         return "mu(x->y) = " + c.a.name_of(c.mu(c.a.arrow(t[0], t[1]))) +
                " but mu(x)->mu(y) = " + c.a.name_of(c.a.arrow(c.mu(t[0]), c.mu(t[1]))) +
                at_pair(c, t);
     }},
    {"hom~>", 2,
     [](const map_ctx& c, const element* t) {
         return c.mu(c.a.squiggle(t[0], t[1])) == c.a.squiggle(c.mu(t[0]), c.mu(t[1]));
     },
     [](const map_ctx& c, const element* t) {
         return "mu(x~>y) = " + c.a.name_of(c.mu(c.a.squiggle(t[0], t[1]))) +
                " but mu(x)~>mu(y) = " + c.a.name_of(c.a.squiggle(c.mu(t[0]), c.mu(t[1]))) +
                at_pair(c, t);
     }},
    {"hom1", 0,
     [](const map_ctx& c, const element*) { return c.mu(c.a.top()) == c.a.top(); },
     [](const map_ctx& c, const element*) {
         return "mu(1) = " + c.a.name_of(c.mu(c.a.top())) + ", expected " +
                c.a.name_of(c.a.top());
     }},
};

const MC idem_clauses[] = {
    {"mu^2=mu", 1,
     [](const map_ctx& c, const element* t) { return c.mu(c.mu(t[0])) == c.mu(t[0]); },
     [](const map_ctx& c, const element* t) {
         return "mu(mu(x)) = " + c.a.name_of(c.mu(c.mu(t[0]))) + " but mu(x) = " +
                c.a.name_of(c.mu(t[0])) + " at x=" + c.a.name_of(t[0]);
     }},
};

void require_pbck(const finite_algebra& a, const char* op) {
    if (!is_pbck(a))
        throw error(errc::precondition_violated,
                    std::string(op) + " requires a pseudo BCK-algebra");
}

morphism_report require_sm(const finite_algebra& a, const unary_map& mu, const char* op) {
    auto rep = is_state_morphism(a, mu);
    if (!rep.is_sm) {
        std::string why;
        for (const auto& cl : rep.detail.clauses)
            if (!cl.pass) {
                why = cl.name + ": " + cl.detail;
                break;
            }
        throw error(errc::not_sm, std::string(op) + ": map is not a state-morphism (" + why + ")");
    }
    return rep;
}

subset require_ds(const finite_algebra& a, subset d, const char* op) {
    if (!classify_subset(a, d).is_ds)
        throw error(errc::not_ds,
                    std::string(op) + ": " + subset_to_string(a, d) + " is not a deductive system");
    return d;
}

subset map_image(const finite_algebra& a, const unary_map& mu, subset d) {
    subset out;
    for (element x : d.members(a.size())) out = out.with(mu(x));
    return out;
}

clause_result named_result(std::string name, bool pass, std::string detail) {
    clause_result res;
    res.name = std::move(name);
    res.pass = pass;
    if (!pass) res.detail = std::move(detail);
    return res;
}

} // namespace

morphism_report is_state_morphism(const finite_algebra& a, const unary_map& mu, witness_mode wm) {
    require_pbck(a, "is_state_morphism");
    require_map(a, mu);
    const map_ctx ctx{a, mu};
    morphism_report out;
    out.detail = detail::run_clauses<map_ctx>("SM", a.size(), ctx,
                                              std::span<const MC>(endo_clauses), wm);
    out.is_endomorphism = out.detail.pass();
    auto idem = detail::run_clauses<map_ctx>("SM", a.size(), ctx,
                                             std::span<const MC>(idem_clauses), wm);
    out.is_idempotent = idem.pass();
    for (auto& cl : idem.clauses) out.detail.clauses.push_back(std::move(cl));
    out.is_sm = out.is_endomorphism && out.is_idempotent;
    for (element x = 0; x < a.size(); ++x)
        if (mu(x) == a.top()) out.kernel = out.kernel.with(x);
    return out;
}

check_report kernel_characterizations(const finite_algebra& a, const unary_map& mu) {
    const auto rep = require_sm(a, mu, "kernel_characterizations");
    const int n = a.size();

    check_report out;
    out.suite = "SM_KERNEL";
    const auto one_set = [&](const char* name, auto value) {
        subset s;
        for (element x = 0; x < n; ++x) s = s.with(value(x));
        out.clauses.push_back(named_result(name, s == rep.kernel,
                                           "collected " + subset_to_string(a, s) +
                                               " but the kernel is " +
                                               subset_to_string(a, rep.kernel)));
    };
    one_set("{mu(x)->x}", [&](element x) { return a.arrow(mu(x), x); });
    one_set("{x->mu(x)}", [&](element x) { return a.arrow(x, mu(x)); });
    one_set("{mu(x)~>x}", [&](element x) { return a.squiggle(mu(x), x); });
    one_set("{x~>mu(x)}", [&](element x) { return a.squiggle(x, mu(x)); });

    bool trivial_ok = true;
    std::string detail;
    if (rep.kernel == subset::of({a.top()})) {
        for (element x = 0; x < n && trivial_ok; ++x)
            if (mu(x) != x) {
                trivial_ok = false;
                detail = "Ker(mu)={1} but mu(" + a.name_of(x) + ") = " + a.name_of(mu(x));
            }
    }
    out.clauses.push_back(named_result("ker={1} => mu=Id", trivial_ok, std::move(detail)));
    return out;
}

bool mu_state_ds(const finite_algebra& a, const unary_map& mu, subset d) {
    require_pbck(a, "mu_state_ds");
    require_map(a, mu);
    require_sm(a, mu, "mu_state_ds");
    require_ds(a, d, "mu_state_ds");
    return map_image(a, mu, d).subset_of(d);
}

subset preimage_ds(const finite_algebra& a, const unary_map& mu, subset d) {
    require_pbck(a, "preimage_ds");
    require_map(a, mu);
    const auto rep = require_sm(a, mu, "preimage_ds");
    require_ds(a, d, "preimage_ds");
    const int n = a.size();

    subset pre;
    for (element x = 0; x < n; ++x)
        if (d.contains(mu(x))) pre = pre.with(x);

    const auto d_cls = classify_subset(a, d);
    const auto pre_cls = classify_subset(a, pre);
    if (!pre_cls.is_ds || !rep.kernel.subset_of(pre))
        throw error(errc::postcondition_failed,
                    "preimage " + subset_to_string(a, pre) +
                        " is not a deductive system containing the kernel");
    if (d_cls.is_normal && !pre_cls.is_normal)
        throw error(errc::postcondition_failed, "preimage of a normal system is not normal");
    if (d_cls.is_commutative && !pre_cls.is_commutative)
        throw error(errc::postcondition_failed,
                    "preimage of a commutative system is not commutative");

    const bool surjective = map_image(a, mu, a.carrier()) == a.carrier();
    if (surjective && map_image(a, mu, d).subset_of(d)) {
        const subset im1 = map_image(a, mu, d);
        const subset im2 = map_image(a, mu, im1);
        for (subset im : {im1, im2})
            if (!classify_subset(a, im).is_ds || !map_image(a, mu, im).subset_of(im))
                throw error(errc::postcondition_failed,
                            "image " + subset_to_string(a, im) +
                                " is not a mu-state deductive system");
    }
    return pre;
}

quotient_sm_result quotient_sm(const finite_algebra& a, const unary_map& mu) {
    require_pbck(a, "quotient_sm");
    require_map(a, mu);
    const auto rep = require_sm(a, mu, "quotient_sm");
    if (!classify_subset(a, rep.kernel).is_normal)
        throw error(errc::postcondition_failed,
                    "state-morphism kernel " + subset_to_string(a, rep.kernel) +
                        " is not a normal deductive system");

    quotient_result q = quotient(a, rep.kernel);
    const int m = q.algebra.size();
    std::vector<element> bar(m, -1);
    for (element x = 0; x < a.size(); ++x) {
        const element b = q.projection[x];
        const element v = q.projection[mu(x)];
        if (bar[b] == -1)
            bar[b] = v;
        else if (bar[b] != v)
            throw error(errc::well_definedness_failure,
                        "lifted map depends on the representative of block " +
                            q.algebra.name_of(b));
    }
    quotient_sm_result out{std::move(q), unary_map{std::move(bar)}};
    if (!is_state_morphism(out.quot.algebra, out.mu_bar).is_sm)
        throw error(errc::postcondition_failed, "lifted map is not a state-morphism");
    for (element x = 0; x < a.size(); ++x)
        if (out.quot.projection[mu(x)] != out.quot.projection[x])
            throw error(errc::postcondition_failed,
                        "pi(mu(x)) != pi(x) at x=" + a.name_of(x));
    return out;
}

check_report check_linear_theorems(const finite_algebra& a) {
    require_pbck(a, "check_linear_theorems");
    const order_relation ord = derive_order(a);
    if (!ord.linear) {
        for (element x = 0; x < a.size(); ++x)
            for (element y = 0; y < a.size(); ++y)
                if (x != y && !ord.leq(x, y) && !ord.leq(y, x))
                    throw error(errc::not_linear, "order is not linear: " + a.name_of(x) +
                                                      " and " + a.name_of(y) +
                                                      " are incomparable");
        throw error(errc::not_linear, "order is not linear");
    }

    check_report out;
    out.suite = "SM_LINEAR";
    const auto image_str = [&](const unary_map& mu) {
        std::string s = "mu = [";
        for (element x = 0; x < a.size(); ++x) {
            if (x) s += ',';
            s += a.name_of(mu(x));
        }
        return s + "]";
    };

    {
        bool pass = true;
        std::string detail;
        std::vector<std::vector<element>> witnesses;
        for (const auto& mu : enumerate_states(a, map_kind::type2)) {
            if (!classify_map(a, mu).is_normal2) continue;
            if (!is_state_morphism(a, mu).is_sm) {
                if (pass) detail = image_str(mu) + " is a normal type2 state but not a state-morphism";
                pass = false;
                witnesses.push_back(mu.image);
            }
        }
        auto res = named_result("(1)", pass, std::move(detail));
        res.witnesses = std::move(witnesses);
        out.clauses.push_back(std::move(res));
    }

    if (is_commutative(a)) {
        bool pass = true;
        std::string detail;
        std::vector<std::vector<element>> witnesses;
        for (auto kind : {map_kind::type1, map_kind::type2})
            for (const auto& mu : enumerate_states(a, kind))
                if (!is_state_morphism(a, mu).is_sm) {
                    if (pass) detail = image_str(mu) + " is a state but not a state-morphism";
                    pass = false;
                    witnesses.push_back(mu.image);
                }
        auto res = named_result("(2)", pass, std::move(detail));
        res.witnesses = std::move(witnesses);
        out.clauses.push_back(std::move(res));
    }
    return out;
}

} // namespace pbck
