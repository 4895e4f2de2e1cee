#include "pbck/states.hpp"

#include "pbck/axioms.hpp"
#include "pbck/morphisms.hpp"

#include "clause_runner.hpp"

#include <algorithm>

namespace pbck {

namespace {

struct state_ctx {
    const finite_algebra& a;
    const unary_map& mu;
    const std::vector<element>* meet; // n*n table, only set when IS4 runs
};

using SC = detail::clause<state_ctx>;

std::string at_pair(const state_ctx& c, const element* t) {
    return " at (x,y)=(" + c.a.name_of(t[0]) + "," + c.a.name_of(t[1]) + ")";
}

std::string two_sided(const state_ctx& c, const char* schema, element lhs, element rhs,
                      const element* t) {
    return std::string(schema) + ": lhs = " + c.a.name_of(lhs) + ", rhs = " + c.a.name_of(rhs) +
           at_pair(c, t);
}

bool is1_holds(const state_ctx& c, const element* t) {
    return !c.a.leq(t[0], t[1]) || c.a.leq(c.mu(t[0]), c.mu(t[1]));
}

std::string is1_describe(const state_ctx& c, const element* t) {
    return "x <= y but mu(x) = " + c.a.name_of(c.mu(t[0])) + " is not <= mu(y) = " +
           c.a.name_of(c.mu(t[1])) + at_pair(c, t);
}

bool is2_arrow(const state_ctx& c, element x, element y, element& lhs, element& rhs) {
    const auto& a = c.a;
    lhs = c.mu(a.arrow(x, y));
    rhs = a.arrow(c.mu(a.squiggle(a.arrow(x, y), y)), c.mu(y));
    return lhs == rhs;
}

bool is2_squiggle(const state_ctx& c, element x, element y, element& lhs, element& rhs) {
    const auto& a = c.a;
    lhs = c.mu(a.squiggle(x, y));
    rhs = a.squiggle(c.mu(a.arrow(a.squiggle(x, y), y)), c.mu(y));
    return lhs == rhs;
}

bool is2_holds(const state_ctx& c, const element* t) {
    element l, r;
    return is2_arrow(c, t[0], t[1], l, r) && is2_squiggle(c, t[0], t[1], l, r);
}

std::string is2_describe(const state_ctx& c, const element* t) {
    element l, r;
    if (!is2_arrow(c, t[0], t[1], l, r))
        return two_sided(c, "mu(x->y) = mu((x->y)~>y)->mu(y)", l, r, t);
    is2_squiggle(c, t[0], t[1], l, r);
    return two_sided(c, "mu(x~>y) = mu((x~>y)->y)~>mu(y)", l, r, t);
}

bool is2p_arrow(const state_ctx& c, element x, element y, element& lhs, element& rhs) {
    const auto& a = c.a;
    lhs = c.mu(a.arrow(x, y));
    rhs = a.arrow(c.mu(a.squiggle(a.arrow(y, x), x)), c.mu(y));
    return lhs == rhs;
}

bool is2p_squiggle(const state_ctx& c, element x, element y, element& lhs, element& rhs) {
    const auto& a = c.a;
    lhs = c.mu(a.squiggle(x, y));
    rhs = a.squiggle(c.mu(a.arrow(a.squiggle(y, x), x)), c.mu(y));
    return lhs == rhs;
}

bool is2p_holds(const state_ctx& c, const element* t) {
    element l, r;
    return is2p_arrow(c, t[0], t[1], l, r) && is2p_squiggle(c, t[0], t[1], l, r);
}

std::string is2p_describe(const state_ctx& c, const element* t) {
    element l, r;
    if (!is2p_arrow(c, t[0], t[1], l, r))
        return two_sided(c, "mu(x->y) = mu((y->x)~>x)->mu(y)", l, r, t);
    is2p_squiggle(c, t[0], t[1], l, r);
    return two_sided(c, "mu(x~>y) = mu((y~>x)->x)~>mu(y)", l, r, t);
}

bool is3_holds(const state_ctx& c, const element* t) {
    const auto& a = c.a;
    const element u = a.arrow(c.mu(t[0]), c.mu(t[1]));
    const element v = a.squiggle(c.mu(t[0]), c.mu(t[1]));
    return c.mu(u) == u && c.mu(v) == v;
}

std::string is3_describe(const state_ctx& c, const element* t) {
    const auto& a = c.a;
    const element u = a.arrow(c.mu(t[0]), c.mu(t[1]));
    if (c.mu(u) != u) return two_sided(c, "mu(mu(x)->mu(y)) = mu(x)->mu(y)", c.mu(u), u, t);
    const element v = a.squiggle(c.mu(t[0]), c.mu(t[1]));
    return two_sided(c, "mu(mu(x)~>mu(y)) = mu(x)~>mu(y)", c.mu(v), v, t);
}

const SC is1_clause[] = {{"IS1", 2, is1_holds, is1_describe}};
const SC is2_clause[] = {{"IS2", 2, is2_holds, is2_describe}};
const SC is2p_clause[] = {{"IS2'", 2, is2p_holds, is2p_describe}};
const SC is3_clause[] = {{"IS3", 2, is3_holds, is3_describe}};

const SC is4_clause[] = {{"IS4", 2,
                          [](const state_ctx& c, const element* t) {
                              const int n = c.a.size();
                              const element w = (*c.meet)[c.mu(t[0]) * n + c.mu(t[1])];
                              return c.mu(w) == w;
                          },
                          [](const state_ctx& c, const element* t) {
                              const int n = c.a.size();
                              const element w = (*c.meet)[c.mu(t[0]) * n + c.mu(t[1])];
                              return two_sided(c, "mu(mu(x)^mu(y)) = mu(x)^mu(y)", c.mu(w), w, t);
                          }}};

void require_pbck(const finite_algebra& a, const char* op) {
    if (!is_pbck(a))
        throw error(errc::precondition_violated,
                    std::string(op) + " requires a pseudo BCK-algebra");
}

void append(check_report& into, check_report from) {
    for (auto& cl : from.clauses) into.clauses.push_back(std::move(cl));
}

} // namespace

check_report check_state(const finite_algebra& a, const unary_map& mu, state_kind kind,
                         witness_mode wm) {
    require_pbck(a, "check_state");
    require_map(a, mu);
    const state_ctx ctx{a, mu, nullptr};
    const char* suite = kind == state_kind::type1 ? "TYPE1" : "TYPE2";
    auto report = detail::run_clauses<state_ctx>(suite, a.size(), ctx,
                                                 std::span<const SC>(is1_clause), wm);
    append(report, detail::run_clauses<state_ctx>(
                       suite, a.size(), ctx,
                       kind == state_kind::type1 ? std::span<const SC>(is2_clause)
                                                 : std::span<const SC>(is2p_clause),
                       wm));
    append(report, detail::run_clauses<state_ctx>(suite, a.size(), ctx,
                                                  std::span<const SC>(is3_clause), wm));
    return report;
}

state_classification classify_map(const finite_algebra& a, const unary_map& mu,
                                  witness_mode wm) {
    require_pbck(a, "classify_map");
    require_map(a, mu);
    const int n = a.size();
    state_classification out;
    out.detail.suite = "STATE";

    const state_ctx ctx{a, mu, nullptr};
    auto is1 = detail::run_clauses<state_ctx>("STATE", n, ctx, std::span<const SC>(is1_clause), wm);
    auto is2 = detail::run_clauses<state_ctx>("STATE", n, ctx, std::span<const SC>(is2_clause), wm);
    auto is2p =
        detail::run_clauses<state_ctx>("STATE", n, ctx, std::span<const SC>(is2p_clause), wm);
    auto is3 = detail::run_clauses<state_ctx>("STATE", n, ctx, std::span<const SC>(is3_clause), wm);
    out.is_type1 = is1.pass() && is2.pass() && is3.pass();
    out.is_type2 = is1.pass() && is2p.pass() && is3.pass();
    append(out.detail, std::move(is1));
    append(out.detail, std::move(is2));
    append(out.detail, std::move(is2p));
    append(out.detail, std::move(is3));

    for (element x = 0; x < n; ++x) {
        if (mu(x) == a.top()) out.kernel = out.kernel.with(x);
        out.image_set = out.image_set.with(mu(x));
    }
    if (out.is_type1 || out.is_type2) {
        const bool normal_kernel = classify_subset(a, out.kernel).is_normal;
        out.is_normal1 = out.is_type1 && normal_kernel;
        out.is_normal2 = out.is_type2 && normal_kernel;
    }

    if (structure_kind(a).meet_semilattice) {
        const order_relation ord = derive_order(a);
        std::vector<element> meet(n * n);
        for (element x = 0; x < n; ++x)
            for (element y = 0; y < n; ++y) meet[x * n + y] = *glb(a, ord, x, y);
        const state_ctx ctx4{a, mu, &meet};
        auto is4 =
            detail::run_clauses<state_ctx>("STATE", n, ctx4, std::span<const SC>(is4_clause), wm);
        out.satisfies_is4 = is4.pass();
        append(out.detail, std::move(is4));
    }
    return out;
}

std::vector<unary_map> enumerate_states(const finite_algebra& a, map_kind kind,
                                        long long node_budget) {
    require_pbck(a, "enumerate_states");
    const int n = a.size();
    const element top = a.top();
    std::vector<unary_map> out;
    std::vector<element> image(n, -1);
    image[top] = top;
    long long nodes = 0;

    // positions 0..n-2 in index order; top is pinned up front
    const auto emit = [&] {
        unary_map mu{image};
        const bool keep = [&] {
            switch (kind) {
            case map_kind::type1: return check_state(a, mu, state_kind::type1).pass();
            case map_kind::type2: return check_state(a, mu, state_kind::type2).pass();
            case map_kind::morphism: return is_state_morphism(a, mu).is_sm;
            }
            return false;
        }();
        if (keep) out.push_back(std::move(mu));
    };

    const auto sound_so_far = [&](element pos, element v) {
        // mu(mu(x)) = mu(x): both directions over the assigned prefix
        if (image[v] != -1 && image[v] != v) return false;
        for (element u = 0; u < n; ++u)
            if (image[u] == pos && v != pos) return false;
        // IS1 against already assigned points (holds for morphisms too)
        for (element u = 0; u < n; ++u) {
            if (image[u] == -1 || u == pos) continue;
            if (a.leq(u, pos) && !a.leq(image[u], v)) return false;
            if (a.leq(pos, u) && !a.leq(v, image[u])) return false;
        }
        return true;
    };

    const auto dfs = [&](auto&& self, element pos) -> void {
        if (pos == top) pos++;
        if (pos >= n) {
            emit();
            return;
        }
        for (element v = 0; v < n; ++v) {
            if (++nodes > node_budget)
                throw error(errc::budget_exceeded, "state enumeration exceeded node budget");
            if (!sound_so_far(pos, v)) continue;
            image[pos] = v;
            self(self, pos + 1);
            image[pos] = -1;
        }
    };
    dfs(dfs, 0);
    return out;
}

lifted_state lift_to_quotient(const finite_algebra& a, const unary_map& mu) {
    const auto cls = classify_map(a, mu);
    if (!cls.is_type2 || !cls.is_normal2)
        throw error(errc::precondition_violated,
                    "lift_to_quotient requires a normal type2 state operator");
    quotient_result q = quotient(a, cls.kernel);
    const int m = q.algebra.size();
    std::vector<element> bar(m, -1);
    for (element x = 0; x < a.size(); ++x) {
        const element b = q.projection[x];
        const element v = q.projection[mu(x)];
        if (bar[b] == -1)
            bar[b] = v;
        else if (bar[b] != v)
            throw error(errc::well_definedness_failure,
                        "lifted state depends on the representative of block " +
                            q.algebra.name_of(b));
    }
    lifted_state out{std::move(q), unary_map{std::move(bar)}};
    const auto lifted = classify_map(out.quot.algebra, out.mu_bar);
    if (!lifted.is_normal1 || !lifted.is_normal2)
        throw error(errc::postcondition_failed,
                    "lifted state is not a normal type1 and type2 state on the quotient");
    return out;
}

} // namespace pbck
