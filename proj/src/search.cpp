#include "pbck/search.hpp"

#include "pbck/axioms.hpp"
#include "pbck/commutativity.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace pbck {

namespace {

void validate(const search_config& cfg) {
    if (cfg.size < 1 || cfg.size > 5)
        throw error(errc::size_limit, "search size must be between 1 and 5");
    if (cfg.node_budget <= 0)
        throw error(errc::invalid_structure, "node budget must be positive");
}

// lexicographically minimal representative over relabelings fixing top
bool is_canonical(const finite_algebra& a) {
    const int n = a.size();
    const element t = a.top();
    std::vector<element> orig;
    orig.reserve(2 * n * n);
    orig.insert(orig.end(), a.arrow_table().begin(), a.arrow_table().end());
    orig.insert(orig.end(), a.squiggle_table().begin(), a.squiggle_table().end());

    std::vector<element> base(n - 1);
    std::iota(base.begin(), base.end(), 0);
    std::vector<element> p(n), pinv(n), scratch(2 * n * n);
    do {
        for (int i = 0; i < n - 1; ++i) p[i] = base[i];
        p[t] = t;
        for (int i = 0; i < n; ++i) pinv[p[i]] = i;
        for (int tbl = 0; tbl < 2; ++tbl) {
            const auto& src = tbl == 0 ? a.arrow_table() : a.squiggle_table();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    scratch[tbl * n * n + i * n + j] = p[src[pinv[i] * n + pinv[j]]];
        }
        if (scratch < orig) return false;
    } while (std::next_permutation(base.begin(), base.end()));
    return true;
}

struct searcher {
    int n;
    element t;
    const search_config& cfg;
    std::atomic<long long>& nodes;
    std::atomic<bool>& stop;
    std::vector<element> arrow, squiggle; // -1 = unassigned
    std::vector<int> order;               // cell ids: tbl*n*n + x*n + y
    std::vector<finite_algebra>* out = nullptr;

    searcher(const search_config& c, std::atomic<long long>& node_counter,
             std::atomic<bool>& stop_flag)
        : n(c.size), t(c.size - 1), cfg(c), nodes(node_counter), stop(stop_flag),
          arrow(n * n, -1), squiggle(n * n, -1) {
        for (element y = 0; y < n; ++y) arrow[t * n + y] = y;    // 1->x = x
        for (element y = 0; y < n; ++y) squiggle[t * n + y] = y; // 1~>x = x
        for (element x = 0; x < n; ++x) {
            arrow[x * n + t] = t;    // x->1 = 1
            squiggle[x * n + t] = t; // x~>1 = 1, derivable from psBCK1'..5'
            arrow[x * n + x] = t;    // x->x = 1, likewise derivable
            squiggle[x * n + x] = t;
        }
        // row-major, arrow row then squiggle row, so antisymmetry trips early
        for (element x = 0; x < n; ++x) {
            for (element y = 0; y < n; ++y)
                if (arrow[x * n + y] == -1) order.push_back(x * n + y);
            for (element y = 0; y < n; ++y)
                if (squiggle[x * n + y] == -1) order.push_back(n * n + x * n + y);
        }
    }

    element ar(element x, element y) const { return arrow[x * n + y]; }
    element sq(element x, element y) const { return squiggle[x * n + y]; }

    // checks every fully determined instance of psBCK1' and psBCK2'
    bool partial_eq_ok() const {
        for (element x = 0; x < n; ++x)
            for (element y = 0; y < n; ++y) {
                const element axy = ar(x, y), sxy = sq(x, y);
                for (element z = 0; z < n; ++z) {
                    if (axy != -1) {
                        const element v = ar(y, z), w = ar(x, z);
                        if (v != -1 && w != -1) {
                            const element inner = sq(v, w);
                            if (inner != -1) {
                                const element r = sq(axy, inner);
                                if (r != -1 && r != t) return false;
                            }
                        }
                    }
                    if (sxy != -1) {
                        const element v = sq(y, z), w = sq(x, z);
                        if (v != -1 && w != -1) {
                            const element inner = ar(v, w);
                            if (inner != -1) {
                                const element r = ar(sxy, inner);
                                if (r != -1 && r != t) return false;
                            }
                        }
                    }
                }
            }
        return true;
    }

    bool antisym_ok(int cell, element v) const {
        if (cell >= n * n) return true; // psBCK6' constrains only the arrow
        const element x = cell / n, y = cell % n;
        return v != t || x == y || ar(y, x) != t;
    }

    void emit() {
        finite_algebra a(n, arrow, squiggle, t);
        if (!is_pbck(a)) return; // pruning is best-effort; the full check decides
        if (cfg.commutative_only && !is_commutative(a)) return;
        if (cfg.up_to_iso && !is_canonical(a)) return;
        out->push_back(std::move(a));
    }

    void dfs(std::size_t pos) {
        if (stop.load(std::memory_order_relaxed)) return;
        if (pos == order.size()) {
            emit();
            return;
        }
        const int cell = order[pos];
        element* slot = cell < n * n ? &arrow[cell] : &squiggle[cell - n * n];
        for (element v = 0; v < n; ++v) {
            if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > cfg.node_budget) {
                stop.store(true, std::memory_order_relaxed);
                return;
            }
            if (!antisym_ok(cell, v)) continue;
            *slot = v;
            if (partial_eq_ok()) dfs(pos + 1);
            *slot = -1;
            if (stop.load(std::memory_order_relaxed)) return;
        }
    }
};

void sort_models(std::vector<finite_algebra>& models) {
    std::sort(models.begin(), models.end(), [](const finite_algebra& a, const finite_algebra& b) {
        if (a.arrow_table() != b.arrow_table()) return a.arrow_table() < b.arrow_table();
        return a.squiggle_table() < b.squiggle_table();
    });
}

} // namespace

std::vector<finite_algebra> enumerate_models(const search_config& cfg) {
    validate(cfg);
    std::atomic<long long> nodes{0};
    std::atomic<bool> stop{false};
    searcher s(cfg, nodes, stop);
    std::vector<finite_algebra> out;
    s.out = &out;
    s.dfs(0);
    if (stop.load())
        throw error(errc::budget_exceeded, "model search exceeded the node budget");
    sort_models(out);
    return out;
}

std::vector<finite_algebra> enumerate_models_parallel(const search_config& cfg) {
    validate(cfg);
    std::atomic<long long> nodes{0};
    std::atomic<bool> stop{false};

    // split the tree at the first two free cells (first free cell when only one)
    const searcher proto(cfg, nodes, stop);
    const int depth = std::min<std::size_t>(2, proto.order.size());
    const int tasks = depth == 0 ? 1 : (depth == 1 ? cfg.size : cfg.size * cfg.size);

    std::vector<std::vector<finite_algebra>> parts(tasks);
#pragma omp parallel for schedule(dynamic)
    for (int task = 0; task < tasks; ++task) {
        searcher s(cfg, nodes, stop);
        s.out = &parts[task];
        bool viable = true;
        for (int d = 0; d < depth; ++d) {
            const int cell = s.order[d];
            const element v = d == 0 ? task % cfg.size : task / cfg.size;
            element* slot = cell < s.n * s.n ? &s.arrow[cell] : &s.squiggle[cell - s.n * s.n];
            if (!s.antisym_ok(cell, v)) {
                viable = false;
                break;
            }
            *slot = v;
            if (!s.partial_eq_ok()) {
                viable = false;
                break;
            }
        }
        if (viable) s.dfs(depth);
    }
    if (stop.load())
        throw error(errc::budget_exceeded, "model search exceeded the node budget");

    std::vector<finite_algebra> out;
    for (auto& part : parts)
        for (auto& m : part) out.push_back(std::move(m));
    sort_models(out);
    return out;
}

std::vector<finite_algebra> enumerate_models_naive(const search_config& cfg) {
    validate(cfg);
    if (cfg.size > 3)
        throw error(errc::size_limit, "the filter-only reference path is limited to size 3");
    const int n = cfg.size;
    const element t = n - 1;

    std::vector<element> arrow(n * n, -1), squiggle(n * n, -1);
    for (element y = 0; y < n; ++y) arrow[t * n + y] = y;    // psBCK3'
    for (element y = 0; y < n; ++y) squiggle[t * n + y] = y; // psBCK4'
    for (element x = 0; x < n; ++x) arrow[x * n + t] = t;    // psBCK5'
    std::vector<int> free_cells;
    for (int c = 0; c < n * n; ++c)
        if (arrow[c] == -1) free_cells.push_back(c);
    for (int c = 0; c < n * n; ++c)
        if (squiggle[c] == -1) free_cells.push_back(n * n + c);

    long long total = 1;
    for (std::size_t i = 0; i < free_cells.size(); ++i) total *= n;

    std::vector<finite_algebra> out;
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        for (int cell : free_cells) {
            const element v = static_cast<element>(rest % n);
            rest /= n;
            (cell < n * n ? arrow[cell] : squiggle[cell - n * n]) = v;
        }
        finite_algebra a(n, arrow, squiggle, t);
        if (!is_pbck(a)) continue;
        if (cfg.commutative_only && !is_commutative(a)) continue;
        if (cfg.up_to_iso && !is_canonical(a)) continue;
        out.push_back(std::move(a));
    }
    sort_models(out);
    return out;
}

} // namespace pbck
