#pragma once

#include <span>
#include <string>

#include "pbck/report.hpp"

namespace pbck::detail {

// One universally quantified clause over tuples of carrier elements.
// holds/describe receive the tuple as a pointer to `arity` indices.
template <typename Ctx>
struct clause {
    const char* name;
    int arity; // 0..3
    bool (*holds)(const Ctx&, const element*);
    std::string (*describe)(const Ctx&, const element*);
};

// Evaluates each clause over all tuples in lexicographic order (leftmost
// variable outermost). witness_mode::first stops a clause at its first
// counterexample; ::all collects every one.
template <typename Ctx>
check_report run_clauses(std::string suite, int n, const Ctx& ctx,
                         std::span<const clause<Ctx>> clauses, witness_mode wm) {
    check_report report;
    report.suite = std::move(suite);
    for (const auto& cl : clauses) {
        clause_result res;
        res.name = cl.name;
        element tuple[3] = {0, 0, 0};
        const auto visit = [&](const element* t) {
            if (cl.holds(ctx, t)) return true;
            if (res.pass) {
                res.pass = false;
                res.detail = cl.describe(ctx, t);
            }
            res.witnesses.emplace_back(t, t + cl.arity);
            return wm == witness_mode::all;
        };
        bool keep_going = true;
        if (cl.arity == 0) {
            keep_going = visit(tuple);
        } else if (cl.arity == 1) {
            for (tuple[0] = 0; keep_going && tuple[0] < n; ++tuple[0])
                keep_going = visit(tuple);
        } else if (cl.arity == 2) {
            for (tuple[0] = 0; keep_going && tuple[0] < n; ++tuple[0])
                for (tuple[1] = 0; keep_going && tuple[1] < n; ++tuple[1])
                    keep_going = visit(tuple);
        } else {
            for (tuple[0] = 0; keep_going && tuple[0] < n; ++tuple[0])
                for (tuple[1] = 0; keep_going && tuple[1] < n; ++tuple[1])
                    for (tuple[2] = 0; keep_going && tuple[2] < n; ++tuple[2])
                        keep_going = visit(tuple);
        }
        report.clauses.push_back(std::move(res));
    }
    return report;
}

template <typename Ctx>
const clause<Ctx>* find_clause(std::span<const clause<Ctx>> clauses, std::string_view name) {
    for (const auto& cl : clauses)
        if (name == cl.name) return &cl;
    return nullptr;
}

} // namespace pbck::detail
