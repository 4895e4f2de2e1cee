#pragma once

#include <string>
#include <vector>

#include "pbck/algebra.hpp"

namespace pbck {

// first: stop a clause at its lexicographically first counterexample.
// all: collect every counterexample tuple.
enum class witness_mode { first, all };

struct clause_result {
    std::string name;                            // label as printed in the literature
    bool pass = true;
    std::vector<std::vector<element>> witnesses; // nonempty iff !pass
    std::string detail;                          // rendered message for the first witness

    friend bool operator==(const clause_result&, const clause_result&) = default;
};

struct check_report {
    std::string suite;
    std::vector<clause_result> clauses;

    [[nodiscard]] bool pass() const {
        for (const auto& c : clauses)
            if (!c.pass) return false;
        return true;
    }

    [[nodiscard]] const clause_result* find(std::string_view name) const {
        for (const auto& c : clauses)
            if (c.name == name) return &c;
        return nullptr;
    }
};

// Text rendering used by the CLI and the acceptance suite.
std::string to_text(const check_report& r);

} // namespace pbck
