#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pbck {

enum class errc {
    precondition_violated,
    invalid_point,
    size_limit,
    not_normal,
    not_ds,
    not_a_measure,
    not_sm,
    not_linear,
    not_a_hoop,
    budget_exceeded,
    well_definedness_failure,
    postcondition_failed,
    invalid_structure,
    parse_error,
};

[[nodiscard]] constexpr std::string_view errc_name(errc c) {
    switch (c) {
    case errc::precondition_violated: return "PRECONDITION_VIOLATED";
    case errc::invalid_point: return "INVALID_POINT";
    case errc::size_limit: return "SIZE_LIMIT";
    case errc::not_normal: return "NOT_NORMAL";
    case errc::not_ds: return "NOT_DS";
    case errc::not_a_measure: return "NOT_A_MEASURE";
    case errc::not_sm: return "NOT_SM";
    case errc::not_linear: return "NOT_LINEAR";
    case errc::not_a_hoop: return "NOT_A_HOOP";
    case errc::budget_exceeded: return "BUDGET_EXCEEDED";
    case errc::well_definedness_failure: return "WELL_DEFINEDNESS_FAILURE";
    case errc::postcondition_failed: return "POSTCONDITION_FAILED";
    case errc::invalid_structure: return "INVALID_STRUCTURE";
    case errc::parse_error: return "PARSE_ERROR";
    }
    return "UNKNOWN";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    [[nodiscard]] errc code() const { return code_; }

private:
    errc code_;
};

} // namespace pbck
