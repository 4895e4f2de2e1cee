#pragma once

#include "pbck/algebra.hpp"
#include "pbck/deduction.hpp"
#include "pbck/hoops.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pbck {

// Text format, whitespace-separated tokens, # comments:
//   pbck N
//   elements <N names>
//   top <name>
//   arrow    <N*N names, row-major>
//   squiggle <N*N names>   (optional; omitted => squiggle = arrow)
//   prod     <N*N names>   (optional; product table of a hoop candidate)
struct algebra_file {
    finite_algebra algebra;
    std::optional<std::vector<element>> prod;
    bool squiggle_was_omitted = false;
};

algebra_file parse_algebra_text(std::string_view text, std::string_view origin = "<input>");
algebra_file load_algebra(const std::string& path);

std::string serialize_algebra(const finite_algebra& a);
std::string serialize_hoop(const hoop_algebra& h);

// one `name value` line per element; values are nonnegative integers or p/q
measure parse_measure_text(const finite_algebra& a, std::string_view text,
                           std::string_view origin = "<input>");
measure load_measure(const finite_algebra& a, const std::string& path);
std::string serialize_measure(const finite_algebra& a, const measure& m);

// either `name -> name` lines covering every element once, or a single row of
// n image names in carrier order
unary_map parse_map_text(const finite_algebra& a, std::string_view text,
                         std::string_view origin = "<input>");
unary_map load_map(const finite_algebra& a, const std::string& path);
std::string serialize_map(const finite_algebra& a, const unary_map& mu);

} // namespace pbck
