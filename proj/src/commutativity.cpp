#include "pbck/commutativity.hpp"

#include "pbck/axioms.hpp"

#include "algebra_clauses.hpp"

namespace pbck {

const char* method_name(commutativity_method m) {
    switch (m) {
    case commutativity_method::def: return "DEF";
    case commutativity_method::one_sided: return "ONE_SIDED";
    case commutativity_method::yutani_kuhr: return "YUTANI_KUHR";
    case commutativity_method::kuhr_k: return "KUHR_K";
    case commutativity_method::palasinski_p: return "PALASINSKI_P";
    case commutativity_method::cornish_c: return "CORNISH_C";
    case commutativity_method::char_b: return "CHAR_B";
    case commutativity_method::char_c: return "CHAR_C";
    case commutativity_method::char_d: return "CHAR_D";
    }
    return "?";
}

bool method_needs_pbck(commutativity_method m) {
    switch (m) {
    case commutativity_method::def:
    case commutativity_method::one_sided:
    case commutativity_method::char_b:
    case commutativity_method::char_c:
    case commutativity_method::char_d: return true;
    default: return false;
    }
}

check_report check_commutative(const finite_algebra& a, commutativity_method m, witness_mode wm) {
    if (method_needs_pbck(m) && !is_pbck(a))
        throw error(errc::precondition_violated,
                    std::string(method_name(m)) + " presupposes a pseudo BCK-algebra");
    const char* tag = method_name(m);
    return detail::run_clauses<finite_algebra>(tag, a.size(), a, detail::suite_clauses(tag), wm);
}

bool is_commutative(const finite_algebra& a) {
    if (!is_pbck(a)) return false;
    for (element x = 0; x < a.size(); ++x)
        for (element y = 0; y < a.size(); ++y) {
            if (a.squiggle(a.arrow(x, y), y) != a.squiggle(a.arrow(y, x), x)) return false;
            if (a.arrow(a.squiggle(x, y), y) != a.arrow(a.squiggle(y, x), x)) return false;
        }
    return true;
}

element join(const finite_algebra& a, element x, element y) {
    if (x < 0 || x >= a.size() || y < 0 || y >= a.size())
        throw error(errc::invalid_point, "join argument out of range");
    if (!is_commutative(a))
        throw error(errc::precondition_violated,
                    "join is only well-defined on commutative pseudo BCK-algebras");
    return a.squiggle(a.arrow(x, y), y);
}

bool check_order_determining(const finite_algebra& a, const std::vector<measure>& measures) {
    for (size_t i = 0; i < measures.size(); ++i) {
        std::vector<element> violation;
        if (!is_measure(a, measures[i], &violation))
            throw error(errc::not_a_measure,
                        "entry " + std::to_string(i) + " is not a measure (witness pair (" +
                            a.name_of(violation[0]) + "," + a.name_of(violation[1]) + "))");
    }
    for (element x = 0; x < a.size(); ++x)
        for (element y = 0; y < a.size(); ++y) {
            bool dominated = true;
            for (const auto& m : measures)
                if (!(m(x) >= m(y))) {
                    dominated = false;
                    break;
                }
            if (dominated && !a.leq(x, y)) return false;
        }
    return true;
}

} // namespace pbck
