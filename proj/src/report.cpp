#include "pbck/report.hpp"

namespace pbck {

std::string to_text(const check_report& r) {
    std::string out = "suite " + r.suite + ": " + (r.pass() ? "PASS" : "FAIL") + "\n";
    for (const auto& c : r.clauses) {
        out += "  " + c.name + ": ";
        if (c.pass) {
            out += "ok\n";
        } else {
            out += "FAIL  " + c.detail;
            if (c.witnesses.size() > 1)
                out += "  (+" + std::to_string(c.witnesses.size() - 1) + " more)";
            out += "\n";
        }
    }
    return out;
}

} // namespace pbck
