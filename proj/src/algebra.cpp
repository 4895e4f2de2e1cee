#include "pbck/algebra.hpp"

#include <algorithm>
#include <set>

namespace pbck {

finite_algebra::finite_algebra(int n, std::vector<element> arrow, std::vector<element> squiggle,
                               element top, std::vector<std::string> names)
    : n_(n), top_(top), arrow_(std::move(arrow)), squiggle_(std::move(squiggle)),
      names_(std::move(names)) {
    if (n_ < 1)
        throw error(errc::invalid_structure, "carrier must hold at least one element");
    if (n_ > carrier_cap)
        throw error(errc::size_limit,
                    "carrier size " + std::to_string(n_) + " exceeds cap " +
                        std::to_string(carrier_cap));
    if (top_ < 0 || top_ >= n_)
        throw error(errc::invalid_structure, "top index out of range");
    const auto check_table = [&](const std::vector<element>& t, const char* which) {
        if (static_cast<int>(t.size()) != n_ * n_)
            throw error(errc::invalid_structure,
                        std::string(which) + " table must hold n*n entries");
        for (element v : t)
            if (v < 0 || v >= n_)
                throw error(errc::invalid_structure,
                            std::string(which) + " table entry out of range");
    };
    check_table(arrow_, "arrow");
    check_table(squiggle_, "squiggle");
    if (!names_.empty()) {
        if (static_cast<int>(names_.size()) != n_)
            throw error(errc::invalid_structure, "expected one name per element");
        std::set<std::string> seen;
        for (const auto& s : names_) {
            if (s.empty() || s.find_first_of(" \t\r\n") != std::string::npos)
                throw error(errc::invalid_structure, "element names must be nonempty and whitespace-free");
            if (!seen.insert(s).second)
                throw error(errc::invalid_structure, "duplicate element name '" + s + "'");
        }
    }
}

std::optional<element> finite_algebra::element_named(const std::string& name) const {
    if (names_.empty()) {
        // Unnamed carriers answer to their decimal indices.
        try {
            size_t pos = 0;
            int v = std::stoi(name, &pos);
            if (pos == name.size() && v >= 0 && v < n_) return v;
        } catch (...) {
        }
        return std::nullopt;
    }
    for (element x = 0; x < n_; ++x)
        if (names_[x] == name) return x;
    return std::nullopt;
}

order_relation derive_order(const finite_algebra& a) {
    const int n = a.size();
    order_relation ord;
    ord.n = n;
    ord.rows.assign(n, 0);
    for (element x = 0; x < n; ++x)
        for (element y = 0; y < n; ++y)
            if (a.leq(x, y)) ord.rows[x] |= std::uint64_t{1} << y;

    ord.linear = true;
    for (element x = 0; x < n && ord.linear; ++x)
        for (element y = 0; y < n; ++y)
            if (!ord.leq(x, y) && !ord.leq(y, x)) {
                ord.linear = false;
                break;
            }

    const std::uint64_t all = subset::full(n).bits;
    for (element x = 0; x < n; ++x)
        if (ord.rows[x] == all) {
            ord.least = x;
            break;
        }
    return ord;
}

std::optional<element> glb(const finite_algebra& a, const order_relation& ord, element x, element y) {
    const int n = a.size();
    for (element g = 0; g < n; ++g) {
        if (!ord.leq(g, x) || !ord.leq(g, y)) continue;
        bool greatest = true;
        for (element z = 0; z < n; ++z)
            if (ord.leq(z, x) && ord.leq(z, y) && !ord.leq(z, g)) {
                greatest = false;
                break;
            }
        if (greatest) return g;
    }
    return std::nullopt;
}

std::optional<element> lub(const finite_algebra& a, const order_relation& ord, element x, element y) {
    const int n = a.size();
    for (element g = 0; g < n; ++g) {
        if (!ord.leq(x, g) || !ord.leq(y, g)) continue;
        bool least = true;
        for (element z = 0; z < n; ++z)
            if (ord.leq(x, z) && ord.leq(y, z) && !ord.leq(g, z)) {
                least = false;
                break;
            }
        if (least) return g;
    }
    return std::nullopt;
}

std::string subset_to_string(const finite_algebra& a, subset s) {
    std::string out = "{";
    bool first = true;
    for (element x = 0; x < a.size(); ++x) {
        if (!s.contains(x)) continue;
        if (!first) out += ",";
        out += a.name_of(x);
        first = false;
    }
    out += "}";
    return out;
}

void require_map(const finite_algebra& a, const unary_map& m) {
    if (m.size() != a.size())
        throw error(errc::invalid_structure, "map size does not match carrier size");
    for (element v : m.image)
        if (v < 0 || v >= a.size())
            throw error(errc::invalid_structure, "map image out of range");
}

} // namespace pbck
