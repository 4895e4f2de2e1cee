#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbck/error.hpp"

namespace pbck {

// Index into an algebra's carrier.
using element = int;

// Carriers are capped so subsets fit in one machine word.
inline constexpr int carrier_cap = 64;

// Subset of a carrier as a bitmask. Bit i <=> element i is a member.
struct subset {
    std::uint64_t bits = 0;

    [[nodiscard]] static subset full(int n) {
        return {n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }
    [[nodiscard]] static subset of(std::initializer_list<element> xs) {
        subset s;
        for (element x : xs) s = s.with(x);
        return s;
    }

    [[nodiscard]] bool contains(element x) const { return (bits >> x) & 1u; }
    [[nodiscard]] subset with(element x) const { return {bits | (std::uint64_t{1} << x)}; }
    [[nodiscard]] subset without(element x) const { return {bits & ~(std::uint64_t{1} << x)}; }
    [[nodiscard]] int count() const { return __builtin_popcountll(bits); }
    [[nodiscard]] bool subset_of(subset other) const { return (bits & ~other.bits) == 0; }

    [[nodiscard]] std::vector<element> members(int n) const {
        std::vector<element> out;
        for (element x = 0; x < n; ++x)
            if (contains(x)) out.push_back(x);
        return out;
    }

    friend auto operator<=>(const subset&, const subset&) = default;
};

// Total unary self-map given pointwise by image[x].
struct unary_map {
    std::vector<element> image;

    [[nodiscard]] element operator()(element x) const { return image[x]; }
    [[nodiscard]] int size() const { return static_cast<int>(image.size()); }

    friend bool operator==(const unary_map&, const unary_map&) = default;
};

// Finite algebra (A, ->, ~>, 1) of type (2,2,0). Both operation tables are
// total; being a pseudo BCK-algebra is NOT an invariant of this type, only
// structural validity is (all entries are valid carrier indices).
class finite_algebra {
public:
    finite_algebra(int n, std::vector<element> arrow, std::vector<element> squiggle,
                   element top, std::vector<std::string> names = {});

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] element top() const { return top_; }

    [[nodiscard]] element arrow(element x, element y) const { return arrow_[x * n_ + y]; }
    [[nodiscard]] element squiggle(element x, element y) const { return squiggle_[x * n_ + y]; }

    // The candidate order: x <= y iff x->y = 1. A total relation on any
    // table; it is a partial order exactly on pseudo BCK-algebras.
    [[nodiscard]] bool leq(element x, element y) const { return arrow(x, y) == top_; }

    [[nodiscard]] const std::vector<element>& arrow_table() const { return arrow_; }
    [[nodiscard]] const std::vector<element>& squiggle_table() const { return squiggle_; }

    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] bool named() const { return !names_.empty(); }
    [[nodiscard]] std::string name_of(element x) const {
        return names_.empty() ? std::to_string(x) : names_[x];
    }
    [[nodiscard]] std::optional<element> element_named(const std::string& name) const;

    [[nodiscard]] subset carrier() const { return subset::full(n_); }

    friend bool operator==(const finite_algebra&, const finite_algebra&) = default;

private:
    int n_;
    element top_;
    std::vector<element> arrow_;
    std::vector<element> squiggle_;
    std::vector<std::string> names_;
};

// Derived order relation of an algebra, with row x stored as a bitmask over y.
struct order_relation {
    int n = 0;
    std::vector<std::uint64_t> rows;
    bool linear = false;
    std::optional<element> least;

    [[nodiscard]] bool leq(element x, element y) const { return (rows[x] >> y) & 1u; }
};

order_relation derive_order(const finite_algebra& a);

// Greatest lower / least upper bound in the derived order, if one exists.
std::optional<element> glb(const finite_algebra& a, const order_relation& ord, element x, element y);
std::optional<element> lub(const finite_algebra& a, const order_relation& ord, element x, element y);

// Membership string like "{1,c,d}", elements listed in carrier index order.
std::string subset_to_string(const finite_algebra& a, subset s);

// Validates that m is a total self-map on a's carrier.
void require_map(const finite_algebra& a, const unary_map& m);

} // namespace pbck
