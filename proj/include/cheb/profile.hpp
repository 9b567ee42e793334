#pragma once

#include <string>
#include <vector>

#include "cheb/bitset.hpp"
#include "cheb/rational.hpp"

namespace cheb {

constexpr size_t kMaxProfileRows = 30;

// The complete input of the invariant formulas: conjugacy-class densities
// plus the boolean (maximal class x conjugacy class) intersection matrix.
struct GenerationProfile {
    Integer group_order = 1;
    std::vector<Integer> class_sizes;       // per conjugacy class
    std::vector<Rational> class_densities;  // class_sizes / group_order
    std::vector<DynBitset> rows;            // one per maximal class, over classes
    std::vector<std::string> labels;        // optional, parallel to rows
    std::vector<Integer> orbit_sizes;       // optional, parallel to rows

    size_t columns() const { return class_densities.size(); }
    void validate() const;  // throws Error on any broken invariant
};

GenerationProfile profile_from_json(const std::string& json_text);
std::string profile_to_json(const GenerationProfile& p);

}  // namespace cheb
