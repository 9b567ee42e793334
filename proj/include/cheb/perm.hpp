#pragma once

#include <cstdint>
#include <vector>

#include "cheb/rational.hpp"

namespace cheb {

// A permutation of {0..degree-1} stored as its image array.
struct Permutation {
    std::vector<uint32_t> images;

    Permutation() = default;
    explicit Permutation(std::vector<uint32_t> img);

    uint32_t degree() const { return static_cast<uint32_t>(images.size()); }
    uint32_t operator()(uint32_t i) const { return images[i]; }
    bool operator==(const Permutation& o) const { return images == o.images; }

    bool is_identity() const;
};

Permutation identity_perm(uint32_t degree);

// result(i) = a(b(i))
Permutation perm_compose(const Permutation& a, const Permutation& b);
Permutation perm_inverse(const Permutation& a);

// Builds the permutation with the given cycles on `degree` points
// (points not mentioned are fixed).
Permutation perm_from_cycles(uint32_t degree,
                             const std::vector<std::vector<uint32_t>>& cycles);

struct PermHash {
    size_t operator()(const Permutation& p) const {
        size_t h = 1469598103934665603ull;
        for (uint32_t v : p.images) {
            h ^= v + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace cheb
