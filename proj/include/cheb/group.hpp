#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cheb/perm.hpp"

namespace cheb {

constexpr uint64_t kDefaultOrderCap = 5000;

// A finite permutation group with its elements fully enumerated in a
// deterministic order: breadth-first closure from the identity, applying
// generators in declaration order (right multiplication), first-discovery
// order. elements[0] is always the identity.
struct PermGroup {
    uint32_t degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;

    uint64_t order() const { return elements.size(); }
    uint32_t index_of(const Permutation& p) const;  // throws if absent
};

struct ConjugacyTable {
    std::vector<uint32_t> class_reps;    // element index of first member
    std::vector<uint64_t> class_sizes;
    std::vector<uint32_t> class_of;      // element index -> class index
    size_t count() const { return class_reps.size(); }
};

// Element-index multiplication/inverse tables; built once per group when
// lattice-scale work is needed. mult[i*order+j] = index of elements[i]*elements[j].
struct GroupTables {
    uint64_t order = 0;
    std::vector<uint32_t> mult;
    std::vector<uint32_t> inv;
    uint32_t prod(uint32_t i, uint32_t j) const { return mult[i * order + j]; }
};

std::vector<Permutation> enumerate_elements(uint32_t degree,
                                            const std::vector<Permutation>& gens,
                                            uint64_t cap);

PermGroup group_from_generators(uint32_t degree,
                                const std::vector<Permutation>& gens,
                                uint64_t cap = kDefaultOrderCap);

ConjugacyTable conjugacy_classes(const PermGroup& G);
GroupTables build_tables(const PermGroup& G);

// Faithful permutation representation of G/N on the [G:N] cosets of a
// normal subgroup N (given by element indices).
PermGroup coset_action(const PermGroup& G, const std::vector<uint32_t>& N,
                       uint64_t cap = kDefaultOrderCap);

PermGroup direct_product(const PermGroup& G1, const PermGroup& G2,
                         uint64_t cap = kDefaultOrderCap);

// ---- named families -------------------------------------------------------

struct GroupSpec {
    std::string family;
    long n = 0, p = 0, k = 0;
    std::vector<long> factors;                       // abelian
    std::vector<std::vector<uint32_t>> generators;   // explicit generators
    long degree = 0;                                 // explicit generators
    std::vector<std::shared_ptr<GroupSpec>> product; // direct_product factors
};

GroupSpec parse_group_spec(const std::string& json_text);
PermGroup build_group(const GroupSpec& spec, uint64_t cap = kDefaultOrderCap);

// convenience constructors used by tests and the tables command
PermGroup cyclic_group(long n, uint64_t cap = kDefaultOrderCap);
PermGroup dihedral_group(long order2n, uint64_t cap = kDefaultOrderCap);
PermGroup symmetric_group(long n, uint64_t cap = kDefaultOrderCap);
PermGroup alternating_group(long n, uint64_t cap = kDefaultOrderCap);
PermGroup elementary_abelian_group(long p, long k, uint64_t cap = kDefaultOrderCap);
PermGroup abelian_group(const std::vector<long>& factors, uint64_t cap = kDefaultOrderCap);
PermGroup psl2_group(long p, uint64_t cap = kDefaultOrderCap);
PermGroup sl2_group(long p, uint64_t cap = kDefaultOrderCap);
PermGroup affine_group(long p, uint64_t cap = kDefaultOrderCap);
// index-ell subgroup of the dilation part: maps x -> a*x + t with a an
// ell-th power in F_p^* (ell | p-1); ell=1 gives the full affine group
PermGroup affine_subgroup(long p, long ell, uint64_t cap = kDefaultOrderCap);
PermGroup borel3_group(long p, uint64_t cap = kDefaultOrderCap);

}  // namespace cheb
