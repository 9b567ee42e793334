#pragma once

#include <vector>

#include "cheb/bitset.hpp"
#include "cheb/group.hpp"
#include "cheb/profile.hpp"

namespace cheb {

struct LatticeOptions {
    uint64_t max_order = kDefaultOrderCap;
    uint64_t max_subgroups = 200000;
    size_t max_maximal_classes = kMaxProfileRows;
};

struct SubgroupSet {
    DynBitset members;  // over element indices of the ambient group
    size_t size = 0;
};

struct MaximalClassList {
    std::vector<SubgroupSet> reps;        // lexicographically smallest orbit member
    std::vector<uint64_t> class_orbit_sizes;
};

// Precomputed lattice context so the expensive pieces (multiplication
// table, full subgroup list) are shared between operations.
struct Lattice {
    const PermGroup* G = nullptr;
    GroupTables tables;
    std::vector<SubgroupSet> subgroups;  // complete, deduplicated, includes G itself
    MaximalClassList maximals;
    // every conjugate of every maximal subgroup (for the Frattini intersection)
    std::vector<DynBitset> maximal_conjugates;
};

Lattice build_lattice(const PermGroup& G, const LatticeOptions& opt = {});

std::vector<SubgroupSet> all_subgroups(const PermGroup& G, const LatticeOptions& opt = {});
MaximalClassList maximal_classes(const PermGroup& G, const LatticeOptions& opt = {});
SubgroupSet frattini_subgroup(const PermGroup& G, const LatticeOptions& opt = {});

// Bundles the boolean class-intersection matrix with the class densities.
GenerationProfile intersection_matrix(const PermGroup& G, const ConjugacyTable& classes,
                                      const MaximalClassList& maximals);

// One-stop pipeline: lattice -> maximal classes -> profile.
GenerationProfile group_profile(const PermGroup& G, const LatticeOptions& opt = {});

}  // namespace cheb
