#pragma once

#include <cstdint>
#include <vector>

#include "cheb/profile.hpp"

namespace cheb {

constexpr long kMaxPartitionN = 60;

struct Partition {
    std::vector<long> parts;  // weakly decreasing, positive
    long n = 0;               // sum of parts
};

struct CycleTypeClass {
    Partition partition;
    Integer size;      // conjugacy class size in S_n: n! / z_lambda
    bool even;         // n - (#parts) even
    uint64_t sumset;   // bit i set iff some subset of the parts sums to i (n <= 60)
};

enum class SymAltVariant { sym, alt };

std::vector<Partition> partitions(long n);  // reverse-lexicographic order
Integer class_size(const Partition& lambda);
uint64_t subset_sums(const Partition& lambda);
std::vector<CycleTypeClass> cycle_type_classes(long n);

// Profile over cycle types whose rows are the set stabilizers H_{i,n}.
// Symmetric variant: 1 <= i < n/2, plus the alternating-group row.
// Alternating variant: 1 <= i <= n/2, with cycle types that label two
// A_n classes (all parts odd and distinct) contributing one half-size
// column per class; see split_row_masks in sym_alt.cpp for how rows are
// assigned to the halves.
GenerationProfile partial_profile(long n, SymAltVariant variant);

// (E, E^2) of the waiting time restricted to those rows
std::pair<Rational, Rational> partial_invariants(long n, SymAltVariant variant);

}  // namespace cheb
