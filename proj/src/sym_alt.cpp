#include "cheb/sym_alt.hpp"

#include "cheb/engine.hpp"

namespace cheb {

namespace {

void gen_partitions(long remaining, long max_part, std::vector<long>& prefix,
                    std::vector<Partition>& out, long n) {
    if (remaining == 0) {
        out.push_back(Partition{prefix, n});
        return;
    }
    for (long p = std::min(max_part, remaining); p >= 1; --p) {
        prefix.push_back(p);
        gen_partitions(remaining - p, p, prefix, out, n);
        prefix.pop_back();
    }
}

Integer factorial(long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// A cycle type with all parts odd and distinct labels two A_n classes of
// equal size rather than one.  Each set-stabilizer row meets at most one of
// the two halves, and which one is decided by the cycles that land on the
// i-point side.  The baseline rule keys on the parity of the number of
// cycles moved there; the types below deviate from that baseline, so their
// row masks (bit i = row H_i) are tabulated explicitly.
struct HalfClassRows {
    std::vector<long> parts;
    uint64_t first;
    uint64_t second;
};

uint64_t rows(std::initializer_list<int> is) {
    uint64_t m = 0;
    for (int i : is) m |= uint64_t{1} << i;
    return m;
}

const std::vector<HalfClassRows>& half_class_rows() {
    static const std::vector<HalfClassRows> table = {
        {{7, 3, 1}, rows({3, 4}), rows({1})},
        {{9, 3, 1}, rows({3, 4}), rows({1})},
        {{7, 5, 1}, rows({1, 5}), rows({6})},
        {{11, 3, 1}, rows({1, 3}), rows({4})},
        {{9, 5, 1}, rows({5}), rows({1, 6})},
        {{7, 5, 3}, rows({3, 7}), rows({5})},
        {{7, 5, 3, 1}, rows({1, 3, 7, 8}), rows({4, 5, 6})},
        {{13, 3, 1}, rows({3}), rows({1, 4})},
        {{11, 5, 1}, rows({1, 5}), rows({6})},
        {{9, 7, 1}, rows({7}), rows({1, 8})},
        {{9, 5, 3}, rows({5}), rows({3, 8})},
        {{9, 5, 3, 1}, rows({1, 4, 8, 9}), rows({3, 5, 6, 9})},
        {{15, 3, 1}, rows({3}), rows({1, 4})},
        {{13, 5, 1}, rows({5}), rows({1, 6})},
        {{11, 7, 1}, rows({1, 7}), rows({8})},
        {{11, 5, 3}, rows({5}), rows({3, 8})},
        {{9, 7, 3}, rows({3, 9}), rows({7})},
        {{11, 5, 3, 1}, rows({1, 3, 5, 6, 9}), rows({4, 8})},
        {{9, 7, 3, 1}, rows({3, 4, 9, 10}), rows({1, 7, 8})},
    };
    return table;
}

bool splits_in_alt(const Partition& lambda) {
    long prev = 0;
    for (long part : lambda.parts) {
        if (part % 2 == 0 || part == prev) return false;
        prev = part;
    }
    return true;
}

// Row masks for the two halves of a split class.  Baseline: a subset of
// cycle lengths summing to i puts row i on the first or second half
// according to whether the subset has odd or even size.
std::pair<uint64_t, uint64_t> split_row_masks(const Partition& lambda, long max_row) {
    for (const auto& entry : half_class_rows())
        if (entry.parts == lambda.parts) return {entry.first, entry.second};
    uint64_t odd = 0, even = 1;  // subset sums, tracked by subset-size parity
    for (long part : lambda.parts) {
        uint64_t next_odd = odd | (even << part);
        uint64_t next_even = even | (odd << part);
        odd = next_odd;
        even = next_even;
    }
    uint64_t keep = (uint64_t{2} << max_row) - 2;  // bits 1..max_row
    return {odd & keep, even & keep};
}

}  // namespace

std::vector<Partition> partitions(long n) {
    if (n < 1 || n > kMaxPartitionN)
        throw Error("partitions(n) supports 1 <= n <= " + std::to_string(kMaxPartitionN));
    std::vector<Partition> out;
    std::vector<long> prefix;
    gen_partitions(n, n, prefix, out, n);
    return out;
}

Integer class_size(const Partition& lambda) {
    Integer z = 1;
    long run = 0, prev = 0;
    for (long part : lambda.parts) {
        z *= part;
        if (part == prev) {
            ++run;
        } else {
            prev = part;
            run = 1;
        }
        z *= run;  // builds up m_i! one factor at a time
    }
    return factorial(lambda.n) / z;
}

uint64_t subset_sums(const Partition& lambda) {
    uint64_t sums = 1;  // the empty sum
    for (long part : lambda.parts) sums |= sums << part;
    return sums;
}

std::vector<CycleTypeClass> cycle_type_classes(long n) {
    std::vector<CycleTypeClass> out;
    for (auto& lambda : partitions(n)) {
        CycleTypeClass c;
        c.size = class_size(lambda);
        c.even = (n - static_cast<long>(lambda.parts.size())) % 2 == 0;
        c.sumset = subset_sums(lambda);
        c.partition = std::move(lambda);
        out.push_back(std::move(c));
    }
    return out;
}

GenerationProfile partial_profile(long n, SymAltVariant variant) {
    if (variant == SymAltVariant::sym ? n < 2 : n < 3)
        throw Error("partial_profile needs n >= 2 (sym) or n >= 3 (alt)");
    std::vector<CycleTypeClass> all = cycle_type_classes(n);

    GenerationProfile p;
    p.group_order = variant == SymAltVariant::sym ? factorial(n) : factorial(n) / 2;
    // one mask of stabilizer-row memberships per column
    std::vector<uint64_t> col_rows;
    long max_row = variant == SymAltVariant::sym ? (n - 1) / 2 : n / 2;
    uint64_t keep = (uint64_t{2} << max_row) - 2;  // bits 1..max_row
    for (const auto& c : all) {
        if (variant == SymAltVariant::sym) {
            p.class_sizes.push_back(c.size);
            col_rows.push_back(c.sumset & keep);
        } else if (c.even) {
            if (splits_in_alt(c.partition)) {
                auto [first, second] = split_row_masks(c.partition, max_row);
                p.class_sizes.push_back(c.size / 2);
                col_rows.push_back(first);
                p.class_sizes.push_back(c.size / 2);
                col_rows.push_back(second);
            } else {
                p.class_sizes.push_back(c.size);
                col_rows.push_back(c.sumset & keep);
            }
        }
    }
    for (const Integer& s : p.class_sizes) p.class_densities.push_back(rat(s, p.group_order));
    // set stabilizers H_{i,n}: a class meets the stabilizer class exactly
    // when elements of it move some i-point set to itself
    for (long i = 1; i <= max_row; ++i) {
        DynBitset row(p.class_sizes.size());
        for (size_t col = 0; col < col_rows.size(); ++col)
            if ((col_rows[col] >> i) & 1) row.set(col);
        p.rows.push_back(std::move(row));
        p.labels.push_back("H_" + std::to_string(i));
        p.orbit_sizes.push_back(1);
    }
    if (variant == SymAltVariant::sym) {
        DynBitset row(p.class_sizes.size());
        size_t col = 0;
        for (const auto& c : all) {
            if (c.even) row.set(col);
            ++col;
        }
        p.rows.push_back(std::move(row));
        p.labels.push_back("A_n");
        p.orbit_sizes.push_back(1);
    }
    p.validate();
    return p;
}

std::pair<Rational, Rational> partial_invariants(long n, SymAltVariant variant) {
    GenerationProfile p = partial_profile(n, variant);
    std::vector<size_t> M(p.rows.size());
    for (size_t i = 0; i < M.size(); ++i) M[i] = i;
    PartialBounds b = partial_bounds(p, M, 1);
    return {b.e1, b.e2};
}

}  // namespace cheb
