#include "cheb/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace cheb {

namespace {

struct ClassRep {
    DynBitset members;
    size_t size = 0;
    std::vector<uint32_t> gens;  // element indices generating the subgroup
};

struct Saturation {
    const PermGroup* G;
    const GroupTables* T;
    uint64_t n;
    size_t lpd;  // largest proper divisor of n: any proper subgroup is at most this big
    uint64_t max_subgroups;
    std::vector<uint32_t> gen_idx;  // indices of the ambient group's generators

    std::unordered_map<DynBitset, uint32_t, DynBitsetHash> known;  // bitset -> subgroup id
    std::vector<SubgroupSet> subgroups;
    std::vector<ClassRep> reps;                    // one per conjugacy class of subgroups
    std::vector<std::vector<uint32_t>> orbit_ids;  // subgroup ids per class, parallel to reps

    uint32_t prod(uint32_t a, uint32_t b) const { return T->mult[a * n + b]; }

    // subgroup generated by gens; empty optional means "the whole group"
    // (detected early once the closure exceeds the largest proper divisor)
    bool closure(const std::vector<uint32_t>& gens, DynBitset& out, size_t& out_size) const {
        DynBitset members(n);
        members.set(0);
        std::vector<uint32_t> queue{0};
        size_t size = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            uint32_t x = queue[qi];
            for (uint32_t g : gens) {
                uint32_t y = prod(x, g);
                if (!members.test(y)) {
                    members.set(y);
                    queue.push_back(y);
                    if (++size > lpd) return false;  // must be G itself
                }
            }
        }
        out = std::move(members);
        out_size = size;
        return true;
    }

    void record(const DynBitset& members, size_t size) {
        if (subgroups.size() >= max_subgroups)
            throw Error("subgroup cap exceeded (cap=" + std::to_string(max_subgroups) + ")");
        known.emplace(members, static_cast<uint32_t>(subgroups.size()));
        subgroups.push_back(SubgroupSet{members, size});
    }

    // register a newly found subgroup class: expand its full conjugation
    // orbit, pick the lexicographically smallest member as representative,
    // and queue it for further extension. Returns false if already known.
    bool discover(const DynBitset& members, size_t size, const std::vector<uint32_t>& gens) {
        if (known.count(members)) return false;
        std::vector<std::pair<DynBitset, uint32_t>> orbit;  // (member set, conjugator)
        orbit.emplace_back(members, 0);
        std::vector<uint32_t> ids;
        record(members, size);
        ids.push_back(static_cast<uint32_t>(subgroups.size() - 1));
        size_t best = 0;
        for (size_t oi = 0; oi < orbit.size(); ++oi) {
            for (uint32_t g : gen_idx) {
                DynBitset conj(n);
                uint32_t ginv = T->inv[g];
                orbit[oi].first.for_each(
                    [&](size_t x) { conj.set(prod(prod(g, static_cast<uint32_t>(x)), ginv)); });
                if (!known.count(conj)) {
                    record(conj, size);
                    ids.push_back(static_cast<uint32_t>(subgroups.size() - 1));
                    orbit.emplace_back(std::move(conj), prod(g, orbit[oi].second));
                    if (orbit.back().first.lex_less(orbit[best].first)) best = orbit.size() - 1;
                }
            }
        }
        ClassRep rep;
        rep.members = orbit[best].first;
        rep.size = size;
        uint32_t c = orbit[best].second, cinv = T->inv[c];
        for (uint32_t g : gens) rep.gens.push_back(prod(prod(c, g), cinv));
        reps.push_back(std::move(rep));
        orbit_ids.push_back(std::move(ids));
        return true;
    }
};

}  // namespace

Lattice build_lattice(const PermGroup& G, const LatticeOptions& opt) {
    if (G.order() > opt.max_order)
        throw Error("order cap exceeded (cap=" + std::to_string(opt.max_order) + ")");
    Lattice L;
    L.G = &G;
    L.tables = build_tables(G);
    uint64_t n = G.order();

    Saturation sat;
    sat.G = &G;
    sat.T = &L.tables;
    sat.n = n;
    sat.max_subgroups = opt.max_subgroups;
    size_t spf = 2;
    while (n > 1 && n % spf != 0) ++spf;
    sat.lpd = n > 1 ? static_cast<size_t>(n / spf) : 1;
    for (const auto& g : G.generators) sat.gen_idx.push_back(G.index_of(g));

    // seed: the trivial subgroup and every cyclic subgroup <g>
    DynBitset trivial(n);
    trivial.set(0);
    sat.discover(trivial, 1, {});
    std::vector<std::pair<uint32_t, DynBitset>> cyclics;  // (generator, members)
    {
        std::unordered_map<DynBitset, bool, DynBitsetHash> seen;
        for (uint32_t e = 1; e < n; ++e) {
            DynBitset cyc(n);
            size_t size = 0;
            for (uint32_t x = 0;;) {
                cyc.set(x);
                ++size;
                x = sat.prod(x, e);
                if (x == 0) break;
            }
            if (seen.emplace(cyc, true).second) {
                sat.discover(cyc, size, {e});
                cyclics.emplace_back(e, std::move(cyc));
            }
        }
    }

    // saturate: extend every class representative by every cyclic subgroup
    for (size_t ri = 0; ri < sat.reps.size(); ++ri) {
        std::vector<uint32_t> gens = sat.reps[ri].gens;
        gens.push_back(0);  // slot for the extra generator
        DynBitset base = sat.reps[ri].members;
        for (const auto& [e, cyc] : cyclics) {
            if (base.test(e)) continue;
            gens.back() = e;
            DynBitset K;
            size_t size;
            if (sat.closure(gens, K, size)) sat.discover(K, size, gens);
        }
    }

    // the whole group completes the subgroup list
    if (n > 1) {
        DynBitset all(n);
        for (uint32_t e = 0; e < n; ++e) all.set(e);
        if (!sat.known.count(all)) sat.record(all, static_cast<size_t>(n));
    }
    L.subgroups = sat.subgroups;

    // maximal classes: class representatives with no proper subgroup strictly above
    std::vector<size_t> maximal_rep_ids;
    for (size_t ri = 0; ri < sat.reps.size(); ++ri) {
        const ClassRep& H = sat.reps[ri];
        if (H.size == n) continue;
        bool maximal = true;
        for (const auto& K : sat.subgroups) {
            if (K.size <= H.size || K.size == n) continue;
            if (K.members.contains(H.members)) { maximal = false; break; }
        }
        if (maximal) maximal_rep_ids.push_back(ri);
    }
    std::sort(maximal_rep_ids.begin(), maximal_rep_ids.end(), [&](size_t a, size_t b) {
        if (sat.reps[a].size != sat.reps[b].size) return sat.reps[a].size > sat.reps[b].size;
        return sat.reps[a].members.lex_less(sat.reps[b].members);
    });
    if (maximal_rep_ids.size() > opt.max_maximal_classes)
        throw Error("more than " + std::to_string(opt.max_maximal_classes) +
                    " maximal classes");
    for (size_t ri : maximal_rep_ids) {
        L.maximals.reps.push_back(SubgroupSet{sat.reps[ri].members, sat.reps[ri].size});
        L.maximals.class_orbit_sizes.push_back(sat.orbit_ids[ri].size());
        for (uint32_t id : sat.orbit_ids[ri])
            L.maximal_conjugates.push_back(sat.subgroups[id].members);
    }
    return L;
}

std::vector<SubgroupSet> all_subgroups(const PermGroup& G, const LatticeOptions& opt) {
    return build_lattice(G, opt).subgroups;
}

MaximalClassList maximal_classes(const PermGroup& G, const LatticeOptions& opt) {
    return build_lattice(G, opt).maximals;
}

SubgroupSet frattini_subgroup(const PermGroup& G, const LatticeOptions& opt) {
    Lattice L = build_lattice(G, opt);
    DynBitset phi(G.order());
    if (L.maximal_conjugates.empty()) {
        phi.set(0);  // trivial group
    } else {
        phi = L.maximal_conjugates[0];
        for (size_t i = 1; i < L.maximal_conjugates.size(); ++i)
            phi.and_with(L.maximal_conjugates[i]);
    }
    return SubgroupSet{phi, phi.count()};
}

GenerationProfile intersection_matrix(const PermGroup& G, const ConjugacyTable& classes,
                                      const MaximalClassList& maximals) {
    GenerationProfile p;
    p.group_order = Integer(static_cast<unsigned long>(G.order()));
    for (uint64_t s : classes.class_sizes) {
        p.class_sizes.push_back(Integer(static_cast<unsigned long>(s)));
        p.class_densities.push_back(rat(p.class_sizes.back(), p.group_order));
    }
    for (size_t k = 0; k < maximals.reps.size(); ++k) {
        DynBitset row(classes.count());
        maximals.reps[k].members.for_each([&](size_t e) { row.set(classes.class_of[e]); });
        p.rows.push_back(std::move(row));
        p.labels.push_back("M" + std::to_string(k) + ":order=" +
                           std::to_string(maximals.reps[k].size));
        p.orbit_sizes.push_back(
            Integer(static_cast<unsigned long>(maximals.class_orbit_sizes[k])));
    }
    p.validate();
    return p;
}

GenerationProfile group_profile(const PermGroup& G, const LatticeOptions& opt) {
    ConjugacyTable classes = conjugacy_classes(G);
    Lattice L = build_lattice(G, opt);
    return intersection_matrix(G, classes, L.maximals);
}

}  // namespace cheb
