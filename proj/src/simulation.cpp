#include "cheb/simulation.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace cheb {

namespace {

uint64_t avalanche(uint64_t x) {  // splitmix64 finalizer
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

}  // namespace

uint64_t rng_u64(uint64_t seed, uint64_t trial, uint64_t draw) {
    uint64_t h = avalanche(seed ^ 0x9e3779b97f4a7c15ull);
    h = avalanche(h + 0x9e3779b97f4a7c15ull * trial);
    h = avalanche(h + 0xc2b2ae3d27d4eb4full * draw);
    return h;
}

uint64_t rng_index(uint64_t r, uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(r) * n) >> 64);
}

Histogram empirical_chebotarev(const PermGroup& G, const GenerationProfile& profile,
                               const SimConfig& cfg) {
    cfg.validate();
    profile.validate();
    if (profile.rows.empty())
        throw Error("trivial profile: there is no waiting time to sample");
    ConjugacyTable classes = conjugacy_classes(G);
    if (classes.count() != profile.columns())
        throw Error("profile columns do not match the group's conjugacy classes");

    // per conjugacy class, the mask of maximal rows that contain it
    std::vector<uint32_t> keep(profile.columns(), 0);
    for (size_t k = 0; k < profile.rows.size(); ++k)
        profile.rows[k].for_each([&](size_t c) { keep[c] |= 1u << k; });
    uint32_t all_rows = profile.rows.size() == 32 ? ~0u : (1u << profile.rows.size()) - 1;

    Histogram h;
    h.trials = cfg.trials;
    uint64_t order = G.order();
    Integer sum1 = 0, sum2 = 0;
    for (uint64_t trial = 0; trial < cfg.trials; ++trial) {
        uint32_t alive = all_rows;
        uint64_t draws = 0;
        while (alive) {
            uint64_t e = rng_index(rng_u64(cfg.seed, trial, draws), order);
            alive &= keep[classes.class_of[e]];
            ++draws;
        }
        ++h.counts[draws];
        sum1 += draws;
        sum2 += Integer(draws) * draws;
    }
    h.mean = rat(sum1, Integer(cfg.trials));
    h.second_moment = rat(sum2, Integer(cfg.trials));
    return h;
}

std::string empirical_distribution_csv(const Histogram& h) {
    std::ostringstream out;
    out << "k,count,frequency\n";
    for (const auto& [k, cnt] : h.counts)
        out << k << ',' << cnt << ',' << decimal_string(rat(Integer(cnt), Integer(h.trials)), 6)
            << '\n';
    return out.str();
}

namespace {

// Poisson(lambda) by CDF inversion; lambda <= 1 so the loop is short.
uint64_t poisson_inverse(double lambda, uint64_t r) {
    double u = static_cast<double>(r >> 11) * 0x1.0p-53;
    double p = std::exp(-lambda), cum = p;
    uint64_t k = 0;
    while (u >= cum && k < 400) {
        ++k;
        p *= lambda / static_cast<double>(k);
        cum += p;
    }
    return k;
}

}  // namespace

PoissonEstimate poisson_model_estimate(const SimConfig& cfg) {
    cfg.validate();
    size_t words = static_cast<size_t>(cfg.B) / 64 + 1;
    double sum1 = 0, sum2 = 0;
    constexpr uint64_t kDrawCap = 1000000;
    for (uint64_t trial = 0; trial < cfg.trials; ++trial) {
        // bits 1..B of the running intersection of positive-subsum sets
        std::vector<uint64_t> inter(words, ~0ull);
        inter[0] &= ~1ull;
        if (cfg.B + 1 < static_cast<long>(words * 64))
            inter[words - 1] &= (1ull << ((cfg.B + 1) & 63)) - 1;
        uint64_t draw_counter = 0, tau = 0;
        for (uint64_t k = 1; k <= kDrawCap; ++k) {
            std::vector<uint64_t> sums(words, 0);
            sums[0] = 1;  // empty sum
            for (long i = 1; i <= cfg.L; ++i) {
                uint64_t reps = poisson_inverse(1.0 / static_cast<double>(i),
                                                rng_u64(cfg.seed, trial, draw_counter++));
                size_t word_shift = static_cast<size_t>(i) / 64;
                unsigned bit_shift = static_cast<unsigned>(i % 64);
                for (uint64_t rep = 0; rep < reps; ++rep) {
                    // sums |= sums << i (bits above B are masked out by inter)
                    for (size_t w = words; w-- > 0;) {
                        uint64_t src = sums[w];
                        if (!src) continue;
                        size_t lo = w + word_shift;
                        if (bit_shift == 0) {
                            if (lo < words) sums[lo] |= src;
                        } else {
                            if (lo < words) sums[lo] |= src << bit_shift;
                            if (lo + 1 < words) sums[lo + 1] |= src >> (64 - bit_shift);
                        }
                    }
                }
            }
            sums[0] &= ~1ull;  // positive sums only
            bool empty = true;
            for (size_t w = 0; w < words; ++w) {
                inter[w] &= sums[w];
                if (inter[w]) empty = false;
            }
            if (empty) {
                tau = k;
                break;
            }
        }
        if (tau == 0) throw Error("poisson model trial did not terminate");
        sum1 += static_cast<double>(tau);
        sum2 += static_cast<double>(tau) * static_cast<double>(tau);
    }
    PoissonEstimate est;
    est.trials = cfg.trials;
    est.mean = sum1 / static_cast<double>(cfg.trials);
    double var = (sum2 / static_cast<double>(cfg.trials) - est.mean * est.mean) /
                 static_cast<double>(cfg.trials);
    est.stderr_ = std::sqrt(var > 0 ? var : 0);
    return est;
}

}  // namespace cheb
