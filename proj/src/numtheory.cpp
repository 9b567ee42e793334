#include "cheb/numtheory.hpp"

#include <algorithm>

#include "cheb/rational.hpp"

namespace cheb {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw Error("factorize needs n >= 1");
    std::vector<std::pair<long, int>> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int mobius(long n) {
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::vector<long> divisors(long n) {
    std::vector<long> out{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = out.size();
        long pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> squarefree_divisors(long n) {
    std::vector<long> out{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = out.size();
        for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<long, int> prime_power_base(long n) {
    auto f = factorize(n);
    if (f.size() != 1) return {0, 0};
    return f[0];
}

}  // namespace cheb
