#pragma once

#include <cstdint>
#include <vector>

namespace cheb {

bool is_prime(long n);
// prime factorization as (prime, exponent) pairs, ascending
std::vector<std::pair<long, int>> factorize(long n);
// 0 if n is not squarefree, else (-1)^{number of prime factors}
int mobius(long n);
std::vector<long> divisors(long n);            // ascending
std::vector<long> squarefree_divisors(long n); // ascending, includes 1
// if n = p^k for a prime p returns (p, k), else (0, 0)
std::pair<long, int> prime_power_base(long n);

}  // namespace cheb
