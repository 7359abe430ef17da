#pragma once

#include <cstdint>
#include <vector>

namespace abelian::nt {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);
bool is_prime(std::uint64_t n);
// distinct prime factors, ascending
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
// least k > 0 with q^k = 1 mod r; requires gcd(q, r) = 1; returns 1 for r = 1
std::uint64_t mult_order(std::uint64_t q, std::uint64_t r);
std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m);
// inverse of a mod m, throws if not a unit
std::int64_t inv_mod(std::int64_t a, std::int64_t m);
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace abelian::nt
