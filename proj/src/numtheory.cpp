#include "abelian/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace abelian::nt {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * b;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1 % m, x = b % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mult_order(std::uint64_t q, std::uint64_t r) {
    if (r == 1) return 1;
    if (gcd(q % r, r) != 1)
        throw std::invalid_argument("mult_order: " + std::to_string(q) + " is not a unit mod " + std::to_string(r));
    std::uint64_t x = q % r, k = 1;
    while (x != 1) {
        x = static_cast<std::uint64_t>((unsigned __int128)x * q % r);
        ++k;
    }
    return k;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, b = mod(a, m);
    if (m == 1) return 0;
    while (b) {
        std::int64_t t = g / b;
        std::int64_t r = g - t * b;
        g = b;
        b = r;
        std::int64_t nx = x - t * x1;
        x = x1;
        x1 = nx;
    }
    if (g != 1) throw std::invalid_argument("inv_mod: " + std::to_string(a) + " not invertible mod " + std::to_string(m));
    return mod(x, m);
}

}  // namespace abelian::nt
