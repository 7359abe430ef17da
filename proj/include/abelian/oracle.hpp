#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "abelian/codes.hpp"
#include "abelian/transform.hpp"

namespace abelian {

struct GeneratorBasis {
    std::size_t k = 0;
    std::vector<MultiPoly> basis;
};

// basis over F_q of {f in F_q(r) : f(alpha^i) = 0 for i in D}, built by direct evaluation
GeneratorBasis generator_basis(const AbelianCode& C);

struct MinDistance {
    int d = 0;  // 0 for the zero code
    std::uint64_t codewords = 0;
    MultiPoly witness;
};

// default cap: k <= 22 for q = 2, q^k <= 2^22 otherwise
MinDistance min_distance_bruteforce(const AbelianCode& C, int cap_k = -1, int threads = 0);
MinDistance min_distance_bruteforce(const GeneratorBasis& G, std::uint64_t q, int cap_k = -1, int threads = 0);

// min weight over random codewords and any supplied codewords; nullopt for the zero code
std::optional<int> weight_upper_bound(const AbelianCode& C, int trials, std::uint64_t seed,
                                      const std::vector<MultiPoly>& known = {});

// F_q-span membership by elimination
bool in_span(const GeneratorBasis& G, const MultiPoly& f);

}  // namespace abelian
