#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelian/apparent.hpp"
#include "abelian/codes.hpp"
#include "abelian/transform.hpp"

namespace abelian {

struct FactorAnalysis {
    bool holds = false;
    ApparentReport report;
    int delta1 = 0, delta2 = 0, delta = 0;
    std::size_t zbar = 0;  // |Zbar(g)|
    std::vector<int> M1, M2;  // involved levels on each axis
};

// Delta_1(M) = Delta_2(M) = Delta(M) = |Zbar(g)| for M = M(g); B is BCH-only by default
FactorAnalysis check_condition_imposed(const MultiPoly& g, const std::vector<FieldElement>& roots,
                                       const BoundSet& B = BoundSet());

struct AbF {
    Poly a, b;    // monic, a in X1, b in X2
    MultiPoly F;  // true bivariate polynomial, degrees below (r1, r2)
};

AbF factor_abF(const MultiPoly& g, const FactorAnalysis& analysis);
// a(X1) b(X2) F(X1,X2) as a true polynomial compared with the degree-< r lift of g
bool abF_matches(const AbF& f, const MultiPoly& g);

// projections when supp(M) = pi_1 x pi_2
std::optional<std::pair<IndexMask, IndexMask>> is_cp_matrix(const SupportHypermatrix& M);

// least h with lift(X^h a) | X^r - 1
std::optional<int> divisor_shift(const MultiPoly& a);
// least h with every (X^h a)(alpha^i) in F_q
std::optional<int> rational_shift(const MultiPoly& a, const FieldElement& alpha);

struct Certificate {
    int guaranteed_d = 0;
    std::size_t witness_weight = 0;
    int bmad = 0;
    int apparent = 0;  // Delta(M(ab))
    bool certified = false;
};

struct Construction {
    AbelianCode code;
    MultiPoly witness;  // idft(X1^h1 a * X2^h2 b)
    MultiPoly dft_pattern;  // X1^h1 a * X2^h2 b
    int h1 = 0, h2 = 0;
    Certificate cert;
};

// a, b are univariate residues in L(r1), L(r2); shifts default to rational_shift
Construction construct_true_distance_code(const MultiPoly& a, const MultiPoly& b, const FieldPtr& ctx,
                                          const RootSelection& roots, std::optional<int> h1 = std::nullopt,
                                          std::optional<int> h2 = std::nullopt);
// the bivariate polynomial a(X1) b(X2) in L(r1, r2)
MultiPoly outer_product(const MultiPoly& a, const MultiPoly& b);

struct Verdict {
    bool proven = false;
    int d = 0;
    MadTrace trace;
    SupportHypermatrix witness;  // the P found
    std::size_t examined = 0;
};

Verdict verify_true_distance(const AbelianCode& C, const BoundSet& B = BoundSet(), std::size_t orbit_cap = 20);

AbelianCode prune_defining_set(const AbelianCode& C, const MultiPoly& witness, const BoundSet& B = BoundSet());

struct BchSpec {
    std::vector<int> gamma;  // 1-based axes
    std::vector<int> delta;
    std::vector<int> b;
    bool operator==(const BchSpec& o) const { return gamma == o.gamma && delta == o.delta && b == o.b; }
};

OrbitSet bch_defining_set(const BchSpec& spec, std::uint64_t q, const std::vector<int>& dims);
std::optional<BchSpec> recognize_bivariate_bch(const AbelianCode& C);

// a cyclic defining set as a single run closure: maximal delta, least b
std::optional<std::pair<int, int>> recognize_cyclic_bch(const IndexMask& D, std::uint64_t q);

struct ProductCheck {
    int delta = 0, delta1 = 0, delta2 = 0;
    int bmad = 0;
    bool product_holds = false;
    bool bmad_equals_apparent = false;
};

ProductCheck product_apparent_check(const AbelianCode& C, const BoundSet& B = BoundSet());

// BCH spec enlarging the code built from (a, h1), (b, h2)
BchSpec bch_spec_from_factors(const MultiPoly& a, int h1, const MultiPoly& b, int h2);

}  // namespace abelian
