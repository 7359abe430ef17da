#pragma once

#include <cstdint>
#include <vector>

#include "abelian/gfield.hpp"
#include "abelian/orbits.hpp"

namespace abelian {

// Element of L(r_1,...,r_s): dense coefficients over the index box, reduced mod X_k^{r_k}-1.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(FieldPtr ctx, std::vector<int> dims);

    static MultiPoly monomial(FieldPtr ctx, std::vector<int> dims, const MultiIndex& e, std::uint32_t c = 1);
    static MultiPoly constant(FieldPtr ctx, std::vector<int> dims, std::uint32_t c);

    const FieldPtr& ctx() const { return ctx_; }
    const Box& box() const { return box_; }
    const std::vector<int>& dims() const { return box_.dims(); }
    int rank() const { return box_.rank(); }

    std::uint32_t operator[](std::size_t lin) const { return c_[lin]; }
    std::uint32_t& operator[](std::size_t lin) { return c_[lin]; }
    std::uint32_t at(const MultiIndex& i) const { return c_[box_.index(i)]; }
    void set(const MultiIndex& i, std::uint32_t v) { c_[box_.index(i)] = v; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    std::vector<std::uint32_t>& coeffs() { return c_; }

    bool is_zero() const;
    std::size_t weight() const;
    std::vector<std::uint8_t> support() const;
    bool base_field_coeffs() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(std::uint32_t c) const;
    // multiplication by a monomial X^h (cyclic shift)
    MultiPoly shifted(const MultiIndex& h) const;
    bool operator==(const MultiPoly& o) const;

private:
    void check_same(const MultiPoly& o) const;
    FieldPtr ctx_;
    Box box_;
    std::vector<std::uint32_t> c_;
};

MultiPoly mul(const MultiPoly& f, const MultiPoly& g);
// coordinatewise product in L^{|I|}
MultiPoly star(const MultiPoly& f, const MultiPoly& g);

// each root must have multiplicative order exactly r_k
void check_roots(const FieldCtx& ctx, const std::vector<int>& dims, const std::vector<FieldElement>& roots);
// phi(f)_j = f(alpha^j)
MultiPoly dft(const MultiPoly& f, const std::vector<FieldElement>& roots);
// (1/prod r_k) sum_j g(alpha^{-j}) X^j
MultiPoly idft(const MultiPoly& g, const std::vector<FieldElement>& roots);
FieldElement eval(const MultiPoly& f, const std::vector<FieldElement>& point);
// |Zbar(f)| = weight(idft(f))
std::size_t nonzero_root_count(const MultiPoly& f, const std::vector<FieldElement>& roots);

// Genuine univariate polynomial over L, lowest degree first, no trailing zeros.
struct Poly {
    FieldPtr ctx;
    std::vector<std::uint32_t> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim();
    bool operator==(const Poly& o) const { return c == o.c; }
};

Poly poly_from(FieldPtr ctx, std::vector<std::uint32_t> c);
Poly x_pow_minus_one(FieldPtr ctx, int n);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
// quotient and remainder
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_monic(const Poly& a);
FieldElement poly_eval(const Poly& a, const FieldElement& x);

// degree < r representative of a univariate residue
Poly lift(const MultiPoly& f);
MultiPoly reduce(const Poly& a, int r);
// monic gcd of genuine polynomials
Poly gcd_1var(const Poly& f, const Poly& g);
bool divides_1var(const Poly& f, const Poly& g);

}  // namespace abelian
