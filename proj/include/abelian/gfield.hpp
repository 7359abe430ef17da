#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace abelian {

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

// An element of L bound to its context. Arithmetic between elements of
// different contexts throws.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const FieldCtx* ctx, std::uint32_t v) : ctx_(ctx), v_(v) {}

    const FieldCtx* ctx() const { return ctx_; }
    std::uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::int64_t e) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    const FieldCtx* check(const FieldElement& o) const;
    const FieldCtx* ctx_ = nullptr;
    std::uint32_t v_ = 0;
};

// GF(p^(m t)) built over the least irreducible polynomial of degree m t.
// Raw values encode coefficient vectors as sum c_i p^i.
class FieldCtx {
public:
    static FieldPtr make(int p, int m, const std::vector<int>& lengths);

    int p() const { return p_; }
    int m() const { return m_; }
    int t() const { return t_; }
    int degree() const { return m_ * t_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t size() const { return size_; }
    const std::vector<int>& lengths() const { return lengths_; }
    // coefficients, lowest degree first, monic, length degree()+1
    const std::vector<int>& modulus() const { return modulus_; }
    std::uint32_t generator() const { return gen_; }
    bool has_tables() const { return !log_.empty(); }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t frobenius(std::uint32_t a) const { return pow(a, q_); }
    // image of an integer in the prime field
    std::uint32_t from_int(std::int64_t n) const;
    bool in_base(std::uint32_t a) const { return frobenius(a) == a; }
    std::uint64_t order(std::uint32_t a) const;

    FieldElement elem(std::uint32_t v) const;
    FieldElement zero() const { return elem(0); }
    FieldElement one() const { return elem(1); }

    // g^((|L|-1)/r); throws unless r divides |L|-1
    FieldElement primitive_root(std::uint64_t r) const;
    // the q elements of F_q, ascending by raw value
    std::vector<std::uint32_t> base_field() const;

    std::string describe() const;

private:
    FieldCtx() = default;
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

    int p_ = 2, m_ = 1, t_ = 1;
    std::uint64_t q_ = 2, size_ = 2;
    std::vector<int> lengths_;
    std::vector<int> modulus_;
    std::vector<std::uint64_t> ppow_;
    std::uint32_t gen_ = 1;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

FieldPtr make_context(int p, int m, const std::vector<int>& lengths);
FieldElement primitive_root(const FieldCtx& ctx, std::uint64_t r);
bool in_base_field(const FieldCtx& ctx, const FieldElement& x);

// Rabin irreducibility test for a monic polynomial over F_p (coefficients low first)
bool is_irreducible_fp(const std::vector<int>& f, int p);

}  // namespace abelian
