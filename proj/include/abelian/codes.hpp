#pragma once

#include <cstdint>
#include <vector>

#include "abelian/apparent.hpp"
#include "abelian/gfield.hpp"
#include "abelian/orbits.hpp"
#include "abelian/transform.hpp"

namespace abelian {

// alpha_k = primitive_root(ctx, r_k)^{u_k}
struct RootSelection {
    std::vector<int> u;
    bool operator==(const RootSelection& o) const { return u == o.u; }
};

RootSelection default_roots(const std::vector<int>& dims);
std::vector<FieldElement> select_roots(const FieldCtx& ctx, const std::vector<int>& dims, const RootSelection& sel);

class AbelianCode {
public:
    AbelianCode() = default;
    AbelianCode(FieldPtr ctx, OrbitSet D, RootSelection roots);
    // builds the field context from (p, m, dims)
    static AbelianCode make(int p, int m, const std::vector<int>& dims, const std::vector<MultiIndex>& defining_reps,
                            RootSelection roots = {});

    const FieldPtr& ctx() const { return ctx_; }
    const std::vector<int>& dims() const { return D_.dims(); }
    std::uint64_t q() const { return D_.q(); }
    const OrbitSet& defining_set() const { return D_; }
    const RootSelection& roots() const { return roots_; }
    std::vector<FieldElement> root_elements() const { return select_roots(*ctx_, dims(), roots_); }
    AbelianCode with_defining_set(OrbitSet D) const { return AbelianCode(ctx_, std::move(D), roots_); }

private:
    FieldPtr ctx_;
    OrbitSet D_;
    RootSelection roots_;
};

std::size_t dimension(const AbelianCode& C);
// {i : f(alpha^i) = 0}
OrbitSet defining_set_of(const MultiPoly& f, const std::vector<FieldElement>& roots);
// defining set of the same code seen at other roots
OrbitSet rescale_defining_set(const AbelianCode& C, const RootSelection& new_roots);

int code_apparent_at(const AbelianCode& C, const BoundSet& B);
int code_apparent_at(const AbelianCode& C, const RootSelection& at, const BoundSet& B);

struct CodeApparent {
    int value = 0;
    RootSelection best;
    std::size_t scanned = 0;
};

// max over U; by default one tuple per Galois class u ~ q u
CodeApparent code_apparent(const AbelianCode& C, const BoundSet& B, bool full_scan = false);
// representatives of U modulo u ~ q u (each the least tuple of its class)
std::vector<RootSelection> galois_representatives(const std::vector<int>& dims, std::uint64_t q);

}  // namespace abelian
