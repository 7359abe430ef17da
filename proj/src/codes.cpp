#include "abelian/codes.hpp"

#include <stdexcept>
#include <string>

#include "abelian/numtheory.hpp"

namespace abelian {

RootSelection default_roots(const std::vector<int>& dims) { return RootSelection{std::vector<int>(dims.size(), 1)}; }

std::vector<FieldElement> select_roots(const FieldCtx& ctx, const std::vector<int>& dims, const RootSelection& sel) {
    if (sel.u.size() != dims.size()) throw std::invalid_argument("root selection rank does not match dims");
    std::vector<FieldElement> out;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const int r = dims[k];
        const auto u = static_cast<std::uint64_t>(nt::mod(sel.u[k], r));
        if (r > 1 && nt::gcd(u, static_cast<std::uint64_t>(r)) != 1)
            throw std::invalid_argument("root exponent " + std::to_string(sel.u[k]) + " is not a unit modulo " +
                                        std::to_string(r));
        out.push_back(ctx.primitive_root(static_cast<std::uint64_t>(r)).pow(static_cast<std::int64_t>(u)));
    }
    return out;
}

AbelianCode::AbelianCode(FieldPtr ctx, OrbitSet D, RootSelection roots)
    : ctx_(std::move(ctx)), D_(std::move(D)), roots_(std::move(roots)) {
    if (!ctx_) throw std::invalid_argument("null field context");
    if (roots_.u.empty()) roots_ = default_roots(D_.dims());
    if (D_.q() != ctx_->q()) throw std::invalid_argument("defining set q differs from the field's q");
    select_roots(*ctx_, D_.dims(), roots_);
}

AbelianCode AbelianCode::make(int p, int m, const std::vector<int>& dims, const std::vector<MultiIndex>& reps,
                              RootSelection roots) {
    auto ctx = make_context(p, m, dims);
    return AbelianCode(ctx, orbits_from_reps(reps, ctx->q(), dims), std::move(roots));
}

std::size_t dimension(const AbelianCode& C) { return C.defining_set().box().size() - C.defining_set().size(); }

OrbitSet defining_set_of(const MultiPoly& f, const std::vector<FieldElement>& roots) {
    if (!f.base_field_coeffs()) throw std::invalid_argument("polynomial has coefficients outside the base field");
    const MultiPoly F = dft(f, roots);
    std::vector<std::uint8_t> mask(F.box().size());
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = F[i] == 0;
    if (!is_orbit_union(mask, f.ctx()->q(), f.dims())) throw std::logic_error("zero set is not a union of q-orbits");
    return OrbitSet::from_mask(f.dims(), f.ctx()->q(), std::move(mask));
}

OrbitSet rescale_defining_set(const AbelianCode& C, const RootSelection& nr) {
    const auto& dims = C.dims();
    if (nr.u.size() != dims.size()) throw std::invalid_argument("root selection rank does not match dims");
    // beta_k = alpha_k^{v_k}, v_k = u'_k / u_k; D_beta = v^{-1} D_alpha
    std::vector<std::int64_t> scale(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const int r = dims[k];
        if (r == 1) {
            scale[k] = 0;
            continue;
        }
        const std::int64_t v = nt::mod(static_cast<std::int64_t>(nr.u[k]) * nt::inv_mod(C.roots().u[k], r), r);
        scale[k] = nt::inv_mod(v, r);
    }
    const OrbitSet& D = C.defining_set();
    std::vector<std::uint8_t> mask(D.box().size(), 0);
    for (auto i : D.members()) mask[D.box().scale(i, scale)] = 1;
    return OrbitSet::from_mask(dims, D.q(), std::move(mask));
}

int code_apparent_at(const AbelianCode& C, const BoundSet& B) {
    const OrbitSet& D = C.defining_set();
    if (D.size() == D.box().size()) return 0;
    return bmad(afforded(D), B).result;
}

int code_apparent_at(const AbelianCode& C, const RootSelection& at, const BoundSet& B) {
    return code_apparent_at(C.with_defining_set(rescale_defining_set(C, at)), B);
}

namespace {

std::vector<std::vector<int>> unit_lists(const std::vector<int>& dims) {
    std::vector<std::vector<int>> out;
    for (int r : dims) {
        std::vector<int> u;
        if (r == 1) u.push_back(1);
        for (int x = 1; x < r; ++x)
            if (nt::gcd(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(r)) == 1) u.push_back(x);
        out.push_back(u);
    }
    return out;
}

std::vector<RootSelection> all_tuples(const std::vector<int>& dims) {
    const auto units = unit_lists(dims);
    std::vector<RootSelection> out{RootSelection{}};
    for (const auto& u : units) {
        std::vector<RootSelection> next;
        for (const auto& t : out)
            for (int x : u) {
                auto s = t;
                s.u.push_back(x);
                next.push_back(s);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

std::vector<RootSelection> galois_representatives(const std::vector<int>& dims, std::uint64_t q) {
    std::vector<RootSelection> out;
    for (const auto& t : all_tuples(dims)) {
        bool least = true;
        auto cur = t.u;
        while (true) {
            for (std::size_t k = 0; k < dims.size(); ++k)
                if (dims[k] > 1) cur[k] = static_cast<int>(nt::mod(static_cast<std::int64_t>(cur[k]) * static_cast<std::int64_t>(q % dims[k]), dims[k]));
            if (cur == t.u) break;
            if (cur < t.u) {
                least = false;
                break;
            }
        }
        if (least) out.push_back(t);
    }
    return out;
}

CodeApparent code_apparent(const AbelianCode& C, const BoundSet& B, bool full_scan) {
    CodeApparent res;
    const auto cands = full_scan ? all_tuples(C.dims()) : galois_representatives(C.dims(), C.q());
    bool first = true;
    for (const auto& u : cands) {
        const int v = code_apparent_at(C, u, B);
        ++res.scanned;
        if (first || v > res.value) {
            res.value = v;
            res.best = u;
            first = false;
        }
    }
    return res;
}

}  // namespace abelian
