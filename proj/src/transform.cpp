#include "abelian/transform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace abelian {

MultiPoly::MultiPoly(FieldPtr ctx, std::vector<int> dims) : ctx_(std::move(ctx)), box_(std::move(dims)) {
    if (!ctx_) throw std::invalid_argument("null field context");
    c_.assign(box_.size(), 0);
}

MultiPoly MultiPoly::monomial(FieldPtr ctx, std::vector<int> dims, const MultiIndex& e, std::uint32_t c) {
    MultiPoly f(std::move(ctx), std::move(dims));
    MultiIndex r(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) r[k] = ((e[k] % f.dims()[k]) + f.dims()[k]) % f.dims()[k];
    f.set(r, c);
    return f;
}

MultiPoly MultiPoly::constant(FieldPtr ctx, std::vector<int> dims, std::uint32_t c) {
    MultiPoly f(std::move(ctx), std::move(dims));
    f.c_[0] = c;
    return f;
}

bool MultiPoly::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

std::size_t MultiPoly::weight() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](std::uint32_t v) { return v != 0; }));
}

std::vector<std::uint8_t> MultiPoly::support() const {
    std::vector<std::uint8_t> s(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) s[i] = c_[i] != 0;
    return s;
}

bool MultiPoly::base_field_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [&](std::uint32_t v) { return ctx_->in_base(v); });
}

void MultiPoly::check_same(const MultiPoly& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("polynomials over different field contexts");
    if (!(box_ == o.box_)) throw std::invalid_argument("polynomials over different index boxes");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same(o);
    MultiPoly r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = ctx_->add(c_[i], o.c_[i]);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_same(o);
    MultiPoly r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = ctx_->sub(c_[i], o.c_[i]);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const { return mul(*this, o); }

MultiPoly MultiPoly::scaled(std::uint32_t c) const {
    MultiPoly r = *this;
    for (auto& v : r.c_) v = ctx_->mul(v, c);
    return r;
}

MultiPoly MultiPoly::shifted(const MultiIndex& h) const {
    MultiPoly r(ctx_, dims());
    const int s = rank();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        std::size_t j = 0;
        for (int k = 0; k < s; ++k) {
            const int r_k = dims()[k];
            const int x = (box_.coord(i, k) + (h[k] % r_k) + r_k) % r_k;
            j += static_cast<std::size_t>(x) * box_.stride(k);
        }
        r.c_[j] = c_[i];
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const { return ctx_ == o.ctx_ && box_ == o.box_ && c_ == o.c_; }

MultiPoly mul(const MultiPoly& f, const MultiPoly& g) {
    if (f.ctx() != g.ctx() || !(f.box() == g.box())) throw std::invalid_argument("mul: incompatible operands");
    const auto& ctx = *f.ctx();
    const Box& box = f.box();
    const int s = box.rank();
    MultiPoly r(f.ctx(), f.dims());
    std::vector<std::size_t> gs;
    for (std::size_t j = 0; j < box.size(); ++j)
        if (g[j]) gs.push_back(j);
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (!f[i]) continue;
        for (std::size_t j : gs) {
            std::size_t t = 0;
            for (int k = 0; k < s; ++k)
                t += static_cast<std::size_t>((box.coord(i, k) + box.coord(j, k)) % box.dims()[k]) * box.stride(k);
            r[t] = ctx.add(r[t], ctx.mul(f[i], g[j]));
        }
    }
    return r;
}

MultiPoly star(const MultiPoly& f, const MultiPoly& g) {
    if (f.ctx() != g.ctx() || !(f.box() == g.box())) throw std::invalid_argument("star: incompatible operands");
    MultiPoly r(f.ctx(), f.dims());
    for (std::size_t i = 0; i < f.box().size(); ++i) r[i] = f.ctx()->mul(f[i], g[i]);
    return r;
}

void check_roots(const FieldCtx& ctx, const std::vector<int>& dims, const std::vector<FieldElement>& roots) {
    if (roots.size() != dims.size()) throw std::invalid_argument("need one root per axis");
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (roots[k].ctx() != &ctx) throw std::invalid_argument("root from a different field context");
        if (roots[k].is_zero() || ctx.order(roots[k].value()) != static_cast<std::uint64_t>(dims[k]))
            throw std::invalid_argument("root for axis " + std::to_string(k + 1) + " does not have order " +
                                        std::to_string(dims[k]));
    }
}

namespace {

// separable transform: along each axis, out_j = sum_i in_i w_k^{i j}
MultiPoly axis_transform(const MultiPoly& f, const std::vector<std::uint32_t>& w) {
    const auto& ctx = *f.ctx();
    const Box& box = f.box();
    std::vector<std::uint32_t> cur = f.coeffs(), nxt(cur.size());
    for (int k = 0; k < box.rank(); ++k) {
        const int r = box.dims()[k];
        const std::size_t st = box.stride(k);
        std::vector<std::uint32_t> pw(r);
        pw[0] = 1;
        for (int e = 1; e < r; ++e) pw[e] = ctx.mul(pw[e - 1], w[k]);
        std::fill(nxt.begin(), nxt.end(), 0);
        for (std::size_t base = 0; base < box.size(); ++base) {
            if (box.coord(base, k) != 0) continue;
            for (int j = 0; j < r; ++j) {
                std::uint32_t acc = 0;
                for (int i = 0; i < r; ++i) {
                    const std::uint32_t v = cur[base + static_cast<std::size_t>(i) * st];
                    if (v) acc = ctx.add(acc, ctx.mul(v, pw[(static_cast<long>(i) * j) % r]));
                }
                nxt[base + static_cast<std::size_t>(j) * st] = acc;
            }
        }
        std::swap(cur, nxt);
    }
    MultiPoly out(f.ctx(), f.dims());
    out.coeffs() = std::move(cur);
    return out;
}

}  // namespace

MultiPoly dft(const MultiPoly& f, const std::vector<FieldElement>& roots) {
    check_roots(*f.ctx(), f.dims(), roots);
    std::vector<std::uint32_t> w;
    for (const auto& a : roots) w.push_back(a.value());
    return axis_transform(f, w);
}

MultiPoly idft(const MultiPoly& g, const std::vector<FieldElement>& roots) {
    const auto& ctx = *g.ctx();
    check_roots(ctx, g.dims(), roots);
    std::vector<std::uint32_t> w;
    std::int64_t n = 1;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        w.push_back(ctx.inv(roots[k].value()));
        n = n * g.dims()[k] % ctx.p();
    }
    return axis_transform(g, w).scaled(ctx.inv(ctx.from_int(n)));
}

FieldElement eval(const MultiPoly& f, const std::vector<FieldElement>& point) {
    const auto& ctx = *f.ctx();
    if (point.size() != static_cast<std::size_t>(f.rank())) throw std::invalid_argument("eval: point rank mismatch");
    for (const auto& x : point)
        if (x.ctx() != &ctx) throw std::invalid_argument("eval: point from a different field context");
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < f.box().size(); ++i) {
        if (!f[i]) continue;
        std::uint32_t term = f[i];
        for (int k = 0; k < f.rank(); ++k)
            term = ctx.mul(term, ctx.pow(point[k].value(), static_cast<std::uint64_t>(f.box().coord(i, k))));
        acc = ctx.add(acc, term);
    }
    return ctx.elem(acc);
}

std::size_t nonzero_root_count(const MultiPoly& f, const std::vector<FieldElement>& roots) {
    return idft(f, roots).weight();
}

void Poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly poly_from(FieldPtr ctx, std::vector<std::uint32_t> c) {
    Poly p{std::move(ctx), std::move(c)};
    p.trim();
    return p;
}

Poly x_pow_minus_one(FieldPtr ctx, int n) {
    std::vector<std::uint32_t> c(n + 1, 0);
    c[0] = ctx->neg(1);
    c[n] = ctx->add(c[n], 1);
    return poly_from(std::move(ctx), std::move(c));
}

Poly poly_add(const Poly& a, const Poly& b) {
    std::vector<std::uint32_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::uint32_t x = i < a.c.size() ? a.c[i] : 0, y = i < b.c.size() ? b.c[i] : 0;
        c[i] = a.ctx->add(x, y);
    }
    return poly_from(a.ctx, std::move(c));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    std::vector<std::uint32_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::uint32_t x = i < a.c.size() ? a.c[i] : 0, y = i < b.c.size() ? b.c[i] : 0;
        c[i] = a.ctx->sub(x, y);
    }
    return poly_from(a.ctx, std::move(c));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{a.ctx, {}};
    std::vector<std::uint32_t> c(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] = a.ctx->add(c[i + j], a.ctx->mul(a.c[i], b.c[j]));
    }
    return poly_from(a.ctx, std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const auto& ctx = *a.ctx;
    Poly r = a;
    r.trim();
    const int db = b.degree();
    if (r.degree() < db) return {Poly{a.ctx, {}}, r};
    std::vector<std::uint32_t> qc(r.degree() - db + 1, 0);
    const std::uint32_t li = ctx.inv(b.c.back());
    while (!r.is_zero() && r.degree() >= db) {
        const int sh = r.degree() - db;
        const std::uint32_t f = ctx.mul(r.c.back(), li);
        qc[sh] = f;
        for (int i = 0; i <= db; ++i) r.c[i + sh] = ctx.sub(r.c[i + sh], ctx.mul(f, b.c[i]));
        r.trim();
    }
    return {poly_from(a.ctx, std::move(qc)), r};
}

Poly poly_monic(const Poly& a) {
    if (a.is_zero()) return a;
    Poly r = a;
    const std::uint32_t li = a.ctx->inv(a.c.back());
    for (auto& v : r.c) v = a.ctx->mul(v, li);
    return r;
}

FieldElement poly_eval(const Poly& a, const FieldElement& x) {
    const auto& ctx = *a.ctx;
    std::uint32_t acc = 0;
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = ctx.add(ctx.mul(acc, x.value()), *it);
    return ctx.elem(acc);
}

Poly lift(const MultiPoly& f) {
    if (f.rank() != 1) throw std::invalid_argument("lift: univariate residue expected");
    return poly_from(f.ctx(), f.coeffs());
}

MultiPoly reduce(const Poly& a, int r) {
    MultiPoly f(a.ctx, {r});
    for (std::size_t i = 0; i < a.c.size(); ++i) f[i % r] = a.ctx->add(f[i % r], a.c[i]);
    return f;
}

Poly gcd_1var(const Poly& f, const Poly& g) {
    Poly a = f, b = g;
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

bool divides_1var(const Poly& f, const Poly& g) {
    if (f.is_zero()) return g.is_zero();
    return poly_divmod(g, f).second.is_zero();
}

}  // namespace abelian
