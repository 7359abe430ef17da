#include "abelian/gfield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "abelian/numtheory.hpp"

namespace abelian {

namespace {

using FpPoly = std::vector<int>;

void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mod(FpPoly a, const FpPoly& f, int p) {
    trim(a);
    const int df = static_cast<int>(f.size()) - 1;
    const int lead_inv = static_cast<int>(nt::inv_mod(f.back(), p));
    while (static_cast<int>(a.size()) - 1 >= df) {
        const int shift = static_cast<int>(a.size()) - 1 - df;
        const int c = a.back() * lead_inv % p;
        for (int i = 0; i <= df; ++i) a[i + shift] = ((a[i + shift] - c * f[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, int p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return fp_mod(std::move(r), f, p);
}

// x^(p^k) mod f
FpPoly x_pow_p_k(const FpPoly& f, int p, int k) {
    FpPoly x = fp_mod({0, 1}, f, p);
    for (int step = 0; step < k; ++step) {
        FpPoly base = x, acc = {1};
        int e = p;
        while (e) {
            if (e & 1) acc = fp_mulmod(acc, base, f, p);
            base = fp_mulmod(base, base, f, p);
            e >>= 1;
        }
        x = acc;
    }
    return x;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, int p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    trim(a);
    return a;
}

}  // namespace

bool is_irreducible_fp(const std::vector<int>& f_in, int p) {
    FpPoly f = f_in;
    trim(f);
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 1) return false;
    if (n == 1) return true;
    const FpPoly x = {0, 1};
    if (fp_sub(x_pow_p_k(f, p, n), x, p).size() != 0) return false;
    for (auto l : nt::prime_factors(static_cast<std::uint64_t>(n))) {
        FpPoly h = fp_sub(x_pow_p_k(f, p, n / static_cast<int>(l)), x, p);
        FpPoly g = fp_gcd(f, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

FieldPtr FieldCtx::make(int p, int m, const std::vector<int>& lengths) {
    if (p < 2 || !nt::is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("base degree m must be positive");
    std::uint64_t q = 1;
    for (int i = 0; i < m; ++i) q *= static_cast<std::uint64_t>(p);
    std::uint64_t t = 1;
    for (int r : lengths) {
        if (r < 1) throw std::invalid_argument("length " + std::to_string(r) + " must be positive");
        if (r % p == 0)
            throw std::invalid_argument("non-semisimple: length r=" + std::to_string(r) +
                                        " is divisible by the characteristic " + std::to_string(p));
        t = nt::lcm(t, nt::mult_order(q, static_cast<std::uint64_t>(r)));
    }
    const int deg = m * static_cast<int>(t);
    long double approx = 1;
    for (int i = 0; i < deg; ++i) approx *= p;
    if (approx > 4294967296.0L)
        throw std::invalid_argument("extension field too large: " + std::to_string(p) + "^" + std::to_string(deg));

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->m_ = m;
    ctx->t_ = static_cast<int>(t);
    ctx->q_ = q;
    ctx->lengths_ = lengths;
    ctx->ppow_.assign(deg + 1, 1);
    for (int i = 1; i <= deg; ++i) ctx->ppow_[i] = ctx->ppow_[i - 1] * static_cast<std::uint64_t>(p);
    ctx->size_ = ctx->ppow_[deg];

    // least monic irreducible, lower coefficients ordered by sum c_i p^i
    for (std::uint64_t code = 0; code < ctx->size_; ++code) {
        FpPoly f(deg + 1, 0);
        std::uint64_t c = code;
        for (int i = 0; i < deg; ++i) {
            f[i] = static_cast<int>(c % p);
            c /= p;
        }
        f[deg] = 1;
        if (deg > 1 && f[0] == 0) continue;
        if (is_irreducible_fp(f, p)) {
            ctx->modulus_ = f;
            break;
        }
    }
    if (ctx->modulus_.empty()) throw std::logic_error("no irreducible polynomial found");

    const std::uint64_t nm1 = ctx->size_ - 1;
    const auto primes = nt::prime_factors(nm1);
    auto is_primitive = [&](std::uint32_t a) {
        if (a == 0) return false;
        for (auto l : primes) {
            std::uint32_t x = 1, b = a;
            std::uint64_t e = nm1 / l;
            while (e) {
                if (e & 1) x = ctx->mul_slow(x, b);
                b = ctx->mul_slow(b, b);
                e >>= 1;
            }
            if (x == 1) return false;
        }
        return true;
    };
    if (ctx->size_ == 2) {
        ctx->gen_ = 1;
    } else {
        for (std::uint64_t a = 1; a < ctx->size_; ++a) {
            if (is_primitive(static_cast<std::uint32_t>(a))) {
                ctx->gen_ = static_cast<std::uint32_t>(a);
                break;
            }
        }
    }

    if (ctx->size_ <= (1u << 20)) {
        ctx->exp_.assign(2 * nm1, 0);
        ctx->log_.assign(ctx->size_, 0);
        std::uint32_t x = 1;
        for (std::uint64_t i = 0; i < nm1; ++i) {
            ctx->exp_[i] = x;
            ctx->exp_[i + nm1] = x;
            ctx->log_[x] = static_cast<std::uint32_t>(i);
            x = ctx->mul_slow(x, ctx->gen_);
        }
    }
    return ctx;
}

FieldPtr make_context(int p, int m, const std::vector<int>& lengths) { return FieldCtx::make(p, m, lengths); }

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint64_t r = 0;
    for (int i = 0; i < degree() && (a || b); ++i) {
        const std::uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        r += ((da + db) % p_) * ppow_[i];
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint64_t r = 0;
    for (int i = 0; i < degree() && a; ++i) {
        const std::uint32_t da = a % p_;
        a /= p_;
        r += ((p_ - da) % p_) * ppow_[i];
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t FieldCtx::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldCtx::mul_slow(std::uint32_t a, std::uint32_t b) const {
    const int n = degree();
    if (p_ == 2) {
        std::uint64_t r = 0, x = a;
        std::uint64_t y = b;
        while (y) {
            if (y & 1) r ^= x;
            x <<= 1;
            y >>= 1;
        }
        std::uint64_t mod = 0;
        for (int i = 0; i <= n; ++i)
            if (modulus_[i]) mod |= std::uint64_t{1} << i;
        for (int i = 2 * n - 2; i >= n; --i)
            if (r >> i & 1) r ^= mod << (i - n);
        return static_cast<std::uint32_t>(r);
    }
    std::vector<int> da(n, 0), db(n, 0);
    for (int i = 0; i < n; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    std::vector<int> r(2 * n, 0);
    for (int i = 0; i < n; ++i) {
        if (!da[i]) continue;
        for (int j = 0; j < n; ++j) r[i + j] = (r[i + j] + da[i] * db[j]) % p_;
    }
    for (int i = 2 * n - 1; i >= n; --i) {
        const int c = r[i];
        if (!c) continue;
        for (int j = 0; j <= n; ++j) r[i - n + j] = ((r[i - n + j] - c * modulus_[j]) % p_ + p_) % p_;
    }
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) v += static_cast<std::uint64_t>(r[i]) * ppow_[i];
    return static_cast<std::uint32_t>(v);
}

std::uint32_t FieldCtx::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
}

std::uint32_t FieldCtx::pow(std::uint32_t a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (!log_.empty()) {
        const std::uint64_t nm1 = size_ - 1;
        const std::uint64_t l = static_cast<std::uint64_t>((unsigned __int128)log_[a] * (e % nm1) % nm1);
        return exp_[l];
    }
    std::uint32_t r = 1, b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (!log_.empty()) {
        const std::uint64_t nm1 = size_ - 1;
        return exp_[(nm1 - log_[a]) % nm1];
    }
    return pow(a, size_ - 2);
}

std::uint32_t FieldCtx::from_int(std::int64_t n) const { return static_cast<std::uint32_t>(nt::mod(n, p_)); }

std::uint64_t FieldCtx::order(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("order of zero");
    std::uint64_t n = size_ - 1;
    for (auto l : nt::prime_factors(n)) {
        while (n % l == 0 && pow(a, n / l) == 1) n /= l;
    }
    return n;
}

FieldElement FieldCtx::elem(std::uint32_t v) const {
    if (v >= size_) throw std::out_of_range("raw value " + std::to_string(v) + " outside the field");
    return FieldElement(this, v);
}

FieldElement FieldCtx::primitive_root(std::uint64_t r) const {
    if (r == 0 || (size_ - 1) % r != 0)
        throw std::invalid_argument("r=" + std::to_string(r) + " does not divide |L|-1=" + std::to_string(size_ - 1));
    return elem(pow(gen_, (size_ - 1) / r));
}

std::vector<std::uint32_t> FieldCtx::base_field() const {
    std::vector<std::uint32_t> out{0};
    const std::uint32_t th = pow(gen_, (size_ - 1) / (q_ - 1));
    std::uint32_t x = 1;
    for (std::uint64_t k = 0; k + 1 < q_; ++k) {
        out.push_back(x);
        x = mul(x, th);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "GF(" << p_ << "^" << degree() << "), modulus ";
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (!modulus_[i]) continue;
        if (!first) os << " + ";
        first = false;
        if (modulus_[i] != 1 || i == 0) os << modulus_[i];
        if (i > 0) os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

FieldElement primitive_root(const FieldCtx& ctx, std::uint64_t r) { return ctx.primitive_root(r); }

bool in_base_field(const FieldCtx& ctx, const FieldElement& x) {
    if (x.ctx() != &ctx) throw std::invalid_argument("element belongs to a different field context");
    return ctx.in_base(x.value());
}

const FieldCtx* FieldElement::check(const FieldElement& o) const {
    if (!ctx_ || ctx_ != o.ctx_) throw std::invalid_argument("field elements from different contexts");
    return ctx_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {check(o), check(o)->add(v_, o.v_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {check(o), check(o)->sub(v_, o.v_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {check(o), check(o)->mul(v_, o.v_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const {
    auto c = check(o);
    return {c, c->mul(v_, c->inv(o.v_))};
}
FieldElement FieldElement::operator-() const { return {ctx_, ctx_->neg(v_)}; }
FieldElement FieldElement::inv() const { return {ctx_, ctx_->inv(v_)}; }
FieldElement FieldElement::pow(std::int64_t e) const {
    if (e >= 0) return {ctx_, ctx_->pow(v_, static_cast<std::uint64_t>(e))};
    return {ctx_, ctx_->pow(ctx_->inv(v_), static_cast<std::uint64_t>(-e))};
}
bool FieldElement::operator==(const FieldElement& o) const { return ctx_ == o.ctx_ && v_ == o.v_; }

}  // namespace abelian
