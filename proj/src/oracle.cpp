#include "abelian/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "abelian/numtheory.hpp"

namespace abelian {

namespace {

// null space of A (rows x cols, entries mod p)
std::vector<std::vector<int>> null_space_mod_p(std::vector<std::vector<int>> A, int cols, int p) {
    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < cols && row < static_cast<int>(A.size()); ++c) {
        int piv = -1;
        for (int r = row; r < static_cast<int>(A.size()); ++r)
            if (A[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[piv], A[row]);
        const int inv = static_cast<int>(nt::inv_mod(A[row][c], p));
        for (int& v : A[row]) v = v * inv % p;
        for (int r = 0; r < static_cast<int>(A.size()); ++r) {
            if (r == row || !A[r][c]) continue;
            const int f = A[r][c];
            for (int k = c; k < cols; ++k) A[r][k] = ((A[r][k] - f * A[row][k]) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++row;
    }
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<int>> out;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<int> v(cols, 0);
        v[fc] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - A[r][fc]) % p;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<int> digits(const FieldCtx& ctx, std::uint32_t x) {
    std::vector<int> d(ctx.degree());
    for (int i = 0; i < ctx.degree(); ++i) {
        d[i] = static_cast<int>(x % static_cast<std::uint32_t>(ctx.p()));
        x /= static_cast<std::uint32_t>(ctx.p());
    }
    return d;
}

// primitive element of F_q inside L
std::uint32_t base_primitive(const FieldCtx& ctx) {
    return ctx.pow(ctx.generator(), (ctx.size() - 1) / (ctx.q() - 1));
}

// incremental row echelon over F_q (entries live in L)
struct Echelon {
    const FieldCtx* ctx;
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::size_t> pivots;

    std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::uint32_t c = v[pivots[r]];
            if (!c) continue;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (rows[r][i]) v[i] = ctx->sub(v[i], ctx->mul(c, rows[r][i]));
        }
        return v;
    }
    bool insert(const std::vector<std::uint32_t>& v0) {
        auto v = reduce(v0);
        std::size_t p = 0;
        while (p < v.size() && !v[p]) ++p;
        if (p == v.size()) return false;
        const std::uint32_t inv = ctx->inv(v[p]);
        for (auto& x : v) x = ctx->mul(x, inv);
        for (auto& row : rows) {
            const std::uint32_t c = row[p];
            if (!c) continue;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i]) row[i] = ctx->sub(row[i], ctx->mul(c, v[i]));
        }
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

int default_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* e = std::getenv("ABELIAN_THREADS")) {
        const int v = std::atoi(e);
        if (v > 0) return v;
    }
    const unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

}  // namespace

GeneratorBasis generator_basis(const AbelianCode& C) {
    const FieldCtx& ctx = *C.ctx();
    const auto& dims = C.dims();
    const Box& box = C.defining_set().box();
    const std::size_t n = box.size();
    const int m = ctx.m();
    const int p = ctx.p();
    const auto roots = C.root_elements();
    const std::uint32_t theta = base_primitive(ctx);
    std::vector<std::uint32_t> th(m, 1);
    for (int t = 1; t < m; ++t) th[t] = ctx.mul(th[t - 1], theta);

    // one evaluation constraint per orbit representative of D
    const int cols = static_cast<int>(n) * m;
    std::vector<std::vector<int>> A;
    for (const auto& rep : C.defining_set().reps()) {
        std::vector<std::vector<int>> block(ctx.degree(), std::vector<int>(cols, 0));
        for (std::size_t j = 0; j < n; ++j) {
            std::uint32_t x = 1;
            for (std::size_t k = 0; k < dims.size(); ++k)
                x = ctx.mul(x, ctx.pow(roots[k].value(), static_cast<std::uint64_t>(rep[k]) * box.coord(j, static_cast<int>(k))));
            for (int t = 0; t < m; ++t) {
                const auto d = digits(ctx, ctx.mul(x, th[t]));
                for (int e = 0; e < ctx.degree(); ++e) block[e][j * m + t] = d[e];
            }
        }
        for (auto& r : block) A.push_back(std::move(r));
    }
    const auto ns = null_space_mod_p(std::move(A), cols, p);

    GeneratorBasis G;
    Echelon ech{&ctx, {}, {}};
    for (const auto& v : ns) {
        std::vector<std::uint32_t> f(n, 0);
        for (std::size_t j = 0; j < n; ++j)
            for (int t = 0; t < m; ++t)
                if (v[j * m + t]) f[j] = ctx.add(f[j], ctx.mul(ctx.from_int(v[j * m + t]), th[t]));
        if (ech.insert(f)) {
            MultiPoly g(C.ctx(), dims);
            g.coeffs() = f;
            G.basis.push_back(std::move(g));
        }
    }
    G.k = G.basis.size();
    if (G.k != dimension(C))
        throw std::logic_error("generator basis has rank " + std::to_string(G.k) + ", expected " +
                               std::to_string(dimension(C)));
    return G;
}

bool in_span(const GeneratorBasis& G, const MultiPoly& f) {
    if (G.basis.empty()) return f.is_zero();
    Echelon ech{f.ctx().get(), {}, {}};
    for (const auto& b : G.basis) ech.insert(b.coeffs());
    const auto r = ech.reduce(f.coeffs());
    return std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; });
}

MinDistance min_distance_bruteforce(const AbelianCode& C, int cap_k, int threads) {
    return min_distance_bruteforce(generator_basis(C), C.q(), cap_k, threads);
}

MinDistance min_distance_bruteforce(const GeneratorBasis& G, std::uint64_t q, int cap_k, int threads) {
    MinDistance res;
    if (G.k == 0) return res;
    const FieldPtr& ctxp = G.basis[0].ctx();
    const FieldCtx& ctx = *ctxp;
    const std::size_t n = G.basis[0].box().size();
    const std::size_t k = G.k;
    if (cap_k < 0) {
        // q^k <= 2^22, which is k <= 22 for q = 2
        double qk = 1;
        for (std::size_t i = 0; i < k; ++i) qk *= static_cast<double>(q);
        if (qk > 4194304.0)
            throw std::invalid_argument("dimension k=" + std::to_string(k) + " exceeds the enumeration cap q^k <= 2^22");
    } else if (k > static_cast<std::size_t>(cap_k)) {
        throw std::invalid_argument("dimension k=" + std::to_string(k) + " exceeds the cap " + std::to_string(cap_k));
    }

    // F_p-basis theta^t * b_j; digits cycle mod p
    const int p = ctx.p();
    const std::uint32_t theta = base_primitive(ctx);
    std::vector<std::vector<std::uint32_t>> vecs;
    for (const auto& b : G.basis) {
        std::uint32_t s = 1;
        for (int t = 0; t < ctx.m(); ++t) {
            std::vector<std::uint32_t> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = ctx.mul(b[i], s);
            vecs.push_back(std::move(v));
            s = ctx.mul(s, theta);
        }
    }
    const std::size_t K = vecs.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < K; ++i) total *= static_cast<std::uint64_t>(p);
    res.codewords = total - 1;

    // codeword for index n: sum gray_j * v_j with gray_j = (n_j - n_{j+1}) mod p
    auto gray_digits = [&](std::uint64_t idx) {
        std::vector<int> nd(K + 1, 0), g(K, 0);
        for (std::size_t j = 0; j < K; ++j) {
            nd[j] = static_cast<int>(idx % p);
            idx /= p;
        }
        for (std::size_t j = 0; j < K; ++j) g[j] = ((nd[j] - nd[j + 1]) % p + p) % p;
        return g;
    };
    auto codeword = [&](std::uint64_t idx) {
        const auto g = gray_digits(idx);
        std::vector<std::uint32_t> c(n, 0);
        for (std::size_t j = 0; j < K; ++j)
            for (int t = 0; t < g[j]; ++t)
                for (std::size_t i = 0; i < n; ++i) c[i] = ctx.add(c[i], vecs[j][i]);
        return c;
    };

    const int T = std::max(1, std::min<int>(default_threads(threads), static_cast<int>(std::max<std::uint64_t>(1, total / 4096))));
    struct Best {
        int w = std::numeric_limits<int>::max();
        std::uint64_t idx = 0;
    };
    std::vector<Best> best(T);

    auto worker = [&](int tid) {
        const std::uint64_t lo = 1 + (total - 1) * tid / T, hi = 1 + (total - 1) * (tid + 1) / T;
        if (lo >= hi) return;
        Best b;
        if (p == 2) {
            const std::size_t W = (n + 63) / 64;
            std::vector<std::uint64_t> bits(K * W, 0), cur(W, 0);
            for (std::size_t j = 0; j < K; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    if (vecs[j][i]) bits[j * W + i / 64] |= std::uint64_t{1} << (i % 64);
            const auto c0 = codeword(lo);
            for (std::size_t i = 0; i < n; ++i)
                if (c0[i]) cur[i / 64] |= std::uint64_t{1} << (i % 64);
            for (std::uint64_t idx = lo;; ++idx) {
                int w = 0;
                for (std::size_t x = 0; x < W; ++x) w += __builtin_popcountll(cur[x]);
                if (w < b.w) {
                    b.w = w;
                    b.idx = idx;
                }
                if (idx + 1 >= hi) break;
                const std::size_t j = static_cast<std::size_t>(__builtin_ctzll(idx + 1));
                for (std::size_t x = 0; x < W; ++x) cur[x] ^= bits[j * W + x];
            }
        } else {
            std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> sp(K);
            for (std::size_t j = 0; j < K; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    if (vecs[j][i]) sp[j].push_back({i, vecs[j][i]});
            auto cur = codeword(lo);
            int w = static_cast<int>(std::count_if(cur.begin(), cur.end(), [](auto x) { return x != 0; }));
            for (std::uint64_t idx = lo;; ++idx) {
                if (w < b.w) {
                    b.w = w;
                    b.idx = idx;
                }
                if (idx + 1 >= hi) break;
                // digit j = number of trailing (p-1) digits of idx
                std::uint64_t x = idx;
                std::size_t j = 0;
                while (x % p == static_cast<std::uint64_t>(p - 1)) {
                    x /= p;
                    ++j;
                }
                for (const auto& [i, v] : sp[j]) {
                    const std::uint32_t old = cur[i], nv = ctx.add(old, v);
                    w += (nv != 0) - (old != 0);
                    cur[i] = nv;
                }
            }
        }
        best[tid] = b;
    };
    if (T == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < T; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    Best b;
    for (const auto& x : best)
        if (x.w < b.w || (x.w == b.w && x.idx < b.idx)) b = x;
    res.d = b.w;
    res.witness = MultiPoly(ctxp, G.basis[0].dims());
    res.witness.coeffs() = codeword(b.idx);
    return res;
}

std::optional<int> weight_upper_bound(const AbelianCode& C, int trials, std::uint64_t seed,
                                      const std::vector<MultiPoly>& known) {
    const auto G = generator_basis(C);
    if (G.k == 0) return std::nullopt;
    const FieldCtx& ctx = *C.ctx();
    const auto bf = ctx.base_field();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, bf.size() - 1);
    std::optional<int> best;
    for (const auto& f : known) {
        const MultiPoly F = dft(f, C.root_elements());
        for (auto i : C.defining_set().members())
            if (F[i]) throw std::invalid_argument("supplied word is not a codeword");
        if (!f.base_field_coeffs()) throw std::invalid_argument("supplied word is not over the base field");
        const int w = static_cast<int>(f.weight());
        if (w > 0 && (!best || w < *best)) best = w;
    }
    for (int t = 0; t < trials; ++t) {
        std::vector<std::uint32_t> c(G.basis[0].box().size(), 0);
        for (const auto& b : G.basis) {
            const std::uint32_t s = bf[pick(rng)];
            if (!s) continue;
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = ctx.add(c[i], ctx.mul(s, b[i]));
        }
        const int w = static_cast<int>(std::count_if(c.begin(), c.end(), [](auto x) { return x != 0; }));
        if (w > 0 && (!best || w < *best)) best = w;
    }
    return best;
}

}  // namespace abelian
