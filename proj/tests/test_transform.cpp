#include <gtest/gtest.h>

#include <random>

#include "abelian/transform.hpp"

using namespace abelian;

namespace {

std::vector<FieldElement> roots_for(const FieldPtr& ctx, const std::vector<int>& dims) {
    std::vector<FieldElement> out;
    for (int r : dims) out.push_back(ctx->primitive_root(static_cast<std::uint64_t>(r)));
    return out;
}

MultiPoly random_poly(const FieldPtr& ctx, const std::vector<int>& dims, std::mt19937_64& rng, bool base) {
    MultiPoly f(ctx, dims);
    const auto bf = ctx->base_field();
    for (auto& c : f.coeffs())
        c = base ? bf[rng() % bf.size()] : static_cast<std::uint32_t>(rng() % ctx->size());
    return f;
}

MultiPoly uni(const FieldPtr& ctx, int r, std::initializer_list<int> exps) {
    MultiPoly f(ctx, {r});
    for (int e : exps) f[e % r] = ctx->add(f[e % r], 1);
    return f;
}

}  // namespace

TEST(Transform, ConstantsAndZero) {
    auto ctx = make_context(2, 1, {3, 7});
    const std::vector<int> dims{3, 7};
    auto al = roots_for(ctx, dims);
    EXPECT_TRUE(dft(MultiPoly(ctx, dims), al).is_zero());
    auto ones = dft(MultiPoly::constant(ctx, dims, 1), al);
    for (auto c : ones.coeffs()) EXPECT_EQ(c, 1u);
    EXPECT_EQ(idft(ones, al), MultiPoly::constant(ctx, dims, 1));
    EXPECT_EQ(nonzero_root_count(MultiPoly(ctx, dims), al), 0u);
}

TEST(Transform, DftOfOnePlusX) {
    auto ctx = make_context(2, 1, {3});
    auto a = ctx->primitive_root(3);
    auto f = uni(ctx, 3, {0, 1});
    auto F = dft(f, {a});
    for (int j = 0; j < 3; ++j) EXPECT_EQ(F[j], (ctx->one() + a.pow(j)).value());
}

TEST(Transform, EvalBasics) {
    auto ctx = make_context(2, 1, {3, 5});
    auto a = ctx->primitive_root(3), b = ctx->primitive_root(5);
    EXPECT_EQ(eval(MultiPoly::constant(ctx, {3, 5}, 1), {a, b}), ctx->one());
    EXPECT_EQ(eval(MultiPoly::monomial(ctx, {3, 5}, {1, 1}), {a, b}), a * b);
}

TEST(Transform, EvalShiftedWitnessFactor) {
    // in GF(2^12) built on x^12+x^3+1, x has order 45 with that minimal polynomial
    auto ctx = make_context(2, 1, {3, 45});
    auto a2 = ctx->elem(2);
    ASSERT_EQ(ctx->order(2), 45u);
    auto b = uni(ctx, 45, {40, 39, 38, 36, 35, 32, 30, 25, 24, 23, 21, 20, 17, 15, 10, 9, 8, 6, 5, 2, 0});
    EXPECT_EQ(b.weight(), 21u);
    EXPECT_EQ(eval(b.shifted({5}), {a2.pow(3)}), ctx->one());
}

TEST(Transform, RootCounts) {
    auto ctx = make_context(2, 1, {3, 7});
    const std::vector<int> dims{3, 7};
    auto g = mul(MultiPoly::monomial(ctx, dims, {1, 0}) + MultiPoly::monomial(ctx, dims, {2, 0}),
                 MultiPoly::monomial(ctx, dims, {0, 1}) + MultiPoly::monomial(ctx, dims, {0, 2}) +
                     MultiPoly::monomial(ctx, dims, {0, 4}));
    EXPECT_EQ(nonzero_root_count(g, roots_for(ctx, dims)), 8u);

    auto c2 = make_context(2, 1, {5, 7});
    const std::vector<int> d2{5, 7};
    MultiPoly a(c2, d2), bb(c2, d2);
    for (int e : {1, 2, 3, 4}) a.set({e, 0}, 1);
    for (int e : {1, 2, 4}) bb.set({0, e}, 1);
    EXPECT_EQ(nonzero_root_count(a * bb, roots_for(c2, d2)), 16u);
}

TEST(Transform, RoundTripAndHomomorphism) {
    std::mt19937_64 rng(5);
    struct Case {
        int p, m;
        std::vector<int> dims;
    };
    const std::vector<Case> cases{{2, 1, {5, 7}}, {3, 1, {4, 5}}, {5, 1, {4, 6}}, {2, 1, {3, 5}}, {2, 2, {3, 5}}};
    int n = 0;
    for (const auto& c : cases) {
        auto ctx = make_context(c.p, c.m, c.dims);
        auto al = roots_for(ctx, c.dims);
        for (int i = 0; i < 200; ++i, ++n) {
            auto f = random_poly(ctx, c.dims, rng, false), g = random_poly(ctx, c.dims, rng, false);
            EXPECT_EQ(idft(dft(f, al), al), f);
            EXPECT_EQ(dft(f * g, al), star(dft(f, al), dft(g, al)));
        }
    }
    EXPECT_GE(n, 1000);
}

TEST(Transform, DftMatchesNaiveEvaluation) {
    std::mt19937_64 rng(9);
    auto ctx = make_context(3, 1, {4, 5});
    const std::vector<int> dims{4, 5};
    auto al = roots_for(ctx, dims);
    auto f = random_poly(ctx, dims, rng, false);
    auto F = dft(f, al);
    for (std::size_t j = 0; j < F.box().size(); ++j) {
        auto idx = F.box().coords(j);
        EXPECT_EQ(F[j], eval(f, {al[0].pow(idx[0]), al[1].pow(idx[1])}).value());
    }
}

TEST(Transform, GaloisRationality) {
    std::mt19937_64 rng(13);
    auto ctx = make_context(2, 1, {5, 9});
    const std::vector<int> dims{5, 9};
    auto al = roots_for(ctx, dims);
    auto stable = [&](const MultiPoly& F) {
        for (std::size_t j = 0; j < F.box().size(); ++j)
            if (F[F.box().scale(j, 2)] != ctx->frobenius(F[j])) return false;
        return true;
    };
    for (int i = 0; i < 50; ++i) {
        auto f = random_poly(ctx, dims, rng, true);
        EXPECT_TRUE(stable(dft(f, al)));
        auto h = random_poly(ctx, dims, rng, false);
        EXPECT_EQ(stable(dft(h, al)), h.base_field_coeffs());
        EXPECT_EQ(idft(dft(h, al), al).base_field_coeffs(), stable(dft(h, al)));
    }
}

TEST(Transform, WrongRootsRejected) {
    auto ctx = make_context(2, 1, {3, 5});
    MultiPoly f(ctx, {3, 5});
    EXPECT_THROW(dft(f, {ctx->primitive_root(5), ctx->primitive_root(5)}), std::invalid_argument);
    EXPECT_THROW(dft(f, {ctx->primitive_root(3)}), std::invalid_argument);
}

TEST(Transform, Univariate) {
    auto ctx = make_context(2, 1, {7});
    auto x7 = x_pow_minus_one(ctx, 7);
    auto f = poly_from(ctx, {1, 1, 0, 1});
    EXPECT_EQ(gcd_1var(x7, f), f);
    EXPECT_TRUE(divides_1var(poly_from(ctx, {1, 1}), x_pow_minus_one(ctx, 3)));
    EXPECT_FALSE(divides_1var(poly_from(ctx, {1, 0, 1}), x_pow_minus_one(ctx, 3)));
    auto [qq, rr] = poly_divmod(x7, f);
    EXPECT_TRUE(rr.is_zero());
    EXPECT_EQ(poly_mul(qq, f), x7);
    auto c3 = make_context(2, 1, {3});
    EXPECT_EQ(mul(MultiPoly::monomial(c3, {3}, {2}), MultiPoly::monomial(c3, {3}, {2})), MultiPoly::monomial(c3, {3}, {1}));
    EXPECT_EQ(lift(reduce(poly_from(ctx, {0, 0, 0, 0, 0, 0, 0, 1}), 7)), poly_from(ctx, {1}));
    auto c5 = make_context(5, 1, {4});
    auto g = gcd_1var(poly_from(c5, {4, 0, 0, 0, 1}), poly_from(c5, {3, 3}));
    EXPECT_EQ(g, poly_from(c5, {1, 1}));
}
