#include <gtest/gtest.h>

#include <random>

#include "abelian/construct.hpp"
#include "abelian/oracle.hpp"
#include "abelian/parse.hpp"
#include "support/properties.hpp"

using namespace abelian;

namespace {

const char* kB45 = "Y^40+Y^39+Y^38+Y^36+Y^35+Y^32+Y^30+Y^25+Y^24+Y^23+Y^21+Y^20+Y^17+Y^15+Y^10+Y^9+Y^8+Y^6+Y^5+Y^2+1";

std::vector<FieldElement> roots(const FieldPtr& ctx, const std::vector<int>& dims) {
    return select_roots(*ctx, dims, default_roots(dims));
}

AbelianCode code_from_complement(int p, const std::vector<int>& dims, const std::vector<MultiIndex>& reps) {
    const auto ctx = make_context(p, 1, dims);
    return AbelianCode(ctx, orbits_from_reps(reps, ctx->q(), dims).complement(), default_roots(dims));
}

MultiPoly pattern_poly(const FieldPtr& ctx, const SupportHypermatrix& M) {
    MultiPoly f(ctx, M.dims());
    for (std::size_t i = 0; i < M.pattern().size(); ++i) f[i] = M.at(i) ? 1 : 0;
    return f;
}

}  // namespace

TEST(ConditionImposed, Code5x5Holds) {
    const auto ctx = make_context(2, 1, {5, 5});
    const auto g = parse_poly(ctx, {5, 5}, "X1^4X2^4+X1^3X2^4+X1^4X2^2+X1^3X2^3+X1^2X2^2+X1X2^3+X1^2X2+X1X2");
    const auto fa = check_condition_imposed(g, roots(ctx, {5, 5}));
    EXPECT_TRUE(fa.holds);
    EXPECT_EQ(fa.delta1, 8);
    EXPECT_EQ(fa.delta2, 8);
    EXPECT_EQ(fa.delta, 8);
    EXPECT_EQ(fa.zbar, 8u);
    EXPECT_EQ(fa.M1, (std::vector<int>{2, 3}));
    EXPECT_EQ(fa.M2, (std::vector<int>{1, 4}));
}

TEST(ConditionImposed, Code5x9Fails) {
    const auto ctx = make_context(2, 1, {5, 9});
    const auto g = parse_poly(ctx, {5, 9}, "X1X2^3+X1^4X2^3+X1^2X2^6+X1^3X2^6");
    const auto fa = check_condition_imposed(g, roots(ctx, {5, 9}));
    EXPECT_FALSE(fa.holds);
    EXPECT_EQ(fa.delta1, 18);
    EXPECT_LT(fa.delta1, fa.delta2);
    EXPECT_EQ(fa.delta, 24);
    EXPECT_EQ(fa.zbar, 24u);
    EXPECT_THROW(factor_abF(g, fa), std::invalid_argument);
}

TEST(ConditionImposed, Monomial) {
    const auto ctx = make_context(2, 1, {3, 3});
    const auto g = parse_poly(ctx, {3, 3}, "X1X2");
    const auto fa = check_condition_imposed(g, roots(ctx, {3, 3}));
    EXPECT_EQ(fa.delta, 9);
    EXPECT_EQ(fa.zbar, 9u);
    EXPECT_TRUE(fa.holds);
}

TEST(FactorAbF, Code5x5) {
    const auto ctx = make_context(2, 1, {5, 5});
    const auto g = parse_poly(ctx, {5, 5}, "X1^4X2^4+X1^3X2^4+X1^4X2^2+X1^3X2^3+X1^2X2^2+X1X2^3+X1^2X2+X1X2");
    const auto f = factor_abF(g, check_condition_imposed(g, roots(ctx, {5, 5})));
    EXPECT_EQ(f.a.c, (std::vector<std::uint32_t>{1, 1}));
    EXPECT_EQ(f.b.c, (std::vector<std::uint32_t>{1, 1}));
    EXPECT_EQ(f.F, parse_poly(ctx, {5, 5}, "X1X2+X1X2^2+X1^2X2^2+X1^3X2^2+X1^3X2^3"));
    EXPECT_EQ(f.F.weight(), 5u);
    EXPECT_TRUE(abF_matches(f, g));
    // M(F) is not a q-orbit matrix
    EXPECT_FALSE(SupportHypermatrix::of(f.F, 2).is_orbit_matrix());
}

TEST(FactorAbF, ProductCase) {
    const auto ctx = make_context(2, 1, {7, 7});
    const auto a = parse_poly(ctx, {7}, "1+X+X^3"), b = parse_poly(ctx, {7}, "1+X^2+X^3");
    const auto g = outer_product(a, b);
    const auto fa = check_condition_imposed(g, roots(ctx, {7, 7}));
    ASSERT_TRUE(fa.holds);
    const auto f = factor_abF(g, fa);
    EXPECT_EQ(f.a, lift(a));
    EXPECT_EQ(f.b, lift(b));
    EXPECT_EQ(f.F, parse_poly(ctx, {7, 7}, "1"));
}

TEST(FactorAbF, RoundTripFromRandomFactors) {
    std::mt19937_64 rng(51);
    const auto ctx = make_context(2, 1, {7, 15});
    const std::vector<std::string> as{"1+X", "1+X+X^3", "1+X^2+X^3", "(1+X)*(1+X+X^3)", "1+X+X^2+X^3+X^4+X^5+X^6"};
    const std::vector<std::string> bs{"1+X", "1+X+X^4", "1+X+X^2", "(X^15-1)/(1+X+X^4)", "(1+X)*(1+X^3+X^4)"};
    int checked = 0;
    for (const auto& as_ : as)
        for (const auto& bs_ : bs) {
            const auto a = parse_poly(ctx, {7}, as_), b = parse_poly(ctx, {15}, bs_);
            const int h1 = static_cast<int>(rng() % 7), h2 = static_cast<int>(rng() % 15);
            const auto g = outer_product(a.shifted({h1}), b.shifted({h2}));
            const auto fa = check_condition_imposed(g, roots(ctx, {7, 15}));
            if (!fa.holds) continue;
            const auto f = factor_abF(g, fa);
            EXPECT_TRUE(abF_matches(f, g));
            EXPECT_EQ(f.a, gcd_1var(lift(a), x_pow_minus_one(ctx, 7)));
            EXPECT_EQ(f.b, gcd_1var(lift(b), x_pow_minus_one(ctx, 15)));
            ++checked;
        }
    EXPECT_GE(checked, 20);
}

TEST(CpMatrix, Examples) {
    const auto ctx = make_context(2, 1, {3, 7});
    const auto P = SupportHypermatrix::of(outer_product(parse_poly(ctx, {3}, "X+X^2"), parse_poly(ctx, {7}, "X+X^2+X^4")), 2);
    const auto cp = is_cp_matrix(P);
    ASSERT_TRUE(cp.has_value());
    EXPECT_EQ(cp->first, mask_of(3, {1, 2}));
    EXPECT_EQ(cp->second, mask_of(7, {1, 2, 4}));
    const auto M85 = afforded(orbits_from_reps(
        {{0, 3}, {1, 3}, {1, 5}, {1, 6}, {3, 0}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}}, 2, {7, 7}));
    EXPECT_FALSE(is_cp_matrix(M85).has_value());
    EXPECT_TRUE(is_cp_matrix(SupportHypermatrix::ones({4, 6}, 5)).has_value());
}

TEST(CpMatrix, Product3x7) {
    const auto ctx = make_context(2, 1, {3, 7});
    const auto a = parse_poly(ctx, {3}, "X1+X1^2"), b = parse_poly(ctx, {7}, "X2+X2^2+X2^4");
    EXPECT_EQ(divisor_shift(a), 2);
    EXPECT_EQ(divisor_shift(b), 6);
    const BoundSet B;
    EXPECT_EQ(vec_apparent(SupportHypermatrix::of(a, 2), B), 2);
    EXPECT_EQ(vec_apparent(SupportHypermatrix::of(b, 2), B), 4);
    const auto g = outer_product(a, b);
    const auto rep = hyper_apparent(SupportHypermatrix::of(g, 2), B);
    EXPECT_EQ(rep.value, 8);
    EXPECT_EQ(nonzero_root_count(g, roots(ctx, {3, 7})), 8u);
    // Zbar(ab) = Zbar(a) x Zbar(b)
    const auto za = idft(a, {roots(ctx, {3, 7})[0]}), zb = idft(b, {roots(ctx, {3, 7})[1]});
    const auto zg = idft(g, roots(ctx, {3, 7}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 7; ++j) EXPECT_EQ(zg.at({i, j}) != 0, za[i] != 0 && zb[j] != 0);
    EXPECT_EQ(rep.omega, (std::vector<int>{2, 4}));
    EXPECT_EQ(rep.epsilon, (std::vector<int>{4, 2}));
}

TEST(CpMatrix, Product5x7DivisorHypothesisFails) {
    const auto ctx = make_context(2, 1, {5, 7});
    const auto a = parse_poly(ctx, {5}, "X1+X1^2+X1^3+X1^4"), b = parse_poly(ctx, {7}, "X2+X2^2+X2^4");
    EXPECT_FALSE(divisor_shift(a).has_value());
    EXPECT_EQ(divisor_shift(b), 6);
    const auto g = outer_product(a, b);
    const auto rep = hyper_apparent(SupportHypermatrix::of(g, 2), BoundSet());
    EXPECT_EQ(rep.value, 8);
    EXPECT_EQ(rep.delta[0], 8);
    EXPECT_EQ(rep.delta[1], 8);
    EXPECT_EQ(nonzero_root_count(g, roots(ctx, {5, 7})), 16u);
}

TEST(DivisorShift, Examples) {
    const auto ctx = make_context(2, 1, {3});
    EXPECT_EQ(divisor_shift(parse_poly(ctx, {3}, "1+X")), 0);
    EXPECT_EQ(divisor_shift(parse_poly(ctx, {3}, "X+X^2")), 2);
    EXPECT_FALSE(divisor_shift(MultiPoly(ctx, {3})).has_value());
}

TEST(RationalShift, Examples) {
    const auto ctx = make_context(2, 1, {3, 45});
    const auto al = roots(ctx, {3, 45});
    EXPECT_EQ(rational_shift(parse_poly(ctx, {3}, "1+X"), al[0]), 1);
    const auto b = parse_poly(ctx, {45}, kB45);
    EXPECT_EQ(b.weight(), 21u);
    EXPECT_EQ(rational_shift(b, al[1]), 5);
    EXPECT_EQ(rational_shift(parse_poly(ctx, {3}, "1"), al[0]), 0);
}

TEST(Construct, ThreeBy45) {
    const auto ctx = make_context(2, 1, {3, 45});
    const auto a = parse_poly(ctx, {3}, "1+X"), b = parse_poly(ctx, {45}, kB45);
    const auto con = construct_true_distance_code(a, b, ctx, default_roots({3, 45}));
    EXPECT_EQ(con.h1, 1);
    EXPECT_EQ(con.h2, 5);
    EXPECT_EQ(con.cert.guaranteed_d, 10);
    EXPECT_EQ(con.cert.witness_weight, 10u);
    EXPECT_EQ(con.cert.bmad, 10);
    EXPECT_TRUE(con.cert.certified);
    // 2 x 21 free positions
    EXPECT_EQ(dimension(con.code), 42u);
    EXPECT_EQ(defining_set_of(con.witness, con.code.root_elements()), con.code.defining_set());
}

TEST(Construct, TableRows) {
    {
        const auto ctx = make_context(2, 1, {7, 15});
        const auto con = construct_true_distance_code(parse_poly(ctx, {7}, "1+X+X^3"),
                                                      parse_poly(ctx, {15}, "(X^15-1)/(1+X+X^2)"), ctx,
                                                      default_roots({7, 15}), 1, 1);
        EXPECT_EQ(dimension(con.code), 30u);
        EXPECT_EQ(con.cert.bmad, 8);
        EXPECT_TRUE(con.cert.certified);
    }
    {
        const auto ctx = make_context(2, 1, {5, 21});
        const auto con = construct_true_distance_code(parse_poly(ctx, {5}, "1+X+X^2+X^3+X^4"),
                                                      parse_poly(ctx, {21}, "(X^21-1)/(1+X+X^2+X^4+X^6)"), ctx,
                                                      default_roots({5, 21}), 0, 1);
        EXPECT_EQ(dimension(con.code), 40u);
        EXPECT_EQ(con.cert.bmad, 6);
        EXPECT_TRUE(con.cert.certified);
    }
}

TEST(Construct, PreconditionsNamed) {
    const auto ctx = make_context(2, 1, {5, 7});
    const auto a = parse_poly(ctx, {5}, "X+X^2+X^3+X^4"), b = parse_poly(ctx, {7}, "1+X+X^3");
    try {
        construct_true_distance_code(a, b, ctx, default_roots({5, 7}));
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("does not divide"), std::string::npos);
    }
    const auto ctx2 = make_context(2, 1, {7, 15});
    try {
        construct_true_distance_code(parse_poly(ctx2, {7}, "1+X+X^3"), parse_poly(ctx2, {15}, "(X^15-1)/(1+X+X^2)"),
                                     ctx2, default_roots({7, 15}), 0, 1);
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("not over F_q"), std::string::npos);
    }
}

TEST(Construct, CertifiedDistanceMatchesOracle) {
    // every certified construction small enough to enumerate has d equal to the certificate
    const auto ctx = make_context(2, 1, {7, 7});
    const auto al = roots(ctx, {7, 7});
    std::vector<std::string> fs;
    for (const char* f : {"1+X", "1+X+X^3", "1+X^2+X^3", "(1+X)*(1+X+X^3)", "(1+X)*(1+X^2+X^3)", "(1+X+X^3)*(1+X^2+X^3)"})
        if (rational_shift(parse_poly(ctx, {7}, f), al[0])) fs.push_back(f);
    ASSERT_GE(fs.size(), 4u);
    int checked = 0;
    for (const auto& fa : fs)
        for (const auto& fb : fs) {
            const auto con = construct_true_distance_code(parse_poly(ctx, {7}, fa), parse_poly(ctx, {7}, fb), ctx,
                                                          default_roots({7, 7}));
            ASSERT_TRUE(con.cert.certified);
            if (dimension(con.code) > 20) continue;
            EXPECT_EQ(min_distance_bruteforce(con.code).d, con.cert.guaranteed_d) << fa << " / " << fb;
            ++checked;
        }
    EXPECT_GE(checked, 10);
}

TEST(Verify, KnownCodes) {
    const BoundSet B;
    const auto C88 = code_from_complement(2, {5, 9}, {{1, 3}});
    const auto v88 = verify_true_distance(C88, B);
    EXPECT_TRUE(v88.proven);
    EXPECT_EQ(v88.d, 24);
    const auto C89 = code_from_complement(2, {5, 5}, {{1, 1}, {1, 3}});
    const auto v89 = verify_true_distance(C89, B);
    EXPECT_TRUE(v89.proven);
    EXPECT_EQ(v89.d, 8);
    const auto C85 = AbelianCode::make(2, 1, {7, 7}, {{0, 3}, {1, 3}, {1, 5}, {1, 6}, {3, 0}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}});
    const auto v85 = verify_true_distance(C85, B);
    EXPECT_TRUE(v85.proven);
    EXPECT_EQ(v85.d, 9);
    // the P found is the CP matrix M(ab), outside the algorithm's chain
    const auto ab = parse_poly(C85.ctx(), {7, 7}, "(1+X1)*(1+X1^2+X1^3)*(1+X2)*(1+X2^2+X2^3)");
    EXPECT_EQ(v85.witness, SupportHypermatrix::of(ab, 2));
    for (const auto& st : v85.trace.steps) EXPECT_FALSE(st.matrix == v85.witness);
    EXPECT_EQ(idft(pattern_poly(C85.ctx(), v85.witness), C85.root_elements()).weight(), 9u);
}

TEST(Verify, CapRejected) {
    const auto C = AbelianCode::make(2, 1, {15, 15}, {});
    EXPECT_THROW(verify_true_distance(C, BoundSet(), 20), std::invalid_argument);
}

TEST(Verify, ProvenAgreesWithOracle) {
    std::mt19937_64 rng(52);
    const BoundSet B;
    int proven = 0;
    for (int it = 0; it < 60; ++it) {
        const auto ctx = make_context(2, 1, {5, 7});
        const AbelianCode C(ctx, props::random_orbit_set({5, 7}, 2, rng, 0.6), default_roots({5, 7}));
        if (dimension(C) == 0 || dimension(C) > 16) continue;
        const auto v = verify_true_distance(C, B);
        if (!v.proven) continue;
        EXPECT_EQ(min_distance_bruteforce(C).d, v.d);
        ++proven;
    }
    EXPECT_GT(proven, 5);
}

TEST(Prune, ThreeBy45) {
    const auto ctx = make_context(2, 1, {3, 45});
    const auto con = construct_true_distance_code(parse_poly(ctx, {3}, "1+X"), parse_poly(ctx, {45}, kB45), ctx,
                                                  default_roots({3, 45}));
    const auto pruned = prune_defining_set(con.code, con.witness);
    EXPECT_TRUE(pruned.defining_set().subset_of(con.code.defining_set()));
    EXPECT_GE(dimension(pruned), dimension(con.code));
    EXPECT_EQ(code_apparent_at(pruned, BoundSet()), 10);
    EXPECT_EQ(dimension(pruned), 69u);
}

TEST(Prune, FixedPointAndInclusion) {
    const auto ctx = make_context(2, 1, {7, 7});
    const std::vector<std::string> fs{"1+X+X^3", "1+X^2+X^3", "(1+X)*(1+X+X^3)", "(1+X+X^3)*(1+X^2+X^3)"};
    for (const auto& fa : fs)
        for (const auto& fb : fs) {
            const auto con = construct_true_distance_code(parse_poly(ctx, {7}, fa), parse_poly(ctx, {7}, fb), ctx,
                                                          default_roots({7, 7}));
            const auto pr = prune_defining_set(con.code, con.witness);
            EXPECT_TRUE(pr.defining_set().subset_of(con.code.defining_set()));
            EXPECT_EQ(code_apparent_at(pr, BoundSet()), con.cert.guaranteed_d);
            const auto again = prune_defining_set(pr, con.witness);
            EXPECT_EQ(again.defining_set(), pr.defining_set());
        }
}

TEST(Bch, DefiningSetExamples) {
    EXPECT_TRUE(bch_defining_set(BchSpec{}, 2, {3, 45}).empty());
    const auto D = bch_defining_set(BchSpec{{1, 2}, {4, 2}, {5, 0}}, 2, {7, 15});
    EXPECT_EQ(105 - D.size(), 42u);
    const auto ctx = make_context(2, 1, {7, 15});
    const AbelianCode C(ctx, D, default_roots({7, 15}));
    EXPECT_EQ(code_apparent_at(C, BoundSet()), 8);
    EXPECT_THROW(bch_defining_set(BchSpec{{1}, {1}, {0}}, 2, {7, 15}), std::invalid_argument);
    EXPECT_THROW(bch_defining_set(BchSpec{{3}, {2}, {0}}, 2, {7, 15}), std::invalid_argument);
}

TEST(Bch, ThreeBy45Variant) {
    const auto ctx = make_context(2, 1, {3, 45});
    const auto a = parse_poly(ctx, {3}, "1+X"), b = parse_poly(ctx, {45}, kB45);
    const auto spec = bch_spec_from_factors(a, 1, b, 5);
    EXPECT_EQ(spec.gamma, (std::vector<int>{1, 2}));
    EXPECT_EQ(spec.delta, (std::vector<int>{2, 5}));
    EXPECT_EQ(spec.b, (std::vector<int>{0, 1}));
    const AbelianCode C(ctx, bch_defining_set(spec, 2, {3, 45}), default_roots({3, 45}));
    EXPECT_EQ(dimension(C), 58u);
    EXPECT_EQ(code_apparent_at(C, BoundSet()), 10);
    const auto rec = recognize_bivariate_bch(C);
    ASSERT_TRUE(rec.has_value());
    EXPECT_EQ(*rec, spec);
}

TEST(Bch, RecognizeTrivialAndNonConsecutive) {
    const auto ctx = make_context(2, 1, {7, 15});
    const auto rec = recognize_bivariate_bch(AbelianCode(ctx, OrbitSet({7, 15}, 2), default_roots({7, 15})));
    ASSERT_TRUE(rec.has_value());
    EXPECT_TRUE(rec->gamma.empty());
    // projection C_2(0) u C_2(5) mod 15 is no single run closure
    std::vector<std::uint8_t> mask(105, 0);
    const auto cols = orbits_from_reps({{0}, {5}}, 2, {15});
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 15; ++j) mask[i * 15 + j] = cols.contains(static_cast<std::size_t>(j));
    const AbelianCode C(ctx, OrbitSet::from_mask({7, 15}, 2, mask), default_roots({7, 15}));
    EXPECT_FALSE(recognize_bivariate_bch(C).has_value());
    EXPECT_FALSE(recognize_cyclic_bch(cols.mask(), 2).has_value());
    const auto C85 = AbelianCode::make(2, 1, {7, 7}, {{0, 3}, {1, 3}, {1, 5}, {1, 6}, {3, 0}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}});
    EXPECT_THROW(recognize_bivariate_bch(C85), std::invalid_argument);
}

TEST(Bch, CyclicRecognitionPrefersLongestRun) {
    // C_2(1) mod 15 = {1,2,4,8}: runs {1,2} (delta 3) and {1} (delta 2) both close to it
    const auto D = orbits_from_reps({{1}}, 2, {15});
    const auto rec = recognize_cyclic_bch(D.mask(), 2);
    ASSERT_TRUE(rec.has_value());
    EXPECT_EQ(rec->first, 3);
    EXPECT_EQ(rec->second, 1);
}

TEST(Product, Examples) {
    const auto ctx = make_context(2, 1, {3, 7});
    const auto g = outer_product(parse_poly(ctx, {3}, "X+X^2"), parse_poly(ctx, {7}, "X+X^2+X^4"));
    std::vector<std::uint8_t> mask(21);
    for (std::size_t i = 0; i < 21; ++i) mask[i] = g[i] == 0;
    const AbelianCode C(ctx, OrbitSet::from_mask({3, 7}, 2, mask), default_roots({3, 7}));
    const auto pc = product_apparent_check(C);
    EXPECT_EQ(pc.bmad, 8);
    EXPECT_EQ(pc.delta1, 2);
    EXPECT_EQ(pc.delta2, 4);
    EXPECT_TRUE(pc.product_holds);
    EXPECT_TRUE(pc.bmad_equals_apparent);
    const auto pe = product_apparent_check(AbelianCode(ctx, OrbitSet({3, 7}, 2), default_roots({3, 7})));
    EXPECT_EQ(pe.bmad, 1);
    EXPECT_EQ(pe.delta1, 1);
    EXPECT_EQ(pe.delta2, 1);
}

TEST(Product, RandomCpMatrices) {
    std::mt19937_64 rng(53);
    const std::vector<std::vector<int>> dimsets{{5, 7}, {7, 9}, {3, 5}, {7, 7}, {5, 9}};
    for (int it = 0; it < 100; ++it) {
        const auto& dims = dimsets[rng() % dimsets.size()];
        const auto ctx = make_context(2, 1, dims);
        const auto P1 = props::random_orbit_set({dims[0]}, 2, rng, 0.5), P2 = props::random_orbit_set({dims[1]}, 2, rng, 0.5);
        if (P1.empty() || P2.empty()) continue;
        std::vector<std::uint8_t> mask(static_cast<std::size_t>(dims[0]) * dims[1]);
        for (int i = 0; i < dims[0]; ++i)
            for (int j = 0; j < dims[1]; ++j)
                mask[static_cast<std::size_t>(i) * dims[1] + j] =
                    !(P1.contains(static_cast<std::size_t>(i)) && P2.contains(static_cast<std::size_t>(j)));
        const AbelianCode C(ctx, OrbitSet::from_mask(dims, 2, mask), default_roots(dims));
        const auto pc = product_apparent_check(C);
        EXPECT_TRUE(pc.product_holds);
        EXPECT_TRUE(pc.bmad_equals_apparent);
        EXPECT_EQ(pc.bmad, bmad_bruteforce(afforded(C.defining_set()), BoundSet(), 24));
    }
    const auto C85 = AbelianCode::make(2, 1, {7, 7}, {{0, 3}, {1, 3}, {1, 5}, {1, 6}, {3, 0}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}});
    EXPECT_THROW(product_apparent_check(C85), std::invalid_argument);
}

TEST(Bch, SpecFromTableFactors) {
    const auto ctx = make_context(2, 1, {7, 15});
    const auto spec = bch_spec_from_factors(parse_poly(ctx, {7}, "1+X+X^3"), 1, parse_poly(ctx, {15}, "(X^15-1)/(1+X+X^4)"), 1);
    EXPECT_EQ(spec.gamma, (std::vector<int>{1, 2}));
    EXPECT_EQ(spec.delta, (std::vector<int>{4, 4}));
    EXPECT_EQ(spec.b, (std::vector<int>{5, 13}));
    const auto full = bch_spec_from_factors(parse_poly(ctx, {7}, "(1+X+X^3)*(1+X^2+X^3)"), 0,
                                            parse_poly(ctx, {15}, "(X^15-1)/(1+X+X^2)"), 1);
    EXPECT_EQ(full.gamma, (std::vector<int>{2}));
}
