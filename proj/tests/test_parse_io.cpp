#include <gtest/gtest.h>

#include <random>

#include "abelian/io.hpp"
#include "abelian/parse.hpp"
#include "support/properties.hpp"

using namespace abelian;

TEST(Parse, Basics) {
    const auto ctx = make_context(2, 1, {5, 9});
    const auto f = parse_poly(ctx, {5, 9}, "X1X2^3 + X1^4*X2^3");
    EXPECT_EQ(f.weight(), 2u);
    EXPECT_EQ(f.at({1, 3}), 1u);
    EXPECT_EQ(f.at({4, 3}), 1u);
    // reduction mod X^r - 1 and characteristic 2
    EXPECT_EQ(parse_poly(ctx, {5, 9}, "X1^6 + X1"), MultiPoly(ctx, {5, 9}));
    EXPECT_EQ(parse_poly(ctx, {5, 9}, "X Y"), parse_poly(ctx, {5, 9}, "X1*X2"));
    EXPECT_EQ(parse_poly(ctx, {5, 9}, "3"), MultiPoly::constant(ctx, {5, 9}, 1));
}

TEST(Parse, DivisionAndPowers) {
    const auto ctx = make_context(2, 1, {15});
    const auto f = parse_poly(ctx, {15}, "(X^15-1)/(1+X+X^4)");
    EXPECT_EQ(lift(f).degree(), 11);
    EXPECT_EQ(parse_poly(ctx, {15}, "(1+X)^2"), parse_poly(ctx, {15}, "1+X^2"));
    EXPECT_THROW(parse_poly(ctx, {15}, "(X^15-1)/(1+X+X^3)"), std::invalid_argument);
    EXPECT_THROW(parse_poly(ctx, {15}, "X3"), std::invalid_argument);
    EXPECT_THROW(parse_poly(ctx, {15}, "1+"), std::invalid_argument);
    EXPECT_THROW(parse_poly(ctx, {15}, "(1+X"), std::invalid_argument);
}

TEST(Parse, ExtensionCoefficients) {
    const auto ctx = make_context(2, 1, {3, 7});  // L = F_64
    const auto f = parse_poly(ctx, {3, 7}, "w^3*X1 + w");
    EXPECT_FALSE(f.base_field_coeffs());
    EXPECT_EQ(parse_poly(ctx, {3, 7}, format_poly(f)), f);
    const auto c5 = make_context(5, 1, {4, 6});
    EXPECT_EQ(parse_poly(c5, {4, 6}, "-X1"), parse_poly(c5, {4, 6}, "4*X1"));
}

TEST(Parse, FormatRoundTripRandom) {
    std::mt19937_64 rng(61);
    for (const auto& [p, dims] : std::vector<std::pair<int, std::vector<int>>>{{2, {5, 7}}, {3, {4, 5}}, {2, {15}}, {2, {3, 3, 7}}}) {
        const auto ctx = make_context(p, 1, dims);
        for (int i = 0; i < 40; ++i) {
            const auto f = props::random_poly(ctx, dims, rng, i % 2 == 0, 0.3);
            EXPECT_EQ(parse_poly(ctx, dims, format_poly(f)), f) << format_poly(f);
        }
    }
}

TEST(Parse, IntList) {
    EXPECT_EQ(parse_int_list("1,2,4"), (std::vector<int>{1, 2, 4}));
    EXPECT_EQ(parse_int_list("{5, 13}"), (std::vector<int>{5, 13}));
    EXPECT_EQ(parse_int_list("[]"), std::vector<int>{});
    EXPECT_THROW(parse_int_list("1,x"), std::invalid_argument);
}

TEST(Io, OrbitSetRoundTrip) {
    const auto D = orbits_from_reps({{0, 3}, {1, 3}, {3, 5}}, 2, {7, 7});
    const json j = to_json(D);
    EXPECT_EQ(j["dims"], json({7, 7}));
    EXPECT_EQ(orbit_set_from_json(json::parse(j.dump())), D);
    json bad = j;
    bad["reps"].push_back(json{9, 0});
    EXPECT_THROW(orbit_set_from_json(bad), std::invalid_argument);
}

TEST(Io, PolyRoundTrip) {
    std::mt19937_64 rng(62);
    const auto ctx = make_context(3, 1, {4, 5});
    const auto f = props::random_poly(ctx, {4, 5}, rng, false, 0.4);
    EXPECT_EQ(poly_from_json(json::parse(to_json(f).dump()), ctx), f);
    json bad = to_json(f);
    bad["coeffs"].push_back(json{0, 0, static_cast<int>(ctx->size())});
    EXPECT_THROW(poly_from_json(bad, ctx), std::invalid_argument);
}

TEST(Io, CodeRoundTrip) {
    const auto C = AbelianCode::make(2, 1, {5, 9}, {{0, 0}, {1, 3}}, RootSelection{{2, 4}});
    const auto back = code_from_json(json::parse(to_json(C).dump()));
    EXPECT_EQ(back.defining_set(), C.defining_set());
    EXPECT_EQ(back.roots(), C.roots());
    EXPECT_EQ(back.q(), 2u);
    json bad = to_json(C);
    bad["roots"] = json{5, 3};
    EXPECT_THROW(code_from_json(bad), std::invalid_argument);
}

TEST(Io, MatrixAndTrace) {
    const auto M = afforded(orbits_from_reps({{0, 3}, {1, 3}, {1, 5}, {1, 6}, {3, 0}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}}, 2, {7, 7}));
    EXPECT_EQ(matrix_from_json(json::parse(to_json(M).dump())), M);
    const json t = to_json(bmad(M, BoundSet()));
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t[0]["delta"], 9);
    EXPECT_EQ(t[0]["m"], 9);
    EXPECT_EQ(to_json(BchSpec{{1, 2}, {2, 5}, {0, 1}})["b"], json({0, 1}));
    const json c = to_json(Certificate{10, 10, 10, 10, true});
    EXPECT_TRUE(c["certified"].get<bool>());
}
