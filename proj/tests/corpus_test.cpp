#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "wildvf/corpus.hpp"
#include "wildvf/error.hpp"

using namespace wildvf;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalError;
}

}  // namespace

TEST(Recipes, JordanWord) {
    const MatrixPair p = generate(PairRecipe::jordan(3, "x^2"));
    EXPECT_EQ(p.S(), jordan_block(3));
    EXPECT_EQ(p.T(), jordan_block(3) * jordan_block(3));
    EXPECT_EQ(code_of([] { generate(PairRecipe::jordan(3, "x + 1")); }), ErrorCode::NotNilpotent);
}

TEST(Recipes, DirectSum) {
    const PairRecipe r = PairRecipe::direct_sum({PairRecipe::jordan(2, "x^2"), PairRecipe::strictly_upper(1, 0)});
    EXPECT_EQ(r.size, 3u);
    const MatrixPair p = generate(r);
    EXPECT_EQ(p.n(), 3u);
    EXPECT_EQ(p.S(), RatMatrix::from_rows({{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}}));
    EXPECT_TRUE(p.T().is_zero());
}

TEST(Recipes, Conjugated) {
    const PairRecipe base = PairRecipe::jordan(2, "x^2");
    const MatrixPair b = generate(base);
    const MatrixPair p = generate(PairRecipe::conjugated(base, 17));
    EXPECT_NO_THROW(validate_pair(p.S(), p.T()));
    const SimilarityResult r = similar(b, p);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(oracle::is_witness(b, p, *r.witness));

    const RatMatrix P = RatMatrix::from_rows({{Rat(2), Rat(1)}, {Rat(1), Rat(1)}});
    EXPECT_EQ(generate(PairRecipe::conjugated(base, 0, P)), conjugate(b, P));
    EXPECT_EQ(code_of([&] { generate(PairRecipe::conjugated(base, 0, RatMatrix(2, 2))); }),
              ErrorCode::DimensionMismatch);
}

TEST(Recipes, Deterministic) {
    const auto a = recipe_suite(50, 7);
    const auto b = recipe_suite(50, 7);
    ASSERT_EQ(a, b);
    std::set<std::string> kinds;
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(generate(a[i]), generate(b[i]));
        EXPECT_GE(a[i].size, 2u);
        EXPECT_LE(a[i].size, 6u);
        EXPECT_EQ(generate(a[i]).n(), a[i].size);
        kinds.insert(std::string(to_string(a[i].kind)));
    }
    EXPECT_EQ(kinds.size(), 4u);
    std::size_t differing = 0;
    for (std::uint64_t s = 0; s < 10; ++s)
        if (!(generate(PairRecipe::strictly_upper(4, s)) == generate(PairRecipe::strictly_upper(4, s + 100))))
            ++differing;
    EXPECT_GT(differing, 5u);
}

TEST(Recipes, Exhaustion) {
    PairRecipe r = PairRecipe::strictly_upper(3, 1);
    r.perturbation_terms = 4;
    EXPECT_EQ(code_of([&] { generate(r); }), ErrorCode::RecipeExhausted);

    // Dense S is regular nilpotent, so only polynomials in S commute with
    // it; a dense random perturbation never is one.
    r = PairRecipe::strictly_upper(6, 3);
    r.density = 100;
    r.perturbation_terms = 15;
    EXPECT_EQ(code_of([&] { generate(r); }), ErrorCode::RecipeExhausted);

    EXPECT_EQ(code_of([] { generate(PairRecipe::strictly_upper(0, 1)); }), ErrorCode::ShapeMismatch);
}

TEST(Rng, CounterBased) {
    CounterRng a(5), b(5);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
    CounterRng c(5);
    EXPECT_EQ(c.next(), splitmix64(5 + 0x9E3779B97F4A7C15ULL));
    std::array<int, 7> hist{};
    CounterRng u(9);
    for (int i = 0; i < 7000; ++i) ++hist[static_cast<std::size_t>(u.uniform(-3, 3) + 3)];
    for (int h : hist) {
        EXPECT_GT(h, 800);
        EXPECT_LT(h, 1200);
    }
}

TEST(EnumerateSmall, Counts) {
    const Rat e01[] = {Rat(0), Rat(1)};
    EXPECT_EQ(enumerate_small(1, e01).size(), 1u);
    EXPECT_TRUE(enumerate_small(1, e01)[0].S().is_zero());
    const auto two = enumerate_small(2, e01);
    EXPECT_EQ(two.size(), 4u);
    for (const auto& p : two) EXPECT_NO_THROW(validate_pair(p.S(), p.T()));
}

TEST(EnumerateSmall, ThreeByThreeMatchesBruteForce) {
    const Rat e01[] = {Rat(0), Rat(1)};
    const auto enumerated = enumerate_small(3, e01);
    const auto all = oracle::all_strictly_upper_pairs(3, e01);
    ASSERT_EQ(all.size(), 64u);
    std::size_t commuting = 0;
    for (const auto& [s, t] : all) {
        const bool commutes = oracle::mul(s, t) == oracle::mul(t, s);
        commuting += commutes;
        RatMatrix S(3, 3), T(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                S(i, j) = s[i][j];
                T(i, j) = t[i][j];
            }
        if (commutes) {
            const MatrixPair p = validate_pair(S, T);
            EXPECT_NE(std::find(enumerated.begin(), enumerated.end(), p), enumerated.end());
        } else {
            EXPECT_EQ(code_of([&] { validate_pair(S, T); }), ErrorCode::NotCommuting);
        }
    }
    EXPECT_EQ(enumerated.size(), commuting);
}
