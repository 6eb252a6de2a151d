#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wildvf/corpus.hpp"
#include "wildvf/embed.hpp"
#include "wildvf/error.hpp"

using namespace wildvf;

namespace {

Poly P(std::string_view text) { return Poly::parse(xyz_context(), text); }

Poly strip_xy_free(const Poly& p) {
    Poly out(p.context());
    for (const auto& [m, c] : p.terms())
        if (m.exponents[0] + m.exponents[1] > 0) out.add_term(m, c);
    return out;
}

// Integrates in y first, then x: a second construction of a potential.
Poly potential_yx(const Poly& f, const Poly& g) {
    const Poly a = antiderivative(g, "y");
    return a + antiderivative(f - partial(a, "x"), "x");
}

MatrixPair zero_pair(std::size_t n) { return validate_pair(RatMatrix(n, n), RatMatrix(n, n)); }

// S v_k, T v_k lie in span(v_1..v_{k-1}) for every prefix.
void expect_flag(const MatrixPair& p, const RatMatrix& f) {
    const std::size_t n = p.n();
    ASSERT_EQ(f.rows(), n);
    ASSERT_EQ(f.cols(), n);
    ASSERT_NE(oracle::det_leibniz(oracle::rows_of(f)), 0);
    for (std::size_t k = 0; k < n; ++k) {
        oracle::Mat prefix(n, oracle::Vec(k));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j) prefix[i][j] = f(i, j);
        for (const RatMatrix* m : {&p.S(), &p.T()}) {
            const RatVector image = *m * f.column(k);
            if (k == 0) {
                EXPECT_TRUE(is_zero(image));
            } else {
                EXPECT_TRUE(oracle::solve(prefix, image)) << "prefix " << k;
            }
        }
    }
}

void expect_intertwines(const EmbeddedModule& em) {
    const auto dx = oracle::derivative_matrix(em.polys, "x");
    const auto dy = oracle::derivative_matrix(em.polys, "y");
    ASSERT_TRUE(dx && dy);
    const oracle::Mat F = oracle::rows_of(em.flag_basis);
    // F * (d/dx matrix) = S * F, i.e. d/dx acts as S in the flag basis
    EXPECT_EQ(oracle::mul(F, *dx), oracle::mul(oracle::rows_of(em.source.S()), F));
    EXPECT_EQ(oracle::mul(F, *dy), oracle::mul(oracle::rows_of(em.source.T()), F));
    EXPECT_EQ(oracle::rows_of(em.flag_S()), *dx);
    EXPECT_EQ(oracle::rows_of(em.flag_T()), *dy);
}

}  // namespace

TEST(Potential, Examples) {
    EXPECT_EQ(potential(P("y"), P("x")), P("x*y"));
    EXPECT_TRUE(potential(P("0"), P("0")).is_zero());
    EXPECT_EQ(potential(P("2*x + z"), P("3*y^2")), P("x^2 + x*z + y^3"));
    try {
        potential(P("y"), P("0"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotClosed);
    }
    EXPECT_THROW(potential(P("x"), Poly::variable(VarContext{"x", "y", "w"}, "x")), Error);
}

TEST(Potential, RecoversRandomPotentials) {
    CounterRng rng(41);
    for (int i = 0; i < 300; ++i) {
        const Poly h = strip_xy_free(oracle::random_poly(rng, xyz_context(), 6, 9, 8));
        EXPECT_EQ(potential(partial(h, "x"), partial(h, "y")), h);
    }
}

TEST(Potential, UniqueUpToXYFreeSummands) {
    CounterRng rng(42);
    for (int i = 0; i < 200; ++i) {
        const Poly h = oracle::random_poly(rng, xyz_context(), 6, 9, 8);
        const Poly f = partial(h, "x");
        const Poly g = partial(h, "y");
        const Poly a = potential(f, g);
        const Poly b = potential_yx(f, g);
        EXPECT_EQ(partial(a, "x"), f);
        EXPECT_EQ(partial(a, "y"), g);
        const Poly diff = a - b;
        EXPECT_TRUE(is_free_of(diff, "x") && is_free_of(diff, "y"));
        const Poly diff_h = h - a;
        EXPECT_TRUE(is_free_of(diff_h, "x") && is_free_of(diff_h, "y"));
        EXPECT_EQ(strip_xy_free(a), a);
    }
}

TEST(InvariantFlag, Examples) {
    EXPECT_EQ(invariant_flag(zero_pair(1)), RatMatrix::identity(1));
    const MatrixPair j2 = validate_pair(jordan_block(2), RatMatrix(2, 2));
    const RatMatrix f = invariant_flag(j2);
    expect_flag(j2, f);
    // v_1 spans ker S ∩ ker T = span(e_1)
    EXPECT_NE(f(0, 0), 0);
    EXPECT_EQ(f(1, 0), 0);
}

TEST(InvariantFlag, RandomPairs) {
    CounterRng rng(43);
    for (std::size_t i = 0; i < 60; ++i) {
        MatrixPair p = generate(recipe_suite(60, 300)[i]);
        if (i % 2) p = conjugate(p, random_invertible(rng, p.n()));
        expect_flag(p, invariant_flag(p));
    }
}

TEST(Embed, Examples) {
    const EmbeddedModule one = embed(zero_pair(1));
    ASSERT_EQ(one.polys.size(), 1u);
    EXPECT_EQ(one.polys[0], P("1"));
    EXPECT_TRUE(verify_embedding(one).ok());

    const EmbeddedModule j2 = embed(validate_pair(jordan_block(2), RatMatrix(2, 2)));
    ASSERT_EQ(j2.polys.size(), 2u);
    EXPECT_EQ(j2.polys[0], P("1"));
    EXPECT_EQ(j2.polys[1], P("x"));
    expect_intertwines(j2);

    const EmbeddedModule j3 = embed(generate(PairRecipe::jordan(3, "x^2")));
    ASSERT_EQ(j3.polys.size(), 3u);
    EXPECT_EQ(j3.polys[0], P("1"));
    EXPECT_EQ(j3.polys[1], P("x"));
    EXPECT_EQ(j3.polys[2], P("1/2*x^2 + y"));
    expect_intertwines(j3);
}

TEST(Embed, ZeroPairNeedsZBumps) {
    const EmbeddedModule em = embed(zero_pair(3));
    // every potential is 0, so independence comes from powers of z
    EXPECT_EQ(em.polys[0], P("1"));
    EXPECT_EQ(em.polys[1], P("z"));
    EXPECT_EQ(em.polys[2], P("z^2"));
    expect_intertwines(em);
    EXPECT_TRUE(verify_embedding(em).ok());
}

TEST(Embed, RandomPairsIntertwine) {
    CounterRng rng(44);
    for (std::size_t i = 0; i < 60; ++i) {
        MatrixPair p = generate(recipe_suite(60, 400)[i]);
        if (i % 3 == 0) p = conjugate(p, random_invertible(rng, p.n()));
        const EmbeddedModule em = embed(p);
        ASSERT_EQ(em.polys.size(), p.n());
        EXPECT_EQ(oracle::rank(oracle::coefficient_columns(em.polys)), p.n());
        expect_intertwines(em);
        EXPECT_TRUE(verify_embedding(em).ok()) << i;
    }
}

TEST(Closure, Examples) {
    const Poly x[] = {P("x")};
    const PolySpan cx = closure(x);
    EXPECT_EQ(cx.dimension(), 2u);
    EXPECT_TRUE(cx.contains(P("x")));
    EXPECT_TRUE(cx.contains(P("1")));
    const Poly one[] = {P("1")};
    EXPECT_EQ(closure(one).dimension(), 1u);
    const Poly mixed[] = {P("x^2*y + z")};
    // x^2 y + z, 2xy, x^2, 2y, 2x, 2, plus nothing else
    EXPECT_EQ(closure(mixed).dimension(), 6u);

    const EmbeddedModule em = embed(generate(PairRecipe::strictly_upper(5, 9)));
    const PolySpan c = closure(em.polys);
    EXPECT_EQ(c.dimension(), em.polys.size());
    for (const auto& p : em.polys) EXPECT_TRUE(c.contains(p));
}

TEST(PolySpanTest, ReduceAndContains) {
    PolySpan s(xyz_context());
    EXPECT_TRUE(s.insert(P("x + y")));
    EXPECT_TRUE(s.insert(P("y + 1")));
    EXPECT_FALSE(s.insert(P("x - 1")));
    EXPECT_TRUE(s.contains(P("2*x + 3*y + 1")));
    EXPECT_FALSE(s.contains(P("x")));
    EXPECT_TRUE(s.reduce(P("x - 1")).is_zero());
    EXPECT_EQ(s.dimension(), 2u);
    for (const auto& b : s.basis()) EXPECT_EQ(b.leading_coefficient(), 1);
}

TEST(VerifyEmbedding, DetectsTampering) {
    for (std::size_t i = 0; i < 30; ++i) {
        const MatrixPair p = generate(recipe_suite(30, 600)[i]);
        EmbeddedModule em = embed(p);
        ASSERT_TRUE(verify_embedding(em).ok());
        em.polys.back() += P("x") * em.polys.back();
        const VerificationReport r = verify_embedding(em);
        EXPECT_FALSE(r.ok()) << i;
        ASSERT_NE(r.first_failure(), nullptr);
    }
    EmbeddedModule em = embed(generate(PairRecipe::jordan(3, "x^2")));
    em.polys[1] = P("x + y");
    const VerificationReport r = verify_embedding(em);
    ASSERT_FALSE(r.ok());
    // d/dx of p_3 = x^2/2 + y is x, which left the span
    bool closed_failed = false;
    for (const auto& c : r.checks)
        if (c.name == "closed") {
            closed_failed = !c.passed;
            EXPECT_EQ(c.index, std::optional<std::size_t>(3));
        }
    EXPECT_TRUE(closed_failed);
}
