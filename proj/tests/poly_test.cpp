#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wildvf/error.hpp"
#include "wildvf/poly.hpp"

using namespace wildvf;

namespace {

const VarContext& ctx() {
    static const VarContext c{"x", "y", "z"};
    return c;
}

Poly P(std::string_view text) { return Poly::parse(ctx(), text); }

}  // namespace

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(parse_rat("-6/4"), Rat(-3, 2));
    EXPECT_EQ(parse_rat("7"), Rat(7));
    EXPECT_EQ(format_rat(parse_rat("4/2")), "2");
    EXPECT_EQ(format_rat(Rat(-1, 3)), "-1/3");
    for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "--1", "1/"}) {
        EXPECT_THROW(parse_rat(bad), Error) << bad;
    }
}

TEST(Poly, Examples) {
    EXPECT_EQ(P("(x+1)*(x-1)"), P("x^2 - 1"));
    EXPECT_EQ(P("x*y + 3") + Poly(ctx()), P("x*y + 3"));
    EXPECT_EQ(scale(Rat(1, 2), P("2*x")), P("x"));
    EXPECT_EQ(partial(P("x^2*y"), "x"), P("2*x*y"));
    EXPECT_TRUE(partial(P("z^3"), "x").is_zero());
    EXPECT_EQ(partial(P("x*y + y^2"), "y"), P("x + 2*y"));
    EXPECT_EQ(antiderivative(P("2*x*y"), "x"), P("x^2*y"));
    EXPECT_TRUE(antiderivative(Poly(ctx()), "y").is_zero());
    EXPECT_EQ(antiderivative(P("x^2"), "x"), P("1/3*x^3"));
    EXPECT_TRUE(is_free_of(P("z^2 + 1"), "x"));
    EXPECT_FALSE(is_free_of(P("x*z"), "x"));
    EXPECT_TRUE(is_free_of(Poly(ctx()), "y"));
}

TEST(Poly, PrintingGolden) {
    EXPECT_EQ(P("1/2*x^2 + y").to_string(), "1/2 * x^2 + y");
    EXPECT_EQ(P("-x").to_string(), "-x");
    EXPECT_EQ(P("0").to_string(), "0");
    EXPECT_EQ(P("y + x^2*z - 3").to_string(), "x^2 * z + y - 3");
    EXPECT_EQ(P("-2/3*x*y - x").to_string(), "-2/3 * x * y - x");
    EXPECT_EQ(P("1/2*x^2").to_latex(), "\\frac{1}{2}x^{2}");
}

TEST(Poly, GrlexOrder) {
    const Poly p = P("z + x*y + y^3 + x^3");
    EXPECT_EQ(p.leading_monomial().exponents, (std::vector<unsigned>{3, 0, 0}));
    EXPECT_EQ(p.total_degree(), 3u);
    EXPECT_EQ(p.degree_in(1), 3u);
}

TEST(Poly, ContextErrors) {
    const VarContext other{"x", "y"};
    EXPECT_THROW(P("x") + Poly::variable(other, "x"), Error);
    EXPECT_THROW(P("w"), Error);
    EXPECT_THROW(P("x +"), Error);
    EXPECT_THROW((VarContext{"x", "x"}), Error);
    EXPECT_EQ(Poly::variable(other, "y").in_context(ctx()), P("y"));
    EXPECT_THROW(P("z").in_context(other), Error);
}

TEST(Poly, ParseRoundTrip) {
    CounterRng rng(11);
    for (int i = 0; i < 200; ++i) {
        const Poly p = oracle::random_poly(rng, ctx(), 5, 9, 6);
        EXPECT_EQ(Poly::parse(ctx(), p.to_string()), p);
    }
}

TEST(Poly, PartialsCommute) {
    CounterRng rng(12);
    for (int i = 0; i < 200; ++i) {
        const Poly p = oracle::random_poly(rng, ctx(), 6, 9, 8);
        EXPECT_EQ(partial(partial(p, "x"), "y"), partial(partial(p, "y"), "x"));
        EXPECT_EQ(partial(partial(p, "z"), "x"), partial(partial(p, "x"), "z"));
    }
}

TEST(Poly, AntiderivativeRoundTrip) {
    CounterRng rng(13);
    for (int i = 0; i < 200; ++i) {
        const Poly p = oracle::random_poly(rng, ctx(), 6, 9, 8);
        for (const char* v : {"x", "y", "z"}) {
            EXPECT_EQ(partial(antiderivative(p, v), v), p);
            // d/dv then integrate drops exactly the v-free part.
            Poly free(ctx());
            for (const auto& [m, c] : p.terms())
                if (m.exponents[ctx().index_of(v)] == 0) free.add_term(m, c);
            EXPECT_EQ(antiderivative(partial(p, v), v), p - free);
        }
    }
}

TEST(Poly, RingAxioms) {
    CounterRng rng(14);
    for (int i = 0; i < 100; ++i) {
        const Poly a = oracle::random_poly(rng, ctx(), 4, 9, 5);
        const Poly b = oracle::random_poly(rng, ctx(), 4, 9, 5);
        const Poly c = oracle::random_poly(rng, ctx(), 4, 9, 5);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_TRUE((a - a).is_zero());
        // product rule as an independent check of partial
        EXPECT_EQ(partial(a * b, "y"), partial(a, "y") * b + a * partial(b, "y"));
    }
}
