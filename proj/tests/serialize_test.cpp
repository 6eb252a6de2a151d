#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wildvf/error.hpp"
#include "wildvf/serialize.hpp"

using namespace wildvf;

namespace {

// No floats anywhere, and every string that looks like a number is a
// canonical rational.
void expect_exact(const json& j) {
    if (j.is_number_float()) ADD_FAILURE() << "float in " << j.dump();
    if (j.is_structured())
        for (const auto& v : j) expect_exact(v);
}

template <class T, class Read>
void expect_round_trip(const T& value, Read read) {
    const std::string text = emit(to_json(value));
    const std::string again = emit(to_json(read(parse_json(text))));
    EXPECT_EQ(text, again);
    expect_exact(parse_json(text));
}

}  // namespace

TEST(Serialize, Rationals) {
    EXPECT_EQ(to_json(parse_rat("-3/6")), "-1/2");
    EXPECT_EQ(rat_from_json(json("10/4")), Rat(5, 2));
    EXPECT_THROW(rat_from_json(json(0.5)), Error);
    EXPECT_THROW(rat_from_json(json("1/0")), Error);
}

TEST(Serialize, PairsAndErrors) {
    const MatrixPair p = generate(PairRecipe::jordan(3, "x^2 - 1/2*x"));
    expect_round_trip(p, pair_from_json);
    EXPECT_EQ(to_json(p)["S"][0][1], "1");
    EXPECT_EQ(to_json(p)["T"][0][1], "-1/2");

    json bad = to_json(p);
    bad["n"] = 2;
    EXPECT_THROW(pair_from_json(bad), Error);
    bad = to_json(p);
    bad["S"][1][0] = "1";
    try {
        pair_from_json(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCommuting);
    }
    bad = to_json(p);
    bad.erase("T");
    EXPECT_THROW(pair_from_json(bad), Error);
    EXPECT_THROW(parse_json("{\"n\": "), Error);
}

TEST(Serialize, Recipes) {
    for (const auto& r : recipe_suite(40, 3)) {
        expect_round_trip(r, recipe_from_json);
        EXPECT_EQ(recipe_from_json(to_json(r)), r);
    }
    PairRecipe r = PairRecipe::conjugated(PairRecipe::jordan(2, "x^2"), 4,
                                          RatMatrix::from_rows({{Rat(1), Rat(1, 2)}, {Rat(0), Rat(1)}}));
    expect_round_trip(r, recipe_from_json);
    EXPECT_EQ(recipe_from_json(to_json(r)), r);
    EXPECT_THROW(recipe_from_json(json{{"kind", "spiral"}}), Error);
}

TEST(Serialize, DerivationsAndAlgebras) {
    CounterRng rng(71);
    for (int i = 0; i < 30; ++i) {
        const Derivation d = oracle::random_derivation(rng, xyzt_context(), 3, 3);
        expect_round_trip(d, derivation_from_json);
        EXPECT_EQ(derivation_from_json(to_json(d)), d);
    }
    for (const auto& r : recipe_suite(20, 5)) {
        const RealizedAlgebra ra = realize(generate(r));
        expect_round_trip(ra.abstract, [](const json& j) { return liealg_from_json(j); });
        expect_round_trip(series_profile(ra.abstract), series_from_json);
        EXPECT_EQ(liealg_from_json(to_json(ra.abstract)), ra.abstract);
        EXPECT_EQ(liealg_from_json(to_json(ra.abstract)).labels(), ra.abstract.labels());
    }
    // invalid structure constants are rejected unless asked not to validate
    json bad = to_json(LieAlg::abelian(3));
    bad["constants"] = json::array({json::array({0, 1, 1, "1"}), json::array({0, 2, 0, "1"}),
                                    json::array({1, 2, 0, "1"})});
    EXPECT_THROW(liealg_from_json(bad), Error);
    EXPECT_NO_THROW(liealg_from_json(bad, false));
}

TEST(Serialize, Bundles) {
    for (const auto& r : recipe_suite(30, 8)) {
        const MatrixPair p = generate(r);
        EmbeddedBundle e{embed(p), {}};
        e.verification = verify_embedding(e.module);
        expect_round_trip(e, embedded_from_json);

        RealizedBundle b{realize(p), {}};
        b.reports = verify_realization(b.algebra);
        expect_round_trip(b, realized_from_json);
        const RealizedBundle back = realized_from_json(to_json(b));
        EXPECT_EQ(back.algebra.generators, b.algebra.generators);
        EXPECT_EQ(back.algebra.source.polys, b.algebra.source.polys);
        EXPECT_TRUE(back.ok());
    }
}

TEST(Serialize, RealizedBundleIsSelfConsistent) {
    RealizedBundle b{realize(validate_pair(jordan_block(2), RatMatrix(2, 2))), {}};
    b.reports = verify_realization(b.algebra);
    json j = to_json(b);
    EXPECT_EQ(j["generators"], json({"d/dx", "d/dy", "d/dt", "x d/dt"}));
    json tampered = j;
    tampered["generators"][3] = "y d/dt";
    EXPECT_THROW(realized_from_json(tampered), Error);
    tampered = j;
    tampered["ok"] = false;
    EXPECT_THROW(realized_from_json(tampered), Error);
}

TEST(Serialize, Reports) {
    VerificationReport r;
    r.pass("first");
    r.fail("second", 3, "entry (1, 2)");
    expect_round_trip(r, report_from_json);
    EXPECT_EQ(report_from_json(to_json(r)), r);
    EXPECT_FALSE(to_json(r)["ok"].get<bool>());
}

TEST(Serialize, WriteOnlyShapes) {
    const MatrixPair p = generate(PairRecipe::jordan(3, "x^2"));
    const json inv = to_json(invariants(p));
    EXPECT_EQ(inv["ker_common"], 1);
    expect_exact(inv);
    const json sim = to_json(similar(p, p));
    EXPECT_EQ(sim["result"], "similar");
    EXPECT_TRUE(is_invertible(matrix_from_json(sim["witness"])));
    const json fp = to_json(iso_invariants(realize(p).abstract));
    EXPECT_EQ(fp["dim"], 5);
}
