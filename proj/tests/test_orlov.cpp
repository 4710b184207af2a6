#include <doctest.h>

#include "support/fixtures.hpp"

using namespace kktest;

TEST_SUITE("orlov-cat") {

TEST_CASE("shipped fixtures validate") {
    for (const char* n : {"FIX_PT", "FIX_A2", "FIX_A3", "FIX_A2_MOD3", "FIX_A2_SHIFT5", "FIX_A3_ZERO"})
        CHECK_MESSAGE(validate_presentation(fixture(n)).valid(), n);
}

TEST_CASE("same-degree Hom is a violation with witness (a,b)") {
    const ValidationReport r = validate_presentation(fixture("FIX_BAD"));
    REQUIRE_FALSE(r.valid());
    CHECK(r.violations.front().kind == "degree-vanishing");
    CHECK(r.violations.front().witness == std::vector<std::string>{"a", "b"});
}

TEST_CASE("planted associativity defect names the triple") {
    const ValidationReport r = validate_presentation(fixture("FIX_NONASSOC"));
    REQUIRE_FALSE(r.valid());
    CHECK(r.violations.front().kind == "associativity");
    CHECK(r.violations.front().witness == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("missing identity is malformed") {
    const auto p = parse(R"({"characteristic": 0, "indecomposables": [{"id": "a", "degree": 0}],
                             "hom": [], "compose": []})");
    const ValidationReport r = validate_presentation(*p);
    CHECK_FALSE(r.malformed.empty());
}

TEST_CASE("unknown ids and labels are input errors") {
    CHECK_THROWS_AS(parse(R"({"characteristic": 0, "indecomposables": [{"id": "a", "degree": 0}],
                              "hom": [{"src": "a", "tgt": "z", "basis": ["f"]}], "compose": []})"),
                    InputError);
    const Presentation& a2 = fixture("FIX_A2");
    CHECK_THROWS_AS(basis_map(a2, "a", "b", "alpha"), InputError);
    CHECK_THROWS_AS(basis_map(a2, "b", "a", "nope"), InputError);
}

TEST_CASE("compose: unit law, structure constant, zero") {
    const Presentation& a3 = fixture("FIX_A3");
    const AddMorphism alpha = basis_map(a3, "b", "a", "alpha");
    const AddMorphism beta = basis_map(a3, "c", "b", "beta");
    CHECK(compose(identity_morphism(a3, obj(a3, "a")), alpha) == alpha);
    CHECK(compose(alpha, identity_morphism(a3, obj(a3, "b"))) == alpha);
    CHECK(compose(alpha, beta) == basis_map(a3, "c", "a", "gamma"));
    CHECK(compose(alpha, zero_morphism(a3, obj(a3, "c"), obj(a3, "b"))).is_zero());
}

TEST_CASE("hom dimensions in FIX_A2") {
    const Presentation& a2 = fixture("FIX_A2");
    CHECK(hom_dim(a2, obj(a2, "a+b"), obj(a2, "a")) == 2);
    CHECK(hom_basis(a2, obj(a2, "a+b"), obj(a2, "a")).size() == 2);
    CHECK(hom_dim(a2, obj(a2, "a"), obj(a2, "b")) == 0);
    const AddMorphism id = identity_morphism(a2, obj(a2, "a+b+a"));
    CHECK(compose(id, id) == id);
}

TEST_CASE("split_idempotent") {
    const Presentation& a2 = fixture("FIX_A2");
    const AddObject x = obj(a2, "a+b");
    const IdempotentSplitting s_id = split_idempotent(identity_morphism(a2, x));
    CHECK(same_multiset(s_id.image, x));
    CHECK(split_idempotent(zero_morphism(a2, x, x)).image.empty());

    std::mt19937_64 rng(7);
    const AddObject aa = obj(a2, "a+a");
    const AddMorphism proj = mor(a2, "a+a", "a+a", R"([{"row": 0, "col": 0, "label": "1@a", "coeff": "1"}])");
    for (int k = 0; k < 10; ++k) {
        const AddMorphism g = random_automorphism(a2, aa, rng);
        const AddMorphism e = compose(g, compose(proj, *invert(g)));
        REQUIRE(compose(e, e) == e);
        const IdempotentSplitting s = split_idempotent(e);
        CHECK(s.image == obj(a2, "a"));
        CHECK(compose(s.inclusion, s.projection) == e);
        CHECK(compose(s.projection, s.inclusion) == identity_morphism(a2, s.image));
    }
}

TEST_CASE("invert rejects non-isomorphisms") {
    const Presentation& a2 = fixture("FIX_A2");
    CHECK_FALSE(invert(basis_map(a2, "b", "a", "alpha")));
    const AddMorphism two = basis_map(a2, "a", "a", "1@a", "2");
    const auto inv = invert(two);
    REQUIRE(inv);
    CHECK(*inv == basis_map(a2, "a", "a", "1@a", "1/2"));
}

TEST_CASE("scalars respect the characteristic of the fixture") {
    const Presentation& m3 = fixture("FIX_A2_MOD3");
    CHECK(basis_map(m3, "a", "a", "1@a", "4") == identity_morphism(m3, obj(m3, "a")));
    CHECK(basis_map(m3, "a", "a", "1@a", "3").is_zero());
}

}
