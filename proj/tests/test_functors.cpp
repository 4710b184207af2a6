#include <doctest.h>

#include "koszulkit/functors.hpp"
#include "support/fixtures.hpp"

using namespace kktest;

TEST_SUITE("functors") {

TEST_CASE("identity functor") {
    const Presentation& a2 = fixture("FIX_A2");
    const HomogeneousFunctor id = identity_functor(a2);
    validate_functor(id);
    CHECK(apply_to_complex(id, cone_alpha(a2)) == cone_alpha(a2));
    const InfMorphism f = iota(identity_map(cone_alpha(a2)));
    CHECK(inf_equal(apply_to_inf(id, f), f));
}

TEST_CASE("scaling functor sends cone(alpha) to cone(2 alpha)") {
    const Presentation& a2 = fixture("FIX_A2");
    const Field& k = a2.field();
    const HomogeneousFunctor tw = twist_functor(a2, k.from_int(2));
    validate_functor(tw);
    const Complex fe = apply_to_complex(tw, cone_alpha(a2));
    CHECK(fe == cplx(a2, R"({"terms": {"-1": ["b"], "0": ["a"]}, "diff": {"-1": [{"label": "alpha", "coeff": "2"}]}})"));
    ChainMap w{cone_alpha(a2), fe, {}};
    w.set(-1, identity_morphism(a2, obj(a2, "b")));
    w.set(0, basis_map(a2, "a", "a", "1@a", "2"));
    REQUIRE(is_chain_map(w));
    CHECK(is_quasi_iso(w));
    for (int s = -2; s <= 2; ++s)
        CHECK(hom_space(fe, fe, s).dim() == hom_space(cone_alpha(a2), cone_alpha(a2), s).dim());
}

TEST_CASE("zero functor") {
    const Presentation& a2 = fixture("FIX_A2");
    const HomogeneousFunctor z = zero_functor(a2);
    validate_functor(z);
    CHECK(apply_to_complex(z, cone_alpha(a2)).empty());
}

TEST_CASE("functors from JSON must be homogeneous and multiplicative") {
    const Presentation& a2 = fixture("FIX_A2");
    const json swap = json::parse(R"({"on_objects": {"a": ["b"], "b": ["a"]}, "on_hom": {}})");
    CHECK_THROWS_AS(functor_from_json(a2, a2, swap), InputError);
    const json missing = json::parse(R"({"on_objects": {"a": ["a"], "b": ["b"]}, "on_hom": {}})");
    CHECK_THROWS_AS(functor_from_json(a2, a2, missing), InputError);
    const json good = json::parse(R"({"on_objects": {"a": ["a"], "b": ["b"]},
                                      "on_hom": {"alpha": [{"label": "alpha", "coeff": "3"}]}})");
    const HomogeneousFunctor f = functor_from_json(a2, a2, good);
    CHECK(f.morphism(basis_map(a2, "b", "a", "alpha")) == basis_map(a2, "b", "a", "alpha", "3"));
}

TEST_CASE("functor composition") {
    const Presentation& a3 = fixture("FIX_A3");
    const Field& k = a3.field();
    const HomogeneousFunctor g = compose_functors(twist_functor(a3, k.from_int(2)), twist_functor(a3, k.from_int(3)));
    validate_functor(g);
    std::mt19937_64 rng(73);
    for (int n = 0; n < 10; ++n) {
        const Complex x = random_complex(a3, rng);
        CHECK(apply_to_complex(g, x) == apply_to_complex(twist_functor(a3, k.from_int(6)), x));
    }
}

TEST_CASE("extend_nat_trans") {
    const Presentation& a2 = fixture("FIX_A2");
    const Field& k = a2.field();
    const HomogeneousFunctor id = identity_functor(a2);
    const Complex e = cone_alpha(a2);
    const NatTransExtension ei = extend_nat_trans(identity_nat_trans(id), e);
    CHECK(equal_on_the_nose(ei.theta, identity_map(e)));

    const NatTrans t = twist_nat_trans(a2, k.from_int(2), k.one());
    CHECK(nat_component(t, obj(a2, "a")) == identity_morphism(a2, obj(a2, "a")));
    CHECK(nat_component(t, obj(a2, "b")) == basis_map(a2, "b", "b", "1@b", "2"));
    CHECK_FALSE(naturality_witness(t));
    const NatTransExtension et = extend_nat_trans(t, e);
    CHECK(is_chain_map(et.theta));
    CHECK(et.invertible);
    REQUIRE(et.inverse);
    CHECK(homotopic(compose(*et.inverse, et.theta), identity_map(et.theta.source)));

    const NatTrans z = zero_nat_trans(id, id);
    CHECK(hom_space(e, e, 0).is_zero_class(extend_nat_trans(z, e).theta));

    NatTrans bad = identity_nat_trans(id);
    bad.components[static_cast<std::size_t>(a2.index_of("b"))] = basis_map(a2, "b", "b", "1@b", "2");
    CHECK(naturality_witness(bad) == std::optional<std::string>("alpha"));
    CHECK_THROWS_AS(extend_nat_trans(bad, e), CheckFailure);
}

TEST_CASE("uniqueness probe") {
    const Presentation& a2 = fixture("FIX_A2");
    const Field& k = a2.field();
    const NatTrans t = twist_nat_trans(a2, k.from_int(2), k.one());
    const UniquenessProbe single = nat_trans_uniqueness_probe(t, at(a2, "a+b", 0), 5);
    CHECK(single.pass());

    const Complex x = direct_sum({cone_alpha(a2), at(a2, "a", -2)}).sum;
    const UniquenessProbe two = nat_trans_uniqueness_probe(t, x, 2);
    CHECK(two.pass());
    CHECK(two.orders == 2);

    const Presentation& a3 = fixture("FIX_A3");
    const NatTrans t3 = twist_nat_trans(a3, k.from_int(3), k.one());
    std::mt19937_64 rng(79);
    RandomComplexParams rp;
    rp.lo = -1;
    rp.amplitude = 3;
    rp.max_multiplicity = 2;
    const Complex y = random_complex(a3, rng, rp);
    const UniquenessProbe r = nat_trans_uniqueness_probe(t3, y, 20, 5);
    CHECK(r.pass());
    CHECK(r.orders == 20);
}

TEST_CASE("induced functors") {
    const Presentation& a2 = fixture("FIX_A2");
    const Field& k = a2.field();
    CHECK(induced_functor_check(identity_functor(a2)).pass());
    CHECK(induced_functor_check(twist_functor(a2, k.from_int(2))).pass());
    CHECK(induced_functor_check(zero_functor(a2)).pass());
}

TEST_CASE("functor_suite") {
    for (const char* n : {"FIX_PT", "FIX_A2", "FIX_A3", "FIX_A2_MOD3"}) {
        const FunctorSuiteReport r = functor_suite(fixture(n), 2, 5);
        CHECK_MESSAGE(r.pass(), n);
    }
}

}
