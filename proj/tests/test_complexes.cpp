#include <doctest.h>

#include "koszulkit/extraction.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace kktest;

namespace {

bool isomorphic(const Complex& x, const Complex& y) {
    const HomSpace h = hom_space(x, y, 0);
    for (const ChainMap& f : h.basis())
        if (is_quasi_iso(f)) return true;
    if (h.dim() == 0) return is_contractible(x) && is_contractible(y);
    std::mt19937_64 rng(1);
    for (int k = 0; k < 8; ++k) {
        Vector c(h.dim(), x.cat().field().zero());
        for (auto& s : c) s = random_scalar(x.cat().field(), rng);
        if (is_quasi_iso(h.element(c))) return true;
    }
    return false;
}

} // namespace

TEST_SUITE("complexes") {

TEST_CASE("shift") {
    const Presentation& a2 = fixture("FIX_A2");
    const Complex x = cone_alpha(a2);
    CHECK(shift(x, 0) == x);
    CHECK(shift(shift(x, 1), -1) == x);
    Support expect;
    for (const auto& [i, j] : support(x)) expect.insert({i - 1, j});
    CHECK(support(shift(x, 1)) == expect);
    CHECK(shift(x, 1).d(-2) == -x.d(-1));
}

TEST_CASE("cone") {
    const Presentation& a2 = fixture("FIX_A2");
    const Complex x = cone_alpha(a2);
    CHECK(minimal_model(cone(identity_map(x)).z).minimal.empty());

    const Complex y = at(a2, "a+b", 0);
    CHECK(cone(zero_map(x, y)).z == direct_sum({shift(x, 1), y}).sum);

    const ChainMap alpha = map0(at(a2, "b", 0), at(a2, "a", 0), basis_map(a2, "b", "a", "alpha"));
    CHECK(cone(alpha).z == x);
}

TEST_CASE("differential must square to zero") {
    const Presentation& a3 = fixture("FIX_A3");
    CHECK_THROWS_AS(cplx(a3, R"({"terms": {"-2": ["c"], "-1": ["b"], "0": ["a"]},
                                 "diff": {"-2": [{"label": "beta", "coeff": "1"}],
                                          "-1": [{"label": "alpha", "coeff": "1"}]}})"),
                    CheckFailure);
}

TEST_CASE("hom_space examples") {
    const Presentation& a2 = fixture("FIX_A2");
    const Complex a = at(a2, "a", 0), b = at(a2, "b", 0), e = cone_alpha(a2);
    CHECK(hom_space(e, e, 0).dim() >= 1);
    CHECK_FALSE(hom_space(e, e, 0).is_zero_class(identity_map(e)));
    CHECK(hom_space(b, a, 0).dim() == 1);
    CHECK(hom_space(a, b, 0).dim() == 0);
    CHECK(hom_space(e, a, 0).dim() == 0);
}

TEST_CASE("hom_space agrees with the brute-force oracle on samples") {
    const Presentation& a3 = fixture("FIX_A3");
    const oracle::Category c = oracle::parse_category(fixture_doc("FIX_A3"));
    std::mt19937_64 rng(19);
    RandomComplexParams rp;
    rp.amplitude = 3;
    rp.max_multiplicity = 2;
    for (int k = 0; k < 15; ++k) {
        const Complex x = random_complex(a3, rng, rp), y = random_complex(a3, rng, rp);
        for (int s = -1; s <= 1; ++s)
            CHECK(hom_space(x, y, s).dim() ==
                  oracle::hom_dim(c, oracle::parse_complex(c, complex_to_json(x)),
                                  oracle::parse_complex(c, complex_to_json(y)), s));
    }
}

TEST_CASE("is_null_homotopic") {
    const Presentation& a2 = fixture("FIX_A2");
    const Complex e = cone_alpha(a2);
    const auto h0 = is_null_homotopic(zero_map(e, e));
    REQUIRE(h0);
    CHECK(equal_on_the_nose(boundary_of(*h0), zero_map(e, e)));

    const Complex ca = cone(identity_map(at(a2, "a", 0))).z;
    const auto h1 = is_null_homotopic(identity_map(ca));
    REQUIRE(h1);
    CHECK(equal_on_the_nose(boundary_of(*h1), identity_map(ca)));

    const ChainMap alpha = map0(at(a2, "b", 0), at(a2, "a", 0), basis_map(a2, "b", "a", "alpha"));
    CHECK_FALSE(is_null_homotopic(alpha));
}

TEST_CASE("minimal_model") {
    const Presentation& a2 = fixture("FIX_A2");
    CHECK(minimal_model(cone(identity_map(at(a2, "a", 0))).z).minimal.empty());

    const Complex e = cone_alpha(a2);
    const Complex padded = direct_sum({e, cone(identity_map(at(a2, "b", 1))).z}).sum;
    const MinimalModel m = minimal_model(padded);
    CHECK(m.minimal.total_rank() == minimal_model(e).minimal.total_rank());
    REQUIRE(m.to_minimal);
    REQUIRE(m.from_minimal);
    CHECK(homotopic(compose(*m.to_minimal, *m.from_minimal), identity_map(m.minimal)));
    CHECK(homotopic(compose(*m.from_minimal, *m.to_minimal), identity_map(padded)));

    CHECK(is_minimal(e));
    CHECK(minimal_model(e).minimal == e);
}

TEST_CASE("minimal models of disguised complexes") {
    const Presentation& a3 = fixture("FIX_A3");
    std::mt19937_64 rng(23);
    for (int k = 0; k < 20; ++k) {
        const Complex x = random_complex(a3, rng);
        const MinimalModel m = minimal_model(x);
        CHECK(is_minimal(m.minimal));
        CHECK(is_quasi_iso(*m.to_minimal));
    }
}

TEST_CASE("support") {
    const Presentation& a2 = fixture("FIX_A2");
    CHECK(support(Complex(a2)).empty());
    const Complex e = cone_alpha(a2);
    CHECK(support(e) == Support{{-1, 1}, {0, 0}});
    const Complex y = at(a2, "a+b", 3);
    Support u = support(e);
    for (const auto& pt : support(y)) u.insert(pt);
    CHECK(support(direct_sum({e, y}).sum) == u);
}

TEST_CASE("homogeneous_cokernel and coker_idempotent") {
    const Presentation& a2 = fixture("FIX_A2");
    const AddMorphism z = zero_morphism(a2, obj(a2, "b"), obj(a2, "a"));
    const HomogeneousCokernel k0 = homogeneous_cokernel(z);
    CHECK(k0.q_object == obj(a2, "a"));
    CHECK(k0.q == identity_morphism(a2, obj(a2, "a")));
    CHECK(coker_idempotent(z) == identity_morphism(a2, obj(a2, "a")));

    const AddMorphism alpha = basis_map(a2, "b", "a", "alpha");
    CHECK(homogeneous_cokernel(alpha).q_object.empty());
    CHECK(coker_idempotent(alpha).is_zero());
    CHECK(coker_idempotent(identity_morphism(a2, obj(a2, "a"))).is_zero());

    const AddMorphism inc = mor(a2, "a", "a+a", R"([{"row": 0, "col": 0, "label": "1@a", "coeff": "1"}])");
    const HomogeneousCokernel k = homogeneous_cokernel(inc);
    CHECK(k.q_object == obj(a2, "a"));
    CHECK(compose(k.q, inc).is_zero());
    CHECK(invert(k.u).has_value());

    CHECK_THROWS_AS(homogeneous_cokernel(zero_morphism(a2, obj(a2, "a"), obj(a2, "a+b"))), InputError);
}

TEST_CASE("top_extraction") {
    const Presentation& a2 = fixture("FIX_A2");
    const Complex a = at(a2, "a", 0);
    const TopExtraction t0 = top_extraction(a);
    CHECK(t0.p == a);
    CHECK(t0.y.empty());

    const Complex e = cone_alpha(a2);
    const TopExtraction t = top_extraction(e, {{-1, 1}, {0, 0}});
    CHECK(t.point == SupportPoint{0, 0});
    CHECK(t.p == a);
    CHECK(t.y == at(a2, "b", -1));
    CHECK(isomorphic(cone(t.delta).z, e));
    CHECK(certify_triangle(t.triangle.inclusion, t.triangle.projection, t.triangle.connecting).distinguished);

    const TopExtraction empty_top = top_extraction(a, {{0, 0}, {0, 1}});
    CHECK(empty_top.p.empty());
    CHECK(empty_top.y == a);
}

TEST_CASE("unique_fill") {
    const Presentation& a2 = fixture("FIX_A2");
    const TopExtraction t = top_extraction(cone_alpha(a2));
    const SplitTriangle& s = t.triangle;
    const FillResult id = unique_fill(s.inclusion, s.projection, s.inclusion, s.projection, identity_map(s.sub),
                                      identity_map(s.quotient));
    REQUIRE(id.q);
    CHECK(id.unique);
    CHECK(homotopic(*id.q, identity_map(s.inclusion.target)));

    const FillResult zero = unique_fill(s.inclusion, s.projection, s.inclusion, s.projection,
                                        zero_map(s.sub, s.sub), zero_map(s.quotient, s.quotient));
    REQUIRE(zero.q);
    CHECK(zero.unique);
    CHECK(zero.fill_space_dim == 0);
    CHECK(hom_space(zero.q->source, zero.q->target, 0).is_zero_class(*zero.q));

    // P = a + b has two support points and Hom(Y, P) = Hom(b, a + b) is nonzero.
    const Complex x = at(a2, "a+b+b", 0);
    const SplitTriangle bad = split_triangle(x, {{0, {0, 1}}});
    const FillResult r = unique_fill(bad.inclusion, bad.projection, bad.inclusion, bad.projection,
                                     identity_map(bad.sub), identity_map(bad.quotient));
    CHECK_FALSE(r.unique);
    CHECK(r.fill_space_dim == 2);
    CHECK_FALSE(r.witness.empty());
}

TEST_CASE("complete_square") {
    const Presentation& a2 = fixture("FIX_A2");
    const Field& k = a2.field();
    const Complex b = at(a2, "b", 0), a = at(a2, "a", 0);
    const ChainMap f = map0(b, a, basis_map(a2, "b", "a", "alpha"));
    const CompletedSquare ids = complete_square(f, f, identity_map(b), identity_map(a));
    CHECK(homotopic(ids.r, identity_map(cone(f).z)));

    const Complex e = cone_alpha(a2);
    const ChainMap z = zero_map(b, e), pm = identity_map(b), qm = scale(identity_map(e), k.from_int(3));
    const CompletedSquare zs = complete_square(z, z, pm, qm);
    CHECK(equal_on_the_nose(zs.r, block_map({shift(b, 1), e}, {shift(b, 1), e},
                                            {{shift(pm, 1), std::nullopt}, {std::nullopt, qm}})));

    std::mt19937_64 rng(29);
    for (int n = 0; n < 10; ++n) {
        const Scalar c = random_scalar(k, rng);
        const ChainMap p = scale(identity_map(b), c), q = scale(identity_map(a), c);
        const CompletedSquare sq = complete_square(f, f, p, q);
        const Cone c1 = cone(f);
        CHECK(is_chain_map(sq.r));
        CHECK(homotopic(compose(sq.r, c1.inclusion), compose(c1.inclusion, q)));
        CHECK(homotopic(compose(c1.projection, sq.r), compose(shift(p, 1), c1.projection)));
    }

    const ChainMap other = map0(b, a, basis_map(a2, "b", "a", "alpha", "2"));
    CHECK_THROWS_AS(complete_square(f, other, identity_map(b), identity_map(a)), CheckFailure);
}

TEST_CASE("split_triangle is certified") {
    const Presentation& a3 = fixture("FIX_A3");
    std::mt19937_64 rng(31);
    for (int n = 0; n < 15; ++n) {
        const Complex x = random_complex(a3, rng);
        const TopExtraction t = top_extraction(x);
        const SplitTriangle& s = t.triangle;
        CHECK(certify_triangle(s.inclusion, s.projection, s.connecting).distinguished);
    }
}

}
