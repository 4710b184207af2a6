#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace kktest;

TEST_SUITE("tstructure") {

TEST_CASE("aisle_membership") {
    const Presentation& a2 = fixture("FIX_A2");
    const AisleMembership z = aisle_membership(Complex(a2));
    CHECK((z.in_left && z.in_right && z.in_heart));
    const AisleMembership a = aisle_membership(at(a2, "a", 0));
    CHECK((a.in_left && a.in_right && a.in_heart));
    const AisleMembership b = aisle_membership(at(a2, "b", 0));
    CHECK_FALSE(b.in_left);
    CHECK(b.in_right);
    CHECK_FALSE(b.in_heart);
}

TEST_CASE("membership is computed on the minimal model") {
    const Presentation& a2 = fixture("FIX_A2");
    const Complex padded = direct_sum({at(a2, "a", 0), cone(identity_map(at(a2, "b", 3))).z}).sum;
    CHECK(aisle_membership(padded).in_heart);
}

TEST_CASE("truncate") {
    const Presentation& a2 = fixture("FIX_A2");
    const Complex a = at(a2, "a", 0);
    const Truncation ta = truncate(a);
    CHECK(ta.a == a);
    CHECK(ta.b.empty());
    CHECK(ta.certificate.distinguished);

    const Complex b = at(a2, "b", 0);
    const Truncation tb = truncate(b);
    CHECK(tb.a.empty());
    CHECK(tb.b == b);
    CHECK(in_region(support(shift(tb.b, 1)), Region::right));
    CHECK(tb.certificate.distinguished);
}

TEST_CASE("truncate splits mixed complexes") {
    const Presentation& a3 = fixture("FIX_A3");
    std::mt19937_64 rng(37);
    for (int k = 0; k < 30; ++k) {
        const Complex x = random_complex(a3, rng);
        const Truncation t = truncate(x);
        CHECK(in_region(support(t.a), Region::left));
        CHECK(in_region(support(shift(t.b, 1)), Region::right));
        CHECK(t.certificate.distinguished);
        CHECK(hom_space(t.a, t.b, 0).dim() == 0);
        const Truncation tn = truncate_at(x, 2);
        CHECK(in_region(support(tn.a), Region::left, 2));
        CHECK(tn.certificate.distinguished);
    }
}

TEST_CASE("cone_through_simple") {
    const Presentation& a2 = fixture("FIX_A2");
    const Complex a = at(a2, "a", 0);
    const ConeThroughSimple c0 = cone_through_simple(identity_map(a));
    CHECK(minimal_model(c0.y).minimal.empty());

    CHECK_THROWS_AS(cone_through_simple(zero_map(a, cone_alpha(a2))), CheckFailure);
    CHECK_THROWS_AS(cone_through_simple(identity_map(at(a2, "b", 0))), InputError);
    CHECK_THROWS_AS(cone_through_simple(identity_map(at(a2, "a", -1))), InputError);

    // Socle inclusion a → (b → a); the cone is b[1].
    const ChainMap f = map0(a, cone_alpha(a2), identity_morphism(a2, obj(a2, "a")));
    REQUIRE(is_chain_map(f));
    const ConeThroughSimple c = cone_through_simple(f);
    CHECK(in_region(support(c.y), Region::right));
    CHECK(c.y == at(a2, "b", -1));
    CHECK(is_quasi_iso(c.iso));
    CHECK(c.y.total_rank() == minimal_model(cone(f).z).minimal.total_rank());
}

TEST_CASE("t_cohomology") {
    const Presentation& a2 = fixture("FIX_A2");
    const Complex e = cone_alpha(a2);
    CHECK(t_cohomology(e, 0).normal_form == e);
    CHECK(t_cohomology(e, 1).normal_form.empty());
    const Complex b = at(a2, "b", 0);
    CHECK(t_cohomology(b, 1).normal_form == at(a2, "b", -1));
    for (int n : {-1, 0, 2}) CHECK(t_cohomology(b, n).normal_form.empty());
    std::mt19937_64 rng(41);
    const Presentation& a3 = fixture("FIX_A3");
    for (int k = 0; k < 10; ++k) {
        const Complex x = random_complex(a3, rng);
        for (int n = -3; n <= 3; ++n)
            CHECK(t_cohomology(shift(x, 1), n).normal_form == t_cohomology(x, n + 1).normal_form);
    }
}

TEST_CASE("heart_simples") {
    const Presentation& pt = fixture("FIX_PT");
    REQUIRE(heart_simples(pt).size() == 1);
    CHECK(heart_simples(pt)[0] == at(pt, "s", 0));
    const Presentation& a2 = fixture("FIX_A2");
    CHECK(heart_simples(a2) == std::vector<Complex>{at(a2, "a", 0), at(a2, "b", -1)});
    const Presentation& a3 = fixture("FIX_A3");
    CHECK(heart_simples(a3) == std::vector<Complex>{at(a3, "a", 0), at(a3, "b", -1), at(a3, "c", -2)});
}

TEST_CASE("weight filtration and composition factors") {
    const Presentation& a2 = fixture("FIX_A2");
    const HeartObject b1 = to_heart(at(a2, "b", -1));
    const auto wb = weight_filtration(b1);
    REQUIRE(wb.size() == 1);
    CHECK(wb.begin()->first == 1);

    const HeartObject e = to_heart(cone_alpha(a2));
    const auto w = weight_filtration(e);
    REQUIRE(w.size() == 2);
    CHECK(w.at(0) == at(a2, "a", 0));
    CHECK(w.at(1) == at(a2, "b", -1));
    CHECK(composition_factors(e) == std::map<int, int>{{0, 1}, {1, 1}});

    const HeartObject s = to_heart(direct_sum({at(a2, "a", 0), at(a2, "b", -1)}).sum);
    const auto ws = weight_filtration(s);
    CHECK(ws.at(0) == at(a2, "a", 0));
    CHECK(ws.at(1) == at(a2, "b", -1));

    CHECK(composition_factors(to_heart(Complex(a2))).empty());
    CHECK(composition_factors(to_heart(at(a2, "a+a", 0))) == std::map<int, int>{{0, 2}});
}

TEST_CASE("to_heart undoes disguise and rejects non-heart objects") {
    const Presentation& a3 = fixture("FIX_A3");
    const oracle::Category c = oracle::parse_category(fixture_doc("FIX_A3"));
    std::mt19937_64 rng(43);
    for (int k = 0; k < 20; ++k) {
        const Complex m = random_heart_complex(a3, rng);
        const Complex hidden = disguise(m, rng);
        const HeartObject h = to_heart(hidden);
        for (const auto& [i, j] : support(h.normal_form)) CHECK(i + j == 0);
        REQUIRE(h.from_origin);
        CHECK(is_quasi_iso(*h.from_origin));
        std::map<int, long> engine;
        for (const auto& [s, n] : composition_factors(h)) engine[s] = n;
        CHECK(engine == oracle::euler_multiplicities(c, oracle::parse_complex(c, complex_to_json(hidden))));
    }
    CHECK_THROWS_AS(to_heart(at(a3, "b", 0)), CheckFailure);
}

TEST_CASE("mixed_vanishing_report") {
    const auto cells = [](const Presentation& p) {
        std::set<std::tuple<std::string, std::string, int, std::size_t>> out;
        const VanishingReport r = mixed_vanishing_report(p, {-5, 5});
        CHECK(r.pass());
        for (const auto& c : r.nonzero)
            out.insert({simple_label(p, c.source), simple_label(p, c.target), c.shift, c.dim});
        return out;
    };
    using Cells = std::set<std::tuple<std::string, std::string, int, std::size_t>>;
    CHECK(cells(fixture("FIX_PT")) == Cells{{"s", "s", 0, 1}});
    CHECK(cells(fixture("FIX_A2")) == Cells{{"a", "a", 0, 1}, {"b[1]", "b[1]", 0, 1}, {"b[1]", "a", 1, 1}});
    CHECK(cells(fixture("FIX_A3")) == Cells{{"a", "a", 0, 1},
                                            {"b[1]", "b[1]", 0, 1},
                                            {"c[2]", "c[2]", 0, 1},
                                            {"b[1]", "a", 1, 1},
                                            {"c[2]", "b[1]", 1, 1},
                                            {"c[2]", "a", 2, 1}});
}

}
