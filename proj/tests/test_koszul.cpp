#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace kktest;

namespace {

const ShiftWindow window{-8, 8};

std::size_t composition_length(const Complex& x) { return composition_factors(to_heart(x)).size(); }

} // namespace

TEST_SUITE("koszul") {

TEST_CASE("ext_table") {
    const ExtTable pt = ext_table(fixture("FIX_PT"), window);
    CHECK(pt.groups.size() == 1);
    CHECK(pt.dim(0, 0, 0) == 1);

    const ExtTable a2 = ext_table(fixture("FIX_A2"), window);
    CHECK(a2.dim(1, 0, 1) == 1);
    CHECK(a2.groups.size() == 3);

    const Presentation& p3 = fixture("FIX_A3");
    const ExtTable a3 = ext_table(p3, window);
    const int a = p3.index_of("a"), b = p3.index_of("b"), c = p3.index_of("c");
    CHECK(a3.dim(c, b, 1) == 1);
    CHECK(a3.dim(b, a, 1) == 1);
    CHECK(a3.dim(c, a, 2) == 1);
    const Field& k = p3.field();
    const Vector prod = a3.yoneda(c, b, a, 1, 1, Vector{k.one()}, Vector{k.one()});
    REQUIRE(prod.size() == 1);
    CHECK_FALSE(prod[0].is_zero());

    const Presentation& z = fixture("FIX_A3_ZERO");
    const ExtTable az = ext_table(z, window);
    CHECK(az.dim(c, a, 2) == 1);
    CHECK(az.yoneda(c, b, a, 1, 1, Vector{k.one()}, Vector{k.one()})[0].is_zero());
}

TEST_CASE("koszulity_check") {
    CHECK(koszulity_check(fixture("FIX_A2"), window).pass());
    const KoszulityReport r = koszulity_check(fixture("FIX_A3"), window);
    CHECK(r.pass());
    CHECK(r.separated_pairs > 0);
    CHECK(r.split_checks > 0);
    CHECK_FALSE(validate_presentation(fixture("FIX_BAD")).valid());
}

TEST_CASE("koszulescence_surrogate") {
    CHECK(koszulescence_surrogate(fixture("FIX_PT"), window).pass());
    CHECK(koszulescence_surrogate(fixture("FIX_A3"), window).pass());
    const Presentation& z = fixture("FIX_A3_ZERO");
    const SurrogateReport r = koszulescence_surrogate(z, window);
    REQUIRE_FALSE(r.pass());
    CHECK(r.witness->source == z.index_of("c"));
    CHECK(r.witness->target == z.index_of("a"));
    CHECK(r.witness->degree == 2);
    CHECK(r.witness->dim == 1);
    CHECK(r.witness->generated == 0);
}

TEST_CASE("orl_of_kos reproduces the presentation") {
    for (const char* n : {"FIX_PT", "FIX_A2", "FIX_A3", "FIX_A2_SHIFT5", "FIX_A2_MOD3"}) {
        const Presentation& p = fixture(n);
        const DualPresentation q = orl_of_kos(p);
        CHECK(hom_dimension_table(*q.presentation) == hom_dimension_table(p));
        for (std::size_t s = 0; s < p.size(); ++s) CHECK(q.presentation->degree(static_cast<int>(s)) == p.degree(static_cast<int>(s)));
        CHECK_MESSAGE(roundtrip_check(p).pass(), n);
    }
}

TEST_CASE("roundtrip detects a corrupted composition constant") {
    const Presentation& p = fixture("FIX_A3");
    DualPresentation q = orl_of_kos(p);
    json doc = presentation_to_json(*q.presentation);
    bool corrupted = false;
    for (auto& c : doc.at("compose"))
        if (c.at("left").get<std::string>().rfind("1@", 0) != 0 && c.at("right").get<std::string>().rfind("1@", 0) != 0)
            for (auto& term : c.at("result")) {
                term["coeff"] = "2";
                corrupted = true;
            }
    REQUIRE(corrupted);
    q.presentation = presentation_from_json(doc);
    const RoundtripReport r = roundtrip_compare(p, q);
    CHECK_FALSE(r.pass());
    CHECK(r.witness.has_value());
}

TEST_CASE("q_functor") {
    const Presentation& a2 = fixture("FIX_A2");
    const DualPresentation orl = orl_of_kos(a2);
    const Complex qa = q_functor(to_heart(at(a2, "a", 0)), orl);
    CHECK(qa.degrees() == std::vector<int>{0});

    const HeartObject e = to_heart(cone_alpha(a2));
    const Complex qe = q_functor(e, orl);
    CHECK(qe.degrees() == std::vector<int>{-1, 0});
    CHECK(qe.d(-1).dim() == 1);
    CHECK_FALSE(qe.d(-1).is_zero());

    const SplitTriangle ses = split_triangle(e.normal_form, {{0, {0}}});
    CHECK(ses.sub == at(a2, "a", 0));
    CHECK(ses.quotient == at(a2, "b", -1));
    const SplitTriangle qs = split_triangle(qe, {{0, {0}}});
    CHECK(certify_triangle(qs.inclusion, qs.projection, qs.connecting).distinguished);
    CHECK(qs.sub == q_functor(to_heart(ses.sub), orl));
    CHECK(qs.quotient == q_functor(to_heart(ses.quotient), orl));
}

TEST_CASE("injective_detect") {
    const Presentation& pt = fixture("FIX_PT");
    const auto ip = injective_detect(pt, window);
    REQUIRE(ip.size() == 1);
    CHECK(ip[0].found);
    CHECK(ip[0].degree == 0);

    const Presentation& a2 = fixture("FIX_A2");
    const auto i2 = injective_detect(a2, window);
    REQUIRE(i2.size() == 2);
    CHECK(i2[0].found);
    CHECK(i2[0].degree == 0);
    CHECK(to_heart(i2[0].j).normal_form.total_rank() == 2);
    CHECK(hom_space(i2[0].j, cone_alpha(a2), 0).dim() == 1);
    CHECK(i2[1].degree == -1);
    CHECK(to_heart(i2[1].j).normal_form == at(a2, "b", -1));

    const Presentation& a3 = fixture("FIX_A3");
    const auto i3 = injective_detect(a3, window);
    REQUIRE(i3.size() == 3);
    for (const auto& c : i3) CHECK(c.found);
    CHECK(composition_length(i3[0].j) == 2);
    CHECK(composition_length(i3[1].j) == 2);
    CHECK(composition_length(i3[2].j) == 1);
    for (const auto& c : i3)
        for (const Complex& s : heart_simples(a3)) CHECK(hom_space(s, c.j, 1).dim() == 0);
}

TEST_CASE("koszul_dual") {
    const Presentation& pt = fixture("FIX_PT");
    CHECK(hom_dimension_table(*koszul_dual(pt, window).presentation) == hom_dimension_table(pt));
    const Presentation& a2 = fixture("FIX_A2");
    CHECK(hom_dimension_table(*koszul_dual(a2, window).presentation) == hom_dimension_table(a2));

    const Presentation& a3 = fixture("FIX_A3");
    const DualPresentation d = koszul_dual(a3, window);
    const auto table = hom_dimension_table(*d.presentation);
    REQUIRE(table.size() == 3);
    const oracle::Category c = oracle::parse_category(fixture_doc("FIX_A3"));
    const auto o = [&](std::size_t s, std::size_t t) {
        return oracle::hom_dim(c, oracle::parse_complex(c, complex_to_json(d.objects[s])),
                               oracle::parse_complex(c, complex_to_json(d.objects[t])), 0);
    };
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t t = 0; t < 3; ++t) CHECK(table[s][t] == o(s, t));
    CHECK(validate_presentation(*d.presentation).valid());
}

TEST_CASE("double_dual_check") {
    for (const char* n : {"FIX_PT", "FIX_A2", "FIX_A3"}) {
        const DoubleDualReport r = double_dual_check(fixture(n), window);
        CHECK_MESSAGE(r.pass(), n);
    }
    const DoubleDualReport r2 = double_dual_check(fixture("FIX_A2"), window);
    CHECK(ext1_matrix(fixture("FIX_A2")) == std::vector<std::vector<std::size_t>>{{0, 0}, {1, 0}});
    CHECK(r2.original == ext1_matrix(fixture("FIX_A2")));
}

}
