#include <doctest.h>

#include "koszulkit/filtered.hpp"
#include "support/fixtures.hpp"

using namespace kktest;

namespace {

/// X_1 = a inside X_0 = a + b.
FilteredObject mixed(const Presentation& a2) {
    FilteredObject x;
    x.cat = &a2;
    x.a = 0;
    x.b = 1;
    x.x[0] = obj(a2, "a+b");
    x.x[1] = obj(a2, "a");
    x.e[1] = mor(a2, "a", "a+b", R"([{"row": 0, "col": 0, "label": "1@a", "coeff": "1"}])");
    x.r[1] = mor(a2, "a+b", "a", R"([{"row": 0, "col": 0, "label": "1@a", "coeff": "1"}])");
    return x;
}

} // namespace

TEST_SUITE("filtered") {

TEST_CASE("s_shift, j_embed and alpha") {
    const Presentation& a2 = fixture("FIX_A2");
    CHECK(j_embed(a2, AddObject{}).is_zero());
    const AddObject a = obj(a2, "a+b");
    const FilteredObject sj = s_shift(j_embed(a2, a));
    CHECK(sj.term(1) == a);
    CHECK(sj.term(2).empty());
    CHECK(same_filtered(s_shift(sj, -1), j_embed(a2, a)));
    const FiltMorphism al = alpha(j_embed(a2, a));
    CHECK(is_filt_morphism(al));
    for (int i = -3; i <= 0; ++i) CHECK(al.component(i) == identity_morphism(a2, a));
    CHECK(in_le(j_embed(a2, a), 0));
    CHECK(in_ge(sj, 1));
    CHECK_FALSE(in_le(sj, 0));
}

TEST_CASE("validate_filtered rejects a bad retraction") {
    const Presentation& a2 = fixture("FIX_A2");
    FilteredObject x = mixed(a2);
    validate_filtered(x);
    x.r[1] = zero_morphism(a2, obj(a2, "a+b"), obj(a2, "a"));
    CHECK_THROWS_AS(validate_filtered(x), InputError);
}

TEST_CASE("split_decompose") {
    const Presentation& a2 = fixture("FIX_A2");
    const FilteredObject low = j_embed(a2, obj(a2, "a+b"));
    const SplitDecomposition dl = split_decompose(low);
    CHECK(dl.a.is_zero());
    CHECK(same_filtered(dl.b, low));
    CHECK(dl.verified);

    const FilteredObject high = s_shift(j_embed(a2, obj(a2, "b")), 2);
    const SplitDecomposition dh = split_decompose(high);
    CHECK(dh.b.is_zero());
    CHECK(same_filtered(dh.a, high));
    CHECK(dh.verified);

    const SplitDecomposition d = split_decompose(mixed(a2));
    CHECK(d.verified);
    CHECK(d.oplus_shape);
    CHECK(d.failures.empty());
    CHECK(d.a.term(1) == obj(a2, "a"));
    CHECK(d.a.term(2).empty());
    CHECK(in_ge(d.a, 1));
    CHECK(d.b.term(0) == obj(a2, "b"));
    CHECK(d.b.term(1).empty());
    CHECK(filt_equal(filt_compose(d.from_x, d.to_x), filt_identity(d.sum)));
}

TEST_CASE("split_decompose on random filtrations") {
    const Presentation& a3 = fixture("FIX_A3");
    std::mt19937_64 rng(67);
    for (int k = 0; k < 20; ++k) {
        const SplitDecomposition d = split_decompose(random_filtered(a3, rng));
        CHECK(d.verified);
        CHECK(in_ge(d.a, 1));
        CHECK(in_le(d.b, 0));
    }
}

TEST_CASE("filt_hom_report") {
    const Presentation& a2 = fixture("FIX_A2");
    const FiltHomReport zero = filt_hom_report(s_shift(j_embed(a2, obj(a2, "b"))), j_embed(a2, obj(a2, "a")));
    CHECK(zero.pass());
    CHECK(zero.hom_yx == 0);

    const FiltHomReport one = filt_hom_report(s_shift(j_embed(a2, obj(a2, "a"))), j_embed(a2, obj(a2, "b")));
    CHECK(one.pass());
    CHECK(one.hom_yx == 1);
    CHECK(one.hom_y_sinv_x == hom_dim(a2, obj(a2, "b"), obj(a2, "a")));

    const FiltHomReport trivial = filt_hom_report(filtered_zero(a2), filtered_zero(a2));
    CHECK(trivial.pass());
    CHECK(trivial.hom_yx == 0);

    CHECK_THROWS_AS(filt_hom_report(j_embed(a2, obj(a2, "a")), j_embed(a2, obj(a2, "a"))), InputError);
}

TEST_CASE("fa_category presentation") {
    const Presentation& a2 = fixture("FIX_A2");
    const FaCategory c = fa_category(a2, -1, 1);
    CHECK(c.fa->size() == 6);
    const int a = a2.index_of("a"), b = a2.index_of("b");
    CHECK(c.fa->dim(c.index(b, 0), c.index(a, 1)) == 1);
    CHECK(c.fa->dim(c.index(b, 1), c.index(a, 0)) == 0);
    const FilteredObject x = realize(c, AddObject{{c.index(a, 1), c.index(b, 0)}});
    const FaDecomposition d = fa_decompose(c, x);
    CHECK(same_multiset(d.object, AddObject{{c.index(a, 1), c.index(b, 0)}}));
    CHECK(is_filt_morphism(d.iso));
}

TEST_CASE("filt_triangle") {
    const Presentation& a2 = fixture("FIX_A2");
    const FaCategory c = fa_category(a2, -1, 1);
    const FiltTriangle z = filt_triangle(c, Complex(*c.fa));
    CHECK(z.a.empty());
    CHECK(z.b.empty());
    CHECK(z.pass());

    const Complex low = concentrated(*c.fa, AddObject{{c.index(a2.index_of("a"), 0), c.index(a2.index_of("b"), -1)}}, 0);
    const FiltTriangle tl = filt_triangle(c, low);
    CHECK(tl.a.empty());
    CHECK(tl.pass());

    std::mt19937_64 rng(71);
    RandomComplexParams rp;
    rp.lo = -1;
    rp.amplitude = 2;
    rp.max_multiplicity = 2;
    int mixed_seen = 0;
    for (int k = 0; k < 40; ++k) {
        const Complex x = random_complex(*c.fa, rng, rp);
        const FiltTriangle t = filt_triangle(c, x);
        CHECK(t.pass());
        if (!t.a.empty() && !t.b.empty()) ++mixed_seen;
    }
    CHECK(mixed_seen > 0);
}

TEST_CASE("filtered_suite") {
    for (const char* n : {"FIX_PT", "FIX_A2", "FIX_A3"}) {
        const FilteredSuiteReport r = filtered_suite(fixture(n), 3, 20);
        CHECK_MESSAGE(r.pass(), n);
        CHECK(r.decompositions > 0);
    }
}

}
