#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include <json.hpp>

#include "koszulkit/koszulkit.h"

namespace {

using json = nlohmann::json;

struct Owned {
    char* s = nullptr;
    ~Owned() { kk_string_free(s); }
    json doc() const { return json::parse(s); }
};

struct Category {
    kk_category* c = nullptr;
    explicit Category(const char* name) {
        Owned path;
        REQUIRE(kk_fixture_path(name, KOSZULKIT_FIXTURE_DIR, &path.s) == KK_OK);
        REQUIRE(kk_category_load(path.s, &c) == KK_OK);
    }
    ~Category() { kk_category_free(c); }
};

struct Object {
    kk_complex* x = nullptr;
    Object(const Category& cat, const char* ids, int degree) {
        REQUIRE(kk_complex_object(cat.c, ids, degree, &x) == KK_OK);
    }
    ~Object() { kk_complex_free(x); }
};

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("koszulkit_capi_" + name)).string();
}

} // namespace

TEST_SUITE("capi") {

TEST_CASE("version and error reporting") {
    CHECK(std::string(kk_version()) == "0.1.0");
    kk_category* c = nullptr;
    CHECK(kk_category_parse("{not json", &c) == KK_INPUT_ERROR);
    CHECK(c == nullptr);
    CHECK(std::string(kk_last_error()).size() > 0);
    CHECK(kk_category_load("/nonexistent/file.json", &c) == KK_INPUT_ERROR);
    CHECK(kk_validate(nullptr, nullptr) == KK_INPUT_ERROR);
}

TEST_CASE("validate") {
    Category a2("FIX_A2"), bad("FIX_BAD");
    Owned ok, fail;
    CHECK(kk_validate(a2.c, &ok.s) == KK_OK);
    CHECK(ok.doc().at("valid") == true);
    CHECK(ok.doc().at("command") == "validate");
    CHECK(ok.doc().at("engine_version") == "0.1.0");
    CHECK(kk_validate(bad.c, &fail.s) == KK_CHECK_FAILED);
    CHECK(fail.doc().at("witness") == json{"a", "b"});
}

TEST_CASE("commands on invalid input are input errors") {
    Category bad("FIX_BAD");
    Owned r;
    CHECK(kk_koszul_check(bad.c, -2, 2, 1, &r.s) == KK_INPUT_ERROR);
}

TEST_CASE("hom through the C API") {
    Category a2("FIX_A2");
    Object b(a2, "b", 0), a(a2, "a", 0);
    Owned r, z;
    CHECK(kk_hom(b.x, a.x, 0, &r.s) == KK_OK);
    CHECK(r.doc().at("dim") == 1);
    CHECK(kk_hom(a.x, b.x, 0, &z.s) == KK_OK);
    CHECK(z.doc().at("dim") == 0);
    kk_complex* junk = nullptr;
    CHECK(kk_complex_object(a2.c, "a+zz", 0, &junk) == KK_INPUT_ERROR);
}

TEST_CASE("complex round trip through JSON") {
    Category a2("FIX_A2");
    kk_complex* x = nullptr;
    const char* text = R"({"terms": {"-1": ["b"], "0": ["a"]}, "diff": {"-1": [{"label": "alpha", "coeff": "1"}]}})";
    REQUIRE(kk_complex_parse(a2.c, text, &x) == KK_OK);
    Owned out;
    CHECK(kk_complex_json(x, &out.s) == KK_OK);
    CHECK(out.doc().at("terms") == json::parse(text).at("terms"));
    Owned w;
    CHECK(kk_weights(x, &w.s) == KK_OK);
    kk_complex_free(x);
    const char* d2 = R"({"terms": {"0": ["a"]}, "diff": {"0": [{"label": "alpha", "coeff": "1"}]}})";
    CHECK(kk_complex_parse(a2.c, d2, &x) == KK_INPUT_ERROR);
}

TEST_CASE("category reports") {
    Category a3("FIX_A3"), zero("FIX_A3_ZERO");
    Owned m, s, sz, d;
    CHECK(kk_mixed_check(a3.c, -5, 5, &m.s) == KK_OK);
    CHECK(m.doc().at("window") == json{-5, 5});
    CHECK(kk_surrogate(a3.c, -8, 8, &s.s) == KK_OK);
    CHECK(kk_surrogate(zero.c, -8, 8, &sz.s) == KK_CHECK_FAILED);
    CHECK(sz.doc().at("pass") == false);
    CHECK(kk_double_dual(a3.c, -8, 8, 6, &d.s) == KK_OK);
}

TEST_CASE("golden compare") {
    Category a2("FIX_A2");
    Owned r;
    REQUIRE(kk_mixed_check(a2.c, -5, 5, &r.s) == KK_OK);
    const std::string path = temp_path("golden.json");
    std::remove(path.c_str());
    Owned missing;
    CHECK(kk_golden_compare(r.s, path.c_str(), 0, &missing.s) == KK_INPUT_ERROR);

    Owned regen, same;
    CHECK(kk_golden_compare(r.s, path.c_str(), 1, &regen.s) == KK_OK);
    CHECK(std::filesystem::exists(path));
    CHECK(kk_golden_compare(r.s, path.c_str(), 0, &same.s) == KK_OK);
    CHECK(std::string(same.s).empty());

    json drift = json::parse(r.s);
    drift["nonzero"][0]["dim"] = 7;
    Owned diff;
    CHECK(kk_golden_compare(drift.dump().c_str(), path.c_str(), 0, &diff.s) == KK_CHECK_FAILED);
    CHECK(std::string(diff.s) == "/nonzero/0/dim");
    std::remove(path.c_str());
}

TEST_CASE("regenerate keeps the oracle name") {
    const std::string path = temp_path("oracle.json");
    {
        std::ofstream out(path);
        out << R"({"oracle": "brute-force", "report": {"x": 1}})";
    }
    Owned d;
    CHECK(kk_golden_compare(R"({"x": 2})", path.c_str(), 1, &d.s) == KK_OK);
    std::ifstream in(path);
    const json g = json::parse(in);
    CHECK(g.at("oracle") == "brute-force");
    CHECK(g.at("report").at("x") == 2);
    std::remove(path.c_str());
}

TEST_CASE("infinitesimal morphisms through the C API") {
    Category a2("FIX_A2");
    const std::string dir = std::string(KOSZULKIT_FIXTURE_DIR) + "/samples/";
    auto load = [&](const std::string& name) {
        std::ifstream in(dir + name);
        const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        kk_inf_map* m = nullptr;
        REQUIRE(kk_inf_map_parse(a2.c, text.c_str(), &m) == KK_OK);
        return std::unique_ptr<kk_inf_map, void (*)(kk_inf_map*)>(m, kk_inf_map_free);
    };
    const auto alpha = load("a2_inf_alpha.json");
    const auto unit_a = load("a2_inf_unit_a.json");
    Owned c, inv, inva;
    CHECK(kk_inf_compose(unit_a.get(), alpha.get(), &c.s) == KK_OK);
    CHECK(kk_inf_invert(alpha.get(), &inv.s) == KK_CHECK_FAILED);
    CHECK(kk_inf_invert(unit_a.get(), &inva.s) == KK_OK);
    Owned les;
    CHECK(kk_inf_les(alpha.get(), -1, 1, &les.s) == KK_OK);
}

TEST_CASE("selftest") {
    Owned r;
    CHECK(kk_selftest(KOSZULKIT_FIXTURE_DIR, 1, &r.s) == KK_OK);
    CHECK(r.doc().at("pass") == true);
}

}
