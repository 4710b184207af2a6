// koszulkit command-line front end; talks to the engine through the C API only.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "koszulkit/koszulkit.h"
#include "pretty.hpp"

#ifndef KOSZULKIT_FIXTURE_DIR
#define KOSZULKIT_FIXTURE_DIR "fixtures"
#endif

namespace {

constexpr int exit_input_error = 2;

struct Failure {
    kk_status status;
    std::string message;
};

void check(kk_status s) {
    if (s != KK_OK) throw Failure{s, kk_last_error()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{KK_INPUT_ERROR, "cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fixture_dir() {
    const char* env = std::getenv("KOSZULKIT_FIXTURES");
    return env ? env : KOSZULKIT_FIXTURE_DIR;
}

std::pair<int, int> parse_window(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw Failure{KK_INPUT_ERROR, "window must look like a..b"};
    try {
        std::size_t u1 = 0, u2 = 0;
        const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        const int lo = std::stoi(a, &u1), hi = std::stoi(b, &u2);
        if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument(text);
        if (lo > hi) throw Failure{KK_INPUT_ERROR, "empty window " + text};
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw Failure{KK_INPUT_ERROR, "window must look like a..b"};
    }
}

/// Owning wrappers over the opaque handles.
template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Free(p); }
};
using Category = Handle<kk_category, kk_category_free>;
using ComplexH = Handle<kk_complex, kk_complex_free>;
using MapH = Handle<kk_map, kk_map_free>;
using InfMapH = Handle<kk_inf_map, kk_inf_map_free>;

struct Owned {
    char* s = nullptr;
    ~Owned() { kk_string_free(s); }
};

void load_category(const std::string& name, Category& c) {
    Owned path;
    check(kk_fixture_path(name.c_str(), fixture_dir().c_str(), &path.s));
    check(kk_category_load(path.s, &c.p));
}

void load_complex(const Category& c, const std::string& path, ComplexH& x) {
    check(kk_complex_parse(c.p, slurp(path).c_str(), &x.p));
}

void load_map(const Category& c, const std::string& path, MapH& f) {
    check(kk_map_parse(c.p, slurp(path).c_str(), &f.p));
}

void load_inf_map(const Category& c, const std::string& path, InfMapH& f) {
    check(kk_inf_map_parse(c.p, slurp(path).c_str(), &f.p));
}

struct Options {
    std::string cat;
    std::string window = "-8..8";
    std::uint64_t seed = 1;
    bool pretty = false;
    std::string golden;
    bool regen = false;
    std::vector<std::string> files;
    std::string from, to;
    int from_degree = 0, to_degree = 0;
    int shift = 0;
    std::optional<int> at;
    bool simples = false;
    std::size_t length_bound = 6;
    int samples = 100;
    std::string infext_op;
};

/// Prints the report, applies the golden comparison and maps the outcome to an exit code.
int finish(kk_status status, char** raw, const Options& o) {
    Owned report{*raw};
    if (status != KK_OK && status != KK_CHECK_FAILED) throw Failure{status, kk_last_error()};
    if (o.pretty)
        std::cout << koszulkit_cli::render_pretty(report.s);
    else
        std::cout << report.s;
    if (!o.golden.empty()) {
        Owned diff;
        const kk_status g = kk_golden_compare(report.s, o.golden.c_str(), o.regen ? 1 : 0, &diff.s);
        if (g == KK_CHECK_FAILED) {
            std::cerr << "golden mismatch at " << diff.s << "\n";
            return 1;
        }
        if (g != KK_OK) throw Failure{g, kk_last_error()};
        std::cerr << (o.regen ? "golden written: " : "golden match: ") << o.golden << "\n";
    }
    return status == KK_OK ? 0 : 1;
}

void require_files(const Options& o, std::size_t n, const char* usage) {
    if (o.files.size() != n) throw Failure{KK_INPUT_ERROR, std::string("usage: ") + usage};
}

int run(const std::string& cmd, const Options& o) {
    char* out = nullptr;
    if (cmd == "selftest") return finish(kk_selftest(fixture_dir().c_str(), o.seed, &out), &out, o);
    Category c;
    load_category(o.cat, c);
    const auto [lo, hi] = parse_window(o.window);
    if (cmd == "validate") return finish(kk_validate(c.p, &out), &out, o);
    if (cmd == "hom") {
        ComplexH x, y;
        if (!o.files.empty()) {
            require_files(o, 2, "hom <cat> <x.json> <y.json> [--shift k]");
            load_complex(c, o.files[0], x);
            load_complex(c, o.files[1], y);
        } else {
            if (o.from.empty() || o.to.empty()) throw Failure{KK_INPUT_ERROR, "hom needs --from and --to, or two files"};
            check(kk_complex_object(c.p, o.from.c_str(), o.from_degree, &x.p));
            check(kk_complex_object(c.p, o.to.c_str(), o.to_degree, &y.p));
        }
        return finish(kk_hom(x.p, y.p, o.shift, &out), &out, o);
    }
    if (cmd == "cone") {
        require_files(o, 1, "cone <cat> <map.json>");
        MapH f;
        load_map(c, o.files[0], f);
        return finish(kk_cone(f.p, &out), &out, o);
    }
    if (cmd == "minimize" || cmd == "truncate" || cmd == "weights" || (cmd == "heart" && !o.simples)) {
        require_files(o, 1, "<command> <cat> <complex.json>");
        ComplexH x;
        load_complex(c, o.files[0], x);
        if (cmd == "minimize") return finish(kk_minimize(x.p, &out), &out, o);
        if (cmd == "weights") return finish(kk_weights(x.p, &out), &out, o);
        if (cmd == "heart") return finish(kk_heart(x.p, &out), &out, o);
        return finish(kk_truncate(x.p, o.at ? &*o.at : nullptr, &out), &out, o);
    }
    if (cmd == "heart") return finish(kk_heart_simples(c.p, &out), &out, o);
    if (cmd == "mixed-check") return finish(kk_mixed_check(c.p, lo, hi, &out), &out, o);
    if (cmd == "koszul-check") return finish(kk_koszul_check(c.p, lo, hi, o.seed, &out), &out, o);
    if (cmd == "surrogate") return finish(kk_surrogate(c.p, lo, hi, &out), &out, o);
    if (cmd == "dual") return finish(kk_dual(c.p, lo, hi, o.length_bound, &out), &out, o);
    if (cmd == "roundtrip") return finish(kk_roundtrip(c.p, &out), &out, o);
    if (cmd == "double-dual") return finish(kk_double_dual(c.p, lo, hi, o.length_bound, &out), &out, o);
    if (cmd == "filtered-demo") return finish(kk_filtered_demo(c.p, o.seed, o.samples, &out), &out, o);
    if (cmd == "infext") {
        if (o.infext_op == "compose") {
            require_files(o, 2, "infext compose <cat> <g.json> <f.json>");
            InfMapH g, f;
            load_inf_map(c, o.files[0], g);
            load_inf_map(c, o.files[1], f);
            return finish(kk_inf_compose(g.p, f.p, &out), &out, o);
        }
        if (o.infext_op == "invert") {
            require_files(o, 1, "infext invert <cat> <f.json>");
            InfMapH f;
            load_inf_map(c, o.files[0], f);
            return finish(kk_inf_invert(f.p, &out), &out, o);
        }
        if (o.infext_op == "square") {
            require_files(o, 4, "infext square <cat> <p.json> <q.json> <f.json> <i.json>");
            InfMapH p, q;
            MapH f, i;
            load_inf_map(c, o.files[0], p);
            load_inf_map(c, o.files[1], q);
            load_map(c, o.files[2], f);
            load_map(c, o.files[3], i);
            return finish(kk_inf_square(p.p, q.p, f.p, i.p, &out), &out, o);
        }
        if (o.infext_op == "les") {
            require_files(o, 1, "infext les <cat> <f.json> [--window a..b]");
            InfMapH f;
            load_inf_map(c, o.files[0], f);
            return finish(kk_inf_les(f.p, lo, hi, &out), &out, o);
        }
        throw Failure{KK_INPUT_ERROR, "infext operation must be compose, invert, square or les"};
    }
    throw Failure{KK_INPUT_ERROR, "unknown command " + cmd};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"koszulkit: exact homological algebra over finite category presentations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kk_version());
    Options o;

    auto common = [&](CLI::App* sub, bool needs_cat, bool windowed) {
        if (needs_cat) sub->add_option("cat", o.cat, "presentation file or catalog name such as FIX_A2")->required();
        if (windowed) sub->add_option("--window", o.window, "shift window a..b")->capture_default_str();
        sub->add_option("--seed", o.seed, "seed for randomized suites")->capture_default_str();
        sub->add_flag("--pretty", o.pretty, "render tables and complex diagrams instead of JSON");
        sub->add_option("--golden", o.golden, "compare the report with a golden file");
        sub->add_flag("--regen-golden", o.regen, "rewrite the golden file instead of comparing");
    };
    auto files = [&](CLI::App* sub, const char* what) { sub->add_option("files", o.files, what); };

    common(app.add_subcommand("validate", "check the axioms of a presentation"), true, false);
    auto* hom = app.add_subcommand("hom", "dimension of Hom(X, Y[k]) in the homotopy category");
    common(hom, true, false);
    files(hom, "source and target complex files");
    hom->add_option("--from", o.from, "source object as ids joined by +");
    hom->add_option("--to", o.to, "target object as ids joined by +");
    hom->add_option("--from-degree", o.from_degree, "cohomological degree of --from");
    hom->add_option("--to-degree", o.to_degree, "cohomological degree of --to");
    hom->add_option("--shift", o.shift, "shift k")->capture_default_str();
    auto* cone = app.add_subcommand("cone", "mapping cone of a chain map");
    common(cone, true, false);
    files(cone, "map file");
    auto* minimize = app.add_subcommand("minimize", "minimal model of a complex");
    common(minimize, true, false);
    files(minimize, "complex file");
    auto* truncate = app.add_subcommand("truncate", "t-structure truncation triangle");
    common(truncate, true, false);
    files(truncate, "complex file");
    truncate->add_option("--at", o.at, "truncate at n instead of 0");
    auto* heart = app.add_subcommand("heart", "heart normal form, or the simples with --simples");
    common(heart, true, false);
    files(heart, "complex file");
    heart->add_flag("--simples", o.simples, "list the simple objects of the heart");
    auto* weights = app.add_subcommand("weights", "weight filtration of a heart object");
    common(weights, true, false);
    files(weights, "complex file");
    common(app.add_subcommand("mixed-check", "Hom vanishing between shifted simples"), true, true);
    common(app.add_subcommand("koszul-check", "Koszulity of the heart"), true, true);
    common(app.add_subcommand("surrogate", "degree-one generation of the Ext algebra"), true, true);
    auto* dual = app.add_subcommand("dual", "Koszul dual presentation");
    common(dual, true, true);
    dual->add_option("--length-bound", o.length_bound, "longest extension tried for injectives")->capture_default_str();
    common(app.add_subcommand("roundtrip", "compare a presentation with its heart-side realization"), true, false);
    auto* dd = app.add_subcommand("double-dual", "Ext^1 matching between a presentation and its double dual");
    common(dd, true, true);
    dd->add_option("--length-bound", o.length_bound, "longest extension tried for injectives")->capture_default_str();
    auto* infext = app.add_subcommand("infext", "infinitesimal extension operations");
    infext->add_option("op", o.infext_op, "compose, invert, square or les")->required();
    common(infext, true, true);
    files(infext, "morphism files");
    auto* filtered = app.add_subcommand("filtered-demo", "filtered-category axiom suite");
    common(filtered, true, false);
    filtered->add_option("--samples", o.samples, "filtered objects to generate")->capture_default_str();
    common(app.add_subcommand("selftest", "all checks on the shipped fixtures"), false, false);

    for (auto* sub : app.get_subcommands({})) sub->positionals_at_end(false);
    if (argc > 1 && std::string(argv[1]) == "infext") o.window = "-1..1";

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    }
    try {
        return run(app.get_subcommands().front()->get_name(), o);
    } catch (const Failure& f) {
        std::cerr << "koszulkit: " << f.message << "\n";
        return f.status == KK_CHECK_FAILED ? 1 : f.status == KK_INPUT_ERROR ? exit_input_error : 3;
    }
}
