#include "koszulkit/koszulkit.h"

#include <cstring>
#include <filesystem>
#include <memory>
#include <sstream>

#include "koszulkit/reports.hpp"

using namespace koszulkit;

struct kk_category {
    std::shared_ptr<Presentation> p;
    std::string hash;
};

struct kk_complex {
    std::shared_ptr<Presentation> p;
    std::string hash;
    Complex x;
};

struct kk_map {
    std::shared_ptr<Presentation> p;
    std::string hash;
    ChainMap f;
};

struct kk_inf_map {
    std::shared_ptr<Presentation> p;
    std::string hash;
    InfMorphism f;
};

struct kk_functor {
    std::shared_ptr<Presentation> source, target;
    std::string hash;
    HomogeneousFunctor f;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
kk_status guarded(F&& body) {
    last_error.clear();
    try {
        return body();
    } catch (const InputError& e) {
        last_error = e.what();
        return KK_INPUT_ERROR;
    } catch (const nlohmann::json::exception& e) {
        last_error = e.what();
        return KK_INPUT_ERROR;
    } catch (const CheckFailure& e) {
        last_error = e.what();
        return KK_CHECK_FAILED;
    } catch (const std::exception& e) {
        last_error = std::string("internal error: ") + e.what();
        return KK_INTERNAL_ERROR;
    } catch (...) {
        last_error = "internal error";
        return KK_INTERNAL_ERROR;
    }
}

/// Parse-time d∘d and chain-map failures are input errors.
template <class F>
auto parse_input(F&& body) {
    try {
        return body();
    } catch (const CheckFailure& e) {
        throw InputError(e.what());
    }
}

json parse_text(const char* text) {
    if (!text) throw InputError("null JSON text");
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(e.what());
    }
}

void require(const void* p, const char* what) {
    if (!p) throw InputError(std::string("null ") + what);
}

kk_status emit(const Report& r, const std::string& hash, char** report) {
    require(report, "report pointer");
    *report = dup(canonical_dump(envelope(r, hash)));
    return r.pass ? KK_OK : KK_CHECK_FAILED;
}

kk_category* make_category(const json& doc) {
    auto c = std::make_unique<kk_category>();
    c->p = presentation_from_json(doc);
    c->hash = fixture_hash(doc);
    return c.release();
}

} // namespace

extern "C" {

const char* kk_version(void) { return engine_version(); }

const char* kk_last_error(void) { return last_error.c_str(); }

void kk_string_free(char* s) { std::free(s); }

kk_status kk_category_load(const char* path, kk_category** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "output pointer");
        *out = make_category(read_json_file(path));
        return KK_OK;
    });
}

kk_status kk_category_parse(const char* json_text, kk_category** out) {
    return guarded([&] {
        require(out, "output pointer");
        *out = make_category(parse_text(json_text));
        return KK_OK;
    });
}

void kk_category_free(kk_category* c) { delete c; }

kk_status kk_category_hash(const kk_category* c, char** out) {
    return guarded([&] {
        require(c, "category");
        require(out, "output pointer");
        *out = dup(c->hash);
        return KK_OK;
    });
}

kk_status kk_fixture_path(const char* name, const char* dir, char** out) {
    return guarded([&] {
        require(name, "name");
        require(dir, "directory");
        require(out, "output pointer");
        *out = dup(resolve_fixture(name, dir));
        return KK_OK;
    });
}

kk_status kk_complex_parse(const kk_category* c, const char* json_text, kk_complex** out) {
    return guarded([&] {
        require(c, "category");
        require(out, "output pointer");
        const json doc = parse_text(json_text);
        *out = new kk_complex{c->p, c->hash, parse_input([&] { return complex_from_json(*c->p, doc); })};
        return KK_OK;
    });
}

kk_status kk_complex_object(const kk_category* c, const char* ids, int degree, kk_complex** out) {
    return guarded([&] {
        require(c, "category");
        require(ids, "ids");
        require(out, "output pointer");
        AddObject x;
        std::stringstream ss(ids);
        std::string id;
        while (std::getline(ss, id, '+'))
            if (!id.empty()) x.summands.push_back(c->p->index_of(id));
        *out = new kk_complex{c->p, c->hash, concentrated(*c->p, x, degree)};
        return KK_OK;
    });
}

kk_status kk_complex_json(const kk_complex* x, char** out) {
    return guarded([&] {
        require(x, "complex");
        require(out, "output pointer");
        *out = dup(canonical_dump(complex_to_json(x->x)));
        return KK_OK;
    });
}

void kk_complex_free(kk_complex* x) { delete x; }

kk_status kk_map_parse(const kk_category* c, const char* json_text, kk_map** out) {
    return guarded([&] {
        require(c, "category");
        require(out, "output pointer");
        const json doc = parse_text(json_text);
        *out = new kk_map{c->p, c->hash, parse_input([&] { return chain_map_file_from_json(*c->p, doc); })};
        return KK_OK;
    });
}

void kk_map_free(kk_map* f) { delete f; }

kk_status kk_inf_map_parse(const kk_category* c, const char* json_text, kk_inf_map** out) {
    return guarded([&] {
        require(c, "category");
        require(out, "output pointer");
        const json doc = parse_text(json_text);
        *out = new kk_inf_map{c->p, c->hash, parse_input([&] { return inf_morphism_from_json(*c->p, doc); })};
        return KK_OK;
    });
}

void kk_inf_map_free(kk_inf_map* f) { delete f; }

kk_status kk_functor_parse(const kk_category* source, const kk_category* target, const char* json_text,
                           kk_functor** out) {
    return guarded([&] {
        require(source, "source category");
        require(target, "target category");
        require(out, "output pointer");
        const json doc = parse_text(json_text);
        *out = new kk_functor{source->p, target->p, source->hash,
                              parse_input([&] { return functor_from_json(*source->p, *target->p, doc); })};
        return KK_OK;
    });
}

void kk_functor_free(kk_functor* f) { delete f; }

kk_status kk_validate(const kk_category* c, char** report) {
    return guarded([&] {
        require(c, "category");
        return emit(report_validate(*c->p), c->hash, report);
    });
}

kk_status kk_hom(const kk_complex* x, const kk_complex* y, int shift, char** report) {
    return guarded([&] {
        require(x, "complex");
        require(y, "complex");
        if (x->p != y->p) throw InputError("complexes over different categories");
        return emit(report_hom(x->x, y->x, shift), x->hash, report);
    });
}

kk_status kk_cone(const kk_map* f, char** report) {
    return guarded([&] {
        require(f, "map");
        return emit(report_cone(f->f), f->hash, report);
    });
}

kk_status kk_minimize(const kk_complex* x, char** report) {
    return guarded([&] {
        require(x, "complex");
        return emit(report_minimize(x->x), x->hash, report);
    });
}

kk_status kk_truncate(const kk_complex* x, const int* at, char** report) {
    return guarded([&] {
        require(x, "complex");
        return emit(report_truncate(x->x, at ? std::optional<int>(*at) : std::nullopt), x->hash, report);
    });
}

kk_status kk_heart_simples(const kk_category* c, char** report) {
    return guarded([&] {
        require(c, "category");
        return emit(report_heart_simples(*c->p), c->hash, report);
    });
}

kk_status kk_heart(const kk_complex* x, char** report) {
    return guarded([&] {
        require(x, "complex");
        return emit(report_heart(x->x), x->hash, report);
    });
}

kk_status kk_weights(const kk_complex* x, char** report) {
    return guarded([&] {
        require(x, "complex");
        return emit(report_weights(x->x), x->hash, report);
    });
}

kk_status kk_mixed_check(const kk_category* c, int lo, int hi, char** report) {
    return guarded([&] {
        require(c, "category");
        if (lo > hi) throw InputError("empty window");
        return emit(report_mixed_check(*c->p, {lo, hi}), c->hash, report);
    });
}

kk_status kk_koszul_check(const kk_category* c, int lo, int hi, uint64_t seed, char** report) {
    return guarded([&] {
        require(c, "category");
        if (lo > hi) throw InputError("empty window");
        return emit(report_koszul_check(*c->p, {lo, hi}, seed), c->hash, report);
    });
}

kk_status kk_surrogate(const kk_category* c, int lo, int hi, char** report) {
    return guarded([&] {
        require(c, "category");
        if (lo > hi) throw InputError("empty window");
        return emit(report_surrogate(*c->p, {lo, hi}), c->hash, report);
    });
}

kk_status kk_dual(const kk_category* c, int lo, int hi, size_t length_bound, char** report) {
    return guarded([&] {
        require(c, "category");
        if (lo > hi) throw InputError("empty window");
        return emit(report_dual(*c->p, {lo, hi}, length_bound), c->hash, report);
    });
}

kk_status kk_roundtrip(const kk_category* c, char** report) {
    return guarded([&] {
        require(c, "category");
        return emit(report_roundtrip(*c->p), c->hash, report);
    });
}

kk_status kk_double_dual(const kk_category* c, int lo, int hi, size_t length_bound, char** report) {
    return guarded([&] {
        require(c, "category");
        if (lo > hi) throw InputError("empty window");
        return emit(report_double_dual(*c->p, {lo, hi}, length_bound), c->hash, report);
    });
}

kk_status kk_inf_compose(const kk_inf_map* g, const kk_inf_map* f, char** report) {
    return guarded([&] {
        require(g, "map");
        require(f, "map");
        if (g->p != f->p) throw InputError("maps over different categories");
        return emit(report_inf_compose(g->f, f->f), f->hash, report);
    });
}

kk_status kk_inf_invert(const kk_inf_map* f, char** report) {
    return guarded([&] {
        require(f, "map");
        return emit(report_inf_invert(f->f), f->hash, report);
    });
}

kk_status kk_inf_square(const kk_inf_map* p, const kk_inf_map* q, const kk_map* f, const kk_map* i,
                        char** report) {
    return guarded([&] {
        require(p, "map");
        require(q, "map");
        require(f, "map");
        require(i, "map");
        if (p->p != q->p || p->p != f->p || p->p != i->p) throw InputError("maps over different categories");
        return emit(report_inf_square(p->f, q->f, f->f, i->f), f->hash, report);
    });
}

kk_status kk_inf_les(const kk_inf_map* f, int lo, int hi, char** report) {
    return guarded([&] {
        require(f, "map");
        if (lo > hi) throw InputError("empty window");
        return emit(report_inf_les(f->f, {lo, hi}), f->hash, report);
    });
}

kk_status kk_filtered_demo(const kk_category* c, uint64_t seed, int samples, char** report) {
    return guarded([&] {
        require(c, "category");
        if (samples < 1) throw InputError("samples must be positive");
        return emit(report_filtered_demo(*c->p, seed, samples), c->hash, report);
    });
}

kk_status kk_functor_apply(const kk_functor* f, const kk_complex* x, char** report) {
    return guarded([&] {
        require(f, "functor");
        require(x, "complex");
        if (f->source != x->p) throw InputError("complex is not over the functor's source");
        return emit(report_functor(f->f, x->x), f->hash, report);
    });
}

kk_status kk_selftest(const char* fixture_dir, uint64_t seed, char** report) {
    return guarded([&] {
        require(fixture_dir, "directory");
        const std::string catalog = read_text_file((std::filesystem::path(fixture_dir) / "catalog.json").string());
        return emit(report_selftest(fixture_dir, seed), hex64(fnv1a(catalog)), report);
    });
}

kk_status kk_golden_compare(const char* report, const char* golden_path, int regenerate, char** diff) {
    return guarded([&] {
        require(golden_path, "golden path");
        require(diff, "diff pointer");
        const json r = parse_text(report);
        std::string oracle = "engine";
        const bool exists = std::filesystem::exists(golden_path);
        json golden;
        if (exists) {
            golden = read_json_file(golden_path);
            oracle = golden.value("oracle", oracle);
        }
        if (regenerate) {
            write_file_atomic(golden_path, canonical_dump(json{{"oracle", oracle}, {"report", r}}));
            *diff = dup("");
            return KK_OK;
        }
        if (!exists) throw InputError(std::string("golden file not found: ") + golden_path);
        if (!golden.contains("report")) throw InputError("golden file has no report member");
        const json want = sort_keys(golden.at("report")), got = sort_keys(r);
        if (canonical_dump(want) == canonical_dump(got)) {
            *diff = dup("");
            return KK_OK;
        }
        std::string path = first_difference(want, got);
        *diff = dup(path.empty() ? "/" : path);
        return KK_CHECK_FAILED;
    });
}

} // extern "C"
