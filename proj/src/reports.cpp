#include "koszulkit/reports.hpp"

#include <filesystem>
#include <random>

namespace koszulkit {

namespace {

json window_json(const std::optional<ShiftWindow>& w) {
    if (!w) return nullptr;
    return json::array({w->first, w->second});
}

json issue_json(const ValidationIssue& i) {
    return {{"kind", i.kind}, {"message", i.message}, {"witness", i.witness}};
}

json cell_json(const Presentation& p, const VanishingCell& c) {
    return {{"source", simple_label(p, c.source)},
            {"target", simple_label(p, c.target)},
            {"shift", c.shift},
            {"dim", c.dim},
            {"allowed", c.allowed}};
}

json table_json(const std::vector<std::vector<std::size_t>>& t) {
    json a = json::array();
    for (const auto& row : t) a.push_back(row);
    return a;
}

json cert_json(const TriangleCertificate& c) {
    return {{"distinguished", c.distinguished}, {"reason", c.reason}};
}

bool is_identity_up_to_homotopy(const ChainMap& f) { return homotopic(f, identity_map(f.source)); }

void require_valid(const Presentation& p) {
    const ValidationReport v = validate_presentation(p);
    if (!v.valid()) {
        const auto& i = v.malformed.empty() ? v.violations.front() : v.malformed.front();
        throw InputError("presentation fails validation: " + i.message);
    }
}

json les_nodes(const std::vector<LesNode>& nodes) {
    json a = json::array();
    for (const auto& n : nodes)
        a.push_back({{"node", n.label},
                     {"dim", n.dim},
                     {"rank_in", n.rank_in},
                     {"rank_out", n.rank_out},
                     {"composite_zero", n.composite_zero},
                     {"exact", n.exact()}});
    return a;
}

json failures_json(const std::vector<std::string>& f) { return f; }

} // namespace

const char* engine_version() { return "0.1.0"; }

std::string fixture_hash(const json& presentation_doc) { return hex64(fnv1a(canonical_dump(presentation_doc))); }

json envelope(const Report& r, const std::string& hash) {
    json out = r.body;
    out["command"] = r.command;
    out["engine_version"] = engine_version();
    out["fixture_hash"] = hash;
    out["window"] = window_json(r.window);
    if (r.seed) out["seed"] = *r.seed;
    out["pass"] = r.pass;
    return sort_keys(out);
}

std::string simple_label(const Presentation& p, int s) {
    const int d = p.degree(s);
    return d == 0 ? p.object(s).id : p.object(s).id + "[" + std::to_string(d) + "]";
}

json support_to_json(const Support& s) {
    json a = json::array();
    for (const auto& [i, j] : s) a.push_back({i, j});
    return a;
}

Report report_validate(const Presentation& p) {
    const ValidationReport v = validate_presentation(p);
    Report r{"validate"};
    json mal = json::array(), vio = json::array();
    for (const auto& i : v.malformed) mal.push_back(issue_json(i));
    for (const auto& i : v.violations) vio.push_back(issue_json(i));
    r.body["malformed"] = mal;
    r.body["violations"] = vio;
    r.body["valid"] = v.valid();
    if (!v.valid()) r.body["witness"] = (v.malformed.empty() ? v.violations : v.malformed).front().witness;
    r.body["objects"] = p.size();
    r.pass = v.valid();
    return r;
}

Report report_hom(const Complex& x, const Complex& y, int shift_by) {
    require_valid(x.cat());
    const HomSpace h = hom_space(x, y, shift_by);
    Report r{"hom"};
    r.body["dim"] = h.dim();
    r.body["shift"] = shift_by;
    r.body["cycle_dim"] = h.cycle_dim();
    r.body["boundary_dim"] = h.boundary_dim();
    json basis = json::array();
    for (const auto& b : h.basis()) basis.push_back(chain_map_to_json(b));
    r.body["basis"] = basis;
    return r;
}

Report report_cone(const ChainMap& f) {
    require_valid(f.source.cat());
    const Cone c = cone(f);
    const MinimalModel m = minimal_model(c.z, false);
    Report r{"cone"};
    r.body["cone"] = complex_to_json(c.z);
    r.body["support"] = support_to_json(support(c.z));
    r.body["inclusion"] = chain_map_to_json(c.inclusion);
    r.body["projection"] = chain_map_to_json(c.projection);
    r.body["minimal_model"] = complex_to_json(m.minimal);
    return r;
}

Report report_minimize(const Complex& x) {
    require_valid(x.cat());
    const MinimalModel m = minimal_model(x, true);
    Report r{"minimize"};
    const bool there_and_back = is_identity_up_to_homotopy(compose(*m.from_minimal, *m.to_minimal));
    const bool back_and_there = is_identity_up_to_homotopy(compose(*m.to_minimal, *m.from_minimal));
    r.body["minimal"] = complex_to_json(m.minimal);
    r.body["support"] = support_to_json(support(m.minimal));
    r.body["rank_before"] = x.total_rank();
    r.body["rank_after"] = m.minimal.total_rank();
    r.body["is_minimal"] = is_minimal(m.minimal);
    r.body["homotopy_equivalence"] = there_and_back && back_and_there;
    r.pass = is_minimal(m.minimal) && there_and_back && back_and_there;
    return r;
}

Report report_truncate(const Complex& x, std::optional<int> at) {
    require_valid(x.cat());
    const Truncation t = at ? truncate_at(x, *at) : truncate(x);
    Report r{"truncate"};
    const int n = at.value_or(0);
    const bool a_left = in_region(support(shift(t.a, -n)), Region::left);
    const bool b_right = in_region(support(shift(t.b, 1 - n)), Region::right);
    r.body["at"] = n;
    r.body["a"] = complex_to_json(t.a);
    r.body["b"] = complex_to_json(t.b);
    r.body["f"] = chain_map_to_json(t.f);
    r.body["g"] = chain_map_to_json(t.g);
    r.body["h"] = chain_map_to_json(t.h);
    r.body["a_in_left_aisle"] = a_left;
    r.body["b_shift_in_right_aisle"] = b_right;
    r.body["triangle"] = cert_json(t.certificate);
    r.pass = a_left && b_right && t.certificate.distinguished;
    return r;
}

Report report_heart_simples(const Presentation& p) {
    require_valid(p);
    Report r{"heart"};
    json a = json::array();
    const auto simples = heart_simples(p);
    for (std::size_t s = 0; s < simples.size(); ++s)
        a.push_back({{"simple", simple_label(p, static_cast<int>(s))},
                     {"complex", complex_to_json(simples[s])},
                     {"in_heart", aisle_membership(simples[s]).in_heart}});
    r.body["simples"] = a;
    for (const auto& x : simples) r.pass = r.pass && aisle_membership(x).in_heart;
    return r;
}

Report report_heart(const Complex& x) {
    require_valid(x.cat());
    Report r{"heart"};
    const AisleMembership m = aisle_membership(minimal_model(x, false).minimal);
    r.body["in_left_aisle"] = m.in_left;
    r.body["in_right_aisle"] = m.in_right;
    r.body["in_heart"] = m.in_heart;
    if (!m.in_heart) {
        r.pass = false;
        return r;
    }
    const HeartObject h = to_heart(x);
    r.body["normal_form"] = complex_to_json(h.normal_form);
    r.body["support"] = support_to_json(support(h.normal_form));
    return r;
}

Report report_weights(const Complex& x) {
    Report r = report_heart(x);
    r.command = "weights";
    if (!r.pass) return r;
    const HeartObject h = to_heart(x);
    const Presentation& p = x.cat();
    json graded = json::object();
    bool pure = true;
    for (const auto& [k, g] : weight_filtration(h)) {
        graded[std::to_string(k)] = complex_to_json(g);
        for (int i : g.degrees()) pure = pure && g.d(i).is_zero();
    }
    json factors = json::object();
    for (const auto& [s, n] : composition_factors(h)) factors[simple_label(p, s)] = n;
    r.body["graded"] = graded;
    r.body["composition_factors"] = factors;
    r.body["graded_pieces_pure"] = pure;
    r.pass = pure;
    return r;
}

Report report_mixed_check(const Presentation& p, ShiftWindow w) {
    require_valid(p);
    const VanishingReport v = mixed_vanishing_report(p, w);
    Report r{"mixed-check"};
    r.window = w;
    json nz = json::array(), bad = json::array();
    for (const auto& c : v.nonzero) nz.push_back(cell_json(p, c));
    for (const auto& c : v.violations) bad.push_back(cell_json(p, c));
    r.body["nonzero"] = nz;
    r.body["violations"] = bad;
    r.pass = v.pass();
    return r;
}

Report report_koszul_check(const Presentation& p, ShiftWindow w, std::uint64_t seed) {
    require_valid(p);
    const KoszulityReport k = koszulity_check(p, w, seed);
    Report r{"koszul-check"};
    r.window = w;
    r.seed = seed;
    json bad = json::array();
    for (const auto& c : k.violations) bad.push_back(cell_json(p, c));
    r.body["violations"] = bad;
    r.body["separated_pairs"] = k.separated_pairs;
    r.body["separation_failures"] = failures_json(k.separation_failures);
    r.body["split_checks"] = k.split_checks;
    r.body["split_failures"] = failures_json(k.split_failures);
    r.pass = k.pass();
    return r;
}

Report report_surrogate(const Presentation& p, ShiftWindow w) {
    require_valid(p);
    const SurrogateReport s = koszulescence_surrogate(p, w);
    Report r{"surrogate"};
    r.window = w;
    auto cell = [&](const SurrogateCell& c) {
        return json{{"source", simple_label(p, c.source)},
                    {"target", simple_label(p, c.target)},
                    {"degree", c.degree},
                    {"dim", c.dim},
                    {"generated", c.generated}};
    };
    json cells = json::array();
    for (const auto& c : s.cells) cells.push_back(cell(c));
    r.body["cells"] = cells;
    r.body["witness"] = s.witness ? cell(*s.witness) : json(nullptr);
    r.pass = s.pass();
    return r;
}

Report report_dual(const Presentation& p, ShiftWindow w, std::size_t length_bound) {
    require_valid(p);
    Report r{"dual"};
    r.window = w;
    r.body["length_bound"] = length_bound;
    json inj = json::array();
    for (const auto& c : injective_detect(p, w, length_bound))
        inj.push_back({{"socle", simple_label(p, c.socle)},
                       {"found", c.found},
                       {"degree", c.degree},
                       {"length", c.length},
                       {"note", c.note},
                       {"complex", c.found ? complex_to_json(c.j) : json(nullptr)}});
    r.body["injectives"] = inj;
    r.body["hom_table"] = table_json(hom_dimension_table(p));
    try {
        const DualPresentation d = koszul_dual(p, w, length_bound);
        r.body["dual"] = presentation_to_json(*d.presentation);
        r.body["dual_hom_table"] = table_json(hom_dimension_table(*d.presentation));
        r.body["dual_valid"] = validate_presentation(*d.presentation).valid();
        r.pass = r.body["dual_valid"].get<bool>();
    } catch (const CheckFailure& e) {
        r.body["error"] = e.what();
        r.pass = false;
    }
    return r;
}

Report report_roundtrip(const Presentation& p) {
    require_valid(p);
    const RoundtripReport t = roundtrip_check(p);
    Report r{"roundtrip"};
    r.body["degrees_match"] = t.degrees_match;
    r.body["dims_match"] = t.dims_match;
    r.body["compositions_checked"] = t.checked;
    if (t.witness)
        r.body["witness"] = {std::get<0>(*t.witness), std::get<1>(*t.witness), std::get<2>(*t.witness)};
    else
        r.body["witness"] = nullptr;
    r.pass = t.pass();
    return r;
}

Report report_double_dual(const Presentation& p, ShiftWindow w, std::size_t length_bound) {
    require_valid(p);
    Report r{"double-dual"};
    r.window = w;
    r.body["length_bound"] = length_bound;
    try {
        const DoubleDualReport d = double_dual_check(p, w, length_bound);
        r.body["ext1_original"] = table_json(d.original);
        r.body["ext1_dual"] = table_json(d.dual);
        r.body["transposed"] = d.transposed;
        r.body["matching"] = d.matching ? json(*d.matching) : json(nullptr);
        r.pass = d.pass();
    } catch (const CheckFailure& e) {
        r.body["error"] = e.what();
        r.pass = false;
    }
    return r;
}

Report report_inf_compose(const InfMorphism& g, const InfMorphism& f) {
    require_valid(f.source().cat());
    if (!(g.source() == f.target())) throw InputError("infext compose: source of g differs from target of f");
    const InfMorphism gf = inf_compose(g, f);
    Report r{"infext compose"};
    const bool left_unit = inf_equal(inf_compose(inf_identity(g.target()), gf), gf);
    const bool right_unit = inf_equal(inf_compose(gf, inf_identity(f.source())), gf);
    const bool both_infinitesimal = is_infinitesimal(f) && is_infinitesimal(g);
    const bool square_zero = !both_infinitesimal || (is_infinitesimal(gf) && is_genuine(gf));
    r.body["composite"] = inf_morphism_to_json(gf);
    r.body["genuine"] = is_genuine(gf);
    r.body["infinitesimal"] = is_infinitesimal(gf);
    r.body["units"] = left_unit && right_unit;
    r.body["square_zero"] = square_zero;
    r.pass = left_unit && right_unit && square_zero;
    return r;
}

Report report_inf_invert(const InfMorphism& f) {
    require_valid(f.source().cat());
    Report r{"infext invert"};
    const auto inv = inf_invert(f);
    r.body["invertible"] = inv.has_value();
    r.body["inverse"] = inv ? inf_morphism_to_json(*inv) : json(nullptr);
    r.pass = inv.has_value();
    return r;
}

Report report_inf_square(const InfMorphism& p, const InfMorphism& q, const ChainMap& f, const ChainMap& i) {
    require_valid(f.source.cat());
    if (!(p.source() == f.source) || !(p.target() == i.source) || !(q.source() == f.target) ||
        !(q.target() == i.target))
        throw InputError("infext square: p must go X → X' and q must go Y → Y'");
    Report r{"infext square"};
    try {
        const InfSquareCompletion s = complete_inf_square(p, q, f, i);
        r.body["r"] = inf_morphism_to_json(s.r);
        r.body["squares_commute"] = s.squares_commute;
        r.body["inverse"] = s.inverse ? inf_morphism_to_json(*s.inverse) : json(nullptr);
        r.pass = s.squares_commute;
    } catch (const CheckFailure& e) {
        r.body["error"] = e.what();
        r.pass = false;
    }
    return r;
}

Report report_inf_les(const InfMorphism& f, ShiftWindow w) {
    const Presentation& p = f.source().cat();
    require_valid(p);
    if (!is_genuine(f)) throw InputError("infext les: triangles exist only for genuine morphisms");
    Report r{"infext les"};
    r.window = w;
    const InfTriangle t = iota_cone_triangle(f.f0);
    json tests = json::array();
    const auto simples = heart_simples(p);
    for (std::size_t s = 0; s < simples.size(); ++s) {
        const LesReport l = inf_les_check(simples[s], t, w);
        tests.push_back({{"test_object", simple_label(p, static_cast<int>(s))},
                         {"covariant", les_nodes(l.covariant)},
                         {"contravariant", les_nodes(l.contravariant)},
                         {"exact", l.pass()}});
        r.pass = r.pass && l.pass();
    }
    r.body["tests"] = tests;
    return r;
}

Report report_filtered_demo(const Presentation& p, std::uint64_t seed, int samples) {
    require_valid(p);
    const FilteredSuiteReport s = filtered_suite(p, seed, samples);
    Report r{"filtered-demo"};
    r.seed = seed;
    r.body["samples"] = samples;
    r.body["decompositions"] = s.decompositions;
    r.body["hom_reports"] = s.hom_reports;
    r.body["triangles"] = s.triangles;
    r.body["alpha_checks"] = s.alpha_checks;
    r.body["shift_checks"] = s.shift_checks;
    r.body["j_checks"] = s.j_checks;
    r.body["fa_checks"] = s.fa_checks;
    r.body["failures"] = failures_json(s.failures);
    r.pass = s.pass();
    return r;
}

Report report_functor(const HomogeneousFunctor& f, const Complex& x) {
    require_valid(*f.source);
    Report r{"functor"};
    const Complex fx = apply_to_complex(f, x);
    bool d2 = true;
    try {
        fx.check();
    } catch (const CheckFailure&) {
        d2 = false;
    }
    r.body["image"] = complex_to_json(fx);
    r.body["differential_squares_to_zero"] = d2;
    r.pass = d2;
    return r;
}

std::vector<FixtureEntry> read_catalog(const std::string& dir) {
    const json doc = read_json_file((std::filesystem::path(dir) / "catalog.json").string());
    std::vector<FixtureEntry> out;
    for (const auto& e : doc.at("fixtures")) {
        FixtureEntry f;
        f.name = e.at("name").get<std::string>();
        f.file = e.at("file").get<std::string>();
        f.valid = e.value("valid", true);
        f.witness = e.value("witness", std::vector<std::string>{});
        f.koszul = e.value("koszul", true);
        f.surrogate = e.value("surrogate", true);
        out.push_back(f);
    }
    return out;
}

std::string resolve_fixture(const std::string& name_or_path, const std::string& dir) {
    if (name_or_path.rfind("FIX_", 0) != 0) return name_or_path;
    for (const auto& e : read_catalog(dir))
        if (e.name == name_or_path) return (std::filesystem::path(dir) / e.file).string();
    throw InputError("unknown fixture " + name_or_path);
}

Report report_selftest(const std::string& dir, std::uint64_t seed) {
    Report r{"selftest"};
    r.seed = seed;
    const ShiftWindow w{-3, 3};
    r.window = w;
    json rows = json::array();
    for (const auto& e : read_catalog(dir)) {
        const auto p = presentation_from_json(read_json_file((std::filesystem::path(dir) / e.file).string()));
        json row{{"fixture", e.name}};
        std::vector<std::string> failures;
        const Report v = report_validate(*p);
        row["valid"] = v.pass;
        if (v.pass != e.valid) failures.push_back("validate");
        if (!e.valid) {
            if (!v.body.contains("witness") || v.body["witness"].get<std::vector<std::string>>() != e.witness)
                failures.push_back("witness");
        } else if (v.pass) {
            auto check = [&](const Report& x, bool expected) {
                row[x.command] = x.pass;
                if (x.pass != expected) failures.push_back(x.command);
            };
            check(report_mixed_check(*p, w), e.koszul);
            check(report_koszul_check(*p, {-2, 2}, seed), e.koszul);
            check(report_surrogate(*p, w), e.surrogate);
            check(report_roundtrip(*p), true);
            check(report_heart_simples(*p), true);
            std::mt19937_64 rng(seed);
            std::size_t truncations = 0;
            for (int k = 0; k < 10; ++k) {
                const Complex x = random_complex(*p, rng);
                const Report t = report_truncate(x, std::nullopt);
                truncations += t.pass ? 1 : 0;
                const InfMorphism a = random_inf_morphism(x, x, rng), b = random_inf_morphism(x, x, rng),
                                  c = random_inf_morphism(x, x, rng);
                if (!inf_equal(inf_compose(inf_compose(c, b), a), inf_compose(c, inf_compose(b, a))))
                    failures.push_back("infext associativity");
                if (!adjunction_check(x).pass()) failures.push_back("infext adjunction");
            }
            row["truncations"] = truncations;
            if (truncations != 10) failures.push_back("truncate");
            check(report_filtered_demo(*p, seed, 10), true);
            const FunctorSuiteReport fs = functor_suite(*p, seed, 5);
            row["functors"] = fs.pass();
            if (!fs.pass()) failures.push_back("functors");
        }
        row["failures"] = failures;
        r.pass = r.pass && failures.empty();
        rows.push_back(row);
    }
    r.body["fixtures"] = rows;
    return r;
}

} // namespace koszulkit
