#pragma once

// Shared helpers for the unit tests: cached fixtures and short constructors.

#include <filesystem>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "koszulkit/io.hpp"
#include "koszulkit/reports.hpp"

namespace kktest {

using namespace koszulkit;

inline std::string fixture_dir() { return KOSZULKIT_FIXTURE_DIR; }

inline json fixture_doc(const std::string& name) {
    return read_json_file(resolve_fixture(name, fixture_dir()));
}

inline const Presentation& fixture(const std::string& name) {
    static std::map<std::string, std::shared_ptr<Presentation>> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, presentation_from_json(fixture_doc(name))).first;
    return *it->second;
}

inline std::shared_ptr<Presentation> parse(const std::string& text) { return presentation_from_json(json::parse(text)); }

/// "a+b" → summand list.
inline AddObject obj(const Presentation& p, const std::string& ids) {
    AddObject x;
    std::stringstream in(ids);
    for (std::string id; std::getline(in, id, '+');)
        if (!id.empty()) x.summands.push_back(p.index_of(id));
    return x;
}

/// Single-block morphism given by a JSON block list.
inline AddMorphism mor(const Presentation& p, const std::string& x, const std::string& y, const std::string& blocks) {
    return morphism_from_json(p, obj(p, x), obj(p, y), json::parse(blocks));
}

inline AddMorphism basis_map(const Presentation& p, const std::string& x, const std::string& y,
                             const std::string& label, const std::string& coeff = "1") {
    return mor(p, x, y, R"([{"label": ")" + label + R"(", "coeff": ")" + coeff + R"("}])");
}

inline Complex at(const Presentation& p, const std::string& ids, int degree) {
    return concentrated(p, obj(p, ids), degree);
}

inline Complex cplx(const Presentation& p, const std::string& text) { return complex_from_json(p, json::parse(text)); }

/// (b → a) in degrees -1, 0 over FIX_A2.
inline Complex cone_alpha(const Presentation& a2) {
    return cplx(a2, R"({"terms": {"-1": ["b"], "0": ["a"]}, "diff": {"-1": [{"label": "alpha", "coeff": "1"}]}})");
}

/// Degree-0 chain map between single-term complexes.
inline ChainMap map0(const Complex& x, const Complex& y, const AddMorphism& m, int degree = 0) {
    ChainMap f{x, y, {}};
    f.set(degree, m);
    return f;
}

} // namespace kktest
