#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "koszulkit/filtered.hpp"
#include "koszulkit/io.hpp"
#include "koszulkit/koszul.hpp"

namespace koszulkit {

const char* engine_version();

/// Command result before the envelope is added.
struct Report {
    explicit Report(std::string name) : command(std::move(name)) {}
    std::string command;
    json body = json::object();
    bool pass = true;
    std::optional<ShiftWindow> window;
    std::optional<std::uint64_t> seed;
};

/// Hash of the canonical form of a presentation document.
std::string fixture_hash(const json& presentation_doc);
/// Body fields plus command, engine_version, fixture_hash, window, seed and pass.
json envelope(const Report& r, const std::string& fixture_hash);

/// "b[1]" for the simple b[deg b].
std::string simple_label(const Presentation& p, int s);
json support_to_json(const Support& s);

Report report_validate(const Presentation& p);
Report report_hom(const Complex& x, const Complex& y, int shift);
Report report_cone(const ChainMap& f);
Report report_minimize(const Complex& x);
Report report_truncate(const Complex& x, std::optional<int> at);
Report report_heart_simples(const Presentation& p);
Report report_heart(const Complex& x);
Report report_weights(const Complex& x);
Report report_mixed_check(const Presentation& p, ShiftWindow w);
Report report_koszul_check(const Presentation& p, ShiftWindow w, std::uint64_t seed);
Report report_surrogate(const Presentation& p, ShiftWindow w);
Report report_dual(const Presentation& p, ShiftWindow w, std::size_t length_bound);
Report report_roundtrip(const Presentation& p);
Report report_double_dual(const Presentation& p, ShiftWindow w, std::size_t length_bound);

Report report_inf_compose(const InfMorphism& g, const InfMorphism& f);
Report report_inf_invert(const InfMorphism& f);
/// Completes (p, q) over the cone triangles of f : X → Y and i : X' → Y'.
Report report_inf_square(const InfMorphism& p, const InfMorphism& q, const ChainMap& f, const ChainMap& i);
/// Long exact sequences for ι of the cone triangle of f0, tested against every heart simple.
Report report_inf_les(const InfMorphism& f, ShiftWindow w);

Report report_filtered_demo(const Presentation& p, std::uint64_t seed, int samples);
Report report_functor(const HomogeneousFunctor& f, const Complex& x);

/// Fixture catalog entry; expectations are compared, not assumed.
struct FixtureEntry {
    std::string name, file;
    bool valid = true;
    std::vector<std::string> witness;
    bool koszul = true;
    bool surrogate = true;
};
std::vector<FixtureEntry> read_catalog(const std::string& dir);
/// Path of a catalog name such as FIX_A2, or the argument itself if it is not a name.
std::string resolve_fixture(const std::string& name_or_path, const std::string& dir);
Report report_selftest(const std::string& dir, std::uint64_t seed);

} // namespace koszulkit
