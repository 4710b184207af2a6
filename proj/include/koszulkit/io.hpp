#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <json.hpp>

#include "koszulkit/functors.hpp"

namespace koszulkit {

using json = nlohmann::ordered_json;

/// Parses a presentation document. Shape problems in the composition table are
/// recorded as malformed issues; unknown ids and bad syntax raise InputError.
std::shared_ptr<Presentation> presentation_from_json(const json& doc);
json presentation_to_json(const Presentation& p);

Complex complex_from_json(const Presentation& p, const json& doc);
json complex_to_json(const Complex& x);

/// Block list [{row, col, label, coeff}] for a morphism between given objects.
AddMorphism morphism_from_json(const Presentation& p, const AddObject& x, const AddObject& y, const json& blocks);
json morphism_to_json(const AddMorphism& f);

/// {"components": {"i": blocks}} between given complexes.
ChainMap chain_map_from_json(const Complex& x, const Complex& y, const json& doc);
json chain_map_to_json(const ChainMap& f);

/// Self-contained map file {"source", "target", "components"}.
ChainMap chain_map_file_from_json(const Presentation& p, const json& doc);
json chain_map_file_to_json(const ChainMap& f);

/// {"f0": map file, "finf": map file}; finf may omit source and target.
InfMorphism inf_morphism_from_json(const Presentation& p, const json& doc);
json inf_morphism_to_json(const InfMorphism& f);

/// {"on_objects": {"id": [ids]}, "on_hom": {"label": blocks}}. Blocks default to row 0, col 0;
/// unlisted identity labels map to identities.
HomogeneousFunctor functor_from_json(const Presentation& source, const Presentation& target, const json& doc);
json functor_to_json(const HomogeneousFunctor& f);

AddObject object_from_json(const Presentation& p, const json& ids);
json object_to_json(const Presentation& p, const AddObject& x);

json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
/// Sorted keys, two-space indentation, trailing newline.
std::string canonical_dump(const json& doc);
json sort_keys(const json& doc);
/// JSON pointer of the first difference between two documents, empty if equal.
std::string first_difference(const json& a, const json& b);
/// Writes through a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& text);
std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t v);

} // namespace koszulkit
