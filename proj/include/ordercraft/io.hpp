#pragma once

#include <string>

#include <json.hpp>

#include "ordercraft/constructions.hpp"
#include "ordercraft/families.hpp"
#include "ordercraft/map_witness.hpp"
#include "ordercraft/poset.hpp"
#include "ordercraft/segments.hpp"

namespace oc {

using Json = nlohmann::json;

// Canonical form: cover pairs sorted, labels only when present.
Json to_json(const Poset& p);
Poset poset_from_json(const Json& j);

Json to_json(const DownSetFamily& f);
DownSetFamily family_from_json(const Json& j);

Json to_json(const MapFlags& f);
MapFlags flags_from_json(const Json& j);

// Flags are read back as recorded, not recomputed.
Json to_json(const MapWitness& w);
MapWitness witness_from_json(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const FamilySpec& s);
FamilySpec spec_from_json(const Json& j);

// Two-space indentation plus a trailing newline.
std::string dump(const Json& j);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string to_dot(const Poset& p, const std::string& name = "P");

}  // namespace oc
