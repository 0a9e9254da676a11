#pragma once

#include <json.hpp>
#include <string>

#include "bpatlas/classifier.hpp"

namespace bpatlas {

using Json = nlohmann::ordered_json;

inline constexpr const char* kAtlasSchema = "bp-atlas/1";

const char* to_string(Sector s);
const char* to_string(ModuleClass c);
const char* to_string(FamilyKind k);
const char* to_string(OrbitStatus s);

Json weight_json(const AffineWeight& w);
AffineWeight weight_from_json(const LevelParams& lv, const Json& j);

Json level_json(const LevelParams& lv);

Json atlas_json(const Atlas& a);
Atlas atlas_from_json(const Json& j);

std::string atlas_tsv(const Atlas& a);
std::string atlas_markdown(const Atlas& a);

// The two per-sector tables of (j, Delta) data, enumeration order.
std::string figure_markdown(const Atlas& a);

Json orbit_json(const OrbitTable& t);

}  // namespace bpatlas
