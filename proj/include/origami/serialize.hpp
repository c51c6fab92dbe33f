#pragma once

#include <string>

#include <json.hpp>

#include "origami/construction.hpp"
#include "origami/symmetry.hpp"

namespace origami {

enum class ExportFormat { json, csv };

// {"kind":"rational_pi","num":N,"den":D} or {"kind":"real","radians":X}.
// Lossless round-trip for rational angles.
nlohmann::json angle_to_json(const Angle& a);
Angle angle_from_json(const nlohmann::json& j);

nlohmann::json snapshot_to_json(const OrigamiSnapshot& snap);
OrigamiSnapshot snapshot_from_json(const nlohmann::json& j);

// "re,im,depth_found" header plus one row per point.
std::string snapshot_to_csv(const OrigamiSnapshot& snap);

// Rows sorted by (depth_found, re, im) in both formats.
std::string export_points(const OrigamiSnapshot& snap, ExportFormat format);

std::string wallpaper_class_name(WallpaperClass c);   // "p2" | "cmm" | "p6m"
std::string point_group_name(const PointGroup& g);    // "C2xC2" | "C_n" | "D_n"

nlohmann::json classification_to_json(const AngleSet& u, const WallpaperResult& r);
nlohmann::json classification_to_json(const AngleSet& u, const PointGroupResult& r);

}  // namespace origami
