#include "origami/serialize.hpp"

#include <algorithm>
#include <cstdio>

namespace origami {

namespace {

std::vector<SnapshotPoint> sorted_points(const OrigamiSnapshot& snap) {
  std::vector<SnapshotPoint> pts = snap.points;
  std::sort(pts.begin(), pts.end(), [](const SnapshotPoint& a, const SnapshotPoint& b) {
    if (a.depth_found != b.depth_found) return a.depth_found < b.depth_found;
    if (a.pt.re != b.pt.re) return a.pt.re < b.pt.re;
    return a.pt.im < b.pt.im;
  });
  return pts;
}

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

nlohmann::json angle_to_json(const Angle& a) {
  if (a.is_rational())
    return {{"kind", "rational_pi"}, {"num", a.num()}, {"den", a.den()}};
  return {{"kind", "real"}, {"radians", a.value()}};
}

Angle angle_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational_pi")
    return Angle::rational_pi(j.at("num").get<std::int64_t>(),
                              j.at("den").get<std::int64_t>());
  if (kind == "real") return Angle::radians(j.at("radians").get<double>());
  raise(Errc::parse_error, "unknown angle kind '" + kind + "'");
}

nlohmann::json snapshot_to_json(const OrigamiSnapshot& snap) {
  nlohmann::json j;
  j["angle_set"] = nlohmann::json::array();
  for (const Angle& a : snap.angle_set) j["angle_set"].push_back(angle_to_json(a));
  j["depth"] = snap.depth;
  j["truncated"] = snap.truncated;
  j["points"] = nlohmann::json::array();
  for (const SnapshotPoint& p : sorted_points(snap))
    j["points"].push_back({{"re", p.pt.re}, {"im", p.pt.im}, {"depth_found", p.depth_found}});
  return j;
}

OrigamiSnapshot snapshot_from_json(const nlohmann::json& j) {
  OrigamiSnapshot snap;
  for (const auto& a : j.at("angle_set")) snap.angle_set.push_back(angle_from_json(a));
  snap.depth = j.at("depth").get<int>();
  snap.truncated = j.at("truncated").get<bool>();
  for (const auto& p : j.at("points"))
    snap.points.push_back({Point{p.at("re").get<double>(), p.at("im").get<double>()},
                           p.at("depth_found").get<int>()});
  return snap;
}

std::string snapshot_to_csv(const OrigamiSnapshot& snap) {
  std::string out = "re,im,depth_found\n";
  for (const SnapshotPoint& p : sorted_points(snap)) {
    out += num17(p.pt.re);
    out += ',';
    out += num17(p.pt.im);
    out += ',';
    out += std::to_string(p.depth_found);
    out += '\n';
  }
  return out;
}

std::string export_points(const OrigamiSnapshot& snap, ExportFormat format) {
  if (format == ExportFormat::csv) return snapshot_to_csv(snap);
  return snapshot_to_json(snap).dump(2) + "\n";
}

std::string wallpaper_class_name(WallpaperClass c) {
  switch (c) {
    case WallpaperClass::P2: return "p2";
    case WallpaperClass::CMM: return "cmm";
    case WallpaperClass::P6M: return "p6m";
  }
  return "?";
}

std::string point_group_name(const PointGroup& g) {
  switch (g.kind) {
    case PointGroup::Kind::KleinFour: return "C2xC2";
    case PointGroup::Kind::Cyclic: return "C_" + std::to_string(g.n);
    case PointGroup::Kind::Dihedral: return "D_" + std::to_string(g.n);
  }
  return "?";
}

namespace {

nlohmann::json classification_common(const AngleSet& u, const std::string& kind,
                                     const std::string& cls, int rotation_order,
                                     const std::vector<double>& axes,
                                     const Certification& cert, bool ambiguous) {
  nlohmann::json j;
  j["input"] = nlohmann::json::array();
  for (const Angle& a : u) j["input"].push_back(angle_to_json(a));
  j["kind"] = kind;
  j["class"] = cls;
  j["rotation_order"] = rotation_order;
  j["reflection_axes"] = axes;
  if (cert.is_proven)
    j["certification"] = "proven";
  else
    j["certification"] = {{"depth", cert.depth}};
  j["ambiguous"] = ambiguous;
  return j;
}

}  // namespace

nlohmann::json classification_to_json(const AngleSet& u, const WallpaperResult& r) {
  return classification_common(u, "wallpaper", wallpaper_class_name(r.wallpaper),
                               r.rotation_order, r.reflection_axes,
                               Certification::proven(), r.ambiguous);
}

nlohmann::json classification_to_json(const AngleSet& u, const PointGroupResult& r) {
  return classification_common(u, "point_group", point_group_name(r.group),
                               r.rotation_order, r.reflection_axes, r.certification,
                               r.ambiguous);
}

}  // namespace origami
