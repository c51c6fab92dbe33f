#include "origami/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <regex>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "origami/algebra.hpp"
#include "origami/serialize.hpp"
#include "origami/svg_render.hpp"

namespace origami::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

Angle parse_angle_term(const std::string& term) {
  static const std::regex kRational(R"(^([0-9]+)?pi(?:/([0-9]+))?$)");
  static const std::regex kRadians(R"(^rad:([-+]?[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)$)");
  // Exact angle arithmetic multiplies denominators; keep them small enough
  // that sums and doublings never overflow.
  constexpr std::int64_t kMaxRational = 1000000;

  if (term == "0") return Angle::zero();
  std::smatch m;
  if (std::regex_match(term, m, kRational)) {
    std::int64_t num = 1, den = 1;
    try {
      if (m[1].matched) num = std::stoll(m[1].str());
      if (m[2].matched) den = std::stoll(m[2].str());
    } catch (const std::exception&) {
      raise(Errc::parse_error, "angle term out of range '" + term + "'");
    }
    if (den == 0) raise(Errc::parse_error, "zero denominator in '" + term + "'");
    if (den > kMaxRational || num > kMaxRational * den)
      raise(Errc::parse_error, "angle term out of range '" + term + "'");
    return Angle::rational_pi(num, den);
  }
  if (std::regex_match(term, m, kRadians)) return Angle::radians(std::stod(m[1].str()));
  raise(Errc::parse_error, "bad angle term '" + term + "' (use Api/B, Api, pi/B, 0 or rad:<x>)");
}

Rect parse_bbox_spec(const std::string& spec) {
  const auto parts = split(spec, ',');
  if (parts.size() != 4) raise(Errc::parse_error, "bbox needs x0,y0,x1,y1");
  double v[4];
  for (int i = 0; i < 4; ++i) {
    try {
      v[i] = std::stod(trim(parts[static_cast<std::size_t>(i)]));
    } catch (const std::exception&) {
      raise(Errc::parse_error, "bad bbox number '" + parts[static_cast<std::size_t>(i)] + "'");
    }
  }
  Rect r{v[0], v[1], v[2], v[3]};
  if (!(r.width() > 0.0 && r.height() > 0.0))
    raise(Errc::parse_error, "bbox must have positive area");
  return r;
}

struct OutputSink {
  std::ostream& stdout_stream;
  std::string path;  // empty: stdout

  void write(const std::string& payload) const {
    if (path.empty()) {
      stdout_stream << payload;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) raise(Errc::parse_error, "cannot open output file '" + path + "'");
    f << payload;
  }
};

// Arity and zero-membership are usage-level checks: they fail with exit 2
// before any domain computation starts.
std::optional<AngleSet> make_angle_set(const std::string& spec, std::size_t min_size,
                                       const Tolerance& tol, std::ostream& err) {
  try {
    AngleSet u = AngleSet::of(parse_angle_spec(spec), tol);
    if (u.size() < min_size) {
      err << "need at least " << min_size << " distinct angles, got " << u.size() << "\n";
      return std::nullopt;
    }
    return u;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return std::nullopt;
  }
}

}  // namespace

std::vector<Angle> parse_angle_spec(const std::string& spec) {
  std::vector<Angle> angles;
  for (const std::string& part : split(spec, ',')) {
    const std::string term = trim(part);
    if (term.empty()) raise(Errc::parse_error, "empty angle term");
    angles.push_back(parse_angle_term(term));
  }
  return angles;
}

CliConfig load_config(const std::string& path) {
  CliConfig cfg;
  if (path.empty()) return cfg;
  std::ifstream f(path);
  if (!f) raise(Errc::parse_error, "cannot read config file '" + path + "'");
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::parse_error, std::string("bad config JSON: ") + e.what());
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "eps_angle") cfg.tol.eps_angle = value.get<double>();
    else if (key == "eps_point") cfg.tol.eps_point = value.get<double>();
    else if (key == "eps_scalar") cfg.tol.eps_scalar = value.get<double>();
    else if (key == "depth") cfg.depth = value.get<int>();
    else if (key == "max_depth") cfg.max_depth = value.get<int>();
    else if (key == "cap") cfg.cap = value.get<std::size_t>();
    else if (key == "bbox") {
      if (!value.is_array() || value.size() != 4)
        raise(Errc::parse_error, "config bbox must be [x0,y0,x1,y1]");
      cfg.bbox = Rect{value[0].get<double>(), value[1].get<double>(),
                      value[2].get<double>(), value[3].get<double>()};
    } else if (key == "out") {
      cfg.out = value.get<std::string>();
    } else {
      raise(Errc::parse_error, "unknown config key '" + key + "'");
    }
  }
  try {
    cfg.tol.validate();
  } catch (const Error& e) {
    raise(Errc::parse_error, e.what());
  }
  if (cfg.depth < 1 || cfg.max_depth < 1)
    raise(Errc::parse_error, "config depths must be >= 1");
  if (cfg.cap && *cfg.cap < 1) raise(Errc::parse_error, "config cap must be >= 1");
  if (cfg.bbox && !(cfg.bbox->width() > 0.0 && cfg.bbox->height() > 0.0))
    raise(Errc::parse_error, "config bbox must have positive area");
  return cfg;
}

PointGroup parse_group_name(const std::string& name) {
  if (name == "C2xC2") return PointGroup::klein_four();
  static const std::regex kGroup(R"(^([CD])_?([0-9]+)$)");
  std::smatch m;
  if (!std::regex_match(name, m, kGroup))
    raise(Errc::parse_error, "bad group name '" + name + "' (use C2xC2, Cn or Dn)");
  const int n = std::stoi(m[2].str());
  return m[1].str() == "C" ? PointGroup::cyclic(n) : PointGroup::dihedral(n);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  try {
    if (const char* path = std::getenv("ORIGAMI_SYM_CONFIG")) cfg = load_config(path);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"origami point sets on the complex plane and their symmetry groups"};
  app.require_subcommand(1);

  std::string angles_spec;
  std::string bbox_spec;
  std::string format = "json";
  std::string group_name;
  std::string out_path = cfg.out.value_or("");
  int depth = cfg.depth;
  int max_depth = cfg.max_depth;
  std::int64_t cap = cfg.cap ? static_cast<std::int64_t>(*cfg.cap) : -1;
  int cheb_k = -1;
  double stroke_width = 0.02, point_radius = 0.06;
  int width_px = 800, height_px = 800;

  auto* classify = app.add_subcommand("classify", "classify the symmetry group of an angle set");
  classify->add_option("--angles", angles_spec, "comma-separated angle terms")->required();
  classify->add_option("--max-depth", max_depth, "membership search depth");

  auto* generate_cmd = app.add_subcommand("generate", "generate the point set to a depth");
  generate_cmd->add_option("--angles", angles_spec)->required();
  generate_cmd->add_option("--depth", depth);
  generate_cmd->add_option("--bbox", bbox_spec, "x0,y0,x1,y1");
  generate_cmd->add_option("--cap", cap, "maximum stored points");
  generate_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  generate_cmd->add_option("--out", out_path);

  auto* render = app.add_subcommand("render", "render the line structure as SVG");
  render->add_option("--angles", angles_spec)->required();
  render->add_option("--depth", depth);
  render->add_option("--bbox", bbox_spec, "x0,y0,x1,y1");
  render->add_option("--cap", cap);
  render->add_option("--out", out_path);
  render->add_option("--stroke-width", stroke_width);
  render->add_option("--point-radius", point_radius);
  render->add_option("--width", width_px);
  render->add_option("--height", height_px);

  auto* project = app.add_subcommand("project", "initial intersections and their real projections");
  project->add_option("--angles", angles_spec)->required();

  auto* chebyshev = app.add_subcommand("chebyshev", "emit the polynomial table as CSV");
  chebyshev->add_option("--k", cheb_k)->required();

  auto* construct = app.add_subcommand("construct", "angle set realizing a target point group");
  construct->add_option("--group", group_name)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  const OutputSink sink{out, out_path};
  const Tolerance tol = cfg.tol;

  try {
    if (classify->parsed()) {
      if (max_depth < 1) {
        err << "--max-depth must be >= 1\n";
        return kExitUsage;
      }
      const auto u = make_angle_set(angles_spec, 3, tol, err);
      if (!u) return kExitUsage;
      nlohmann::json j;
      if (u->size() == 3)
        j = classification_to_json(*u, classify_wallpaper(*u, tol));
      else
        j = classification_to_json(*u, classify_point_group(*u, {max_depth, tol, true}));
      sink.write(j.dump(2) + "\n");
      return kExitOk;
    }

    if (generate_cmd->parsed() || render->parsed()) {
      if (depth < 1) {
        err << "--depth must be >= 1\n";
        return kExitUsage;
      }
      if (cap == 0 || cap < -1) {
        err << "--cap must be >= 1\n";
        return kExitUsage;
      }
      const auto u = make_angle_set(angles_spec, 3, tol, err);
      if (!u) return kExitUsage;

      GenerateOptions gen;
      gen.tol = tol;
      if (!bbox_spec.empty()) gen.bbox = parse_bbox_spec(bbox_spec);
      else if (cfg.bbox) gen.bbox = cfg.bbox;
      if (cap > 0) gen.cap = static_cast<std::size_t>(cap);
      if (u->size() > 3 && !gen.bbox && !gen.cap) {
        err << "dense angle set (more than 3 angles): pass --bbox or --cap\n";
        return kExitResourceGuard;
      }

      const OrigamiSnapshot snap = generate(*u, depth, gen);
      if (generate_cmd->parsed()) {
        sink.write(export_points(snap, format == "csv" ? ExportFormat::csv
                                                       : ExportFormat::json));
        return kExitOk;
      }

      Rect view;
      if (gen.bbox) {
        view = *gen.bbox;
      } else {
        view = Rect{-0.5, -0.5, 1.5, 0.5};
        for (const SnapshotPoint& p : snap.points) {
          view.x0 = std::min(view.x0, p.pt.re - 0.5);
          view.y0 = std::min(view.y0, p.pt.im - 0.5);
          view.x1 = std::max(view.x1, p.pt.re + 0.5);
          view.y1 = std::max(view.y1, p.pt.im + 0.5);
        }
      }
      RenderStyle style;
      style.stroke_width = stroke_width;
      style.point_radius = point_radius;
      style.width_px = width_px;
      style.height_px = height_px;
      sink.write(render_svg(snap, view, style, tol));
      return kExitOk;
    }

    if (project->parsed()) {
      const auto u = make_angle_set(angles_spec, 3, tol, err);
      if (!u) return kExitUsage;
      const RingDescription ring = ring_description(*u, tol);
      nlohmann::json j;
      j["initial_intersections"] = nlohmann::json::array();
      for (const Point& p : ring.initial_intersections)
        j["initial_intersections"].push_back({{"re", p.re}, {"im", p.im}});
      j["projections"] = ring.projections;
      sink.write(j.dump(2) + "\n");
      return kExitOk;
    }

    if (chebyshev->parsed()) {
      if (cheb_k < 0) {
        err << "--k must be >= 0\n";
        return kExitUsage;
      }
      std::string csv = "k,coefficients\n";
      for (int k = 0; k <= cheb_k; ++k) {
        csv += std::to_string(k);
        for (const std::int64_t c : chebyshev_u(k).coeffs) csv += "," + std::to_string(c);
        csv += "\n";
      }
      sink.write(csv);
      return kExitOk;
    }

    if (construct->parsed()) {
      PointGroup target;
      try {
        target = parse_group_name(group_name);
      } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitUsage;
      }
      const AngleSet u = inverse_construct(target);
      nlohmann::json j;
      j["angles"] = nlohmann::json::array();
      for (const Angle& a : u) j["angles"].push_back(angle_to_json(a));
      sink.write(j.dump(2) + "\n");
      return kExitOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == Errc::parse_error ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace origami::cli
