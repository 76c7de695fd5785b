#ifndef CURVESKETCH_IO_HPP
#define CURVESKETCH_IO_HPP

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvesketch/datasets.hpp"
#include "curvesketch/descriptors.hpp"
#include "curvesketch/features.hpp"
#include "curvesketch/polyline.hpp"

namespace curvesketch {

inline constexpr const char* kLibraryVersion = "1.0.0";
inline constexpr const char* kConfigSchema = "curvesketch/1";

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace io {

using json = nlohmann::json;

/// 17 significant digits: enough for bit-exact double round-trips.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline double parse_double(const std::string& s, const std::string& where) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || p != e)
    throw ParseError(where + ": not a number: '" + s + "'");
  return v;
}

inline long parse_long(const std::string& s, const std::string& where) {
  long v = 0;
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || p != e)
    throw ParseError(where + ": not an integer: '" + s + "'");
  return v;
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

/// Read one line, tolerating a trailing CR. Returns false at EOF.
inline bool getline_lf(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

inline std::string at_line(const std::string& what, int line_no) {
  return what + " at line " + std::to_string(line_no);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Trajectory CSV + manifest
// ---------------------------------------------------------------------------

/// Columns curve_id,seq,x,y; rows grouped by curve in input order, seq from 0.
inline void write_trajectory_csv(std::ostream& out,
                                 const std::vector<LabeledCurve>& curves) {
  out << "curve_id,seq,x,y\n";
  for (const auto& lc : curves) {
    int seq = 0;
    for (const auto& p : lc.curve.vertices())
      out << lc.id << ',' << seq++ << ',' << format_double(p.x) << ','
          << format_double(p.y) << '\n';
  }
}

/// Sidecar manifest: { curve_id: { closed: bool, label: string } }.
inline json manifest_json(const std::vector<LabeledCurve>& curves) {
  json m = json::object();
  for (const auto& lc : curves)
    m[lc.id] = {{"closed", lc.curve.closed()}, {"label", lc.label}};
  return m;
}

/// Read a multi-curve trajectory CSV. The manifest supplies closed flags
/// and labels; curves absent from it default to open with an empty label.
inline std::vector<LabeledCurve> read_trajectory_csv(std::istream& in,
                                                     const json& manifest) {
  std::string line;
  int line_no = 1;
  if (!detail::getline_lf(in, line))
    throw ParseError("trajectory csv: empty file");
  if (detail::split_csv_line(line) !=
      std::vector<std::string>{"curve_id", "seq", "x", "y"})
    throw ParseError(detail::at_line(
        "trajectory csv: expected header curve_id,seq,x,y", line_no));

  struct Pending {
    std::vector<Point2> points;
    long next_seq = 0;
    int first_line = 0;
  };
  std::vector<std::string> order;
  std::map<std::string, Pending> pending;
  while (detail::getline_lf(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto f = detail::split_csv_line(line);
    if (f.size() != 4)
      throw ParseError(detail::at_line("trajectory csv: expected 4 fields",
                                       line_no));
    std::string where = detail::at_line("trajectory csv", line_no);
    auto [it, fresh] = pending.try_emplace(f[0]);
    if (fresh) {
      order.push_back(f[0]);
      it->second.first_line = line_no;
    }
    long seq = parse_long(f[1], where);
    if (seq != it->second.next_seq)
      throw ParseError(where + ": expected seq " +
                       std::to_string(it->second.next_seq) + ", got " +
                       std::to_string(seq));
    ++it->second.next_seq;
    it->second.points.push_back(
        {parse_double(f[2], where), parse_double(f[3], where)});
  }

  std::vector<LabeledCurve> out;
  out.reserve(order.size());
  for (const auto& id : order) {
    auto& p = pending[id];
    bool closed = false;
    std::string label;
    if (manifest.contains(id)) {
      closed = manifest.at(id).value("closed", false);
      label = manifest.at(id).value("label", "");
    }
    try {
      out.push_back({Polyline(std::move(p.points), closed), label, id});
    } catch (const std::invalid_argument& e) {
      throw ParseError("trajectory csv: curve '" + id + "' starting at line " +
                       std::to_string(p.first_line) + ": " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Feature vectors + sketch config
// ---------------------------------------------------------------------------

inline void write_features_csv(std::ostream& out,
                               const std::vector<FeatureVector>& fvs) {
  if (fvs.empty()) throw std::invalid_argument("features csv: nothing to write");
  std::size_t n = fvs[0].values.size();
  out << "curve_id";
  for (std::size_t i = 1; i <= n; ++i) out << ",v_" << i;
  out << '\n';
  for (const auto& fv : fvs) {
    if (fv.values.size() != n)
      throw std::invalid_argument("features csv: ragged feature lengths");
    out << fv.curve_id;
    for (double v : fv.values) out << ',' << format_double(v);
    out << '\n';
  }
}

inline std::vector<FeatureVector> read_features_csv(std::istream& in,
                                                    const std::string& config_id = "") {
  std::string line;
  int line_no = 1;
  if (!detail::getline_lf(in, line))
    throw ParseError("features csv: empty file");
  auto header = detail::split_csv_line(line);
  if (header.size() < 2 || header[0] != "curve_id")
    throw ParseError(detail::at_line(
        "features csv: expected header curve_id,v_1,...", line_no));
  std::size_t n = header.size() - 1;
  std::vector<FeatureVector> out;
  while (detail::getline_lf(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto f = detail::split_csv_line(line);
    if (f.size() != n + 1)
      throw ParseError(detail::at_line("features csv: expected " +
                                           std::to_string(n + 1) + " fields",
                                       line_no));
    FeatureVector fv;
    fv.curve_id = f[0];
    fv.config_id = config_id;
    std::string where = detail::at_line("features csv", line_no);
    for (std::size_t i = 1; i <= n; ++i)
      fv.values.push_back(parse_double(f[i], where));
    out.push_back(std::move(fv));
  }
  return out;
}

inline json sketch_config_json(const SketchConfig& cfg) {
  json j;
  j["schema"] = kConfigSchema;
  j["library_version"] = kLibraryVersion;
  j["variant"] = variant_name(cfg.variant);
  if (cfg.variant == Variant::Signed) j["sigma"] = cfg.sigma;
  json lm;
  if (cfg.landmarks.provenance == LandmarkProvenance::Grid) {
    lm["provenance"] = "grid";
    lm["nx"] = cfg.landmarks.nx;
    lm["ny"] = cfg.landmarks.ny;
    lm["domain"] = {cfg.landmarks.domain.xmin, cfg.landmarks.domain.ymin,
                    cfg.landmarks.domain.xmax, cfg.landmarks.domain.ymax};
  } else {
    lm["provenance"] = "explicit";
    json pts = json::array();
    for (const auto& p : cfg.landmarks.points) pts.push_back({p.x, p.y});
    lm["points"] = pts;
  }
  j["landmarks"] = lm;
  return j;
}

inline SketchConfig parse_sketch_config(const json& j) {
  if (!j.contains("schema") || j.at("schema") != kConfigSchema)
    throw ParseError("config json: unsupported schema (expected " +
                     std::string(kConfigSchema) + ")");
  SketchConfig cfg;
  std::string variant = j.at("variant");
  if (variant == "signed")
    cfg.variant = Variant::Signed;
  else if (variant == "minDist")
    cfg.variant = Variant::MinDist;
  else
    throw ParseError("config json: unknown variant '" + variant + "'");
  if (cfg.variant == Variant::Signed) {
    cfg.sigma = j.at("sigma");
    if (!(cfg.sigma > 0.0)) throw ParseError("config json: sigma must be > 0");
  }
  const json& lm = j.at("landmarks");
  std::string prov = lm.at("provenance");
  if (prov == "grid") {
    const auto& d = lm.at("domain");
    if (!d.is_array() || d.size() != 4)
      throw ParseError("config json: domain must be [xmin,ymin,xmax,ymax]");
    cfg.landmarks = grid_landmarks(Rect{d[0], d[1], d[2], d[3]},
                                   lm.at("nx"), lm.at("ny"));
  } else if (prov == "explicit") {
    cfg.landmarks.provenance = LandmarkProvenance::ExplicitList;
    for (const auto& p : lm.at("points")) {
      if (!p.is_array() || p.size() != 2)
        throw ParseError("config json: landmark points must be [x,y] pairs");
      cfg.landmarks.points.push_back({p[0], p[1]});
    }
    if (cfg.landmarks.points.empty())
      throw ParseError("config json: empty landmark list");
  } else {
    throw ParseError("config json: unknown provenance '" + prov + "'");
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// Distance matrix
// ---------------------------------------------------------------------------

/// Dense matrix with curve ids as header row and leading column.
inline void write_matrix_csv(std::ostream& out,
                             const std::vector<std::string>& ids,
                             const std::vector<std::vector<double>>& matrix) {
  out << "id";
  for (const auto& id : ids) out << ',' << id;
  out << '\n';
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out << ids[i];
    for (std::size_t j = 0; j < ids.size(); ++j)
      out << ',' << format_double(matrix[i][j]);
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Raster
// ---------------------------------------------------------------------------

/// ny rows of nx values, bottom row first (matching grid storage).
inline void write_raster_csv(std::ostream& out, const std::vector<double>& grid,
                             int nx, int ny) {
  if (grid.size() != static_cast<std::size_t>(nx) * ny)
    throw std::invalid_argument("raster csv: grid size mismatch");
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i)
      out << (i ? "," : "") << format_double(grid[j * nx + i]);
    out << '\n';
  }
}

/// Plain PGM (P2), values min-max normalized to 0..255, top row first.
inline void write_raster_pgm(std::ostream& out, const std::vector<double>& grid,
                             int nx, int ny) {
  if (grid.size() != static_cast<std::size_t>(nx) * ny)
    throw std::invalid_argument("raster pgm: grid size mismatch");
  double lo = grid[0], hi = grid[0];
  for (double v : grid) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  double span = hi > lo ? hi - lo : 1.0;
  out << "P2\n" << nx << ' ' << ny << "\n255\n";
  for (int j = ny - 1; j >= 0; --j) {
    for (int i = 0; i < nx; ++i) {
      int g = static_cast<int>(std::lround(255.0 * (grid[j * nx + i] - lo) / span));
      out << (i ? " " : "") << g;
    }
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Descriptor reports
// ---------------------------------------------------------------------------

/// Infinity is serialized as the string "inf" (JSON has no infinity literal).
inline json slfs_json(const SlfsEstimate& est) {
  json j;
  if (est.finite())
    j["value"] = est.value;
  else
    j["value"] = "inf";
  if (est.witness) {
    j["witness"] = {{est.witness->first.x, est.witness->first.y},
                    {est.witness->second.x, est.witness->second.y}};
  } else {
    j["witness"] = nullptr;
  }
  j["sample_step"] = est.sample_step;
  return j;
}

// ---------------------------------------------------------------------------
// File helpers
// ---------------------------------------------------------------------------

inline std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);  // binary: keep \n line endings
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  return f;
}

inline std::ifstream open_in(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  return f;
}

inline json read_json_file(const std::string& path) {
  auto f = open_in(path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace io
}  // namespace curvesketch

#endif  // CURVESKETCH_IO_HPP
