#include "h1flow/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace h1flow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

PolyCurve circle_curve(double r, std::size_t n) {
  std::vector<Vec2> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    v[i] = {r * std::cos(a), r * std::sin(a)};
  }
  return PolyCurve(std::move(v));
}

PolyCurve ellipse_curve(double a, double b, std::size_t n) {
  std::vector<Vec2> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double th = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    v[i] = {a * std::cos(th), b * std::sin(th)};
  }
  return PolyCurve(std::move(v));
}

PolyCurve square_curve(double side, std::size_t n) {
  const double h = 0.5 * side;
  const Vec2 corners[4] = {{-h, -h}, {h, -h}, {h, h}, {-h, h}};
  const std::size_t per_side = n / 4;
  std::vector<Vec2> v;
  v.reserve(n);
  for (std::size_t c = 0; c < 4; ++c) {
    const Vec2 a = corners[c];
    const Vec2 b = corners[(c + 1) % 4];
    for (std::size_t j = 0; j < per_side; ++j) {
      const double f = static_cast<double>(j) / static_cast<double>(per_side);
      v.push_back(a + f * (b - a));
    }
  }
  return PolyCurve(std::move(v));
}

PolyCurve star_curve(double radius, double amplitude, int arms, std::size_t n) {
  std::vector<Vec2> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double th = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    const double r = radius * (1.0 + amplitude * std::cos(arms * th));
    v[i] = {r * std::cos(th), r * std::sin(th)};
  }
  return PolyCurve(std::move(v));
}

// Two bells of radius r centred at (+-2r, 0) joined by straight segments at
// y = +-h; vertices equally spaced in arclength, traversed counterclockwise.
PolyCurve barbell_curve(double r, double h, std::size_t n) {
  const double beta = std::asin(h / r);
  const double xj = r * (2.0 - std::cos(beta));  // neck end, right side
  const double arc = 2.0 * (std::numbers::pi - beta) * r;
  const double neck = 2.0 * xj;
  const double total = 2.0 * arc + 2.0 * neck;

  auto point_at = [&](double s) -> Vec2 {
    if (s < arc) {
      const double a = -(std::numbers::pi - beta) + s / r;
      return {2.0 * r + r * std::cos(a), r * std::sin(a)};
    }
    s -= arc;
    if (s < neck) return {xj - s, h};
    s -= neck;
    if (s < arc) {
      const double a = beta + s / r;
      return {-2.0 * r + r * std::cos(a), r * std::sin(a)};
    }
    s -= arc;
    return {-xj + s, -h};
  };

  std::vector<Vec2> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = point_at(total * static_cast<double>(i) / static_cast<double>(n));
  }
  return PolyCurve(std::move(v));
}

double parse_double(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw InvalidArgument("cannot parse number '" + std::string(text) + "'");
  }
  return v;
}

void write_vertices_json(std::ostream& os, const PolyCurve& curve) {
  os << "{\"vertices\": [";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (i) os << ", ";
    os << '[' << format_double(curve[i].x) << ", " << format_double(curve[i].y) << ']';
  }
  os << "]}";
}

PolyCurve curve_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw InvalidArgument("curve JSON needs a \"vertices\" array");
  }
  std::vector<Vec2> v;
  for (const auto& p : j["vertices"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw InvalidArgument("each vertex must be a [x, y] pair of numbers");
    }
    v.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return PolyCurve(std::move(v));
}

}  // namespace

ShapeKind parse_shape_kind(std::string_view name) {
  if (name == "circle") return ShapeKind::kCircle;
  if (name == "square") return ShapeKind::kSquare;
  if (name == "ellipse") return ShapeKind::kEllipse;
  if (name == "barbell") return ShapeKind::kBarbell;
  if (name == "star") return ShapeKind::kStar;
  if (name == "file") return ShapeKind::kFile;
  throw InvalidArgument("unknown shape '" + std::string(name) + "'");
}

void GeneratorSpec::validate() const {
  if (kind == ShapeKind::kFile) {
    if (path.empty()) throw InvalidArgument("file shape needs an input path");
    return;
  }
  if (n < 3) throw InvalidArgument("n must be at least 3");
  if (!(size > 0.0) || !std::isfinite(size)) throw InvalidArgument("size must be positive");
  switch (kind) {
    case ShapeKind::kSquare:
      if (n % 4 != 0) throw InvalidArgument("square needs n divisible by 4");
      break;
    case ShapeKind::kEllipse:
      if (!(aspect > 0.0)) throw InvalidArgument("ellipse aspect must be positive");
      break;
    case ShapeKind::kBarbell:
      if (!(neck > 0.0 && neck < 1.0)) throw InvalidArgument("barbell neck must lie in (0, 1)");
      break;
    case ShapeKind::kStar:
      if (!(amplitude >= 0.0 && amplitude < 1.0)) {
        throw InvalidArgument("star amplitude must lie in [0, 1)");
      }
      if (arms < 1) throw InvalidArgument("star needs at least one arm");
      break;
    default:
      break;
  }
}

PolyCurve generate(const GeneratorSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case ShapeKind::kCircle:
      return circle_curve(spec.size, spec.n);
    case ShapeKind::kSquare:
      return square_curve(spec.size, spec.n);
    case ShapeKind::kEllipse:
      return ellipse_curve(spec.size, spec.size / spec.aspect, spec.n);
    case ShapeKind::kBarbell:
      return barbell_curve(spec.size, spec.neck * spec.size, spec.n);
    case ShapeKind::kStar:
      return star_curve(spec.size, spec.amplitude, spec.arms, spec.n);
    case ShapeKind::kFile:
      return read_curve_file(spec.path);
  }
  throw InvalidArgument("unhandled shape kind");
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_curve_csv(std::ostream& os, const PolyCurve& curve) {
  for (const auto& p : curve.vertices()) {
    os << format_double(p.x) << ',' << format_double(p.y) << '\n';
  }
}

PolyCurve read_curve_csv(std::istream& is) {
  std::vector<Vec2> v;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw InvalidArgument("curve CSV line " + std::to_string(lineno) + ": expected x,y");
    }
    const std::string_view sv(line);
    v.push_back({parse_double(sv.substr(0, comma)), parse_double(sv.substr(comma + 1))});
  }
  return PolyCurve(std::move(v));
}

void write_curve_json(std::ostream& os, const PolyCurve& curve) {
  write_vertices_json(os, curve);
  os << '\n';
}

PolyCurve read_curve_json(std::istream& is) {
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed curve JSON: ") + e.what());
  }
  return curve_from_json(j);
}

PolyCurve read_curve_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return path.extension() == ".json" ? read_curve_json(in) : read_curve_csv(in);
}

void write_curve_file(const std::filesystem::path& path, const PolyCurve& curve) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  if (path.extension() == ".json") {
    write_curve_json(out, curve);
  } else {
    write_curve_csv(out, curve);
  }
}

std::string diagnostics_csv_row(const DiagnosticsRecord& r) {
  std::string row;
  for (double v : {r.t, r.length, r.area, r.iso_ratio, r.deficit, r.linf, r.l2ds, r.xu_l2,
                   r.min_edge, r.chord_arc_min, r.max_abs_k, r.rescaled_max_k,
                   r.grad_sq_h1ds}) {
    row += format_double(v);
    row += ',';
  }
  row += r.embeddedness_ok ? '1' : '0';
  return row;
}

void write_diagnostics_csv(std::ostream& os, std::span<const DiagnosticsRecord> records) {
  os << kDiagnosticsHeader << '\n';
  for (const auto& r : records) os << diagnostics_csv_row(r) << '\n';
}

void write_svg(std::ostream& os, std::span<const PolyCurve> frames) {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = xmin;
  double xmax = -xmin;
  double ymax = -xmin;
  for (const auto& f : frames) {
    for (const auto& p : f.vertices()) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      // SVG y points down; flip so the picture has the usual orientation.
      ymin = std::min(ymin, -p.y);
      ymax = std::max(ymax, -p.y);
    }
  }
  if (frames.empty()) xmin = ymin = 0.0, xmax = ymax = 1.0;
  const double pad = 0.05 * std::max({xmax - xmin, ymax - ymin, 1e-12});
  xmin -= pad;
  ymin -= pad;
  xmax += pad;
  ymax += pad;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(xmin) << ' '
     << format_double(ymin) << ' ' << format_double(xmax - xmin) << ' '
     << format_double(ymax - ymin) << "\">\n";
  const std::size_t m = frames.size();
  for (std::size_t k = 0; k < m; ++k) {
    const double f = m > 1 ? static_cast<double>(k) / static_cast<double>(m - 1) : 0.0;
    const int red = static_cast<int>(std::lround(255.0 * f));
    const int blue = 255 - red;
    os << "<polygon fill=\"none\" stroke=\"rgb(" << red << ",0," << blue
       << ")\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\" points=\"";
    for (std::size_t i = 0; i < frames[k].size(); ++i) {
      if (i) os << ' ';
      os << format_double(frames[k][i].x) << ',' << format_double(-frames[k][i].y);
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
}

void write_path_json(std::ostream& os, const CurvePath& path) {
  os << "{\"frames\": [";
  for (std::size_t k = 0; k < path.frames.size(); ++k) {
    if (k) os << ", ";
    write_vertices_json(os, path.frames[k]);
  }
  os << "], \"mode\": \"" << path_mode_name(path.mode) << "\"}\n";
}

CurvePath read_path_json(std::istream& is) {
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed path JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("frames") || !j["frames"].is_array()) {
    throw InvalidArgument("path JSON needs a \"frames\" array");
  }
  CurvePath path;
  for (const auto& f : j["frames"]) path.frames.push_back(curve_from_json(f));
  const std::string mode = j.value("mode", "full");
  if (mode == "full") {
    path.mode = PathMode::kFull;
  } else if (mode == "quotient") {
    path.mode = PathMode::kQuotient;
  } else {
    throw InvalidArgument("unknown path mode '" + mode + "'");
  }
  return path;
}

void write_trajectory_json(std::ostream& os, const Trajectory& traj) {
  os << "{\"times\": [";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    if (k) os << ", ";
    os << format_double(traj.times[k]);
  }
  os << "], \"frames\": [";
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    if (k) os << ", ";
    write_vertices_json(os, traj.states[k]);
  }
  os << "], \"termination\": \"" << termination_name(traj.termination) << "\"}\n";
}

}  // namespace h1flow
