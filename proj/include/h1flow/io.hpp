#pragma once

// Curve generators and file formats. Every float is written with 17
// significant digits, '.' decimal separator, LF line ends.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "h1flow/curve.hpp"
#include "h1flow/diagnostics.hpp"
#include "h1flow/flow.hpp"
#include "h1flow/metric_distance.hpp"

namespace h1flow {

enum class ShapeKind { kCircle, kSquare, kEllipse, kBarbell, kStar, kFile };

// Throws InvalidArgument for an unknown name.
ShapeKind parse_shape_kind(std::string_view name);

struct GeneratorSpec {
  ShapeKind kind = ShapeKind::kCircle;
  // circle: radius; square: side; ellipse: semi-major axis; barbell: bell
  // radius; star: mean radius.
  double size = 1.0;
  double aspect = 2.0;        // ellipse semi-major / semi-minor
  double neck = 0.25;         // barbell neck half-width, in units of size
  double amplitude = 0.3;     // star radial modulation
  int arms = 5;               // star
  std::size_t n = 200;
  std::filesystem::path path;  // kind == kFile

  void validate() const;
};

// Deterministic and counterclockwise. Throws InvalidArgument, or Error when a
// file cannot be read.
PolyCurve generate(const GeneratorSpec& spec);

std::string format_double(double v);

// Curve CSV: one "x,y" line per vertex.
void write_curve_csv(std::ostream& os, const PolyCurve& curve);
PolyCurve read_curve_csv(std::istream& is);

// Curve JSON: {"vertices": [[x, y], ...]}
void write_curve_json(std::ostream& os, const PolyCurve& curve);
PolyCurve read_curve_json(std::istream& is);

// Picks the format from the extension (.json, otherwise CSV).
PolyCurve read_curve_file(const std::filesystem::path& path);
void write_curve_file(const std::filesystem::path& path, const PolyCurve& curve);

inline constexpr std::string_view kDiagnosticsHeader =
    "t,length,area,iso_ratio,deficit,linf,l2ds,xu_l2,min_edge,chord_arc_min,"
    "max_abs_k,rescaled_max_k,grad_sq_h1ds,embeddedness_ok";

void write_diagnostics_csv(std::ostream& os, std::span<const DiagnosticsRecord> records);
std::string diagnostics_csv_row(const DiagnosticsRecord& r);

// One closed polyline per frame, blue at the first frame to red at the last.
void write_svg(std::ostream& os, std::span<const PolyCurve> frames);

// {"frames": [curve, ...], "mode": "full" | "quotient"}
void write_path_json(std::ostream& os, const CurvePath& path);
CurvePath read_path_json(std::istream& is);

// {"times": [...], "frames": [curve, ...], "termination": "..."}
void write_trajectory_json(std::ostream& os, const Trajectory& traj);

}  // namespace h1flow
