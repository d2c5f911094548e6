#pragma once

// Discrete closed planar curves and their purely geometric quantities.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "h1flow/errors.hpp"

namespace h1flow {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Vec2& operator*=(double a) {
    x *= a;
    y *= a;
    return *this;
  }
  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
constexpr double norm_sq(Vec2 a) { return dot(a, a); }
// Rotation by +90 degrees.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

// Per-vertex planar vector field along a curve.
using Field = std::vector<Vec2>;

// Ordered closed polygon; vertex n-1 connects back to vertex 0.
class PolyCurve {
 public:
  // Throws InvalidArgument if fewer than 3 vertices or any coordinate is not finite.
  explicit PolyCurve(std::vector<Vec2> vertices);

  std::size_t size() const { return vertices_.size(); }
  std::span<const Vec2> vertices() const { return vertices_; }
  const Vec2& operator[](std::size_t i) const { return vertices_[i]; }

  // Vector from vertex i to vertex i+1 (cyclic).
  Vec2 edge(std::size_t i) const {
    return vertices_[(i + 1) % vertices_.size()] - vertices_[i];
  }
  double edge_length(std::size_t i) const { return norm(edge(i)); }
  double min_edge_length() const;

  // True iff every edge has positive length.
  bool non_degenerate() const;

  PolyCurve translated(Vec2 offset) const;
  PolyCurve scaled(double factor) const;
  PolyCurve rotated(double angle) const;
  // Vertex k of the result is vertex (k + shift) mod n of this curve.
  PolyCurve reindexed(std::size_t shift) const;
  // Same point set traversed in the opposite direction.
  PolyCurve reversed() const;

 private:
  std::vector<Vec2> vertices_;
};

struct ArcData {
  std::vector<double> s;   // cumulative arclength at each vertex, s[0] = 0
  std::vector<double> ds;  // vertex quadrature weights
  std::vector<double> edge;  // edge lengths, edge[i] = |X_{i+1} - X_i|
  double length = 0.0;
};

struct FrameData {
  Field tangent;
  Field normal;  // tangent rotated by +90 degrees
  std::vector<double> turning;    // signed turning angle at each vertex
  std::vector<double> curvature;  // turning / ds
};

struct Norms {
  double linf = 0.0;
  double l2_du = 0.0;
  double l2_ds = 0.0;
  double h1_du = 0.0;
  double h1_ds = 0.0;
};

struct ChordArc {
  double value = 1.0;
  std::size_t i = 0;
  std::size_t j = 1;
};

// Throws DegenerateCurve on a zero-length edge.
ArcData arc_data(const PolyCurve& curve);

// Perimeter. Defined for degenerate curves as well.
double total_length(const PolyCurve& curve);

// Shoelace area, positive for counterclockwise orientation.
double signed_area(const PolyCurve& curve);

FrameData frame_data(const PolyCurve& curve);

// L-infinity, L2(du), L2(ds), H1(du), H1(ds) norms of a per-vertex field.
// The parameter measure du gives each vertex weight 1/n. Derivative terms
// are per-edge difference quotients.
Norms norms(const PolyCurve& curve, std::span<const Vec2> field);

// ||X_u||_{L2(du)} of the curve itself.
double xu_l2(const PolyCurve& curve);

// max_i |X_i|
double linf_norm(std::span<const Vec2> field);

// Minimum chord / shorter-arc ratio over vertex pairs. Ties resolve to the
// lexicographically smallest (i, j).
ChordArc chord_arc_min(const PolyCurve& curve);

// Position on the polygon at fractional parameter u in [0, 1), interpolating
// linearly between vertex floor(u n) and its successor. u is taken mod 1.
Vec2 sample_at_parameter(const PolyCurve& curve, double u);

}  // namespace h1flow
