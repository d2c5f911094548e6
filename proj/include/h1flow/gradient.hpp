#pragma once

// Discrete H1(ds) gradient of length and the H1(ds) inner product.

#include <span>

#include "h1flow/curve.hpp"
#include "h1flow/greens.hpp"

namespace h1flow {

struct VelocityField {
  Field v;                         // -grad L at each vertex
  double grad_norm_sq_h1ds = 0.0;  // ||grad L||^2_{H1(ds)}
  double grad_norm_l2ds = 0.0;     // ||grad L||_{L2(ds)}
};

// V_i = -X_i - sum_j X_j G_ij ds_j. km must be built from the same curve.
VelocityField flow_velocity(const PolyCurve& curve, const KernelMatrix& km);
VelocityField flow_velocity(const PolyCurve& curve);

// Translation-centred alias V_i = sum_j (X_i - X_j) G_ij ds_j. It differs
// from flow_velocity by X_i (1 + sum_j G_ij ds_j). Verification only.
Field flow_velocity_centered(const PolyCurve& curve, const KernelMatrix& km);

// sum_i <v_i, w_i> ds_i + sum_edges <dv, dw> / |edge|
double h1ds_inner(const PolyCurve& curve, std::span<const Vec2> v, std::span<const Vec2> w);

// Exact derivative of polygon length along v:
//   sum_edges <v_{i+1} - v_i, X_{i+1} - X_i> / |X_{i+1} - X_i|
double length_directional_derivative(const PolyCurve& curve, std::span<const Vec2> v);

}  // namespace h1flow
