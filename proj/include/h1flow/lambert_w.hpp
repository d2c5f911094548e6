#pragma once

// Principal-branch Lambert W and the closed-form shrinking circle it yields.

namespace h1flow {

// W0(x) for x >= -1/e. Throws OutOfDomain below the branch point.
double lambert_w0(double x);

// Solves w + log(w) = y for w > 0, i.e. W0(exp(y)), without forming exp(y).
double lambert_w0_of_exp(double y);

// Exact radius of a circle under the flow: r(t) = sqrt(W0(exp(c - 2t))),
// c = r0^2 + log(r0^2). Valid for all real t (eternal solution).
class CircleSolution {
 public:
  // Throws OutOfDomain unless r0 > 0.
  explicit CircleSolution(double r0);

  double r0() const { return r0_; }
  double c() const { return c_; }
  double radius(double t) const;

  // lim_{t -> inf} e^t r(t) = e^{c/2} = r0 exp(r0^2 / 2).
  double profile_radius_limit() const;

 private:
  double r0_;
  double c_;
};

double circle_radius(const CircleSolution& sol, double t);

}  // namespace h1flow
