#pragma once

#include <string>

namespace rmrac {

// Projection-operator geometry. The parameter bound splits into an inner set
// |theta| <= theta_max_prime where updates pass through unscaled, and an
// annulus of width epsilon0 where outward updates are scaled down to zero at
// |theta| = theta_max. xi0 = c * epsilon0 is the thickness of the strip at
// the lower boundary used by the stability analysis.
struct ProjectionConfig {
  double theta_max_prime = 0.0;
  double theta_max = 0.0;  // theta_max_prime + epsilon0
  double epsilon0 = 0.0;
  double c = 0.5;          // in (0,1)
  double xi0 = 0.0;        // c * epsilon0
  double gamma = 1.0;      // adaptation gain

  static ProjectionConfig make(double theta_max_prime, double epsilon0, double c = 0.5,
                               double gamma = 1.0);

  void validate() const;  // throws std::invalid_argument on any broken invariant
};

enum class ThetaRegion {
  A,        // |theta| <= theta_max_prime
  BUpper,   // theta_max_prime < theta <= theta_max
  BU,       // -theta_max + xi0 < theta < -theta_max_prime
  BL,       // -theta_max <= theta <= -theta_max + xi0
  Outside,  // |theta| > theta_max
};

const char* to_string(ThetaRegion r);

// Scaled-gradient projection: y is passed through unchanged unless theta is
// in the annulus and y pushes outward (y * theta > 0), in which case y is
// scaled by (theta_max^2 - theta^2) / (theta_max^2 - theta_max_prime^2).
// |theta| beyond theta_max + 1e-9 is an invariant violation and throws.
double proj(double theta, double y, const ProjectionConfig& cfg);

ThetaRegion region_of(double theta, const ProjectionConfig& cfg);

// gamma * proj(theta, -x_p * e)
double theta_dot(double theta, double e, double x_p, const ProjectionConfig& cfg);

}  // namespace rmrac
