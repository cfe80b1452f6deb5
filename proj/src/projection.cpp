#include "rmrac/projection.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rmrac {

ProjectionConfig ProjectionConfig::make(double theta_max_prime, double epsilon0, double c,
                                        double gamma) {
  ProjectionConfig cfg;
  cfg.theta_max_prime = theta_max_prime;
  cfg.epsilon0 = epsilon0;
  cfg.theta_max = theta_max_prime + epsilon0;
  cfg.c = c;
  cfg.xi0 = c * epsilon0;
  cfg.gamma = gamma;
  cfg.validate();
  return cfg;
}

void ProjectionConfig::validate() const {
  if (!(theta_max_prime > 0.0)) throw std::invalid_argument("projection: theta_max_prime must be > 0");
  if (!(epsilon0 > 0.0)) throw std::invalid_argument("projection: epsilon0 must be > 0");
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("projection: c must be in (0,1)");
  if (!(gamma > 0.0)) throw std::invalid_argument("projection: gamma must be > 0");
  if (std::abs(theta_max - (theta_max_prime + epsilon0)) > 1e-12 * theta_max)
    throw std::invalid_argument("projection: theta_max != theta_max_prime + epsilon0");
  if (std::abs(xi0 - c * epsilon0) > 1e-12 * epsilon0)
    throw std::invalid_argument("projection: xi0 != c * epsilon0");
}

const char* to_string(ThetaRegion r) {
  switch (r) {
    case ThetaRegion::A: return "A";
    case ThetaRegion::BUpper: return "B_UPPER";
    case ThetaRegion::BU: return "B_U";
    case ThetaRegion::BL: return "B_L";
    case ThetaRegion::Outside: return "OUTSIDE";
  }
  return "?";
}

double proj(double theta, double y, const ProjectionConfig& cfg) {
  if (std::abs(theta) > cfg.theta_max + 1e-9)
    throw std::invalid_argument("proj: |theta| exceeds theta_max by more than 1e-9 (invariant violation)");
  // annulus membership; exact y*theta == 0 takes the unscaled branch
  if (std::abs(theta) > cfg.theta_max_prime && y * theta > 0.0) {
    const double num = cfg.theta_max * cfg.theta_max - theta * theta;
    const double den = cfg.theta_max * cfg.theta_max - cfg.theta_max_prime * cfg.theta_max_prime;
    return (num / den) * y;
  }
  return y;
}

ThetaRegion region_of(double theta, const ProjectionConfig& cfg) {
  if (std::abs(theta) > cfg.theta_max) return ThetaRegion::Outside;
  if (std::abs(theta) <= cfg.theta_max_prime) return ThetaRegion::A;
  if (theta > 0.0) return ThetaRegion::BUpper;
  // the tie theta == -theta_max + xi0 belongs to the closed lower strip
  return theta <= -cfg.theta_max + cfg.xi0 ? ThetaRegion::BL : ThetaRegion::BU;
}

double theta_dot(double theta, double e, double x_p, const ProjectionConfig& cfg) {
  return cfg.gamma * proj(theta, -x_p * e, cfg);
}

}  // namespace rmrac
