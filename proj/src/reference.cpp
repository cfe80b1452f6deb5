#include "rmrac/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace rmrac {

ReferenceSignal ReferenceSignal::constant(double value) {
  ReferenceSignal r;
  r.kind = Kind::Constant;
  r.offset = value;
  return r;
}

ReferenceSignal ReferenceSignal::biased_sine(double offset, double amplitude, double omega) {
  ReferenceSignal r;
  r.kind = Kind::BiasedSine;
  r.offset = offset;
  r.amplitude = amplitude;
  r.omega = omega;
  return r;
}

ReferenceSignal ReferenceSignal::pulse(double level, double duration) {
  ReferenceSignal r;
  r.kind = Kind::Pulse;
  r.level = level;
  r.duration = duration;
  return r;
}

ReferenceSignal ReferenceSignal::chirp(double offset, double amplitude, double omega_start,
                                       double omega_end, double sweep_duration) {
  ReferenceSignal r;
  r.kind = Kind::Chirp;
  r.offset = offset;
  r.amplitude = amplitude;
  r.omega_start = omega_start;
  r.omega_end = omega_end;
  r.sweep_duration = sweep_duration;
  return r;
}

double ReferenceSignal::eval(double t) const {
  switch (kind) {
    case Kind::Constant:
      return offset;
    case Kind::BiasedSine:
      return offset + amplitude * std::sin(omega * t);
    case Kind::Pulse:
      return t <= duration ? level : 0.0;
    case Kind::Chirp: {
      // phase = integral of the instantaneous frequency, which ramps
      // linearly from omega_start to omega_end and then holds
      double phase;
      if (t < sweep_duration) {
        phase = omega_start * t + (omega_end - omega_start) * t * t / (2.0 * sweep_duration);
      } else {
        phase = 0.5 * (omega_start + omega_end) * sweep_duration + omega_end * (t - sweep_duration);
      }
      return offset + amplitude * std::sin(phase);
    }
  }
  return 0.0;
}

double ReferenceSignal::r_max() const {
  switch (kind) {
    case Kind::Constant:
      return std::abs(offset);
    case Kind::BiasedSine:
    case Kind::Chirp:
      return std::abs(offset) + std::abs(amplitude);
    case Kind::Pulse:
      return std::abs(level);
  }
  return 0.0;
}

void ReferenceSignal::validate() const {
  if (kind == Kind::Pulse && !(duration >= 0.0))
    throw std::invalid_argument("reference: pulse duration must be >= 0");
  if (kind == Kind::Chirp && !(sweep_duration > 0.0))
    throw std::invalid_argument("reference: chirp sweep_duration must be > 0");
}

}  // namespace rmrac
