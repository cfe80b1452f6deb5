#pragma once

namespace rmrac {

// Reference inputs used by the study: constants, biased sinusoids, a single
// pulse, and a linear frequency sweep (chirp) held at its end frequency.
// r_max() is exact per kind, so analysis bounds never need a simulation.
struct ReferenceSignal {
  enum class Kind { Constant, BiasedSine, Pulse, Chirp };

  Kind kind = Kind::Constant;
  double offset = 0.0;          // constant value / sine and chirp offset
  double amplitude = 0.0;       // sine and chirp amplitude
  double omega = 0.0;           // sine frequency, rad/s
  double level = 0.0;           // pulse level
  double duration = 0.0;        // pulse duration, s
  double omega_start = 0.0;     // chirp start frequency, rad/s
  double omega_end = 0.0;       // chirp end frequency, rad/s
  double sweep_duration = 0.0;  // chirp sweep time, s

  static ReferenceSignal constant(double value);
  static ReferenceSignal biased_sine(double offset, double amplitude, double omega);
  static ReferenceSignal pulse(double level, double duration);
  static ReferenceSignal chirp(double offset, double amplitude, double omega_start,
                               double omega_end, double sweep_duration);

  double eval(double t) const;
  double r_max() const;

  void validate() const;
};

}  // namespace rmrac
