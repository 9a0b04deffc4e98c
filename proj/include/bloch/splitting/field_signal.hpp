#pragma once

#include <vector>

#include "bloch/errors.hpp"

namespace bloch {

/// Scalar driving field E(t). Either an analytic sinusoid
/// amplitude * sin(angular_frequency * t + phase) or a tabulated signal on a
/// uniform grid, read as its piecewise-linear interpolant.
class FieldSignal {
 public:
  static FieldSignal sinusoid(double amplitude, double angular_frequency, double phase = 0.0);
  static FieldSignal tabulated(std::vector<double> times, std::vector<double> values);

  double value(double t) const;

  /// Interval mean (1/dt) * integral of E over [t_n, t_n + dt]. Exact
  /// antiderivative for sinusoids; exact piecewise-linear integral (composite
  /// trapezoid) for tabulated signals. Tabulated signals must cover the whole
  /// interval or OutOfRangeError is thrown.
  double average(double t_n, double dt) const;

 private:
  FieldSignal() = default;

  bool tabulated_ = false;
  double amplitude_ = 0.0;
  double angular_frequency_ = 0.0;
  double phase_ = 0.0;
  std::vector<double> times_;
  std::vector<double> values_;
  double grid_step_ = 0.0;
};

inline double field_average(const FieldSignal& signal, double t_n, double dt) {
  return signal.average(t_n, dt);
}

}  // namespace bloch
