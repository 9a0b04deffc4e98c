#include "bloch/splitting/field_signal.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace bloch {

FieldSignal FieldSignal::sinusoid(double amplitude, double angular_frequency, double phase) {
  if (!std::isfinite(amplitude) || !std::isfinite(angular_frequency) || !std::isfinite(phase)) {
    throw InvalidArgumentError("field signal: sinusoid parameters must be finite");
  }
  FieldSignal s;
  s.amplitude_ = amplitude;
  s.angular_frequency_ = angular_frequency;
  s.phase_ = phase;
  return s;
}

FieldSignal FieldSignal::tabulated(std::vector<double> times, std::vector<double> values) {
  if (times.size() < 2 || times.size() != values.size()) {
    throw InvalidArgumentError("field signal: tabulated data needs matching times and values");
  }
  const double h = times[1] - times[0];
  if (!(h > 0.0)) {
    throw InvalidArgumentError("field signal: tabulated times must be strictly increasing");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double step = times[i] - times[i - 1];
    if (!(step > 0.0) || std::abs(step - h) > 1e-12 * std::max(1.0, std::abs(h))) {
      throw InvalidArgumentError("field signal: tabulated grid must be uniform");
    }
  }
  FieldSignal s;
  s.tabulated_ = true;
  s.times_ = std::move(times);
  s.values_ = std::move(values);
  s.grid_step_ = h;
  return s;
}

double FieldSignal::value(double t) const {
  if (!tabulated_) {
    return amplitude_ * std::sin(angular_frequency_ * t + phase_);
  }
  const double t0 = times_.front();
  const double t1 = times_.back();
  const double slack = 1e-12 * std::max(1.0, std::abs(t1));
  if (t < t0 - slack || t > t1 + slack) {
    throw OutOfRangeError("field signal: query time " + std::to_string(t) +
                          " outside the tabulated range");
  }
  const double pos = std::clamp((t - t0) / grid_step_, 0.0, double(times_.size() - 1));
  const std::size_t cell = std::min(static_cast<std::size_t>(pos), times_.size() - 2);
  const double frac = pos - static_cast<double>(cell);
  return values_[cell] + frac * (values_[cell + 1] - values_[cell]);
}

double FieldSignal::average(double t_n, double dt) const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvalidArgumentError("field average: dt must be positive");
  }
  if (!tabulated_) {
    if (angular_frequency_ == 0.0) return amplitude_ * std::sin(phase_);
    const double w = angular_frequency_;
    return amplitude_ * (std::cos(w * t_n + phase_) - std::cos(w * (t_n + dt) + phase_)) /
           (w * dt);
  }

  const double a = t_n;
  const double b = t_n + dt;
  const double t0 = times_.front();
  const double t1 = times_.back();
  const double slack = 1e-12 * std::max(1.0, std::abs(t1));
  if (a < t0 - slack || b > t1 + slack) {
    throw OutOfRangeError("field average: interval [" + std::to_string(a) + ", " +
                          std::to_string(b) + "] not covered by the tabulated grid");
  }

  // Exact integral of the piecewise-linear interpolant: trapezoid on every
  // (possibly partial) grid cell the interval overlaps.
  double integral = 0.0;
  const std::size_t first_cell =
      static_cast<std::size_t>(std::clamp((a - t0) / grid_step_, 0.0, double(times_.size() - 2)));
  for (std::size_t cell = first_cell; cell + 1 < times_.size(); ++cell) {
    const double lo = std::max(a, times_[cell]);
    const double hi = std::min(b, times_[cell + 1]);
    if (hi <= lo) {
      if (times_[cell] > b) break;
      continue;
    }
    integral += 0.5 * (value(lo) + value(hi)) * (hi - lo);
  }
  return integral / dt;
}

}  // namespace bloch
