#pragma once

#include <cmath>
#include <string>

#include "fp5/errors.hpp"

namespace fp5 {

// A membership grade in [0,1]. Construction rejects anything outside the
// interval; clamped() additionally absorbs sub-tolerance floating drift so
// that results of numerically evaluated operators stay valid without
// masking real errors.
class UnitValue {
 public:
  static constexpr double kDriftTolerance = 1e-12;

  constexpr UnitValue() = default;

  explicit UnitValue(double v) : value_(checked(v)) {}

  // Accepts excursions of at most `tolerance` outside [0,1] and clamps them;
  // anything larger throws internal_error.
  static UnitValue clamped(double v, double tolerance = kDriftTolerance) {
    if (v >= 0.0 && v <= 1.0) return UnitValue(v, Unchecked{});
    if (v > -tolerance && v < 0.0) return UnitValue(0.0, Unchecked{});
    if (v < 1.0 + tolerance && v > 1.0) return UnitValue(1.0, Unchecked{});
    throw internal_error("value " + std::to_string(v) +
                         " outside [0,1] beyond drift tolerance");
  }

  constexpr double value() const { return value_; }
  constexpr operator double() const { return value_; }

  friend constexpr bool operator==(UnitValue a, UnitValue b) {
    return a.value_ == b.value_;
  }

 private:
  struct Unchecked {};
  constexpr UnitValue(double v, Unchecked) : value_(v) {}

  static double checked(double v) {
    if (std::isnan(v) || v < 0.0 || v > 1.0) {
      throw validation_error("value " + std::to_string(v) +
                             " outside [0,1]");
    }
    return v;
  }

  double value_ = 0.0;
};

}  // namespace fp5
