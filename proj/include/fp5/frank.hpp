#pragma once

#include <limits>
#include <string>

#include "fp5/unit_value.hpp"

namespace fp5 {

// Parameter of the Frank t-norm family, s in [0, inf]. The three analytic
// limits are first-class cases:
//   s = 0   -> Min (Goedel)
//   s = 1   -> algebraic product
//   s = inf -> Lukasiewicz, Max(0, x+y-1)
// Conjugation maps s to 1/s and swaps the 0 and inf limits; the product is
// its own conjugate.
class FrankParameter {
 public:
  enum class Kind { Min, Product, Lukasiewicz, General };

  // Values with |s-1| < 1e-9 collapse to the product branch, s < 1e-12 to
  // Min and s > 1e12 to Lukasiewicz: the closed formula is singular at s=1
  // and indistinguishable from its limits beyond those thresholds.
  static constexpr double kProductWindow = 1e-9;
  static constexpr double kMinThreshold = 1e-12;
  static constexpr double kLukasiewiczThreshold = 1e12;

  static FrankParameter min_limit() { return FrankParameter(Kind::Min, 0.0); }
  static FrankParameter product() { return FrankParameter(Kind::Product, 1.0); }
  static FrankParameter lukasiewicz() {
    return FrankParameter(Kind::Lukasiewicz,
                          std::numeric_limits<double>::infinity());
  }
  static FrankParameter of(double s);

  // Accepts the CLI spellings "min", "prod", "luk" or a nonnegative decimal.
  static FrankParameter parse(const std::string& spec);

  FrankParameter conjugate() const;

  Kind kind() const { return kind_; }
  double s() const { return s_; }
  std::string to_string() const;

  friend bool operator==(const FrankParameter& a, const FrankParameter& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::General || a.s_ == b.s_);
  }

 private:
  FrankParameter(Kind kind, double s) : kind_(kind), s_(s) {}

  Kind kind_;
  double s_;
};

// Frank t-norm t_s(x,y) = log_s(1 + (s^x-1)(s^y-1)/(s-1)), evaluated through
// expm1/log1p so the result stays accurate arbitrarily close to the s=1
// singularity. Lattice corners (x or y in {0,1}) short-circuit to the exact
// identities t(x,0)=0, t(x,1)=x.
UnitValue tnorm(const FrankParameter& s, UnitValue x, UnitValue y);

// Dual t-conorm, computed as 1 - t(1-x, 1-y).
UnitValue tconorm(const FrankParameter& s, UnitValue x, UnitValue y);

// Conjugate t-norm: the Frank t-norm with parameter 1/s. Satisfies
// x*y = x - t_s(x, 1-y) for the original parameter.
UnitValue conjugate_tnorm(const FrankParameter& s, UnitValue x, UnitValue y);

}  // namespace fp5
