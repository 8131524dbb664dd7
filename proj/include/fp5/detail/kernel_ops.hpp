#pragma once

#include <cmath>

// Element-wise reference operations shared by the scalar batch kernels, the
// single-value library entry points and the SIMD equivalence tests. The AVX2
// backend mirrors each expression per lane, operation for operation, so the
// two backends produce bit-identical results (the project builds with
// -ffp-contract=off to keep that guarantee).

namespace fp5::detail {

inline double positive_part(double a) { return a > 0.0 ? a : 0.0; }

struct LgCoords {
  double tau, phi, kappa, pi, iota;
};

// Lukasiewicz-Goedel closed form of the bipolar -> penta-valued transform:
//   tau   = (x-y)+      phi = (y-x)+
//   kappa = (x+y-1)+    pi  = (1-x-y)+
//   iota  = 1 - |x-y| - |x+y-1|
inline LgCoords lg_decompose(double x, double y) {
  const double d = x - y;
  const double e = (x + y) - 1.0;
  LgCoords c;
  c.tau = positive_part(d);
  c.phi = positive_part(-d);
  c.kappa = positive_part(e);
  c.pi = positive_part(-e);
  c.iota = (1.0 - std::fabs(d)) - std::fabs(e);
  return c;
}

// Inverse transform: x = tau + kappa + iota/2, y = phi + kappa + iota/2.
inline void lg_compose(double tau, double phi, double kappa, double pi,
                       double iota, double& x, double& y) {
  (void)pi;
  const double half_iota = 0.5 * iota;
  x = (tau + kappa) + half_iota;
  y = (phi + kappa) + half_iota;
}

// Ternary forms chosen to match the x86 min/max lane semantics exactly.
inline double min2(double a, double b) { return a < b ? a : b; }
inline double max2(double a, double b) { return a > b ? a : b; }
inline double algebraic_product(double a, double b) { return a * b; }
inline double algebraic_sum(double a, double b) { return (a + b) - a * b; }
inline double bounded_difference(double a, double b) {
  return positive_part((a + b) - 1.0);
}
inline double bounded_sum(double a, double b) {
  const double s = a + b;
  return s < 1.0 ? s : 1.0;
}

}  // namespace fp5::detail
