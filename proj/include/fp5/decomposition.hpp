#pragma once

#include "fp5/frank.hpp"
#include "fp5/unit_value.hpp"

namespace fp5 {

// Bipolar information: independent membership x and non-membership y.
// No joint constraint; (1,1) and (0,0) are both valid.
struct BipolarPair {
  UnitValue membership;      // x
  UnitValue non_membership;  // y
};

// The five descriptors of a bipolar pair: truth, falsity, contradiction,
// undefinedness, indeterminacy. Always a partition of unity.
class PentaCoords {
 public:
  static constexpr double kPartitionTolerance = 1e-9;

  // Validates that every coordinate is in [0,1] and the five sum to 1
  // within kPartitionTolerance.
  PentaCoords(UnitValue tau, UnitValue phi, UnitValue kappa, UnitValue pi,
              UnitValue iota);

  UnitValue tau() const { return tau_; }
  UnitValue phi() const { return phi_; }
  UnitValue kappa() const { return kappa_; }
  UnitValue pi() const { return pi_; }
  UnitValue iota() const { return iota_; }

 private:
  UnitValue tau_, phi_, kappa_, pi_, iota_;
};

// Penta-valued decomposition of a bipolar pair under the Frank family with
// parameter s:
//   tau   = x * (1-y)            phi = (1-x) * y
//   pi    = ((1-x)o(1-y)) * ((1-x)(+)(1-y))
//   kappa = (x o y) * (x (+) y)
// with o the t-norm, (+) its dual and * the conjugate t-norm. Indeterminacy
// is materialized as the residual 1 - tau - phi - kappa - pi, which the
// direct formula 2*((1-x) o (1-y) o x o y) matches to within the partition
// tolerance.
PentaCoords decompose(const BipolarPair& pair, const FrankParameter& s);

// Closed form of decompose at s=0 (Lukasiewicz-Goedel couple):
//   tau = (x-y)+, phi = (y-x)+, kappa = (x+y-1)+, pi = (1-x-y)+,
//   iota = 1 - |x-y| - |x+y-1|.
PentaCoords decompose_lg(const BipolarPair& pair);

// Inverse transform: x = tau + kappa + iota/2, y = phi + kappa + iota/2.
BipolarPair compose(const PentaCoords& coords);

}  // namespace fp5
