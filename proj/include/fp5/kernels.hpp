#pragma once

#include <cstddef>

namespace fp5::kernels {

enum class Backend { Scalar, Avx2 };

const char* backend_name(Backend b);

// Batch kernels over contiguous arrays, all of length n. Output arrays may
// not alias the inputs. The scalar backend is the reference; vector backends
// must produce identical results, which test_kernels asserts bit-for-bit.
struct Kernels {
  // Lukasiewicz-Goedel decomposition of (mu, nu) rows into the five
  // descriptors.
  void (*decompose_lg)(const double* mu, const double* nu, std::size_t n,
                       double* tau, double* phi, double* kappa, double* pi,
                       double* iota);

  // Inverse transform; pi is part of the record but does not enter the
  // formula.
  void (*compose)(const double* tau, const double* phi, const double* kappa,
                  const double* pi, const double* iota, std::size_t n,
                  double* mu, double* nu);

  // Dual couple primitives used by the element-wise set operations.
  void (*elementwise_min)(const double* a, const double* b, std::size_t n,
                          double* out);
  void (*elementwise_max)(const double* a, const double* b, std::size_t n,
                          double* out);
  void (*algebraic_product)(const double* a, const double* b, std::size_t n,
                            double* out);
  void (*algebraic_sum)(const double* a, const double* b, std::size_t n,
                        double* out);
  void (*bounded_difference)(const double* a, const double* b, std::size_t n,
                             double* out);
  void (*bounded_sum)(const double* a, const double* b, std::size_t n,
                      double* out);
};

// Kernels for an explicit backend. Requesting Avx2 on a machine without it
// returns the scalar set.
const Kernels& backend(Backend b);

// Backend selected at startup: AVX2 when compiled in and supported by the
// CPU, unless FP5_BACKEND=scalar overrides.
Backend active_backend();
const Kernels& active();

bool avx2_available();

}  // namespace fp5::kernels
