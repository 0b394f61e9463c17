#pragma once

#include <cstddef>
#include <cstdint>

namespace coxradar::kernels {

/// Batch mutual-interference test for radar positions on one street.
/// Points are ego-relative; the street's tangent is constant per batch.
struct MutualArgs {
  double tx = 0.0, ty = 0.0;    // line tangent, unit
  double ebx = 0.0, eby = 1.0;  // ego boresight, unit
  double cos_omega = 0.0;
  double range2 = 0.0;  // R_k^2
};

/// out[i] = 1 iff point i is strictly inside the ego cone, within range, and
/// the ego is strictly inside the cone of a radar there facing either way
/// along the street. Squared comparisons throughout; no sqrt. Returns the hit
/// count.
using MutualMaskFn = size_t (*)(const double* px, const double* py, size_t n,
                                const MutualArgs& args, uint8_t* out);

/// sum of h[i] / w2[i]^e over all i (e = alpha/2 for one-way paths, alpha for
/// two-way). e must be 1 or 2; use pow_sum_generic otherwise.
using PowSumFn = double (*)(const double* w2, const double* h, size_t n, int e);

size_t mutual_mask_scalar(const double* px, const double* py, size_t n, const MutualArgs& args,
                          uint8_t* out);
double pow_sum_scalar(const double* w2, const double* h, size_t n, int e);
double pow_sum_generic(const double* w2, const double* h, size_t n, double exponent);

/// Runtime-dispatched entry points (AVX2 when the CPU has it).
extern const MutualMaskFn mutual_mask;
extern const PowSumFn pow_sum;

const char* active_isa();

}  // namespace coxradar::kernels
