#include "coxradar/kernels.hpp"

#include <cmath>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define COXRADAR_X86 1
#endif

namespace coxradar::kernels {

size_t mutual_mask_scalar(const double* px, const double* py, size_t n, const MutualArgs& args,
                          uint8_t* out) {
  const double cw2 = args.cos_omega * args.cos_omega;
  size_t hits = 0;
  for (size_t i = 0; i < n; ++i) {
    const double x = px[i];
    const double y = py[i];
    const double r2 = x * x + y * y;
    const double de = x * args.ebx + y * args.eby;
    const double dv = x * args.tx + y * args.ty;
    const bool ok = (r2 > 0.0) & (r2 <= args.range2) & (de > 0.0) & (de * de > cw2 * r2) &
                    (dv * dv > cw2 * r2);
    out[i] = ok ? 1 : 0;
    hits += ok;
  }
  return hits;
}

double pow_sum_scalar(const double* w2, const double* h, size_t n, int e) {
  double acc = 0.0;
  if (e == 1) {
    for (size_t i = 0; i < n; ++i) acc += h[i] / w2[i];
  } else {
    for (size_t i = 0; i < n; ++i) acc += h[i] / (w2[i] * w2[i]);
  }
  return acc;
}

double pow_sum_generic(const double* w2, const double* h, size_t n, double exponent) {
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) acc += h[i] * std::pow(w2[i], -exponent);
  return acc;
}

#if COXRADAR_X86

__attribute__((target("avx2"))) static size_t mutual_mask_avx2(const double* px,
                                                               const double* py, size_t n,
                                                               const MutualArgs& args,
                                                               uint8_t* out) {
  const double cw2s = args.cos_omega * args.cos_omega;
  const __m256d cw2 = _mm256_set1_pd(cw2s);
  const __m256d range2 = _mm256_set1_pd(args.range2);
  const __m256d ebx = _mm256_set1_pd(args.ebx);
  const __m256d eby = _mm256_set1_pd(args.eby);
  const __m256d tx = _mm256_set1_pd(args.tx);
  const __m256d ty = _mm256_set1_pd(args.ty);
  const __m256d zero = _mm256_setzero_pd();
  size_t hits = 0;
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(px + i);
    const __m256d y = _mm256_loadu_pd(py + i);
    const __m256d r2 = _mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y));
    const __m256d de = _mm256_add_pd(_mm256_mul_pd(x, ebx), _mm256_mul_pd(y, eby));
    const __m256d dv = _mm256_add_pd(_mm256_mul_pd(x, tx), _mm256_mul_pd(y, ty));
    const __m256d lim = _mm256_mul_pd(cw2, r2);
    __m256d ok = _mm256_cmp_pd(r2, zero, _CMP_GT_OQ);
    ok = _mm256_and_pd(ok, _mm256_cmp_pd(r2, range2, _CMP_LE_OQ));
    ok = _mm256_and_pd(ok, _mm256_cmp_pd(de, zero, _CMP_GT_OQ));
    ok = _mm256_and_pd(ok, _mm256_cmp_pd(_mm256_mul_pd(de, de), lim, _CMP_GT_OQ));
    ok = _mm256_and_pd(ok, _mm256_cmp_pd(_mm256_mul_pd(dv, dv), lim, _CMP_GT_OQ));
    const int mask = _mm256_movemask_pd(ok);
    out[i + 0] = (mask >> 0) & 1;
    out[i + 1] = (mask >> 1) & 1;
    out[i + 2] = (mask >> 2) & 1;
    out[i + 3] = (mask >> 3) & 1;
    hits += static_cast<size_t>(__builtin_popcount(mask & 0xf));
  }
  if (i < n) hits += mutual_mask_scalar(px + i, py + i, n - i, args, out + i);
  return hits;
}

__attribute__((target("avx2"))) static double pow_sum_avx2(const double* w2, const double* h,
                                                           size_t n, int e) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d w = _mm256_loadu_pd(w2 + i);
    const __m256d hv = _mm256_loadu_pd(h + i);
    const __m256d den = (e == 1) ? w : _mm256_mul_pd(w, w);
    acc = _mm256_add_pd(acc, _mm256_div_pd(hv, den));
  }
  double lanes[4];
  _mm256_storeu_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  if (i < n) total += pow_sum_scalar(w2 + i, h + i, n - i, e);
  return total;
}

#endif  // COXRADAR_X86

namespace {

MutualMaskFn pick_mutual_mask() {
#if COXRADAR_X86
  if (__builtin_cpu_supports("avx2")) return mutual_mask_avx2;
#endif
  return mutual_mask_scalar;
}

PowSumFn pick_pow_sum() {
#if COXRADAR_X86
  if (__builtin_cpu_supports("avx2")) return pow_sum_avx2;
#endif
  return pow_sum_scalar;
}

}  // namespace

const MutualMaskFn mutual_mask = pick_mutual_mask();
const PowSumFn pow_sum = pick_pow_sum();

const char* active_isa() {
#if COXRADAR_X86
  if (__builtin_cpu_supports("avx2")) return "avx2";
#endif
  return "scalar";
}

}  // namespace coxradar::kernels
