// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <array>
#include <cmath>

#include "h1flow/simd/kernels.hpp"

namespace h1flow::simd::avx2 {

namespace {

// exp(x) for x <= 0. Cody-Waite reduction to |r| <= ln2/2, then a degree-12
// Taylor polynomial (truncation error below 2e-16 relative).
inline __m256d exp_nonpositive(__m256d x) {
  const __m256d lower = _mm256_set1_pd(-708.0);
  const __m256d underflow = _mm256_cmp_pd(x, lower, _CMP_LT_OQ);
  x = _mm256_max_pd(x, lower);

  const __m256d log2e = _mm256_set1_pd(1.4426950408889634);
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, ln2_hi, x);
  r = _mm256_fnmadd_pd(k, ln2_lo, r);

  static constexpr std::array<double, 13> kInvFactorial = {
      1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0, 1.0 / 362880.0,
      1.0 / 40320.0,     1.0 / 5040.0,     1.0 / 720.0,     1.0 / 120.0,
      1.0 / 24.0,        1.0 / 6.0,        0.5,             1.0,
      1.0};
  __m256d p = _mm256_set1_pd(kInvFactorial[0]);
  for (std::size_t c = 1; c < kInvFactorial.size(); ++c) {
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kInvFactorial[c]));
  }

  // 2^k via the exponent field. k lies in [-1022, 0] here.
  const __m256d magic = _mm256_set1_pd(6755399441055744.0);  // 2^52 + 2^51
  const __m256i ki = _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(k, magic)),
                                      _mm256_castpd_si256(magic));
  const __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(ki, _mm256_set1_epi64x(1023)), 52);
  const __m256d result = _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
  return _mm256_blendv_pd(result, _mm256_setzero_pd(), underflow);
}

inline __m256d greens4(__m256d s, __m256d si, __m256d len, __m256d neg_scale) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  const __m256d d = _mm256_andnot_pd(sign, _mm256_sub_pd(si, s));
  const __m256d e1 = exp_nonpositive(_mm256_sub_pd(d, len));
  const __m256d e2 = exp_nonpositive(_mm256_xor_pd(d, sign));
  return _mm256_mul_pd(_mm256_add_pd(e1, e2), neg_scale);
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

void greens_row(double length, double scale, double s_i, std::span<const double> s,
                std::span<double> out) {
  const __m256d si = _mm256_set1_pd(s_i);
  const __m256d len = _mm256_set1_pd(length);
  const __m256d neg_scale = _mm256_set1_pd(-scale);
  const std::size_t m = s.size();
  std::size_t j = 0;
  for (; j + 4 <= m; j += 4) {
    _mm256_storeu_pd(out.data() + j, greens4(_mm256_loadu_pd(s.data() + j), si, len, neg_scale));
  }
  if (j < m) {
    // The tail goes through the same vector path so every entry shares one exp.
    alignas(32) std::array<double, 4> buf{s_i, s_i, s_i, s_i};
    for (std::size_t k = 0; j + k < m; ++k) buf[k] = s[j + k];
    alignas(32) std::array<double, 4> res{};
    _mm256_store_pd(res.data(), greens4(_mm256_load_pd(buf.data()), si, len, neg_scale));
    for (std::size_t k = 0; j + k < m; ++k) out[j + k] = res[k];
  }
}

void kernel_apply(std::span<const double> g, std::size_t n, std::span<const double> wx,
                  std::span<const double> wy, std::span<double> out_x,
                  std::span<double> out_y) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = g.data() + i * n;
    __m256d ax = _mm256_setzero_pd();
    __m256d ay = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      const __m256d gv = _mm256_loadu_pd(row + j);
      ax = _mm256_fmadd_pd(gv, _mm256_loadu_pd(wx.data() + j), ax);
      ay = _mm256_fmadd_pd(gv, _mm256_loadu_pd(wy.data() + j), ay);
    }
    double sx = hsum(ax);
    double sy = hsum(ay);
    for (; j < n; ++j) {
      sx += row[j] * wx[j];
      sy += row[j] * wy[j];
    }
    out_x[i] = sx;
    out_y[i] = sy;
  }
}

}  // namespace h1flow::simd::avx2
