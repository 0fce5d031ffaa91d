#include <immintrin.h>

#include "wright_stein/kernels.hpp"

// Built with -mavx2 (no FMA); the operation order mirrors stein_scalar.cpp
// term by term so both variants round identically.

namespace wright_stein::kernels::detail {

void stein_operator_avx2(const UniformTable& t, const double* s, std::size_t count,
                         double* out) {
  const __m256d x0 = _mm256_set1_pd(t.x0);
  const __m256d step = _mm256_set1_pd(t.step);
  const __m256d last_cell = _mm256_set1_pd(static_cast<double>(t.n - 2));
  const __m256d last_start = _mm256_set1_pd(static_cast<double>(t.n - 4));
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d three = _mm256_set1_pd(3.0);
  const __m256d six = _mm256_set1_pd(6.0);
  const __m256d sign = _mm256_set1_pd(-0.0);

  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    const __m256d sv = _mm256_loadu_pd(s + k);
    const __m256d u = _mm256_div_pd(_mm256_sub_pd(sv, x0), step);
    const __m256d fi = _mm256_max_pd(_mm256_min_pd(_mm256_floor_pd(u), last_cell), zero);
    const __m128i i = _mm256_cvttpd_epi32(fi);
    const __m256d w = _mm256_sub_pd(u, fi);

    const __m256d w2 = _mm256_mul_pd(w, w);
    const __m256d w3 = _mm256_mul_pd(w2, w);
    const __m256d h00 = _mm256_add_pd(
        _mm256_sub_pd(_mm256_mul_pd(two, w3), _mm256_mul_pd(three, w2)), one);
    const __m256d h10 = _mm256_add_pd(_mm256_sub_pd(w3, _mm256_mul_pd(two, w2)), w);
    const __m256d h01 = _mm256_add_pd(_mm256_mul_pd(_mm256_set1_pd(-2.0), w3),
                                      _mm256_mul_pd(three, w2));
    const __m256d h11 = _mm256_sub_pd(w3, w2);

    const __m256d f_i = _mm256_i32gather_pd(t.f, i, 8);
    const __m256d f_i1 = _mm256_i32gather_pd(t.f + 1, i, 8);
    const __m256d fp_i = _mm256_i32gather_pd(t.f_prime, i, 8);
    const __m256d fp_i1 = _mm256_i32gather_pd(t.f_prime + 1, i, 8);
    __m256d f = _mm256_mul_pd(h00, f_i);
    f = _mm256_add_pd(f, _mm256_mul_pd(_mm256_mul_pd(h10, step), fp_i));
    f = _mm256_add_pd(f, _mm256_mul_pd(h01, f_i1));
    f = _mm256_add_pd(f, _mm256_mul_pd(_mm256_mul_pd(h11, step), fp_i1));

    const __m256d fj =
        _mm256_max_pd(_mm256_min_pd(_mm256_sub_pd(fi, one), last_start), zero);
    const __m128i j = _mm256_cvttpd_epi32(fj);
    const __m256d v = _mm256_sub_pd(u, fj);
    const __m256d v1 = _mm256_sub_pd(v, one);
    const __m256d v2 = _mm256_sub_pd(v, two);
    const __m256d v3 = _mm256_sub_pd(v, three);
    const __m256d l0 =
        _mm256_div_pd(_mm256_xor_pd(_mm256_mul_pd(_mm256_mul_pd(v1, v2), v3), sign), six);
    const __m256d l1 = _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(v, v2), v3), two);
    const __m256d l2 =
        _mm256_div_pd(_mm256_xor_pd(_mm256_mul_pd(_mm256_mul_pd(v, v1), v3), sign), two);
    const __m256d l3 = _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(v, v1), v2), six);
    const double* d = t.f_double_prime;
    __m256d f2 = _mm256_mul_pd(l0, _mm256_i32gather_pd(d, j, 8));
    f2 = _mm256_add_pd(f2, _mm256_mul_pd(l1, _mm256_i32gather_pd(d + 1, j, 8)));
    f2 = _mm256_add_pd(f2, _mm256_mul_pd(l2, _mm256_i32gather_pd(d + 2, j, 8)));
    f2 = _mm256_add_pd(f2, _mm256_mul_pd(l3, _mm256_i32gather_pd(d + 3, j, 8)));

    const __m256d r = _mm256_sub_pd(f2, _mm256_div_pd(_mm256_mul_pd(sv, f), three));
    _mm256_storeu_pd(out + k, r);
  }
  stein_operator_scalar(t, s + k, count - k, out + k);
}

}  // namespace wright_stein::kernels::detail
