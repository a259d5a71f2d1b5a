// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>

#include "proprep/kernels.hpp"

namespace proprep::kernels {

namespace {

Value hsum(__m256i v) {
  alignas(32) Value lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

Value sum_avx2(const Value* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_epi64(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
  Value s = hsum(acc);
  for (; i < n; ++i) s += a[i];
  return s;
}

Value max_avx2(const Value* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = _mm256_blendv_epi8(acc, x, _mm256_cmpgt_epi64(x, acc));
  }
  alignas(32) Value lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  Value m = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; i < n; ++i) m = std::max(m, a[i]);
  return m;
}

void min_into_avx2(Value* acc, const Value* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i r = _mm256_blendv_epi8(x, y, _mm256_cmpgt_epi64(x, y));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), r);
  }
  for (; i < n; ++i) acc[i] = std::min(acc[i], b[i]);
}

Value sum_pos_diff_avx2(const Value* a, const Value* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i d = _mm256_sub_epi64(x, y);
    acc = _mm256_add_epi64(acc, _mm256_and_si256(d, _mm256_cmpgt_epi64(x, y)));
  }
  Value s = hsum(acc);
  for (; i < n; ++i) s += a[i] > b[i] ? a[i] - b[i] : 0;
  return s;
}

std::size_t count_le_avx2(const Value* a, std::size_t n, Value t) {
  const __m256i tv = _mm256_set1_epi64x(t);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    // lanes with x > t are -1; count the complement afterwards
    acc = _mm256_sub_epi64(acc, _mm256_cmpgt_epi64(x, tv));
  }
  std::size_t c = i - static_cast<std::size_t>(hsum(acc));
  for (; i < n; ++i) c += a[i] <= t;
  return c;
}

void threshold_avx2(const Value* a, Value* out, std::size_t n, Value t) {
  const __m256i tv = _mm256_set1_epi64x(t);
  const __m256i one = _mm256_set1_epi64x(1);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i r = _mm256_and_si256(_mm256_cmpgt_epi64(x, tv), one);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
  }
  for (; i < n; ++i) out[i] = a[i] <= t ? 0 : 1;
}

const Table kAvx2{"avx2",           sum_avx2,      max_avx2,      min_into_avx2,
                  sum_pos_diff_avx2, count_le_avx2, threshold_avx2};

}  // namespace

const Table& avx2_table() { return kAvx2; }

}  // namespace proprep::kernels
