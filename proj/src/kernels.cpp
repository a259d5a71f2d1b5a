#include "proprep/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace proprep::kernels {

#if defined(PROPREP_HAVE_AVX2)
const Table& avx2_table();
#endif

namespace {

Value sum_scalar(const Value* a, std::size_t n) {
  Value s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i];
  return s;
}

Value max_scalar(const Value* a, std::size_t n) {
  Value m = 0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, a[i]);
  return m;
}

void min_into_scalar(Value* acc, const Value* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = std::min(acc[i], b[i]);
}

Value sum_pos_diff_scalar(const Value* a, const Value* b, std::size_t n) {
  Value s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] > b[i] ? a[i] - b[i] : 0;
  return s;
}

std::size_t count_le_scalar(const Value* a, std::size_t n, Value t) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += a[i] <= t;
  return c;
}

void threshold_scalar(const Value* a, Value* out, std::size_t n, Value t) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] <= t ? 0 : 1;
}

const Table kScalar{"scalar",      sum_scalar,      max_scalar,       min_into_scalar,
                    sum_pos_diff_scalar, count_le_scalar, threshold_scalar};

const Table& pick() {
  const char* env = std::getenv("PROPREP_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return kScalar;
  if (const Table* t = avx2()) return *t;
  return kScalar;
}

}  // namespace

const Table& scalar() { return kScalar; }

const Table* avx2() {
#if defined(PROPREP_HAVE_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const Table& active() {
  static const Table& t = pick();
  return t;
}

}  // namespace proprep::kernels
