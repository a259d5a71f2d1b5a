#pragma once

#include <cstddef>
#include <cstdint>

namespace proprep::kernels {

using Value = std::int64_t;

// Inner loops over nonnegative int64 columns. Every entry has a scalar reference version
// and, on x86-64, an AVX2 version picked at startup.
struct Table {
  const char* name;
  Value (*sum)(const Value* a, std::size_t n);
  Value (*max)(const Value* a, std::size_t n);
  // acc[i] = min(acc[i], b[i])
  void (*min_into)(Value* acc, const Value* b, std::size_t n);
  // sum of max(0, a[i] - b[i])
  Value (*sum_pos_diff)(const Value* a, const Value* b, std::size_t n);
  std::size_t (*count_le)(const Value* a, std::size_t n, Value t);
  // out[i] = a[i] <= t ? 0 : 1
  void (*threshold)(const Value* a, Value* out, std::size_t n, Value t);
};

const Table& scalar();
// nullptr when the CPU or build lacks AVX2.
const Table* avx2();
// AVX2 when available unless PROPREP_SIMD=scalar is set.
const Table& active();

}  // namespace proprep::kernels
