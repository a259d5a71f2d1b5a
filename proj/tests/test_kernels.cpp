#include "doctest.h"

#include <random>
#include <vector>

#include "proprep/kernels.hpp"

using namespace proprep::kernels;

namespace {

void check_equal(const Table& a, const Table& b, std::mt19937_64& rng) {
  for (std::size_t n : {0, 1, 3, 4, 5, 7, 8, 9, 16, 31, 64, 100, 257}) {
    std::uniform_int_distribution<Value> d(0, n % 2 ? 5 : (Value{1} << 40));
    std::vector<Value> x(n), y(n);
    for (auto& v : x) v = d(rng);
    for (auto& v : y) v = d(rng);
    CHECK(a.sum(x.data(), n) == b.sum(x.data(), n));
    CHECK(a.max(x.data(), n) == b.max(x.data(), n));
    CHECK(a.sum_pos_diff(x.data(), y.data(), n) == b.sum_pos_diff(x.data(), y.data(), n));
    Value t = n ? x[n / 2] : 0;
    CHECK(a.count_le(x.data(), n, t) == b.count_le(x.data(), n, t));
    std::vector<Value> p = x, q = x;
    a.min_into(p.data(), y.data(), n);
    b.min_into(q.data(), y.data(), n);
    CHECK(p == q);
    std::vector<Value> tp(n), tq(n);
    a.threshold(x.data(), tp.data(), n, t);
    b.threshold(x.data(), tq.data(), n, t);
    CHECK(tp == tq);
  }
}

}  // namespace

TEST_CASE("scalar kernels") {
  const Table& s = scalar();
  std::vector<Value> x{3, 1, 4, 1, 5}, y{2, 2, 2, 2, 9};
  CHECK(s.sum(x.data(), 5) == 14);
  CHECK(s.max(x.data(), 5) == 5);
  CHECK(s.max(x.data(), 0) == 0);
  CHECK(s.sum_pos_diff(x.data(), y.data(), 5) == 1 + 2);
  CHECK(s.count_le(x.data(), 5, 3) == 3);
  s.min_into(x.data(), y.data(), 5);
  CHECK(x == std::vector<Value>{2, 1, 2, 1, 5});
  std::vector<Value> out(5);
  s.threshold(y.data(), out.data(), 5, 2);
  CHECK(out == std::vector<Value>{0, 0, 0, 0, 1});
}

TEST_CASE("avx2 kernels agree with scalar") {
  const Table* v = avx2();
  if (!v) {
    MESSAGE("AVX2 unavailable; only scalar kernels exercised");
    return;
  }
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 20; ++rep) check_equal(scalar(), *v, rng);
}

TEST_CASE("active table honours the override") {
  CHECK(active().name != nullptr);
}
