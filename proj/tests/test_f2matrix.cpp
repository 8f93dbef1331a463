#include <cstdint>
#include <random>
#include <set>

#include "doctest.h"
#include "pin2fill/f2matrix.hpp"

using namespace pin2fill;

namespace {

F2Matrix random_matrix(std::mt19937& rng, int rows, int cols) {
  F2Matrix m(rows, cols);
  for (int i = 0; i < rows; i++)
    for (int j = 0; j < cols; j++) m.set(i, j, rng() & 1);
  return m;
}

// Apply m to the vector encoded in the low bits of x.
std::uint64_t apply(const F2Matrix& m, std::uint64_t x) {
  std::uint64_t y = 0;
  for (int i = 0; i < m.rows(); i++) {
    int bit = 0;
    for (int j = 0; j < m.cols(); j++)
      if (m.get(i, j) && (x >> j & 1)) bit ^= 1;
    y |= std::uint64_t(bit) << i;
  }
  return y;
}

// Kernel dimension by checking all 2^cols vectors.
int kernel_dim_by_enumeration(const F2Matrix& m) {
  int count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t(1) << m.cols()); x++)
    if (apply(m, x) == 0) count++;
  int k = 0;
  while ((1 << k) < count) k++;
  return k;
}

}  // namespace

TEST_CASE("rank and kernel match exhaustive enumeration") {
  std::mt19937 rng(20260815);
  for (int rows = 0; rows <= 5; rows++)
    for (int cols = 0; cols <= 5; cols++)
      for (int rep = 0; rep < 20; rep++) {
        F2Matrix m = random_matrix(rng, rows, cols);
        int k = kernel_dim_by_enumeration(m);
        CAPTURE(m.to_string());
        CHECK(m.kernel_dim() == k);
        CHECK(m.rank() == m.cols() - k);
      }
}

TEST_CASE("column space membership matches exhaustive enumeration") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 300; rep++) {
    int rows = 1 + int(rng() % 5), cols = int(rng() % 5);
    F2Matrix m = random_matrix(rng, rows, cols);
    std::set<std::uint64_t> reachable;
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << cols); x++) reachable.insert(apply(m, x));
    std::uint64_t t = rng() & ((std::uint64_t(1) << rows) - 1);
    std::vector<bool> v(rows);
    for (int i = 0; i < rows; i++) v[i] = t >> i & 1;
    CAPTURE(m.to_string());
    CHECK(m.column_space_contains(v) == (reachable.count(t) > 0));
  }
}

TEST_CASE("arithmetic identities") {
  std::mt19937 rng(99);
  for (int rep = 0; rep < 50; rep++) {
    F2Matrix a = random_matrix(rng, 4, 3);
    F2Matrix b = random_matrix(rng, 3, 5);
    F2Matrix c = random_matrix(rng, 5, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + a == F2Matrix(4, 3));
    CHECK(F2Matrix::identity(4) * a == a);
    CHECK(a * F2Matrix::identity(3) == a);
  }
  CHECK(F2Matrix::identity(5).rank() == 5);
}

TEST_CASE("frozen small cases") {
  F2Matrix m = F2Matrix::from_rows({{1, 0, 1}, {0, 1, 1}});
  CHECK(m.rank() == 2);
  CHECK(m.kernel_dim() == 1);
  CHECK(m.column_space_contains({true, true}));
  F2Matrix z(3, 2);
  CHECK(z.is_zero());
  CHECK(z.rank() == 0);
  CHECK(z.kernel_dim() == 2);
  CHECK(!z.column_space_contains({true, false, false}));
  CHECK(z.column_space_contains({false, false, false}));
}
