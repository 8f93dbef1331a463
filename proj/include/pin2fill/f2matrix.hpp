#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pin2fill {

// Dense matrix over the two-element field. One 64-bit word per row; the
// column count is capped at 64, far above any block the model builders
// produce (those stay in single digits). Addition is xor, so M + M == 0.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(int rows, int cols);

  static F2Matrix identity(int n);
  // Row-major literal, entries taken mod 2.
  static F2Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int i, int j) const;
  void set(int i, int j, bool v);

  F2Matrix operator*(const F2Matrix& rhs) const;
  F2Matrix operator+(const F2Matrix& rhs) const;
  bool operator==(const F2Matrix& rhs) const;
  bool operator!=(const F2Matrix& rhs) const { return !(*this == rhs); }

  bool is_zero() const;
  int rank() const;
  int kernel_dim() const { return cols_ - rank(); }

  // True iff v lies in the span of the columns (v indexed by row).
  bool column_space_contains(const std::vector<bool>& v) const;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace pin2fill
