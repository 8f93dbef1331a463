#include "pin2fill/f2matrix.hpp"

#include "pin2fill/errors.hpp"

namespace pin2fill {

namespace {

// Row echelon rank of a list of row bitmasks, destructive.
int echelon_rank(std::vector<std::uint64_t>& rows, int cols) {
  int rank = 0;
  for (int c = 0; c < cols; c++) {
    std::uint64_t mask = std::uint64_t{1} << c;
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); r++) {
      if (rows[r] & mask) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); r++) {
      if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
    }
    rank++;
  }
  return rank;
}

}  // namespace

F2Matrix::F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), bits_(rows, 0) {
  if (rows < 0 || cols < 0 || cols > 64)
    throw StructuralError("F2Matrix: dimensions out of range");
}

F2Matrix F2Matrix::identity(int n) {
  F2Matrix m(n, n);
  for (int i = 0; i < n; i++) m.set(i, i, true);
  return m;
}

F2Matrix F2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  F2Matrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      throw StructuralError("F2Matrix::from_rows: ragged rows");
    int j = 0;
    for (int v : row) m.set(i, j++, (v & 1) != 0);
    i++;
  }
  return m;
}

bool F2Matrix::get(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw StructuralError("F2Matrix::get: index out of range");
  return (bits_[i] >> j) & 1;
}

void F2Matrix::set(int i, int j, bool v) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw StructuralError("F2Matrix::set: index out of range");
  if (v)
    bits_[i] |= std::uint64_t{1} << j;
  else
    bits_[i] &= ~(std::uint64_t{1} << j);
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw StructuralError("F2Matrix: product shape mismatch");
  F2Matrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; i++) {
    std::uint64_t acc = 0;
    std::uint64_t row = bits_[i];
    for (int k = 0; k < cols_; k++) {
      if ((row >> k) & 1) acc ^= rhs.bits_[k];
    }
    out.bits_[i] = acc;
  }
  return out;
}

F2Matrix F2Matrix::operator+(const F2Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw StructuralError("F2Matrix: sum shape mismatch");
  F2Matrix out(rows_, cols_);
  for (int i = 0; i < rows_; i++) out.bits_[i] = bits_[i] ^ rhs.bits_[i];
  return out;
}

bool F2Matrix::operator==(const F2Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && bits_ == rhs.bits_;
}

bool F2Matrix::is_zero() const {
  for (auto w : bits_)
    if (w) return false;
  return true;
}

int F2Matrix::rank() const {
  std::vector<std::uint64_t> rows = bits_;
  return echelon_rank(rows, cols_);
}

bool F2Matrix::column_space_contains(const std::vector<bool>& v) const {
  if (static_cast<int>(v.size()) != rows_)
    throw StructuralError("F2Matrix::column_space_contains: vector length mismatch");
  if (cols_ + 1 > 64) throw StructuralError("F2Matrix::column_space_contains: too wide");
  std::vector<std::uint64_t> rows = bits_;
  int base = echelon_rank(rows, cols_);
  rows = bits_;
  for (int i = 0; i < rows_; i++) {
    if (v[i]) rows[i] |= std::uint64_t{1} << cols_;
  }
  int aug = echelon_rank(rows, cols_ + 1);
  return aug == base;
}

std::string F2Matrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; i++) {
    s += i == 0 ? "[" : " ";
    for (int j = 0; j < cols_; j++) s += get(i, j) ? '1' : '0';
    s += i + 1 == rows_ ? "]" : "\n";
  }
  if (rows_ == 0) s = "[]";
  return s;
}

}  // namespace pin2fill
