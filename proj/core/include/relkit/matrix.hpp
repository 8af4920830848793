#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relkit/rational.hpp"

namespace relkit::linalg {

// Dense exact rational matrix, row major.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}
  static Mat identity(int n);
  static Mat from_rows(const std::vector<std::vector<Rat>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)]; }
  const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Rat& k) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;

  std::vector<Rat> row(int i) const;
  void set_row(int i, const std::vector<Rat>& r);
  static Mat vstack(const Mat& top, const Mat& bottom);
  static Mat hstack(const Mat& left, const Mat& right);
  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

Mat slice_cols(const Mat& m, int offset, int width);

// Returns the reduced row echelon form; zero rows are kept in place at
// the bottom. rank receives the number of pivot rows when non null.
Mat rref(const Mat& m, int* rank = nullptr);
int rank(const Mat& m);
// Rows span {x | m x^T = 0}.
Mat kernel(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
// One solution x of m x^T = b^T (b a row vector), if any.
std::optional<std::vector<Rat>> solve(const Mat& m, const std::vector<Rat>& b);

}  // namespace relkit::linalg
