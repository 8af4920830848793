#include "relkit/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace relkit::linalg {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return Mat(0, 0);
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols())
      throw std::invalid_argument("ragged rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Mat out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += v * o.at(k, j);
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Mat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Mat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

Mat Mat::scaled(const Rat& k) const {
  Mat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * k;
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Mat::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

std::vector<Rat> Mat::row(int i) const {
  std::vector<Rat> out(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(j)] = at(i, j);
  return out;
}

void Mat::set_row(int i, const std::vector<Rat>& r) {
  if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("row length mismatch");
  for (int j = 0; j < cols_; ++j) at(i, j) = r[static_cast<std::size_t>(j)];
}

Mat Mat::vstack(const Mat& top, const Mat& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack width mismatch");
  Mat out(top.rows() + bottom.rows(), top.cols());
  for (int i = 0; i < top.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) out.at(i, j) = top.at(i, j);
  for (int i = 0; i < bottom.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) out.at(top.rows() + i, j) = bottom.at(i, j);
  return out;
}

Mat Mat::hstack(const Mat& left, const Mat& right) {
  if (left.rows() != right.rows()) throw std::invalid_argument("hstack height mismatch");
  Mat out(left.rows(), left.cols() + right.cols());
  for (int i = 0; i < left.rows(); ++i) {
    for (int j = 0; j < left.cols(); ++j) out.at(i, j) = left.at(i, j);
    for (int j = 0; j < right.cols(); ++j) out.at(i, left.cols() + j) = right.at(i, j);
  }
  return out;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << format_rat(at(i, j));
  }
  os << "]";
  return os.str();
}

Mat slice_cols(const Mat& m, int offset, int width) {
  if (offset < 0 || width < 0 || offset + width > m.cols())
    throw std::invalid_argument("slice_cols out of range");
  Mat out(m.rows(), width);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < width; ++j) out.at(i, j) = m.at(i, offset + j);
  return out;
}

Mat rref(const Mat& m, int* rank_out) {
  Mat r = m;
  int lead = 0;
  int rk = 0;
  for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
    int pivot = -1;
    for (int i = lead; i < r.rows(); ++i)
      if (r.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < r.cols(); ++j) std::swap(r.at(pivot, j), r.at(lead, j));
    Rat inv = Rat(1) / r.at(lead, col);
    for (int j = 0; j < r.cols(); ++j) r.at(lead, j) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == lead || r.at(i, col) == 0) continue;
      Rat f = r.at(i, col);
      for (int j = 0; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
    }
    ++lead;
    ++rk;
  }
  if (rank_out) *rank_out = rk;
  return r;
}

int rank(const Mat& m) {
  int rk = 0;
  rref(m, &rk);
  return rk;
}

Mat kernel(const Mat& m) {
  int rk = 0;
  Mat r = rref(m, &rk);
  std::vector<int> pivot_col(static_cast<std::size_t>(rk));
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
  for (int i = 0, col = 0; i < rk; ++i) {
    while (col < r.cols() && r.at(i, col) == 0) ++col;
    pivot_col[static_cast<std::size_t>(i)] = col;
    is_pivot[static_cast<std::size_t>(col)] = 1;
  }
  Mat out(m.cols() - rk, m.cols());
  int row = 0;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    out.at(row, j) = 1;
    for (int i = 0; i < rk; ++i) out.at(row, pivot_col[static_cast<std::size_t>(i)]) = -r.at(i, j);
    ++row;
  }
  return out;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Mat aug = Mat::hstack(m, Mat::identity(m.rows()));
  int rk = 0;
  Mat r = rref(aug, &rk);
  for (int i = 0; i < m.rows(); ++i)
    if (r.at(i, i) != 1) return std::nullopt;
  Mat out(m.rows(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j) out.at(i, j) = r.at(i, m.cols() + j);
  return out;
}

std::optional<std::vector<Rat>> solve(const Mat& m, const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve shape mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[static_cast<std::size_t>(i)];
  }
  Mat r = rref(aug);
  std::vector<Rat> x(static_cast<std::size_t>(m.cols()), Rat(0));
  for (int i = 0; i < m.rows(); ++i) {
    int lead = -1;
    for (int j = 0; j <= m.cols(); ++j)
      if (r.at(i, j) != 0) {
        lead = j;
        break;
      }
    if (lead == m.cols()) return std::nullopt;  // 0 = nonzero
    if (lead >= 0) x[static_cast<std::size_t>(lead)] = r.at(i, m.cols());
  }
  return x;
}

}  // namespace relkit::linalg
