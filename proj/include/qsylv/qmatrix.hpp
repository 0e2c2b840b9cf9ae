#pragma once

#include <cstddef>
#include <vector>

#include "qsylv/errors.hpp"
#include "qsylv/quaternion.hpp"

namespace qsylv {

// Dense row-major quaternion matrix. Zero-dimension matrices (0 x n, m x 0)
// are legal and behave as empty linear maps.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix zero(std::size_t rows, std::size_t cols) {
    return QMatrix(rows, cols);
  }

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion(1.0);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  Quaternion& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Quaternion& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<Quaternion>& data() const { return data_; }
  std::vector<Quaternion>& data() { return data_; }

  bool operator==(const QMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> data_;
};

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a);
QMatrix operator*(double s, const QMatrix& a);

// Matrix product with quaternion factors kept in order:
// (AB)(p,q) = sum_r A(p,r) * B(r,q).
QMatrix operator*(const QMatrix& a, const QMatrix& b);

// A*: conjugate transpose.
QMatrix conj_transpose(const QMatrix& a);

// A^{eta*} = -eta A* eta, computed entrywise; an involution.
QMatrix eta_conj_transpose(const QMatrix& a, EtaUnit eta);

double frobenius_norm(const QMatrix& a);

// max_ij |a_ij - b_ij| (quaternion norm per entry); shapes must match.
double max_abs_diff(const QMatrix& a, const QMatrix& b);

// Copy of the rows x cols window anchored at (r0, c0); must lie inside a.
QMatrix submatrix(const QMatrix& a, std::size_t r0, std::size_t c0,
                  std::size_t rows, std::size_t cols);

}  // namespace qsylv
