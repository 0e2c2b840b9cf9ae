#include "qsylv/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qsylv {

namespace {

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimError(std::string(op) + ": shapes " + std::to_string(a.rows()) +
                   "x" + std::to_string(a.cols()) + " and " +
                   std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                   " differ");
  }
}

}  // namespace

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "add");
  QMatrix out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] += b.data()[i];
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "sub");
  QMatrix out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] -= b.data()[i];
  return out;
}

QMatrix operator-(const QMatrix& a) {
  QMatrix out = a;
  for (auto& q : out.data()) q = -q;
  return out;
}

QMatrix operator*(double s, const QMatrix& a) {
  QMatrix out = a;
  for (auto& q : out.data()) q = s * q;
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimError("mul: inner dimensions " + std::to_string(a.cols()) +
                   " and " + std::to_string(b.rows()) + " differ");
  }
  QMatrix out(a.rows(), b.cols());
  for (std::size_t p = 0; p < a.rows(); ++p) {
    for (std::size_t r = 0; r < a.cols(); ++r) {
      const Quaternion& apr = a(p, r);
      for (std::size_t q = 0; q < b.cols(); ++q) {
        out(p, q) += apr * b(r, q);
      }
    }
  }
  return out;
}

QMatrix conj_transpose(const QMatrix& a) {
  QMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c).conj();
  return out;
}

QMatrix eta_conj_transpose(const QMatrix& a, EtaUnit eta) {
  QMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(c, r) = eta_conj(a(r, c), eta);
  return out;
}

double frobenius_norm(const QMatrix& a) {
  double sum = 0.0;
  for (const auto& q : a.data()) sum += q.norm_sq();
  return std::sqrt(sum);
}

QMatrix submatrix(const QMatrix& a, std::size_t r0, std::size_t c0,
                  std::size_t rows, std::size_t cols) {
  if (r0 + rows > a.rows() || c0 + cols > a.cols()) {
    throw DimError("submatrix: window exceeds " + std::to_string(a.rows()) +
                   "x" + std::to_string(a.cols()));
  }
  QMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = a(r0 + r, c0 + c);
  return out;
}

double max_abs_diff(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, (a.data()[i] - b.data()[i]).norm());
  return worst;
}

}  // namespace qsylv
