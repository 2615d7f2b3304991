#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace twining {

/// Values that can grow without bound (pairings, multiplicities, traces,
/// character coefficients) are GMP integers/rationals. Indices and weight
/// coordinates are bounded by the input and stay machine integers.
using Integer = mpz_class;
using Rational = mpq_class;

using Index = std::size_t;
using Coord = std::int64_t;

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// num/den in canonical form.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(Index rows, Index cols, Coord fill = 0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(Index n) {
    IntMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Coord>>& rows) {
    const Index r = rows.size();
    const Index c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c && j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
  }

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }

  Coord& operator()(Index i, Index j) { return data_[i * cols_ + j]; }
  Coord operator()(Index i, Index j) const { return data_[i * cols_ + j]; }

  std::vector<Coord> column(Index j) const {
    std::vector<Coord> out(rows_);
    for (Index i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  std::vector<std::vector<Coord>> to_rows() const {
    std::vector<std::vector<Coord>> out(rows_, std::vector<Coord>(cols_));
    for (Index i = 0; i < rows_; ++i)
      for (Index j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  std::vector<Coord> apply(const std::vector<Coord>& v) const {
    std::vector<Coord> out(rows_, 0);
    for (Index i = 0; i < rows_; ++i)
      for (Index j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows_, b.cols_);
    for (Index i = 0; i < a.rows_; ++i)
      for (Index k = 0; k < a.cols_; ++k) {
        const Coord x = a(i, k);
        if (x == 0) continue;
        for (Index j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
      }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

  /// "[[2,-1],[-1,2]]"
  std::string str() const {
    std::string s = "[";
    for (Index i = 0; i < rows_; ++i) {
      if (i) s += ",";
      s += "[";
      for (Index j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += std::to_string((*this)(i, j));
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Coord> data_;
};

/// Exact determinant by fraction-free elimination.
inline Integer determinant(const IntMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
  Integer prev = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      Index swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace twining
