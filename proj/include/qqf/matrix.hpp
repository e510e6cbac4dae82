#ifndef QQF_MATRIX_HPP
#define QQF_MATRIX_HPP

#include "scalar.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

namespace qqf {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n)
  {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows)
  {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols)
  {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const
  {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Vec row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

  bool is_zero() const
  {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  Matrix transpose() const
  {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec apply(const Vec& v) const
  {
    assert(v.size() == cols_);
    Vec out(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (qqf::is_zero(v[j])) continue;
      for (std::size_t i = 0; i < rows_; ++i)
        if (!qqf::is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b)
  {
    assert(a.cols_ == b.rows_);
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (qqf::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!qqf::is_zero(b(k, j))) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b)
  {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!qqf::is_zero(b.data_[k])) a.data_[k] += b.data_[k];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b)
  {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!qqf::is_zero(b.data_[k])) a.data_[k] -= b.data_[k];
    return a;
  }

  friend Matrix operator*(const Scalar& s, Matrix a)
  {
    for (auto& x : a.data_)
      if (!qqf::is_zero(x)) x *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b)
  {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline Vec operator+(Vec a, const Vec& b)
{
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!qqf::is_zero(b[i])) a[i] += b[i];
  return a;
}

inline Vec operator-(Vec a, const Vec& b)
{
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!qqf::is_zero(b[i])) a[i] -= b[i];
  return a;
}

inline Vec operator*(const Scalar& s, Vec a)
{
  for (auto& x : a)
    if (!qqf::is_zero(x)) x *= s;
  return a;
}

inline Scalar dot(const Vec& a, const Vec& b)
{
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!qqf::is_zero(a[i]) && !qqf::is_zero(b[i])) s += a[i] * b[i];
  return s;
}

struct RowEchelon {
  Matrix reduced;                    ///< rank rows only
  std::vector<std::size_t> pivots;   ///< pivot column of each row
};

/// Reduced row echelon form; pivots are the first nonzero column of each row.
inline RowEchelon rref(Matrix m)
{
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && qqf::is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || qqf::is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!qqf::is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return {out, pivots};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Basis of {x : m x = 0}; one vector per free column, that column set to 1.
inline std::vector<Vec> kernel(const Matrix& m)
{
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of a x = b, or nullopt when inconsistent.
inline std::optional<Vec> solve(const Matrix& a, const Vec& b)
{
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon e = rref(aug);
  Vec x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& a)
{
  const std::size_t n = a.rows();
  if (n != a.cols()) return std::nullopt;
  if (n == 0) return Matrix(0, 0);
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

inline Scalar determinant(Matrix m)
{
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && qqf::is_zero(m(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (qqf::is_zero(m(i, c))) continue;
      const Scalar f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Coefficients c_0..c_n of det(x I - m), c_n = 1 (Faddeev-LeVerrier).
inline std::vector<Scalar> characteristic_polynomial(const Matrix& m)
{
  const std::size_t n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix mk = Matrix::identity(n);
  Matrix prod(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    prod = m * mk;
    Scalar tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += prod(i, i);
    c[n - k] = -tr / Scalar(static_cast<long>(k));
    mk = prod + c[n - k] * Matrix::identity(n);
  }
  return c;
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n)
{
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline Scalar eval_poly(const std::vector<Scalar>& c, const Scalar& x)
{
  Scalar acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

}  // namespace detail

/// Distinct rational roots in increasing order (rational root theorem).
inline std::vector<Scalar> rational_roots(std::vector<Scalar> c)
{
  std::vector<Scalar> roots;
  while (!c.empty() && qqf::is_zero(c.back())) c.pop_back();
  if (c.size() <= 1) return roots;
  std::size_t low = 0;
  while (qqf::is_zero(c[low])) ++low;
  if (low > 0) {
    roots.push_back(0);
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  }
  Integer lcm = 1;
  for (const auto& x : c) {
    const Integer d = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<Integer> ic;
  for (const auto& x : c) ic.push_back(boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x)));
  for (const auto& p : detail::positive_divisors(ic.front()))
    for (const auto& q : detail::positive_divisors(ic.back()))
      for (int s : {1, -1}) {
        const Scalar r(Integer(s) * p, q);
        if (detail::eval_poly(c, r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace qqf

#endif  // QQF_MATRIX_HPP
