#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moufang/errors.hpp"
#include "moufang/rational.hpp"

namespace moufang {

/// Dense exact vector. Immutable by convention once built; every operation
/// below returns a fresh value.
class Vector {
public:
  Vector() = default;
  explicit Vector(std::size_t dim) : e_(dim) {}
  Vector(std::size_t dim, std::vector<Rational> entries) : e_(std::move(entries)) {
    if (e_.size() != dim)
      throw DimensionError("vector: entry count does not match dimension");
  }

  static Vector zero(std::size_t dim) { return Vector(dim); }
  static Vector unit(std::size_t dim, std::size_t i) {
    Vector v(dim);
    v.at(i) = Rational(1);
    return v;
  }

  std::size_t dim() const { return e_.size(); }
  const Rational& operator[](std::size_t i) const { return e_[i]; }
  Rational& at(std::size_t i) { return e_[i]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero())
        return false;
    return true;
  }

  friend bool operator==(const Vector& a, const Vector& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

  Vector& operator+=(const Vector& o) {
    check_same_dim(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      e_[i] += o.e_[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    check_same_dim(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      e_[i] -= o.e_[i];
    return *this;
  }
  Vector& operator*=(const Rational& c) {
    for (auto& x : e_)
      x *= c;
    return *this;
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& c, Vector a) { return a *= c; }
  friend Vector operator-(Vector a) {
    for (auto& x : a.e_)
      x = -x;
    return a;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i)
        s += ", ";
      s += e_[i].str();
    }
    return s + ")";
  }

private:
  void check_same_dim(const Vector& o) const {
    if (o.e_.size() != e_.size())
      throw DimensionError("vector: dimension mismatch");
  }

  std::vector<Rational> e_;
};

/// Dense exact matrix, row-major.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m.at(i, i) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }
  Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero())
        return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      e_[i] += o.e_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      e_[i] -= o.e_[i];
    return *this;
  }
  Matrix& operator*=(const Rational& c) {
    for (auto& x : e_)
      x *= c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.e_)
      x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("matrix: product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero())
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (bkj.is_zero())
            continue;
          r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  Vector apply(const Vector& v) const {
    if (v.dim() != cols_)
      throw DimensionError("matrix: apply shape mismatch");
    Vector r(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j].is_zero())
        continue;
      for (std::size_t i = 0; i < rows_; ++i)
        r.at(i) += (*this)(i, j) * v[j];
    }
    return r;
  }

  /// Row-major flattening, used by serialization and the rank test.
  const std::vector<Rational>& entries() const { return e_; }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j)
          s += " ";
        s += (*this)(i, j).str();
      }
      s += "]";
      if (i + 1 < rows_)
        s += "\n";
    }
    return s;
  }

private:
  void check_same_shape(const Matrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_)
      throw DimensionError("matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> e_;
};

/// Commutator ab - ba of square matrices of equal size.
inline Matrix commutator(const Matrix& a, const Matrix& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw DimensionError("commutator: operands must be square of equal size");
  return a * b - b * a;
}

/// Rank-3 tensor t(a,b,c), first index is the output component of the
/// bilinear map it encodes.
class Tensor3 {
public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
      : d0_(d0), d1_(d1), d2_(d2), e_(d0 * d1 * d2) {}

  std::size_t dim0() const { return d0_; }
  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }

  const Rational& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return e_[(a * d1_ + b) * d2_ + c];
  }
  Rational& at(std::size_t a, std::size_t b, std::size_t c) {
    return e_[(a * d1_ + b) * d2_ + c];
  }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Tensor3& a, const Tensor3& b) {
    return !(a == b);
  }

private:
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Rational> e_;
};

/// Rank-4 tensor t(a,b,c,d), first index is the output component.
class Tensor4 {
public:
  Tensor4() = default;
  Tensor4(std::size_t d0, std::size_t d1, std::size_t d2, std::size_t d3)
      : d0_(d0), d1_(d1), d2_(d2), d3_(d3), e_(d0 * d1 * d2 * d3) {}

  std::size_t dim0() const { return d0_; }
  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }
  std::size_t dim3() const { return d3_; }

  const Rational& operator()(std::size_t a, std::size_t b, std::size_t c,
                             std::size_t d) const {
    return e_[((a * d1_ + b) * d2_ + c) * d3_ + d];
  }
  Rational& at(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return e_[((a * d1_ + b) * d2_ + c) * d3_ + d];
  }

  friend bool operator==(const Tensor4& a, const Tensor4& b) {
    return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ &&
           a.d3_ == b.d3_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Tensor4& a, const Tensor4& b) {
    return !(a == b);
  }

private:
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0, d3_ = 0;
  std::vector<Rational> e_;
};

/// result[a] = sum_{b,c} t(a,b,c) x[b] y[c]
inline Vector contract_bilinear(const Tensor3& t, const Vector& x,
                                const Vector& y) {
  if (t.dim1() != x.dim() || t.dim2() != y.dim())
    throw DimensionError("contract_bilinear: shape mismatch");
  Vector r(t.dim0());
  for (std::size_t b = 0; b < x.dim(); ++b) {
    if (x[b].is_zero())
      continue;
    for (std::size_t c = 0; c < y.dim(); ++c) {
      if (y[c].is_zero())
        continue;
      Rational xy = x[b] * y[c];
      for (std::size_t a = 0; a < t.dim0(); ++a) {
        const Rational& w = t(a, b, c);
        if (!w.is_zero())
          r.at(a) += w * xy;
      }
    }
  }
  return r;
}

/// result[a] = sum_{b,c,d} t(a,b,c,d) x[b] y[c] z[d]
inline Vector contract_trilinear(const Tensor4& t, const Vector& x,
                                 const Vector& y, const Vector& z) {
  if (t.dim1() != x.dim() || t.dim2() != y.dim() || t.dim3() != z.dim())
    throw DimensionError("contract_trilinear: shape mismatch");
  Vector r(t.dim0());
  for (std::size_t b = 0; b < x.dim(); ++b) {
    if (x[b].is_zero())
      continue;
    for (std::size_t c = 0; c < y.dim(); ++c) {
      if (y[c].is_zero())
        continue;
      Rational xy = x[b] * y[c];
      for (std::size_t d = 0; d < z.dim(); ++d) {
        if (z[d].is_zero())
          continue;
        Rational xyz = xy * z[d];
        for (std::size_t a = 0; a < t.dim0(); ++a) {
          const Rational& w = t(a, b, c, d);
          if (!w.is_zero())
            r.at(a) += w * xyz;
        }
      }
    }
  }
  return r;
}

/// Exact rank via Gaussian elimination (first-nonzero pivoting).
inline std::size_t rank(Matrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c).is_zero())
      ++pivot;
    if (pivot == a.rows())
      continue;
    if (pivot != r)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(r, j), a.at(pivot, j));
    Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j)
      a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero())
        continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a.at(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Solves a x = rhs exactly. Returns nullopt when the system is
/// inconsistent; throws when the solution is not unique.
inline std::optional<Vector> solve_exact(const Matrix& a, const Vector& rhs) {
  if (a.rows() != rhs.dim())
    throw DimensionError("solve_exact: shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      aug.at(i, j) = a(i, j);
    aug.at(i, a.cols()) = rhs[i];
  }

  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < a.cols() && r < aug.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < aug.rows() && aug(pivot, c).is_zero())
      ++pivot;
    if (pivot == aug.rows())
      continue;
    if (pivot != r)
      for (std::size_t j = 0; j < aug.cols(); ++j)
        std::swap(aug.at(r, j), aug.at(pivot, j));
    Rational inv = Rational(1) / aug(r, c);
    for (std::size_t j = c; j < aug.cols(); ++j)
      aug.at(r, j) *= inv;
    for (std::size_t i = 0; i < aug.rows(); ++i) {
      if (i == r || aug(i, c).is_zero())
        continue;
      Rational f = aug(i, c);
      for (std::size_t j = c; j < aug.cols(); ++j)
        aug.at(i, j) -= f * aug(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }

  for (std::size_t i = r; i < aug.rows(); ++i)
    if (!aug(i, a.cols()).is_zero())
      return std::nullopt;
  if (r < a.cols())
    throw Error("solve_exact: solution is not unique");

  Vector x(a.cols());
  for (std::size_t i = 0; i < r; ++i)
    x.at(pivot_col[i]) = aug(i, a.cols());
  return x;
}

/// Matrix view of a vector (n x 1), used for uniform witness payloads.
inline Matrix as_column(const Vector& v) {
  Matrix m(v.dim(), 1);
  for (std::size_t i = 0; i < v.dim(); ++i)
    m.at(i, 0) = v[i];
  return m;
}

inline Matrix as_scalar(const Rational& r) {
  Matrix m(1, 1);
  m.at(0, 0) = r;
  return m;
}

} // namespace moufang
