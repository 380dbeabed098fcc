#pragma once

// Dense exact matrices and vectors over a Field, with the handful of
// elimination routines the rest of the library needs. Loops skip zero
// entries, which keeps the mostly sparse structure matrices cheap.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "schrod/error.hpp"
#include "schrod/field.hpp"

namespace schrod {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(Field f, size_t n) { return Vec(n, Scalar(f)); }
inline Vec unit_vec(Field f, size_t n, size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = Scalar::one(f);
  return v;
}
inline bool is_zero_vec(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}
inline Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector lengths differ");
  Vec r = a;
  for (size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}
inline Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector lengths differ");
  Vec r = a;
  for (size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}
inline Vec scale(const Scalar& s, const Vec& a) {
  Vec r = a;
  for (auto& x : r)
    if (!x.is_zero()) x *= s;
  return r;
}
// acc += s * v
inline void axpy(Vec& acc, const Scalar& s, const Vec& v) {
  if (s.is_zero()) return;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) acc[i].add_mul(s, v[i]);
}
inline std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, size_t rows, size_t cols) : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar(f)) {}

  static Matrix identity(Field f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
  }
  static Matrix from_columns(Field f, size_t rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) fail(ErrorKind::DimensionMismatch, "column length");
      for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  Field field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Vec column(size_t c) const {
    Vec v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(size_t c, const Vec& v) {
    for (size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  bool is_zero() const {
    for (const auto& s : data_)
      if (!s.is_zero()) return false;
    return true;
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols_; ++c) {
        const Scalar& s = (*this)(r, c);
        if (r == c ? !s.is_one() : !s.is_zero()) return false;
      }
    return true;
  }

  Scalar trace() const {
    if (rows_ != cols_) fail(ErrorKind::DimensionMismatch, "trace of a non-square matrix");
    Scalar t(field_);
    for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shapes");
    if (a.field_ != b.field_) fail(ErrorKind::FieldMismatch, "matrix product fields");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const Scalar& x = a(i, k);
        if (x.is_zero()) continue;
        const Scalar* brow = &b.data_[k * b.cols_];
        Scalar* rrow = &r.data_[i * r.cols_];
        for (size_t j = 0; j < b.cols_; ++j)
          if (!brow[j].is_zero()) rrow[j].add_mul(x, brow[j]);
      }
    return r;
  }
  friend Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols_ != v.size()) fail(ErrorKind::DimensionMismatch, "matrix-vector shapes");
    Vec r = zero_vec(a.field_, a.rows_);
    for (size_t k = 0; k < a.cols_; ++k) {
      if (v[k].is_zero()) continue;
      for (size_t i = 0; i < a.rows_; ++i)
        if (!a(i, k).is_zero()) r[i].add_mul(a(i, k), v[k]);
    }
    return r;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix r = a;
    for (size_t i = 0; i < r.data_.size(); ++i)
      if (!b.data_[i].is_zero()) r.data_[i] += b.data_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix r = a;
    for (size_t i = 0; i < r.data_.size(); ++i)
      if (!b.data_[i].is_zero()) r.data_[i] -= b.data_[i];
    return r;
  }
  friend Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_)
      if (!x.is_zero()) x *= s;
    return r;
  }
  // this += s * b
  void add_scaled(const Scalar& s, const Matrix& b) {
    same_shape(b);
    if (s.is_zero()) return;
    for (size_t i = 0; i < data_.size(); ++i)
      if (!b.data_[i].is_zero()) data_[i].add_mul(s, b.data_[i]);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.data_.size(); ++i)
      if (a.data_[i] != b.data_[i]) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const {
    std::string s;
    for (size_t r = 0; r < rows_; ++r) {
      s += "[";
      for (size_t c = 0; c < cols_; ++c) s += (c ? " " : "") + (*this)(r, c).str();
      s += "]\n";
    }
    return s;
  }

 private:
  Field field_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;

  void same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "matrix shapes differ");
    if (field_ != b.field_) fail(ErrorKind::FieldMismatch, "matrix fields differ");
  }
};

// Kronecker product; index (i, j) of the result is i * b.rows() + j.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<size_t> rref(Matrix& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  const Field f = m.field();
  std::vector<size_t> nz;
  for (size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    size_t piv = m.rows();
    for (size_t r = row; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv == m.rows()) continue;
    if (piv != row)
      for (size_t k = c; k < m.cols(); ++k) std::swap(m(piv, k), m(row, k));
    Scalar inv = m(row, c).inverse();
    nz.clear();
    for (size_t k = c; k < m.cols(); ++k)
      if (!m(row, k).is_zero()) {
        m(row, k) *= inv;
        nz.push_back(k);
      }
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      Scalar factor = -m(r, c);
      for (size_t k : nz) m(r, k).add_mul(factor, m(row, k));
    }
    (void)f;
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline size_t rank(Matrix m) { return rref(m).size(); }

inline bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

inline Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) fail(ErrorKind::SingularMatrix, "matrix is singular");
  Matrix inv(m.field(), n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<Vec> nullspace(const Matrix& m) {
  Matrix r = m;
  auto piv = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t fcol = 0; fcol < m.cols(); ++fcol) {
    if (is_pivot[fcol]) continue;
    Vec v = zero_vec(m.field(), m.cols());
    v[fcol] = Scalar::one(m.field());
    for (size_t i = 0; i < piv.size(); ++i)
      if (!r(i, fcol).is_zero()) v[piv[i]] = -r(i, fcol);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves m x = b for one particular solution; returns false if inconsistent.
inline bool solve(const Matrix& m, const Vec& b, Vec& x) {
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return false;
  x = zero_vec(m.field(), m.cols());
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.cols());
  return true;
}

inline size_t int_pow(size_t base, size_t exp) {
  size_t r = 1;
  for (size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Applies op (acting on V (x) V, dim V = d) to factors i and i+1 (1-based) of
// a vector in V^{(x) n}. The first tensor factor is the most significant digit.
inline Vec local_apply(const Matrix& op, size_t d, size_t n, size_t i, const Vec& v) {
  if (op.rows() != d * d || op.cols() != d * d) fail(ErrorKind::DimensionMismatch, "local operator shape");
  if (i < 1 || i + 1 > n) fail(ErrorKind::DimensionMismatch, "local factor position");
  size_t total = int_pow(d, n);
  if (v.size() != total) fail(ErrorKind::DimensionMismatch, "local_apply vector length");
  size_t inner = int_pow(d, n - i - 1);  // factors after the pair
  size_t pair = d * d;
  size_t outer = int_pow(d, i - 1);
  Vec r = zero_vec(op.field(), total);
  for (size_t o = 0; o < outer; ++o)
    for (size_t in = 0; in < inner; ++in) {
      for (size_t c = 0; c < pair; ++c) {
        const Scalar& x = v[(o * pair + c) * inner + in];
        if (x.is_zero()) continue;
        for (size_t rr = 0; rr < pair; ++rr) {
          const Scalar& e = op(rr, c);
          if (!e.is_zero()) r[(o * pair + rr) * inner + in].add_mul(e, x);
        }
      }
    }
  return r;
}

}  // namespace schrod
