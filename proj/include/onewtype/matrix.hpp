#pragma once

// Dense exact matrices over Rational or Cyclotomic, with Gaussian elimination.

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "onewtype/cyclotomic.hpp"
#include "onewtype/rational.hpp"

namespace onewtype {

inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Rational scalar_conj(const Rational& x) { return x; }
inline Cyclotomic scalar_conj(const Cyclotomic& x) { return x.conj(); }

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  template <class U>
  static Matrix convert(const Matrix<U>& other) {
    Matrix m(other.rows(), other.cols());
    for (std::size_t i = 0; i < other.rows(); ++i)
      for (std::size_t j = 0; j < other.cols(); ++j) m(i, j) = T(other(i, j));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (scalar_is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!scalar_is_zero(b(k, j))) r(i, j) += x * b(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!(a.data_[k] == b.data_[k])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!scalar_is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix conjugate_transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = scalar_conj((*this)(i, j));
    return r;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix column(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) os << ", ";
        if constexpr (std::is_same_v<T, Rational>)
          os << (*this)(i, j).get_str();
        else
          os << (*this)(i, j).to_string();
      }
      os << "]\n";
    }
    return os.str();
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (scalar_is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!scalar_is_zero(b(k, l))) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() && a.cols() && b.cols()) throw std::invalid_argument("hstack: row mismatch");
  std::size_t rows = a.cols() ? a.rows() : b.rows();
  Matrix<T> r(rows, a.cols() + b.cols());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && scalar_is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    T inv = T(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || scalar_is_zero(m(r, c))) continue;
      T s = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!scalar_is_zero(m(row, j))) m(r, j) -= s * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

// Columns form a basis of the null space.
template <class T>
Matrix<T> kernel(const Matrix<T>& a) {
  Matrix<T> m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix<T> basis(a.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(free[f], f) = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], f) = -m(r, free[f]);
  }
  return basis;
}

// Columns form a basis of the column space (a subset of the columns of a).
template <class T>
Matrix<T> image(const Matrix<T>& a) {
  Matrix<T> m = a;
  auto pivots = rref(m);
  Matrix<T> basis(a.rows(), pivots.size());
  for (std::size_t f = 0; f < pivots.size(); ++f)
    for (std::size_t i = 0; i < a.rows(); ++i) basis(i, f) = a(i, pivots[f]);
  return basis;
}

// Basis of the intersection of two column spaces (each given by a basis).
template <class T>
Matrix<T> intersect(const Matrix<T>& u, const Matrix<T>& w) {
  if (u.cols() == 0 || w.cols() == 0) return Matrix<T>(u.rows(), 0);
  Matrix<T> k = kernel(hstack(u, -w));
  Matrix<T> coeff(u.cols(), k.cols());
  for (std::size_t i = 0; i < u.cols(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) coeff(i, j) = k(i, j);
  return image(u * coeff);
}

// Solve a x = b for x (any solution); nullopt if inconsistent.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> aug = hstack(a, b);
  auto pivots = rref(aug);
  for (auto p : pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix<T> x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  auto x = solve(a, Matrix<T>::identity(a.rows()));
  if (!x || rank(a) != a.rows()) throw std::domain_error("matrix is singular");
  return *x;
}

// Trace of a restricted to the invariant subspace spanned by the columns of basis.
template <class T>
T restricted_trace(const Matrix<T>& a, const Matrix<T>& basis) {
  if (basis.cols() == 0) return T(0);
  auto m = solve(basis, a * basis);
  if (!m) throw std::logic_error("restricted_trace: subspace is not invariant");
  return m->trace();
}

}  // namespace onewtype
