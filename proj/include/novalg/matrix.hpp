#pragma once

#include <vector>

#include "novalg/error.hpp"
#include "novalg/polyq.hpp"
#include "novalg/ratfun.hpp"

namespace novalg {

// Dense matrix over an exact field (Rational or RatFun). Row-major storage.
template <class F>
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, F{}) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F(Rational(1));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  F& at(int i, int j) { return data_[i * cols_ + j]; }
  const F& at(int i, int j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!novalg::is_zero(x)) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw malformed_input("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const F& aik = a.at(i, k);
        if (novalg::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          if (novalg::is_zero(b.at(k, j))) continue;
          r.at(i, j) += aik * b.at(k, j);
        }
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix scaled(const F& c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = x * c;
    return r;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Matrix pow(long e) const {
    if (rows_ != cols_) throw malformed_input("matrix power of non-square matrix");
    if (e < 0) throw malformed_input("negative matrix power");
    Matrix acc = identity(rows_);
    Matrix base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
      if (n & 1) acc = acc * base;
      base = base * base;
      n >>= 1;
    }
    return acc;
  }

  int rank() const {
    Matrix m = *this;
    int r = 0;
    for (int col = 0; col < m.cols_ && r < m.rows_; ++col) {
      int pivot = -1;
      for (int i = r; i < m.rows_; ++i)
        if (!novalg::is_zero(m.at(i, col))) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      for (int j = 0; j < m.cols_; ++j) std::swap(m.at(r, j), m.at(pivot, j));
      F inv = F(Rational(1)) / m.at(r, col);
      for (int j = col; j < m.cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
      for (int i = 0; i < m.rows_; ++i) {
        if (i == r || novalg::is_zero(m.at(i, col))) continue;
        F f = m.at(i, col);
        for (int j = col; j < m.cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
      }
      ++r;
    }
    return r;
  }

  // Basis of the right kernel, one column vector per basis element.
  std::vector<std::vector<F>> kernel_basis() const {
    Matrix m = *this;
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < m.cols_ && r < m.rows_; ++col) {
      int pivot = -1;
      for (int i = r; i < m.rows_; ++i)
        if (!novalg::is_zero(m.at(i, col))) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      for (int j = 0; j < m.cols_; ++j) std::swap(m.at(r, j), m.at(pivot, j));
      F inv = F(Rational(1)) / m.at(r, col);
      for (int j = col; j < m.cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
      for (int i = 0; i < m.rows_; ++i) {
        if (i == r || novalg::is_zero(m.at(i, col))) continue;
        F f = m.at(i, col);
        for (int j = col; j < m.cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
      }
      pivot_col.push_back(col);
      ++r;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<F> v(cols_, F{});
      v[free] = F(Rational(1));
      for (int i = 0; i < r; ++i) v[pivot_col[i]] = F{} - m.at(i, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  F det() const {
    if (rows_ != cols_) throw malformed_input("determinant of non-square matrix");
    Matrix m = *this;
    F d = F(Rational(1));
    for (int col = 0; col < cols_; ++col) {
      int pivot = -1;
      for (int i = col; i < rows_; ++i)
        if (!novalg::is_zero(m.at(i, col))) {
          pivot = i;
          break;
        }
      if (pivot < 0) return F{};
      if (pivot != col) {
        for (int j = 0; j < cols_; ++j) std::swap(m.at(col, j), m.at(pivot, j));
        d = F{} - d;
      }
      d = d * m.at(col, col);
      F inv = F(Rational(1)) / m.at(col, col);
      for (int i = col + 1; i < rows_; ++i) {
        if (novalg::is_zero(m.at(i, col))) continue;
        F f = m.at(i, col) * inv;
        for (int j = col; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
      }
    }
    return d;
  }

  F trace() const {
    F t{};
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  Matrix inverse() const {
    if (rows_ != cols_) throw malformed_input("inverse of non-square matrix");
    Matrix m = *this;
    Matrix inv = identity(rows_);
    for (int col = 0; col < cols_; ++col) {
      int pivot = -1;
      for (int i = col; i < rows_; ++i)
        if (!novalg::is_zero(m.at(i, col))) {
          pivot = i;
          break;
        }
      if (pivot < 0) throw malformed_input("singular matrix has no inverse");
      for (int j = 0; j < cols_; ++j) {
        std::swap(m.at(col, j), m.at(pivot, j));
        std::swap(inv.at(col, j), inv.at(pivot, j));
      }
      F d = F(Rational(1)) / m.at(col, col);
      for (int j = 0; j < cols_; ++j) {
        m.at(col, j) = m.at(col, j) * d;
        inv.at(col, j) = inv.at(col, j) * d;
      }
      for (int i = 0; i < rows_; ++i) {
        if (i == col || novalg::is_zero(m.at(i, col))) continue;
        F f = m.at(i, col);
        for (int j = 0; j < cols_; ++j) {
          m.at(i, j) = m.at(i, j) - f * m.at(col, j);
          inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw malformed_input("matrix apply shape mismatch");
    std::vector<F> r(rows_, F{});
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!novalg::is_zero(at(i, j)) && !novalg::is_zero(v[j])) r[i] += at(i, j) * v[j];
    return r;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<F> data_;
};

// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recurrence
// (exact over characteristic-zero fields). Coefficients returned low to high
// as elements of F.
template <class F>
std::vector<F> char_poly(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw malformed_input("char_poly of non-square matrix");
  int n = m.rows();
  std::vector<F> c(n + 1, F{});
  c[n] = F(Rational(1));
  Matrix<F> aux = Matrix<F>::identity(n);
  for (int k = 1; k <= n; ++k) {
    aux = m * aux;
    F t = aux.trace();
    F ck = F{} - t / F(Rational(k));
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) aux.at(i, i) += ck;
  }
  return c;
}

// Minimal polynomial: least monic combination of I, M, M^2, ... that
// vanishes, found by exact rank computations on vectorized powers.
template <class F>
std::vector<F> min_poly(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw malformed_input("min_poly of non-square matrix");
  int n = m.rows();
  std::vector<Matrix<F>> powers;
  powers.push_back(Matrix<F>::identity(n));
  for (int d = 1;; ++d) {
    powers.push_back(powers.back() * m);
    // Solve sum_i a_i M^i = 0 with a_d = 1: columns are vectorized powers.
    Matrix<F> sys(n * n, d);
    std::vector<F> rhs(n * n, F{});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int p = 0; p < d; ++p) sys.at(i * n + j, p) = powers[p].at(i, j);
        rhs[i * n + j] = F{} - powers[d].at(i, j);
      }
    // Augment and check consistency via ranks.
    Matrix<F> aug(n * n, d + 1);
    for (int r = 0; r < n * n; ++r) {
      for (int p = 0; p < d; ++p) aug.at(r, p) = sys.at(r, p);
      aug.at(r, d) = rhs[r];
    }
    if (sys.rank() == aug.rank()) {
      // Solve by elimination on the augmented system.
      Matrix<F> w = aug;
      std::vector<int> pivot_col;
      int r = 0;
      for (int col = 0; col < d && r < w.rows(); ++col) {
        int pivot = -1;
        for (int i = r; i < w.rows(); ++i)
          if (!novalg::is_zero(w.at(i, col))) {
            pivot = i;
            break;
          }
        if (pivot < 0) continue;
        for (int j = 0; j <= d; ++j) std::swap(w.at(r, j), w.at(pivot, j));
        F inv = F(Rational(1)) / w.at(r, col);
        for (int j = col; j <= d; ++j) w.at(r, j) = w.at(r, j) * inv;
        for (int i = 0; i < w.rows(); ++i) {
          if (i == r || novalg::is_zero(w.at(i, col))) continue;
          F f = w.at(i, col);
          for (int j = col; j <= d; ++j) w.at(i, j) = w.at(i, j) - f * w.at(r, j);
        }
        pivot_col.push_back(col);
        ++r;
      }
      std::vector<F> sol(d, F{});
      for (size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = w.at(i, d);
      sol.push_back(F(Rational(1)));
      return sol;
    }
  }
}

}  // namespace novalg
