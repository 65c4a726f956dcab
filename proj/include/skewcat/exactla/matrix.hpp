#pragma once

// Dense matrices over an exact field and the elimination kernels built on
// them. Pivoting is deterministic: the first nonzero entry, scanning columns
// left to right, rows top to bottom.

#include "skewcat/exactla/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace skewcat {

class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class K>
using Vec = std::vector<K>;

template <class K>
bool is_zero_vec(const Vec<K>& v) {
  return std::all_of(v.begin(), v.end(), [](const K& a) { return a.is_zero(); });
}

template <class K>
Vec<K>& axpy(Vec<K>& y, const K& a, const Vec<K>& x) {
  if (y.size() != x.size()) throw dimension_error("axpy: length mismatch");
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
  return y;
}

template <class K>
Vec<K> operator+(Vec<K> a, const Vec<K>& b) {
  if (a.size() != b.size()) throw dimension_error("vector sum: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class K>
Vec<K> operator-(Vec<K> a, const Vec<K>& b) {
  if (a.size() != b.size()) throw dimension_error("vector difference: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class K>
Vec<K> scaled(const K& c, Vec<K> v) {
  for (auto& x : v) x *= c;
  return v;
}

template <class K>
Vec<K> unit_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec<K> v(n);
  v[i] = one<K>(f);
  return v;
}

template <class K>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<K> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw dimension_error("matrix data length does not match shape");
  }

  static Mat identity(const FieldSpec& f, std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one<K>(f);
    return m;
  }

  static Mat from_ints(const FieldSpec& f, std::size_t rows, std::size_t cols, std::initializer_list<std::int64_t> vals) {
    if (vals.size() != rows * cols) throw dimension_error("from_ints: wrong number of entries");
    Mat m(rows, cols);
    std::size_t k = 0;
    for (auto v : vals) m.data_[k++] = from_int<K>(f, v);
    return m;
  }

  // Columns are the given vectors.
  static Mat from_columns(std::size_t rows, const std::vector<Vec<K>>& cols) {
    Mat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw dimension_error("from_columns: column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Mat from_rows(std::size_t cols, const std::vector<Vec<K>>& rows) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw dimension_error("from_rows: row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<K>& data() const { return data_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<K> column(std::size_t j) const {
    Vec<K> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  Vec<K> row(std::size_t i) const { return Vec<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const K& a) { return a.is_zero(); });
  }
  bool is_square() const { return rows_ == cols_; }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec<K> apply(const Vec<K>& x) const {
    if (x.size() != cols_) throw dimension_error("apply: vector length " + std::to_string(x.size()) + " vs " + std::to_string(cols_) + " columns");
    Vec<K> y(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (x[j].is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const K& a = (*this)(i, j);
        if (!a.is_zero()) y[i] += a * x[j];
      }
    }
    return y;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw dimension_error("matrix product: inner dimensions differ");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const K& y = b(k, j);
          if (!y.is_zero()) c(i, j) += x * y;
        }
      }
    return c;
  }
  friend Mat operator+(Mat a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw dimension_error("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Mat operator-(Mat a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw dimension_error("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Mat operator*(const K& c, Mat a) {
    for (auto& x : a.data_) x *= c;
    return a;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << to_string((*this)(i, j));
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

template <class K>
struct Echelon {
  Mat<K> reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form; pivots are normalized to 1.
template <class K>
Echelon<K> rref(Mat<K> m) {
  Echelon<K> e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    K inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      K f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

template <class K>
std::size_t rank(const Mat<K>& m) {
  return rref(m).rank();
}

// Some x with a*x = b, or nullopt when inconsistent. Free variables are set
// to zero.
template <class K>
std::optional<Mat<K>> solve(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows()) throw dimension_error("solve: A has " + std::to_string(a.rows()) + " rows, b has " + std::to_string(b.rows()));
  const std::size_t n = a.cols(), k = b.cols();
  Mat<K> aug(a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  Echelon<K> e = rref(std::move(aug));
  Mat<K> x(n, k);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::size_t c = e.pivots[r];
    if (c >= n) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) x(c, j) = e.reduced(r, n + j);
  }
  return x;
}

template <class K>
std::optional<Vec<K>> solve_vec(const Mat<K>& a, const Vec<K>& b) {
  auto x = solve(a, Mat<K>(b.size(), 1, b));
  if (!x) return std::nullopt;
  return x->column(0);
}

// Basis of the right null space. Each vector has a 1 in its free column and
// zeros in the other free columns.
template <class K>
std::vector<Vec<K>> kernel_basis(const Mat<K>& a, const FieldSpec& f) {
  Echelon<K> e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec<K>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<K> v(a.cols());
    v[free] = one<K>(f);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
bool is_invertible(const Mat<K>& a) {
  return a.is_square() && rank(a) == a.rows();
}

template <class K>
Mat<K> inverse(const Mat<K>& a, const FieldSpec& f) {
  if (!a.is_square()) throw dimension_error("inverse of a non-square matrix");
  auto x = solve(a, Mat<K>::identity(f, a.rows()));
  if (!x || !is_invertible(a)) throw std::domain_error("inverse of a singular matrix");
  return *x;
}

// Monic minimal polynomial, coefficients from degree 0 upwards. Found as the
// first linear dependence among I, A, A^2, ...
template <class K>
std::vector<K> min_poly(const Mat<K>& a, const FieldSpec& f) {
  if (!a.is_square()) throw dimension_error("min_poly of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Vec<K>> powers;
  Mat<K> cur = Mat<K>::identity(f, n);
  for (std::size_t d = 0; d <= n; ++d) {
    Vec<K> flat = cur.data();
    if (!powers.empty()) {
      auto coeffs = solve_vec(Mat<K>::from_columns(n * n, powers), flat);
      if (coeffs) {
        std::vector<K> poly(d + 1);
        for (std::size_t i = 0; i < d; ++i) poly[i] = -(*coeffs)[i];
        poly[d] = one<K>(f);
        return poly;
      }
    } else if (n == 0) {
      return {one<K>(f)};
    }
    powers.push_back(std::move(flat));
    cur = cur * a;
  }
  throw std::logic_error("min_poly: no dependence found within degree n");
}

// Subspace of K^n held as a reduced echelon basis.
template <class K>
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const std::vector<Vec<K>>& spanning) : ambient_(ambient) {
    if (spanning.empty()) return;
    Echelon<K> e = rref(Mat<K>::from_rows(ambient, spanning));
    for (std::size_t r = 0; r < e.rank(); ++r) basis_.push_back(e.reduced.row(r));
    pivots_ = e.pivots;
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec<K>>& basis() const { return basis_; }

  bool contains(const Vec<K>& v) const {
    if (v.size() != ambient_) throw dimension_error("Subspace::contains: length mismatch");
    Vec<K> r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const K c = r[pivots_[i]];
      if (!c.is_zero()) axpy(r, -c, basis_[i]);
    }
    return is_zero_vec(r);
  }
  bool contains(const Subspace& o) const {
    return std::all_of(o.basis_.begin(), o.basis_.end(), [&](const Vec<K>& v) { return contains(v); });
  }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  Subspace sum(const Subspace& o) const {
    std::vector<Vec<K>> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return Subspace(ambient_, all);
  }

  Subspace intersect(const Subspace& o, const FieldSpec& f) const {
    // Solve sum c_i u_i - sum d_j w_j = 0.
    if (basis_.empty() || o.basis_.empty()) return Subspace(ambient_, {});
    std::vector<Vec<K>> cols = basis_;
    for (const auto& w : o.basis_) cols.push_back(scaled(-one<K>(f), w));
    auto ker = kernel_basis(Mat<K>::from_columns(ambient_, cols), f);
    std::vector<Vec<K>> vecs;
    for (const auto& k : ker) {
      Vec<K> v(ambient_);
      for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, k[i], basis_[i]);
      vecs.push_back(std::move(v));
    }
    return Subspace(ambient_, vecs);
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec<K>> basis_;
  std::vector<std::size_t> pivots_;
};

// Matrix of a linear map given by its action on the standard basis.
template <class K, class F>
Mat<K> matrix_of(const FieldSpec& f, std::size_t in_dim, std::size_t out_dim, F&& map) {
  Mat<K> m(out_dim, in_dim);
  for (std::size_t j = 0; j < in_dim; ++j) {
    Vec<K> y = map(unit_vec<K>(f, in_dim, j));
    if (y.size() != out_dim) throw dimension_error("matrix_of: map produced wrong length");
    for (std::size_t i = 0; i < out_dim; ++i) m(i, j) = y[i];
  }
  return m;
}

// Stack several linear maps with a common domain.
template <class K>
Mat<K> vstack(const std::vector<Mat<K>>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw dimension_error("vstack: column mismatch");
    rows += b.rows();
  }
  Mat<K> m(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return m;
}

template <class K>
std::string vec_str(const Vec<K>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + "]";
}

}  // namespace skewcat
