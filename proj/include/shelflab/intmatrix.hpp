#pragma once

// Dense exact-integer matrices and Smith normal form with transforms.
// Arithmetic is arbitrary precision (boost cpp_int); the SNF engine runs a
// checked 64-bit fast path first and redoes the work in cpp_int if any
// intermediate value would overflow. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace shelflab {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t k) {
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const {
    for (const Int& v : a_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const Int& v = x.at(i, k);
        if (v == 0) continue;  // boundary matrices are sparse
        for (std::size_t j = 0; j < y.cols_; ++j) {
          const Int& w = y.at(k, j);
          if (w != 0) r.at(i, j) += v * w;
        }
      }
    return r;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

/// Triplet export: header "rows cols nnz", then one "row col value" per entry.
inline void write_triplets(std::ostream& out, const IntMatrix& m) {
  std::size_t nnz = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) ++nnz;
  out << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) out << i << ' ' << j << ' ' << m.at(i, j) << '\n';
}

struct SnfResult {
  std::vector<Int> invariant_factors;  // positive, d1 | d2 | ... | d_rank
  std::size_t rank = 0;
  IntMatrix U, V;  // unimodular, U*A*V = diag(invariant_factors, 0...)
};

namespace detail {

struct Int64Overflow {};

inline std::int64_t chk_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}
inline std::int64_t chk_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}
inline std::int64_t chk_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}
inline std::int64_t chk_neg(std::int64_t a) { return chk_sub(0, a); }
inline std::int64_t chk_div(std::int64_t a, std::int64_t b) {
  if (b == -1) return chk_neg(a);  // INT64_MIN / -1 overflows
  return a / b;
}
inline std::int64_t chk_abs(std::int64_t a) { return a < 0 ? chk_neg(a) : a; }

inline Int chk_add(const Int& a, const Int& b) { return a + b; }
inline Int chk_sub(const Int& a, const Int& b) { return a - b; }
inline Int chk_mul(const Int& a, const Int& b) { return a * b; }
inline Int chk_neg(const Int& a) { return -a; }
inline Int chk_div(const Int& a, const Int& b) { return a / b; }
inline Int chk_abs(const Int& a) { return abs(a); }

template <class T>
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<T> a;
  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  T& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const T& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  static Mat ident(std::size_t k) {
    Mat m(k, k);
    for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
  }
};

// Textbook SNF with row/column transforms, pivoting on the entry of least
// absolute value to limit growth.
template <class T>
struct SnfEngine {
  Mat<T> m, u, v;

  explicit SnfEngine(Mat<T> a) : m(std::move(a)) {
    u = Mat<T>::ident(m.rows);
    v = Mat<T>::ident(m.cols);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(i, k), m.at(j, k));
    for (std::size_t k = 0; k < u.cols; ++k) std::swap(u.at(i, k), u.at(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m.rows; ++k) std::swap(m.at(k, i), m.at(k, j));
    for (std::size_t k = 0; k < v.rows; ++k) std::swap(v.at(k, i), v.at(k, j));
  }
  // row i -= q * row s
  void row_sub(std::size_t i, std::size_t s, const T& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < m.cols; ++k)
      if (m.at(s, k) != 0) m.at(i, k) = chk_sub(m.at(i, k), chk_mul(q, m.at(s, k)));
    for (std::size_t k = 0; k < u.cols; ++k)
      if (u.at(s, k) != 0) u.at(i, k) = chk_sub(u.at(i, k), chk_mul(q, u.at(s, k)));
  }
  // col j -= q * col s
  void col_sub(std::size_t j, std::size_t s, const T& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < m.rows; ++k)
      if (m.at(k, s) != 0) m.at(k, j) = chk_sub(m.at(k, j), chk_mul(q, m.at(k, s)));
    for (std::size_t k = 0; k < v.rows; ++k)
      if (v.at(k, s) != 0) v.at(k, j) = chk_sub(v.at(k, j), chk_mul(q, v.at(k, s)));
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < m.cols; ++k) m.at(i, k) = chk_neg(m.at(i, k));
    for (std::size_t k = 0; k < u.cols; ++k) u.at(i, k) = chk_neg(u.at(i, k));
  }

  bool find_pivot(std::size_t s, std::size_t& pi, std::size_t& pj) {
    bool got = false;
    T best{};
    for (std::size_t i = s; i < m.rows; ++i)
      for (std::size_t j = s; j < m.cols; ++j) {
        const T& x = m.at(i, j);
        if (x == 0) continue;
        T ax = chk_abs(x);
        if (!got || ax < best) {
          got = true;
          best = ax;
          pi = i;
          pj = j;
        }
      }
    return got;
  }

  void run() {
    const std::size_t dim = std::min(m.rows, m.cols);
    for (std::size_t s = 0; s < dim; ++s) {
      for (;;) {
        // re-select the least-magnitude pivot every pass; this is what keeps
        // entry growth under control on dense inputs
        std::size_t pi, pj;
        if (!find_pivot(s, pi, pj)) return;
        swap_rows(s, pi);
        swap_cols(s, pj);
        bool changed = false;
        for (std::size_t i = s + 1; i < m.rows; ++i) {
          if (m.at(i, s) == 0) continue;
          row_sub(i, s, chk_div(m.at(i, s), m.at(s, s)));
          if (m.at(i, s) != 0) changed = true;  // remainder, strictly smaller
        }
        for (std::size_t j = s + 1; j < m.cols; ++j) {
          if (m.at(s, j) == 0) continue;
          col_sub(j, s, chk_div(m.at(s, j), m.at(s, s)));
          if (m.at(s, j) != 0) changed = true;
        }
        if (changed) continue;
        // pivot must divide the rest of the submatrix
        bool fixed = false;
        for (std::size_t i = s + 1; i < m.rows && !fixed; ++i)
          for (std::size_t j = s + 1; j < m.cols && !fixed; ++j)
            if (m.at(i, j) % m.at(s, s) != 0) {
              // adding row i brings a non-multiple into row s
              for (std::size_t k = 0; k < m.cols; ++k)
                m.at(s, k) = chk_add(m.at(s, k), m.at(i, k));
              for (std::size_t k = 0; k < u.cols; ++k)
                u.at(s, k) = chk_add(u.at(s, k), u.at(i, k));
              fixed = true;
            }
        if (!fixed) break;
      }
      if (m.at(s, s) < 0) negate_row(s);
    }
  }
};

template <class T>
bool snf_verify(const Mat<T>& a, const Mat<T>& u, const Mat<T>& v,
                const std::vector<T>& factors) {
  // p = a * v, sparse in a
  Mat<T> p(a.rows, v.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const T& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < v.cols; ++j) {
        const T& y = v.at(k, j);
        if (y != 0) p.at(i, j) = chk_add(p.at(i, j), chk_mul(x, y));
      }
    }
  // d = u * p must equal diag(factors)
  for (std::size_t i = 0; i < u.rows; ++i)
    for (std::size_t j = 0; j < p.cols; ++j) {
      T acc{};
      for (std::size_t k = 0; k < u.cols; ++k) {
        const T& x = u.at(i, k);
        if (x == 0) continue;
        const T& y = p.at(k, j);
        if (y != 0) acc = chk_add(acc, chk_mul(x, y));
      }
      T expect{};
      if (i == j && i < factors.size()) expect = factors[i];
      if (acc != expect) return false;
    }
  return true;
}

template <class T>
SnfResult snf_run(const IntMatrix& a) {
  Mat<T> work(a.rows(), a.cols());
  Mat<T> orig(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if constexpr (std::is_same_v<T, std::int64_t>) {
        if (a.at(i, j) < std::numeric_limits<std::int64_t>::min() ||
            a.at(i, j) > std::numeric_limits<std::int64_t>::max())
          throw Int64Overflow{};
        work.at(i, j) = static_cast<std::int64_t>(a.at(i, j));
      } else {
        work.at(i, j) = a.at(i, j);
      }
      orig.at(i, j) = work.at(i, j);
    }
  SnfEngine<T> eng(std::move(work));
  eng.run();

  SnfResult res;
  const std::size_t dim = std::min(a.rows(), a.cols());
  std::vector<T> diag;
  for (std::size_t s = 0; s < dim; ++s) {
    if (eng.m.at(s, s) == 0) break;
    diag.push_back(eng.m.at(s, s));
  }
  if (!snf_verify(orig, eng.u, eng.v, diag))
    throw std::logic_error("smith_normal_form: U*A*V != D self-check failed");

  res.rank = diag.size();
  for (const T& d : diag) res.invariant_factors.emplace_back(d);
  for (std::size_t i = 1; i < res.invariant_factors.size(); ++i)
    if (res.invariant_factors[i] % res.invariant_factors[i - 1] != 0)
      throw std::logic_error("smith_normal_form: divisibility chain broken");
  res.U = IntMatrix(a.rows(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) res.U.at(i, j) = eng.u.at(i, j);
  res.V = IntMatrix(a.cols(), a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) res.V.at(i, j) = eng.v.at(i, j);
  return res;
}

}  // namespace detail

/// Exact Smith normal form with unimodular transforms. The round trip
/// U*A*V = D is re-multiplied and checked before returning.
inline SnfResult smith_normal_form(const IntMatrix& a) {
  try {
    return detail::snf_run<std::int64_t>(a);
  } catch (const detail::Int64Overflow&) {
    return detail::snf_run<Int>(a);
  }
}

/// Exact determinant (Bareiss fraction-free elimination).
inline Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant needs a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  std::vector<Int> w(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i * n + j] = a.at(i, j);
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w[k * n + k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && w[piv * n + k] == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w[k * n + j], w[piv * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        w[i * n + j] = (w[i * n + j] * w[k * n + k] - w[i * n + k] * w[k * n + j]) / prev;
    prev = w[k * n + k];
  }
  return sign * w[n * n - 1];
}

}  // namespace shelflab
