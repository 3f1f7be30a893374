#pragma once

// Field-generic dense linear algebra: rank/kernel by reduced row echelon form,
// inertia of symmetric matrices by LDLᵀ with symmetric pivoting, Pfaffians,
// determinants, inverses and characteristic polynomials.
//
// Exact scalars pivot on the first nonzero entry and compare with ==. Float
// scalars pivot on the largest magnitude and treat anything at or below
// tolerance::kRankRelative × (largest entry) as zero.

#include <cstddef>
#include <numeric>
#include <vector>

#include "ksym/error.hpp"
#include "ksym/matrix.hpp"

namespace ksym {

template <class T>
struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vector<T>> kernel;
};

struct Inertia {
  std::size_t minuses = 0;
  std::size_t pluses = 0;
  std::size_t zeros = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

namespace detail {

/// Row index in [from, rows) holding the pivot for column `col`, or rows if none.
template <class T>
std::size_t choose_pivot(const Matrix<T>& a, std::size_t from, std::size_t col, double scale) {
  std::size_t best = a.rows();
  double best_mag = 0.0;
  for (std::size_t i = from; i < a.rows(); ++i) {
    if constexpr (is_exact_v<T>) {
      if (a(i, col) != T(0)) return i;
    } else {
      double m = magnitude(a(i, col));
      if (m > best_mag) {
        best_mag = m;
        best = i;
      }
    }
  }
  if constexpr (!is_exact_v<T>) {
    if (best != a.rows() && negligible(a(best, col), scale)) return a.rows();
  }
  return best;
}

}  // namespace detail

/// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& a) {
  const double scale = a.max_magnitude();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = detail::choose_pivot(a, row, col, scale);
    if (p == a.rows()) {
      if constexpr (!is_exact_v<T>)
        for (std::size_t i = row; i < a.rows(); ++i) a(i, col) = T(0);
      continue;
    }
    a.swap_rows(row, p);
    T inv = T(1) / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == T(0)) continue;
      T f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
RankKernel<T> rank_kernel(const Matrix<T>& m) {
  RankKernel<T> out;
  if (m.rows() == 0 || m.cols() == 0) {
    for (std::size_t f = 0; f < m.cols(); ++f) {
      Vector<T> v(m.cols(), T(0));
      v[f] = T(1);
      out.kernel.push_back(std::move(v));
    }
    return out;
  }
  Matrix<T> a = m;
  std::vector<std::size_t> pivots = row_reduce(a);
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Matrix<T> a = m;
  return row_reduce(a).size();
}

template <class T>
T determinant(const Matrix<T>& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  Matrix<T> a = m;
  const std::size_t n = a.rows();
  const double scale = a.max_magnitude();
  T det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = detail::choose_pivot(a, k, k, scale);
    if (p == n) return T(0);
    if (p != k) {
      a.swap_rows(p, k);
      det = -det;
    }
    det *= a(k, k);
    T inv = T(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == T(0)) continue;
      T f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonInvertible, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  std::vector<std::size_t> pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw Error(ErrorCode::NonInvertible, "matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Counts of negative, positive and zero eigenvalues of a real symmetric
/// matrix, read off an LDLᵀ factorisation with symmetric (Bunch–Kaufman style)
/// pivoting. By Sylvester's law these are congruence invariants.
template <class T>
Inertia signature(const Matrix<T>& sym) {
  static_assert(!is_complex_v<T>, "signature needs a real symmetric matrix");
  if (!sym.is_square()) throw Error(ErrorCode::NonSymmetric, "matrix is not square");
  if (!is_symmetric(sym)) throw Error(ErrorCode::NonSymmetric, "matrix is not symmetric");

  Matrix<T> a = sym;
  const std::size_t n = a.rows();
  const double scale = a.max_magnitude();
  Inertia out;
  auto count = [&](int s) {
    if (s < 0) ++out.minuses;
    else if (s > 0) ++out.pluses;
    else ++out.zeros;
  };
  auto swap_sym = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    a.swap_cols(i, j);
  };

  constexpr double kBunchKaufmanAlpha = 0.6403882032022076;  // (1 + sqrt 17) / 8
  std::size_t k = 0;
  while (k < n) {
    std::size_t diag = n, off_i = n, off_j = n;
    double diag_mag = 0.0, off_mag = 0.0;
    for (std::size_t i = k; i < n; ++i) {
      if constexpr (is_exact_v<T>) {
        if (diag == n && a(i, i) != T(0)) diag = i;
        for (std::size_t j = i + 1; j < n && off_i == n; ++j)
          if (a(i, j) != T(0)) off_i = i, off_j = j;
      } else {
        if (magnitude(a(i, i)) > diag_mag) diag_mag = magnitude(a(i, i)), diag = i;
        for (std::size_t j = i + 1; j < n; ++j)
          if (magnitude(a(i, j)) > off_mag) off_mag = magnitude(a(i, j)), off_i = i, off_j = j;
      }
    }
    if constexpr (!is_exact_v<T>) {
      if (diag != n && negligible(a(diag, diag), scale)) diag = n;
      if (off_i != n && negligible(a(off_i, off_j), scale)) off_i = off_j = n;
    }

    bool one_by_one = diag != n;
    if constexpr (!is_exact_v<T>) {
      if (one_by_one && off_i != n) one_by_one = diag_mag >= kBunchKaufmanAlpha * off_mag;
    }

    if (one_by_one) {
      swap_sym(k, diag);
      count(sign_of(a(k, k), scale));
      T inv = T(1) / a(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k) == T(0)) continue;
        T f = a(i, k) * inv;
        for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      }
      ++k;
      continue;
    }
    if (off_i == n) {
      out.zeros += n - k;
      break;
    }

    // 2×2 pivot block [[p, r], [r, s]] moved to rows/cols k, k+1.
    swap_sym(k, off_i);
    swap_sym(k + 1, off_j == k ? off_i : off_j);
    const T p = a(k, k), r = a(k, k + 1), s = a(k + 1, k + 1);
    const T det = p * s - r * r;
    const int det_sign = sign_of(det, scale * scale);
    if (det_sign < 0) {
      count(-1);
      count(1);
    } else {
      // only reachable in floating point: both eigenvalues share the trace's sign
      const int tr = sign_of(T(p + s), scale);
      count(det_sign == 0 ? 0 : tr);
      count(tr);
    }
    if (det_sign == 0) {
      // numerically rank-one block; fall back to eliminating its larger diagonal
      ++k;
      continue;
    }
    // Schur complement: A22 -= C · B⁻¹ · Cᵀ with B⁻¹ = [[s, −r], [−r, p]] / det.
    for (std::size_t i = k + 2; i < n; ++i) {
      const T ci0 = a(i, k), ci1 = a(i, k + 1);
      if (ci0 == T(0) && ci1 == T(0)) continue;
      const T wi0 = (ci0 * s - ci1 * r) / det;
      const T wi1 = (ci1 * p - ci0 * r) / det;
      for (std::size_t j = k + 2; j < n; ++j) a(i, j) -= wi0 * a(k, j) + wi1 * a(k + 1, j);
    }
    k += 2;
  }
  return out;
}

namespace detail {

template <class T>
T pfaffian_expand(const Matrix<T>& m, std::vector<std::size_t>& idx) {
  if (idx.empty()) return T(1);
  const std::size_t first = idx.front();
  T total(0);
  for (std::size_t p = 1; p < idx.size(); ++p) {
    const std::size_t partner = idx[p];
    if (m(first, partner) == T(0)) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t q = 1; q < idx.size(); ++q)
      if (q != p) rest.push_back(idx[q]);
    T term = m(first, partner) * pfaffian_expand(m, rest);
    if (p % 2 == 1) total += term;
    else total -= term;
  }
  return total;
}

template <class T>
T pfaffian_parlett_reid(Matrix<T> a) {
  const std::size_t n = a.rows();
  const double scale = a.max_magnitude();
  T pf(1);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t kp = choose_pivot(a, k + 1, k, scale);
    if (kp == n) return T(0);
    if (kp != k + 1) {
      a.swap_rows(k + 1, kp);
      a.swap_cols(k + 1, kp);
      pf = -pf;
    }
    pf *= a(k, k + 1);
    if (k + 2 < n) {
      std::vector<T> tau(n, T(0));
      for (std::size_t i = k + 2; i < n; ++i) tau[i] = a(k, i) / a(k, k + 1);
      for (std::size_t i = k + 2; i < n; ++i)
        for (std::size_t j = k + 2; j < n; ++j)
          a(i, j) += tau[i] * a(j, k + 1) - a(i, k + 1) * tau[j];
    }
  }
  return pf;
}

}  // namespace detail

/// Largest dimension handled by the combinatorial expansion over perfect
/// matchings; beyond it the skew-symmetric Parlett–Reid elimination is used.
inline constexpr std::size_t kPfaffianExpansionLimit = 8;

template <class T>
T pfaffian(const Matrix<T>& m) {
  if (!m.is_square() || m.rows() % 2 != 0)
    throw Error(ErrorCode::OddDimension, "Pfaffian needs an even-dimensional square matrix");
  if (!is_antisymmetric(m)) throw Error(ErrorCode::NotAntisymmetric, "Pfaffian of a non-antisymmetric matrix");
  if (m.rows() <= kPfaffianExpansionLimit) {
    std::vector<std::size_t> idx(m.rows());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return detail::pfaffian_expand(m, idx);
  }
  return detail::pfaffian_parlett_reid(m);
}

/// Coefficients c[0..n] of det(λ·I − M) = Σ c[i] λ^i, by Faddeev–LeVerrier.
template <class T>
std::vector<T> characteristic_polynomial(const Matrix<T>& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -trace(Matrix<T>(m * mk)) / T(static_cast<long>(k));
  }
  return c;
}

}  // namespace ksym
