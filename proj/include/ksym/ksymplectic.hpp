#pragma once

// Deciding whether a span of two-forms is k-symplectic: the Pfaffian
// polynomial, its factorisation p = c·qⁿ, null-cone rank checks, and the
// Clifford action induced by a non-null form.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksym/clifford_repr.hpp"
#include "ksym/linalg.hpp"
#include "ksym/polynomial.hpp"
#include "ksym/random.hpp"
#include "ksym/two_form_span.hpp"

namespace ksym {

template <class T>
struct QuadraticFormOnSpan {
  Matrix<T> gram;  // q(x) = xᵀ·gram·x
  T c{1};          // p = c·qⁿ
  std::string normalization;

  HomogeneousPoly<T> poly() const { return HomogeneousPoly<T>::from_gram(gram); }
  T value(const Vector<T>& x) const { return bilinear<T>(gram, x, x); }
  T pair(const Vector<T>& x, const Vector<T>& y) const { return bilinear<T>(gram, x, y); }
};

template <class U>
std::size_t kernel_dimension(const Matrix<U>& m) {
  return m.cols() - rank(m);
}

/// Pf(Σ t_i ω_i) as a degree-2n polynomial, by interpolation at integer points.
template <class T>
HomogeneousPoly<T> pfaffian_polynomial(const TwoFormSpan<T>& span) {
  if (span.dimV == 0 || span.dimV % 4 != 0)
    throw Error(ErrorCode::DimensionNotMultipleOf4, "dimV = " + std::to_string(span.dimV) + " is not a positive multiple of 4");
  const auto degree = static_cast<unsigned>(span.dimV / 2);
  return interpolate_homogeneous<T>(span.k(), degree,
                                    [&span](const Vector<T>& t) { return pfaffian(span.combination(t)); });
}

namespace detail {

/// Rows of the linear system n·p·∂q/∂t_v − q·∂p/∂t_v = 0 in the unknown
/// coefficients of q, one column per quadratic monomial in descending lex order.
template <class T>
std::vector<Vector<T>> quadric_system(const HomogeneousPoly<T>& p, unsigned n, const std::vector<Exponent>& monos) {
  const std::size_t k = p.num_vars();
  std::map<std::pair<std::size_t, Exponent>, Vector<T>> rows;
  const T nn(static_cast<long>(n));
  for (std::size_t v = 0; v < k; ++v) {
    const HomogeneousPoly<T> dp = p.derivative(v);
    for (std::size_t col = 0; col < monos.size(); ++col) {
      HomogeneousPoly<T> mono(k, 2);
      mono.add_term(monos[col], T(1));
      HomogeneousPoly<T> expr = (p * mono.derivative(v)) * nn - mono * dp;
      for (const auto& [e, c] : expr.terms()) {
        auto [it, inserted] = rows.try_emplace({v, e}, Vector<T>(monos.size(), T(0)));
        it->second[col] = c;
      }
    }
  }
  std::vector<Vector<T>> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

/// Nullspace of the stacked rows. Exact rows are eliminated one at a time and
/// the scan stops once one free column is left: any genuine solution lies in
/// that line, and the caller verifies it.
template <class T>
std::vector<Vector<T>> system_kernel(const std::vector<Vector<T>>& rows, std::size_t cols) {
  if constexpr (!is_exact_v<T>) {
    Matrix<T> m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return rank_kernel(m).kernel;
  } else {
    std::vector<Vector<T>> basis;
    std::vector<std::size_t> pivot_col;
    for (const Vector<T>& incoming : rows) {
      if (basis.size() + 1 >= cols) break;
      Vector<T> row = incoming;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const T f = row[pivot_col[b]];
        if (f == T(0)) continue;
        for (std::size_t j = 0; j < cols; ++j) row[j] -= f * basis[b][j];
      }
      std::size_t p = cols;
      for (std::size_t j = 0; j < cols; ++j)
        if (row[j] != T(0)) {
          p = j;
          break;
        }
      if (p == cols) continue;
      const T inv = T(1) / row[p];
      for (T& x : row) x *= inv;
      for (auto& other : basis) {
        const T f = other[p];
        if (f == T(0)) continue;
        for (std::size_t j = 0; j < cols; ++j) other[j] -= f * row[j];
      }
      basis.push_back(std::move(row));
      pivot_col.push_back(p);
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<Vector<T>> kernel;
    for (std::size_t f = 0; f < cols; ++f) {
      if (is_pivot[f]) continue;
      Vector<T> v(cols, T(0));
      v[f] = T(1);
      for (std::size_t b = 0; b < basis.size(); ++b) v[pivot_col[b]] = -basis[b][f];
      kernel.push_back(std::move(v));
    }
    return kernel;
  }
}

}  // namespace detail

/// Finds q and c with p = c·qⁿ, q scaled so its first nonzero coefficient in
/// descending lex order (t1², t1t2, ..., t2², ...) is 1.
template <class T>
QuadraticFormOnSpan<T> extract_quadric(const HomogeneousPoly<T>& p, unsigned n) {
  if (n == 0 || p.degree() != 2 * n)
    throw Error(ErrorCode::InvalidArgument, "polynomial degree " + std::to_string(p.degree()) + " is not 2n for n = " + std::to_string(n));
  if (p.is_zero()) throw Error(ErrorCode::AmbiguousFactor, "polynomial vanishes identically");
  const std::size_t k = p.num_vars();
  const std::vector<Exponent> monos = exponents_of_degree(k, 2);
  const std::vector<Vector<T>> kernel = detail::system_kernel(detail::quadric_system(p, n, monos), monos.size());
  if (kernel.empty()) throw Error(ErrorCode::NotAPower, "no quadric q satisfies n·p·dq = q·dp");
  if (kernel.size() > 1)
    throw Error(ErrorCode::AmbiguousFactor, "candidate quadrics form a " + std::to_string(kernel.size()) + "-dimensional family");

  const Vector<T>& sol = kernel.front();
  double sol_scale = 0.0;
  for (const T& x : sol) sol_scale = std::max(sol_scale, magnitude(x));
  std::size_t lead = monos.size();
  for (std::size_t i = 0; i < sol.size() && lead == monos.size(); ++i)
    if (!negligible(sol[i], sol_scale)) lead = i;
  HomogeneousPoly<T> q(k, 2);
  for (std::size_t i = 0; i < sol.size(); ++i)
    if (!negligible(sol[i], sol_scale)) q.add_term(monos[i], T(sol[i] / sol[lead]));

  const HomogeneousPoly<T> qn = q.pow(n);
  const double p_scale = p.max_magnitude();
  const Exponent* anchor = nullptr;
  for (const auto& [e, coef] : p.terms())
    if (!anchor || magnitude(coef) > magnitude(p.coefficient(*anchor))) {
      anchor = &e;
      if constexpr (is_exact_v<T>) break;
    }
  const T qn_anchor = qn.coefficient(*anchor);
  if (negligible(qn_anchor, qn.max_magnitude()))
    throw Error(ErrorCode::NotAPower, "q^n misses the monomial " + exponent_key(*anchor) + " present in p");
  const T c = p.coefficient(*anchor) / qn_anchor;

  const HomogeneousPoly<T> residual = qn * c - p;
  for (const auto& [e, coef] : residual.terms())
    if (!agrees(coef, T(0), p_scale))
      throw Error(ErrorCode::NotAPower, "coefficient of monomial " + exponent_key(e) + " differs by " +
                                            scalar_to_string(coef) + " between c*q^n and p");
  return {q.to_gram(), c, "leading lex coefficient of q is 1"};
}

// ---------------------------------------------------------------------------
// Null-cone sampling scalars: each exact sample lives in the quadratic
// extension generated by the root it needs; floats go through Complex<double>.

template <class T>
struct NullConeScalar;
template <>
struct NullConeScalar<Rational> {
  using type = QuadraticExtension<Rational>;
};
template <>
struct NullConeScalar<Complex<Rational>> {
  using type = QuadraticExtension<Complex<Rational>>;
};
template <>
struct NullConeScalar<double> {
  using type = Complex<double>;
};
template <>
struct NullConeScalar<Complex<double>> {
  using type = Complex<double>;
};

template <class T>
using null_cone_t = typename NullConeScalar<T>::type;

template <class T>
null_cone_t<T> square_root_of(const T& x) {
  using E = null_cone_t<T>;
  if constexpr (is_exact_v<T>) {
    return E::sqrt_of(x);
  } else {
    const std::complex<double> z = std::sqrt(ScalarTraits<T>::approx(x));
    return E(z.real(), z.imag());
  }
}

/// A nonzero point z with q(z) = 0: z = x + λy for random integer x, y, where
/// λ is a root of q(y)λ² + 2B(x,y)λ + q(x). `sign` picks the root.
template <class T>
std::optional<Vector<null_cone_t<T>>> sample_null_point(const Matrix<T>& gram, Rng& rng, int sign) {
  using E = null_cone_t<T>;
  const std::size_t k = gram.rows();
  const double scale = gram.max_magnitude();
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Vector<T> x = rng.integer_vector<T>(k, 9);
    const Vector<T> y = rng.integer_vector<T>(k, 9);
    const T qx = bilinear<T>(gram, x, x);
    const T qy = bilinear<T>(gram, y, y);
    const T bxy = bilinear<T>(gram, x, y);
    if (negligible(qy, scale)) continue;
    const E root = square_root_of<T>(T(bxy * bxy - qx * qy));
    const E lambda = (scalar_cast<E>(T(-bxy)) + (sign < 0 ? -root : root)) / scalar_cast<E>(qy);
    Vector<E> z(k);
    bool nonzero = false;
    double z_scale = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      z[i] = scalar_cast<E>(x[i]) + lambda * scalar_cast<E>(y[i]);
      z_scale = std::max(z_scale, magnitude(z[i]));
    }
    for (const E& zi : z) nonzero = nonzero || !negligible(zi, std::max(1.0, z_scale));
    if (nonzero) return z;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reports

struct Witness {
  std::vector<std::string> coefficients;
  std::size_t kernel_dim = 0;
  std::string source;
};

template <class T>
struct KSymplecticReport {
  bool is_k_symplectic = false;
  std::size_t k = 0;
  std::size_t dimV = 0;
  std::size_t n = 0;
  std::optional<QuadraticFormOnSpan<T>> q;
  bool q_nondegenerate = false;
  std::size_t q_rank = 0;
  std::optional<Inertia> signature;  // real q only; minuses-first
  std::optional<std::size_t> null_lines;  // k = 2 only, over ℂ
  std::string method;
  std::size_t samples_checked = 0;
  std::vector<Witness> witnesses;
  std::string certificate;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 100;
};

template <class U>
std::vector<std::string> to_strings(const Vector<U>& v) {
  std::vector<std::string> out;
  for (const U& x : v) out.push_back(scalar_to_string(x));
  return out;
}

/// Real-valued copy of a matrix whose entries have vanishing imaginary part.
template <class T>
auto real_matrix(const Matrix<T>& m) {
  using R = decltype(real_part(std::declval<T>()));
  Matrix<R> out(m.rows(), m.cols());
  const double scale = m.max_magnitude();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_real_value(m(i, j), scale)) throw Error(ErrorCode::NotReal, "matrix has a non-real entry");
      out(i, j) = real_part(m(i, j));
    }
  return out;
}

template <class T>
bool gram_is_real(const Matrix<T>& g) {
  const double scale = g.max_magnitude();
  for (const T& x : g.values())
    if (!is_real_value(x, scale)) return false;
  return true;
}

/// Signature of q in the minuses-first convention (r minuses, s pluses, z zeros).
template <class T>
Inertia real_signature(const TwoFormSpan<T>& span, const QuadraticFormOnSpan<T>& q) {
  if (!span.real_structure) throw Error(ErrorCode::NotReal, "span carries no real structure");
  if (!gram_is_real(q.gram)) throw Error(ErrorCode::NotReal, "q has non-real coefficients");
  return signature(real_matrix(q.gram));
}

namespace detail {

template <class T>
void scan_for_witnesses(const TwoFormSpan<T>& span, std::size_t n, const VerifyOptions& opt,
                        KSymplecticReport<T>& report) {
  const std::size_t k = span.k();
  auto check = [&](const Vector<T>& coeffs, const std::string& source) {
    const std::size_t kd = kernel_dimension(span.combination(coeffs));
    if (kd != 0 && kd != 2 * n) report.witnesses.push_back({to_strings(coeffs), kd, source});
  };
  for (std::size_t i = 0; i < k; ++i) {
    Vector<T> e(k, T(0));
    e[i] = T(1);
    check(e, "basis form " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (int sgn : {1, -1}) {
        Vector<T> e(k, T(0));
        e[i] = T(1);
        e[j] = T(sgn);
        check(e, std::string("form ") + std::to_string(i + 1) + (sgn > 0 ? " + " : " - ") + "form " + std::to_string(j + 1));
      }
  Rng rng(opt.seed);
  for (std::size_t s = 0; s < opt.samples; ++s) check(rng.integer_vector<T>(k, 9), "random combination");
}

}  // namespace detail

/// Decides the k-symplectic property: factor p = c·qⁿ, then either apply the
/// rank lemma (q nondegenerate) or check null forms directly (q degenerate).
/// Null-cone samples are checked in both cases.
template <class T>
KSymplecticReport<T> verify_ksymplectic(const TwoFormSpan<T>& span, const VerifyOptions& opt = {}) {
  span.validate();
  KSymplecticReport<T> report;
  report.k = span.k();
  report.dimV = span.dimV;
  const HomogeneousPoly<T> p = pfaffian_polynomial(span);
  const std::size_t n = span.dimV / 4;
  report.n = n;
  const std::size_t k = span.k();

  if (p.is_zero()) {
    if (k == 1) {
      const std::size_t kd = kernel_dimension(span.forms.front());
      report.method = "single degenerate form";
      report.is_k_symplectic = kd == 2 * n;
      if (!report.is_k_symplectic) report.witnesses.push_back({{"1"}, kd, "basis form 1"});
      report.certificate = "Pfaffian vanishes; a single form qualifies exactly when its kernel has dimension 2n";
      return report;
    }
    report.method = "Pfaffian vanishes";
    report.certificate = "every form in the span is degenerate, so no nonzero quadric cuts out the degenerate locus";
    detail::scan_for_witnesses(span, n, opt, report);
    return report;
  }

  QuadraticFormOnSpan<T> q;
  try {
    q = extract_quadric(p, static_cast<unsigned>(n));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAPower && e.code() != ErrorCode::AmbiguousFactor) throw;
    report.method = "not a power of a quadric";
    report.certificate = e.what();
    detail::scan_for_witnesses(span, n, opt, report);
    return report;
  }

  if (span.real_structure && gram_is_real(q.gram)) {
    Inertia in = signature(real_matrix(q.gram));
    if (in.pluses > in.minuses) {
      // orient so that definite spans come out negative definite
      q.gram = -q.gram;
      if (n % 2 == 1) q.c = -q.c;
      std::swap(in.pluses, in.minuses);
      q.normalization = "leading lex coefficient of q is -1 (oriented so minuses >= pluses)";
    }
    report.signature = in;
  }
  report.q_rank = rank(q.gram);
  report.q_nondegenerate = report.q_rank == k;
  if (k == 2) report.null_lines = report.q_rank == 2 ? 2 : 1;

  bool ok = true;
  auto record = [&](std::size_t kd, std::vector<std::string> coeffs, const std::string& source) {
    if (kd == 2 * n) return;
    ok = false;
    report.witnesses.push_back({std::move(coeffs), kd, source});
  };

  if (k >= 2) {
    Rng rng(opt.seed);
    for (std::size_t s = 0; s < opt.samples; ++s) {
      auto z = sample_null_point<T>(q.gram, rng, s % 2 == 0 ? 1 : -1);
      if (!z) continue;
      record(kernel_dimension(span.combination(*z)), to_strings(*z), "null-cone sample");
      ++report.samples_checked;
    }
  }
  if (report.q_nondegenerate) {
    report.method = "nondegenerate q: rank lemma, confirmed by null-cone samples";
  } else {
    report.method = "degenerate q: direct rank checks on null forms";
    for (const Vector<T>& r : rank_kernel(q.gram).kernel)
      record(kernel_dimension(span.combination(r)), to_strings(r), "radical of q");
  }
  report.is_k_symplectic = ok;
  report.q = std::move(q);
  return report;
}

// ---------------------------------------------------------------------------
// Clifford action of a k-symplectic span

template <class T>
struct CliffordAction {
  CliffordModule<T> module;
  Vector<T> omega1;                      // coefficients of ω₁
  std::vector<Vector<T>> complement;     // q-orthogonal basis of ω₁^⊥
  T q_omega1{0};
};

/// q-orthogonal basis of the given vectors' span, by Gram–Schmidt with
/// pivoting; an isotropic pair u, w with B(u,w) ≠ 0 is replaced by u + w.
template <class T>
std::vector<Vector<T>> orthogonalize(const Matrix<T>& gram, std::vector<Vector<T>> vs) {
  std::vector<Vector<T>> out;
  const double scale = gram.max_magnitude();
  auto B = [&](const Vector<T>& a, const Vector<T>& b) { return bilinear<T>(gram, a, b); };
  while (!vs.empty()) {
    std::size_t pick = vs.size();
    double best = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const T qi = B(vs[i], vs[i]);
      if (negligible(qi, scale)) continue;
      if constexpr (is_exact_v<T>) {
        pick = i;
        break;
      } else if (magnitude(qi) > best) {
        best = magnitude(qi);
        pick = i;
      }
    }
    if (pick == vs.size()) {
      for (std::size_t a = 0; a < vs.size() && pick == vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
          if (!negligible(B(vs[a], vs[b]), scale)) {
            for (std::size_t i = 0; i < vs[a].size(); ++i) vs[a][i] += vs[b][i];
            pick = a;
            break;
          }
    }
    if (pick == vs.size()) {
      // what is left spans the radical of the restricted form
      for (auto& v : vs) out.push_back(std::move(v));
      break;
    }
    Vector<T> w = std::move(vs[pick]);
    vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(pick));
    const T qw = B(w, w);
    for (auto& v : vs) {
      const T f = B(v, w) / qw;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * w[i];
    }
    out.push_back(std::move(w));
  }
  return out;
}

/// Generators A_j = ω₁⁻¹·w_j for a q-orthogonal basis w_j of ω₁^⊥; they satisfy
/// A_j² = −q(w_j)/q(ω₁)·Id and anticommute pairwise.
template <class T>
CliffordAction<T> clifford_action(const TwoFormSpan<T>& span, const QuadraticFormOnSpan<T>& q,
                                  const Vector<T>& omega1_coeffs) {
  const std::size_t k = span.k();
  if (omega1_coeffs.size() != k) throw Error(ErrorCode::InvalidArgument, "omega1 coefficient vector has wrong length");
  CliffordAction<T> out;
  out.omega1 = omega1_coeffs;
  out.q_omega1 = q.value(omega1_coeffs);
  if (negligible(out.q_omega1, q.gram.max_magnitude()))
    throw Error(ErrorCode::DegenerateOmega1, "q(omega1, omega1) = 0");
  const Matrix<T> w1 = span.combination(omega1_coeffs);
  if (kernel_dimension(w1) != 0) throw Error(ErrorCode::NonInvertible, "omega1 is degenerate");
  const Matrix<T> w1_inv = inverse(w1);

  Matrix<T> constraint(1, k);
  const Vector<T> gx = q.gram * omega1_coeffs;
  for (std::size_t i = 0; i < k; ++i) constraint(0, i) = gx[i];
  out.complement = orthogonalize(q.gram, rank_kernel(constraint).kernel);

  const std::size_t m = out.complement.size();
  out.module.gram = Matrix<T>(m, m);
  unsigned minus = 0, plus = 0;
  for (std::size_t j = 0; j < m; ++j) {
    out.module.generators.push_back(w1_inv * span.combination(out.complement[j]));
    const T g = T(-q.value(out.complement[j])) / out.q_omega1;
    out.module.gram(j, j) = g;
    if constexpr (!is_complex_v<T>) {
      const int sg = sign_of(g, 1.0);
      if (sg < 0) ++minus;
      else if (sg > 0) ++plus;
    } else {
      if (!negligible(g, 1.0)) ++plus;
    }
  }
  out.module.signature = {minus, plus};
  return out;
}

/// First basis vector with q ≠ 0 (largest |q| for floats), else a seeded
/// random integer combination.
template <class T>
Vector<T> choose_omega1(const QuadraticFormOnSpan<T>& q, std::uint64_t seed = 0) {
  const std::size_t k = q.gram.rows();
  const double scale = q.gram.max_magnitude();
  std::optional<Vector<T>> best;
  double best_mag = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    Vector<T> e(k, T(0));
    e[i] = T(1);
    const T v = q.value(e);
    if (negligible(v, scale)) continue;
    if constexpr (is_exact_v<T>) return e;
    if (magnitude(v) > best_mag) {
      best_mag = magnitude(v);
      best = e;
    }
  }
  if (best) return *best;
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vector<T> x = rng.integer_vector<T>(k, 9);
    if (!negligible(q.value(x), scale)) return x;
  }
  throw Error(ErrorCode::DegenerateOmega1, "q vanishes on every sampled form");
}

// ---------------------------------------------------------------------------
// Smaller constructions

template <class T>
struct Substructure {
  TwoFormSpan<T> span;
  std::string caveat;
};

/// Sub-span spanned by the rows of `coeffs` (k' × k, full row rank).
template <class T>
Substructure<T> substructure(const TwoFormSpan<T>& span, const Matrix<T>& coeffs) {
  if (coeffs.cols() != span.k()) throw Error(ErrorCode::InvalidArgument, "coefficient matrix has wrong width");
  if (coeffs.rows() == 0 || rank(coeffs) != coeffs.rows())
    throw Error(ErrorCode::RankDeficient, "coefficient rows are linearly dependent");
  Substructure<T> out;
  out.span.dimV = span.dimV;
  out.span.real_structure = span.real_structure;
  for (std::size_t i = 0; i < coeffs.rows(); ++i) out.span.forms.push_back(span.combination(coeffs.row(i)));
  out.caveat = "a substructure of a nondegenerate structure may itself be degenerate";
  return out;
}

/// 2^⌊(k−1)/2⌋: the complex dimension of V is a multiple of this.
unsigned long long dimension_bound(unsigned k);

/// The pair π₁*ω, π₂*ω on W ⊕ W.
template <class T>
TwoFormSpan<T> direct_sum_2symplectic(const Matrix<T>& omega) {
  if (!omega.is_square() || !is_antisymmetric(omega) || kernel_dimension(omega) != 0)
    throw Error(ErrorCode::DegenerateInput, "omega must be an antisymmetric nondegenerate form");
  const Matrix<T> zero(omega.rows(), omega.cols());
  TwoFormSpan<T> out;
  out.dimV = 2 * omega.rows();
  out.forms = {block_diagonal(omega, zero), block_diagonal(zero, omega)};
  return out;
}

}  // namespace ksym
