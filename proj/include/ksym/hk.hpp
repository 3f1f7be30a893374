#pragma once

// Hyperkähler application layer: the Fujiki relation ∫η^{2n} = c·q(η)ⁿ on an
// abstract intersection model, the Beauville expression for q, the pairing
// identity for classes of trianalytic subvarieties, and the torus verdicts.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksym/clifford.hpp"
#include "ksym/ksymplectic.hpp"

namespace ksym {

/// Symmetric multilinear form evaluated on a list of classes.
template <class T>
using MultilinearEvaluator = std::function<T(const std::vector<Vector<T>>&)>;

template <class T>
struct IntersectionModel {
  std::size_t b2 = 0;
  unsigned n = 0;                       // real dimension of the manifold is 4n
  HomogeneousPoly<T> top_poly;          // η ↦ ∫η^{2n}
  std::optional<Vector<T>> kahler_class;
  MultilinearEvaluator<T> multilinear;  // ∫x₁⋯x_{2n}; empty when absent
};

/// The symmetric multilinear form whose diagonal is p:
/// F(x₁..x_d) = (1/d!)·Σ_S (−1)^{d−|S|}·p(Σ_{i∈S} x_i).
template <class T>
MultilinearEvaluator<T> polarization(const HomogeneousPoly<T>& p) {
  return [p](const std::vector<Vector<T>>& xs) {
    const std::size_t d = xs.size();
    if (d != p.degree()) throw Error(ErrorCode::InvalidArgument, "polarization needs exactly degree-many arguments");
    T total(0);
    long factorial = 1;
    for (std::size_t i = 2; i <= d; ++i) factorial *= static_cast<long>(i);
    for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
      Vector<T> sum(p.num_vars(), T(0));
      for (std::size_t i = 0; i < d; ++i)
        if (mask >> i & 1u)
          for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += xs[i][j];
      const T value = p.evaluate(sum);
      if ((d - static_cast<std::size_t>(std::popcount(mask))) % 2 == 0) total += value;
      else total -= value;
    }
    return T(total / T(factorial));
  };
}

/// Extracts (q, c) from the top-degree polynomial. The overall sign of q is
/// fixed by q(κ) > 0 for a supplied Kähler class κ, else by c > 0 when n is odd.
template <class T>
QuadraticFormOnSpan<T> fujiki_extract(const IntersectionModel<T>& model) {
  static_assert(!is_complex_v<T>, "intersection models are real");
  if (model.top_poly.is_zero()) throw Error(ErrorCode::InvalidArgument, "top_poly vanishes");
  QuadraticFormOnSpan<T> q = extract_quadric(model.top_poly, model.n);
  auto flip = [&] {
    q.gram = -q.gram;
    if (model.n % 2 == 1) q.c = -q.c;
  };
  if (model.kahler_class) {
    const int s = sign_of(q.value(*model.kahler_class), q.gram.max_magnitude());
    if (s == 0) throw Error(ErrorCode::SignAmbiguous, "Kahler class is q-isotropic");
    if (s < 0) flip();
    q.normalization = "scaled so that q(kahler_class) > 0; leading lex coefficient of q is +-1";
  } else if (model.n % 2 == 1) {
    if (sign_of(q.c, 1.0) < 0) flip();
    q.normalization = "scaled so that c > 0; leading lex coefficient of q is +-1";
  } else {
    throw Error(ErrorCode::SignAmbiguous, "n is even and no Kahler class was supplied");
  }
  return q;
}

/// Beauville's expression for q(η) with Ω = a + i·b, written with the real
/// classes a, b and homogenised so Ω needs no normalisation:
///   N·(n/2)·∫η²(ΩΩ̄)^{n−1} + (1−n)·|∫η·Ω^{n−1}Ω̄ⁿ|²,   N = ∫(ΩΩ̄)ⁿ.
template <class T>
T bbf_from_ring(const IntersectionModel<T>& model, const Vector<T>& omega_re, const Vector<T>& omega_im,
                const Vector<T>& eta) {
  if (!model.multilinear) throw Error(ErrorCode::MissingMultilinearData, "model has no multilinear evaluator");
  const unsigned n = model.n;
  auto F = [&](std::size_t etas, std::size_t as, std::size_t bs) {
    std::vector<Vector<T>> args;
    args.insert(args.end(), etas, eta);
    args.insert(args.end(), as, omega_re);
    args.insert(args.end(), bs, omega_im);
    return model.multilinear(args);
  };
  auto binom = [](unsigned a, unsigned b) { return T(static_cast<long>(binomial(a, b))); };
  T norm(0), t1(0), pa(0), pb(0);
  for (unsigned j = 0; j <= n; ++j) norm += binom(n, j) * F(0, 2 * j, 2 * (n - j));
  for (unsigned j = 0; j + 1 <= n; ++j) {
    const T w = binom(n - 1, j);
    t1 += w * F(2, 2 * j, 2 * (n - 1 - j));
    pa += w * F(1, 2 * j + 1, 2 * (n - 1 - j));
    pb += w * F(1, 2 * j, 2 * (n - 1 - j) + 1);
  }
  const T half_n = T(static_cast<long>(n)) / T(2);
  const T one_minus_n = T(1L - static_cast<long>(n));
  return T(norm * half_n * t1 + one_minus_n * (pa * pa + pb * pb));
}

/// γ·α^{2m−1}·β as a function of (α, β).
template <class T>
using PairingEvaluator = std::function<T(const Vector<T>&, const Vector<T>&)>;

template <class T>
struct PairingReport {
  T c_gamma{0};
  Vector<T> reference_alpha;
  std::size_t pairs_checked = 0;
  double max_residual = 0.0;
  bool all_zero = true;  // every residual exactly zero (exact) or within tolerance (float)
};

/// Fits c_γ in γ·α^{2m−1}·β = c_γ·q(α)^{m−1}·q(α,β) at one non-null α, then
/// checks the identity on seeded random pairs.
template <class T>
PairingReport<T> pairing_check(const PairingEvaluator<T>& gamma, unsigned m, const QuadraticFormOnSpan<T>& q,
                               std::uint64_t seed = 0, std::size_t pairs = 50) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be at least 1");
  const std::size_t b2 = q.gram.rows();
  PairingReport<T> report;
  auto power = [](T x, unsigned e) {
    T out(1);
    for (unsigned i = 0; i < e; ++i) out *= x;
    return out;
  };
  try {
    report.reference_alpha = choose_omega1(q, seed);
  } catch (const Error&) {
    throw Error(ErrorCode::NoNonNullAlpha, "q vanishes on every candidate alpha");
  }
  const Vector<T>& a0 = report.reference_alpha;
  report.c_gamma = gamma(a0, a0) / power(q.value(a0), m);

  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  double scale = 0.0;
  std::vector<std::pair<T, T>> values;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Vector<T> a = rng.integer_vector<T>(b2, 9);
    const Vector<T> b = rng.integer_vector<T>(b2, 9);
    const T lhs = gamma(a, b);
    const T rhs = report.c_gamma * power(q.value(a), m - 1) * q.pair(a, b);
    scale = std::max({scale, magnitude(lhs), magnitude(rhs)});
    values.emplace_back(lhs, rhs);
  }
  for (const auto& [lhs, rhs] : values) {
    report.max_residual = std::max(report.max_residual, magnitude(T(lhs - rhs)));
    if (!agrees(lhs, rhs, scale)) report.all_zero = false;
  }
  report.pairs_checked = values.size();
  return report;
}

template <class T>
struct KernelConsistency {
  bool consistent = true;            // β may lie in the kernel of the restriction
  std::optional<Vector<T>> witness;  // α with q(α) ≠ 0 and q(α,β) ≠ 0
};

/// If β restricts to zero, the pairing identity forces q(α,β) = 0 for every
/// α with q(α) ≠ 0, hence Gβ = 0. Any β with Gβ ≠ 0 is refuted by a witness α.
template <class T>
KernelConsistency<T> kernel_consistency(const QuadraticFormOnSpan<T>& q, const Vector<T>& beta) {
  KernelConsistency<T> out;
  const std::size_t k = q.gram.rows();
  const Vector<T> gb = q.gram * beta;
  bool zero = true;
  for (const T& x : gb) zero = zero && negligible(x, q.gram.max_magnitude());
  if (zero) return out;
  out.consistent = false;
  // try e_i, then e_i + e_j: one of them is non-null and pairs nontrivially
  std::vector<Vector<T>> candidates;
  for (std::size_t i = 0; i < k; ++i) {
    Vector<T> e(k, T(0));
    e[i] = T(1);
    candidates.push_back(e);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (long s : {1L, 2L}) {
        Vector<T> e(k, T(0));
        e[i] = T(1);
        e[j] = T(s);
        candidates.push_back(e);
      }
  for (const auto& a : candidates)
    if (!negligible(q.value(a)) && !negligible(q.pair(a, beta))) {
      out.witness = a;
      break;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Verdicts

/// 2^(⌊(b2−1)/2⌋ − 1): lower bound on the complex dimension of a trianalytic torus.
unsigned long long torus_bound(unsigned b2);

struct ObstructionVerdict {
  unsigned b2 = 0;
  unsigned manifold_dimC = 0;
  Signature bbf_signature;  // minuses-first: (b2 − 3, 3)
  unsigned long long naive_torus_bound = 0;
  bool refined_applies = false;
  std::vector<Signature> clifford_signatures;  // (r−1, s) and (s−1, r)
  unsigned long long refined_b1_bound = 0;
  unsigned long long refined_torus_dimC_bound = 0;
  unsigned max_proper_subvariety_dimC = 0;
  bool torus_possible = true;
  std::string narrative;
};

ObstructionVerdict ogrady_verdict(unsigned b2, unsigned manifold_dimC);

/// A factor of b2_candidate can carry the restriction of the ambient form only
/// when b2_candidate ≥ b2_ambient.
bool b2_comparison_verdict(unsigned b2_ambient, unsigned b2_candidate);

}  // namespace ksym
