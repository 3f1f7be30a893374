#pragma once

// Matrix representations of Cl(r,s): gamma matrices, the relation checker,
// the invariant metric obtained by averaging over the blade group, and the
// induced span of two-forms.

#include <cstddef>
#include <string>
#include <vector>

#include "ksym/clifford.hpp"
#include "ksym/linalg.hpp"
#include "ksym/two_form_span.hpp"

namespace ksym {

template <class T>
struct CliffordModule {
  Signature signature;
  std::vector<Matrix<T>> generators;
  Matrix<T> gram;  // diagonal for every module built here

  std::size_t dimension() const { return generators.empty() ? 0 : generators.front().rows(); }
};

/// Generators of the minimal real module of Cl(r,s), minus generators first.
/// Entries are 0 and ±1; each generator is a signed permutation matrix.
std::vector<Matrix<Rational>> gamma_generators(Signature sig);

template <class T>
CliffordModule<T> gamma_representation(Signature sig, std::size_t copies) {
  if (copies == 0) throw Error(ErrorCode::InvalidArgument, "module needs at least one copy");
  CliffordModule<T> mod;
  mod.signature = sig;
  for (const Matrix<Rational>& g : gamma_generators(sig)) {
    std::vector<Matrix<T>> blocks(copies, g.template cast<T>());
    mod.generators.push_back(block_diagonal<T>(std::span<const Matrix<T>>(blocks)));
  }
  mod.gram = Matrix<T>(sig.dim(), sig.dim());
  for (unsigned i = 0; i < sig.dim(); ++i) mod.gram(i, i) = i < sig.r ? T(-1) : T(1);
  return mod;
}

struct RelationFailure {
  std::size_t i = 0;
  std::size_t j = 0;
  double deviation = 0.0;
};

struct RelationReport {
  bool pass = true;
  double max_deviation = 0.0;
  std::vector<RelationFailure> failures;
};

/// Checks ρ_iρ_j + ρ_jρ_i = 2·gram_ij·Id for every pair i ≤ j.
template <class T>
RelationReport verify_clifford_relations(const CliffordModule<T>& mod) {
  RelationReport report;
  const std::size_t n = mod.dimension();
  const std::size_t k = mod.generators.size();
  if (k == 0 || mod.gram.rows() != k) {
    report.pass = false;
    return report;
  }
  double scale = 1.0;
  for (const auto& g : mod.generators) scale = std::max(scale, g.max_magnitude() * g.max_magnitude());
  const Matrix<T> id = Matrix<T>::identity(n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Matrix<T> anti = mod.generators[i] * mod.generators[j] + mod.generators[j] * mod.generators[i];
      Matrix<T> expected = id * T(T(2) * mod.gram(i, j));
      const double dev = max_deviation(anti, expected);
      report.max_deviation = std::max(report.max_deviation, dev);
      bool ok;
      if constexpr (is_exact_v<T>) ok = anti == expected;
      else ok = dev <= tolerance::kIdentityRelative * scale;
      if (!ok) {
        report.pass = false;
        report.failures.push_back({i, j, dev});
      }
    }
  bool nontrivial = false;
  for (const auto& g : mod.generators) nontrivial = nontrivial || g.max_magnitude() > 0.0;
  if (!nontrivial) report.pass = false;
  return report;
}

/// Average of ρ_Bᵀ·base·ρ_B over the 2^k blade products ρ_B; the sign ±ρ_B
/// does not change the summand, so this is the average over the blade group.
template <class T>
Matrix<T> invariant_metric(const CliffordModule<T>& mod, const Matrix<T>& base) {
  static_assert(!is_complex_v<T>, "invariant metric is built for real modules");
  const std::size_t k = mod.generators.size();
  const Inertia in = signature(mod.gram);
  if (in.minuses != k) throw Error(ErrorCode::NotNegativeDefinite, "generating quadratic form must be negative definite");
  const std::size_t n = mod.dimension();
  std::vector<Matrix<T>> blade(std::size_t{1} << k);
  blade[0] = Matrix<T>::identity(n);
  Matrix<T> sum(n, n);
  for (std::size_t mask = 0; mask < blade.size(); ++mask) {
    if (mask != 0) {
      const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
      blade[mask] = mod.generators[low] * blade[mask & (mask - 1)];
    }
    sum += blade[mask].transpose() * base * blade[mask];
  }
  sum *= T(1) / T(static_cast<long>(blade.size()));
  return sum;
}

template <class T>
Matrix<T> invariant_metric(const CliffordModule<T>& mod) {
  return invariant_metric(mod, Matrix<T>::identity(mod.dimension()));
}

/// ω_i(u, v) = g(ρ_i u, v), i.e. the matrix ρ_iᵀ·g.
template <class T>
TwoFormSpan<T> embed_forms(const CliffordModule<T>& mod, const Matrix<T>& g) {
  TwoFormSpan<T> span;
  span.dimV = mod.dimension();
  const double scale = g.max_magnitude();
  for (std::size_t i = 0; i < mod.generators.size(); ++i) {
    const Matrix<T>& rho = mod.generators[i];
    Matrix<T> lhs = rho.transpose() * g;
    Matrix<T> rhs = -(g * rho);
    bool ok;
    if constexpr (is_exact_v<T>) ok = lhs == rhs;
    else ok = max_deviation(lhs, rhs) <= tolerance::kIdentityRelative * std::max(1.0, scale * rho.max_magnitude());
    if (!ok) throw Error(ErrorCode::NotSkewAdjoint, "generator " + std::to_string(i) + " is not skew-adjoint for g");
    span.forms.push_back(std::move(lhs));
  }
  return span;
}

/// Smallest copies' ≥ copies with copies'·minimal_dim divisible by 4.
std::size_t padded_copies(Signature sig, std::size_t copies);

/// Negative-definite construction: gamma matrices, averaged metric, induced forms,
/// with the number of copies padded so that dimV is a multiple of 4.
template <class T>
TwoFormSpan<T> construct_span(unsigned r, std::size_t copies) {
  const Signature sig{r, 0};
  const CliffordModule<T> mod = gamma_representation<T>(sig, padded_copies(sig, copies));
  return embed_forms(mod, invariant_metric(mod));
}

}  // namespace ksym
