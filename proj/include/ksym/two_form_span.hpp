#pragma once

#include <cstddef>
#include <vector>

#include "ksym/error.hpp"
#include "ksym/linalg.hpp"

namespace ksym {

/// A k-dimensional space of antisymmetric bilinear forms on a space of
/// dimension dimV, held as k basis matrices.
template <class T>
struct TwoFormSpan {
  std::size_t dimV = 0;
  std::vector<Matrix<T>> forms;
  // complexification of a real span: every entry is real
  bool real_structure = !is_complex_v<T>;

  std::size_t k() const noexcept { return forms.size(); }

  /// Σ coeffs[i]·forms[i], over any scalar the entries convert into.
  template <class U = T>
  Matrix<U> combination(const std::vector<U>& coeffs) const {
    if (coeffs.size() != forms.size()) throw Error(ErrorCode::InvalidArgument, "coefficient vector has wrong length");
    Matrix<U> out(dimV, dimV);
    for (std::size_t f = 0; f < forms.size(); ++f) {
      if (coeffs[f] == U(0)) continue;
      for (std::size_t i = 0; i < dimV; ++i)
        for (std::size_t j = 0; j < dimV; ++j)
          if (forms[f](i, j) != T(0)) out(i, j) += coeffs[f] * scalar_cast<U>(forms[f](i, j));
    }
    return out;
  }

  /// Throws unless every form is dimV×dimV antisymmetric and the forms are
  /// linearly independent.
  void validate() const {
    if (forms.empty()) throw Error(ErrorCode::InvalidArgument, "span has no forms");
    for (std::size_t f = 0; f < forms.size(); ++f) {
      if (forms[f].rows() != dimV || forms[f].cols() != dimV)
        throw Error(ErrorCode::InvalidArgument, "form " + std::to_string(f) + " is not dimV x dimV");
      if (!is_antisymmetric(forms[f]))
        throw Error(ErrorCode::NotAntisymmetric, "form " + std::to_string(f) + " is not antisymmetric");
    }
    Matrix<T> stack(forms.size(), dimV * dimV);
    for (std::size_t f = 0; f < forms.size(); ++f)
      for (std::size_t i = 0; i < dimV * dimV; ++i) stack(f, i) = forms[f].values()[i];
    if (rank(stack) != forms.size()) throw Error(ErrorCode::RankDeficient, "forms are linearly dependent");
    if constexpr (is_complex_v<T>) {
      if (real_structure) {
        for (const auto& m : forms)
          for (const T& x : m.values())
            if (!is_real_value(x, m.max_magnitude()))
              throw Error(ErrorCode::NotReal, "span flagged real has a non-real entry");
      }
    }
  }

  template <class U>
  TwoFormSpan<U> cast() const {
    TwoFormSpan<U> out;
    out.dimV = dimV;
    out.real_structure = real_structure;
    for (const auto& m : forms) out.forms.push_back(m.template cast<U>());
    return out;
  }
};

}  // namespace ksym
