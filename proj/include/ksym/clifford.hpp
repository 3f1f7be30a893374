#pragma once

// The real Clifford algebra Cl(r,s) on an orthonormal basis e_1..e_{r+s}:
// the first r generators square to -1, the remaining s to +1.
// A multivector stores one coefficient per basis blade; blade bitmask bit i
// stands for e_{i+1}, and the canonical blade is the increasing product.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ksym/error.hpp"
#include "ksym/scalar.hpp"

namespace ksym {

struct Signature {
  unsigned r = 0;  // generators squaring to -1
  unsigned s = 0;  // generators squaring to +1

  unsigned dim() const noexcept { return r + s; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

using Blade = std::uint32_t;

inline unsigned grade_of(Blade b) noexcept { return static_cast<unsigned>(std::popcount(b)); }

/// e_a · e_b = blade_sign(a, b) · e_{a xor b}.
inline int blade_sign(Blade a, Blade b, Signature sig) {
  int swaps = 0;
  for (Blade rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  int sign = (swaps & 1) ? -1 : 1;
  const Blade minus_mask = sig.r >= 32 ? ~Blade{0} : ((Blade{1} << sig.r) - 1);
  if (std::popcount(a & b & minus_mask) & 1) sign = -sign;
  return sign;
}

template <class T>
class Multivector {
 public:
  Multivector() = default;
  explicit Multivector(Signature sig) : sig_(sig), coeffs_(std::size_t{1} << sig.dim(), T(0)) {
    if (sig.dim() > 20) throw Error(ErrorCode::InvalidArgument, "Clifford algebra too large to store densely");
  }

  static Multivector scalar(Signature sig, const T& v) { return blade(sig, 0, v); }
  static Multivector basis_vector(Signature sig, unsigned i) { return blade(sig, Blade{1} << i, T(1)); }
  static Multivector blade(Signature sig, Blade mask, const T& v) {
    Multivector m(sig);
    m.at(mask) = v;
    return m;
  }
  /// Σ coords[i] e_{i+1}
  static Multivector vector(Signature sig, const std::vector<T>& coords) {
    Multivector m(sig);
    for (unsigned i = 0; i < coords.size(); ++i) m.at(Blade{1} << i) = coords[i];
    return m;
  }

  Signature signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<T>& coefficients() const noexcept { return coeffs_; }
  T& at(Blade b) { return coeffs_.at(b); }
  const T& at(Blade b) const { return coeffs_.at(b); }

  Multivector grade_part(unsigned g) const {
    return filtered([g](Blade b) { return grade_of(b) == g; });
  }
  Multivector even_part() const {
    return filtered([](Blade b) { return grade_of(b) % 2 == 0; });
  }
  Multivector odd_part() const {
    return filtered([](Blade b) { return grade_of(b) % 2 == 1; });
  }
  bool is_zero() const {
    for (const T& c : coeffs_)
      if (c != T(0)) return false;
    return true;
  }
  /// True when every nonzero coefficient sits on a blade of grade g.
  bool is_homogeneous(unsigned g) const {
    for (Blade b = 0; b < coeffs_.size(); ++b)
      if (coeffs_[b] != T(0) && grade_of(b) != g) return false;
    return true;
  }

  /// Multiplies each blade coefficient by sign(grade).
  template <class F>
  Multivector graded_sign(F&& sign) const {
    Multivector out = *this;
    for (Blade b = 0; b < coeffs_.size(); ++b)
      if (sign(grade_of(b)) < 0) out.coeffs_[b] = -out.coeffs_[b];
    return out;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
  }
  friend Multivector operator-(Multivector a, const Multivector& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
  }
  friend Multivector operator-(Multivector a) {
    for (T& c : a.coeffs_) c = -c;
    return a;
  }
  friend Multivector operator*(const T& s, Multivector a) {
    for (T& c : a.coeffs_) c *= s;
    return a;
  }
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check(b);
    Multivector out(a.sig_);
    for (Blade x = 0; x < a.coeffs_.size(); ++x) {
      if (a.coeffs_[x] == T(0)) continue;
      for (Blade y = 0; y < b.coeffs_.size(); ++y) {
        if (b.coeffs_[y] == T(0)) continue;
        T term = a.coeffs_[x] * b.coeffs_[y];
        if (blade_sign(x, y, a.sig_) < 0) out.coeffs_[x ^ y] -= term;
        else out.coeffs_[x ^ y] += term;
      }
    }
    return out;
  }
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

 private:
  void check(const Multivector& o) const {
    if (!(sig_ == o.sig_)) throw Error(ErrorCode::SignatureMismatch, "multivectors from different algebras");
  }
  template <class P>
  Multivector filtered(P&& keep) const {
    Multivector out(sig_);
    for (Blade b = 0; b < coeffs_.size(); ++b)
      if (keep(b)) out.coeffs_[b] = coeffs_[b];
    return out;
  }

  Signature sig_;
  std::vector<T> coeffs_;
};

template <class T>
Multivector<T> geometric_product(const Multivector<T>& a, const Multivector<T>& b) {
  return a * b;
}

template <class T>
struct Involutions {
  Multivector<T> tau;        // +1 on even grades, -1 on odd
  Multivector<T> transpose;  // reverses every blade
  Multivector<T> bar;        // tau after transpose
};

template <class T>
Multivector<T> tau(const Multivector<T>& a) {
  return a.graded_sign([](unsigned g) { return g % 2 == 0 ? 1 : -1; });
}

template <class T>
Multivector<T> transpose(const Multivector<T>& a) {
  return a.graded_sign([](unsigned g) { return (g * (g - 1) / 2) % 2 == 0 ? 1 : -1; });
}

template <class T>
Multivector<T> bar(const Multivector<T>& a) {
  return tau(transpose(a));
}

template <class T>
Involutions<T> involutions(const Multivector<T>& a) {
  return {tau(a), transpose(a), bar(a)};
}

/// Identifies Cl(W) with the even subalgebra, W the orthogonal complement of
/// a unit vector omega1 (omega1² = -1): η ↦ η⁰ + omega1·η¹.
/// Elements of Cl(W) are exactly those with omega1·η = τ(η)·omega1.
template <class T>
Multivector<T> even_subalgebra_iso(const Multivector<T>& omega1, const Multivector<T>& eta) {
  const Signature sig = omega1.signature();
  if (!omega1.is_homogeneous(1) || omega1 * omega1 != Multivector<T>::scalar(sig, T(-1)))
    throw Error(ErrorCode::NotUnitVector, "omega1 must be a vector squaring to -1");
  if (omega1 * eta != tau(eta) * omega1)
    throw Error(ErrorCode::NotOrthogonal, "element does not lie in the algebra generated by the complement of omega1");
  return eta.even_part() + omega1 * eta.odd_part();
}

// ---------------------------------------------------------------------------
// Classification of Cl(r,s) and its even part as matrix algebras.

enum class BaseRing { Real, Complex, Quaternion };
enum class ScalarField { Real, Complex };

struct Summand {
  unsigned long long size = 1;
  BaseRing ring = BaseRing::Real;

  friend bool operator==(const Summand&, const Summand&) = default;
};

struct AlgebraDescription {
  ScalarField field = ScalarField::Real;
  std::vector<Summand> summands;

  /// Dimension over the scalar field: 2^(r+s), or 2^(r+s-1) for the even part.
  unsigned long long dimension() const;
  std::string to_string() const;

  friend bool operator==(const AlgebraDescription&, const AlgebraDescription&) = default;
};

std::string to_string(BaseRing ring);

/// Real classification follows the mod-8 table in s - r; complex algebras
/// depend only on the parity of r + s. The even part of Cl(r,s) is Cl(r-1,s)
/// when r > 0 and Cl(s-1,0) otherwise.
AlgebraDescription classify(Signature sig, bool even_only, ScalarField field = ScalarField::Real);

/// Dimension over the scalar field of the smallest nontrivial module: one
/// simple summand's column space.
unsigned long long minimal_module_dim(Signature sig, ScalarField field = ScalarField::Real, bool even_only = false);

}  // namespace ksym
