#pragma once

// Scalar types used by every numeric routine in the library.
//
//   Rational                      exact rational (GMP), always canonical
//   double                        64-bit float, compared through the tolerance policy
//   Complex<R>                    pair (re, im) over one of the real backends
//   QuadraticExtension<F>         a + b*sqrt(d) over an exact field F, used when a
//                                 computation needs the root of a quadratic
//
// Generic code talks to them through ScalarTraits<T> and the free helpers at
// the bottom of this header.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace ksym {

using Rational = mpq_class;

/// Tolerance policy for the float64 backend. Exact scalars never consult it.
namespace tolerance {
/// Elimination pivots below this fraction of the largest entry count as zero.
inline constexpr double kRankRelative = 1e-8;
/// Relative error allowed when checking an algebraic identity in floating point.
inline constexpr double kIdentityRelative = 1e-9;
}  // namespace tolerance

// ---------------------------------------------------------------------------
// Complex<R>

template <class R>
struct Complex {
  R re{0};
  R im{0};

  Complex() = default;
  Complex(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(int v) : re(v), im(0) {}   // NOLINT(google-explicit-constructor)
  Complex(R r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  Complex conj() const { return Complex(re, R(-im)); }
  R norm_squared() const { return R(re * re + im * im); }
  bool is_real() const { return im == R(0); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(R(a.re + b.re), R(a.im + b.im));
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(R(a.re - b.re), R(a.im - b.im));
  }
  friend Complex operator-(const Complex& a) { return Complex(R(-a.re), R(-a.im)); }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(R(a.re * b.re - a.im * b.im), R(a.re * b.im + a.im * b.re));
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    R den = b.norm_squared();
    if (den == R(0)) throw std::domain_error("complex division by zero");
    return Complex(R((a.re * b.re + a.im * b.im) / den), R((a.im * b.re - a.re * b.im) / den));
  }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

// ---------------------------------------------------------------------------
// Exact square roots inside a field, when they exist.

inline std::optional<Rational> exact_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
    return std::nullopt;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), x.get_den_mpz_t());
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::optional<Complex<Rational>> exact_sqrt(const Complex<Rational>& z) {
  if (z.im == 0) {
    if (auto r = exact_sqrt(z.re)) return Complex<Rational>(*r);
    if (auto r = exact_sqrt(Rational(-z.re))) return Complex<Rational>(Rational(0), *r);
    return std::nullopt;
  }
  // (u + iv)^2 = re + i im  =>  u^2 = (re + |z|)/2, v = im / (2u)
  auto modulus = exact_sqrt(z.norm_squared());
  if (!modulus) return std::nullopt;
  auto u = exact_sqrt(Rational((z.re + *modulus) / 2));
  if (!u || *u == 0) return std::nullopt;
  return Complex<Rational>(*u, Rational(z.im / (2 * *u)));
}

// ---------------------------------------------------------------------------
// QuadraticExtension<F>: the field F(sqrt(d)).
//
// Every element carries its radicand d. Elements with b == 0 are plain members
// of F and combine with any extension; combining two elements with b != 0 and
// different radicands is a logic error.

template <class F>
class QuadraticExtension {
 public:
  QuadraticExtension() : a_(0), b_(0), d_(0) {}
  QuadraticExtension(long v) : a_(v), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
  QuadraticExtension(int v) : a_(v), b_(0), d_(0) {}   // NOLINT(google-explicit-constructor)
  QuadraticExtension(F a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)

  /// sqrt(d) as a field element; collapses to F when d is a square in F.
  static QuadraticExtension sqrt_of(const F& d) {
    if (auto r = exact_sqrt(d)) return QuadraticExtension(*r);
    QuadraticExtension out;
    out.b_ = F(1);
    out.d_ = d;
    return out;
  }

  const F& rational_part() const { return a_; }
  const F& radical_part() const { return b_; }
  const F& radicand() const { return d_; }
  bool in_base_field() const { return b_ == F(0); }

  friend QuadraticExtension operator+(const QuadraticExtension& x, const QuadraticExtension& y) {
    return make(F(x.a_ + y.a_), F(x.b_ + y.b_), common_radicand(x, y));
  }
  friend QuadraticExtension operator-(const QuadraticExtension& x, const QuadraticExtension& y) {
    return make(F(x.a_ - y.a_), F(x.b_ - y.b_), common_radicand(x, y));
  }
  friend QuadraticExtension operator-(const QuadraticExtension& x) {
    return make(F(-x.a_), F(-x.b_), x.d_);
  }
  friend QuadraticExtension operator*(const QuadraticExtension& x, const QuadraticExtension& y) {
    const F& d = common_radicand(x, y);
    return make(F(x.a_ * y.a_ + x.b_ * y.b_ * d), F(x.a_ * y.b_ + x.b_ * y.a_), d);
  }
  friend QuadraticExtension operator/(const QuadraticExtension& x, const QuadraticExtension& y) {
    F norm = F(y.a_ * y.a_ - y.b_ * y.b_ * y.d_);
    if (norm == F(0)) throw std::domain_error("division by zero in quadratic extension");
    QuadraticExtension inv = make(F(y.a_ / norm), F(-y.b_ / norm), y.d_);
    return x * inv;
  }
  QuadraticExtension& operator+=(const QuadraticExtension& o) { return *this = *this + o; }
  QuadraticExtension& operator-=(const QuadraticExtension& o) { return *this = *this - o; }
  QuadraticExtension& operator*=(const QuadraticExtension& o) { return *this = *this * o; }
  QuadraticExtension& operator/=(const QuadraticExtension& o) { return *this = *this / o; }

  friend bool operator==(const QuadraticExtension& x, const QuadraticExtension& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.b_ == F(0) || x.d_ == y.d_;
  }
  friend bool operator!=(const QuadraticExtension& x, const QuadraticExtension& y) {
    return !(x == y);
  }

 private:
  static QuadraticExtension make(F a, F b, F d) {
    QuadraticExtension out;
    out.a_ = std::move(a);
    out.b_ = std::move(b);
    out.d_ = out.b_ == F(0) ? F(0) : std::move(d);
    return out;
  }
  static const F& common_radicand(const QuadraticExtension& x, const QuadraticExtension& y) {
    if (x.b_ == F(0)) return y.d_;
    if (y.b_ != F(0) && !(x.d_ == y.d_))
      throw std::logic_error("mixing elements of different quadratic extensions");
    return x.d_;
  }

  F a_;
  F b_;
  F d_;
};

// ---------------------------------------------------------------------------
// Traits

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool is_exact = false;
  static constexpr bool is_complex = false;
  static double magnitude(double x) { return std::abs(x); }
  static std::complex<double> approx(double x) { return x; }
  static std::string to_string(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
  }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_exact = true;
  static constexpr bool is_complex = false;
  static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
  static std::complex<double> approx(const Rational& x) { return x.get_d(); }
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <class R>
struct ScalarTraits<Complex<R>> {
  static constexpr bool is_exact = ScalarTraits<R>::is_exact;
  static constexpr bool is_complex = true;
  static double magnitude(const Complex<R>& z) {
    return std::hypot(ScalarTraits<R>::magnitude(z.re), ScalarTraits<R>::magnitude(z.im));
  }
  static std::complex<double> approx(const Complex<R>& z) {
    return {ScalarTraits<R>::approx(z.re).real(), ScalarTraits<R>::approx(z.im).real()};
  }
  static std::string to_string(const Complex<R>& z) {
    return "(" + ScalarTraits<R>::to_string(z.re) + "," + ScalarTraits<R>::to_string(z.im) + ")";
  }
};

template <class F>
struct ScalarTraits<QuadraticExtension<F>> {
  static constexpr bool is_exact = true;
  static constexpr bool is_complex = true;
  static std::complex<double> approx(const QuadraticExtension<F>& x) {
    std::complex<double> root = std::sqrt(ScalarTraits<F>::approx(x.radicand()));
    return ScalarTraits<F>::approx(x.rational_part()) +
           ScalarTraits<F>::approx(x.radical_part()) * root;
  }
  static double magnitude(const QuadraticExtension<F>& x) { return std::abs(approx(x)); }
  static std::string to_string(const QuadraticExtension<F>& x) {
    if (x.in_base_field()) return ScalarTraits<F>::to_string(x.rational_part());
    return ScalarTraits<F>::to_string(x.rational_part()) + " + " +
           ScalarTraits<F>::to_string(x.radical_part()) + "*sqrt(" +
           ScalarTraits<F>::to_string(x.radicand()) + ")";
  }
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::is_exact; };

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::is_exact;

template <class T>
inline constexpr bool is_complex_v = ScalarTraits<T>::is_complex;

template <class T>
double magnitude(const T& x) {
  return ScalarTraits<T>::magnitude(x);
}

template <class T>
std::string scalar_to_string(const T& x) {
  return ScalarTraits<T>::to_string(x);
}

/// Zero test under the tolerance policy: exact equality for exact scalars,
/// |x| <= kRankRelative * scale otherwise.
template <class T>
bool negligible(const T& x, double scale = 1.0) {
  if constexpr (is_exact_v<T>) {
    return x == T(0);
  } else {
    return magnitude(x) <= tolerance::kRankRelative * scale;
  }
}

/// Identity-check comparison: exact equality, or relative error within
/// kIdentityRelative against `scale` for floats.
template <class T>
bool agrees(const T& a, const T& b, double scale = 1.0) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    return magnitude(T(a - b)) <= tolerance::kIdentityRelative * std::max(1.0, scale);
  }
}

// ---------------------------------------------------------------------------
// Conversions between scalar types.

template <class To, class From>
To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_integral_v<From>) {
    return To(static_cast<long>(x));
  } else if constexpr (std::is_same_v<From, Rational> && std::is_same_v<To, double>) {
    return x.get_d();
  } else if constexpr (std::is_same_v<To, Complex<double>>) {
    if constexpr (std::is_same_v<From, Complex<Rational>>) {
      return Complex<double>(x.re.get_d(), x.im.get_d());
    } else {
      return Complex<double>(scalar_cast<double>(x));
    }
  } else if constexpr (std::is_same_v<To, Complex<Rational>> && std::is_same_v<From, Rational>) {
    return Complex<Rational>(x);
  } else if constexpr (std::is_same_v<To, QuadraticExtension<Rational>> &&
                       std::is_same_v<From, Rational>) {
    return QuadraticExtension<Rational>(x);
  } else if constexpr (std::is_same_v<To, QuadraticExtension<Complex<Rational>>>) {
    return QuadraticExtension<Complex<Rational>>(scalar_cast<Complex<Rational>>(x));
  } else {
    static_assert(sizeof(To) == 0, "unsupported scalar conversion");
  }
}

/// Real-valued view of a scalar when its imaginary part vanishes.
template <class T>
auto real_part(const T& x) {
  if constexpr (std::is_same_v<T, Complex<Rational>> || std::is_same_v<T, Complex<double>>) {
    return x.re;
  } else {
    return x;
  }
}

template <class T>
bool is_real_value(const T& x, double scale = 1.0) {
  if constexpr (std::is_same_v<T, Complex<Rational>> || std::is_same_v<T, Complex<double>>) {
    return negligible(x.im, scale);
  } else {
    return true;
  }
}

/// Sign of a real scalar; 0 for values the tolerance policy treats as zero.
template <class T>
int sign_of(const T& x, double scale = 1.0) {
  static_assert(!is_complex_v<T>, "sign of a complex scalar");
  if (negligible(x, scale)) return 0;
  return x > T(0) ? 1 : -1;
}

}  // namespace ksym
