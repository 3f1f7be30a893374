#pragma once

// Homogeneous multivariate polynomials over any scalar backend, plus the
// interpolation routine that recovers one from a black-box evaluator.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ksym/error.hpp"
#include "ksym/matrix.hpp"

namespace ksym {

using Exponent = std::vector<unsigned>;

/// All exponent vectors of `num_vars` entries summing to `degree`, in
/// descending lexicographic order (t1^d first).
std::vector<Exponent> exponents_of_degree(std::size_t num_vars, unsigned degree);

/// Binomial coefficient as an unsigned 64-bit integer; caller keeps arguments small.
unsigned long long binomial(unsigned n, unsigned k);

std::string exponent_key(const Exponent& e);
Exponent parse_exponent_key(const std::string& key);

template <class T>
class HomogeneousPoly {
 public:
  using Terms = std::map<Exponent, T, std::greater<Exponent>>;

  HomogeneousPoly() = default;
  HomogeneousPoly(std::size_t num_vars, unsigned degree) : num_vars_(num_vars), degree_(degree) {}

  /// Σ G_ij t_i t_j for a symmetric Gram matrix.
  static HomogeneousPoly from_gram(const Matrix<T>& gram) {
    HomogeneousPoly q(gram.rows(), 2);
    for (std::size_t i = 0; i < gram.rows(); ++i)
      for (std::size_t j = i; j < gram.cols(); ++j) {
        Exponent e(gram.rows(), 0);
        ++e[i];
        ++e[j];
        q.add_term(e, i == j ? gram(i, i) : T(gram(i, j) + gram(j, i)));
      }
    return q;
  }

  static HomogeneousPoly constant(std::size_t num_vars, const T& value) {
    HomogeneousPoly c(num_vars, 0);
    c.add_term(Exponent(num_vars, 0), value);
    return c;
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  unsigned degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  T coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? T(0) : it->second;
  }

  /// Adds `coef` to the monomial; exact zeros are dropped so equality is structural.
  void add_term(const Exponent& e, const T& coef) {
    check_exponent(e);
    auto [it, inserted] = terms_.try_emplace(e, coef);
    if (!inserted) it->second += coef;
    if (it->second == T(0)) terms_.erase(it);
  }

  template <class U = T>
  U evaluate(const std::vector<U>& point) const {
    if (point.size() != num_vars_) throw Error(ErrorCode::InvalidArgument, "evaluation point has wrong length");
    U total(0);
    for (const auto& [e, c] : terms_) {
      U mono = scalar_cast<U>(c);
      for (std::size_t i = 0; i < num_vars_; ++i)
        for (unsigned p = 0; p < e[i]; ++p) mono *= point[i];
      total += mono;
    }
    return total;
  }

  HomogeneousPoly derivative(std::size_t var) const {
    HomogeneousPoly d(num_vars_, degree_ == 0 ? 0 : degree_ - 1);
    if (degree_ == 0) return d;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent f = e;
      --f[var];
      d.add_term(f, T(c * T(static_cast<long>(e[var]))));
    }
    return d;
  }

  HomogeneousPoly pow(unsigned n) const {
    HomogeneousPoly out = constant(num_vars_, T(1));
    HomogeneousPoly base = *this;
    while (n > 0) {
      if (n & 1u) out = out * base;
      n >>= 1;
      if (n > 0) base = base * base;
    }
    return out;
  }

  /// Symmetric Gram matrix of a quadratic: G_ii = coef(t_i²), G_ij = coef(t_i t_j)/2.
  Matrix<T> to_gram() const {
    if (degree_ != 2) throw Error(ErrorCode::InvalidArgument, "Gram matrix of a non-quadratic polynomial");
    Matrix<T> g(num_vars_, num_vars_);
    for (const auto& [e, c] : terms_) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < num_vars_; ++i)
        for (unsigned p = 0; p < e[i]; ++p) idx.push_back(i);
      if (idx[0] == idx[1]) {
        g(idx[0], idx[0]) = c;
      } else {
        T half = c / T(2);
        g(idx[0], idx[1]) = half;
        g(idx[1], idx[0]) = half;
      }
    }
    return g;
  }

  double max_magnitude() const {
    double best = 0.0;
    for (const auto& [e, c] : terms_) best = std::max(best, magnitude(c));
    return best;
  }

  /// Structural equality (exact) or coefficientwise agreement relative to the
  /// larger coefficient (float).
  bool agrees_with(const HomogeneousPoly& o) const {
    if (num_vars_ != o.num_vars_ || degree_ != o.degree_) return false;
    if constexpr (is_exact_v<T>) {
      return terms_ == o.terms_;
    } else {
      const double scale = std::max(max_magnitude(), o.max_magnitude());
      HomogeneousPoly diff = *this - o;
      for (const auto& [e, c] : diff.terms_)
        if (!agrees(c, T(0), scale)) return false;
      return true;
    }
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += scalar_to_string(c);
      for (std::size_t i = 0; i < num_vars_; ++i) {
        if (e[i] == 0) continue;
        out += "*t" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
      }
    }
    return out;
  }

  HomogeneousPoly& operator*=(const T& s) {
    if (s == T(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend HomogeneousPoly operator*(HomogeneousPoly a, const T& s) { return a *= s; }
  friend HomogeneousPoly operator*(const T& s, HomogeneousPoly a) { return a *= s; }

  friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) {
    a.check_compatible(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) {
    a.check_compatible(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, T(-c));
    return a;
  }
  friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (a.num_vars_ != b.num_vars_) throw Error(ErrorCode::InvalidArgument, "polynomial variable count mismatch");
    HomogeneousPoly out(a.num_vars_, a.degree_ + b.degree_);
    Exponent e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, T(ca * cb));
      }
    return out;
  }
  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  template <class U>
  HomogeneousPoly<U> cast() const {
    HomogeneousPoly<U> out(num_vars_, degree_);
    for (const auto& [e, c] : terms_) out.add_term(e, scalar_cast<U>(c));
    return out;
  }

 private:
  void check_exponent(const Exponent& e) const {
    if (e.size() != num_vars_) throw Error(ErrorCode::InvalidArgument, "exponent has wrong length");
    unsigned total = 0;
    for (unsigned x : e) total += x;
    if (total != degree_) throw Error(ErrorCode::InvalidArgument, "exponent " + exponent_key(e) + " is not of degree " + std::to_string(degree_));
  }
  void check_compatible(const HomogeneousPoly& o) const {
    if (num_vars_ != o.num_vars_ || degree_ != o.degree_)
      throw Error(ErrorCode::InvalidArgument, "adding polynomials of different shape");
  }

  std::size_t num_vars_ = 0;
  unsigned degree_ = 0;
  Terms terms_;
};

/// Recovers the homogeneous degree-d polynomial f in k variables from values
/// f(1, β) at the integer points β ∈ ℕ^{k−1} with |β| ≤ d. These
/// C(k+d−1, d) points are unisolvent for polynomials of total degree ≤ d in
/// the dehomogenised variables; Newton forward differences give the
/// coefficients in the binomial basis, which are then expanded to monomials.
template <class T>
HomogeneousPoly<T> interpolate_homogeneous(std::size_t k, unsigned d,
                                           const std::function<T(const Vector<T>&)>& fn) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "interpolation needs at least one variable");
  const std::vector<Exponent> exps = exponents_of_degree(k, d);

  // Keyed by the full exponent; the sample point is (1, e[1], ..., e[k-1]).
  std::map<Exponent, T> table;
  for (const Exponent& e : exps) {
    Vector<T> point(k, T(1));
    for (std::size_t j = 1; j < k; ++j) point[j] = T(static_cast<long>(e[j]));
    table.emplace(e, fn(point));
  }

  // Forward differences along each dehomogenised axis j; moving one step back
  // on axis j moves one unit of degree onto t1.
  for (std::size_t j = 1; j < k; ++j) {
    for (unsigned level = 1; level <= d; ++level) {
      std::vector<const Exponent*> order;
      for (const Exponent& e : exps)
        if (e[j] >= level) order.push_back(&e);
      std::sort(order.begin(), order.end(),
                [j](const Exponent* a, const Exponent* b) { return (*a)[j] > (*b)[j]; });
      for (const Exponent* e : order) {
        Exponent prev = *e;
        --prev[j];
        ++prev[0];
        table[*e] -= table[prev];
      }
    }
  }

  // binomial(x, b) = x(x-1)...(x-b+1) / b!, as coefficients of x^0..x^b.
  std::vector<std::vector<T>> binomial_basis(d + 1);
  for (unsigned b = 0; b <= d; ++b) {
    std::vector<long> falling{1};
    long factorial = 1;
    for (unsigned r = 0; r < b; ++r) {
      std::vector<long> next(falling.size() + 1, 0);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= static_cast<long>(r) * falling[i];
      }
      falling = std::move(next);
      factorial *= static_cast<long>(r + 1);
    }
    for (long c : falling) binomial_basis[b].push_back(T(c) / T(factorial));
  }

  HomogeneousPoly<T> out(k, d);
  for (const Exponent& e : exps) {
    const T& newton = table[e];
    if (newton == T(0)) continue;
    std::vector<std::pair<Exponent, T>> partial{{Exponent(k, 0), newton}};
    for (std::size_t j = 1; j < k; ++j) {
      std::vector<std::pair<Exponent, T>> next;
      const std::vector<T>& basis = binomial_basis[e[j]];
      for (const auto& [pe, pc] : partial)
        for (std::size_t i = 0; i < basis.size(); ++i) {
          if (basis[i] == T(0)) continue;
          Exponent ne = pe;
          ne[j] = static_cast<unsigned>(i);
          next.emplace_back(std::move(ne), T(pc * basis[i]));
        }
      partial = std::move(next);
    }
    for (auto& [pe, pc] : partial) {
      unsigned used = 0;
      for (std::size_t j = 1; j < k; ++j) used += pe[j];
      pe[0] = d - used;
      out.add_term(pe, pc);
    }
  }
  if constexpr (!is_exact_v<T>) {
    // interpolation noise: drop coefficients far below the largest one
    const double scale = out.max_magnitude();
    HomogeneousPoly<T> cleaned(k, d);
    for (const auto& [e, c] : out.terms())
      if (!negligible(c, scale)) cleaned.add_term(e, c);
    return cleaned;
  }
  return out;
}

}  // namespace ksym
