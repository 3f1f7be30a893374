#include <doctest.h>

#include "ksym/linalg.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ksym;

namespace {

Matrix<Rational> low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  return oracle::random_matrix(rng, rows, r) * oracle::random_matrix(rng, r, cols);
}

Matrix<Rational> random_symmetric(Rng& rng, std::size_t n) {
  Matrix<Rational> a = oracle::random_matrix(rng, n, n);
  return a + a.transpose();
}

}  // namespace

TEST_CASE("determinant agrees with Laplace expansion") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    const Matrix<Rational> m = oracle::random_matrix(rng, n, n);
    CHECK(determinant(m) == oracle::det_laplace(m));
  }
}

TEST_CASE("float determinant tracks the exact one") {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix<Rational> m = oracle::random_matrix(rng, 5, 5);
    const double exact = oracle::det_laplace(m).get_d();
    CHECK(determinant(m.cast<double>()) == doctest::Approx(exact).epsilon(1e-9));
  }
}

TEST_CASE("rank agrees with Gram-Schmidt on products of known rank") {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 7));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 7));
    const auto inner = static_cast<std::size_t>(rng.uniform(1, 4));
    const Matrix<Rational> m = low_rank(rng, rows, cols, inner);
    CHECK(rank(m) == oracle::rank_gram_schmidt(m));
    CHECK(rank(m.cast<double>()) == oracle::rank_gram_schmidt(m));
  }
}

TEST_CASE("kernel vectors are annihilated and count the nullity") {
  Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix<Rational> m = low_rank(rng, 5, 6, static_cast<std::size_t>(rng.uniform(1, 4)));
    const RankKernel<Rational> rk = rank_kernel(m);
    CHECK(rk.kernel.size() == m.cols() - rk.rank);
    for (const auto& v : rk.kernel) {
      const Vector<Rational> image = m * v;
      for (const Rational& x : image) CHECK(x == 0);
    }
  }
}

TEST_CASE("inverse multiplies to the identity and rejects singular input") {
  Rng rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix<Rational> m = oracle::random_invertible(rng, 4);
    CHECK(m * inverse(m) == Matrix<Rational>::identity(4));
  }
  const Matrix<Rational> singular = {{1, 2}, {2, 4}};
  CHECK(support::error_code_of([&] { inverse(singular); }) == ErrorCode::NonInvertible);
}

TEST_CASE("Pfaffian squares to the Laplace determinant") {
  Rng rng(16);
  for (std::size_t n = 2; n <= 8; n += 2)
    for (int trial = 0; trial < 8; ++trial) {
      const Matrix<Rational> a = oracle::random_antisymmetric(rng, n);
      const Rational pf = pfaffian(a);
      CHECK(pf * pf == oracle::det_laplace(a));
    }
}

TEST_CASE("Pfaffian on large matrices: block product and congruence") {
  Rng rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    const Matrix<Rational> a = oracle::random_antisymmetric(rng, 6);
    const Matrix<Rational> b = oracle::random_antisymmetric(rng, 6);
    CHECK(pfaffian(block_diagonal(a, b)) == pfaffian(a) * pfaffian(b));

    const Matrix<Rational> big = oracle::random_antisymmetric(rng, 10);
    const Matrix<Rational> p = oracle::random_matrix(rng, 10, 10, 2);
    CHECK(pfaffian(p.transpose() * big * p) == determinant(p) * pfaffian(big));
  }
  CHECK(pfaffian(oracle::standard_symplectic(12)) == 1);
}

TEST_CASE("Pfaffian rejects odd and non-antisymmetric input") {
  CHECK(support::error_code_of([] { pfaffian(Matrix<Rational>(3, 3)); }) == ErrorCode::OddDimension);
  const Matrix<Rational> m = {{0, 1}, {1, 0}};
  CHECK(support::error_code_of([&] { pfaffian(m); }) == ErrorCode::NotAntisymmetric);
}

TEST_CASE("signature of a diagonal form counts signs, minuses first") {
  const Matrix<Rational> d = {{-2, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}};
  const Inertia in = signature(d);
  CHECK(in.minuses == 2);
  CHECK(in.pluses == 1);
  CHECK(in.zeros == 1);
}

TEST_CASE("signature is invariant under congruence") {
  Rng rng(18);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 6));
    Matrix<Rational> d(n, n);
    std::size_t minus = 0, plus = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const long v = rng.uniform(-2, 2);
      d(i, i) = v;
      minus += v < 0;
      plus += v > 0;
    }
    const Matrix<Rational> p = oracle::random_invertible(rng, n);
    const Matrix<Rational> s = p.transpose() * d * p;
    const Inertia exact = signature(s);
    CHECK(exact.minuses == minus);
    CHECK(exact.pluses == plus);
    CHECK(exact.zeros == n - minus - plus);
    const Inertia approx = signature(s.cast<double>());
    CHECK(approx.minuses == minus);
    CHECK(approx.pluses == plus);
  }
}

TEST_CASE("signature handles zero diagonals through 2x2 pivots") {
  const Matrix<Rational> hyperbolic = {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}};
  const Inertia in = signature(hyperbolic);
  CHECK(in.minuses == 1);
  CHECK(in.pluses == 1);
  CHECK(in.zeros == 1);
  CHECK(support::error_code_of([] { signature(Matrix<Rational>{{0, 1}, {2, 0}}); }) == ErrorCode::NonSymmetric);
}

TEST_CASE("characteristic polynomial satisfies Cayley-Hamilton") {
  Rng rng(19);
  for (int trial = 0; trial < 15; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    const Matrix<Rational> m = oracle::random_matrix(rng, n, n);
    const std::vector<Rational> c = characteristic_polynomial(m);
    REQUIRE(c.size() == n + 1);
    CHECK(c[n] == 1);
    CHECK(c[n - 1] == -trace(m));
    CHECK(c[0] == ((n % 2 == 0) ? oracle::det_laplace(m) : Rational(-oracle::det_laplace(m))));
    Matrix<Rational> power = Matrix<Rational>::identity(n);
    Matrix<Rational> sum(n, n);
    for (std::size_t i = 0; i <= n; ++i) {
      Matrix<Rational> term = power;
      term *= c[i];
      sum += term;
      power = power * m;
    }
    CHECK(sum == Matrix<Rational>(n, n));
  }
}

TEST_CASE("random symmetric matrices: float and exact signatures agree") {
  Rng rng(20);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix<Rational> s = random_symmetric(rng, 5);
    const Inertia a = signature(s);
    const Inertia b = signature(s.cast<double>());
    CHECK(a.minuses == b.minuses);
    CHECK(a.pluses == b.pluses);
    CHECK(a.zeros == b.zeros);
  }
}
