#pragma once

#include <cstdint>
#include <random>

#include "ksym/matrix.hpp"

namespace ksym {

/// Seeded std::mt19937_64. Integers are mapped by modulo rather than through
/// std distributions, whose output differs between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
  }

  /// Integer vector with entries in [-bound, bound], never all zero.
  template <class T>
  Vector<T> integer_vector(std::size_t len, long bound) {
    Vector<T> v(len, T(0));
    bool nonzero = false;
    while (!nonzero) {
      for (auto& x : v) {
        const long e = uniform(-bound, bound);
        nonzero = nonzero || e != 0;
        x = T(e);
      }
    }
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ksym
