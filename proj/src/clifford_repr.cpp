#include "ksym/clifford_repr.hpp"

#include <array>
#include <string_view>

namespace ksym {

namespace {

using Gens = std::vector<Matrix<Rational>>;

// 2×2 letters: X and Z square to +1, E squares to -1, and the three pairwise
// anticommute. A word such as "IEX" is the Kronecker product I ⊗ E ⊗ X.
Matrix<Rational> letter(char c) {
  switch (c) {
    case 'I': return {{1, 0}, {0, 1}};
    case 'X': return {{0, 1}, {1, 0}};
    case 'Z': return {{1, 0}, {0, -1}};
    case 'E': return {{0, 1}, {-1, 0}};
  }
  throw Error(ErrorCode::InvalidArgument, std::string("unknown gamma letter ") + c);
}

Matrix<Rational> word(std::string_view w) {
  Matrix<Rational> out = Matrix<Rational>::identity(1);
  for (char c : w) out = kronecker(out, letter(c));
  return out;
}

// Minimal-dimension generators of Cl(a,0), a = 1..8 (all square to -1).
const std::array<std::vector<std::string_view>, 9> kMinusSeeds = {{
    {},
    {"E"},
    {"IE", "EX"},
    {"IE", "EX", "EZ"},
    {"IIE", "IEX", "XEZ", "ZEZ"},
    {"IIE", "IEX", "XEZ", "ZEZ", "EIZ"},
    {"IIE", "IEX", "XEZ", "ZEZ", "EIZ", "EXX"},
    {"IIE", "IEX", "XEZ", "ZEZ", "EIZ", "EXX", "EZX"},
    {"IIIE", "IIEX", "IXEZ", "IZEZ", "IEIZ", "IEXX", "XEZX", "ZEZX"},
}};

// Minimal-dimension generators of Cl(0,b), b = 1..8 (all square to +1).
const std::array<std::vector<std::string_view>, 9> kPlusSeeds = {{
    {},
    {""},
    {"X", "Z"},
    {"IX", "IZ", "EE"},
    {"IIX", "IIZ", "IEE", "EXE"},
    {"IIX", "IIZ", "IEE", "EXE", "EZE"},
    {"IIIX", "IIIZ", "IIEE", "IEXE", "XEZE", "ZEZE"},
    {"IIIX", "IIIZ", "IIEE", "IEXE", "XEZE", "ZEZE", "EIZE"},
    {"IIIX", "IIIZ", "IIEE", "IEXE", "XEZE", "ZEZE", "EIZE", "EXXE"},
}};

Gens seed(unsigned count, bool minus) {
  Gens out;
  for (std::string_view w : (minus ? kMinusSeeds : kPlusSeeds)[count]) out.push_back(word(w));
  return out;
}

// Generators of Cl(a,0) (minus) or Cl(0,a) (plus) for any a, using period 8:
// old generators γ ⊗ ω8 together with I ⊗ δ_j, where δ_j generate the 8-seed
// and ω8 is their product (ω8² = +1, ω8 anticommutes with every δ_j).
Gens one_sided(unsigned count, bool minus) {
  if (count <= 8) return seed(count, minus);
  const Gens inner = one_sided(count - 8, minus);
  const Gens eight = seed(8, minus);
  Matrix<Rational> volume = Matrix<Rational>::identity(eight.front().rows());
  for (const auto& d : eight) volume = volume * d;
  const Matrix<Rational> id = Matrix<Rational>::identity(inner.front().rows());
  Gens out;
  for (const auto& g : inner) out.push_back(kronecker(g, volume));
  for (const auto& d : eight) out.push_back(kronecker(id, d));
  return out;
}

}  // namespace

std::vector<Matrix<Rational>> gamma_generators(Signature sig) {
  const unsigned t = std::min(sig.r, sig.s);
  Gens minus, plus;
  if (sig.r > t) minus = one_sided(sig.r - t, true);
  if (sig.s > t) plus = one_sided(sig.s - t, false);
  std::size_t dim = !minus.empty() ? minus.front().rows() : !plus.empty() ? plus.front().rows() : 1;

  // Cl(a+1, b+1) ≅ Cl(a, b) ⊗ Mat(2, R): γ ↦ γ ⊗ Z, then add I ⊗ E and I ⊗ X.
  const Matrix<Rational> z = letter('Z'), e = letter('E'), x = letter('X');
  for (unsigned step = 0; step < t; ++step) {
    const Matrix<Rational> id = Matrix<Rational>::identity(dim);
    for (auto& g : minus) g = kronecker(g, z);
    for (auto& g : plus) g = kronecker(g, z);
    minus.push_back(kronecker(id, e));
    plus.push_back(kronecker(id, x));
    dim *= 2;
  }
  Gens out = std::move(minus);
  out.insert(out.end(), plus.begin(), plus.end());
  return out;
}

std::size_t padded_copies(Signature sig, std::size_t copies) {
  const unsigned long long d = minimal_module_dim(sig);
  std::size_t m = std::max<std::size_t>(copies, 1);
  while ((m * d) % 4 != 0) ++m;
  return m;
}

}  // namespace ksym
