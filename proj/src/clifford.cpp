#include "ksym/clifford.hpp"

namespace ksym {

namespace {

unsigned long long pow2(unsigned e) { return 1ULL << e; }

unsigned ring_dim(BaseRing ring, ScalarField field) {
  if (field == ScalarField::Complex) return 1;
  switch (ring) {
    case BaseRing::Real: return 1;
    case BaseRing::Complex: return 2;
    case BaseRing::Quaternion: return 4;
  }
  return 1;
}

AlgebraDescription real_table(unsigned r, unsigned s) {
  const unsigned n = r + s;
  const unsigned index = ((s + 8 * (r / 8 + 1)) - r) % 8;
  AlgebraDescription d;
  d.field = ScalarField::Real;
  auto one = [&](unsigned long long size, BaseRing ring) { d.summands = {{size, ring}}; };
  auto two = [&](unsigned long long size, BaseRing ring) { d.summands = {{size, ring}, {size, ring}}; };
  switch (index) {
    case 0:
    case 2: one(pow2(n / 2), BaseRing::Real); break;
    case 1: two(pow2((n - 1) / 2), BaseRing::Real); break;
    case 3:
    case 7: one(pow2((n - 1) / 2), BaseRing::Complex); break;
    case 4:
    case 6: one(pow2((n - 2) / 2), BaseRing::Quaternion); break;
    case 5: two(pow2((n - 3) / 2), BaseRing::Quaternion); break;
  }
  return d;
}

AlgebraDescription complex_table(unsigned n) {
  AlgebraDescription d;
  d.field = ScalarField::Complex;
  if (n % 2 == 0) {
    d.summands = {{pow2(n / 2), BaseRing::Complex}};
  } else {
    d.summands = {{pow2((n - 1) / 2), BaseRing::Complex}, {pow2((n - 1) / 2), BaseRing::Complex}};
  }
  return d;
}

}  // namespace

std::string to_string(BaseRing ring) {
  switch (ring) {
    case BaseRing::Real: return "R";
    case BaseRing::Complex: return "C";
    case BaseRing::Quaternion: return "H";
  }
  return "?";
}

unsigned long long AlgebraDescription::dimension() const {
  unsigned long long total = 0;
  for (const Summand& m : summands) total += m.size * m.size * ring_dim(m.ring, field);
  return total;
}

std::string AlgebraDescription::to_string() const {
  std::string out;
  for (const Summand& m : summands) {
    if (!out.empty()) out += " + ";
    out += "Mat(" + std::to_string(m.size) + "," + ksym::to_string(m.ring) + ")";
  }
  return out;
}

AlgebraDescription classify(Signature sig, bool even_only, ScalarField field) {
  if (field == ScalarField::Complex) {
    const unsigned n = sig.dim();
    return complex_table(even_only && n > 0 ? n - 1 : n);
  }
  if (!even_only) return real_table(sig.r, sig.s);
  if (sig.r > 0) return real_table(sig.r - 1, sig.s);
  if (sig.s > 0) return real_table(sig.s - 1, 0);
  return real_table(0, 0);
}

unsigned long long minimal_module_dim(Signature sig, ScalarField field, bool even_only) {
  const AlgebraDescription d = classify(sig, even_only, field);
  const Summand& first = d.summands.front();
  return first.size * ring_dim(first.ring, field);
}

}  // namespace ksym
