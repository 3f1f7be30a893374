#include "ksym/polynomial.hpp"

#include <sstream>

namespace ksym {

namespace {

void fill_exponents(std::size_t pos, unsigned remaining, Exponent& current, std::vector<Exponent>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (unsigned v = remaining + 1; v-- > 0;) {
    current[pos] = v;
    fill_exponents(pos + 1, remaining - v, current, out);
  }
}

}  // namespace

std::vector<Exponent> exponents_of_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Exponent> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent current(num_vars, 0);
  fill_exponents(0, degree, current, out);
  return out;
}

unsigned long long binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string exponent_key(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out;
}

Exponent parse_exponent_key(const std::string& key) {
  Exponent e;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::InvalidArgument, "bad exponent key \"" + key + "\"");
    e.push_back(static_cast<unsigned>(std::stoul(part)));
  }
  if (e.empty()) throw Error(ErrorCode::InvalidArgument, "empty exponent key");
  return e;
}

}  // namespace ksym
