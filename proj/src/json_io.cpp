#include "ksym/json_io.hpp"

#include <regex>

namespace ksym {

Rational parse_rational(const std::string& text, const std::string& field) {
  static const std::regex fraction(R"(^\s*([+-]?\d+)(?:/(\d+))?\s*$)");
  static const std::regex decimal(R"(^\s*([+-]?)(\d*)\.(\d+)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    mpz_class num(m[1].str(), 10);
    mpz_class den(m[2].matched ? m[2].str() : std::string("1"), 10);
    if (den == 0) throw InputError(field, "zero denominator in \"" + text + "\"");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (std::regex_match(text, m, decimal)) {
    const std::string digits = m[2].str() + m[3].str();
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, m[3].length());
    Rational r(num, den);
    r.canonicalize();
    return m[1].str() == "-" ? Rational(-r) : r;
  }
  throw InputError(field, "\"" + text + "\" is not a rational number");
}

std::string span_scalars(const Json& j) {
  if (!j.is_object() || !j.contains("scalars")) return "real";
  if (!j["scalars"].is_string()) throw InputError("scalars", "expected \"real\" or \"complex\"");
  const std::string s = j["scalars"].get<std::string>();
  if (s != "real" && s != "complex") throw InputError("scalars", "expected \"real\" or \"complex\", got \"" + s + "\"");
  return s;
}

Json algebra_to_json(Signature sig, bool even_only, ScalarField field) {
  const AlgebraDescription d = classify(sig, even_only, field);
  Json summands = Json::array();
  for (const Summand& m : d.summands) {
    Json sj;
    sj["size"] = m.size;
    sj["ring"] = m.ring == BaseRing::Real ? "real" : m.ring == BaseRing::Complex ? "complex" : "quaternion";
    summands.push_back(std::move(sj));
  }
  Json out;
  out["signature"] = signature_to_json(sig);
  out["even_only"] = even_only;
  out["scalars"] = field == ScalarField::Real ? "real" : "complex";
  out["description"] = d.to_string();
  out["summands"] = std::move(summands);
  out["dimension"] = d.dimension();
  out["minimal_module_dim"] = minimal_module_dim(sig, field, even_only);
  return out;
}

Json verdict_to_json(const ObstructionVerdict& v) {
  Json sigs = Json::array();
  for (Signature s : v.clifford_signatures) sigs.push_back(signature_to_json(s));
  Json out;
  out["b2"] = v.b2;
  out["manifold_dimC"] = v.manifold_dimC;
  out["bbf_signature"] = signature_to_json(v.bbf_signature);
  out["naive_torus_bound"] = v.naive_torus_bound;
  out["refined_applies"] = v.refined_applies;
  out["clifford_signatures"] = std::move(sigs);
  out["refined_b1_bound"] = v.refined_b1_bound;
  out["refined_torus_dimC_bound"] = v.refined_torus_dimC_bound;
  out["max_proper_subvariety_dimC"] = v.max_proper_subvariety_dimC;
  out["torus_possible"] = v.torus_possible;
  out["narrative"] = v.narrative;
  return out;
}

}  // namespace ksym
