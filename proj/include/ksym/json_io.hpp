#pragma once

// JSON encodings. Exact rationals are strings "p/q", doubles are numbers,
// complex scalars are two-element arrays [re, im], matrices are arrays of rows.
// Decoding errors name the offending field with a JSON-pointer-like path.

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "ksym/clifford.hpp"
#include "ksym/clifford_repr.hpp"
#include "ksym/hk.hpp"
#include "ksym/ksymplectic.hpp"

namespace ksym {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  InputError(const std::string& field, const std::string& problem)
      : std::runtime_error(field + ": " + problem), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Parses "p", "p/q" or a plain decimal "x.y" exactly; throws InputError.
Rational parse_rational(const std::string& text, const std::string& field);

template <class T>
Json scalar_to_json(const T& x) {
  if constexpr (std::is_same_v<T, Rational>) {
    return x.get_str();
  } else if constexpr (std::is_same_v<T, double>) {
    return x == 0.0 ? 0.0 : x;  // no negative zero in output
  } else {
    return Json::array({scalar_to_json(x.re), scalar_to_json(x.im)});
  }
}

template <class T>
T scalar_from_json(const Json& j, const std::string& field) {
  if constexpr (std::is_same_v<T, Rational>) {
    if (j.is_string()) return parse_rational(j.get<std::string>(), field);
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_float()) {
      Rational r(j.get<double>());
      r.canonicalize();
      return r;
    }
    throw InputError(field, "expected a number or a rational string");
  } else if constexpr (std::is_same_v<T, double>) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return parse_rational(j.get<std::string>(), field).get_d();
    throw InputError(field, "expected a number");
  } else {
    using R = decltype(T{}.re);
    if (j.is_array()) {
      if (j.size() != 2) throw InputError(field, "complex scalar must be [re, im]");
      return T(scalar_from_json<R>(j[0], field + "[0]"), scalar_from_json<R>(j[1], field + "[1]"));
    }
    return T(scalar_from_json<R>(j, field));
  }
}

template <class T>
Json matrix_to_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
Matrix<T> matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw InputError(field, "expected a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw InputError(field + "[0]", "expected a nonempty row");
  const std::size_t cols = j[0].size();
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rf = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != cols) throw InputError(rf, "row length differs from row 0");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json<T>(j[i][c], rf + "[" + std::to_string(c) + "]");
  }
  return m;
}

template <class T>
Json vector_to_json(const Vector<T>& v) {
  Json out = Json::array();
  for (const T& x : v) out.push_back(scalar_to_json(x));
  return out;
}

template <class T>
Vector<T> vector_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw InputError(field, "expected an array");
  Vector<T> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from_json<T>(j[i], field + "[" + std::to_string(i) + "]"));
  return v;
}

inline Json signature_to_json(Signature s) { return Json::array({s.r, s.s}); }

// --- TwoFormSpan --------------------------------------------------------------

template <class T>
Json span_to_json(const TwoFormSpan<T>& span) {
  Json forms = Json::array();
  for (const auto& f : span.forms) forms.push_back(matrix_to_json(f));
  Json out;
  out["dimV"] = span.dimV;
  out["forms"] = std::move(forms);
  out["scalars"] = is_complex_v<T> ? "complex" : "real";
  out["real_structure"] = span.real_structure;
  return out;
}

template <class T>
TwoFormSpan<T> span_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("(root)", "expected an object");
  if (!j.contains("dimV") || !j["dimV"].is_number_unsigned()) throw InputError("dimV", "expected a positive integer");
  if (!j.contains("forms") || !j["forms"].is_array() || j["forms"].empty())
    throw InputError("forms", "expected a nonempty array of matrices");
  TwoFormSpan<T> span;
  span.dimV = j["dimV"].get<std::size_t>();
  for (std::size_t f = 0; f < j["forms"].size(); ++f) {
    const std::string field = "forms[" + std::to_string(f) + "]";
    Matrix<T> m = matrix_from_json<T>(j["forms"][f], field);
    if (m.rows() != span.dimV || m.cols() != span.dimV)
      throw InputError(field, "expected a " + std::to_string(span.dimV) + "x" + std::to_string(span.dimV) + " matrix");
    if (!is_antisymmetric(m)) throw InputError(field, "matrix is not antisymmetric");
    span.forms.push_back(std::move(m));
  }
  if (j.contains("real_structure")) {
    if (!j["real_structure"].is_boolean()) throw InputError("real_structure", "expected a boolean");
    span.real_structure = j["real_structure"].get<bool>();
  }
  return span;
}

/// "real" or "complex" from a span document (default real).
std::string span_scalars(const Json& j);

// --- Multivector and CliffordModule --------------------------------------------

template <class T>
Json multivector_to_json(const Multivector<T>& m) {
  Json coeffs = Json::object();
  for (Blade b = 0; b < m.size(); ++b)
    if (m.at(b) != T(0)) coeffs[std::to_string(b)] = scalar_to_json(m.at(b));
  Json out;
  out["signature"] = signature_to_json(m.signature());
  out["coeffs"] = std::move(coeffs);
  return out;
}

template <class T>
Multivector<T> multivector_from_json(const Json& j) {
  if (!j.contains("signature") || !j["signature"].is_array() || j["signature"].size() != 2)
    throw InputError("signature", "expected [r, s]");
  const Signature sig{j["signature"][0].get<unsigned>(), j["signature"][1].get<unsigned>()};
  Multivector<T> m(sig);
  if (j.contains("coeffs")) {
    for (const auto& [key, value] : j["coeffs"].items()) {
      const std::string field = "coeffs." + key;
      if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
        throw InputError(field, "blade key must be a bitmask integer");
      const unsigned long mask = std::stoul(key);
      if (mask >= m.size()) throw InputError(field, "blade outside the algebra");
      m.at(static_cast<Blade>(mask)) = scalar_from_json<T>(value, field);
    }
  }
  return m;
}

template <class T>
Json module_to_json(const CliffordModule<T>& mod) {
  Json gens = Json::array();
  for (const auto& g : mod.generators) gens.push_back(matrix_to_json(g));
  Json out;
  out["signature"] = signature_to_json(mod.signature);
  out["generators"] = std::move(gens);
  out["gram"] = matrix_to_json(mod.gram);
  return out;
}

// --- Reports ----------------------------------------------------------------

inline Json inertia_to_json(const Inertia& in) {
  Json out;
  out["r"] = in.minuses;
  out["s"] = in.pluses;
  out["z"] = in.zeros;
  return out;
}

template <class T>
Json quadratic_form_to_json(const QuadraticFormOnSpan<T>& q) {
  Json out;
  out["gram"] = matrix_to_json(q.gram);
  out["c"] = scalar_to_json(q.c);
  out["normalization"] = q.normalization;
  return out;
}

template <class T>
Json report_to_json(const KSymplecticReport<T>& r) {
  Json out;
  out["is_k_symplectic"] = r.is_k_symplectic;
  out["k"] = r.k;
  out["dimV"] = r.dimV;
  out["n"] = r.n;
  out["q"] = r.q ? quadratic_form_to_json(*r.q) : Json(nullptr);
  out["q_nondegenerate"] = r.q_nondegenerate;
  out["q_rank"] = r.q_rank;
  out["signature"] = r.signature ? inertia_to_json(*r.signature) : Json(nullptr);
  out["null_lines"] = r.null_lines ? Json(*r.null_lines) : Json(nullptr);
  out["method"] = r.method;
  out["samples_checked"] = r.samples_checked;
  Json ws = Json::array();
  for (const Witness& w : r.witnesses) {
    Json wj;
    wj["coefficients"] = w.coefficients;
    wj["kernel_dim"] = w.kernel_dim;
    wj["source"] = w.source;
    ws.push_back(std::move(wj));
  }
  out["witnesses"] = std::move(ws);
  out["certificate"] = r.certificate;
  return out;
}

Json algebra_to_json(Signature sig, bool even_only, ScalarField field);
Json verdict_to_json(const ObstructionVerdict& v);

// --- IntersectionModel --------------------------------------------------------

template <class T>
IntersectionModel<T> model_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("(root)", "expected an object");
  if (!j.contains("b2") || !j["b2"].is_number_unsigned() || j["b2"].get<std::size_t>() == 0)
    throw InputError("b2", "expected a positive integer");
  if (!j.contains("n") || !j["n"].is_number_unsigned() || j["n"].get<unsigned>() == 0)
    throw InputError("n", "expected a positive integer");
  IntersectionModel<T> model;
  model.b2 = j["b2"].get<std::size_t>();
  model.n = j["n"].get<unsigned>();
  model.top_poly = HomogeneousPoly<T>(model.b2, 2 * model.n);
  if (!j.contains("top_poly") || !j["top_poly"].is_object()) throw InputError("top_poly", "expected an object of monomials");
  for (const auto& [key, value] : j["top_poly"].items()) {
    const std::string field = "top_poly." + key;
    Exponent e;
    try {
      e = parse_exponent_key(key);
    } catch (const Error& err) {
      throw InputError(field, err.what());
    }
    unsigned total = 0;
    for (unsigned x : e) total += x;
    if (e.size() != model.b2 || total != 2 * model.n)
      throw InputError(field, "exponent must have b2 entries summing to 2n");
    model.top_poly.add_term(e, scalar_from_json<T>(value, field));
  }
  if (j.contains("kahler_class") && !j["kahler_class"].is_null()) {
    Vector<T> k = vector_from_json<T>(j["kahler_class"], "kahler_class");
    if (k.size() != model.b2) throw InputError("kahler_class", "expected b2 entries");
    model.kahler_class = std::move(k);
  }
  return model;
}

template <class T>
Json poly_to_json(const HomogeneousPoly<T>& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[exponent_key(e)] = scalar_to_json(c);
  return out;
}

}  // namespace ksym
