#include "ksym/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ksym/json_io.hpp"

namespace ksym {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct RunConfig {
  std::string backend = "exact";
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::string input = "-";
  std::string output = "-";
};

struct Outcome {
  Json document;
  int code = kOk;
};

Json read_input(const RunConfig& cfg, std::istream& in) {
  std::string text;
  if (cfg.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else if (!cfg.input.empty() && cfg.input.front() == '{') {
    text = cfg.input;
  } else {
    std::ifstream file(cfg.input);
    if (!file) throw InputError("--input", "cannot open \"" + cfg.input + "\"");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("(input)", std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
Outcome verify_as(const Json& doc, const RunConfig& cfg) {
  const TwoFormSpan<T> span = span_from_json<T>(doc);
  KSymplecticReport<T> report;
  try {
    report = verify_ksymplectic(span, VerifyOptions{cfg.seed, cfg.samples});
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::DimensionNotMultipleOf4: throw InputError("dimV", e.what());
      case ErrorCode::RankDeficient: throw InputError("forms", e.what());
      case ErrorCode::NotAntisymmetric: throw InputError("forms", e.what());
      case ErrorCode::NotReal: throw InputError("real_structure", e.what());
      default: throw;
    }
  }
  return {report_to_json(report), report.is_k_symplectic ? kOk : kNegative};
}

Outcome cmd_verify(const Json& doc, const RunConfig& cfg) {
  const bool complex = span_scalars(doc) == "complex";
  if (cfg.backend == "exact") return complex ? verify_as<Complex<Rational>>(doc, cfg) : verify_as<Rational>(doc, cfg);
  return complex ? verify_as<Complex<double>>(doc, cfg) : verify_as<double>(doc, cfg);
}

Outcome cmd_construct(const std::string& signature_text, std::size_t copies, const RunConfig& cfg) {
  unsigned r = 0, s = 0;
  char comma = 0;
  std::istringstream is(signature_text);
  if (!(is >> r >> comma >> s) || comma != ',' || !(is >> std::ws).eof())
    throw InputError("--signature", "expected \"r,s\"");
  if (s != 0) throw InputError("--signature", "s must be 0: the construction requires a negative-definite quadratic form");
  if (r == 0) throw InputError("--signature", "r must be at least 1");
  if (copies == 0) throw InputError("--copies", "must be at least 1");
  if (cfg.backend == "exact") return {span_to_json(construct_span<Rational>(r, copies))};
  return {span_to_json(construct_span<double>(r, copies))};
}

template <class T>
Outcome extract_as(const Json& doc) {
  const IntersectionModel<T> model = model_from_json<T>(doc);
  QuadraticFormOnSpan<T> q;
  try {
    q = fujiki_extract(model);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAPower && e.code() != ErrorCode::AmbiguousFactor &&
        e.code() != ErrorCode::SignAmbiguous)
      throw;
    Json out;
    out["error"] = std::string(to_string(e.code()));
    out["detail"] = e.what();
    return {out, kNegative};
  }
  const Inertia in = signature(q.gram);
  Json out;
  out["b2"] = model.b2;
  out["n"] = model.n;
  out["q"] = quadratic_form_to_json(q);
  out["signature"] = inertia_to_json(in);
  out["pluses_first"] = Json::array({in.pluses, in.minuses});
  return {out};
}

Outcome cmd_extract(const Json& doc, const RunConfig& cfg) {
  return cfg.backend == "exact" ? extract_as<Rational>(doc) : extract_as<double>(doc);
}

void write_output(const RunConfig& cfg, const Json& doc, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (cfg.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw InputError("--output", "cannot open \"" + cfg.output + "\"");
  file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-symplectic structures, Clifford modules and hyperkahler torus bounds", "ksym"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--backend", cfg.backend, "exact | float64")->check(CLI::IsMember({"exact", "float64"}));
  app.add_option("--seed", cfg.seed, "PRNG seed (std::mt19937_64)");
  app.add_option("--samples", cfg.samples, "null-cone samples per verification");
  app.add_option("--input", cfg.input, "input path, inline JSON, or - for stdin");
  app.add_option("--output", cfg.output, "output path or - for stdout");

  auto* verify = app.add_subcommand("verify", "decide whether a span of two-forms is k-symplectic");
  auto* construct = app.add_subcommand("construct", "span of two-forms from a negative-definite Clifford module");
  std::string signature_text;
  std::size_t copies = 1;
  construct->add_option("--signature", signature_text, "r,s with s = 0")->required();
  construct->add_option("--copies", copies, "copies of the minimal module (padded to dimV = 4n)");
  auto* classify_cmd = app.add_subcommand("classify", "Cl(r,s) or its even part as a matrix algebra");
  unsigned r = 0, s = 0;
  bool even = false, complex = false;
  classify_cmd->add_option("--r", r, "generators squaring to -1")->required();
  classify_cmd->add_option("--s", s, "generators squaring to +1")->required();
  classify_cmd->add_flag("--even", even, "classify the even subalgebra");
  classify_cmd->add_flag("--complex", complex, "complex scalars");
  auto* obstruct = app.add_subcommand("obstruct", "torus obstruction verdict for an IHS manifold");
  unsigned b2 = 0, dimc = 0;
  obstruct->add_option("--b2", b2)->required();
  obstruct->add_option("--dimc", dimc, "complex dimension of the manifold")->required();
  auto* extract = app.add_subcommand("extract", "BBF form and Fujiki constant from top intersections");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    Outcome result;
    if (verify->parsed()) {
      result = cmd_verify(read_input(cfg, in), cfg);
    } else if (construct->parsed()) {
      result = cmd_construct(signature_text, copies, cfg);
    } else if (classify_cmd->parsed()) {
      if (r + s == 0) throw InputError("--r/--s", "r + s must be at least 1");
      result = {algebra_to_json({r, s}, even, complex ? ScalarField::Complex : ScalarField::Real)};
    } else if (obstruct->parsed()) {
      if (b2 < 3) throw InputError("--b2", "must be at least 3");
      if (dimc < 2 || dimc % 2 != 0) throw InputError("--dimc", "must be even and at least 2");
      result = {verdict_to_json(ogrady_verdict(b2, dimc))};
    } else if (extract->parsed()) {
      result = cmd_extract(read_input(cfg, in), cfg);
    }
    write_output(cfg, result.document, out);
    return result.code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace ksym
