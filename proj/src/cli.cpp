#include "vhiggs/cli.hpp"

#include <openssl/evp.h>
#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vhiggs/batch.hpp"

#ifndef VHIGGS_VERSION
#define VHIGGS_VERSION "0.0.0"
#endif

namespace vhiggs::cli {

namespace {

using namespace json_io;

/// Analysis could not reach a verdict within its limits.
class LimitReached : public Error {
 public:
  using Error::Error;
};

const std::vector<std::string> kCommands = {"validate", "hitchin",      "spectral",   "stability",
                                            "deform",   "solve-metric", "point-model"};

json section_texts(const hitchin::SpectralDatum& b) {
  return json::array({to_string(b.b1.poly), to_string(b.b2.poly), to_string(b.b3.poly)});
}

int genus_of(const Options& o, const json& input) {
  if (o.genus) return *o.genus;
  if (input.is_object() && input.contains("genus")) {
    if (!input["genus"].is_number_integer()) throw SchemaError("genus must be an integer");
    return input["genus"].get<int>();
  }
  return 0;
}

json cmd_validate(const Options& o, const json& input, int& exit_code) {
  const auto pair = pair_from(input);
  const auto report = higgs::validate(pair);
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back({{"kind", v.kind}, {"detail", v.detail}});
  json out = {{"ok", report.ok()}, {"violations", violations}, {"traceless", higgs::is_traceless(pair)},
              {"sl2", higgs::is_sl2(pair)}};
  if (report.ok()) {
    const auto tr = higgs::trace(pair);
    out["trace"] = json::array({to_json(tr.first), to_json(tr.second)});
  }
  if (o.strict && !report.ok()) exit_code = kInvalidInput;
  return out;
}

json cmd_hitchin(const Options&, const json& input, int&) {
  const auto pair = pair_from(input);
  const auto b = hitchin::hitchin_map(pair);
  return {{"b", to_json(b)},
          {"b_text", section_texts(b)},
          {"base_membership", hitchin::base_membership(b)},
          {"cayley_hamilton", hitchin::cayley_hamilton_check(pair, b)}};
}

json cmd_spectral(const Options& o, const json& input, int& exit_code) {
  json out = json::object();
  hitchin::SpectralDatum b;
  if (input.is_object() && input.contains("phi1")) {
    b = hitchin::hitchin_map(pair_from(input));
    out["b"] = to_json(b);
  } else {
    b = datum_from(input);
  }
  if (o.truncation < 0) throw SchemaError("truncation must be positive");
  const int genus = genus_of(o, input);
  const auto report = spectral::spectral_report(b, genus, o.truncation);
  out["report"] = to_json(report, b, o.truncation);
  out["b_text"] = section_texts(b);
  if (o.strict && report.reducible.verdict == spectral::Reducibility::Verdict::undecided) {
    exit_code = kInternalLimit;
  }
  return out;
}

json cmd_stability(const Options&, const json& input, int&) {
  const auto pair = pair_from(input);
  const auto lines = higgs::invariant_line_subbundles(pair);
  const auto verdict = higgs::stability_verdict(pair);
  Rational slope(pair.e1 + pair.e2, 2);
  slope.canonicalize();
  return {{"verdict", higgs::to_string(verdict)},
          {"invariant_subbundles", to_json(lines)},
          {"slope", to_json(slope)},
          {"endomorphism_dim", higgs::endomorphism_algebra_dim(pair)}};
}

json cmd_deform(const Options& o, const json& input, int&) {
  const auto pair = pair_from(input);
  const int dim = higgs::endomorphism_algebra_dim(pair);
  const int genus = genus_of(o, input);
  if (genus < 0) throw SchemaError("genus must be nonnegative");
  const auto chi = higgs::euler_identity_check(pair.e1, pair.e2, pair.twist.m1, pair.twist.m2, genus);
  return {{"endomorphism_dim", dim},
          {"simple", dim == 1},
          {"euler",
           {{"chi_end_v", chi.chi_end_v},
            {"chi_end", chi.chi_end},
            {"chi_end_wedge", chi.chi_end_wedge},
            {"defect", chi.defect},
            {"genus", genus}}}};
}

json cmd_solve_metric(const Options& o, const json& input, int& exit_code) {
  const auto pair = point_pair_from(input);
  moment_map::FlowConfig cfg;
  if (input.contains("flow")) cfg = flow_config_from(input["flow"], cfg);
  cfg = flow_config_from(o.flow, cfg);
  const auto cls = hitchin::classify_point_pair(pair);
  const auto numeric = hitchin::to_numeric(pair);
  const auto result = moment_map::solve_metric(numeric, cfg);
  const bool polystable = cls != hitchin::PointClass::nilpotent_nonzero;
  if (result.status == moment_map::FlowStatus::max_iters) exit_code = kInternalLimit;
  json eig = json::array();
  for (const auto* m : {&numeric.phi1, &numeric.phi2}) {
    auto [a, b] = moment_map::traceless_eigenvalues(*m);
    eig.push_back(json::array({to_json(a), to_json(b)}));
  }
  return {{"class", hitchin::to_string(cls)},
          {"flow", to_json(result)},
          {"config",
           {{"step", cfg.step}, {"tol", cfg.tol}, {"max_iters", cfg.max_iters}, {"divergence_cond", cfg.divergence_cond}}},
          {"hk_agrees", polystable == (result.status == moment_map::FlowStatus::converged)},
          {"eigenvalues", eig}};
}

json cmd_point_model(const Options&, const json& input, int&) {
  const auto pair = point_pair_from(input);
  const auto cls = hitchin::classify_point_pair(pair);
  const auto c = hitchin::point_spectral_data(pair);
  return {{"class", hitchin::to_string(cls)},
          {"cone_point", to_json(c)},
          {"on_cone", c.on_cone()},
          {"fiber_dim", hitchin::universal_fiber_dim(c)}};
}

json options_json(const Options& o) {
  json j = {{"strict", o.strict}, {"truncation", o.truncation}};
  if (o.genus) j["genus"] = *o.genus;
  if (!o.flow.empty()) j["flow"] = o.flow;
  return j;
}

json error_body(const char* kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

const char* version() { return VHIGGS_VERSION; }

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

JobResult run_job(const Options& options, const std::string& input_text) {
  json report = {{"tool", "vhiggs"},
                 {"version", version()},
                 {"command", options.command},
                 {"input_digest", "sha256:" + sha256_hex(input_text)},
                 {"options", options_json(options)}};
  int exit_code = kOk;
  try {
    const json input = json::parse(input_text);
    json result;
    if (options.command == "validate") {
      result = cmd_validate(options, input, exit_code);
    } else if (options.command == "hitchin") {
      result = cmd_hitchin(options, input, exit_code);
    } else if (options.command == "spectral") {
      result = cmd_spectral(options, input, exit_code);
    } else if (options.command == "stability") {
      result = cmd_stability(options, input, exit_code);
    } else if (options.command == "deform") {
      result = cmd_deform(options, input, exit_code);
    } else if (options.command == "solve-metric") {
      result = cmd_solve_metric(options, input, exit_code);
    } else if (options.command == "point-model") {
      result = cmd_point_model(options, input, exit_code);
    } else {
      throw SchemaError("unknown command " + options.command);
    }
    report["result"] = result;
  } catch (const json::parse_error& e) {
    exit_code = kInvalidInput;
    report["error"] = error_body("malformed_json", e.what());
  } catch (const higgs::UndecidedOverQ& e) {
    exit_code = kInternalLimit;
    report["error"] = error_body("undecided_over_q", e.what());
  } catch (const LimitReached& e) {
    exit_code = kInternalLimit;
    report["error"] = error_body("internal_limit", e.what());
  } catch (const Error& e) {
    exit_code = kInvalidInput;
    report["error"] = error_body("invalid_input", e.what());
  } catch (const json::exception& e) {
    exit_code = kInvalidInput;
    report["error"] = error_body("invalid_input", e.what());
  }
  report["exit_code"] = exit_code;
  return {exit_code, report};
}

JobResult run_batch(const Options& options, const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  json report = {{"tool", "vhiggs"}, {"version", version()}, {"command", options.command},
                 {"options", options_json(options)}};
  if (ec) {
    report["error"] = error_body("invalid_input", "cannot read directory " + dir);
    report["exit_code"] = kInvalidInput;
    return {kInvalidInput, report};
  }
  std::sort(files.begin(), files.end());
  std::vector<JobResult> results(files.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(files.size()); ++i) {
    const auto& path = files[static_cast<size_t>(i)];
    std::string text;
    if (!read_file(path.string(), text)) {
      results[static_cast<size_t>(i)] = {kInvalidInput, {{"error", error_body("invalid_input", "cannot read file")},
                                                        {"exit_code", kInvalidInput}}};
      continue;
    }
    results[static_cast<size_t>(i)] = run_job(options, text);
  }
  json items = json::array();
  int worst = kOk;
  for (size_t i = 0; i < files.size(); ++i) {
    items.push_back({{"file", files[i].filename().string()}, {"exit_code", results[i].exit_code},
                     {"report", results[i].report}});
    worst = std::max(worst, results[i].exit_code);
  }
  report["batch"] = items;
  report["exit_code"] = worst;
  return {worst, report};
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Exact computations with rank-2 V-twisted Higgs bundles on P^1", "vhiggs"};
  app.set_version_flag("--version", std::string(version()));
  Options o;
  double step = 0, tol = 0, cond = 0;
  int max_iters = 0;
  int genus = 0;
  app.add_option("command", o.command, "Command to run")->required()->check(CLI::IsMember(kCommands));
  app.add_option("input", o.input, "Input JSON file, '-' for stdin, or inline JSON");
  app.add_flag("--strict", o.strict, "Treat unresolved verdicts and validation failures as errors");
  app.add_option("--truncation", o.truncation, "Truncation order K for local unit expansions")
      ->check(CLI::PositiveNumber);
  auto* genus_opt = app.add_option("--genus", genus, "Genus g of the base curve for genus formulas")
                        ->check(CLI::NonNegativeNumber);
  auto* out_opt = app.add_option("--output", "Write the report to FILE instead of standard output")->type_name("FILE");
  auto* batch_opt = app.add_option("--batch", "Process every *.json file in DIR")->type_name("DIR");
  auto* step_opt = app.add_option("--step", step, "Flow step size")->check(CLI::PositiveNumber);
  auto* tol_opt = app.add_option("--tol", tol, "Flow residual tolerance")->check(CLI::PositiveNumber);
  auto* iters_opt = app.add_option("--max-iters", max_iters, "Flow iteration budget")->check(CLI::PositiveNumber);
  auto* cond_opt =
      app.add_option("--divergence-cond", cond, "Condition number declaring divergence")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }
  if (*genus_opt) o.genus = genus;
  if (*out_opt) o.output = out_opt->as<std::string>();
  if (*batch_opt) o.batch_dir = batch_opt->as<std::string>();
  if (*step_opt) o.flow["step"] = step;
  if (*tol_opt) o.flow["tol"] = tol;
  if (*iters_opt) o.flow["max_iters"] = max_iters;
  if (*cond_opt) o.flow["divergence_cond"] = cond;

  JobResult result;
  if (o.batch_dir) {
    result = run_batch(o, *o.batch_dir);
  } else {
    std::string text;
    if (o.input.empty()) {
      std::cerr << "vhiggs: an input file is required without --batch\n";
      return kInvalidInput;
    }
    if (o.input == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
      result = run_job(o, text);
    } else if (o.input.front() == '{') {
      result = run_job(o, o.input);
    } else if (read_file(o.input, text)) {
      result = run_job(o, text);
    } else {
      result = run_job(o, "");
      result.exit_code = kInvalidInput;
      result.report.erase("result");
      result.report["error"] = error_body("invalid_input", "cannot read " + o.input);
      result.report["exit_code"] = kInvalidInput;
    }
  }
  const std::string body = result.report.dump(2) + "\n";
  if (o.output) {
    std::ofstream out(*o.output, std::ios::binary);
    if (!out) {
      std::cerr << "vhiggs: cannot write " << *o.output << "\n";
      return kInvalidInput;
    }
    out << body;
  } else {
    std::cout << body;
  }
  return result.exit_code;
}

}  // namespace vhiggs::cli
