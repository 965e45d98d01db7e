#include "orbit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orbit/averages.hpp"
#include "orbit/combinatorics.hpp"
#include "orbit/gallery.hpp"
#include "orbit/iterates.hpp"
#include "orbit/problem.hpp"
#include "orbit/property_p.hpp"
#include "orbit/report.hpp"
#include "orbit/sweep.hpp"

namespace orbit::cli {

namespace {

using report::Json;

// Closed forms are cross-checked against the exact oracle up to this k.
constexpr long kCrossCheckK = 60;
// closed-form --k skips the oracle comparison past this many steps.
constexpr long kOracleStepLimit = 5000;

struct Options {
  std::string spec_path = "-";
  bool verbose = false;
  bool timing = false;
  long k = 0;
  long max_k = 0;
  std::optional<double> tol;
  SweepOptions sweep;
  std::string example;
};

// A closed form disagreed with the oracle; carries the report for output.
struct Violation {
  Json report;
};

std::string mode_name(ScalarMode mode) { return mode == ScalarMode::Exact ? "exact" : "float"; }

ProblemSpec load_spec(const std::string& path, std::istream& in) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw SpecError("spec", "cannot read '" + path + "'");
    buffer << file.rdbuf();
  }
  return parse_problem_text(buffer.str());
}

std::string summary_line(const Verdict& v) {
  std::ostringstream out;
  out << "verdict: " << to_string(v.kind);
  if (v.numerically_uncertain) out << " (numerically uncertain)";
  out << "\n";
  for (const auto& bv : v.blocks) {
    out << "  block " << bv.block << ": " << bv.case_label << " -> " << to_string(bv.behavior)
        << " (" << bv.detail << ")\n";
  }
  return out.str();
}

Json tail_json(const PropertyPOperator& op) {
  Json out;
  out["kind"] = op.tail.kind == TailOperator::Kind::Diagonal ? "diagonal" : "shift";
  out["r"] = report::rational(op.tail.r);
  out["N"] = op.tail.n_start;
  out["truncation"] = op.tail.truncation;
  out["bound_at_N"] = tail_bound(op, op.x_tail, op.tail.n_start);
  return out;
}

Json head(const char* command, const ProblemSpec& spec) {
  Json out;
  out["command"] = command;
  out["scalar_mode"] = mode_name(spec.mode);
  return out;
}

Json classify_iterates(const ProblemSpec& spec, std::ostream& err, bool verbose) {
  const JordanSystem& sys = spec.system;
  Json out = head("classify-iterates", spec);
  Verdict verdict = spec.property_p ? classify_property_p(*spec.property_p) : classify_system(sys);
  out["verdict"] = report::verdict(verdict, sys.blocks());

  Json expansions = Json::array();
  bool agrees = true;
  long checked = 0;
  const long top = std::min(kCrossCheckK, spec.horizon);
  OrbitTrace exact;
  if (sys.is_exact()) exact = brute_force_orbit(sys, top, true);
  for (std::size_t b = 0; b < sys.block_count(); ++b) {
    auto e = expand_block(sys.blocks()[b], sys.x()[b], sys.c()[b]);
    expansions.push_back(report::iterate_expansion(e));
    if (!sys.is_exact()) continue;
    for (long k = static_cast<long>(validity_threshold(e)) + 1; k <= top; ++k) {
      ++checked;
      agrees = agrees && eval_iterate(e, k) == exact.states[static_cast<std::size_t>(k)][b];
    }
  }
  out["expansion"] = expansions;
  if (sys.is_exact()) {
    out["closed_form_check"] = Json{{"max_k", top}, {"checked", checked}, {"agrees", agrees}};
  }

  Json oracle;
  oracle["mode"] = "float";
  oracle["horizon"] = spec.horizon;
  if (spec.property_p) {
    oracle["trend"] = report::trend(property_p_orbit(to_float(*spec.property_p), spec.horizon).trend);
    out["tail"] = tail_json(*spec.property_p);
  } else {
    oracle["trend"] = report::trend(brute_force_orbit(sys.to_float(), spec.horizon).trend);
  }
  out["oracle"] = oracle;
  if (verbose) err << summary_line(verdict);
  if (!agrees) throw Violation{out};
  return out;
}

Json classify_averages(const ProblemSpec& spec, std::ostream& err, bool verbose) {
  const JordanSystem& sys = spec.system;
  Json out = head("classify-averages", spec);
  Verdict verdict = spec.property_p ? classify_average_property_p(*spec.property_p)
                                    : classify_average_system(sys);
  out["verdict"] = report::verdict(verdict, sys.blocks());

  Json expansions = Json::array();
  bool agrees = true;
  long checked = 0;
  const long top = std::min(kCrossCheckK, spec.horizon);
  AverageTrace exact;
  if (sys.is_exact()) exact = brute_force_average(sys, top, true);
  for (std::size_t b = 0; b < sys.block_count(); ++b) {
    auto e = expand_average_block(sys.blocks()[b], sys.x()[b], sys.c()[b]);
    expansions.push_back(report::average_expansion(e));
    if (!sys.is_exact()) continue;
    for (long k = average_min_k(e); k <= top; ++k) {
      ++checked;
      agrees = agrees && eval_average(e, k) == exact.states[static_cast<std::size_t>(k - 1)][b];
    }
  }
  out["expansion"] = expansions;
  if (sys.is_exact()) {
    out["closed_form_check"] = Json{{"max_k", top}, {"checked", checked}, {"agrees", agrees}};
  }

  Json oracle;
  oracle["mode"] = "float";
  oracle["horizon"] = spec.horizon;
  if (spec.property_p) {
    oracle["trend"] =
        report::trend(property_p_average(to_float(*spec.property_p), spec.horizon).trend);
    out["tail"] = tail_json(*spec.property_p);
  } else {
    oracle["trend"] = report::trend(brute_force_average(sys.to_float(), spec.horizon).trend);
  }
  out["oracle"] = oracle;
  if (verbose) err << summary_line(verdict);
  if (!agrees) throw Violation{out};
  return out;
}

Json closed_form(const ProblemSpec& spec, long k, std::ostream& err, bool verbose) {
  const JordanSystem& sys = spec.system;
  Json out = head("closed-form", spec);
  out["k"] = k;
  BlockVector value;
  Json per_block = Json::array();
  for (std::size_t b = 0; b < sys.block_count(); ++b) {
    auto e = expand_block(sys.blocks()[b], sys.x()[b], sys.c()[b]);
    const long threshold = static_cast<long>(validity_threshold(e));
    if (k <= threshold) {
      throw SpecError("k", "closed form for block " + std::to_string(b) +
                               " needs k > max(s, t) = " + std::to_string(threshold));
    }
    value.push_back(eval_iterate(e, k));
    Json entry;
    entry["block"] = b;
    entry["expansion"] = report::iterate_expansion(e);
    entry["value"] = report::coords(value.back());
    per_block.push_back(entry);
  }
  out["blocks"] = per_block;
  out["value"] = report::blocks(value);
  if (spec.property_p) out["tail"] = "not expanded; closed forms cover the Jordan head";

  bool agrees = true;
  if (!sys.is_exact()) {
    out["oracle_check"] = "skipped (float mode)";
  } else if (k > kOracleStepLimit) {
    out["oracle_check"] = "skipped (k > " + std::to_string(kOracleStepLimit) + ")";
  } else {
    auto trace = brute_force_orbit(sys, k);
    agrees = trace.last == value;
    out["oracle_check"] = Json{{"oracle_value", report::blocks(trace.last)}, {"agrees", agrees}};
  }
  if (verbose) err << "T^" << k << " x evaluated on " << sys.block_count() << " block(s)\n";
  if (!agrees) throw Violation{out};
  return out;
}

Json fixed_point_report(const ProblemSpec& spec, std::ostream& err, bool verbose) {
  const JordanSystem& sys = spec.system;
  Json out = head("fixed-point", spec);
  BlockVector point;
  try {
    point = fixed_point(sys);
  } catch (const std::domain_error& e) {
    throw SpecError("c", e.what());
  }
  out["fixed_point"] = report::blocks(point);
  BlockVector image = apply_affine(sys, point);
  bool fixed = image == point;
  if (!sys.is_exact()) {
    double gap = 0;
    for (std::size_t b = 0; b < point.size(); ++b) gap += max_modulus(image[b] - point[b]);
    fixed = gap <= 1e-9 * (1 + block_norm(point));
  }
  out["check"] = Json{{"statement", "T x* = x*"}, {"holds", fixed}};
  if (spec.property_p) out["tail"] = "not included; the fixed point covers the Jordan head";
  if (verbose) err << "fixed point " << (fixed ? "verified" : "NOT verified") << "\n";
  if (!fixed && sys.is_exact()) throw Violation{out};
  return out;
}

struct Comparison {
  long checked = 0;
  long mismatches = 0;
  double max_error = 0.0;
  std::optional<long> first_mismatch;

  void record(long k, const Coords& closed, const Coords& oracle, bool exact, double tol) {
    ++checked;
    bool ok = true;
    if (exact) {
      ok = closed == oracle;
    } else {
      double error = max_modulus(closed - oracle);
      max_error = std::max(max_error, error);
      ok = error <= tol * (1.0 + max_modulus(oracle));
    }
    if (!ok) {
      ++mismatches;
      if (!first_mismatch) first_mismatch = k;
    }
  }

  Json json(bool exact) const {
    Json out;
    out["checked"] = checked;
    out["mismatches"] = mismatches;
    if (!exact) out["max_error"] = max_error;
    if (first_mismatch) out["first_mismatch_k"] = *first_mismatch;
    return out;
  }
};

Json oracle_report(const ProblemSpec& spec, long max_k, std::optional<double> tol,
                   std::ostream& err, bool verbose) {
  const JordanSystem& sys = spec.system;
  const bool exact = sys.is_exact();
  const double eps = tol.value_or(1e-9);
  Json out = head("oracle", spec);
  out["max_k"] = max_k;
  if (exact) {
    out["tolerance"] = "0 (exact)";
  } else {
    out["tolerance"] = eps;
  }

  auto orbit = brute_force_orbit(sys, max_k, true);
  auto average = brute_force_average(sys, max_k, true);
  Comparison iter_cmp;
  Comparison avg_cmp;
  for (std::size_t b = 0; b < sys.block_count(); ++b) {
    auto e = expand_block(sys.blocks()[b], sys.x()[b], sys.c()[b]);
    const long last = static_cast<long>(orbit.states.size()) - 1;
    for (long k = static_cast<long>(validity_threshold(e)) + 1; k <= last; ++k) {
      iter_cmp.record(k, eval_iterate(e, k), orbit.states[static_cast<std::size_t>(k)][b], exact,
                      eps);
    }
    auto a = expand_average_block(sys.blocks()[b], sys.x()[b], sys.c()[b]);
    const long last_avg = static_cast<long>(average.states.size());
    for (long k = average_min_k(a); k <= last_avg; ++k) {
      avg_cmp.record(k, eval_average(a, k), average.states[static_cast<std::size_t>(k - 1)][b],
                     exact, eps);
    }
  }
  Json iterates = iter_cmp.json(exact);
  iterates["trend"] = report::trend(orbit.trend);
  iterates["final_state"] = report::blocks(orbit.last);
  Json averages = avg_cmp.json(exact);
  averages["trend"] = report::trend(average.trend);
  averages["final_average"] = report::blocks(average.last);
  out["iterates"] = iterates;
  out["averages"] = averages;
  if (spec.property_p) {
    out["property_p"] = report::trend(property_p_orbit(to_float(*spec.property_p), max_k).trend);
  }
  const bool clean = iter_cmp.mismatches == 0 && avg_cmp.mismatches == 0;
  out["agrees"] = clean;
  if (verbose) {
    err << "oracle: " << iter_cmp.checked << " iterate and " << avg_cmp.checked
        << " average comparisons, " << iter_cmp.mismatches + avg_cmp.mismatches
        << " mismatches\n";
  }
  if (!clean && exact) throw Violation{out};
  return out;
}

Json identities_report(const SweepOptions& options, std::ostream& err, bool verbose) {
  Json out;
  out["command"] = "verify-identities";
  out["seed"] = options.seed;
  out["max_k"] = options.max_k;
  out["max_j"] = options.max_j;
  out["trials"] = options.trials;
  auto rows = verify_identities(options);
  out["table"] = report::sweep(rows);
  const bool pass = std::all_of(rows.begin(), rows.end(),
                                [](const SweepRow& r) { return r.failures == 0; });
  out["all_pass"] = pass;
  if (verbose) {
    for (const auto& row : rows) {
      err << (row.failures == 0 ? "pass " : "FAIL ") << row.identity << " (" << row.cases
          << " cases)\n";
    }
  }
  if (!pass) throw Violation{out};
  return out;
}

Json gallery_example1() {
  constexpr long horizon = 100;
  Json out;
  out["command"] = "gallery";
  out["example"] = "example1";
  out["description"] =
      "weighted shift A e_i = lambda_i e_{i+1}; lambda_i = 1/2 on [c_{2n}, c_{2n+1}-1], "
      "2 on [c_{2n-1}, c_{2n}-1], c_n = n(n+1)/2";
  WeightedShift shift = gallery::example1();
  auto norms = weighted_shift_orbit(shift, horizon);
  out["truncation"] = shift.truncation;
  out["horizon"] = horizon;
  Json boundary = Json::array();
  for (long n = 1; n <= 6; ++n) {
    long k = WeightedShift::boundary(n);
    boundary.push_back(Json{{"n", n}, {"k", k}, {"norm", report::rational(norms[k])}});
  }
  out["norms_at_c_n"] = boundary;
  auto subs = weighted_shift_subsequences(norms);
  auto pairs = [](const std::vector<std::pair<long, Rational>>& list) {
    Json arr = Json::array();
    for (const auto& [k, q] : list) arr.push_back(Json{{"k", k}, {"norm", report::rational(q)}});
    return arr;
  };
  out["tends_to_zero"] = pairs(subs.shrinking);
  out["tends_to_infinity"] = pairs(subs.growing);
  out["unit_norm_indices"] = subs.unit_norm;
  out["verdict"] =
      "neither bounded nor divergent: without property (P) the dichotomy fails";
  return out;
}

Json gallery_example2() {
  JordanSystem sys = gallery::example2();
  Json out;
  out["command"] = "gallery";
  out["example"] = "example2";
  out["description"] = "T x = i x + c on C, c = 1, started at x = 0";
  auto trace = brute_force_orbit(sys, 101, true);
  Json values = Json::array();
  for (long k = 0; k <= 8; ++k) values.push_back(report::scalar(trace.states[k][0][0]));
  out["orbit"] = values;
  bool periodic = true;
  const Scalar c = sys.c()[0][0];
  for (long n = 1; n <= 25; ++n) {
    periodic = periodic && trace.states[4 * n][0][0].is_zero() &&
               trace.states[4 * n + 1][0][0] == c;
  }
  out["check"] = Json{{"statement", "T^(4n)(0) = 0 and T^(4n+1)(0) = c for 1 <= n <= 25"},
                      {"holds", periodic}};
  out["verdict"] = report::verdict(classify_system(sys), sys.blocks());
  if (!periodic) throw Violation{out};
  return out;
}

Json gallery_example3() {
  constexpr long horizon = 1000;
  JordanSystem sys = gallery::example3();
  Json out;
  out["command"] = "gallery";
  out["example"] = "example3";
  out["description"] = "A = [[i, 1], [0, i]], c = (1, 0), x = v = (0, 1)";
  auto trace = brute_force_average(sys, horizon, true);
  Json values = Json::array();
  for (long k = 1; k <= 8; ++k) values.push_back(report::blocks(trace.states[k - 1]));
  out["averages"] = values;
  const Rational v_norm_sq = max_modulus_squared(sys.x()[0]);
  bool shrinking = true;
  for (long k = 1; k <= horizon; k += 4) {
    shrinking = shrinking && max_modulus_squared(trace.states[k - 1][0]) * k * k <= v_norm_sq;
  }
  long argmax = 1;
  for (long k = 1; k <= horizon; ++k) {
    if (trace.norms[k - 1] > trace.norms[argmax - 1]) argmax = k;
  }
  out["check"] = Json{{"statement", "|Ave_k| <= |v|/k for k = 1 mod 4, k <= 1000"},
                      {"holds", shrinking}};
  out["max_average_norm"] = Json{{"k", argmax}, {"norm", trace.norms[argmax - 1]}};
  out["average_norm_at_1000"] = trace.norms[horizon - 1];
  out["verdict"] = report::verdict(classify_average_system(sys), sys.blocks());
  if (!shrinking) throw Violation{out};
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact closed forms and verdicts for iterates of affine maps in Jordan form",
               "orbit-verdict"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("-v,--verbose", opt.verbose, "Human-readable summary on stderr");
  app.add_flag("--timing", opt.timing, "Add wall-clock timing (breaks byte-reproducibility)");

  auto spec_arg = [&](CLI::App* sub) {
    sub->add_option("spec", opt.spec_path, "Problem spec JSON file; '-' or omitted reads stdin");
  };
  auto* iterates = app.add_subcommand("classify-iterates", "Classify the orbit T^k x");
  spec_arg(iterates);
  auto* averages = app.add_subcommand("classify-averages", "Classify the Cesaro averages");
  spec_arg(averages);
  auto* closed = app.add_subcommand("closed-form", "Evaluate the closed form of T^k x");
  spec_arg(closed);
  closed->add_option("--k", opt.k, "Iterate index")->required();
  auto* fixed = app.add_subcommand("fixed-point", "Solve T x* = x*");
  spec_arg(fixed);
  auto* oracle = app.add_subcommand("oracle", "Compare the closed forms with direct iteration");
  spec_arg(oracle);
  oracle->add_option("--max-k", opt.max_k, "Iterate up to this k")
      ->required()
      ->check(CLI::PositiveNumber);
  oracle->add_option("--tol", opt.tol, "Relative tolerance in float mode")
      ->check(CLI::NonNegativeNumber);
  auto* identities = app.add_subcommand("verify-identities", "Run the identity sweep");
  identities->add_option("--max-k", opt.sweep.max_k, "k range")->check(CLI::Range(2L, 200L));
  identities->add_option("--max-j", opt.sweep.max_j, "j range")->check(CLI::Range(0L, 40L));
  identities->add_option("--trials", opt.sweep.trials, "Random trials")
      ->check(CLI::Range(0L, 10000L));
  identities->add_option("--seed", opt.sweep.seed, "RNG seed");
  auto* gallery = app.add_subcommand("gallery", "Worked examples");
  gallery->add_option("example", opt.example, "example1 | example2 | example3")
      ->required()
      ->check(CLI::IsMember({"example1", "example2", "example3"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kSpecError;
  }

  const auto start = std::chrono::steady_clock::now();
  Json report;
  int code = kOk;
  try {
    if (*iterates) {
      report = classify_iterates(load_spec(opt.spec_path, in), err, opt.verbose);
    } else if (*averages) {
      report = classify_averages(load_spec(opt.spec_path, in), err, opt.verbose);
    } else if (*closed) {
      report = closed_form(load_spec(opt.spec_path, in), opt.k, err, opt.verbose);
    } else if (*fixed) {
      report = fixed_point_report(load_spec(opt.spec_path, in), err, opt.verbose);
    } else if (*oracle) {
      report = oracle_report(load_spec(opt.spec_path, in), opt.max_k, opt.tol, err, opt.verbose);
    } else if (*identities) {
      report = identities_report(opt.sweep, err, opt.verbose);
    } else if (opt.example == "example1") {
      report = gallery_example1();
    } else if (opt.example == "example2") {
      report = gallery_example2();
    } else {
      report = gallery_example3();
    }
  } catch (const Violation& v) {
    report = v.report;
    code = kIdentityViolation;
    err << "error: a closed form disagrees with the exact oracle\n";
  } catch (const IdentityViolation& e) {
    err << "error: identity violation: " << e.what() << "\n";
    return kIdentityViolation;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kSpecError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kSpecError;
  }
  if (opt.timing) {
    auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  out << report.dump(2) << "\n";
  return code;
}

}  // namespace orbit::cli
