#include "spin1bell/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "report.hpp"
#include "spin1bell/angle_optimizer.hpp"
#include "spin1bell/bell_functional.hpp"
#include "spin1bell/lhv_oracle.hpp"
#include "spin1bell/spin_core.hpp"
#include "spin1bell/verify.hpp"

namespace spin1bell::cli {

namespace {

using nlohmann::json;

// Input errors detected after CLI11 parsing; reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string unit = "degrees";
  std::string format = "json";
  std::uint64_t seed = 42;
  std::string out_path;

  // eval-s / scan-family / optimize
  std::string state = "singlet";
  std::string angles;
  std::string amplitudes;
  // scan-family
  std::optional<double> t_min;
  std::optional<double> t_max;
  std::size_t steps = 7201;
  // optimize
  std::size_t grid = 12;
  std::size_t refine = 40;
  // product-sweep
  std::size_t n_states = 1000;
  std::size_t n_configs = 100;
};

double parse_real(std::string_view text, const char* what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw UsageError(std::string("malformed ") + what + ": '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

Angle to_angle(double value, const RunConfig& cfg) {
  return cfg.unit == "radians" ? Angle(value) : Angle::from_degrees(value);
}

AngleConfig parse_angles(const RunConfig& cfg) {
  const auto parts = split(cfg.angles, ',');
  if (parts.size() != 4) {
    throw UsageError("--angles needs four comma-separated values b1,b1',b2,b2'");
  }
  std::array<Angle, 4> a;
  for (std::size_t i = 0; i < 4; ++i) a[i] = to_angle(parse_real(parts[i], "angle"), cfg);
  return {a[0], a[1], a[2], a[3]};
}

Complex parse_complex(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {parse_real(text, "amplitude"), 0.0};
  return {parse_real(std::string_view(text).substr(0, colon), "amplitude"),
          parse_real(std::string_view(text).substr(colon + 1), "amplitude")};
}

Ket basis_ket(const std::string& label) {
  if (label == "+1" || label == "1") return {1.0, 0.0, 0.0};
  if (label == "0") return {0.0, 1.0, 0.0};
  if (label == "-1") return {0.0, 0.0, 1.0};
  throw UsageError("unknown basis label '" + label + "' (expected +1, 0 or -1)");
}

SpinState parse_state(const RunConfig& cfg) {
  if (cfg.state == "singlet") return singlet_state();
  const std::string prefix = "product:";
  if (cfg.state.rfind(prefix, 0) != 0) throw UsageError("unknown state '" + cfg.state + "'");
  const std::string spec = cfg.state.substr(prefix.size());
  if (spec == "custom") {
    const auto parts = split(cfg.amplitudes, ',');
    if (parts.size() != 6) {
      throw UsageError("product:custom needs --amplitudes with six values re[:im]");
    }
    Ket k1, k2;
    for (std::size_t i = 0; i < 3; ++i) {
      k1[i] = parse_complex(parts[i]);
      k2[i] = parse_complex(parts[i + 3]);
    }
    try {
      return product_state(k1, k2);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const auto labels = split(spec, ',');
  if (labels.size() != 2) throw UsageError("product state must look like product:+1,-1");
  return product_state(basis_ket(labels[0]), basis_ket(labels[1]));
}

json angles_json(const AngleConfig& a) {
  return {{"beta1", num(a.beta1.degrees())},
          {"beta1_prime", num(a.beta1_prime.degrees())},
          {"beta2", num(a.beta2.degrees())},
          {"beta2_prime", num(a.beta2_prime.degrees())}};
}

std::vector<json> angle_cells(const AngleConfig& a) {
  return {num(a.beta1.degrees()), num(a.beta1_prime.degrees()), num(a.beta2.degrees()),
          num(a.beta2_prime.degrees())};
}

json state_inputs(const RunConfig& cfg) {
  json j = {{"state", cfg.state}};
  if (!cfg.amplitudes.empty()) j["amplitudes"] = cfg.amplitudes;
  return j;
}

Report cmd_eval_s(const RunConfig& cfg) {
  const auto state = parse_state(cfg);
  const auto angles = parse_angles(cfg);
  const auto b = s_value(state, angles);
  const bool violation = b.s > 1.0;

  Report r{"eval-s"};
  r.inputs = state_inputs(cfg);
  r.inputs["angles"] = cfg.angles;
  r.inputs["unit"] = cfg.unit;
  r.result = {{"angles_deg", angles_json(angles)},
              {"p11_a", num(b.p11_a)},
              {"p11_b", num(b.p11_b)},
              {"p11_c", num(b.p11_c)},
              {"block", num(b.block)},
              {"s", num(b.s)},
              {"violation", violation}};
  r.csv_header = {"p11_a", "p11_b", "p11_c", "block", "s", "violation"};
  r.csv_rows.push_back(
      {num(b.p11_a), num(b.p11_b), num(b.p11_c), num(b.block), num(b.s), violation});
  return r;
}

Report cmd_scan_family(const RunConfig& cfg) {
  const auto state = parse_state(cfg);
  const Angle t_min = cfg.t_min ? to_angle(*cfg.t_min, cfg) : Angle{};
  const Angle t_max = cfg.t_max ? to_angle(*cfg.t_max, cfg) : Angle(kTwoPi);
  ScanResult scan;
  try {
    scan = scan_family(state, t_min, t_max, cfg.steps);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  Report r{"scan-family"};
  r.inputs = state_inputs(cfg);
  r.inputs["unit"] = cfg.unit;
  r.inputs["t_min_deg"] = num(t_min.degrees());
  r.inputs["t_max_deg"] = num(t_max.degrees());
  r.inputs["steps"] = cfg.steps;
  json samples = json::array();
  r.csv_header = {"t_deg", "s_value"};
  for (const auto& sample : scan.samples) {
    samples.push_back({{"t_deg", num(sample.t.degrees())}, {"s_value", num(sample.s)}});
    r.csv_rows.push_back({num(sample.t.degrees()), num(sample.s)});
  }
  r.result = {{"best_t_deg", num(scan.best_t.degrees())},
              {"best_s", num(scan.best_s)},
              {"samples", std::move(samples)}};
  return r;
}

Report cmd_optimize(const RunConfig& cfg) {
  const auto state = parse_state(cfg);
  OptimizationResult opt;
  try {
    opt = optimize_angles(state, cfg.grid, cfg.refine, cfg.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  Report r{"optimize"};
  r.inputs = state_inputs(cfg);
  r.inputs["grid_per_axis"] = cfg.grid;
  r.inputs["refine_iters"] = cfg.refine;
  json trace = json::array();
  for (const auto& t : opt.trace) trace.push_back({{"angles_deg", angles_json(t.angles)}, {"s", num(t.s)}});
  r.result = {{"best_angles_deg", angles_json(opt.best_angles)},
              {"best_s", num(opt.best_s)},
              {"evaluations", opt.evaluations},
              {"beta1_pinned", opt.beta1_pinned},
              {"violation", opt.best_s > 1.0},
              {"trace", std::move(trace)}};
  r.csv_header = {"beta1_deg", "beta1_prime_deg", "beta2_deg", "beta2_prime_deg",
                  "best_s",    "evaluations",     "beta1_pinned"};
  auto row = angle_cells(opt.best_angles);
  row.push_back(num(opt.best_s));
  row.push_back(opt.evaluations);
  row.push_back(opt.beta1_pinned);
  r.csv_rows.push_back(std::move(row));
  return r;
}

Report cmd_lhv_bound(const RunConfig&) {
  const auto bound = classical_bound();
  const auto& w = bound.argmax;
  Report r{"lhv-bound"};
  r.inputs = {{"strategies", enumerate_deterministic().size()}};
  r.result = {{"max_s", num(bound.max_s)},
              {"witness",
               {{"a_primary", to_string(w.a_primary)},
                {"a_primed", to_string(w.a_primed)},
                {"b_primary", to_string(w.b_primary)},
                {"b_primed", to_string(w.b_primed)}}}};
  r.csv_header = {"max_s", "a_primary", "a_primed", "b_primary", "b_primed"};
  r.csv_rows.push_back({num(bound.max_s), to_string(w.a_primary), to_string(w.a_primed),
                        to_string(w.b_primary), to_string(w.b_primed)});
  return r;
}

std::string ket_text(const Ket& k) {
  const auto n = std::sqrt(std::norm(k[0]) + std::norm(k[1]) + std::norm(k[2]));
  std::string s;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) s += ';';
    s += csv_cell(num(k[i].real() / n)) + ':' + csv_cell(num(k[i].imag() / n));
  }
  return s;
}

Report cmd_product_sweep(const RunConfig& cfg) {
  if (cfg.n_states == 0 || cfg.n_configs == 0) {
    throw UsageError("--states and --configs must be at least 1");
  }
  const auto sweep = product_adversarial_sweep(cfg.n_states, cfg.n_configs, cfg.seed);
  Report r{"product-sweep"};
  r.inputs = {{"states", cfg.n_states}, {"configs", cfg.n_configs}};
  r.result = {{"worst_s", num(sweep.worst_s)},
              {"bound_respected", sweep.worst_s <= 1.0 + 1e-10},
              {"witness",
               {{"angles_deg", angles_json(sweep.angles)},
                {"ket1", ket_text(sweep.kets.first)},
                {"ket2", ket_text(sweep.kets.second)}}}};
  r.csv_header = {"worst_s", "beta1_deg", "beta1_prime_deg", "beta2_deg", "beta2_prime_deg",
                  "ket1",    "ket2"};
  std::vector<json> row{num(sweep.worst_s)};
  for (auto& c : angle_cells(sweep.angles)) row.push_back(std::move(c));
  row.push_back(ket_text(sweep.kets.first));
  row.push_back(ket_text(sweep.kets.second));
  r.csv_rows.push_back(std::move(row));
  return r;
}

Report cmd_verify(const RunConfig& cfg, std::ostream& err, bool& all_passed) {
  const auto checks = run_invariant_suite(cfg.seed);
  all_passed = true;
  Report r{"verify"};
  json items = json::array();
  r.csv_header = {"check", "passed", "worst", "tolerance"};
  for (const auto& c : checks) {
    all_passed = all_passed && c.passed;
    err << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " worst=" << c.worst
        << " tol=" << c.tolerance << " (" << c.detail << ")\n";
    items.push_back({{"check", c.name},
                     {"passed", c.passed},
                     {"worst", num(c.worst)},
                     {"tolerance", num(c.tolerance)},
                     {"detail", c.detail}});
    r.csv_rows.push_back({c.name, c.passed, num(c.worst), num(c.tolerance)});
  }
  r.result = {{"all_passed", all_passed}, {"checks", std::move(items)}};
  return r;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--unit", cfg.unit, "Angle unit for inputs")
      ->check(CLI::IsMember({"degrees", "radians"}));
  sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");
}

void add_state(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--state", cfg.state, "singlet | product:<m1>,<m2> | product:custom");
  sub->add_option("--amplitudes", cfg.amplitudes,
                  "Six comma-separated complex amplitudes re[:im] for product:custom");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Spin-1 Bell functional: evaluation, scans, optimization and LHV certification",
               "spin1bell"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval-s", "Evaluate S for a state and four angles");
  add_common(eval, cfg);
  add_state(eval, cfg);
  eval->add_option("--angles", cfg.angles, "b1,b1',b2,b2'")->required();

  auto* scan = app.add_subcommand("scan-family", "Scan S along b1=0, b1'=2t, b2=t, b2'=3t");
  add_common(scan, cfg);
  add_state(scan, cfg);
  scan->add_option("--t-min", cfg.t_min, "Start of the t range (default 0)");
  scan->add_option("--t-max", cfg.t_max, "End of the t range (default one full turn)");
  scan->add_option("--steps", cfg.steps, "Number of samples including both endpoints");

  auto* optimize = app.add_subcommand("optimize", "Grid + pattern search over all four angles");
  add_common(optimize, cfg);
  add_state(optimize, cfg);
  optimize->add_option("--grid", cfg.grid, "Grid points per axis");
  optimize->add_option("--refine", cfg.refine, "Pattern-search rounds");

  auto* lhv = app.add_subcommand("lhv-bound", "Exhaustive classical bound over 256 strategies");
  add_common(lhv, cfg);

  auto* sweep = app.add_subcommand("product-sweep", "Random product states vs random angles");
  add_common(sweep, cfg);
  sweep->add_option("--states", cfg.n_states, "Number of random product states");
  sweep->add_option("--configs", cfg.n_configs, "Angle configurations per state");

  auto* verify = app.add_subcommand("verify", "Run the algebraic invariant suite");
  add_common(verify, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    Report report;
    int status = kSuccess;
    if (*eval) {
      report = cmd_eval_s(cfg);
    } else if (*scan) {
      report = cmd_scan_family(cfg);
    } else if (*optimize) {
      report = cmd_optimize(cfg);
    } else if (*lhv) {
      report = cmd_lhv_bound(cfg);
    } else if (*sweep) {
      report = cmd_product_sweep(cfg);
    } else {
      bool all_passed = false;
      report = cmd_verify(cfg, err, all_passed);
      status = all_passed ? kSuccess : kVerificationFailed;
    }

    std::ofstream file;
    if (!cfg.out_path.empty()) {
      file.open(cfg.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot open output file '" + cfg.out_path + "'");
    }
    std::ostream& sink = cfg.out_path.empty() ? out : file;
    if (cfg.format == "csv") {
      write_csv(sink, report);
    } else {
      write_json(sink, report, cfg.seed);
    }
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace spin1bell::cli
