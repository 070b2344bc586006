// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and runtime budgets are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spin1bell/angle_optimizer.hpp"
#include "spin1bell/bell_functional.hpp"
#include "spin1bell/cli.hpp"
#include "spin1bell/kernels.hpp"
#include "spin1bell/lhv_oracle.hpp"

namespace {

using namespace spin1bell;
using Clock = std::chrono::steady_clock;

constexpr double kFourThirds = 4.0 / 3.0;

struct Verdict {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) passed = false;
    detail += (detail.empty() ? "" : "; ") + std::string(ok ? "" : "FAILED ") + what;
  }
};

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Verdict headline_violation() {
  Verdict o;
  const double s = s_value(singlet_state(), AngleConfig::from_degrees(0, 295.4, 147.7, 443.1)).s;
  o.require(std::abs(s - 1.12) <= 0.005, fmt("S = %.10f, |S - 1.12| <= 0.005", s));
  return o;
}

Verdict classical_bound_certification() {
  Verdict o;
  int max_exact = -1;
  for (const auto& st : enumerate_deterministic()) max_exact = std::max(max_exact, deterministic_s(st));
  const auto bound = classical_bound();
  o.require(max_exact == 1 && bound.max_s == 1.0,
            "max over 256 strategies = " + std::to_string(max_exact) + " (exact)");
  std::mt19937_64 seeds(2024);
  double worst = -1.0;
  for (int i = 0; i < 10000; ++i)
    worst = std::max(worst, lhv_s_value(random_lhv_model(seeds(), 1 + seeds() % 16)));
  o.require(worst <= 1.0 + 1e-12, fmt("10000 random models: max S = %.15f <= 1 + 1e-12", worst));
  return o;
}

Verdict closed_form_equivalence() {
  Verdict o;
  std::mt19937_64 rng(7);
  const auto singlet = singlet_state();
  double s_err = 0.0, p11_err = 0.0, block_err = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const auto c = random_angle_config(rng);
    const auto b = s_value(singlet, c);
    s_err = std::max(s_err, std::abs(s_singlet_closed_form(c) - b.s));
    const auto s4 = [](Angle a) { return std::pow(std::sin(0.5 * a.normalized()), 4); };
    p11_err = std::max(p11_err, std::abs(b.p11_a - s4(c.beta1 - c.beta2) / 3.0));
    p11_err = std::max(p11_err, std::abs(b.p11_b - s4(c.beta1 - c.beta2_prime) / 3.0));
    p11_err = std::max(p11_err, std::abs(b.p11_c - s4(c.beta1_prime - c.beta2_prime) / 3.0));
    block_err = std::max(block_err, std::abs(b.block - (1.0 + s4(c.beta1_prime - c.beta2)) / 3.0));
  }
  o.require(s_err <= 1e-12, fmt("closed form vs tables max err %.3e <= 1e-12", s_err));
  o.require(p11_err <= 1e-12, fmt("P11 identity max err %.3e <= 1e-12", p11_err));
  o.require(block_err <= 1e-12, fmt("block identity max err %.3e <= 1e-12", block_err));
  return o;
}

Verdict product_no_violation() {
  Verdict o;
  // 36⁴ grid at 10° spacing, evaluated one β1 slice at a time.
  double grid_max = -1.0;
  kernels::AngleBatch batch;
  std::vector<double> out(36 * 36 * 36);
  for (int i = 0; i < 36; ++i) {
    batch.clear();
    for (int j = 0; j < 36; ++j)
      for (int k = 0; k < 36; ++k)
        for (int l = 0; l < 36; ++l)
          batch.push_back(AngleConfig::from_degrees(10.0 * i, 10.0 * j, 10.0 * k, 10.0 * l));
    kernels::s_product_closed_batch(batch.columns(), out);
    for (double v : out) grid_max = std::max(grid_max, v);
  }
  o.require(grid_max <= 1.0 + 1e-12, fmt("36^4 grid max S = %.15f <= 1 + 1e-12", grid_max));

  std::mt19937_64 rng(8);
  double sub_err = 0.0;
  const auto c4 = [](Angle a) { return std::pow(std::cos(0.5 * a.normalized()), 4); };
  const auto s4 = [](Angle a) { return std::pow(std::sin(0.5 * a.normalized()), 4); };
  for (int i = 0; i < 10000; ++i) {
    const auto c = random_angle_config(rng);
    sub_err = std::max(sub_err, std::abs(s_product_closed_form(c) -
                                         ch_form_value(c4(c.beta1), c4(c.beta1_prime),
                                                       s4(c.beta2), s4(c.beta2_prime))));
  }
  o.require(sub_err <= 1e-12, fmt("substitution identity max err %.3e <= 1e-12", sub_err));

  const auto sweep = product_adversarial_sweep(1000, 100, 7);
  o.require(sweep.worst_s <= 1.0 + 1e-10,
            fmt("1000x100 adversarial sweep worst S = %.15f <= 1 + 1e-10", sweep.worst_s));
  return o;
}

Verdict ch_lemma() {
  Verdict o;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double over_top = -1e300, below_floor = -1e300;
  for (int i = 0; i < 100000; ++i) {
    const double X = 1.0 - u(rng), Y = 1.0 - u(rng);
    const double v = ch_lemma_value({X * u(rng), X * u(rng), X, Y * u(rng), Y * u(rng), Y});
    over_top = std::max(over_top, v);
    below_floor = std::max(below_floor, -X * Y - v);
  }
  o.require(over_top <= 1e-12 && below_floor <= 1e-12,
            fmt("100000 samples within [-XY, 0] (max excess %.3e)", std::max(over_top, below_floor)));
  bool vertices_ok = true;
  for (int t = 0; t < 100; ++t) {
    const double X = 1.0 - u(rng), Y = 1.0 - u(rng);
    double lo = 1e300, hi = -1e300;
    for (int m = 0; m < 16; ++m) {
      const double v = ch_lemma_value({(m & 1) ? X : 0.0, (m & 2) ? X : 0.0, X,
                                       (m & 4) ? Y : 0.0, (m & 8) ? Y : 0.0, Y});
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    vertices_ok = vertices_ok && std::abs(lo + X * Y) <= 1e-12 && std::abs(hi) <= 1e-12;
  }
  o.require(vertices_ok, "16-vertex extremes equal -XY and 0 for 100 random (X, Y)");
  return o;
}

Verdict family_scan_and_optimizer() {
  Verdict o;
  const auto t0 = Clock::now();
  const auto scan = scan_family(singlet_state(), Angle{}, Angle::from_degrees(360), 7201);
  const double scan_secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(scan.best_s >= 1.12 && scan.best_s < kFourThirds,
            fmt("0.05 deg scan best S = %.10f in [1.12, 4/3)", scan.best_s) +
                fmt(" at t = %.2f deg", scan.best_t.degrees()));
  const double headline =
      s_value(singlet_state(), AngleConfig::from_degrees(0, 295.4, 147.7, 443.1)).s;
  const auto& at_headline = scan.samples[2954];
  o.require(std::abs(at_headline.t.degrees() - 147.7) < 1e-9 &&
                std::abs(at_headline.s - 1.12) <= 0.005 && std::abs(at_headline.s - headline) <= 1e-12,
            fmt("sample t = 147.7 deg gives S = %.10f", at_headline.s));
  o.require(scan_secs < 10.0, fmt("scan %.3f s < 10 s", scan_secs));

  const auto t1 = Clock::now();
  const auto opt = optimize_angles(singlet_state(), OptimizeOptions{});
  const double opt_secs = std::chrono::duration<double>(Clock::now() - t1).count();
  bool monotone = true;
  for (std::size_t k = 1; k < opt.history.size(); ++k)
    monotone = monotone && opt.history[k] >= opt.history[k - 1];
  o.require(opt.best_s >= 1.12 && opt.best_s < kFourThirds,
            fmt("optimizer best S = %.10f in [1.12, 4/3)", opt.best_s));
  o.require(monotone, "optimizer refinement monotone");
  o.require(opt_secs < 120.0, fmt("optimizer %.3f s < 120 s", opt_secs));
  return o;
}

Verdict invariant_suite() {
  Verdict o;
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int status = cli::run({"verify"}, out, err);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(status == 0, "`verify` exit status " + std::to_string(status));
  o.require(secs < 5.0, fmt("verify %.3f s < 5 s", secs));
  if (status != 0) o.detail += "\n" + err.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
    double budget_secs;
  };
  const std::vector<Criterion> criteria{
      {"AC1 headline violation regression", headline_violation, 1.0},
      {"AC2 classical bound certification", classical_bound_certification, 1.0},
      {"AC3 closed-form equivalence", closed_form_equivalence, 1.0},
      {"AC4 product no-violation", product_no_violation, 120.0},
      {"AC5 CH lemma", ch_lemma, 1.0},
      {"AC6 family scan + optimizer", family_scan_and_optimizer, 130.0},
      {"AC7 algebraic invariant suite", invariant_suite, 5.0},
  };

  std::printf("kernel backend: %s\n",
              std::string(kernels::backend_name(kernels::best_backend())).c_str());
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Verdict o = c.run();
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs >= c.budget_secs) {
      o.passed = false;
      o.detail += fmt("; FAILED runtime %.3f s", secs) + fmt(" >= %.0f s budget", c.budget_secs);
    }
    failed += o.passed ? 0 : 1;
    std::printf("[%s] %s (%.3f s): %s\n", o.passed ? "PASS" : "FAIL", c.name, secs,
                o.detail.c_str());
  }
  std::printf("%s: %d/%zu criteria passed\n", failed ? "FAILED" : "OK",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
