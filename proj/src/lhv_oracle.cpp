#include "spin1bell/lhv_oracle.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace spin1bell {

namespace {

constexpr std::array<Symbol, 4> kSymbols = {Symbol::plus, Symbol::zero, Symbol::minus,
                                            Symbol::none};

RealKet deterministic_row(Symbol symbol) {
  RealKet row{};
  if (symbol != Symbol::none) row[static_cast<std::size_t>(symbol)] = 1.0;
  return row;
}

// Probability mass on outcomes 0 and -1.
double non_plus(const LocalResponse& r, Slot slot) {
  return r.at(slot, Outcome::zero) + r.at(slot, Outcome::minus);
}

}  // namespace

std::string to_string(Symbol symbol) {
  switch (symbol) {
    case Symbol::plus:
      return "+1";
    case Symbol::zero:
      return "0";
    case Symbol::minus:
      return "-1";
    case Symbol::none:
      return "none";
  }
  return "?";
}

LocalResponse LocalResponse::deterministic(Symbol primary, Symbol primed) {
  return LocalResponse{{deterministic_row(primary), deterministic_row(primed)}};
}

void LocalResponse::validate() const {
  for (const auto& row : probs) {
    double sum = 0.0;
    for (double p : row) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("response probability outside [0, 1]: " + std::to_string(p));
      }
      sum += p;
    }
    if (sum > 1.0 + kTolerance) {
      throw std::invalid_argument("response probabilities sum to " + std::to_string(sum) +
                                  " > 1");
    }
  }
}

LhvModel::LhvModel(std::vector<LhvComponent> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("LHV model needs at least one component");
  double total = 0.0;
  for (const auto& c : components_) {
    if (!(c.weight >= 0.0) || !std::isfinite(c.weight)) {
      throw std::invalid_argument("LHV weights must be finite and nonnegative");
    }
    c.a.validate();
    c.b.validate();
    total += c.weight;
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    throw std::invalid_argument("LHV weights sum to " + std::to_string(total) + ", expected 1");
  }
}

LhvModel DeterministicStrategy::to_model() const {
  return LhvModel::single(LocalResponse::deterministic(a_primary, a_primed),
                          LocalResponse::deterministic(b_primary, b_primed));
}

std::string DeterministicStrategy::to_string() const {
  using spin1bell::to_string;
  return "a=(" + to_string(a_primary) + "," + to_string(a_primed) + ") b=(" +
         to_string(b_primary) + "," + to_string(b_primed) + ")";
}

double lhv_joint_prob(const LhvModel& model, Slot slot_a, Slot slot_b, Outcome m, Outcome n) {
  double sum = 0.0;
  for (const auto& c : model.components()) sum += c.weight * c.a.at(slot_a, m) * c.b.at(slot_b, n);
  return sum;
}

double response_s_value(const LocalResponse& a, const LocalResponse& b) {
  const double ap = a.at(Slot::primary, Outcome::plus);
  const double apr = a.at(Slot::primed, Outcome::plus);
  const double bp = b.at(Slot::primary, Outcome::plus);
  const double bpr = b.at(Slot::primed, Outcome::plus);
  return ap * bp - ap * bpr + apr * bpr + non_plus(a, Slot::primed) * non_plus(b, Slot::primary);
}

double lhv_s_value(const LhvModel& model) {
  const auto p11 = [&model](Slot sa, Slot sb) {
    return lhv_joint_prob(model, sa, sb, Outcome::plus, Outcome::plus);
  };
  double block = 0.0;
  for (Outcome m : {Outcome::zero, Outcome::minus})
    for (Outcome n : {Outcome::zero, Outcome::minus})
      block += lhv_joint_prob(model, Slot::primed, Slot::primary, m, n);
  return p11(Slot::primary, Slot::primary) - p11(Slot::primary, Slot::primed) +
         p11(Slot::primed, Slot::primed) + block;
}

int deterministic_s(const DeterministicStrategy& st) {
  const auto plus = [](Symbol s) { return s == Symbol::plus ? 1 : 0; };
  const auto low = [](Symbol s) { return (s == Symbol::zero || s == Symbol::minus) ? 1 : 0; };
  return plus(st.a_primary) * plus(st.b_primary) - plus(st.a_primary) * plus(st.b_primed) +
         plus(st.a_primed) * plus(st.b_primed) + low(st.a_primed) * low(st.b_primary);
}

std::vector<DeterministicStrategy> enumerate_deterministic() {
  std::vector<DeterministicStrategy> out;
  out.reserve(256);
  for (Symbol ap : kSymbols)
    for (Symbol apr : kSymbols)
      for (Symbol bp : kSymbols)
        for (Symbol bpr : kSymbols) out.push_back({ap, apr, bp, bpr});
  return out;
}

ClassicalBound classical_bound() {
  const auto strategies = enumerate_deterministic();
  int best = std::numeric_limits<int>::min();
  DeterministicStrategy argmax;
  for (const auto& st : strategies) {
    const int s = deterministic_s(st);
    if (s > best) {
      best = s;
      argmax = st;
    }
  }
  return {static_cast<double>(best), argmax};
}

LhvModel random_lhv_model(std::uint64_t seed, std::size_t n_components) {
  if (n_components == 0) throw std::invalid_argument("n_components must be at least 1");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);

  // Dirichlet(1,1,1,1) with the last coordinate as slack.
  const auto sample_row = [&] {
    std::array<double, 4> e{};
    double total = 0.0;
    for (auto& v : e) total += (v = expo(rng));
    return RealKet{e[0] / total, e[1] / total, e[2] / total};
  };

  std::vector<LhvComponent> comps(n_components);
  double total = 0.0;
  for (auto& c : comps) {
    c.weight = expo(rng) + std::numeric_limits<double>::min();
    total += c.weight;
    c.a.probs = {sample_row(), sample_row()};
    c.b.probs = {sample_row(), sample_row()};
  }
  for (auto& c : comps) c.weight /= total;
  return LhvModel(std::move(comps));
}

double relaxed_response_max(double cap, int divisions) {
  if (divisions < 1 || !(cap >= 0.0)) {
    throw std::invalid_argument("relaxed_response_max needs divisions >= 1 and cap >= 0");
  }
  std::vector<RealKet> rows;
  const double step = 1.0 / divisions;
  for (int i = 0; i <= divisions; ++i)
    for (int j = 0; j <= divisions; ++j)
      for (int k = 0; k <= divisions; ++k) {
        if (i + j + k > cap * divisions + 1e-9) continue;
        rows.push_back({i * step, j * step, k * step});
      }
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& ap : rows)
    for (const auto& apr : rows)
      for (const auto& bp : rows)
        for (const auto& bpr : rows) {
          best = std::max(best, response_s_value(LocalResponse{{ap, apr}},
                                                 LocalResponse{{bp, bpr}}));
        }
  return best;
}

LhvModel embed_product_state(const Ket& ket1, const Ket& ket2, const AngleConfig& angles) {
  const auto state = product_state(ket1, ket2);
  LocalResponse a{{marginal_distribution(state, 0, angles.beta1),
                   marginal_distribution(state, 0, angles.beta1_prime)}};
  LocalResponse b{{marginal_distribution(state, 1, angles.beta2),
                   marginal_distribution(state, 1, angles.beta2_prime)}};
  return LhvModel::single(a, b);
}

}  // namespace spin1bell
