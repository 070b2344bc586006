#pragma once

// Finite local-hidden-variable models: each hidden index λ carries a weight and
// one local response table per party. Responses obey the natural conditions
// (each outcome probability in [0, 1], per-setting sums at most 1).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spin1bell/bell_functional.hpp"
#include "spin1bell/spin_core.hpp"

namespace spin1bell {

/// Which of a party's two analyzer settings: beta (primary) or beta' (primed).
enum class Slot { primary = 0, primed = 1 };

/// Deterministic local answer for one setting. Order is the tie-break order.
enum class Symbol { plus = 0, zero = 1, minus = 2, none = 3 };

std::string to_string(Symbol symbol);

/// Outcome probabilities for both settings of one party.
struct LocalResponse {
  static constexpr double kTolerance = 1e-12;

  std::array<RealKet, 2> probs{};  // [slot][index_of(outcome)]

  double at(Slot slot, Outcome m) const {
    return probs[static_cast<std::size_t>(slot)][index_of(m)];
  }

  static LocalResponse deterministic(Symbol primary, Symbol primed);

  /// Throws std::invalid_argument if the natural conditions fail.
  void validate() const;
};

struct LhvComponent {
  double weight = 0.0;
  LocalResponse a;
  LocalResponse b;
};

class LhvModel {
 public:
  static constexpr double kWeightTolerance = 1e-12;

  /// Throws std::invalid_argument unless weights are nonnegative, sum to 1 and
  /// every response is valid.
  explicit LhvModel(std::vector<LhvComponent> components);

  static LhvModel single(const LocalResponse& a, const LocalResponse& b) {
    return LhvModel({{1.0, a, b}});
  }

  const std::vector<LhvComponent>& components() const { return components_; }

 private:
  std::vector<LhvComponent> components_;
};

struct DeterministicStrategy {
  Symbol a_primary = Symbol::plus;
  Symbol a_primed = Symbol::plus;
  Symbol b_primary = Symbol::plus;
  Symbol b_primed = Symbol::plus;

  LhvModel to_model() const;
  std::string to_string() const;

  friend bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;
};

/// Σ_λ w(λ) p_m(slot_a, λ) q_n(slot_b, λ)
double lhv_joint_prob(const LhvModel& model, Slot slot_a, Slot slot_b, Outcome m, Outcome n);

/// S with the term pattern
///   P11(primary, primary) - P11(primary, primed) + P11(primed, primed)
///   + block(primed, primary)
double lhv_s_value(const LhvModel& model);

/// S of a single hidden index; no validation, so it also serves relaxed models.
double response_s_value(const LocalResponse& a, const LocalResponse& b);

/// S of a deterministic strategy in integer arithmetic; one of {-1, 0, 1}.
int deterministic_s(const DeterministicStrategy& strategy);

/// All 4⁴ strategies in lexicographic order (slots a_primary, a_primed,
/// b_primary, b_primed; symbols +1, 0, -1, none).
std::vector<DeterministicStrategy> enumerate_deterministic();

struct ClassicalBound {
  double max_s = 0.0;
  DeterministicStrategy argmax;
};

/// Maximum of S over every LHV model, attained at a deterministic strategy.
/// The first maximizer in enumeration order is reported.
ClassicalBound classical_bound();

/// Reproducible valid model with exponential weights and responses drawn
/// uniformly from {p >= 0, Σp <= 1}. Throws if n_components == 0.
LhvModel random_lhv_model(std::uint64_t seed, std::size_t n_components);

/// Max of S when each response row may sum to `cap` instead of 1, found by
/// enumerating rows on the grid {0, 1/divisions, ..., 1}³. The grid contains
/// every vertex when cap * divisions is an integer.
double relaxed_response_max(double cap, int divisions);

/// Single-component model whose responses are the per-side quantum outcome
/// distributions of ket1 ⊗ ket2 at the given settings.
LhvModel embed_product_state(const Ket& ket1, const Ket& ket2, const AngleConfig& angles);

}  // namespace spin1bell
