#pragma once

// Falsification tests for the closed-form bounds: random bounded analytic
// functions, Goluzin-type weighted comparisons on subordinate pairs, the
// lambda sequences behind the subordination ratio, and inequality fuzzing.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bohrlab/random.hpp"
#include "bohrlab/series.hpp"
#include "bohrlab/weights.hpp"

namespace bohrlab {

/// A generated function with the parameters needed to rebuild it.
struct Draw {
  PowerSeries f;
  nlohmann::json params;
  bool unit_norm = false;  // ||f||_inf = 1 exactly, by construction
};

namespace generators {

/// Schur parameter count uniform in [1, 12], parameters uniform in the disk
/// of radius 0.95; the last parameter is unimodular with probability 1/2, or
/// always when force_unit_norm is set.
Draw schur(TrialRng& rng, std::size_t degree, bool force_unit_norm = false);

/// Degree uniform in [1, 8], zeros uniform in the disk of radius 0.95.
Draw blaschke(TrialRng& rng, std::size_t degree);

/// schur or blaschke with equal probability.
Draw bounded(TrialRng& rng, std::size_t degree);

/// z^m phi(g0(z)) with phi a disk automorphism sending g0(0) to `a`, rotated
/// by a random phase. Returns nullopt when g0 is a unimodular constant, since
/// no automorphism can then reach a < 1.
std::optional<Draw> conditioned(TrialRng& rng, int m, double a, std::size_t degree);

}  // namespace generators

struct FuzzParams {
  std::string weights = "n";
  int m = 1;
  int p = 0;
  int l = -1;
  double a = 0.4;
  double r = 1.0 / 3.0;
  std::vector<double> radii;  // g_ratio grid; empty means 0.1, 0.2, ..., 0.9
  int s = 0;                  // theorem_3 window index; 0 picks it from (r, a)
  std::size_t degree = 0;     // 0 picks a per-bound default
};

struct FuzzReport {
  std::string bound_id;
  long trials = 0;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  double max_ratio = 0.0;      // observed / bound
  double max_observed = 0.0;   // functional value at the argmax
  double bound = 0.0;          // bound value at the argmax
  std::optional<double> lower; // theorem_3 lower bound
  nlohmann::json argmax_witness;
  long violations = 0;         // ratio > 1 + tol
  long grazing = 0;            // 1 + 1e-12 < ratio <= 1 + tol
  long infeasible = 0;         // draws that could not be conditioned
  long evaluations = 0;

  [[nodiscard]] bool passed() const { return violations == 0; }
};

const std::vector<std::string>& fuzz_bound_ids();

/// bound_id in {g_ratio, area, theorem_D, theorem_3, old_derivative_bound,
/// bohr_13}. Extremal witnesses are evaluated in addition to the random trials.
FuzzReport fuzz(const std::string& bound_id, const FuzzParams& params, long trials,
                std::uint64_t seed);

/// sum lambda_n (|b_n|^2 - |a_n|^2), lambda[k] weighting index n = k + 1.
double goluzin_check(const PowerSeries& f, const PowerSeries& g, const std::vector<double>& lambda);

struct LambdaSequence {
  int s = 1;
  double r = 0.0;
  std::vector<double> values;  // values[k] is lambda_{k+1}
  bool non_increasing = false;
};

/// c_s r^{2s} for 1 <= n < s and c_n r^{2n} for n >= s, without any check.
LambdaSequence lambda_rule(const WeightSequence& c, double r, int s, int terms = 1000);

/// lambda_rule after checking r^2 <= inf_{n>=s} c_n/c_{n+1}; throws
/// ContractError otherwise.
LambdaSequence lambda_sequence(const WeightSequence& c, double r, int s, int terms = 1000);

struct AreaSearchResult {
  double best_ratio = 0.0;      // S_r f / (pi (ms+p) r^{2(ms+p)} ||f||^2)
  std::string best_label;
  double extremal_ratio = 0.0;  // ratio attained by z^{ms+p}
  long evaluated = 0;
};

/// Searches monomials z^{mk+p} (k <= 2s), Blaschke products and unimodular
/// Schur functions placed lacunarily. r must lie in the s-th window.
AreaSearchResult extremal_search_area(const LacunarySpec& spec, int s, double r, long budget,
                                      std::uint64_t seed);

}  // namespace bohrlab
