#include "bohrlab/oracle.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "bohrlab/bounds.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/hadamard.hpp"

namespace bohrlab {

namespace {

using nlohmann::json;

constexpr double kGrazing = 1e-12;

json complex_list(std::span<const Complex> v) {
  json out = json::array();
  for (const Complex& z : v) out.push_back({z.real(), z.imag()});
  return out;
}

std::vector<Complex> random_schur_params(TrialRng& rng, int count, bool unimodular_last) {
  std::vector<Complex> gamma(static_cast<std::size_t>(count));
  for (auto& g : gamma) g = rng.in_disk(0.95);
  if (unimodular_last) gamma.back() = rng.on_circle();
  return gamma;
}

std::size_t pick_degree(const FuzzParams& p, std::size_t fallback) {
  if (p.degree == 0) return fallback;
  if (p.degree < 16) throw ContractError("fuzz: degree must be >= 16");
  return p.degree;
}

// z^m (z + a)/(1 + a z), the extremal for every bound with |a_m| = a.
PowerSeries shifted_mobius(int m, double a, std::size_t degree) {
  const auto base = mobius_series(a, degree - static_cast<std::size_t>(m));
  std::vector<Complex> c(degree + 1);
  for (std::size_t k = 0; k <= base.degree(); ++k) c[k + static_cast<std::size_t>(m)] = base[k];
  return PowerSeries(std::move(c), static_cast<std::size_t>(m), std::nullopt);
}

class Tracker {
 public:
  explicit Tracker(FuzzReport& rep) : rep_(rep) {}

  void record(double observed, double bound, const json& witness) {
    ++rep_.evaluations;
    const double ratio = observed / bound;
    if (ratio > 1.0 + rep_.tol) ++rep_.violations;
    else if (ratio > 1.0 + kGrazing) ++rep_.grazing;
    if (ratio > rep_.max_ratio || rep_.evaluations == 1) {
      rep_.max_ratio = ratio;
      rep_.max_observed = observed;
      rep_.bound = bound;
      rep_.argmax_witness = witness;
    }
  }

 private:
  FuzzReport& rep_;
};

void fuzz_g_ratio(const FuzzParams& params, long trials, std::uint64_t seed, FuzzReport& rep) {
  const auto c = WeightSequence::parse(params.weights);
  if (c.start_index() > 1) throw ContractError("g_ratio: weights must be defined from n = 1");
  const std::size_t N = pick_degree(params, 128);
  std::vector<double> radii = params.radii;
  if (radii.empty()) {
    for (int i = 1; i <= 9; ++i) radii.push_back(i / 10.0);
  }
  struct Level {
    double r;
    double G;
    int s;
    std::vector<double> w;  // c_n r^{2n} / c_1
  };
  std::vector<Level> levels;
  const double c1 = c(1);
  for (const double r : radii) {
    const auto br = g_ratio_bound(c, r);
    if (!br.value) {
      std::ostringstream os;
      os << "g_ratio: condition (1) fails at r = " << r;
      throw ContractError(os.str());
    }
    Level lv{r, *br.value, br.s, std::vector<double>(N + 1)};
    double r2n = 1.0;
    for (std::size_t n = 1; n <= N; ++n) {
      r2n *= r * r;
      lv.w[n] = c(static_cast<long>(n)) / c1 * r2n;
    }
    levels.push_back(std::move(lv));
  }
  Tracker track(rep);
  auto weighted = [](const std::vector<double>& w, const PowerSeries& f) {
    double acc = 0.0;
    for (std::size_t n = 1; n < w.size() && n <= f.degree(); ++n) acc += w[n] * std::norm(f[n]);
    return acc;
  };

  // Boundary extremals: g = z, f = z^s.
  for (const auto& lv : levels) {
    if (static_cast<std::size_t>(lv.s) > N) continue;
    const double observed = lv.w[static_cast<std::size_t>(lv.s)];
    track.record(observed, lv.G * lv.w[1], json{{"extremal", "g=z, omega=z^s"}, {"s", lv.s}, {"r", lv.r}});
  }

  for (long t = 0; t < trials; ++t) {
    TrialRng rng(seed, static_cast<std::uint64_t>(t));
    const int dg = rng.integer(1, 12);
    std::vector<Complex> b(static_cast<std::size_t>(dg) + 1);
    for (auto& x : b) x = rng.in_disk(1.0);
    const int count = rng.integer(1, 11);
    auto gamma = random_schur_params(rng, count, rng.coin());
    gamma.insert(gamma.begin(), Complex{});
    const PowerSeries g(b);
    const auto omega = schur_series(SchurParams(gamma), N);
    const auto f = subordinate_pair(g, omega, N);
    for (const auto& lv : levels) {
      const double den = weighted(lv.w, g);
      if (den == 0.0) continue;
      track.record(weighted(lv.w, f), lv.G * den,
                   json{{"trial", t}, {"g", complex_list(b)}, {"omega_schur", complex_list(gamma)}, {"r", lv.r}});
    }
  }
}

void fuzz_area(const FuzzParams& params, long trials, std::uint64_t seed, FuzzReport& rep) {
  const LacunarySpec spec(params.m, params.p);
  if (!(params.r > 0.0) || !(params.r < 1.0)) throw DomainError("area: r must lie in (0, 1)");
  const std::size_t N = pick_degree(params, 256);
  const auto ab = area_bound(spec, params.r);
  const double bound = ab.value(params.r, 1.0);
  Tracker track(rep);
  for (int ds = -1; ds <= 1; ++ds) {
    const int k = spec.m * (ab.s + ds) + spec.p;
    if (k < 0 || static_cast<std::size_t>(k) > N) continue;
    const auto f = PowerSeries::monomial(static_cast<std::size_t>(k), 1.0, N);
    track.record(area_functional(f, params.r).value, bound, json{{"extremal", "z^k"}, {"k", k}});
  }
  const std::size_t inner_degree = (N - static_cast<std::size_t>(spec.p)) / static_cast<std::size_t>(spec.m);
  for (long t = 0; t < trials; ++t) {
    TrialRng rng(seed, static_cast<std::uint64_t>(t));
    auto d = generators::bounded(rng, inner_degree);
    const auto f = lacunary_series(spec, d.f, N);
    d.params["trial"] = t;
    track.record(area_functional(f, params.r).value, bound, d.params);
  }
}

// Shared driver for the bounds on A M_r f over f in H_m, |a_m| = a.
void fuzz_conditioned(const FuzzParams& params, int m, long trials, std::uint64_t seed, double bound,
                      const std::function<double(const PowerSeries&)>& functional, FuzzReport& rep) {
  const std::size_t N = pick_degree(params, 256);
  Tracker track(rep);
  track.record(functional(shifted_mobius(m, params.a, N)), bound,
               json{{"extremal", "z^m (z+a)/(1+az)"}, {"m", m}, {"a", params.a}});
  for (long t = 0; t < trials; ++t) {
    TrialRng rng(seed, static_cast<std::uint64_t>(t));
    auto d = generators::conditioned(rng, m, params.a, N);
    if (!d) {
      ++rep.infeasible;
      continue;
    }
    d->params["trial"] = t;
    track.record(functional(d->f), bound, d->params);
  }
}

void require_conditions(const std::string& id, const MajorantBound& mb) {
  for (const auto& [name, ok] : mb.conditions_ok) {
    if (!ok) throw ContractError(id + ": precondition '" + name + "' does not hold");
  }
}

void check_a(const FuzzParams& p) {
  if (!(p.a > 0.0) || !(p.a < 1.0)) throw DomainError("fuzz: a must lie in (0, 1)");
}

}  // namespace

namespace generators {

Draw schur(TrialRng& rng, std::size_t degree, bool force_unit_norm) {
  const int count = rng.integer(1, 12);
  const bool unimodular = force_unit_norm || rng.coin();
  auto gamma = random_schur_params(rng, count, unimodular);
  Draw d{schur_series(SchurParams(gamma), degree), json{{"generator", "schur"}, {"gamma", complex_list(gamma)}},
         unimodular};
  return d;
}

Draw blaschke(TrialRng& rng, std::size_t degree) {
  const int k = rng.integer(1, 8);
  std::vector<Complex> zeros(static_cast<std::size_t>(k));
  for (auto& z : zeros) z = rng.in_disk(0.95);
  const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return Draw{blaschke_series(zeros, phase, degree),
              json{{"generator", "blaschke"}, {"zeros", complex_list(zeros)}, {"phase", phase}}, true};
}

Draw bounded(TrialRng& rng, std::size_t degree) { return rng.coin() ? schur(rng, degree) : blaschke(rng, degree); }

std::optional<Draw> conditioned(TrialRng& rng, int m, double a, std::size_t degree) {
  if (m < 0 || static_cast<std::size_t>(m) > degree) throw ContractError("conditioned: need 0 <= m <= degree");
  if (!(a >= 0.0) || !(a < 1.0)) throw DomainError("conditioned: a must lie in [0, 1)");
  const std::size_t inner = degree - static_cast<std::size_t>(m);
  Draw g0 = bounded(rng, inner);
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const Complex w0 = g0.f[0];
  // |w0| = 1 only for unimodular constants; rounding can leave it just below 1.
  if (!(std::norm(w0) < 1.0 - 1e-12)) return std::nullopt;
  // phi = M_a o psi_{w0}: psi_{w0}(w) = (w - w0)/(1 - conj(w0) w), M_a(w) = (w + a)/(1 + a w).
  const Complex wc = std::conj(w0);
  const auto u = series_ops::mobius_compose(g0.f.coeffs(), 1.0 - a * wc, a - w0, a - wc, 1.0 - a * w0, inner);
  const Complex rot = std::polar(1.0, theta);
  std::vector<Complex> c(degree + 1);
  for (std::size_t k = 0; k <= inner; ++k) c[k + static_cast<std::size_t>(m)] = rot * u[k];
  json params{{"base", g0.params}, {"m", m}, {"a", a}, {"phase", theta}};
  return Draw{PowerSeries(std::move(c), static_cast<std::size_t>(m), std::nullopt), std::move(params),
              g0.unit_norm};
}

}  // namespace generators

const std::vector<std::string>& fuzz_bound_ids() {
  static const std::vector<std::string> ids{"g_ratio",   "area",  "theorem_D", "theorem_3",
                                            "old_derivative_bound", "bohr_13"};
  return ids;
}

FuzzReport fuzz(const std::string& bound_id, const FuzzParams& params, long trials, std::uint64_t seed) {
  if (trials < 0) throw ContractError("fuzz: trials must be >= 0");
  FuzzReport rep;
  rep.bound_id = bound_id;
  rep.trials = trials;
  rep.seed = seed;

  if (bound_id == "g_ratio") {
    fuzz_g_ratio(params, trials, seed, rep);
  } else if (bound_id == "area") {
    fuzz_area(params, trials, seed, rep);
  } else if (bound_id == "theorem_D" || bound_id == "theorem_3") {
    check_a(params);
    const auto c = WeightSequence::parse(params.weights);
    MajorantBound mb;
    if (bound_id == "theorem_D") {
      mb = theorem_D_exact(c, params.m, params.l, params.r, params.a);
    } else {
      const int s = params.s > 0 ? params.s : theorem_3_index(c, params.m, params.r, params.a);
      mb = theorem_3_bounds(c, params.m, params.l, s, params.r, params.a);
      rep.lower = mb.lower;
    }
    require_conditions(bound_id, mb);
    const OperatorSpec op(c, params.m, params.l, 1.0);
    const double r = params.r;
    fuzz_conditioned(params, params.m, trials, seed, mb.upper,
                     [&](const PowerSeries& f) { return operator_majorant(op, f, r).value; }, rep);
  } else if (bound_id == "old_derivative_bound") {
    check_a(params);
    const auto op = differentiation_spec(1);
    const double r = params.r;
    fuzz_conditioned(params, 1, trials, seed, old_derivative_majorant(r, params.a),
                     [&](const PowerSeries& f) { return operator_majorant(op, f, r).value; }, rep);
  } else if (bound_id == "bohr_13") {
    if (!(params.r >= 0.0) || !(params.r < 1.0)) throw DomainError("bohr_13: r must lie in [0, 1)");
    const std::size_t N = pick_degree(params, 256);
    Tracker track(rep);
    for (const double a : {0.0, 0.5, 0.9, 0.99}) {
      track.record(majorant_series(mobius_series(a, N), params.r).value, 1.0,
                   json{{"extremal", "(z+a)/(1+az)"}, {"a", a}});
    }
    for (long t = 0; t < trials; ++t) {
      TrialRng rng(seed, static_cast<std::uint64_t>(t));
      auto d = generators::bounded(rng, N);
      d.params["trial"] = t;
      track.record(majorant_series(d.f, params.r).value, 1.0, d.params);
    }
  } else {
    throw ContractError("fuzz: unknown bound id '" + bound_id + "'");
  }
  return rep;
}

double goluzin_check(const PowerSeries& f, const PowerSeries& g, const std::vector<double>& lambda) {
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (!(lambda[k] >= 0.0)) throw ContractError("goluzin_check: weights must be nonnegative");
    if (k > 0 && lambda[k] > lambda[k - 1] * (1.0 + 1e-14)) {
      throw ContractError("goluzin_check: weights increase at n = " + std::to_string(k + 1));
    }
  }
  double sa = 0.0;
  double sb = 0.0;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    sa += lambda[k] * std::norm(f[k + 1]);
    sb += lambda[k] * std::norm(g[k + 1]);
  }
  return sb - sa;
}

LambdaSequence lambda_rule(const WeightSequence& c, double r, int s, int terms) {
  if (s < 1) throw ContractError("lambda_rule: s must be >= 1");
  if (terms < s) throw ContractError("lambda_rule: need at least s terms");
  if (c.start_index() > s) throw ContractError("lambda_rule: weights must be defined from n = s");
  if (!(r >= 0.0) || !(r < 1.0)) throw DomainError("lambda_rule: r must lie in [0, 1)");
  LambdaSequence out{s, r, std::vector<double>(static_cast<std::size_t>(terms)), true};
  const double r2 = r * r;
  const double head = c(s) * std::pow(r2, s);
  double r2n = 1.0;
  for (int n = 1; n <= terms; ++n) {
    r2n *= r2;
    out.values[static_cast<std::size_t>(n - 1)] = n <= s ? head : c(n) * r2n;
  }
  for (std::size_t k = 1; k < out.values.size(); ++k) {
    if (out.values[k] > out.values[k - 1] * (1.0 + 1e-12)) {
      out.non_increasing = false;
      break;
    }
  }
  return out;
}

LambdaSequence lambda_sequence(const WeightSequence& c, double r, int s, int terms) {
  if (s < 1) throw ContractError("lambda_sequence: s must be >= 1");
  const double edge = tail_ratio_inf(c, s);
  if (r * r > edge * (1.0 + 1e-14)) {
    std::ostringstream os;
    os << "lambda_sequence: r^2 = " << r * r << " exceeds inf_{n>=" << s << "} c_n/c_{n+1} = " << edge;
    throw ContractError(os.str());
  }
  return lambda_rule(c, r, s, terms);
}

AreaSearchResult extremal_search_area(const LacunarySpec& spec, int s, double r, long budget,
                                      std::uint64_t seed) {
  const LacunarySpec checked(spec.m, spec.p);
  if (!(r > 0.0) || !(r < 1.0)) throw DomainError("extremal_search_area: r must lie in (0, 1)");
  const auto ab = area_bound(checked, r);
  if (ab.s != s) {
    throw ContractError("extremal_search_area: r^{2m} lies in window " + std::to_string(ab.s) + ", not " +
                        std::to_string(s));
  }
  const double bound = ab.value(r, 1.0);
  const std::size_t N = kDefaultDegree;
  AreaSearchResult res;
  auto consider = [&](const PowerSeries& f, const std::string& label) {
    ++res.evaluated;
    const double ratio = area_functional(f, r).value / bound;
    if (ratio > res.best_ratio) {
      res.best_ratio = ratio;
      res.best_label = label;
    }
    return ratio;
  };
  for (int k = 0; k <= 2 * s; ++k) {
    const auto n = static_cast<std::size_t>(checked.m * k + checked.p);
    const double ratio = consider(PowerSeries::monomial(n, 1.0, std::max(N, n)), "z^" + std::to_string(n));
    if (k == s) res.extremal_ratio = ratio;
  }
  const std::size_t inner_degree = (N - static_cast<std::size_t>(checked.p)) / static_cast<std::size_t>(checked.m);
  for (long t = 0; t < budget; ++t) {
    TrialRng rng(seed, static_cast<std::uint64_t>(t));
    const bool use_schur = (t % 2) == 1;
    const Draw d = use_schur ? generators::schur(rng, inner_degree, true) : generators::blaschke(rng, inner_degree);
    consider(lacunary_series(checked, d.f, N), (use_schur ? "schur#" : "blaschke#") + std::to_string(t));
  }
  return res;
}

}  // namespace bohrlab
