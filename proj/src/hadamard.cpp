#include "bohrlab/hadamard.hpp"

#include <cmath>
#include <sstream>

#include "bohrlab/errors.hpp"

namespace bohrlab {

OperatorSpec::OperatorSpec(WeightSequence w, int m_, int l_, double prefactor_)
    : weights(std::move(w)), m(m_), l(l_), prefactor(prefactor_) {
  if (m < 0) throw ContractError("OperatorSpec: m must be >= 0");
  if (weights.start_index() > m) {
    throw ContractError("OperatorSpec: weights must be positive from index m = " + std::to_string(m));
  }
}

OperatorSpec OperatorSpec::parse(const std::string& text) {
  if (text == "integrate") return integration_spec();
  if (text == "identity") return identity_spec(0);
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ContractError("operator: unknown spec '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  try {
    if (kind == "deriv") return differentiation_spec(std::stoi(rest));
    if (kind == "identity") return identity_spec(std::stoi(rest));
    if (kind == "custom") {
      // weights may contain commas; m, l, prefactor are the last three fields
      std::size_t cut = rest.size();
      std::string fields[3];
      for (int i = 2; i >= 0; --i) {
        const auto comma = rest.rfind(',', cut - 1);
        if (comma == std::string::npos) throw ContractError("operator: custom needs '<weights>,m,l,prefactor'");
        fields[i] = rest.substr(comma + 1, cut - comma - 1);
        cut = comma;
      }
      return OperatorSpec(WeightSequence::parse(rest.substr(0, cut)), std::stoi(fields[0]),
                          std::stoi(fields[1]), std::stod(fields[2]));
    }
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ContractError*>(&e) != nullptr) throw;
    throw ContractError("operator: cannot parse '" + text + "'");
  }
  throw ContractError("operator: unknown spec '" + text + "'");
}

std::string OperatorSpec::describe() const {
  std::ostringstream os;
  os << "c_n = " << weights.describe() << ", m = " << m << ", l = " << l << ", prefactor = " << prefactor;
  return os.str();
}

PowerSeries convolve(const OperatorSpec& spec, const PowerSeries& f) {
  if (f.vanish_order() < static_cast<std::size_t>(spec.m)) {
    throw ContractError("convolve: input vanishes to order " + std::to_string(f.vanish_order()) +
                        " but the operator needs order " + std::to_string(spec.m));
  }
  const long out_degree = static_cast<long>(f.degree()) + spec.l;
  std::vector<Complex> out(static_cast<std::size_t>(std::max(out_degree, 0L)) + 1);
  for (std::size_t n = static_cast<std::size_t>(spec.m); n <= f.degree(); ++n) {
    if (f[n] == Complex{}) continue;
    const long idx = static_cast<long>(n) + spec.l;
    if (idx < 0) throw ContractError("convolve: shift moves coefficient " + std::to_string(n) + " below 0");
    out[static_cast<std::size_t>(idx)] = spec.prefactor * spec.weights(static_cast<long>(n)) * f[n];
  }
  return PowerSeries(std::move(out));
}

OperatorSpec differentiation_spec(int m) {
  if (m < 1) throw ContractError("differentiation_spec: m must be >= 1");
  return OperatorSpec(WeightSequence::binomial(m), m, -m, std::tgamma(m + 1.0));
}

OperatorSpec integration_spec() { return OperatorSpec(WeightSequence::reciprocal(1.0, 0), 0, 1, 1.0); }

OperatorSpec identity_spec(int m) { return OperatorSpec(WeightSequence::constant(1.0, m), m, 0, 1.0); }

Estimate operator_majorant(const OperatorSpec& spec, const PowerSeries& f, double r) {
  if (!(r >= 0.0) || !(r < 1.0)) throw DomainError("operator_majorant: r must lie in [0, 1)");
  if (f.vanish_order() < static_cast<std::size_t>(spec.m)) {
    throw ContractError("operator_majorant: input does not vanish to order m");
  }
  Estimate e;
  for (std::size_t n = static_cast<std::size_t>(spec.m); n <= f.degree(); ++n) {
    const double an = std::abs(f[n]);
    if (an == 0.0) continue;
    const long k = static_cast<long>(n) + spec.l;
    double rk;
    if (r > 0.0) rk = std::pow(r, static_cast<double>(k));
    else if (k > 0) rk = 0.0;
    else if (k == 0) rk = 1.0;
    else throw DomainError("operator_majorant: r = 0 with a negative power on a nonzero coefficient");
    e.value += spec.weights(static_cast<long>(n)) * an * rk;
  }
  e.value *= spec.prefactor;
  if (const auto& t = f.tail()) {
    const double x = t->q * r;
    if (x == 0.0 || t->B == 0.0) {
      e.tail_error = 0.0;
    } else {
      e.tail_error = spec.prefactor * t->B * std::pow(r, spec.l) *
                     weighted_sum(spec.weights, x, static_cast<int>(f.degree()) + 1);
    }
  }
  return e;
}

}  // namespace bohrlab
