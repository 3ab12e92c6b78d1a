#include "qagent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "qagent/gadget.hpp"
#include "qagent/metrics.hpp"
#include "qagent/scenarios.hpp"

namespace qagent {

namespace {

constexpr double kTwoPiOverThree = 2.0 * std::numbers::pi / 3.0;

double uniform_time(std::uint64_t seed, double range) {
  std::mt19937_64 rng(seed);
  return range * std::generate_canonical<double, 53>(rng);
}

MeasurementGadget theorem1_gadget(int index, std::uint64_t seed) {
  // Cycles through environment/memory sizes, including dim-1 environments.
  const int dims_e[] = {1, 2, 3, 4};
  const int dims_o[] = {2, 3, 4};
  return random_gadget(2, dims_e[index % 4], dims_o[index % 3], seed + index);
}

}  // namespace

std::vector<SuiteCheck> verify_analytic_vs_oracle(std::uint64_t seed, int pairs) {
  SuiteCheck result_check{"analytic-oracle", "result channel closed form vs expm", true, 0, 0.0};
  SuiteCheck disturb_check{"analytic-oracle", "disturbance closed form vs expm", true, 0, 0.0};
  SuiteCheck ancilla_check{"analytic-oracle", "entangled-reference closed form vs expm", true, 0, 0.0};

  for (int i = 0; i < pairs; ++i) {
    const int d = (i % 2 == 0) ? 2 : 3;
    const auto psi = random_pure(d, seed + 1000 + i);
    const double t = uniform_time(seed + 2000 + i, 2.0 * std::numbers::pi);

    const auto evolved = simul_evolve(psi, t, false);
    const auto full = densify(evolved.state);
    const Matrix oracle_result = reduce(full, {Label::O_A}).mat;
    const Matrix oracle_disturb = reduce(full, {Label::S}).mat;

    const double dr = trace_distance(simul_result_analytic(psi, t).mat, oracle_result);
    const double dd = trace_distance(simul_disturbance_analytic(psi, t).mat, oracle_disturb);
    result_check.worst = std::max(result_check.worst, dr);
    disturb_check.worst = std::max(disturb_check.worst, dd);
    ++result_check.cases;
    ++disturb_check.cases;
  }

  for (int i = 0; i < pairs; ++i) {
    const double t = uniform_time(seed + 3000 + i, 2.0 * std::numbers::pi);
    const auto evolved = simul_evolve(random_pure(2, seed), t, true);
    const Matrix oracle = reduce(densify(evolved.state), {Label::A, Label::O_A}).mat;
    const double dist = trace_distance(simul_ancilla_result_analytic(t).mat, oracle);
    ancilla_check.worst = std::max(ancilla_check.worst, dist);
    ++ancilla_check.cases;
  }

  result_check.passed = result_check.worst < tol::state_eq;
  disturb_check.passed = disturb_check.worst < tol::state_eq;
  ancilla_check.passed = ancilla_check.worst < tol::state_eq;
  return {result_check, disturb_check, ancilla_check};
}

std::vector<SuiteCheck> verify_theorem1(std::uint64_t seed, int gadgets) {
  SuiteCheck agreement{"theorem1", "probe / mutual-information / product-state agreement", true, 0, 0.0};

  auto examine = [&](const MeasurementGadget& g) {
    const bool by_info = is_measurement(g);
    const bool by_probes = is_measurement_by_probes(g);
    const bool by_product = theorem1_check(g);  // true iff the routes agree
    if (by_info != by_probes || !by_product) {
      agreement.passed = false;
    }
    ++agreement.cases;
  };

  for (int i = 0; i < gadgets; ++i) {
    examine(theorem1_gadget(i, seed));
  }
  // Constructed non-measurements: product unitaries never correlate the
  // memory with the system, whatever chi is.
  for (int i = 0; i < 10; ++i) {
    const int dim_e = 1 + (i % 3);
    const int dim_o = 2 + (i % 2);
    const Matrix u = kron(random_unitary(2, seed + 7000 + i),
                          random_unitary(dim_e * dim_o, seed + 7100 + i));
    auto base = random_gadget(2, dim_e, dim_o, seed + 7200 + i);
    examine(make_gadget(base.layout, u, base.chi));
  }
  return {agreement};
}

std::vector<SuiteCheck> verify_monotonicity(std::uint64_t seed, int pairs) {
  SuiteCheck unc{"monotonicity", "uncertainty non-decreasing under channels on O", true, 0,
                 std::numeric_limits<double>::infinity()};
  SuiteCheck back{"monotonicity", "back-action non-decreasing under channels on S", true, 0,
                  std::numeric_limits<double>::infinity()};
  SuiteCheck invariant{"monotonicity", "channels on O leave the disturbance unchanged", true, 0, 0.0};

  for (int i = 0; i < pairs; ++i) {
    const auto g = random_gadget(2, 1 + (i % 2), 2 + (i % 2), seed + 100 + i);
    const int dim_o = g.dim_o();
    const int dim_out = 2 + (i % 2);
    const auto kraus = random_kraus_channel(dim_o, dim_out, 2, seed + 500 + i);

    const double base = uncertainty(g).value_bits;
    const auto tau = apply_channel_on(reference_result_state(g), Label::O, kraus);
    const double after =
        std::max(0.0, 2.0 * heisenberg_limit(2) -
                          mutual_information(tau, {Label::A}, {Label::O}).value_bits);
    unc.worst = std::min(unc.worst, after - base);
    if (after < base - tol::state_eq) unc.passed = false;
    ++unc.cases;

    // Composing on O is invisible to the system reduction.
    const auto probe = random_density(2, seed + 900 + i);
    const auto full_after = apply_channel_on(apply(g, probe), Label::O, kraus);
    const double dist =
        (reduce(full_after, {Label::S}).mat - disturbance_channel(g, probe).mat).norm();
    invariant.worst = std::max(invariant.worst, dist);
    if (dist > 1e-12) invariant.passed = false;
    ++invariant.cases;
  }

  for (int i = 0; i < pairs; ++i) {
    const auto g = random_gadget(2, 1 + (i % 2), 2 + (i % 2), seed + 1300 + i);
    const auto kraus = random_kraus_channel(2, 2, 2, seed + 1700 + i);

    const double base = back_action(g).value_bits;
    const auto tau = apply_channel_on(reference_system_state(g), Label::S, kraus);
    const double after =
        std::max(0.0, 2.0 * heisenberg_limit(2) -
                          mutual_information(tau, {Label::A}, {Label::S}).value_bits);
    back.worst = std::min(back.worst, after - base);
    if (after < base - tol::state_eq) back.passed = false;
    ++back.cases;
  }
  return {unc, back, invariant};
}

std::vector<SuiteCheck> verify_monogamy(std::uint64_t seed, int gadgets) {
  SuiteCheck check{"monogamy", "measurements have strictly positive back-action", true, 0,
                   std::numeric_limits<double>::infinity()};
  for (int i = 0; i < gadgets; ++i) {
    const auto g = theorem1_gadget(i, seed + 31000);
    if (is_measurement(g)) {
      const double b = back_action(g).value_bits;
      check.worst = std::min(check.worst, b);
      if (b <= tol::state_eq) check.passed = false;
    }
    ++check.cases;
  }
  return {check};
}

std::vector<SuiteCheck> run_all_verifications(std::uint64_t seed) {
  std::vector<SuiteCheck> all;
  for (auto&& batch : {verify_analytic_vs_oracle(seed), verify_theorem1(seed),
                       verify_monotonicity(seed), verify_monogamy(seed)}) {
    all.insert(all.end(), batch.begin(), batch.end());
  }
  return all;
}

bool all_passed(const std::vector<SuiteCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SuiteCheck& c) { return c.passed; });
}

}  // namespace qagent
