#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qagent/gadget.hpp"
#include "qagent/metrics.hpp"
#include "qagent/scenarios.hpp"
#include "test_support.hpp"

using namespace qagent;
using namespace qtest;

namespace {

std::vector<Matrix> z_projectors(int d) {
  std::vector<Matrix> ps;
  for (int k = 0; k < d; ++k) ps.push_back(basis_projector(d, k));
  return ps;
}

DensityMatrix plus_state() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return densify(pure_on(Label::S, v));
}

MeasurementGadget identity_gadget(int d) {
  const SystemLayout layout({{Label::S, d}, {Label::E, 1}, {Label::O, d}});
  const auto chi = make_density(SystemLayout({{Label::E, 1}, {Label::O, d}}),
                                basis_projector(d, 0));
  return make_gadget(layout, Matrix::Identity(d * d, d * d), chi);
}

}  // namespace

TEST_CASE("swap gadget moves the system state into the memory") {
  const auto g = make_swap(2);
  const auto psi = random_pure(2, 400);
  const auto out = apply(g, densify(psi));
  // Final S,E,O state is |0><0| (x) |psi><psi| with a trivial E in between.
  const Matrix expected = kron(basis_projector(2, 0), psi.vec * psi.vec.adjoint());
  CHECK((out.mat - expected).norm() < 1e-12);
  CHECK(validate(out).all_ok());
}

TEST_CASE("identity unitary leaves the joint state as a product") {
  const auto g = identity_gadget(2);
  const auto rho = random_density(2, 401);
  const auto out = apply(g, rho);
  CHECK((out.mat - kron(rho.mat, g.chi.mat)).norm() < 1e-13);
}

TEST_CASE("apply matches the kron-then-conjugate oracle") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = random_gadget(2, 2, 2, 410 + seed);
    const auto rho = random_density(2, 420 + seed);
    const Matrix joint = kron_oracle(rho.mat, g.chi.mat);
    const Matrix expected = mult_oracle(mult_oracle(g.u, joint), g.u.adjoint());
    CHECK((apply(g, rho).mat - expected).norm() < 1e-11);
  }
}

TEST_CASE("apply rejects a mismatched system dimension") {
  CHECK_THROWS_AS((void)apply(make_swap(2), random_density(3, 1)), std::invalid_argument);
}

TEST_CASE("swap result channel reproduces the input state") {
  const auto g = make_swap(2);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto psi = random_pure(2, 430 + seed);
    const auto result = result_channel(g, densify(psi));
    CHECK(trace_distance(result.mat, psi.vec * psi.vec.adjoint()) < 1e-12);
  }
}

TEST_CASE("projective qubit measurement leaves an even mixture of outcomes") {
  const auto g = make_von_neumann(z_projectors(2));
  const auto result = result_channel(g, plus_state());
  CHECK((result.mat - 0.5 * Matrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("a product unitary never produces a system-dependent result") {
  // U_SE (x) U_O: the memory factor never couples to the system, even when
  // the system and environment interact arbitrarily.
  const Matrix u = kron(random_unitary(4, 440), random_unitary(2, 442));
  auto base = random_gadget(2, 2, 2, 443);
  const auto g = make_gadget(base.layout, u, base.chi);
  const auto first = result_channel(g, random_density(2, 450));
  for (std::uint64_t seed = 1; seed < 10; ++seed) {
    const auto out = result_channel(g, random_density(2, 450 + seed));
    CHECK(trace_distance(out.mat, first.mat) < 1e-12);
  }
  CHECK(!is_measurement(g));
  CHECK(!is_measurement_by_probes(g));

  // The fully factored special case.
  const Matrix u3 = kron(random_unitary(2, 444), kron(random_unitary(2, 445), random_unitary(2, 446)));
  const auto g3 = make_gadget(base.layout, u3, base.chi);
  CHECK(!is_measurement(g3));
}

TEST_CASE("swap disturbance sends every state to the memory's initial state") {
  const auto g = make_swap(2);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto out = disturbance_channel(g, random_density(2, 460 + seed));
    CHECK(trace_distance(out.mat, basis_projector(2, 0)) < 1e-12);
  }
}

TEST_CASE("projective disturbance equals the dephasing map") {
  const auto projectors = z_projectors(2);
  const auto g = make_von_neumann(projectors);

  const auto dephased_plus = disturbance_channel(g, plus_state());
  CHECK((dephased_plus.mat - 0.5 * Matrix::Identity(2, 2)).norm() < 1e-12);

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto rho = random_density(2, 470 + seed);
    Matrix expected = Matrix::Zero(2, 2);
    for (const auto& p : projectors) {
      expected += mult_oracle(mult_oracle(p, rho.mat), p);
    }
    CHECK(trace_distance(disturbance_channel(g, rho).mat, expected) < 1e-12);
  }
}

TEST_CASE("identity gadget does not disturb the system") {
  const auto g = identity_gadget(2);
  const auto rho = random_density(2, 480);
  CHECK(trace_distance(disturbance_channel(g, rho).mat, rho.mat) < 1e-13);
}

TEST_CASE("two-stage projective measurement entangles system, environment and memory") {
  const auto g = make_von_neumann(z_projectors(2));
  const auto out = apply(g, plus_state());
  Vector ghz = Vector::Zero(8);
  ghz(0) = ghz(7) = 1.0 / std::sqrt(2.0);
  CHECK((out.mat - ghz * ghz.adjoint()).norm() < 1e-12);
}

TEST_CASE("measuring an eigenstate is deterministic") {
  const auto g = make_von_neumann(z_projectors(2));
  const auto zero = densify(pure_on(Label::S, basis_vec(2, 0)));
  const auto out = apply(g, zero);
  Vector expected = Vector::Zero(8);
  expected(0) = 1.0;  // |000>
  CHECK((out.mat - expected * expected.adjoint()).norm() < 1e-12);
  CHECK(trace_distance(result_channel(g, zero).mat, basis_projector(2, 0)) < 1e-12);
}

TEST_CASE("degenerate qutrit projectors obey the Born rule") {
  std::vector<Matrix> projectors(2, Matrix::Zero(3, 3));
  projectors[0](0, 0) = projectors[0](1, 1) = 1.0;
  projectors[1](2, 2) = 1.0;
  const auto g = make_von_neumann(projectors);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto rho = random_density(3, 490 + seed);
    const auto result = result_channel(g, rho);
    for (int k = 0; k < 2; ++k) {
      CHECK(result.mat(k, k).real() ==
            doctest::Approx(born_oracle(projectors[k], rho.mat)).epsilon(1e-10));
    }
  }
}

TEST_CASE("make_von_neumann validates the projector set") {
  // Not idempotent.
  CHECK_THROWS_AS((void)make_von_neumann({0.5 * Matrix::Identity(2, 2), 0.5 * Matrix::Identity(2, 2)}),
                  std::invalid_argument);
  // Incomplete.
  CHECK_THROWS_AS((void)make_von_neumann({basis_projector(3, 0), basis_projector(3, 1)}),
                  std::invalid_argument);
  // Not mutually orthogonal.
  Vector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const Matrix pp = plus * plus.adjoint();
  CHECK_THROWS_AS((void)make_von_neumann({basis_projector(2, 0), pp}), std::invalid_argument);
}

TEST_CASE("the swap unitary is an involution") {
  for (int d : {2, 3}) {
    const auto g = make_swap(d);
    CHECK((g.u * g.u - Matrix::Identity(d * d, d * d)).norm() < 1e-14);
  }
}

TEST_CASE("qutrit swap reaches zero uncertainty at maximal back-action") {
  const auto g = make_swap(3);
  CHECK(uncertainty(g).value_bits < 1e-9);
  CHECK(back_action(g).value_bits == doctest::Approx(2.0 * std::log2(3.0)).epsilon(1e-9));
}

TEST_CASE("partial swap endpoints") {
  CHECK(!is_measurement(make_partial_swap(2, 0.0)));
  CHECK(uncertainty(make_partial_swap(2, std::numbers::pi / 2.0)).value_bits < 1e-9);
}

TEST_CASE("partial swap at pi/4 sits strictly between the extremes") {
  const double u = uncertainty(make_partial_swap(2, std::numbers::pi / 4.0)).value_bits;
  CHECK(u > 1e-3);
  CHECK(u < 2.0 - 1e-3);
  CHECK(u == doctest::Approx(1.0).epsilon(1e-9));  // frozen from the numeric run
}

TEST_CASE("dephased swap leaves the system-memory state as a product") {
  const auto g = make_dephased_swap(2);
  const auto so = reduce(apply(g, plus_state()), {Label::S, Label::O});
  Matrix expected = kron(basis_projector(2, 0), 0.5 * Matrix::Identity(2, 2));
  CHECK((so.mat - expected).norm() < 1e-12);
}

TEST_CASE("dephased swap passes basis states through unchanged") {
  const auto g = make_dephased_swap(2);
  const auto zero = densify(pure_on(Label::S, basis_vec(2, 0)));
  CHECK(trace_distance(result_channel(g, zero).mat, basis_projector(2, 0)) < 1e-12);
}

TEST_CASE("dephased swap metrics: Heisenberg uncertainty, maximal back-action") {
  const auto g = make_dephased_swap(2);
  CHECK(uncertainty(g).value_bits == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(back_action(g).value_bits == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("is_measurement on the canonical examples") {
  CHECK(is_measurement(make_swap(2)));
  CHECK(is_measurement(make_von_neumann(z_projectors(2))));
  CHECK(!is_measurement(identity_gadget(2)));
  // Two simultaneous swap couplings cancel out at t = 2 pi / 3.
  CHECK(!is_measurement(simul_gadget(2, 2.0 * std::numbers::pi / 3.0)));
  CHECK(is_measurement(simul_gadget(2, 0.5)));
}

TEST_CASE("probe route and mutual-information route agree on random gadgets") {
  for (int i = 0; i < 50; ++i) {
    const auto g = random_gadget(2, 1 + (i % 3), 2 + (i % 3), 600 + i);
    CHECK(is_measurement(g) == is_measurement_by_probes(g));
  }
}

TEST_CASE("repeatability of the three measurement types") {
  CHECK(is_repeatable(make_von_neumann(z_projectors(2))));
  CHECK(!is_repeatable(make_swap(2)));
  CHECK(!is_repeatable(make_dephased_swap(2)));
}

TEST_CASE("gadget reports aggregate the metrics") {
  const auto vn = report(make_von_neumann(z_projectors(2)));
  CHECK(vn.is_measurement);
  CHECK(vn.uncertainty_bits == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(vn.back_action_bits == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(vn.repeatable);
  CHECK(vn.flags.at("broadcastable") == "yes");

  const auto sw = report(make_swap(2));
  CHECK(sw.is_measurement);
  CHECK(sw.uncertainty_bits < 1e-9);
  CHECK(sw.back_action_bits == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(!sw.repeatable);

  const auto id = report(identity_gadget(2));
  CHECK(!id.is_measurement);
  CHECK(id.uncertainty_bits == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(id.back_action_bits < 1e-9);
}

TEST_CASE("channel outputs are valid density matrices for random gadgets") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_gadget(2, 2, 3, 700 + seed);
    const auto rho = random_density(2, 710 + seed);
    CHECK(validate(apply(g, rho)).all_ok());
    CHECK(validate(result_channel(g, rho)).all_ok());
    CHECK(validate(disturbance_channel(g, rho)).all_ok());
    CHECK(std::abs(apply(g, rho).mat.trace().real() - 1.0) < 1e-9);
  }
}

TEST_CASE("the result channel is linear") {
  const auto g = random_gadget(2, 2, 2, 720);
  const auto rho = random_density(2, 721);
  const auto sigma = random_density(2, 722);
  const double alpha = 0.3;
  const DensityMatrix mix{rho.layout, alpha * rho.mat + (1.0 - alpha) * sigma.mat};
  const Matrix direct = result_channel(g, mix).mat;
  const Matrix combined =
      alpha * result_channel(g, rho).mat + (1.0 - alpha) * result_channel(g, sigma).mat;
  CHECK((direct - combined).norm() < 1e-10);
}

TEST_CASE("a global phase on the unitary changes nothing") {
  const auto g = random_gadget(2, 2, 2, 730);
  const Complex phase = std::exp(Complex(0.0, 0.77));
  const auto g2 = make_gadget(g.layout, phase * g.u, g.chi);
  const auto rho = random_density(2, 731);
  CHECK((apply(g, rho).mat - apply(g2, rho).mat).norm() < 1e-12);
  CHECK(uncertainty(g).value_bits == doctest::Approx(uncertainty(g2).value_bits).epsilon(1e-10));
}

TEST_CASE("result diagonals follow the Born rule for projective gadgets") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    // Random orthonormal basis defines the projector set.
    const Matrix u = random_unitary(3, 740 + seed);
    std::vector<Matrix> projectors;
    for (int k = 0; k < 3; ++k) {
      projectors.push_back(u.col(k) * u.col(k).adjoint());
    }
    const auto g = make_von_neumann(projectors);
    const auto rho = random_density(3, 750 + seed);
    const auto result = result_channel(g, rho);
    for (int k = 0; k < 3; ++k) {
      CHECK(result.mat(k, k).real() ==
            doctest::Approx(born_oracle(projectors[k], rho.mat)).epsilon(1e-10));
    }
  }
}

TEST_CASE("make_gadget validates the unitary") {
  const auto g = make_swap(2);
  CHECK_THROWS_AS((void)make_gadget(g.layout, 2.0 * g.u, g.chi), std::invalid_argument);
}
