// scenarios.hpp
// Executable worked scenarios: the Wigner's-friend variants, two observers
// swapping with one system simultaneously (numeric evolution plus closed
// forms for the reduced states), and remote state preparation through a
// maximally entangled pair.

#pragma once

#include <string>
#include <vector>

#include "qagent/gadget.hpp"
#include "qagent/states.hpp"

namespace qagent {

// The dot starts in (|0>+|1>)/sqrt(2); the friend's memory is O_A and
// Wigner's is O_B.
//   friend-von-neumann : the friend records the dot's position.
//   wigner-asks-result : ...then Wigner copies the friend's record.
//   memory-handoff     : ...then Wigner swaps memories with the friend.
//   friend-swaps       : the friend swaps with the dot, then hands the
//                        memory to Wigner.
enum class WignerVariant {
  friend_von_neumann,
  wigner_asks_result,
  memory_handoff,
  friend_swaps,
};

std::string to_string(WignerVariant v);
WignerVariant wigner_variant_from_string(const std::string& tag);

// Final three-qubit pure state on (S, O_A, O_B) for the chosen variant.
PureState wigner_run(WignerVariant v);

// H = SWAP(S, O_A) + SWAP(S, O_B) on (S:d, O_A:d, O_B:d). The two terms do
// not commute; the spectrum on the relevant subspace is {2, 2, -1}, so all
// reduced states are periodic in t with period 2 pi / 3.
Matrix simul_hamiltonian(int d);

struct SimulSwapState {
  double t = 0.0;
  PureState state;  // on (S, O_A, O_B), or (A, S, O_A, O_B) with ancilla
  bool with_ancilla = false;
};

// exp(-i t H) applied to |psi>|0>|0>. With the ancilla flag the input is
// instead the maximally entangled A-S pair (psi fixes only the dimension)
// and A rides along untouched.
SimulSwapState simul_evolve(const PureState& psi, double t, bool with_ancilla);

// Closed form of the state left in O_A's memory. Matches the numeric
// evolution exactly; the mixture weight depends on t through cos(3t) only.
DensityMatrix simul_result_analytic(const PureState& psi, double t);

// Closed form of the post-measurement system state.
DensityMatrix simul_disturbance_analytic(const PureState& psi, double t);

// Closed form of the joint A-O_A state for the entangled reference input,
// d = 2. This is the state the sweep metrics are computed from.
DensityMatrix simul_ancilla_result_analytic(double t);

struct SweepRecord {
  double t = 0.0;
  double uncertainty_bits = 0.0;
  double info_gain_bits = 0.0;
  double back_action_bits = 0.0;
};

// Uniform grid over [t_min, t_max] (endpoints included) of the d = 2
// simultaneous-swap metrics: info gain I_{A:O_A}, uncertainty 2 - I_{A:O_A},
// back-action 2 - I_{A:S}.
std::vector<SweepRecord> simul_sweep(double t_min, double t_max, int steps);

// The simultaneous-swap interaction packaged as a measurement gadget from
// one observer's perspective; the other observer plays the environment.
MeasurementGadget simul_gadget(int d, double t);

// Remote state preparation: the system state selected by a rank-1 projector
// on the reference side of a maximally entangled pair,
// d * tr_A[(pi (x) 1) |Phi+><Phi+|]. Equals the transpose of pi.
DensityMatrix rsp_state(const Matrix& projector, int d);

// Cross-check of the product-state criterion: tau_AO is a product state
// exactly when the gadget is not a measurement. Returns whether the two
// predicates agree for this gadget.
bool theorem1_check(const MeasurementGadget& g);

}  // namespace qagent
