// gadget.hpp
// Measurement gadgets: a unitary U on the system/environment/observer space
// together with the initial environment-observer state chi. The induced
// channel rho_S -> U (rho_S (x) chi) U^dag is the measurement; tracing down
// to the observer memory gives the result channel, tracing down to the
// system gives the disturbance channel.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qagent/states.hpp"

namespace qagent {

struct MeasurementGadget {
  SystemLayout layout;  // factors S, E, O in that order; dim(E) == 1 when absent
  Matrix u;             // unitary on total_dim
  DensityMatrix chi;    // initial joint state on E (x) O
  std::string name;     // builder tag; empty for ad-hoc gadgets

  // Documented properties (broadcastable, motility, reversibility) attached
  // by the builders. These are recorded facts, not computed predicates.
  std::map<std::string, std::string> flags;

  int dim_s() const { return layout.dim_of(Label::S); }
  int dim_e() const { return layout.dim_of(Label::E); }
  int dim_o() const { return layout.dim_of(Label::O); }
};

// Validates unitarity of u, the chi invariants, and dimension consistency.
MeasurementGadget make_gadget(SystemLayout layout, Matrix u, DensityMatrix chi,
                              std::string name = {},
                              std::map<std::string, std::string> flags = {});

// Two-stage construction of a projective measurement: the environment picks
// up the outcome index through controlled shifts, then the observer copies
// it from the environment. Projectors must be Hermitian, idempotent,
// mutually orthogonal and sum to the identity.
MeasurementGadget make_von_neumann(const std::vector<Matrix>& projectors);

// Full exchange of system and memory. No environment; zero uncertainty at
// the price of maximal back-action.
MeasurementGadget make_swap(int d);

// exp(-i SWAP t) between system and memory; reaches the full swap (up to a
// global phase) at t = pi/2.
MeasurementGadget make_partial_swap(int d, double t);

// Swap followed by copying the memory's basis index into a d-dimensional
// environment, which dephases the memory in that basis.
MeasurementGadget make_dephased_swap(int d);

// Gadget with Haar-random u and random chi; property-test generator.
MeasurementGadget random_gadget(int dim_s, int dim_e, int dim_o, std::uint64_t seed);

// The full channel: U (rho_S (x) chi) U^dag on S,E,O.
DensityMatrix apply(const MeasurementGadget& g, const DensityMatrix& rho_s);

// Reduced state left in the observer memory.
DensityMatrix result_channel(const MeasurementGadget& g, const DensityMatrix& rho_s);

// Reduced state left in the system.
DensityMatrix disturbance_channel(const MeasurementGadget& g, const DensityMatrix& rho_s);

// d^2 pure probe states spanning the Hermitian operators on dimension d:
// the basis projectors plus the +1 eigenstates of the off-diagonal X- and
// Y-type pairings. Channel equality on these probes is channel equality.
std::vector<DensityMatrix> probe_states(int d);

// True iff the result channel depends on the input state, decided through
// the mutual information the observer acquires about a reference maximally
// entangled with the system.
bool is_measurement(const MeasurementGadget& g);

// Same predicate decided directly: feed the d^2 probes through the result
// channel and look for two outputs further apart than the trace-distance
// threshold. Kept as an independent route for cross-validation.
bool is_measurement_by_probes(const MeasurementGadget& g);

// True iff measuring twice gives the same result: the result channel
// composed with the disturbance channel equals the result channel alone on
// every probe.
bool is_repeatable(const MeasurementGadget& g);

struct GadgetReport {
  bool is_measurement = false;
  double uncertainty_bits = 0.0;
  double back_action_bits = 0.0;
  bool repeatable = false;
  std::map<std::string, std::string> flags;
};

// Aggregate the computed predicates and metrics with the documented flags.
GadgetReport report(const MeasurementGadget& g);

}  // namespace qagent
