// metrics.hpp
// Information-theoretic quantification of measurements. A reference system A
// starts maximally entangled with S; uncertainty is the shortfall of the
// A-O mutual information from its maximum 2 log2 d after the measurement,
// back-action the shortfall of the A-S mutual information.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qagent/gadget.hpp"
#include "qagent/states.hpp"

namespace qagent {

struct MetricResult {
  double value_bits = 0.0;
  // Intermediate entropies in bits: S_X, S_Y, S_XY.
  std::map<std::string, double> components;
};

// S(rho_X) + S(rho_Y) - S(rho_XY) in bits for disjoint label sets X, Y.
// Negative roundoff is clipped to zero.
MetricResult mutual_information(const DensityMatrix& rho, const std::vector<Label>& x,
                                const std::vector<Label>& y);

// Post-measurement state on A,S,E,O for the maximally entangled A-S input.
DensityMatrix reference_output(const MeasurementGadget& g);

// tau_AO: reduced A-observer state after the measurement.
DensityMatrix reference_result_state(const MeasurementGadget& g);

// tau_AS: reduced A-system state after the measurement.
DensityMatrix reference_system_state(const MeasurementGadget& g);

// 2 log2 d - I_{A:O}, clipped to >= 0.
MetricResult uncertainty(const MeasurementGadget& g);

// 2 log2 d - I_{A:S}, clipped to >= 0.
MetricResult back_action(const MeasurementGadget& g);

// log2 d: the uncertainty and back-action of an ideal projective measurement.
double heisenberg_limit(int d);

// Zero uncertainty certifies a perfectly recoverable result channel.
bool is_maximally_informative(const MeasurementGadget& g);

// All probe states are driven to the same fixed point by the disturbance.
bool is_maximally_disturbing(const MeasurementGadget& g);

// ---- local channels, used by the monotonicity checks ----

// Kraus operators of a random channel dim_in -> dim_out obtained from a Haar
// random isometry into dim_out (x) n_env followed by tracing the environment.
std::vector<Matrix> random_kraus_channel(int dim_in, int dim_out, int n_env,
                                         std::uint64_t seed);

// Apply a Kraus channel to one labeled factor of a multipartite state. The
// factor's dimension becomes the channel's output dimension.
DensityMatrix apply_channel_on(const DensityMatrix& rho, Label target,
                               const std::vector<Matrix>& kraus);

}  // namespace qagent
