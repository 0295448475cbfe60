#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "colsnn/neuron.hpp"

namespace colsnn {

// Weight dynamics of the learning neurons: resource->weight saturation,
// tight-spike-sequence bookkeeping, anti-Hebbian depression, dopamine
// potentiation, stability modulation and total-resource conservation.

struct PlasticityParams {
    double w_min = -0.019;   // < 0
    double w_max = 0.45;     // > 0
    double d_h_max = 0.049;  // maximum anti-Hebbian step
    double d_d_max = 0.049;  // maximum dopamine step (kept equal to d_h_max)
    double d_s = 0.0;        // stability step
    bool stability_enabled = false;
    Time isi_max = 100;      // TSS tightness bound, = interval length L
    double t_h = 3.0;        // pre-TSS eligibility window, = 3 tau
    double t_p = 103.0;      // dopamine look-back window, = L + 3 tau
    std::uint32_t n_silent = 118;

    bool valid() const {
        return w_min < 0.0 && w_max > 0.0 && d_h_max >= 0.0 && d_d_max >= 0.0 &&
               isi_max > 0 && t_h >= 0.0 && t_p >= 0.0;
    }
};

struct TssTracker {
    std::optional<Time> last_post_spike;
    std::optional<Time> current_tss_onset;
    // Per connected plastic synapse: already depressed in the current TSS.
    std::vector<std::uint8_t> depressed_this_tss;
};

struct StabilityState {
    double s = 0.0;
    bool enabled = false;
};

// Per-L-neuron plasticity state. `plastic` indexes into the network synapse
// array; `silent` holds the unconnected reservoir resources.
struct LNeuronPlasticity {
    std::vector<SynId> plastic;
    std::vector<double> silent;
    TssTracker tss;
    StabilityState stability;
    double initial_total_resource = 0.0;
    double step_abs_weight_change = 0.0;  // |dw| accumulator, reset by caller
    std::uint64_t degenerate_skips = 0;
    std::vector<std::uint32_t> scratch_changed;  // indices changed by one rule application
};

// Eq.-style saturating map from unbounded resource to weight in
// [w_min, w_max); constant for W <= 0, non-decreasing in W.
inline double resource_to_weight(double resource, const PlasticityParams& p) {
    const double span = p.w_max - p.w_min;
    const double r = resource > 0.0 ? resource : 0.0;
    return p.w_min + span * r / (span + r);
}

// Both plasticity magnitudes attenuate exponentially with stability:
// d = d_max * min(2^-s, 1). Disabled stability behaves as s = 0.
std::pair<double, double> effective_rates(const StabilityState& st, const PlasticityParams& p);

// Post-spike bookkeeping at firing time t. Returns true when t starts a new
// TSS (first spike ever, or gap since the previous one exceeds isi_max); a
// new TSS clears the per-TSS depression guard and costs d_s of stability.
bool on_post_spike(TssTracker& tss, StabilityState& st, Time t, const PlasticityParams& p);

// Depresses, once per TSS, every plastic synapse with a presynaptic arrival
// since tss_onset - t_h. Call after on_post_spike at each L firing time.
void apply_anti_hebbian(std::span<Synapse> synapses, LNeuronPlasticity& lp, Time t,
                        const PlasticityParams& p);

// Dopamine arrival at time t: potentiates every plastic synapse with a
// presynaptic arrival within t_p, then adjusts stability from the distance
// between the latest TSS onset and t.
void apply_dopamine(std::span<Synapse> synapses, LNeuronPlasticity& lp, Time t,
                    const PlasticityParams& p);

// Distributes -applied_delta uniformly over every synapse (connected or
// silent) that the triggering rule did not change, keeping the neuron's
// total resource constant. `changed` flags connected synapses by position in
// lp.plastic. The degenerate case (nothing left to compensate) is skipped
// and counted.
void conserve_total_resource(std::span<Synapse> synapses, LNeuronPlasticity& lp,
                             std::span<const std::uint32_t> changed, double applied_delta,
                             const PlasticityParams& p);

// Connected + silent resource total; conserved over a run.
double total_resource(std::span<const Synapse> synapses, const LNeuronPlasticity& lp);

}  // namespace colsnn
