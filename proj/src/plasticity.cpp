#include "colsnn/plasticity.hpp"

#include <algorithm>
#include <cmath>

namespace colsnn {

std::pair<double, double> effective_rates(const StabilityState& st, const PlasticityParams& p) {
    const double s = st.enabled ? st.s : 0.0;
    const double factor = std::min(std::exp2(-s), 1.0);
    return {p.d_h_max * factor, p.d_d_max * factor};
}

bool on_post_spike(TssTracker& tss, StabilityState& st, Time t, const PlasticityParams& p) {
    const bool onset =
        !tss.last_post_spike.has_value() || (t - *tss.last_post_spike > p.isi_max);
    if (onset) {
        tss.current_tss_onset = t;
        std::fill(tss.depressed_this_tss.begin(), tss.depressed_this_tss.end(), 0);
        if (st.enabled) st.s -= p.d_s;
    }
    tss.last_post_spike = t;
    return onset;
}

static void set_resource(Synapse& syn, double resource, LNeuronPlasticity& lp,
                         const PlasticityParams& p) {
    const double w_old = syn.weight;
    syn.resource = resource;
    syn.weight = resource_to_weight(resource, p);
    lp.step_abs_weight_change += std::abs(syn.weight - w_old);
}

void apply_anti_hebbian(std::span<Synapse> synapses, LNeuronPlasticity& lp, Time t,
                        const PlasticityParams& p) {
    if (!lp.tss.current_tss_onset.has_value()) return;
    const double window_lo = static_cast<double>(*lp.tss.current_tss_onset) - p.t_h;
    const double d_h = effective_rates(lp.stability, p).first;

    lp.scratch_changed.clear();
    double delta = 0.0;
    for (std::uint32_t i = 0; i < lp.plastic.size(); ++i) {
        if (lp.tss.depressed_this_tss[i]) continue;
        Synapse& syn = synapses[lp.plastic[i]];
        if (syn.last_arrival == kNever) continue;
        if (static_cast<double>(syn.last_arrival) < window_lo) continue;
        set_resource(syn, syn.resource - d_h, lp, p);
        lp.tss.depressed_this_tss[i] = 1;
        lp.scratch_changed.push_back(i);
        delta -= d_h;
    }
    if (!lp.scratch_changed.empty())
        conserve_total_resource(synapses, lp, lp.scratch_changed, delta, p);
}

void apply_dopamine(std::span<Synapse> synapses, LNeuronPlasticity& lp, Time t,
                    const PlasticityParams& p) {
    const double d_d = effective_rates(lp.stability, p).second;
    const double window_lo = static_cast<double>(t) - p.t_p;

    lp.scratch_changed.clear();
    double delta = 0.0;
    for (std::uint32_t i = 0; i < lp.plastic.size(); ++i) {
        Synapse& syn = synapses[lp.plastic[i]];
        if (syn.last_arrival == kNever) continue;
        if (static_cast<double>(syn.last_arrival) < window_lo) continue;
        set_resource(syn, syn.resource + d_d, lp, p);
        lp.scratch_changed.push_back(i);
        delta += d_d;
    }
    if (!lp.scratch_changed.empty())
        conserve_total_resource(synapses, lp, lp.scratch_changed, delta, p);

    if (lp.stability.enabled) {
        // Peak reinforcement when the latest TSS started exactly isi_max ago;
        // a neuron silent for a long time (no TSS at all) takes the -1 clamp.
        double adj = -1.0;
        if (lp.tss.current_tss_onset.has_value()) {
            const double t_tss = static_cast<double>(t - *lp.tss.current_tss_onset);
            const double isi = static_cast<double>(p.isi_max);
            adj = std::max(2.0 - std::abs(t_tss - isi) / isi, -1.0);
        }
        lp.stability.s += p.d_s * adj;
    }
}

void conserve_total_resource(std::span<Synapse> synapses, LNeuronPlasticity& lp,
                             std::span<const std::uint32_t> changed, double applied_delta,
                             const PlasticityParams& p) {
    if (applied_delta == 0.0) return;
    const std::size_t n_connected = lp.plastic.size();
    const std::size_t pool = n_connected - changed.size() + lp.silent.size();
    if (pool == 0) {
        ++lp.degenerate_skips;
        return;
    }
    const double comp = -applied_delta / static_cast<double>(pool);
    std::size_t skip = 0;  // `changed` is ascending by construction
    for (std::uint32_t i = 0; i < n_connected; ++i) {
        if (skip < changed.size() && changed[skip] == i) {
            ++skip;
            continue;
        }
        Synapse& syn = synapses[lp.plastic[i]];
        set_resource(syn, syn.resource + comp, lp, p);
    }
    for (double& r : lp.silent) r += comp;
}

double total_resource(std::span<const Synapse> synapses, const LNeuronPlasticity& lp) {
    double total = 0.0;
    for (SynId id : lp.plastic) total += synapses[id].resource;
    for (double r : lp.silent) total += r;
    return total;
}

}  // namespace colsnn
