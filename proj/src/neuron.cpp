#include "colsnn/neuron.hpp"

namespace colsnn {

const char* role_name(Role r) {
    switch (r) {
        case Role::InputNode: return "input";
        case Role::L: return "L";
        case Role::WTA: return "WTA";
        case Role::GATE: return "GATE";
        case Role::V: return "V";
        case Role::SECREW: return "SECREW";
        case Role::TargetInput: return "target";
    }
    return "?";
}

const char* synapse_kind_name(SynapseKind k) {
    switch (k) {
        case SynapseKind::PlasticExcitatory: return "plastic";
        case SynapseKind::FixedExcitatory: return "fixed";
        case SynapseKind::Blocking: return "blocking";
        case SynapseKind::Dopamine: return "dopamine";
    }
    return "?";
}

void decay_to(NeuronState& n, Time t) {
    if (t <= n.last_update) return;
    Time gap = t - n.last_update;
    n.last_update = t;
    if (n.u == 0.0) return;
    if (n.decay_factor == 0.0) {
        n.u = 0.0;
        return;
    }
    // Sequential multiplication keeps this bit-identical with stepping the
    // decay once per skipped step.
    while (gap-- > 0) {
        n.u *= n.decay_factor;
        if (n.u == 0.0) return;
    }
}

bool advance_neuron(NeuronState& n, std::span<const double> increments, Time t) {
    decay_to(n, t);
    if (t < n.inactive_until) return false;
    for (double w : increments) n.u += w;
    if (n.u >= 1.0) {
        n.u = 0.0;
        return true;
    }
    return false;
}

void apply_block(NeuronState& n, Time duration, Time t) {
    const Time until = t + duration;
    if (until > n.inactive_until) n.inactive_until = until;
}

}  // namespace colsnn
