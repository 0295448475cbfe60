#pragma once

#include <cstdint>
#include <limits>
#include <span>

namespace colsnn {

using Time = std::int64_t;   // simulation step, 1 ms per step
using NeuronId = std::uint32_t;
using SynId = std::uint32_t;

inline constexpr Time kNever = std::numeric_limits<Time>::min();

enum class Role : std::uint8_t {
    InputNode,
    L,
    WTA,
    GATE,
    V,
    SECREW,
    TargetInput,
};

const char* role_name(Role r);

enum class SynapseKind : std::uint8_t {
    PlasticExcitatory,
    FixedExcitatory,
    Blocking,
    Dopamine,
};

const char* synapse_kind_name(SynapseKind k);

struct NeuronState {
    double u = 0.0;              // membrane potential, fire threshold 1
    double tau = 1.0;            // membrane time constant, ms (>= 1)
    double decay_factor = 0.0;   // max(0, 1 - 1/tau), cached
    Time inactive_until = kNever;
    Time last_update = 0;        // step whose decay has already been applied
    Role role = Role::InputNode;
    std::uint16_t column = 0;    // 1-based; 0 for input/target nodes

    void set_tau(double t) {
        tau = t;
        decay_factor = (t <= 1.0) ? 0.0 : 1.0 - 1.0 / t;
    }
};

struct Synapse {
    NeuronId source = 0;
    NeuronId target = 0;
    SynapseKind kind = SynapseKind::FixedExcitatory;
    std::uint8_t delay = 1;      // ms; 3 only on input->L connections
    // Plastic/Fixed: membrane increment. Blocking: inactivity duration (ms).
    // Dopamine: unused.
    double weight = 0.0;
    double resource = 0.0;       // plastic only
    // Most recent presynaptic arrival. Both plasticity rules only ever ask
    // "was there an arrival within a window ending now", so the latest
    // arrival time is a sufficient record of the spike log.
    Time last_arrival = kNever;
};

struct SpikeEvent {
    Time arrival = 0;
    SynId synapse = 0;
};

// One step of membrane dynamics: forward-Euler decay u *= max(0, 1 - 1/tau),
// then integrate the increments unless the neuron is inactive, then fire if
// u >= 1 (reset to 0).
bool advance_neuron(NeuronState& n, std::span<const double> increments, Time t);

// Blocking delivery: inactive for `duration` steps starting at t. A shorter
// block never shortens an existing one.
void apply_block(NeuronState& n, Time duration, Time t);

// Applies any pending decay so that n.u is the post-decay value at step t.
// Equivalent to stepping advance_neuron with no increments once per elapsed
// step.
void decay_to(NeuronState& n, Time t);

}  // namespace colsnn
