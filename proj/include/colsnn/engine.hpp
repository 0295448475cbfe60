#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "colsnn/neuron.hpp"
#include "colsnn/plasticity.hpp"

namespace colsnn {

struct Fired {
    NeuronId id;
    Role role;
    std::uint16_t column;
};

// Discrete 1 ms clocked spiking substrate. Neurons and synapses are added
// programmatically, then finalize() freezes the topology, validates it and
// wires the plasticity state of every L neuron. One instance is strictly
// single-threaded; independent instances can run on different threads.
class Network {
public:
    explicit Network(PlasticityParams params);

    NeuronId add_neuron(Role role, std::uint16_t column, double tau);
    SynId add_synapse(Synapse syn);
    void finalize();

    // Advances one step: delivers due spikes (blocking first, then dopamine,
    // then excitatory), fires the external input nodes unconditionally,
    // integrates membranes in ascending neuron-id order and enqueues the
    // resulting spikes at t + delay. Returns everything that fired this step.
    const std::vector<Fired>& step(std::span<const NeuronId> external_inputs,
                                   bool target_fires = false);

    Time now() const { return now_; }
    void set_learning(bool on) { learning_ = on; }
    bool learning() const { return learning_; }

    std::size_t neuron_count() const { return neurons_.size(); }
    const NeuronState& neuron(NeuronId id) const { return neurons_[id]; }
    NeuronState& neuron_mut(NeuronId id) { return neurons_[id]; }
    std::span<const Synapse> synapses() const { return synapses_; }
    std::span<Synapse> synapses_mut() { return synapses_; }

    const PlasticityParams& plasticity_params() const { return params_; }
    std::span<LNeuronPlasticity> l_states() { return lstate_; }
    std::span<const LNeuronPlasticity> l_states() const { return lstate_; }
    // Index into l_states for an L neuron id, -1 otherwise.
    std::int32_t l_state_index(NeuronId id) const { return l_index_[id]; }

    // The plastic-synapse weight cache must be refreshed after any direct
    // resource edit (tests, snapshot restore).
    void refresh_plastic_weights();

private:
    void enqueue_outgoing(NeuronId id);

    static constexpr std::size_t kRing = 4;  // > max synaptic delay (3)

    PlasticityParams params_;
    std::vector<NeuronState> neurons_;
    std::vector<Synapse> synapses_;
    std::vector<std::uint32_t> out_begin_;  // CSR over synapses by source
    std::vector<SynId> out_syn_;
    std::array<std::vector<SynId>, kRing> ring_;
    std::vector<LNeuronPlasticity> lstate_;
    std::vector<std::int32_t> l_index_;
    std::vector<double> pending_sum_;
    std::vector<std::uint8_t> pending_flag_;
    std::vector<NeuronId> dirty_;
    std::vector<Fired> fired_;
    Time now_ = 0;
    bool learning_ = true;
    bool finalized_ = false;
};

}  // namespace colsnn
