#pragma once

#include <span>

#include "pgs2s/param.hpp"
#include "pgs2s/rng.hpp"
#include "pgs2s/seq2seq.hpp"

namespace pgs2s {

// Single-hidden-layer softmax policy over pool models:
//   pi(s) = softmax(W2 sigmoid(W1 s + b1) + b2)
struct PolicyParams {
    ParamBlock w1, b1, w2, b2;

    PolicyParams(std::size_t state_dim, std::size_t hidden, std::size_t n_actions);
    void init(Rng& rng);
    ParamRefs params();

    std::size_t state_dim() const { return w1.value.cols(); }
    std::size_t hidden() const { return w1.value.rows(); }
    std::size_t n_actions() const { return w2.value.rows(); }
};

struct PolicyCache {
    Matrix states;  // state_dim x B
    Matrix hid;     // hidden x B
    Matrix probs;   // n_actions x B
};

// states: state_dim x B -> probability columns (each sums to 1).
Matrix policy_forward(const PolicyParams& p, const Matrix& states, PolicyCache* cache = nullptr);

// Accumulates weight * grad of log pi(action | state at column col) into the
// policy's grad slots, using the cached forward pass.
void add_log_prob_grad(PolicyParams& p, const PolicyCache& cache, std::size_t col, int action,
                       double weight);

enum class SelectionMode {
    Greedy,  // argmax with epsilon-greedy exploration during training
    Sample,  // draw from pi; epsilon is ignored
};

struct ActionChoice {
    int action = 0;
    bool explored = false;
};

// Eval phase (or epsilon == 0 in Greedy mode) is pure argmax with ties going
// to the lowest pool index. Training in Greedy mode takes a uniform random
// action with probability epsilon.
ActionChoice select_action(std::span<const double> probs, double epsilon, Rng& rng, Phase phase,
                           SelectionMode mode = SelectionMode::Greedy);

int argmax_lowest(std::span<const double> probs);

}  // namespace pgs2s
