#pragma once

#include <optional>
#include <span>
#include <vector>

namespace pgs2s {

struct RewardConfig {
    double alpha = 0.5;            // blend between rank and accuracy terms
    double beta = 0.1;             // error-to-reward conversion scale
    double gamma_disc = 0.9;       // return discount, in [0, 1)
    double epsilon_explore = 0.1;  // epsilon-greedy exploration rate

    void validate() const;
};

// 1-based rank of the chosen model by ascending error; ties give the earlier
// pool index the better rank.
int rank_of_choice(std::span<const double> pool_errors, int chosen);

// r_k = alpha * (1 - rank/N^a) + (1 - alpha) * beta / (beta + |err|),
// with the accuracy term 0 at the terminal step (no next emission exists).
// Throws ContractError on negative inputs. Always in [0, 1].
double step_reward(const RewardConfig& cfg, std::span<const double> pool_errors, int chosen,
                   std::optional<double> next_step_decoder_abs_error);

struct TrajectoryStep {
    std::vector<double> state;  // decoder hidden state s_k
    int action = 0;
    double log_prob = 0.0;  // log pi(a_k | s_k) at collection time
    double reward = 0.0;
    bool explored = false;
};

// One decoding episode: (s_1, a_1, r_1, ..., s_H, a_H, r_H).
struct Trajectory {
    std::vector<TrajectoryStep> steps;
    std::size_t length() const { return steps.size(); }
};

// G_k = sum_{k'>=k} gamma^(k'-k) r_k'; satisfies G_k = r_k + gamma G_{k+1}.
std::vector<double> discounted_returns(const Trajectory& traj, double gamma_disc);

}  // namespace pgs2s
