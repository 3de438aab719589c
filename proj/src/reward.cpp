#include "pgs2s/reward.hpp"

#include <cmath>

#include "pgs2s/errors.hpp"

namespace pgs2s {

void RewardConfig::validate() const {
    if (alpha < 0.0 || alpha > 1.0) throw ConfigError("reward.alpha must be in [0,1]");
    if (beta <= 0.0) throw ConfigError("reward.beta must be > 0");
    if (gamma_disc < 0.0 || gamma_disc >= 1.0) throw ConfigError("reward.gamma must be in [0,1)");
    if (epsilon_explore < 0.0 || epsilon_explore > 1.0)
        throw ConfigError("reward.epsilon must be in [0,1]");
}

int rank_of_choice(std::span<const double> pool_errors, int chosen) {
    if (chosen < 0 || static_cast<std::size_t>(chosen) >= pool_errors.size())
        throw ContractError("rank_of_choice: chosen index out of range");
    const double ec = pool_errors[static_cast<std::size_t>(chosen)];
    int rank = 1;
    for (std::size_t j = 0; j < pool_errors.size(); ++j) {
        if (static_cast<int>(j) == chosen) continue;
        if (pool_errors[j] < ec || (pool_errors[j] == ec && static_cast<int>(j) < chosen)) ++rank;
    }
    return rank;
}

double step_reward(const RewardConfig& cfg, std::span<const double> pool_errors, int chosen,
                   std::optional<double> next_step_decoder_abs_error) {
    for (const double e : pool_errors)
        if (e < 0.0 || !std::isfinite(e))
            throw ContractError("step_reward: pool errors must be non-negative and finite");
    if (next_step_decoder_abs_error.has_value() &&
        (*next_step_decoder_abs_error < 0.0 || !std::isfinite(*next_step_decoder_abs_error)))
        throw ContractError("step_reward: decoder error must be non-negative and finite");

    const double n_actions = static_cast<double>(pool_errors.size());
    const double rank_r = 1.0 - static_cast<double>(rank_of_choice(pool_errors, chosen)) / n_actions;
    const double acc_r = next_step_decoder_abs_error.has_value()
                             ? cfg.beta / (cfg.beta + *next_step_decoder_abs_error)
                             : 0.0;
    return cfg.alpha * rank_r + (1.0 - cfg.alpha) * acc_r;
}

std::vector<double> discounted_returns(const Trajectory& traj, double gamma_disc) {
    std::vector<double> g(traj.steps.size(), 0.0);
    double acc = 0.0;
    for (std::size_t k = traj.steps.size(); k >= 1; --k) {
        acc = traj.steps[k - 1].reward + gamma_disc * acc;
        g[k - 1] = acc;
    }
    return g;
}

}  // namespace pgs2s
