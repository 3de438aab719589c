#include "pgs2s/reinforce.hpp"

#include <cmath>
#include <numeric>

#include "pgs2s/errors.hpp"
#include "pgs2s/optim.hpp"

namespace pgs2s {

void PolicyChooser::reset() {
    log_probs_.clear();
    explored_.clear();
}

void PolicyChooser::choose(const Matrix& states, std::size_t step_k, Phase phase,
                           std::span<int> actions) {
    const Matrix probs = policy_forward(policy_, states);
    std::vector<double> col(probs.rows());
    std::vector<double> lps(actions.size());
    std::vector<bool> exp(actions.size());
    for (std::size_t b = 0; b < actions.size(); ++b) {
        for (std::size_t a = 0; a < probs.rows(); ++a) col[a] = probs(a, b);
        const ActionChoice ch = select_action(col, epsilon_, rng_, phase, mode_);
        actions[b] = ch.action;
        lps[b] = std::log(col[static_cast<std::size_t>(ch.action)]);
        exp[b] = ch.explored;
    }
    if (step_k == 1) reset();
    log_probs_.push_back(std::move(lps));
    explored_.push_back(std::move(exp));
}

std::vector<Trajectory> collect_trajectories(const PolicyParams& policy, const SeqParams& frozen,
                                             const WindowedDataset& ds, const ForecastCube& cube,
                                             const ScalerParams& scaler,
                                             const CollectOptions& opt, Rng rng,
                                             std::span<const std::size_t> subset) {
    opt.reward.validate();
    if (cube.n_samples() != ds.size())
        throw ContractError("collect_trajectories: cube does not cover the dataset");
    std::vector<std::size_t> all;
    if (subset.empty()) {
        all.resize(ds.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        subset = all;
    }
    const std::size_t horizon = ds.horizon;
    const int dec_slot = opt.decoder_pool_index;
    const std::size_t n_pool = cube.n_aux() + 1;

    std::vector<Trajectory> out(subset.size());
    const std::size_t batch = std::max<std::size_t>(1, opt.batch);
    for (std::size_t off = 0; off < subset.size(); off += batch) {
        const std::size_t nb = std::min(batch, subset.size() - off);
        const std::span<const std::size_t> idx = subset.subspan(off, nb);

        PolicyChooser chooser(policy, opt.reward.epsilon_explore, opt.mode,
                              rng.split("batch").split(off));
        const EncodeCache enc = encode(frozen, ds, idx);
        const auto aux_inputs = cube_batch_inputs(cube, idx, scaler, ds.target_channel);
        DecodeOptions dopt;
        dopt.regime = Regime::PolicyGradient;
        dopt.phase = Phase::Train;
        dopt.chooser = &chooser;
        dopt.aux_inputs = &aux_inputs;
        dopt.decoder_pool_index = dec_slot;
        dopt.record_states = true;
        const DecodeResult dec =
            decode(frozen, enc, batch_first_inputs(ds, idx), horizon, dopt);

        const Matrix truth_orig = batch_targets_original(ds, idx, scaler);
        for (std::size_t b = 0; b < nb; ++b) {
            Trajectory traj;
            traj.steps.resize(horizon);
            for (std::size_t k = 1; k <= horizon; ++k) {
                TrajectoryStep& st = traj.steps[k - 1];
                st.action = dec.actions[k - 1][b];
                st.log_prob = chooser.log_probs()[k - 1][b];
                st.explored = chooser.explored()[k - 1][b];
                const Matrix& sk = dec.states[k - 1];
                st.state.resize(sk.rows());
                for (std::size_t u = 0; u < sk.rows(); ++u) st.state[u] = sk(u, b);
                // pool errors on predicting y_{t+k}: what the action feeds next
                std::vector<double> pool_err(n_pool, 0.0);
                const double y_k = truth_orig(k - 1, b);
                for (std::size_t m = 0; m < cube.n_aux(); ++m)
                    pool_err[m] = std::abs(y_k - cube.value(idx[b], m, k - 1));
                pool_err[static_cast<std::size_t>(dec_slot)] = std::abs(
                    y_k - scaler.invert_one(dec.preds(k - 1, b), ds.target_channel));
                std::optional<double> next_err;
                if (k < horizon) {
                    const double y_next = truth_orig(k, b);
                    next_err = std::abs(
                        y_next - scaler.invert_one(dec.preds(k, b), ds.target_channel));
                }
                st.reward = step_reward(opt.reward, pool_err, st.action, next_err);
            }
            out[off + b] = std::move(traj);
        }
    }
    return out;
}

double reinforce_accumulate(PolicyParams& policy, std::span<const Trajectory> trajectories,
                            const ReinforceOptions& opt) {
    if (trajectories.empty()) throw ContractError("reinforce: no trajectories");
    zero_grads(policy.params());
    // batched forward over all (trajectory, step) states
    std::size_t total = 0;
    for (const auto& t : trajectories) total += t.length();
    Matrix states(policy.state_dim(), total);
    std::size_t col = 0;
    for (const auto& t : trajectories)
        for (const auto& st : t.steps) {
            if (st.state.size() != policy.state_dim())
                throw DimensionError("reinforce: trajectory state dimension mismatch");
            for (std::size_t u = 0; u < st.state.size(); ++u) states(u, col) = st.state[u];
            ++col;
        }
    PolicyCache cache;
    policy_forward(policy, states, &cache);

    const double inv_n = 1.0 / static_cast<double>(trajectories.size());
    double mean_return = 0.0;
    col = 0;
    for (const auto& t : trajectories) {
        const auto g = discounted_returns(t, opt.gamma_disc);
        if (!g.empty()) mean_return += g[0] * inv_n;
        double gamma_k = opt.gamma_disc;  // gamma^k with k starting at 1
        for (std::size_t k = 0; k < t.length(); ++k, ++col) {
            const TrajectoryStep& st = t.steps[k];
            if (!opt.include_explored && st.explored) {
                gamma_k *= opt.gamma_disc;
                continue;
            }
            add_log_prob_grad(policy, cache, col, st.action, inv_n * gamma_k * g[k]);
            gamma_k *= opt.gamma_disc;
        }
    }
    return mean_return;
}

double reinforce_update(PolicyParams& policy, std::span<const Trajectory> trajectories,
                        const ReinforceOptions& opt) {
    const double mean_return = reinforce_accumulate(policy, trajectories, opt);
    sgd_step(policy.params(), opt.l1, StepDirection::Ascend);
    return mean_return;
}

}  // namespace pgs2s
