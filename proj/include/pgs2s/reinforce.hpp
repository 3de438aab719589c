#pragma once

#include <span>

#include "pgs2s/policy.hpp"
#include "pgs2s/pool.hpp"
#include "pgs2s/reward.hpp"

namespace pgs2s {

// Chooser that queries a policy network per decode step. In Train phase it
// applies the configured selection rule (epsilon-greedy argmax or sampling)
// and records log-probs and exploration flags for trajectory assembly; in
// Eval phase it is pure argmax.
class PolicyChooser : public InputChooser {
  public:
    PolicyChooser(const PolicyParams& policy, double epsilon, SelectionMode mode, Rng rng)
        : policy_(policy), epsilon_(epsilon), mode_(mode), rng_(rng) {}

    void choose(const Matrix& states, std::size_t step_k, Phase phase,
                std::span<int> actions) override;

    // [step][column] records from the last decode
    const std::vector<std::vector<double>>& log_probs() const { return log_probs_; }
    const std::vector<std::vector<bool>>& explored() const { return explored_; }
    void reset();

  private:
    const PolicyParams& policy_;
    double epsilon_;
    SelectionMode mode_;
    Rng rng_;
    std::vector<std::vector<double>> log_probs_;
    std::vector<std::vector<bool>> explored_;
};

// Chooser that always returns one fixed pool index (Teach_* baselines and the
// constant-policy identity with free running).
class ConstantChooser : public InputChooser {
  public:
    explicit ConstantChooser(int action) : action_(action) {}
    void choose(const Matrix&, std::size_t, Phase, std::span<int> actions) override {
        for (int& a : actions) a = action_;
    }

  private:
    int action_;
};

struct CollectOptions {
    RewardConfig reward;
    SelectionMode mode = SelectionMode::Greedy;
    std::size_t batch = 64;
    int decoder_pool_index = 2;
};

// One trajectory per dataset sample, in dataset order, decoding with the
// current policy while the sequence parameters stay frozen. Rewards compare
// original-scale errors; trajectory states are the decoder hidden states.
std::vector<Trajectory> collect_trajectories(const PolicyParams& policy, const SeqParams& frozen,
                                             const WindowedDataset& ds, const ForecastCube& cube,
                                             const ScalerParams& scaler,
                                             const CollectOptions& opt, Rng rng,
                                             std::span<const std::size_t> subset = {});

struct ReinforceOptions {
    double l1 = 0.05;          // policy learning rate (plain ascent)
    double gamma_disc = 0.9;
    bool include_explored = true;  // credit explored steps too
};

// Accumulates the REINFORCE ascent gradient sum over trajectories of
// gamma^k G_k grad log pi(a_k | s_k), averaged over the batch, into the
// policy's grad slots (grads are zeroed first). Returns the mean return.
double reinforce_accumulate(PolicyParams& policy, std::span<const Trajectory> trajectories,
                            const ReinforceOptions& opt);

// reinforce_accumulate followed by a plain gradient-ascent step of rate l1.
double reinforce_update(PolicyParams& policy, std::span<const Trajectory> trajectories,
                        const ReinforceOptions& opt);

}  // namespace pgs2s
