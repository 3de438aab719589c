#include "pgs2s/policy.hpp"

#include <cmath>

#include "pgs2s/activations.hpp"
#include "pgs2s/errors.hpp"

namespace pgs2s {

PolicyParams::PolicyParams(std::size_t state_dim, std::size_t hidden, std::size_t n_actions)
    : w1("policy.w1", hidden, state_dim),
      b1("policy.b1", hidden, 1),
      w2("policy.w2", n_actions, hidden),
      b2("policy.b2", n_actions, 1) {
    if (state_dim == 0 || hidden == 0 || n_actions < 2)
        throw DimensionError("PolicyParams: need state_dim, hidden >= 1 and n_actions >= 2");
}

void PolicyParams::init(Rng& rng) {
    init_uniform_fan_in(w1, state_dim(), rng);
    init_uniform_fan_in(w2, hidden(), rng);
    b1.value.fill(0.0);
    b2.value.fill(0.0);
}

ParamRefs PolicyParams::params() { return {&w1, &b1, &w2, &b2}; }

Matrix policy_forward(const PolicyParams& p, const Matrix& states, PolicyCache* cache) {
    if (states.rows() != p.state_dim())
        throw DimensionError("policy_forward: state dimension mismatch");
    Matrix hid = matmul(p.w1.value, states);
    add_col_broadcast(hid, p.b1.value);
    sigmoid_in_place(hid);
    Matrix logits = matmul(p.w2.value, hid);
    add_col_broadcast(logits, p.b2.value);
    Matrix probs = softmax_cols(logits);
    if (cache != nullptr) {
        cache->states = states;
        cache->hid = hid;
        cache->probs = probs;
    }
    return probs;
}

void add_log_prob_grad(PolicyParams& p, const PolicyCache& cache, std::size_t col, int action,
                       double weight) {
    const std::size_t na = p.n_actions(), nh = p.hidden(), ns = p.state_dim();
    if (action < 0 || static_cast<std::size_t>(action) >= na)
        throw ContractError("add_log_prob_grad: action out of range");
    // d logits = (onehot(action) - probs) * weight
    std::vector<double> dlogits(na);
    for (std::size_t a = 0; a < na; ++a)
        dlogits[a] = weight * ((static_cast<int>(a) == action ? 1.0 : 0.0) - cache.probs(a, col));
    std::vector<double> dhid(nh, 0.0);
    for (std::size_t a = 0; a < na; ++a) {
        p.b2.grad(a, 0) += dlogits[a];
        for (std::size_t hidx = 0; hidx < nh; ++hidx) {
            p.w2.grad(a, hidx) += dlogits[a] * cache.hid(hidx, col);
            dhid[hidx] += p.w2.value(a, hidx) * dlogits[a];
        }
    }
    for (std::size_t hidx = 0; hidx < nh; ++hidx) {
        const double hv = cache.hid(hidx, col);
        const double da = dhid[hidx] * hv * (1.0 - hv);
        p.b1.grad(hidx, 0) += da;
        for (std::size_t s = 0; s < ns; ++s) p.w1.grad(hidx, s) += da * cache.states(s, col);
    }
}

int argmax_lowest(std::span<const double> probs) {
    int best = 0;
    for (std::size_t a = 1; a < probs.size(); ++a)
        if (probs[a] > probs[static_cast<std::size_t>(best)]) best = static_cast<int>(a);
    return best;
}

ActionChoice select_action(std::span<const double> probs, double epsilon, Rng& rng, Phase phase,
                           SelectionMode mode) {
    if (probs.empty()) throw ContractError("select_action: empty probability vector");
    if (phase == Phase::Eval) return {argmax_lowest(probs), false};
    if (mode == SelectionMode::Sample) {
        const double u = rng.uniform();
        double acc = 0.0;
        for (std::size_t a = 0; a < probs.size(); ++a) {
            acc += probs[a];
            if (u < acc) return {static_cast<int>(a), false};
        }
        return {static_cast<int>(probs.size()) - 1, false};
    }
    if (epsilon > 0.0 && rng.bernoulli(epsilon))
        return {static_cast<int>(rng.index(probs.size())), true};
    return {argmax_lowest(probs), false};
}

}  // namespace pgs2s
