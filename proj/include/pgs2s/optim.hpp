#pragma once

#include <cstdint>
#include <vector>

#include "pgs2s/param.hpp"

namespace pgs2s {

enum class StepDirection { Descend, Ascend };

// value -= lr * grad (Descend) or value += lr * grad (Ascend).
// Throws NumericError naming the offending block if a gradient is non-finite.
void sgd_step(const ParamRefs& params, double lr, StepDirection dir = StepDirection::Descend);

// Standard Adam with bias correction. State is kept per block in declared
// order, so the same Adam instance must always be fed the same param list.
class Adam {
  public:
    explicit Adam(double beta1 = 0.9, double beta2 = 0.999, double eps_hat = 1e-8)
        : beta1_(beta1), beta2_(beta2), eps_(eps_hat) {}

    void step(const ParamRefs& params, double lr, StepDirection dir = StepDirection::Descend);

    std::int64_t t() const { return t_; }

  private:
    double beta1_, beta2_, eps_;
    std::int64_t t_ = 0;
    std::vector<Matrix> m_, v_;
};

}  // namespace pgs2s
