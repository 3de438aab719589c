#include "pgs2s/optim.hpp"

#include <cmath>

#include "pgs2s/errors.hpp"

namespace pgs2s {

namespace {

void check_grad_finite(const ParamBlock& p) {
    if (!p.grad.all_finite())
        throw NumericError("non-finite gradient in block '" + p.name + "'");
}

}  // namespace

void sgd_step(const ParamRefs& params, double lr, StepDirection dir) {
    const double s = dir == StepDirection::Descend ? -lr : lr;
    for (ParamBlock* p : params) {
        check_grad_finite(*p);
        axpy(p->value, s, p->grad);
    }
}

void Adam::step(const ParamRefs& params, double lr, StepDirection dir) {
    if (m_.empty()) {
        for (const ParamBlock* p : params) {
            m_.emplace_back(p->value.rows(), p->value.cols());
            v_.emplace_back(p->value.rows(), p->value.cols());
        }
    }
    if (m_.size() != params.size())
        throw DimensionError("Adam: parameter list changed between steps");
    ++t_;
    const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
    const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
    const double sign = dir == StepDirection::Descend ? -1.0 : 1.0;
    for (std::size_t i = 0; i < params.size(); ++i) {
        ParamBlock& p = *params[i];
        check_grad_finite(p);
        if (!m_[i].same_shape(p.value))
            throw DimensionError("Adam: block shape changed: " + p.name);
        double* m = m_[i].data();
        double* v = v_[i].data();
        double* val = p.value.data();
        const double* g = p.grad.data();
        for (std::size_t j = 0; j < p.value.size(); ++j) {
            m[j] = beta1_ * m[j] + (1.0 - beta1_) * g[j];
            v[j] = beta2_ * v[j] + (1.0 - beta2_) * g[j] * g[j];
            const double mhat = m[j] / bc1;
            const double vhat = v[j] / bc2;
            val[j] += sign * lr * mhat / (std::sqrt(vhat) + eps_);
        }
    }
}

}  // namespace pgs2s
