#pragma once

#include <vector>

#include "pgs2s/rng.hpp"
#include "pgs2s/series.hpp"

namespace pgs2s {

// Multi-output support vector regression with an RBF kernel, trained by
// iterative reweighted least squares on the vector-valued eps-insensitive
// loss: L(u) = 0 for u < eps, (u - eps)^2 otherwise, with u the Euclidean
// norm of a sample's H-dimensional residual. Each IRWLS iteration solves the
// weighted kernel system for all outputs at once and backtracks a line
// search on the primal objective, which therefore never increases across
// accepted steps.
struct MsvrConfig {
    double C = 100.0;
    double eps_tube = 1e-3;
    double kernel_gamma = 0.1;
    std::size_t max_iter = 200;
    double tol = 1e-6;             // relative objective change
    std::size_t max_train_samples = 0;  // 0 = use the full training set
};

struct MsvrModel {
    MsvrConfig cfg;
    Matrix support_x;               // n x d retained training inputs (flattened windows)
    Matrix coef;                    // n x H; all-zero rows are in-tube samples
    std::vector<double> bias;       // H
    std::vector<double> objective_trace;
    bool converged = false;

    std::size_t horizon() const { return bias.size(); }
    std::vector<double> predict_flat(std::span<const double> x) const;
    std::vector<double> predict_window(const Matrix& window) const;
};

// subsample_rng is consulted only when cfg.max_train_samples caps the
// training set. Emits a convergence warning (converged = false) rather than
// failing when backtracking exhausts without reaching tol.
MsvrModel train_msvr(const WindowedDataset& train, const MsvrConfig& cfg,
                     Rng* subsample_rng = nullptr);

double rbf_kernel(std::span<const double> a, std::span<const double> b, double gamma);

}  // namespace pgs2s
