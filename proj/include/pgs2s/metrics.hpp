#pragma once

#include <span>
#include <vector>

#include "pgs2s/matrix.hpp"

namespace pgs2s {

// Per-sequence accuracy measures over an H-step prediction.
// SMAPE is the |y-yhat| / |y+yhat| variant (no factor 2).
double rmse(std::span<const double> y, std::span<const double> yhat);
double mape(std::span<const double> y, std::span<const double> yhat);
double smape(std::span<const double> y, std::span<const double> yhat);

struct MetricReport {
    double rmse = 0.0;
    double mape = 0.0;
    double smape = 0.0;
    std::vector<double> per_step_rmse;  // H entries
    std::size_t n_samples = 0;
};

// Dataset aggregation: RMSE is the square root of the mean squared error over
// all samples and steps (so per-step RMSEs recombine to it exactly in the MSE
// domain); MAPE and SMAPE are unweighted means of the per-sample values.
// y and yhat are n x H, in original (de-normalized) units.
MetricReport evaluate_dataset(const Matrix& y, const Matrix& yhat);

}  // namespace pgs2s
