#include "pgs2s/metrics.hpp"

#include <cmath>
#include <string>

#include "pgs2s/errors.hpp"

namespace pgs2s {

namespace {

void require_lengths(std::span<const double> y, std::span<const double> yhat) {
    if (y.size() != yhat.size() || y.empty())
        throw DimensionError("metric: sequences must have equal length >= 1");
}

}  // namespace

double rmse(std::span<const double> y, std::span<const double> yhat) {
    require_lengths(y, yhat);
    double s = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) {
        const double e = y[k] - yhat[k];
        s += e * e;
    }
    return std::sqrt(s / static_cast<double>(y.size()));
}

double mape(std::span<const double> y, std::span<const double> yhat) {
    require_lengths(y, yhat);
    double s = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (y[k] == 0.0)
            throw MetricError("mape undefined: y is zero at step " + std::to_string(k + 1));
        s += std::abs((y[k] - yhat[k]) / y[k]);
    }
    return s / static_cast<double>(y.size());
}

double smape(std::span<const double> y, std::span<const double> yhat) {
    require_lengths(y, yhat);
    double s = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) {
        const double denom = y[k] + yhat[k];
        if (denom == 0.0)
            throw MetricError("smape undefined: y + yhat is zero at step " + std::to_string(k + 1));
        s += std::abs(y[k] - yhat[k]) / std::abs(denom);
    }
    return s / static_cast<double>(y.size());
}

MetricReport evaluate_dataset(const Matrix& y, const Matrix& yhat) {
    if (!y.same_shape(yhat) || y.rows() == 0 || y.cols() == 0)
        throw DimensionError("evaluate_dataset: shapes must match and be non-empty");
    const std::size_t n = y.rows(), h = y.cols();
    MetricReport rep;
    rep.n_samples = n;
    rep.per_step_rmse.assign(h, 0.0);
    double mse_total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < h; ++k) {
            const double e = y(i, k) - yhat(i, k);
            rep.per_step_rmse[k] += e * e;
            mse_total += e * e;
        }
        rep.mape += mape(y.row(i), yhat.row(i));
        rep.smape += smape(y.row(i), yhat.row(i));
    }
    for (std::size_t k = 0; k < h; ++k)
        rep.per_step_rmse[k] = std::sqrt(rep.per_step_rmse[k] / static_cast<double>(n));
    rep.rmse = std::sqrt(mse_total / static_cast<double>(n * h));
    rep.mape /= static_cast<double>(n);
    rep.smape /= static_cast<double>(n);
    return rep;
}

}  // namespace pgs2s
