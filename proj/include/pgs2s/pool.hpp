#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pgs2s/series.hpp"

namespace pgs2s {

// A frozen forecaster in the input pool: maps an L x m (normalized) window to
// H normalized predictions. The decoder itself occupies the last pool slot
// and is never represented here; its predictions arise online while decoding.
struct PoolMember {
    std::string name;
    std::function<std::vector<double>(const Matrix& window)> predict;
};

// Cached predictions of every auxiliary pool model for every sample of one
// dataset split, stored in ORIGINAL scale (rank rewards and accuracy rewards
// compare errors in original units).
struct ForecastCube {
    std::size_t horizon = 0;
    std::vector<std::string> model_names;  // index = pool index of the aux model
    std::vector<Matrix> preds;             // per model: n_samples x H

    std::size_t n_aux() const { return preds.size(); }
    std::size_t n_samples() const { return preds.empty() ? 0 : preds[0].rows(); }
    double value(std::size_t sample, std::size_t model, std::size_t step) const {
        return preds[model](sample, step);
    }
};

// Runs every aux model over the split and inverts predictions to original
// scale. Complete by construction; throws NumericError on non-finite output.
ForecastCube build_cube(std::span<const PoolMember> aux, const WindowedDataset& ds,
                        const ScalerParams& scaler);

// Per aux model, the H x B slice for a batch, re-normalized to the decoder's
// input scale.
std::vector<Matrix> cube_batch_inputs(const ForecastCube& cube,
                                      std::span<const std::size_t> indices,
                                      const ScalerParams& scaler, std::size_t target_channel);

// Original-scale targets of a batch as an H x B matrix.
Matrix batch_targets_original(const WindowedDataset& ds, std::span<const std::size_t> indices,
                              const ScalerParams& scaler);
// Normalized targets of a batch as an H x B matrix.
Matrix batch_targets(const WindowedDataset& ds, std::span<const std::size_t> indices);
// First decoder inputs (window's last target value) as 1 x B.
Matrix batch_first_inputs(const WindowedDataset& ds, std::span<const std::size_t> indices);

}  // namespace pgs2s
