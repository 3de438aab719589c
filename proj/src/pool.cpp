#include "pgs2s/pool.hpp"

#include "pgs2s/errors.hpp"

namespace pgs2s {

ForecastCube build_cube(std::span<const PoolMember> aux, const WindowedDataset& ds,
                        const ScalerParams& scaler) {
    ForecastCube cube;
    cube.horizon = ds.horizon;
    for (const PoolMember& m : aux) {
        Matrix p(ds.size(), ds.horizon);
        for (std::size_t i = 0; i < ds.size(); ++i) {
            const auto yhat = m.predict(ds.samples[i].window);
            if (yhat.size() != ds.horizon)
                throw DimensionError("build_cube: model '" + m.name +
                                     "' returned wrong horizon length");
            for (std::size_t k = 0; k < ds.horizon; ++k)
                p(i, k) = scaler.invert_one(yhat[k], ds.target_channel);
        }
        if (!p.all_finite())
            throw NumericError("build_cube: non-finite prediction from '" + m.name + "'");
        cube.model_names.push_back(m.name);
        cube.preds.push_back(std::move(p));
    }
    return cube;
}

std::vector<Matrix> cube_batch_inputs(const ForecastCube& cube,
                                      std::span<const std::size_t> indices,
                                      const ScalerParams& scaler, std::size_t target_channel) {
    std::vector<Matrix> out;
    out.reserve(cube.n_aux());
    for (std::size_t m = 0; m < cube.n_aux(); ++m) {
        Matrix s(cube.horizon, indices.size());
        for (std::size_t b = 0; b < indices.size(); ++b)
            for (std::size_t k = 0; k < cube.horizon; ++k)
                s(k, b) = scaler.apply_one(cube.value(indices[b], m, k), target_channel);
        out.push_back(std::move(s));
    }
    return out;
}

Matrix batch_targets_original(const WindowedDataset& ds, std::span<const std::size_t> indices,
                              const ScalerParams& scaler) {
    Matrix t(ds.horizon, indices.size());
    for (std::size_t b = 0; b < indices.size(); ++b)
        for (std::size_t k = 0; k < ds.horizon; ++k)
            t(k, b) = scaler.invert_one(ds.samples[indices[b]].target[k], ds.target_channel);
    return t;
}

Matrix batch_targets(const WindowedDataset& ds, std::span<const std::size_t> indices) {
    Matrix t(ds.horizon, indices.size());
    for (std::size_t b = 0; b < indices.size(); ++b)
        for (std::size_t k = 0; k < ds.horizon; ++k) t(k, b) = ds.samples[indices[b]].target[k];
    return t;
}

Matrix batch_first_inputs(const WindowedDataset& ds, std::span<const std::size_t> indices) {
    Matrix f(1, indices.size());
    for (std::size_t b = 0; b < indices.size(); ++b) f(0, b) = ds.last_input_value(indices[b]);
    return f;
}

}  // namespace pgs2s
