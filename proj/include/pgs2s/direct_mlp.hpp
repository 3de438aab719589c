#pragma once

#include <string>
#include <vector>

#include "pgs2s/param.hpp"
#include "pgs2s/series.hpp"

namespace pgs2s {

enum class MlpActivation { Sigmoid, Tanh };

// Direct multi-output forecaster: flattened L x m window -> hidden -> H
// predictions in one shot.
struct DirectMlp {
    std::size_t in_dim = 0, hidden = 0, out_dim = 0;
    MlpActivation activation = MlpActivation::Tanh;
    ParamBlock w1, b1, w2, b2;

    DirectMlp() = default;
    DirectMlp(std::size_t in_dim, std::size_t hidden, std::size_t out_dim,
              MlpActivation act = MlpActivation::Tanh);
    void init(Rng& rng);
    ParamRefs params();

    // x: in_dim x B -> out_dim x B; hidden_out (optional) receives the
    // post-activation hidden layer for backprop.
    Matrix forward(const Matrix& x, Matrix* hidden_out = nullptr) const;
    // Accumulates gradients of 0.5-free MSE passed via d_out (out_dim x B).
    void backward(const Matrix& x, const Matrix& hidden_act, const Matrix& d_out);

    std::vector<double> predict_window(const Matrix& window) const;
};

struct MlpConfig {
    std::size_t hidden = 64;
    double lr = 3e-3;
    std::size_t epochs = 150;
    std::size_t patience = 12;
    std::size_t batch = 32;
    MlpActivation activation = MlpActivation::Tanh;
};

struct MlpTrainResult {
    DirectMlp model;
    std::size_t best_epoch = 0;   // epoch whose validation loss was kept
    std::size_t epochs_run = 0;
    double best_val_mse = 0.0;
};

// Minimizes MSE over all H outputs; returns the parameters of the best
// validation epoch (early stopping). Throws NumericError on divergence.
MlpTrainResult train_direct_mlp(const WindowedDataset& train, const WindowedDataset& val,
                                const MlpConfig& cfg, Rng rng);

}  // namespace pgs2s
