#include "pgs2s/direct_mlp.hpp"

#include <cmath>
#include <numeric>

#include "pgs2s/activations.hpp"
#include "pgs2s/errors.hpp"
#include "pgs2s/optim.hpp"

namespace pgs2s {

DirectMlp::DirectMlp(std::size_t in_dim_, std::size_t hidden_, std::size_t out_dim_,
                     MlpActivation act)
    : in_dim(in_dim_),
      hidden(hidden_),
      out_dim(out_dim_),
      activation(act),
      w1("mlp.w1", hidden_, in_dim_),
      b1("mlp.b1", hidden_, 1),
      w2("mlp.w2", out_dim_, hidden_),
      b2("mlp.b2", out_dim_, 1) {
    if (in_dim == 0 || hidden == 0 || out_dim == 0)
        throw DimensionError("DirectMlp: all dimensions must be >= 1");
}

void DirectMlp::init(Rng& rng) {
    init_uniform_fan_in(w1, in_dim, rng);
    init_uniform_fan_in(w2, hidden, rng);
    b1.value.fill(0.0);
    b2.value.fill(0.0);
}

ParamRefs DirectMlp::params() { return {&w1, &b1, &w2, &b2}; }

Matrix DirectMlp::forward(const Matrix& x, Matrix* hidden_out) const {
    if (x.rows() != in_dim) throw DimensionError("DirectMlp::forward: input width mismatch");
    Matrix a = matmul(w1.value, x);
    add_col_broadcast(a, b1.value);
    if (activation == MlpActivation::Sigmoid)
        sigmoid_in_place(a);
    else
        tanh_in_place(a);
    Matrix out = matmul(w2.value, a);
    add_col_broadcast(out, b2.value);
    if (hidden_out != nullptr) *hidden_out = std::move(a);
    return out;
}

void DirectMlp::backward(const Matrix& x, const Matrix& hidden_act, const Matrix& d_out) {
    add_matmul_nt(w2.grad, d_out, hidden_act);
    add_row_sums(b2.grad, d_out);
    Matrix dh(hidden, d_out.cols());
    add_matmul_tn(dh, w2.value, d_out);
    Matrix da(hidden, d_out.cols());
    const double* ph = hidden_act.data();
    const double* pdh = dh.data();
    double* pda = da.data();
    if (activation == MlpActivation::Sigmoid) {
        for (std::size_t i = 0; i < da.size(); ++i) pda[i] = pdh[i] * ph[i] * (1.0 - ph[i]);
    } else {
        for (std::size_t i = 0; i < da.size(); ++i) pda[i] = pdh[i] * (1.0 - ph[i] * ph[i]);
    }
    add_matmul_nt(w1.grad, da, x);
    add_row_sums(b1.grad, da);
}

std::vector<double> DirectMlp::predict_window(const Matrix& window) const {
    if (window.size() != in_dim) throw DimensionError("DirectMlp: window size mismatch");
    Matrix x(in_dim, 1);
    std::copy(window.flat().begin(), window.flat().end(), x.flat().begin());
    const Matrix out = forward(x);
    std::vector<double> v(out_dim);
    for (std::size_t i = 0; i < out_dim; ++i) v[i] = out(i, 0);
    return v;
}

namespace {

void gather_batch(const WindowedDataset& ds, std::span<const std::size_t> idx, Matrix& x,
                  Matrix& y) {
    const std::size_t in_dim = ds.lags * ds.channels;
    x.resize(in_dim, idx.size());
    y.resize(ds.horizon, idx.size());
    for (std::size_t b = 0; b < idx.size(); ++b) {
        const Sample& s = ds.samples[idx[b]];
        const auto w = s.window.flat();
        for (std::size_t i = 0; i < in_dim; ++i) x(i, b) = w[i];
        for (std::size_t k = 0; k < ds.horizon; ++k) y(k, b) = s.target[k];
    }
}

double mse_on(const DirectMlp& model, const WindowedDataset& ds) {
    Matrix x, y;
    std::vector<std::size_t> idx(ds.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    gather_batch(ds, idx, x, y);
    const Matrix out = model.forward(x);
    double s = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double e = out.data()[i] - y.data()[i];
        s += e * e;
    }
    return s / static_cast<double>(out.size());
}

}  // namespace

MlpTrainResult train_direct_mlp(const WindowedDataset& train, const WindowedDataset& val,
                                const MlpConfig& cfg, Rng rng) {
    if (train.size() == 0) throw ContractError("train_direct_mlp: empty training set");
    if (cfg.hidden == 0) throw ConfigError("train_direct_mlp: hidden_size must be >= 1");
    DirectMlp model(train.lags * train.channels, cfg.hidden, train.horizon, cfg.activation);
    Rng init_rng = rng.split("init");
    model.init(init_rng);
    Adam adam;

    MlpTrainResult res;
    res.model = model;
    res.best_val_mse = mse_on(model, val);
    res.best_epoch = 0;

    std::vector<std::size_t> order(train.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const std::size_t batch = std::max<std::size_t>(1, cfg.batch);
    std::size_t since_best = 0;
    Matrix x, y;
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        Rng shuffle_rng = rng.split("shuffle").split(epoch);
        shuffle(order, shuffle_rng);
        for (std::size_t off = 0; off < order.size(); off += batch) {
            const std::size_t nb = std::min(batch, order.size() - off);
            gather_batch(train, {order.data() + off, nb}, x, y);
            Matrix hidden_act;
            const Matrix out = model.forward(x, &hidden_act);
            Matrix d_out(out.rows(), out.cols());
            double batch_loss = 0.0;
            const double scale = 2.0 / static_cast<double>(out.size());
            for (std::size_t i = 0; i < out.size(); ++i) {
                const double e = out.data()[i] - y.data()[i];
                batch_loss += e * e;
                d_out.data()[i] = scale * e;
            }
            if (!std::isfinite(batch_loss))
                throw NumericError("train_direct_mlp: loss diverged at epoch " +
                                   std::to_string(epoch));
            zero_grads(model.params());
            model.backward(x, hidden_act, d_out);
            adam.step(model.params(), cfg.lr);
        }
        res.epochs_run = epoch + 1;
        const double val_mse = mse_on(model, val);
        if (!std::isfinite(val_mse))
            throw NumericError("train_direct_mlp: validation loss diverged");
        if (val_mse < res.best_val_mse) {
            res.best_val_mse = val_mse;
            res.best_epoch = epoch + 1;
            res.model = model;
            since_best = 0;
        } else if (++since_best > cfg.patience) {
            break;
        }
    }
    return res;
}

}  // namespace pgs2s
