#include "pgs2s/msvr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pgs2s/errors.hpp"

namespace pgs2s {

double rbf_kernel(std::span<const double> a, std::span<const double> b, double gamma) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        d2 += d * d;
    }
    return std::exp(-gamma * d2);
}

namespace {

Matrix kernel_matrix(const Matrix& x, double gamma) {
    const std::size_t n = x.rows();
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        k(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = rbf_kernel(x.row(i), x.row(j), gamma);
            k(i, j) = v;
            k(j, i) = v;
        }
    }
    return k;
}

// residual norms u_i of Y - K beta - b
std::vector<double> residual_norms(const Matrix& k, const Matrix& beta,
                                   const std::vector<double>& bias, const Matrix& y) {
    const std::size_t n = y.rows(), q = y.cols();
    Matrix pred = matmul(k, beta);
    std::vector<double> u(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < q; ++j) {
            const double e = y(i, j) - pred(i, j) - bias[j];
            s += e * e;
        }
        u[i] = std::sqrt(s);
    }
    return u;
}

double objective(const Matrix& k, const Matrix& beta, const std::vector<double>& bias,
                 const Matrix& y, double c, double eps) {
    // 0.5 sum_j beta_j^T K beta_j + C sum_i L(u_i)
    Matrix kb = matmul(k, beta);
    double reg = 0.0;
    for (std::size_t i = 0; i < beta.rows(); ++i)
        for (std::size_t j = 0; j < beta.cols(); ++j) reg += beta(i, j) * kb(i, j);
    reg *= 0.5;
    double loss = 0.0;
    const auto u = residual_norms(k, beta, bias, y);
    for (const double ui : u)
        if (ui >= eps) loss += (ui - eps) * (ui - eps);
    return reg + c * loss;
}

}  // namespace

MsvrModel train_msvr(const WindowedDataset& train, const MsvrConfig& cfg, Rng* subsample_rng) {
    if (train.size() == 0) throw ContractError("train_msvr: empty training set");
    if (cfg.C <= 0.0 || cfg.kernel_gamma <= 0.0 || cfg.eps_tube < 0.0)
        throw ConfigError("train_msvr: C and gamma must be positive, eps_tube non-negative");

    std::vector<std::size_t> idx(train.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (cfg.max_train_samples > 0 && cfg.max_train_samples < idx.size()) {
        if (subsample_rng == nullptr)
            throw ContractError("train_msvr: subsampling requested without an rng");
        shuffle(idx, *subsample_rng);
        idx.resize(cfg.max_train_samples);
        std::sort(idx.begin(), idx.end());
    }

    const std::size_t n = idx.size();
    const std::size_t d = train.lags * train.channels;
    const std::size_t q = train.horizon;
    MsvrModel model;
    model.cfg = cfg;
    model.support_x.resize(n, d);
    Matrix y(n, q);
    for (std::size_t r = 0; r < n; ++r) {
        const Sample& s = train.samples[idx[r]];
        std::copy(s.window.flat().begin(), s.window.flat().end(), model.support_x.row(r).begin());
        for (std::size_t j = 0; j < q; ++j) y(r, j) = s.target[j];
    }

    const Matrix k = kernel_matrix(model.support_x, cfg.kernel_gamma);
    Matrix beta(n, q);
    std::vector<double> bias(q, 0.0);
    double obj = objective(k, beta, bias, y, cfg.C, cfg.eps_tube);
    model.objective_trace.push_back(obj);
    model.converged = false;

    for (std::size_t it = 0; it < cfg.max_iter; ++it) {
        const auto u = residual_norms(k, beta, bias, y);
        std::vector<std::size_t> sv;
        std::vector<double> a(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i] >= cfg.eps_tube && u[i] > 0.0) {
                a[i] = 2.0 * cfg.C * (u[i] - cfg.eps_tube) / u[i];
                if (a[i] > 0.0) sv.push_back(i);
            }
        }
        if (sv.empty()) {
            model.converged = true;  // every sample inside the tube
            break;
        }
        // bordered weighted system on the support set:
        //   (K_ss + diag(1/a)) beta_s + 1 b = y_s,  1^T beta_s = 0
        const std::size_t ns = sv.size();
        Matrix sys(ns, ns);
        for (std::size_t r = 0; r < ns; ++r) {
            for (std::size_t cidx = 0; cidx < ns; ++cidx) sys(r, cidx) = k(sv[r], sv[cidx]);
            sys(r, r) += 1.0 / a[sv[r]] + 1e-10;
        }
        Matrix rhs(ns, q + 1);
        for (std::size_t r = 0; r < ns; ++r) {
            for (std::size_t j = 0; j < q; ++j) rhs(r, j) = y(sv[r], j);
            rhs(r, q) = 1.0;
        }
        Matrix sol;
        try {
            sol = cholesky_solve(sys, rhs);
        } catch (const NumericError&) {
            throw NumericError("train_msvr: singular regularized kernel system");
        }
        double z_sum = 0.0;
        for (std::size_t r = 0; r < ns; ++r) z_sum += sol(r, q);
        if (z_sum == 0.0 || !std::isfinite(z_sum))
            throw NumericError("train_msvr: singular regularized kernel system");
        std::vector<double> bias_new(q);
        Matrix beta_new(n, q);
        for (std::size_t j = 0; j < q; ++j) {
            double v_sum = 0.0;
            for (std::size_t r = 0; r < ns; ++r) v_sum += sol(r, j);
            bias_new[j] = v_sum / z_sum;
            for (std::size_t r = 0; r < ns; ++r)
                beta_new(sv[r], j) = sol(r, j) - sol(r, q) * bias_new[j];
        }

        // backtracking toward the IRWLS solution
        double eta = 1.0;
        bool accepted = false;
        double obj_new = obj;
        Matrix beta_try(n, q);
        std::vector<double> bias_try(q);
        for (int bt = 0; bt < 30; ++bt) {
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t j = 0; j < q; ++j)
                    beta_try(r, j) = beta(r, j) + eta * (beta_new(r, j) - beta(r, j));
            for (std::size_t j = 0; j < q; ++j)
                bias_try[j] = bias[j] + eta * (bias_new[j] - bias[j]);
            const double o = objective(k, beta_try, bias_try, y, cfg.C, cfg.eps_tube);
            if (o <= obj) {
                beta = beta_try;
                bias = bias_try;
                obj_new = o;
                accepted = true;
                break;
            }
            eta *= 0.5;
        }
        if (!accepted) break;  // convergence warning; model still returned
        model.objective_trace.push_back(obj_new);
        if (std::abs(obj - obj_new) <= cfg.tol * std::max(1.0, std::abs(obj))) {
            obj = obj_new;
            model.converged = true;
            break;
        }
        obj = obj_new;
    }

    model.coef = beta;
    model.bias = bias;
    return model;
}

std::vector<double> MsvrModel::predict_flat(std::span<const double> x) const {
    if (x.size() != support_x.cols()) throw DimensionError("msvr predict: input width mismatch");
    std::vector<double> out(bias.begin(), bias.end());
    const std::size_t q = bias.size();
    for (std::size_t i = 0; i < support_x.rows(); ++i) {
        bool active = false;
        for (std::size_t j = 0; j < q; ++j)
            if (coef(i, j) != 0.0) {
                active = true;
                break;
            }
        if (!active) continue;
        const double kv = rbf_kernel(support_x.row(i), x, cfg.kernel_gamma);
        for (std::size_t j = 0; j < q; ++j) out[j] += coef(i, j) * kv;
    }
    return out;
}

std::vector<double> MsvrModel::predict_window(const Matrix& window) const {
    return predict_flat(window.flat());
}

}  // namespace pgs2s
