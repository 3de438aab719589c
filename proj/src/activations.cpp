#include "pgs2s/activations.hpp"

#include <algorithm>
#include <cmath>

namespace pgs2s {

double sigmoid(double x) {
    // split on sign so exp never overflows
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

Matrix sigmoid(const Matrix& x) {
    Matrix y = x;
    sigmoid_in_place(y);
    return y;
}

Matrix tanh_act(const Matrix& x) {
    Matrix y = x;
    tanh_in_place(y);
    return y;
}

void sigmoid_in_place(Matrix& x) {
    for (double& v : x.flat()) v = sigmoid(v);
}

void tanh_in_place(Matrix& x) {
    for (double& v : x.flat()) v = std::tanh(v);
}

Matrix softmax_rows(const Matrix& x) {
    Matrix y(x.rows(), x.cols());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        const auto row = x.row(r);
        const double mx = *std::max_element(row.begin(), row.end());
        double sum = 0.0;
        for (std::size_t c = 0; c < x.cols(); ++c) {
            const double e = std::exp(x(r, c) - mx);
            y(r, c) = e;
            sum += e;
        }
        for (std::size_t c = 0; c < x.cols(); ++c) y(r, c) /= sum;
    }
    return y;
}

Matrix softmax_cols(const Matrix& x) {
    Matrix y(x.rows(), x.cols());
    for (std::size_t c = 0; c < x.cols(); ++c) {
        double mx = x(0, c);
        for (std::size_t r = 1; r < x.rows(); ++r) mx = std::max(mx, x(r, c));
        double sum = 0.0;
        for (std::size_t r = 0; r < x.rows(); ++r) {
            const double e = std::exp(x(r, c) - mx);
            y(r, c) = e;
            sum += e;
        }
        for (std::size_t r = 0; r < x.rows(); ++r) y(r, c) /= sum;
    }
    return y;
}

}  // namespace pgs2s
