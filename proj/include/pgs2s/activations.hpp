#pragma once

#include "pgs2s/matrix.hpp"

namespace pgs2s {

double sigmoid(double x);

Matrix sigmoid(const Matrix& x);
Matrix tanh_act(const Matrix& x);
void sigmoid_in_place(Matrix& x);
void tanh_in_place(Matrix& x);

// Row-wise softmax with max subtraction; every output row sums to 1.
Matrix softmax_rows(const Matrix& x);
// Column-wise variant (used for batched policy outputs stored actions-by-column).
Matrix softmax_cols(const Matrix& x);

// Derivatives expressed in terms of the activation value.
inline double dsigmoid_from_value(double s) { return s * (1.0 - s); }
inline double dtanh_from_value(double t) { return 1.0 - t * t; }

}  // namespace pgs2s
