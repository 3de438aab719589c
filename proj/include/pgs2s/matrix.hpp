#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pgs2s {

// Dense row-major matrix of doubles. The single numeric container of the
// project; vectors are n x 1 (or 1 x n) matrices.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), d_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::initializer_list<double> vals);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return d_.size(); }
    bool empty() const { return d_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }

    double* data() { return d_.data(); }
    const double* data() const { return d_.data(); }
    std::span<double> flat() { return d_; }
    std::span<const double> flat() const { return d_; }
    std::span<double> row(std::size_t r) { return {d_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {d_.data() + r * cols_, cols_}; }

    void fill(double v);
    void resize(std::size_t rows, std::size_t cols, double fill = 0.0);
    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
    bool all_finite() const;

    Matrix transposed() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> d_;
};

// c = a * b
Matrix matmul(const Matrix& a, const Matrix& b);
// dest += a * b
void add_matmul(Matrix& dest, const Matrix& a, const Matrix& b);
// dest += a^T * b
void add_matmul_tn(Matrix& dest, const Matrix& a, const Matrix& b);
// dest += a * b^T
void add_matmul_nt(Matrix& dest, const Matrix& a, const Matrix& b);

void add_in_place(Matrix& dest, const Matrix& src);
void sub_in_place(Matrix& dest, const Matrix& src);
void scale_in_place(Matrix& m, double s);
// dest += s * src
void axpy(Matrix& dest, double s, const Matrix& src);
// elementwise product: dest = a ⊙ b (dest may alias a or b)
void hadamard(const Matrix& a, const Matrix& b, Matrix& dest);
// add column vector (n x 1) to every column of m
void add_col_broadcast(Matrix& m, const Matrix& col);
// dest (n x 1) += sum of columns of m
void add_row_sums(Matrix& dest, const Matrix& m);

// Solves A X = B for symmetric positive definite A via Cholesky; B may have
// multiple right-hand-side columns. Throws NumericError if A is not PD.
Matrix cholesky_solve(Matrix a, const Matrix& b);

}  // namespace pgs2s
