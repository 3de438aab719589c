#include "pgs2s/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "pgs2s/errors.hpp"

namespace pgs2s {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DimensionError(what);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::initializer_list<double> vals)
    : rows_(rows), cols_(cols), d_(vals) {
    require(d_.size() == rows * cols, "matrix initializer size does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

void Matrix::fill(double v) {
    for (auto& x : d_) x = v;
}

void Matrix::resize(std::size_t rows, std::size_t cols, double fill) {
    rows_ = rows;
    cols_ = cols;
    d_.assign(rows * cols, fill);
}

bool Matrix::all_finite() const {
    for (double x : d_)
        if (!std::isfinite(x)) return false;
    return true;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "matmul: a.cols != b.rows");
    Matrix c(a.rows(), b.cols());
    add_matmul(c, a, b);
    return c;
}

void add_matmul(Matrix& dest, const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "add_matmul: a.cols != b.rows");
    require(dest.rows() == a.rows() && dest.cols() == b.cols(), "add_matmul: dest shape");
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        double* ci = dest.data() + i * m;
        const double* ai = a.data() + i * k;
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = ai[p];
            const double* bp = b.data() + p * m;
            for (std::size_t j = 0; j < m; ++j) ci[j] += aip * bp[j];
        }
    }
}

void add_matmul_tn(Matrix& dest, const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), "add_matmul_tn: a.rows != b.rows");
    require(dest.rows() == a.cols() && dest.cols() == b.cols(), "add_matmul_tn: dest shape");
    const std::size_t k = a.rows(), n = a.cols(), m = b.cols();
    for (std::size_t p = 0; p < k; ++p) {
        const double* ap = a.data() + p * n;
        const double* bp = b.data() + p * m;
        for (std::size_t i = 0; i < n; ++i) {
            double* ci = dest.data() + i * m;
            const double api = ap[i];
            for (std::size_t j = 0; j < m; ++j) ci[j] += api * bp[j];
        }
    }
}

void add_matmul_nt(Matrix& dest, const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), "add_matmul_nt: a.cols != b.cols");
    require(dest.rows() == a.rows() && dest.cols() == b.rows(), "add_matmul_nt: dest shape");
    const std::size_t n = a.rows(), k = a.cols(), m = b.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const double* ai = a.data() + i * k;
        double* ci = dest.data() + i * m;
        for (std::size_t j = 0; j < m; ++j) {
            const double* bj = b.data() + j * k;
            double s = 0.0;
            for (std::size_t p = 0; p < k; ++p) s += ai[p] * bj[p];
            ci[j] += s;
        }
    }
}

void add_in_place(Matrix& dest, const Matrix& src) {
    require(dest.same_shape(src), "add_in_place: shape mismatch");
    double* d = dest.data();
    const double* s = src.data();
    for (std::size_t i = 0; i < dest.size(); ++i) d[i] += s[i];
}

void sub_in_place(Matrix& dest, const Matrix& src) {
    require(dest.same_shape(src), "sub_in_place: shape mismatch");
    double* d = dest.data();
    const double* s = src.data();
    for (std::size_t i = 0; i < dest.size(); ++i) d[i] -= s[i];
}

void scale_in_place(Matrix& m, double s) {
    for (double& x : m.flat()) x *= s;
}

void axpy(Matrix& dest, double s, const Matrix& src) {
    require(dest.same_shape(src), "axpy: shape mismatch");
    double* d = dest.data();
    const double* x = src.data();
    for (std::size_t i = 0; i < dest.size(); ++i) d[i] += s * x[i];
}

void hadamard(const Matrix& a, const Matrix& b, Matrix& dest) {
    require(a.same_shape(b), "hadamard: shape mismatch");
    if (!dest.same_shape(a)) dest.resize(a.rows(), a.cols());
    const double* pa = a.data();
    const double* pb = b.data();
    double* pd = dest.data();
    for (std::size_t i = 0; i < a.size(); ++i) pd[i] = pa[i] * pb[i];
}

void add_col_broadcast(Matrix& m, const Matrix& col) {
    require(col.rows() == m.rows() && col.cols() == 1, "add_col_broadcast: bias shape");
    for (std::size_t r = 0; r < m.rows(); ++r) {
        double* mr = m.data() + r * m.cols();
        const double b = col(r, 0);
        for (std::size_t c = 0; c < m.cols(); ++c) mr[c] += b;
    }
}

void add_row_sums(Matrix& dest, const Matrix& m) {
    require(dest.rows() == m.rows() && dest.cols() == 1, "add_row_sums: dest shape");
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const double* mr = m.data() + r * m.cols();
        double s = 0.0;
        for (std::size_t c = 0; c < m.cols(); ++c) s += mr[c];
        dest(r, 0) += s;
    }
}

Matrix cholesky_solve(Matrix a, const Matrix& b) {
    require(a.rows() == a.cols(), "cholesky_solve: A not square");
    require(b.rows() == a.rows(), "cholesky_solve: rhs rows");
    const std::size_t n = a.rows();
    // in-place lower Cholesky factor
    for (std::size_t j = 0; j < n; ++j) {
        double diag = a(j, j);
        for (std::size_t p = 0; p < j; ++p) diag -= a(j, p) * a(j, p);
        if (!(diag > 0.0) || !std::isfinite(diag))
            throw NumericError("cholesky_solve: matrix not positive definite");
        const double ljj = std::sqrt(diag);
        a(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            const double* ai = a.data() + i * n;
            const double* aj = a.data() + j * n;
            for (std::size_t p = 0; p < j; ++p) s -= ai[p] * aj[p];
            a(i, j) = s / ljj;
        }
    }
    // forward/back substitution per rhs column
    Matrix x = b;
    const std::size_t m = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        const double* ai = a.data() + i * n;
        for (std::size_t c = 0; c < m; ++c) {
            double s = x(i, c);
            for (std::size_t p = 0; p < i; ++p) s -= ai[p] * x(p, c);
            x(i, c) = s / ai[i];
        }
    }
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t c = 0; c < m; ++c) {
            double s = x(ii, c);
            for (std::size_t p = ii + 1; p < n; ++p) s -= a(p, ii) * x(p, c);
            x(ii, c) = s / a(ii, ii);
        }
    }
    return x;
}

}  // namespace pgs2s
