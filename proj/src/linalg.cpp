#include "hawkes/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hawkes/errors.hpp"

namespace hawkes {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) {
            throw DimensionMismatchError("matrix rows have unequal lengths");
        }
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
    std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

std::vector<double> solve_linear(Matrix a, std::vector<double> rhs) {
    const std::size_t n = a.rows();
    if (a.cols() != n || rhs.size() != n) {
        throw DimensionMismatchError("solve_linear: matrix and rhs sizes disagree");
    }
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
    if (scale == 0.0) scale = 1.0;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        }
        if (std::abs(a(pivot, col)) < 1e-14 * scale) {
            throw HawkesError("solve_linear: singular system");
        }
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a(col, j), a(pivot, j));
            std::swap(rhs[col], rhs[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a(r, col) / a(col, col);
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

double spectral_radius(const Matrix& a, double tol, std::size_t max_iter) {
    const std::size_t n = a.rows();
    if (a.cols() != n) {
        throw DimensionMismatchError("spectral_radius: matrix is not square");
    }
    if (n == 0) return 0.0;
    if (n == 1) return std::abs(a(0, 0));
    if (n == 2) {
        // Eigenvalues are real for nonnegative 2x2 and the dominant one
        // is the larger root of the characteristic polynomial.
        const double tr = a(0, 0) + a(1, 1);
        const double diff = a(0, 0) - a(1, 1);
        const double disc = std::sqrt(std::max(0.0, diff * diff + 4.0 * a(0, 1) * a(1, 0)));
        return std::max(std::abs((tr + disc) / 2.0), std::abs((tr - disc) / 2.0));
    }

    // Power iteration on a + I: the shift keeps periodic structures from
    // oscillating and moves the Perron root by exactly one.
    std::vector<double> v(n, 1.0);
    double estimate = 0.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        std::vector<double> w(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double s = v[i]; // the +I term
            for (std::size_t j = 0; j < n; ++j) s += a(i, j) * v[j];
            w[i] = s;
        }
        double norm = 0.0;
        for (double x : w) norm = std::max(norm, std::abs(x));
        if (norm == 0.0) return 0.0;
        for (double& x : w) x /= norm;
        const double next = norm - 1.0;
        const bool converged = std::abs(next - estimate) < tol * std::max(1.0, std::abs(next));
        estimate = next;
        v = std::move(w);
        if (converged && it > 0) break;
    }
    return estimate;
}

} // namespace hawkes
