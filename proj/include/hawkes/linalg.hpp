#pragma once

#include <cstddef>
#include <vector>

namespace hawkes {

// Dense row-major matrix. The models here are tiny (d up to a few dozen),
// so plain Gaussian elimination and power iteration are all we need.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, value) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Matrix transposed() const;
    std::vector<std::vector<double>> to_rows() const;

    bool operator==(const Matrix&) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Solves a x = rhs by Gaussian elimination with partial pivoting.
// Throws HawkesError if the system is singular to working precision.
std::vector<double> solve_linear(Matrix a, std::vector<double> rhs);

// Dominant eigenvalue modulus of an entrywise nonnegative matrix.
// Closed form for d <= 2, shifted power iteration above that (the shift
// makes the iteration converge for periodic offspring structures too).
double spectral_radius(const Matrix& nonneg, double tol = 1e-12,
                       std::size_t max_iter = 100000);

} // namespace hawkes
