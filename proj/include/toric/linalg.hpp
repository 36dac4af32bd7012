#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/scalar.hpp"

namespace toric {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec scaled(const Vec& v, const Scalar& c);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);
// b == t*a for some scalar t (a, b nonzero); zero vectors count as
// proportional to everything.
bool proportional(const Vec& a, const Vec& b);
// Common field of all entries (see join_disc).
long vec_disc(const Vec& v);

// Dense row-major matrix over Q or Q(sqrt(d)). All entries are joined into
// one field on construction; mixing distinct quadratic fields throws.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    std::vector<Vec> rows_vec() const;

    Matrix transpose() const;
    Matrix submatrix_cols(const std::vector<std::size_t>& cols) const;
    void swap_rows(std::size_t i, std::size_t j);

    // Disc joined over all entries.
    long disc() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& x);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

// Reduced row echelon form by exact Gauss-Jordan elimination; pivots are the
// first nonzero entry in each column scanning top to bottom (deterministic).
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

// Basis of {x : Mx = 0} in the canonical echelon parameterization: one vector
// per free column f, with x[f] = 1 and pivot coordinates filled from the RREF.
std::vector<Vec> kernel_basis(const Matrix& m);

Scalar det(Matrix m);

// Some solution of Ax = b if consistent (free variables set to 0).
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// Inverse of a nonsingular square matrix; throws std::invalid_argument
// otherwise.
Matrix inverse(const Matrix& m);

// Feasibility of {x : eq*x = eq_rhs, ineq*x >= ineq_rhs}, decided exactly by
// Gaussian elimination of the equalities followed by Fourier-Motzkin
// elimination of the remaining variables.
bool fm_feasible(const Matrix& eq, const Vec& eq_rhs, const Matrix& ineq, const Vec& ineq_rhs);

}  // namespace toric
