#pragma once

// Exact linear algebra. Matrices over base rings use the division-free
// Berkowitz algorithm (valid over any commutative ring, zero divisors
// included); when every entry is a constant the computation drops to
// Gaussian elimination over k.

#include <optional>
#include <vector>

#include "hopfgal/base_ring.hpp"

namespace hopfgal {

class Matrix {
public:
    Matrix() = default;
    Matrix(const BaseRing& ring, std::size_t rows, std::size_t cols);
    static Matrix identity(const BaseRing& ring, std::size_t n);

    const BaseRing& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    BaseElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BaseElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<BaseElement> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<BaseElement>& v);

    std::vector<BaseElement> operator*(const std::vector<BaseElement>& v) const;
    Matrix operator*(const Matrix& other) const;
    bool operator==(const Matrix& other) const;

    // Largest depth() over all entries.
    std::size_t depth() const;

private:
    BaseRing ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BaseElement> data_;
};

// det(lambda I - M), coefficients lowest degree first (monic, size n+1).
std::vector<BaseElement> characteristic_polynomial(const Matrix& m);
BaseElement determinant(const Matrix& m);
// Unique solution of M x = b when det M is a unit; nullopt otherwise.
std::optional<std::vector<BaseElement>> solve_unit_determinant(const Matrix& m, const std::vector<BaseElement>& b);
std::optional<Matrix> inverse(const Matrix& m);

// Dense matrices over the ground field.
class ScalarMatrix {
public:
    ScalarMatrix(const Field& k, std::size_t rows, std::size_t cols);

    const Field& field() const noexcept { return k_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    Field k_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

Scalar determinant(ScalarMatrix m);
std::size_t rank(ScalarMatrix m);
// Basis of {x : M x = 0}.
std::vector<std::vector<Scalar>> kernel_basis(ScalarMatrix m);
// Some solution of M x = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(ScalarMatrix m, std::vector<Scalar> b);

}  // namespace hopfgal
