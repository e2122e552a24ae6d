#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "khicalc/field.hpp"

namespace khicalc {

// Dense matrix over an exact field, row-major. All queries (rank, echelon
// forms, kernels) are deterministic: pivots are always the first nonzero
// entry in scan order, so equal inputs give bit-identical outputs.
class Matrix {
  public:
    Matrix(Field f, std::size_t rows, std::size_t cols);
    static Matrix identity(Field f, std::size_t n);
    static Matrix from_rows(Field f, std::initializer_list<std::initializer_list<long>> rows);
    static Matrix column(Field f, const std::vector<long>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    Matrix transpose() const;
    Matrix hcat(const Matrix& o) const;
    Matrix vcat(const Matrix& o) const;
    Matrix columns(const std::vector<std::size_t>& idx) const;
    Matrix top_rows(std::size_t n) const;
    Matrix bottom_rows(std::size_t n) const;
    // Writes `block` into this matrix with upper-left corner (i0, j0).
    void set_block(std::size_t i0, std::size_t j0, const Matrix& block);
    Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;

    // Reduced row echelon form; records pivot column indices if requested.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    std::size_t rank() const;
    // Canonical basis of the null space, columns in reduced column echelon form.
    Matrix kernel_basis() const;
    // Canonical reduced column echelon form of the column span (zero columns dropped).
    Matrix column_echelon() const;
    // One particular solution of this * X = rhs (free variables set to 0),
    // or nullopt when the system is inconsistent.
    std::optional<Matrix> solve(const Matrix& rhs) const;

    std::string str() const;

  private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> a_;
};

} // namespace khicalc
