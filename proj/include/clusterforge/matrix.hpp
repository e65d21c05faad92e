#pragma once

#include <cstddef>
#include <vector>

#include "clusterforge/field.hpp"

namespace cf {

// Dense matrix over an exact field.  Row-vector convention throughout the
// project: module elements are rows, a linear map is a matrix applied on the
// right (x -> x*A), and composition of maps is left-to-right matrix product.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, Field field = Field())
        : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar(0)) {}

    static Matrix identity(std::size_t n, Field field = Field());

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Scalar& v) { at(i, j) = field_.reduce(v); }

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;

    Matrix row(std::size_t i) const;
    void set_row(std::size_t i, const Matrix& r);

    // In-place reduced row echelon form; returns the pivot column of each
    // nonzero row, top to bottom.
    std::vector<std::size_t> rref();
    std::size_t rank() const;

    // Stacks o below this matrix (column counts must agree).
    Matrix vstack(const Matrix& o) const;
    Matrix hstack(const Matrix& o) const;

    // Inverse of a square matrix; throws if singular.
    Matrix inverse() const;

    std::string to_string() const;

  private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> data_;
};

// Subspace of a row space, held as a canonical reduced-echelon basis.
class Subspace {
  public:
    Subspace() : ambient_(0) {}
    Subspace(std::size_t ambient, Matrix echelon_basis)
        : ambient_(ambient), basis_(std::move(echelon_basis)) {}

    // Canonicalizes arbitrary spanning rows.
    static Subspace from_rows(std::size_t ambient, Matrix spanning_rows);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const Matrix& row_vector) const;
    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

  private:
    std::size_t ambient_;
    Matrix basis_;  // RREF rows, no zero rows
};

// Canonical basis of { v : v * m = 0 }.
Subspace kernel_basis(const Matrix& m);

// Canonical basis of the row space of m.
Subspace image_basis(const Matrix& m);

// Surjection ambient -> ambient/sub with kernel exactly sub.  Rows of the
// result are indexed by the ambient standard basis, columns by the chosen
// complement coordinates (the non-pivot positions of sub's echelon basis).
Matrix quotient_map(std::size_t ambient_dim, const Subspace& sub);

// Incremental reduced-echelon accumulator for row spans.
class RowEchelon {
  public:
    RowEchelon(std::size_t ambient, Field field) : ambient_(ambient), field_(field) {}

    // Reduces the row against the accumulated basis and inserts the remainder;
    // returns true if the rank grew.
    bool add(Matrix row);
    Matrix reduce(Matrix row) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient_dim() const { return ambient_; }
    Matrix basis() const;  // rows sorted by pivot

  private:
    std::size_t ambient_;
    Field field_;
    std::vector<std::pair<std::size_t, Matrix>> rows_;  // (pivot, normalized row)
};

// One solution x of x * a = b, where b may have several rows (solved rowwise);
// returns false if the system is inconsistent.
bool solve_row_system(const Matrix& a, const Matrix& b, Matrix& solution_out);

// Coordinates of the rows of v with respect to rows of basis (which need not
// be echelonized); throws if some row is outside the span.
Matrix coordinates(const Matrix& basis, const Matrix& v);

}  // namespace cf
