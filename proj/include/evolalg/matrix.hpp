#pragma once

#include <vector>

#include "evolalg/field.hpp"

namespace evolalg {

/// Dense matrix with exact entries from a single field.
class Matrix {
public:
    Matrix(const Field& f, int rows, int cols);
    static Matrix identity(const Field& f, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(int r, int c) const { return entries_[index(r, c)]; }
    void set(int r, int c, Scalar v);

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    /// Exact determinant: fraction-free Bareiss over Q, Gaussian over GF(p).
    /// The empty 0x0 matrix has determinant 1.
    Scalar determinant() const;

    /// Exact rank by elimination over the field.
    int rank() const;

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

    Field field_;
    int rows_;
    int cols_;
    std::vector<Scalar> entries_;
};

} // namespace evolalg
