#include "evolalg/matrix.hpp"

namespace evolalg {

Matrix::Matrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw ValidationError("matrix dimensions must be non-negative");
    entries_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(f));
}

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
}

void Matrix::set(int r, int c, Scalar v) {
    if (v.field() != field_)
        throw ValidationError("FieldMismatch: entry field differs from matrix field");
    entries_[index(r, c)] = std::move(v);
}

bool Matrix::operator==(const Matrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           entries_ == rhs.entries_;
}

namespace {

// Bareiss elimination on an integer matrix; exact, division-free growth.
Scalar rational_determinant(const Matrix& m) {
    const int n = m.rows();
    // Clear denominators row by row so all work happens in Z.
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    BigInt scale_product = 1;
    for (int i = 0; i < n; ++i) {
        BigInt l = 1;
        for (int j = 0; j < n; ++j)
            l = boost::multiprecision::lcm(l, m.at(i, j).denominator());
        for (int j = 0; j < n; ++j)
            a[i][j] = m.at(i, j).numerator() * (l / m.at(i, j).denominator());
        scale_product *= l;
    }

    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (a[r][k] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Scalar::zero(m.field());
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    BigInt det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Scalar::rational(std::move(det), std::move(scale_product));
}

Scalar prime_field_determinant(Matrix a) {
    const int n = a.rows();
    const Field f = a.field();
    Scalar det = Scalar::one(f);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (!a.at(r, k).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Scalar::zero(f);
        if (pivot != k) {
            for (int j = 0; j < n; ++j) {
                Scalar tmp = a.at(k, j);
                a.set(k, j, a.at(pivot, j));
                a.set(pivot, j, std::move(tmp));
            }
            det = det.negated();
        }
        det = det * a.at(k, k);
        const Scalar inv = a.at(k, k).inverse();
        for (int i = k + 1; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            const Scalar factor = a.at(i, k) * inv;
            for (int j = k; j < n; ++j)
                a.set(i, j, a.at(i, j) - factor * a.at(k, j));
        }
    }
    return det;
}

} // namespace

Scalar Matrix::determinant() const {
    if (rows_ != cols_)
        throw ValidationError("NotSquare: determinant requires a square matrix");
    if (rows_ == 0) return Scalar::one(field_);
    return field_.is_rationals() ? rational_determinant(*this)
                                 : prime_field_determinant(*this);
}

int Matrix::rank() const {
    Matrix a = *this;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i) {
            if (!a.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = 0; j < cols_; ++j) {
                Scalar tmp = a.at(r, j);
                a.set(r, j, a.at(pivot, j));
                a.set(pivot, j, std::move(tmp));
            }
        }
        const Scalar inv = a.at(r, c).inverse();
        for (int i = r + 1; i < rows_; ++i) {
            if (a.at(i, c).is_zero()) continue;
            const Scalar factor = a.at(i, c) * inv;
            for (int j = c; j < cols_; ++j)
                a.set(i, j, a.at(i, j) - factor * a.at(r, j));
        }
        ++r;
    }
    return r;
}

} // namespace evolalg
