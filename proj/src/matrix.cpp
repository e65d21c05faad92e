#include "clusterforge/matrix.hpp"

#include <sstream>

namespace cf {

Matrix Matrix::identity(std::size_t n, Field field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix product shape mismatch");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j) == 0) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    for (auto& x : r.data_) x = field_.reduce(x);
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix sum shape mismatch");
    Matrix r(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix diff shape mismatch");
    Matrix r(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.mul(data_[i], c);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::row(std::size_t i) const {
    Matrix r(1, cols_, field_);
    for (std::size_t j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
    return r;
}

void Matrix::set_row(std::size_t i, const Matrix& r) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r.at(0, j);
}

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = rows_;
        for (std::size_t i = r; i < rows_; ++i)
            if (at(i, c) != 0) { sel = i; break; }
        if (sel == rows_) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
        Scalar piv_inv = field_.inv(at(r, c));
        for (std::size_t j = c; j < cols_; ++j) at(r, j) = field_.mul(at(r, j), piv_inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c) == 0) continue;
            Scalar f = at(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                at(i, j) = field_.sub(at(i, j), field_.mul(f, at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix tmp = *this;
    return tmp.rref().size();
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw std::logic_error("vstack column mismatch");
    Matrix r(rows_ + o.rows_, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::logic_error("hstack row mismatch");
    Matrix r(rows_, cols_ + o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::logic_error("inverse of non-square matrix");
    Matrix aug = hstack(identity(rows_, field_));
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() >= rows_))
        throw std::logic_error("matrix not invertible");
    for (std::size_t i = 0; i < rows_; ++i)
        if (pivots[i] != i) throw std::logic_error("matrix not invertible");
    Matrix r(rows_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j) r.at(i, j) = aug.at(i, rows_ + j);
    return r;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

Subspace Subspace::from_rows(std::size_t ambient, Matrix spanning_rows) {
    if (spanning_rows.cols() != ambient && spanning_rows.rows() > 0)
        throw std::logic_error("subspace ambient dimension mismatch");
    auto pivots = spanning_rows.rref();
    Matrix basis(pivots.size(), ambient, spanning_rows.field());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) basis.at(i, j) = spanning_rows.at(i, j);
    return Subspace(ambient, basis);
}

bool Subspace::contains(const Matrix& row_vector) const {
    Matrix probe = basis_.vstack(row_vector);
    return probe.rank() == basis_.rows();
}

Subspace kernel_basis(const Matrix& m) {
    // v*m = 0  <=>  m^T v^T = 0; run column elimination via the transpose.
    Matrix t = m.transpose();
    auto pivots = t.rref();
    std::vector<bool> is_pivot(m.rows(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::size_t k = 0;
    Matrix basis(m.rows() - pivots.size(), m.rows(), m.field());
    for (std::size_t free_col = 0; free_col < m.rows(); ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.at(k, free_col) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < free_col)
                basis.at(k, pivots[r]) = m.field().neg(t.at(r, free_col));
        ++k;
    }
    return Subspace::from_rows(m.rows(), basis);
}

Subspace image_basis(const Matrix& m) {
    return Subspace::from_rows(m.cols(), m);
}

Matrix quotient_map(std::size_t ambient_dim, const Subspace& sub) {
    if (sub.ambient_dim() != ambient_dim)
        throw BadInput("quotient_map: subspace lives in dimension " +
                       std::to_string(sub.ambient_dim()) + ", not " + std::to_string(ambient_dim));
    const Matrix& b = sub.basis();
    std::vector<bool> is_pivot(ambient_dim, false);
    std::vector<std::size_t> pivot_of_row(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        std::size_t c = 0;
        while (c < ambient_dim && b.at(i, c) == 0) ++c;
        pivot_of_row[i] = c;
        is_pivot[c] = true;
    }
    std::vector<std::size_t> complement;
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) complement.push_back(c);

    Matrix q(ambient_dim, complement.size(), b.field());
    for (std::size_t e = 0; e < ambient_dim; ++e) {
        // reduce the e-th standard basis vector modulo sub, read complement coords
        Matrix v(1, ambient_dim, b.field());
        v.at(0, e) = 1;
        for (std::size_t i = 0; i < b.rows(); ++i) {
            const Scalar& f = v.at(0, pivot_of_row[i]);
            if (f == 0) continue;
            Scalar c = f;
            for (std::size_t j = 0; j < ambient_dim; ++j)
                v.at(0, j) = b.field().sub(v.at(0, j), b.field().mul(c, b.at(i, j)));
        }
        for (std::size_t j = 0; j < complement.size(); ++j) q.at(e, j) = v.at(0, complement[j]);
    }
    return q;
}

Matrix RowEchelon::reduce(Matrix row) const {
    for (const auto& [pivot, r] : rows_) {
        const Scalar& f = row.at(0, pivot);
        if (f == 0) continue;
        Scalar c = f;
        for (std::size_t j = pivot; j < ambient_; ++j)
            row.at(0, j) = field_.sub(row.at(0, j), field_.mul(c, r.at(0, j)));
    }
    return row;
}

bool RowEchelon::add(Matrix row) {
    row = reduce(std::move(row));
    std::size_t pivot = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j)
        if (row.at(0, j) != 0) { pivot = j; break; }
    if (pivot == ambient_) return false;
    Scalar inv = field_.inv(row.at(0, pivot));
    for (std::size_t j = pivot; j < ambient_; ++j) row.at(0, j) = field_.mul(row.at(0, j), inv);
    for (auto& [p, r] : rows_) {
        const Scalar& f = r.at(0, pivot);
        if (f == 0) continue;
        Scalar c = f;
        for (std::size_t j = pivot; j < ambient_; ++j)
            r.at(0, j) = field_.sub(r.at(0, j), field_.mul(c, row.at(0, j)));
    }
    auto it = rows_.begin();
    while (it != rows_.end() && it->first < pivot) ++it;
    rows_.insert(it, {pivot, std::move(row)});
    return true;
}

Matrix RowEchelon::basis() const {
    Matrix b(rows_.size(), ambient_, field_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) b.at(i, j) = rows_[i].second.at(0, j);
    return b;
}

bool solve_row_system(const Matrix& a, const Matrix& b, Matrix& solution_out) {
    // x*a = b  <=>  a^T x^T = b^T; eliminate on [a^T | b^T].
    Matrix aug = a.transpose().hstack(b.transpose());
    auto pivots = aug.rref();
    std::size_t acols = a.rows();
    Matrix x(b.rows(), a.rows(), a.field());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= acols) return false;  // pivot in the rhs block: inconsistent
        for (std::size_t j = 0; j < b.rows(); ++j) x.at(j, pivots[r]) = aug.at(r, acols + j);
    }
    solution_out = x;
    return true;
}

Matrix coordinates(const Matrix& basis, const Matrix& v) {
    Matrix x;
    if (!solve_row_system(basis, v, x))
        throw std::logic_error("coordinates: vector outside span");
    return x;
}

}  // namespace cf
