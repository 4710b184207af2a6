#include "koszulkit/matrix.hpp"

#include <stdexcept>
#include <string>

namespace koszulkit {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("dimension mismatch: ") + what);
}

} // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<long>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == nc, "ragged rows");
        for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = field.from_int(rows[r][c]);
    }
    return m;
}

Matrix Matrix::column(const Field& field, const Vector& v) {
    Matrix m(field, v.size(), 1);
    for (std::size_t r = 0; r < v.size(); ++r) m.at(r, 0) = v[r];
    return m;
}

Vector Matrix::column_vector(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

Vector Matrix::row_vector(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    require(v.size() == rows_, "set_column");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, "block");
    Matrix b(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b.at(r, c) = at(r0 + r, c0 + c);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    require(r0 + m.rows_ <= rows_ && c0 + m.cols_ <= cols_, "set_block");
    for (std::size_t r = 0; r < m.rows_; ++r)
        for (std::size_t c = 0; c < m.cols_; ++c) at(r0 + r, c0 + c) = m.at(r, c);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
    Matrix m(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols.size(); ++k) m.at(r, k) = at(r, cols[k]);
    return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
    Matrix m(field_, rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t c = 0; c < cols_; ++c) m.at(k, c) = at(rows[k], c);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require(cols_ == o.rows_, "product");
    Matrix p(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                const Scalar& b = o.at(k, c);
                if (!b.is_zero()) p.at(r, c) += a * b;
            }
        }
    return p;
}

Vector Matrix::operator*(const Vector& v) const {
    require(cols_ == v.size(), "matrix-vector product");
    Vector out = field_.zeros(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = at(r, c);
            if (!a.is_zero()) out[r] += a * v[c];
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "sum");
    Matrix s = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] += o.data_[k];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "difference");
    Matrix s = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] -= o.data_[k];
    return s;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m = *this;
    for (auto& x : m.data_) x *= s;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), "hstack");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), "vstack");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

RrefResult rref(Matrix m) {
    RrefResult out;
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && m.at(piv, col).is_zero()) ++piv;
        if (piv == nr) continue;
        if (piv != row)
            for (std::size_t c = col; c < nc; ++c) std::swap(m.at(piv, c), m.at(row, c));
        const Scalar inv = m.at(row, col).inverse();
        for (std::size_t c = col; c < nc; ++c)
            if (!m.at(row, c).is_zero()) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            const Scalar factor = m.at(r, col);
            for (std::size_t c = col; c < nc; ++c) {
                const Scalar& p = m.at(row, c);
                if (!p.is_zero()) m.at(r, c) -= factor * p;
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = out.pivots.size();
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    const auto r = rref(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    Matrix k(m.field(), nc, nc - r.rank);
    std::size_t out = 0;
    for (std::size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        k.at(free, out) = m.field().one();
        for (std::size_t i = 0; i < r.rank; ++i) k.at(r.pivots[i], out) = -r.reduced.at(i, free);
        ++out;
    }
    return k;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    require(a.rows() == b.size(), "solve");
    const auto r = rref(hstack(a, Matrix::column(a.field(), b)));
    const std::size_t nc = a.cols();
    if (!r.pivots.empty() && r.pivots.back() == nc) return std::nullopt;
    Vector x = a.field().zeros(nc);
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced.at(i, nc);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    require(m.rows() == m.cols(), "inverse of non-square matrix");
    const std::size_t n = m.rows();
    const auto r = rref(hstack(m, Matrix::identity(m.field(), n)));
    if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
    return r.reduced.block(0, n, n, n);
}

std::vector<std::size_t> independent_columns(const Matrix& m) { return rref(m).pivots; }

} // namespace koszulkit
