#include "semicanon/matrix.hpp"

namespace semicanon {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(std::size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::of(const Field& f,
                  std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t nr = rows.size();
    std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    Matrix m(nr, nc, f);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != nc) throw Error(errc::ShapeMismatch, "ragged literal");
        std::size_t c = 0;
        for (long long v : row) m.at(r, c++) = f.from_int(v);
        ++r;
    }
    return m;
}

void Matrix::check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(errc::ShapeMismatch, "matrix shapes differ");
    if (!(field_ == o.field_)) throw Error(errc::FieldMismatch, "matrix fields differ");
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(errc::ShapeMismatch, "matrix product shapes");
    if (!(field_ == o.field_)) throw Error(errc::FieldMismatch, "matrix fields differ");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Fe& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Matrix Matrix::scaled(const Fe& s) const {
    Matrix r = *this;
    for (auto& v : r.data_) v *= s;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

Matrix Matrix::hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw Error(errc::ShapeMismatch, "hconcat row counts differ");
    if (!(a.field_ == b.field_)) throw Error(errc::FieldMismatch, "hconcat fields differ");
    Matrix r(a.rows_, a.cols_ + b.cols_, a.field_);
    r.set_block(0, 0, a);
    r.set_block(0, a.cols_, b);
    return r;
}

Matrix Matrix::vconcat(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw Error(errc::ShapeMismatch, "vconcat column counts differ");
    if (!(a.field_ == b.field_)) throw Error(errc::FieldMismatch, "vconcat fields differ");
    Matrix r(a.rows_ + b.rows_, a.cols_, a.field_);
    r.set_block(0, 0, a);
    r.set_block(a.rows_, 0, b);
    return r;
}

Matrix Matrix::assemble(const std::vector<std::vector<Matrix>>& blocks) {
    if (blocks.empty()) return Matrix();
    const Field& f = blocks[0].empty() ? Field::rationals() : blocks[0][0].field();
    std::size_t ncols_blocks = blocks[0].size();
    std::vector<std::size_t> heights(blocks.size()), widths(ncols_blocks);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].size() != ncols_blocks)
            throw Error(errc::ShapeMismatch, "ragged block grid");
        for (std::size_t j = 0; j < ncols_blocks; ++j) {
            const Matrix& b = blocks[i][j];
            if (j == 0) heights[i] = b.rows_;
            if (i == 0) widths[j] = b.cols_;
            if (b.rows_ != heights[i] || b.cols_ != widths[j])
                throw Error(errc::ShapeMismatch, "inconsistent block sizes");
        }
    }
    std::size_t total_r = 0, total_c = 0;
    for (auto h : heights) total_r += h;
    for (auto w : widths) total_c += w;
    Matrix r(total_r, total_c, f);
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::size_t c0 = 0;
        for (std::size_t j = 0; j < ncols_blocks; ++j) {
            r.set_block(r0, c0, blocks[i][j]);
            c0 += widths[j];
        }
        r0 += heights[i];
    }
    return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw Error(errc::ShapeMismatch, "block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw Error(errc::ShapeMismatch, "submatrix out of range");
    Matrix r(nr, nc, field_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

namespace {

struct Echelon {
    Matrix m;
    std::vector<std::size_t> pivot_rows;
    std::vector<std::size_t> pivot_cols;
    bool swapped_odd = false;
};

// Forward elimination with first-nonzero pivoting; optionally back-substitute
// and normalize pivots to 1 (reduced form).
Echelon echelon(Matrix a, bool reduced) {
    Echelon e{std::move(a), {}, {}, false};
    Matrix& m = e.m;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(piv, j));
            e.swapped_odd = !e.swapped_odd;
        }
        const Fe p = m.at(row, col);
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            Fe factor = m.at(i, col) / p;
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(row, j);
        }
        e.pivot_rows.push_back(row);
        e.pivot_cols.push_back(col);
        ++row;
    }
    if (reduced) {
        for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
            std::size_t pr = e.pivot_rows[k], pc = e.pivot_cols[k];
            Fe inv = m.at(pr, pc).inverse();
            for (std::size_t j = pc; j < m.cols(); ++j) m.at(pr, j) *= inv;
            for (std::size_t i = 0; i < pr; ++i) {
                if (m.at(i, pc).is_zero()) continue;
                Fe factor = m.at(i, pc);
                for (std::size_t j = pc; j < m.cols(); ++j)
                    m.at(i, j) -= factor * m.at(pr, j);
            }
        }
    }
    return e;
}

}  // namespace

std::size_t Matrix::rank() const { return echelon(*this, false).pivot_cols.size(); }

Fe Matrix::det() const {
    if (rows_ != cols_) throw Error(errc::NonSquare, "determinant of non-square matrix");
    Echelon e = echelon(*this, false);
    if (e.pivot_cols.size() < rows_) return field_.zero();
    Fe d = field_.one();
    for (std::size_t k = 0; k < rows_; ++k) d *= e.m.at(k, k);
    return e.swapped_odd ? -d : d;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivot_cols) const {
    Echelon e = echelon(*this, true);
    if (pivot_cols)
        pivot_cols->insert(pivot_cols->end(), e.pivot_cols.begin(), e.pivot_cols.end());
    return std::move(e.m);
}

Matrix Matrix::kernel() const {
    std::vector<std::size_t> pivots;
    Matrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(free_cols.size(), cols_, field_);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis.at(k, f) = field_.one();
        for (std::size_t p = 0; p < pivots.size(); ++p)
            basis.at(k, pivots[p]) = -r.at(p, f);
    }
    return basis;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    if (b.rows_ != rows_) throw Error(errc::ShapeMismatch, "solve rhs row count");
    if (!(field_ == b.field_)) throw Error(errc::FieldMismatch, "solve fields differ");
    std::vector<std::size_t> pivots;
    Matrix r = hconcat(*this, b).rref(&pivots);
    for (auto c : pivots)
        if (c >= cols_) return std::nullopt;
    Matrix x(cols_, b.cols_, field_);
    for (std::size_t p = 0; p < pivots.size(); ++p)
        for (std::size_t j = 0; j < b.cols_; ++j) x.at(pivots[p], j) = r.at(p, cols_ + j);
    return x;
}

std::optional<std::vector<Fe>> Matrix::solve_vec(const std::vector<Fe>& b) const {
    if (b.size() != rows_) throw Error(errc::ShapeMismatch, "solve rhs length");
    Matrix col(rows_, 1, field_);
    for (std::size_t i = 0; i < rows_; ++i) col.at(i, 0) = b[i];
    auto x = solve(col);
    if (!x) return std::nullopt;
    std::vector<Fe> out(cols_, field_.zero());
    for (std::size_t i = 0; i < cols_; ++i) out[i] = x->at(i, 0);
    return out;
}

std::optional<Matrix> Matrix::solve_left(const Matrix& b) const {
    if (b.cols_ != cols_) throw Error(errc::ShapeMismatch, "solve_left rhs column count");
    auto xt = transpose().solve(b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

}  // namespace semicanon
