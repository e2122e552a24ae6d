#include "khicalc/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace khicalc {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, f.zero())
{
}

Matrix Matrix::identity(Field f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::from_rows(Field f, std::initializer_list<std::initializer_list<long>> rows)
{
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw std::invalid_argument("Matrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (long v : row)
            m.at(i, j++) = f.integer(v);
        ++i;
    }
    return m;
}

Matrix Matrix::column(Field f, const std::vector<long>& entries)
{
    Matrix m(f, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.at(i, 0) = f.integer(entries[i]);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw std::logic_error("Matrix::operator*: inner dimensions disagree");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero())
                    continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::logic_error("Matrix::operator+: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const
{
    Matrix r = *this;
    for (auto& x : r.a_)
        x = -x;
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const
{
    Matrix r = *this;
    for (auto& x : r.a_)
        x = x * c;
    return r;
}

bool Matrix::operator==(const Matrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix Matrix::transpose() const
{
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::hcat(const Matrix& o) const
{
    if (rows_ != o.rows_)
        throw std::logic_error("Matrix::hcat: row counts disagree");
    Matrix r(field_, rows_, cols_ + o.cols_);
    r.set_block(0, 0, *this);
    r.set_block(0, cols_, o);
    return r;
}

Matrix Matrix::vcat(const Matrix& o) const
{
    if (cols_ != o.cols_)
        throw std::logic_error("Matrix::vcat: column counts disagree");
    Matrix r(field_, rows_ + o.rows_, cols_);
    r.set_block(0, 0, *this);
    r.set_block(rows_, 0, o);
    return r;
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const
{
    Matrix r(field_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            r.at(i, j) = at(i, idx[j]);
    return r;
}

Matrix Matrix::top_rows(std::size_t n) const { return block(0, 0, n, cols_); }

Matrix Matrix::bottom_rows(std::size_t n) const { return block(rows_ - n, 0, n, cols_); }

void Matrix::set_block(std::size_t i0, std::size_t j0, const Matrix& b)
{
    if (i0 + b.rows_ > rows_ || j0 + b.cols_ > cols_)
        throw std::logic_error("Matrix::set_block: block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            at(i0 + i, j0 + j) = b.at(i, j);
}

Matrix Matrix::block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const
{
    if (i0 + r > rows_ || j0 + c > cols_)
        throw std::logic_error("Matrix::block: out of range");
    Matrix m(field_, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = at(i0 + i, j0 + j);
    return m;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const
{
    Matrix m = *this;
    if (pivots)
        pivots->clear();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        // first nonzero entry at or below `lead`
        std::size_t sel = lead;
        while (sel < rows_ && m.at(sel, col).is_zero())
            ++sel;
        if (sel == rows_)
            continue;
        if (sel != lead)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(m.at(sel, j), m.at(lead, j));
        Scalar inv = m.at(lead, col).inverse();
        for (std::size_t j = col; j < cols_; ++j)
            m.at(lead, j) = m.at(lead, j) * inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == lead || m.at(i, col).is_zero())
                continue;
            Scalar factor = m.at(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                m.at(i, j) -= factor * m.at(lead, j);
        }
        if (pivots)
            pivots->push_back(col);
        ++lead;
    }
    return m;
}

std::size_t Matrix::rank() const
{
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

Matrix Matrix::kernel_basis() const
{
    std::vector<std::size_t> piv;
    Matrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : piv)
        is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!is_pivot[j])
            free_cols.push_back(j);

    Matrix k(field_, cols_, free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        std::size_t fc = free_cols[f];
        k.at(fc, f) = field_.one();
        for (std::size_t pi = 0; pi < piv.size(); ++pi)
            k.at(piv[pi], f) = -r.at(pi, fc);
    }
    return k.column_echelon();
}

Matrix Matrix::column_echelon() const
{
    std::vector<std::size_t> piv;
    Matrix r = transpose().rref(&piv);
    // keep the nonzero rows, i.e. the first piv.size() rows of the RREF
    return r.top_rows(piv.size()).transpose();
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const
{
    if (rhs.rows_ != rows_)
        throw std::logic_error("Matrix::solve: rhs row count disagrees");
    std::vector<std::size_t> piv;
    Matrix aug = hcat(rhs).rref(&piv);
    Matrix x(field_, cols_, rhs.cols_);
    for (std::size_t pi = 0; pi < piv.size(); ++pi) {
        if (piv[pi] >= cols_)
            return std::nullopt; // pivot in the rhs block: inconsistent
        for (std::size_t j = 0; j < rhs.cols_; ++j)
            x.at(piv[pi], j) = aug.at(pi, cols_ + j);
    }
    return x;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "[") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

} // namespace khicalc
