#include "qtorus/linalg.hpp"

#include "qtorus/error.hpp"

#include <sstream>

namespace qtorus {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Cyclotomic(1L);
    return m;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
    Matrix m(rows, cols);
    m(i, j) = Cyclotomic(1L);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty())
        return {};
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            fail(ErrorCode::invalid_argument, "from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

Cyclotomic Matrix::trace() const {
    Cyclotomic t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        t += (*this)(i, i);
    return t;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::pow(std::int64_t e) const {
    if (!is_square() || e < 0)
        fail(ErrorCode::invalid_argument, "Matrix::pow needs a square matrix and e >= 0");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail(ErrorCode::invalid_operand, "matrix shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!o.data_[k].is_zero())
            data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail(ErrorCode::invalid_operand, "matrix shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!o.data_[k].is_zero())
            data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Cyclotomic& c) {
    for (auto& x : data_)
        if (!x.is_zero())
            x *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        fail(ErrorCode::invalid_operand, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Cyclotomic& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size())
        fail(ErrorCode::invalid_operand, "matrix-vector shape mismatch");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (!v[j].is_zero() && !a(i, j).is_zero())
                out[i] += a(i, j) * v[j];
    return out;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_)
        x = -x;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
        if (a.data_[k] != b.data_[k])
            return false;
    return true;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero())
                continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s)
                    if (!b(r, s).is_zero())
                        k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
        }
    return k;
}

Matrix lie_bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vector scaled(const Vector& v, const Cyclotomic& c) {
    Vector out = v;
    for (auto& x : out)
        if (!x.is_zero())
            x *= c;
    return out;
}

Vector add(const Vector& a, const Vector& b) {
    Vector out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b[i];
    return out;
}

Vector subtract(const Vector& a, const Vector& b) {
    Vector out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= b[i];
    return out;
}

Vector EchelonBasis::reduce(Vector v) const {
    if (v.size() != dim_)
        fail(ErrorCode::invalid_operand, "vector length does not match subspace ambient");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Cyclotomic c = v[pivots_[r]];
        if (c.is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!rows_[r][j].is_zero())
                v[j] -= c * rows_[r][j];
    }
    return v;
}

bool EchelonBasis::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(const Vector& v) {
    Vector r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r[p].is_zero())
        ++p;
    if (p == dim_)
        return false;
    const Cyclotomic inv = r[p].inverse();
    for (auto& x : r)
        if (!x.is_zero())
            x *= inv;
    // Keep the basis fully reduced so reduce() is a single pass.
    for (auto& row : rows_) {
        const Cyclotomic c = row[p];
        if (c.is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!r[j].is_zero())
                row[j] -= c * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

std::size_t rank(const Matrix& a) {
    EchelonBasis e(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        e.insert(a.row(i));
    return e.size();
}

std::vector<Vector> nullspace(const Matrix& a) {
    const std::size_t n = a.cols();
    EchelonBasis e(n);
    for (std::size_t i = 0; i < a.rows(); ++i)
        e.insert(a.row(i));
    std::vector<bool> is_pivot(n, false);
    std::vector<std::size_t> pivot_of_row;
    for (const auto& row : e.rows()) {
        std::size_t p = 0;
        while (row[p].is_zero())
            ++p;
        is_pivot[p] = true;
        pivot_of_row.push_back(p);
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        Vector x(n);
        x[free] = Cyclotomic(1L);
        for (std::size_t r = 0; r < e.rows().size(); ++r)
            x[pivot_of_row[r]] = -e.rows()[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows())
        fail(ErrorCode::invalid_operand, "solve: right-hand side length mismatch");
    // Eliminate on the augmented matrix [a | b].
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    EchelonBasis e(a.cols() + 1);
    for (std::size_t i = 0; i < aug.rows(); ++i)
        e.insert(aug.row(i));
    Vector x(a.cols());
    for (const auto& row : e.rows()) {
        std::size_t p = 0;
        while (row[p].is_zero())
            ++p;
        if (p == a.cols())
            return std::nullopt;
        x[p] = row[a.cols()];
    }
    return x;
}

std::vector<Vector> common_kernel(const std::vector<Matrix>& maps, std::size_t dim) {
    std::size_t total = 0;
    for (const auto& m : maps)
        total += m.rows();
    Matrix stacked(total, dim);
    std::size_t r = 0;
    for (const auto& m : maps) {
        if (m.cols() != dim)
            fail(ErrorCode::invalid_operand, "common_kernel: column mismatch");
        for (std::size_t i = 0; i < m.rows(); ++i, ++r)
            for (std::size_t j = 0; j < dim; ++j)
                stacked(r, j) = m(i, j);
    }
    if (total == 0) {
        std::vector<Vector> basis;
        for (std::size_t i = 0; i < dim; ++i) {
            Vector v(dim);
            v[i] = Cyclotomic(1L);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    return nullspace(stacked);
}

bool SparseEchelon::insert(Row row) {
    while (!row.empty()) {
        auto lead = row.begin();
        auto piv = pivots_.find(lead->first);
        if (piv == pivots_.end()) {
            const Cyclotomic inv = lead->second.inverse();
            for (auto& [col, x] : row)
                x *= inv;
            pivots_.emplace(lead->first, std::move(row));
            return true;
        }
        const Cyclotomic c = lead->second;
        for (const auto& [col, x] : piv->second) {
            auto [it, inserted] = row.try_emplace(col, -(c * x));
            if (!inserted) {
                it->second -= c * x;
                if (it->second.is_zero())
                    row.erase(it);
            } else if (it->second.is_zero()) {
                row.erase(it);
            }
        }
    }
    return false;
}

} // namespace qtorus
