#pragma once

#include "qtorus/cyclotomic.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qtorus {

using Vector = std::vector<Cyclotomic>;

/// Dense row-major matrix over the cyclotomic field.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
    static Matrix from_rows(const std::vector<Vector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Cyclotomic& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;

    bool is_zero() const;
    Cyclotomic trace() const;
    Matrix transpose() const;
    Matrix pow(std::int64_t e) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Cyclotomic& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Cyclotomic& c, Matrix a) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    Matrix operator-() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Cyclotomic> data_;
};

/// Kronecker product: block (i, j) equals a(i, j) * b.
Matrix kron(const Matrix& a, const Matrix& b);
/// Lie bracket ab - ba.
Matrix lie_bracket(const Matrix& a, const Matrix& b);

bool is_zero(const Vector& v);
Vector scaled(const Vector& v, const Cyclotomic& c);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);

/// Incrementally maintained reduced row-echelon basis of a subspace.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return rows_.size(); }
    /// Inserts v; returns true when v was not already in the span.
    bool insert(const Vector& v);
    bool contains(const Vector& v) const;
    /// Residue of v after elimination against the basis.
    Vector reduce(Vector v) const;
    const std::vector<Vector>& rows() const noexcept { return rows_; }

private:
    std::size_t dim_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& a);
/// Basis of { x : a x = 0 }.
std::vector<Vector> nullspace(const Matrix& a);
/// Some solution of a x = b, if one exists.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
/// Basis of the intersection of the kernels of all matrices (all with the same column count).
std::vector<Vector> common_kernel(const std::vector<Matrix>& maps, std::size_t dim);

/// Gaussian elimination on sparse rows, used for large structured relation systems.
class SparseEchelon {
public:
    using Row = std::map<std::size_t, Cyclotomic>;

    /// Returns true when the row increased the rank.
    bool insert(Row row);
    std::size_t rank() const noexcept { return pivots_.size(); }

private:
    std::map<std::size_t, Row> pivots_; // pivot column -> row normalized to pivot 1
};

} // namespace qtorus
