#pragma once

// Dense exact matrices over a field, and determinants over Hk.
//
// Convention: tuples of series are row vectors acted on from the right,
// Y' = Y * B.

#include <cstddef>
#include <optional>
#include <vector>

#include "hurwitz/field.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

class Matrix {
public:
    Matrix() = default;
    /// rows x cols zero matrix.
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& spec);
    /// Row-major entries; throws ShapeMismatch on ragged input, MixedFields on
    /// entries outside `spec`.
    static Matrix from_rows(const std::vector<std::vector<FieldElem>>& rows, const FieldSpec& spec);
    static Matrix from_integers(const std::vector<std::vector<long>>& rows, const FieldSpec& spec);
    static Matrix identity(std::size_t n, const FieldSpec& spec);
    /// Column vector.
    static Matrix column(const std::vector<FieldElem>& v, const FieldSpec& spec);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const FieldSpec& spec() const noexcept { return spec_; }

    FieldElem& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const FieldElem& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<FieldElem>& entries() const noexcept { return entries_; }

    bool is_zero() const;
    Matrix transpose() const;
    std::vector<FieldElem> column_vector(std::size_t j) const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const FieldElem& c, Matrix a);
    Matrix operator-() const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    FieldSpec spec_;
    std::vector<FieldElem> entries_;
};

/// Result of Gauss-Jordan elimination.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;  // ascending
    std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Reduced row echelon form; pivot is the first nonzero entry in the column.
RowEchelon row_reduce(const Matrix& a);
std::size_t rank(const Matrix& a);

FieldElem det(const Matrix& a);
/// Throws Singular.
Matrix inverse(const Matrix& a);
/// Solves a x = b for square nonsingular a. Throws Singular.
std::vector<FieldElem> solve(const Matrix& a, const std::vector<FieldElem>& b);
/// Any solution of a x = b, or nullopt if inconsistent (a may be rectangular).
std::optional<std::vector<FieldElem>> solve_any(const Matrix& a, const std::vector<FieldElem>& b);

/// Nullspace basis from the RREF: one vector per free column, free columns
/// ascending, free coordinate set to 1.
std::vector<std::vector<FieldElem>> kernel(const Matrix& a);

/// sum_i coeffs[i] * B^i with B^0 = I.
Matrix matrix_poly_eval(const std::vector<FieldElem>& coeffs, const Matrix& b);

/// Row-major flattening of an n x n matrix into a length n^2 vector.
std::vector<FieldElem> vectorize(const Matrix& a);
Matrix unvectorize(const std::vector<FieldElem>& v, std::size_t rows, std::size_t cols, const FieldSpec& spec);

/// Matrix of X -> B X - X B on M(n, k) in the row-major vectorized basis.
Matrix commutation_map(const Matrix& b);

/// Square grid of series.
class SeriesMatrix {
public:
    SeriesMatrix(std::size_t n, const FieldSpec& spec);
    static SeriesMatrix from_constant(const Matrix& a);

    std::size_t size() const noexcept { return n_; }
    const FieldSpec& spec() const noexcept { return spec_; }

    const HurwitzSeries& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    /// Throws MixedFields.
    void set(std::size_t i, std::size_t j, HurwitzSeries s);

private:
    std::size_t n_;
    FieldSpec spec_;
    std::vector<HurwitzSeries> entries_;
};

inline constexpr std::size_t kMaxSeriesDeterminant = 12;

/// Determinant over the commutative ring Hk by minor expansion with subset
/// memoization; no series division. The result is exact for every index;
/// coefficients below p are materialized eagerly. Throws SizeLimit above 12.
HurwitzSeries det_division_free(const SeriesMatrix& m, Precision p);

}  // namespace hurwitz
