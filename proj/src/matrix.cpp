#include "hurwitz/matrix.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

void require_same(const FieldSpec& a, const FieldSpec& b) {
    if (!(a == b)) {
        throw Error(ErrorKind::MixedFields, "matrices live in " + a.to_string() + " and " + b.to_string());
    }
}

void require_shape(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::ShapeMismatch, what);
}

}  // namespace

// ---- Matrix ----------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& spec)
    : rows_(rows), cols_(cols), spec_(spec), entries_(rows * cols, FieldElem::zero(spec)) {}

Matrix Matrix::from_rows(const std::vector<std::vector<FieldElem>>& rows, const FieldSpec& spec) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c, spec);
    for (std::size_t i = 0; i < r; ++i) {
        require_shape(rows[i].size() == c, "ragged rows");
        for (std::size_t j = 0; j < c; ++j) {
            require_same(spec, rows[i][j].spec());
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::from_integers(const std::vector<std::vector<long>>& rows, const FieldSpec& spec) {
    std::vector<std::vector<FieldElem>> elems;
    elems.reserve(rows.size());
    for (const auto& row : rows) {
        auto& out = elems.emplace_back();
        for (long v : row) out.push_back(FieldElem::from_integer(v, spec));
    }
    return from_rows(elems, spec);
}

Matrix Matrix::identity(std::size_t n, const FieldSpec& spec) {
    Matrix m(n, n, spec);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem::one(spec);
    return m;
}

Matrix Matrix::column(const std::vector<FieldElem>& v, const FieldSpec& spec) {
    Matrix m(v.size(), 1, spec);
    for (std::size_t i = 0; i < v.size(); ++i) {
        require_same(spec, v[i].spec());
        m(i, 0) = v[i];
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, spec_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<FieldElem> Matrix::column_vector(std::size_t j) const {
    std::vector<FieldElem> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same(spec_, rhs.spec_);
    require_shape(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix sum of different shapes");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same(spec_, rhs.spec_);
    require_shape(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix difference of different shapes");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same(a.spec_, b.spec_);
    require_shape(a.cols_ == b.rows_, "matrix product of non-conformable shapes");
    Matrix c(a.rows_, b.cols_, a.spec_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FieldElem& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Matrix operator*(const FieldElem& c, Matrix a) {
    require_same(c.spec(), a.spec_);
    for (auto& e : a.entries_) e *= c;
    return a;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    require_same(a.spec_, b.spec_);
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

// ---- elimination -----------------------------------------------------------

RowEchelon row_reduce(const Matrix& a) {
    Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
        }
        const FieldElem scale = m(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= scale;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const FieldElem factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return row_reduce(a).rank(); }

FieldElem det(const Matrix& a) {
    require_shape(a.is_square(), "determinant of a non-square matrix");
    Matrix m = a;
    const std::size_t n = m.rows();
    FieldElem result = FieldElem::one(m.spec());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return FieldElem::zero(m.spec());
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            result = -result;
        }
        result *= m(col, col);
        const FieldElem inv = m(col, col).inv();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            const FieldElem factor = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
        }
    }
    return result;
}

Matrix inverse(const Matrix& a) {
    require_shape(a.is_square(), "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix aug(n, 2 * n, a.spec());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = FieldElem::one(a.spec());
    }
    RowEchelon e = row_reduce(aug);
    if (e.rank() < n || e.pivot_columns[n - 1] != n - 1) {
        throw Error(ErrorKind::Singular, "matrix is not invertible");
    }
    Matrix inv(n, n, a.spec());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::optional<std::vector<FieldElem>> solve_any(const Matrix& a, const std::vector<FieldElem>& b) {
    require_shape(b.size() == a.rows(), "right-hand side length differs from row count");
    Matrix aug(a.rows(), a.cols() + 1, a.spec());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        require_same(a.spec(), b[i].spec());
        aug(i, a.cols()) = b[i];
    }
    RowEchelon e = row_reduce(aug);
    if (!e.pivot_columns.empty() && e.pivot_columns.back() == a.cols()) return std::nullopt;
    std::vector<FieldElem> x(a.cols(), FieldElem::zero(a.spec()));
    for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivot_columns[r]] = e.reduced(r, a.cols());
    return x;
}

std::vector<FieldElem> solve(const Matrix& a, const std::vector<FieldElem>& b) {
    require_shape(a.is_square(), "solve needs a square matrix");
    if (det(a).is_zero()) throw Error(ErrorKind::Singular, "coefficient matrix is singular");
    return *solve_any(a, b);
}

std::vector<std::vector<FieldElem>> kernel(const Matrix& a) {
    RowEchelon e = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElem> v(a.cols(), FieldElem::zero(a.spec()));
        v[free] = FieldElem::one(a.spec());
        for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix matrix_poly_eval(const std::vector<FieldElem>& coeffs, const Matrix& b) {
    require_shape(b.is_square(), "matrix polynomial of a non-square matrix");
    const std::size_t n = b.rows();
    Matrix result(n, n, b.spec());
    Matrix power = Matrix::identity(n, b.spec());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) power = power * b;
        if (!coeffs[i].is_zero()) result += coeffs[i] * power;
    }
    return result;
}

std::vector<FieldElem> vectorize(const Matrix& a) { return a.entries(); }

Matrix unvectorize(const std::vector<FieldElem>& v, std::size_t rows, std::size_t cols, const FieldSpec& spec) {
    require_shape(v.size() == rows * cols, "vector length does not match matrix shape");
    Matrix m(rows, cols, spec);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
    return m;
}

Matrix commutation_map(const Matrix& b) {
    require_shape(b.is_square(), "commutation map of a non-square matrix");
    const std::size_t n = b.rows();
    // (BX - XB)_{ij} = sum_k B_ik X_kj - X_ik B_kj
    Matrix map(n * n, n * n, b.spec());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t row = i * n + j;
            for (std::size_t k = 0; k < n; ++k) {
                map(row, k * n + j) += b(i, k);
                map(row, i * n + k) -= b(k, j);
            }
        }
    }
    return map;
}

// ---- SeriesMatrix ----------------------------------------------------------

SeriesMatrix::SeriesMatrix(std::size_t n, const FieldSpec& spec)
    : n_(n), spec_(spec), entries_(n * n, HurwitzSeries::zero(spec)) {}

SeriesMatrix SeriesMatrix::from_constant(const Matrix& a) {
    require_shape(a.is_square(), "series matrix must be square");
    SeriesMatrix m(a.rows(), a.spec());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, HurwitzSeries::constant(a(i, j)));
    return m;
}

void SeriesMatrix::set(std::size_t i, std::size_t j, HurwitzSeries s) {
    require_same(spec_, s.spec());
    entries_[i * n_ + j] = std::move(s);
}

HurwitzSeries det_division_free(const SeriesMatrix& m, Precision p) {
    const std::size_t n = m.size();
    if (n > kMaxSeriesDeterminant) {
        throw Error(ErrorKind::SizeLimit, "series determinant limited to 12x12, got " + std::to_string(n));
    }
    const FieldSpec spec = m.spec();
    if (n == 0) return HurwitzSeries::one(spec);

    // minors[S] = det of rows 0..|S|-1 restricted to the column set S,
    // expanded along its last row.
    using Mask = std::uint32_t;
    std::unordered_map<Mask, HurwitzSeries> minors;
    minors.emplace(Mask{0}, HurwitzSeries::one(spec));
    std::vector<Mask> level{0};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<Mask> next;
        for (Mask s = 0; s < (Mask{1} << n); ++s) {
            if (static_cast<std::size_t>(std::popcount(s)) == k) next.push_back(s);
        }
        for (Mask s : next) {
            struct Term {
                bool negative;
                HurwitzSeries product;
            };
            std::vector<Term> terms;
            std::size_t position = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (!(s & (Mask{1} << j))) continue;
                const bool negative = ((k - 1 + position) % 2) == 1;
                terms.push_back({negative, m(k - 1, j) * minors.at(s & ~(Mask{1} << j))});
                ++position;
            }
            minors.emplace(s, HurwitzSeries::from_rule(spec, [spec, terms](std::size_t idx, std::span<const FieldElem>) {
                FieldElem sum = FieldElem::zero(spec);
                for (const auto& t : terms) {
                    if (t.negative) {
                        sum -= t.product.coeff(idx);
                    } else {
                        sum += t.product.coeff(idx);
                    }
                }
                return sum;
            }));
        }
        for (Mask s : level) {
            if (s != 0 || k > 1) minors.erase(s);
        }
        level = std::move(next);
    }
    HurwitzSeries result = minors.at((Mask{1} << n) - 1);
    result.coeff(p.n() - 1);
    return result;
}

}  // namespace hurwitz
