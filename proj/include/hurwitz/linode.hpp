#pragma once

// Monic linear homogeneous differential operators on Hk,
//   L(h) = d^n h + sum_{i<n} h_i d^i h,
// their recursive solutions, and the Wronskian machinery around them.

#include <cstddef>
#include <optional>
#include <vector>

#include "hurwitz/field.hpp"
#include "hurwitz/matrix.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

class LinearOperator {
public:
    /// Constant coefficients a_0..a_{n-1}. Throws InvalidArgument if empty.
    static LinearOperator with_constants(const std::vector<FieldElem>& a, const FieldSpec& spec);
    /// Series coefficients h_0..h_{n-1}. Throws InvalidArgument if empty.
    static LinearOperator with_series(std::vector<HurwitzSeries> h, const FieldSpec& spec);

    std::size_t order() const noexcept { return coeffs_.size(); }
    const FieldSpec& spec() const noexcept { return spec_; }
    const std::vector<HurwitzSeries>& coeffs() const noexcept { return coeffs_; }

    /// True iff built from field constants.
    bool is_constant() const noexcept { return constants_.has_value(); }
    /// Throws NotConstantCoefficient.
    const std::vector<FieldElem>& constants() const;

    /// The same operator as a constant-coefficient one if every h_i vanishes
    /// at indices 1..N-1.
    std::optional<LinearOperator> as_constant(Precision p) const;

private:
    LinearOperator(FieldSpec spec, std::vector<HurwitzSeries> coeffs,
                   std::optional<std::vector<FieldElem>> constants)
        : spec_(spec), coeffs_(std::move(coeffs)), constants_(std::move(constants)) {}

    FieldSpec spec_;
    std::vector<HurwitzSeries> coeffs_;
    std::optional<std::vector<FieldElem>> constants_;
};

/// L(h), lazily.
HurwitzSeries apply(const LinearOperator& op, const HurwitzSeries& h);

enum class Recurrence {
    /// Simplified recurrence for constant operators, general otherwise.
    Automatic,
    /// Always the general binomial-weighted recurrence.
    General,
};

/// The unique solution with pi_i(y) = c_i for i < n:
///   pi_{n+m}(y) = -sum_i sum_{j<=m} C(m,j) pi_j(h_i) pi_{m-j+i}(y)
/// which for constant a_i collapses to y_{n+m} = -sum_i a_i y_{m+i}.
/// Throws ArityMismatch if |c| != n.
HurwitzSeries solve_ivp(const LinearOperator& op, const std::vector<FieldElem>& initial,
                        Recurrence recurrence = Recurrence::Automatic);

struct SolutionBasis {
    LinearOperator op;
    /// y_1..y_n with pi_{i-1}(y_j) = delta_ij.
    std::vector<HurwitzSeries> basis;
};

SolutionBasis solution_basis(const LinearOperator& op);

/// det(d^i y_j). Throws SizeLimit above 12 series.
HurwitzSeries wronskian(const std::vector<HurwitzSeries>& series, Precision p);

/// Monic operator whose solution space is spanned by `series`, obtained by
/// expanding the bordered Wronskian w(Y, s_1..s_n) along the Y column and
/// dividing by (-1)^n w(s_1..s_n). Throws SingularWronskian if pi_0(w) = 0.
LinearOperator operator_from_basis(const std::vector<HurwitzSeries>& series, Precision p);

inline constexpr std::size_t kDefaultVerifyPrecision = 32;

/// B with Y' = Y B for the standard basis, B_{ij} = pi_i(y_j) (1-based j,
/// 0-based i shifted by one). Checked against the series to the given
/// precision. Throws NotConstantCoefficient.
Matrix companion_matrix(const LinearOperator& op, Precision verify = Precision(kDefaultVerifyPrecision));

}  // namespace hurwitz
