#include "hurwitz/linode.hpp"

#include "hurwitz/error.hpp"

namespace hurwitz {

// ---- LinearOperator --------------------------------------------------------

LinearOperator LinearOperator::with_constants(const std::vector<FieldElem>& a, const FieldSpec& spec) {
    if (a.empty()) throw Error(ErrorKind::InvalidArgument, "operator order must be at least 1");
    std::vector<HurwitzSeries> series;
    series.reserve(a.size());
    for (const auto& c : a) {
        if (!(c.spec() == spec)) throw Error(ErrorKind::MixedFields, "operator coefficient outside " + spec.to_string());
        series.push_back(HurwitzSeries::constant(c));
    }
    return LinearOperator(spec, std::move(series), a);
}

LinearOperator LinearOperator::with_series(std::vector<HurwitzSeries> h, const FieldSpec& spec) {
    if (h.empty()) throw Error(ErrorKind::InvalidArgument, "operator order must be at least 1");
    for (const auto& s : h) {
        if (!(s.spec() == spec)) throw Error(ErrorKind::MixedFields, "operator coefficient outside " + spec.to_string());
    }
    return LinearOperator(spec, std::move(h), std::nullopt);
}

const std::vector<FieldElem>& LinearOperator::constants() const {
    if (!constants_) throw Error(ErrorKind::NotConstantCoefficient, "operator has series coefficients");
    return *constants_;
}

std::optional<LinearOperator> LinearOperator::as_constant(Precision p) const {
    if (constants_) return *this;
    std::vector<FieldElem> a;
    for (const auto& h : coeffs_) {
        for (std::size_t m = 1; m < p.n(); ++m) {
            if (!h.coeff(m).is_zero()) return std::nullopt;
        }
        a.push_back(h.coeff(0));
    }
    return with_constants(a, spec_);
}

// ---- application and solving -----------------------------------------------

HurwitzSeries apply(const LinearOperator& op, const HurwitzSeries& h) {
    if (!(op.spec() == h.spec())) {
        throw Error(ErrorKind::MixedFields, "operator over " + op.spec().to_string() + " applied to series over " +
                                                h.spec().to_string());
    }
    HurwitzSeries result = derive(h, op.order());
    for (std::size_t i = 0; i < op.order(); ++i) {
        result = result + op.coeffs()[i] * derive(h, i);
    }
    return result;
}

HurwitzSeries solve_ivp(const LinearOperator& op, const std::vector<FieldElem>& initial, Recurrence recurrence) {
    const std::size_t n = op.order();
    if (initial.size() != n) {
        throw Error(ErrorKind::ArityMismatch, "order " + std::to_string(n) + " operator needs " + std::to_string(n) +
                                                  " initial values, got " + std::to_string(initial.size()));
    }
    for (const auto& c : initial) {
        if (!(c.spec() == op.spec())) throw Error(ErrorKind::MixedFields, "initial value outside operator field");
    }
    const FieldSpec spec = op.spec();

    if (op.is_constant() && recurrence == Recurrence::Automatic) {
        return HurwitzSeries::from_rule(spec, [initial, a = op.constants(), spec](std::size_t idx,
                                                                                 std::span<const FieldElem> y) {
            const std::size_t n = a.size();
            if (idx < n) return initial[idx];
            const std::size_t m = idx - n;
            FieldElem sum = FieldElem::zero(spec);
            for (std::size_t i = 0; i < n; ++i) {
                if (!a[i].is_zero()) sum += a[i] * y[m + i];
            }
            return -sum;
        });
    }

    return HurwitzSeries::from_rule(spec, [initial, h = op.coeffs(), spec](std::size_t idx,
                                                                          std::span<const FieldElem> y) {
        const std::size_t n = h.size();
        if (idx < n) return initial[idx];
        const std::size_t m = idx - n;
        const auto binom = binomial_row(m, spec);
        FieldElem sum = FieldElem::zero(spec);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= m; ++j) {
                if (binom[j].is_zero()) continue;
                FieldElem hij = h[i].coeff(j);
                if (hij.is_zero()) continue;
                sum += binom[j] * hij * y[m - j + i];
            }
        }
        return -sum;
    });
}

SolutionBasis solution_basis(const LinearOperator& op) {
    const std::size_t n = op.order();
    std::vector<HurwitzSeries> basis;
    basis.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<FieldElem> initial(n, FieldElem::zero(op.spec()));
        initial[j] = FieldElem::one(op.spec());
        basis.push_back(solve_ivp(op, initial));
    }
    return {op, std::move(basis)};
}

// ---- Wronskians ------------------------------------------------------------

namespace {

FieldSpec common_spec(const std::vector<HurwitzSeries>& series) {
    if (series.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one series");
    const FieldSpec spec = series.front().spec();
    for (const auto& s : series) {
        if (!(s.spec() == spec)) throw Error(ErrorKind::MixedFields, "series over different fields");
    }
    return spec;
}

/// Determinant of the matrix (d^r s_j) with r running over `rows`.
HurwitzSeries derivative_minor(const std::vector<HurwitzSeries>& series, const std::vector<std::size_t>& rows,
                               const FieldSpec& spec, Precision p) {
    const std::size_t n = series.size();
    SeriesMatrix m(n, spec);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) m.set(r, j, derive(series[j], rows[r]));
    return det_division_free(m, p);
}

}  // namespace

HurwitzSeries wronskian(const std::vector<HurwitzSeries>& series, Precision p) {
    const FieldSpec spec = common_spec(series);
    if (series.size() > kMaxSeriesDeterminant) {
        throw Error(ErrorKind::SizeLimit, "wronskian limited to 12 series");
    }
    std::vector<std::size_t> rows(series.size());
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
    return derivative_minor(series, rows, spec, p);
}

LinearOperator operator_from_basis(const std::vector<HurwitzSeries>& series, Precision p) {
    const FieldSpec spec = common_spec(series);
    const std::size_t n = series.size();
    if (n > kMaxSeriesDeterminant) throw Error(ErrorKind::SizeLimit, "operator reconstruction limited to 12 series");

    HurwitzSeries w = wronskian(series, p);
    if (w.coeff(0).is_zero()) {
        throw Error(ErrorKind::SingularWronskian, "wronskian has zero constant term");
    }
    // The minor dropping row n is w itself, with sign (-1)^n; normalizing that
    // coefficient to 1 gives h_i = (-1)^{i+n} minor_i / w.
    HurwitzSeries w_inv = w.invert();
    std::vector<HurwitzSeries> h;
    h.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> rows;
        for (std::size_t r = 0; r <= n; ++r) {
            if (r != i) rows.push_back(r);
        }
        HurwitzSeries minor = derivative_minor(series, rows, spec, p);
        HurwitzSeries coeff = minor * w_inv;
        if ((i + n) % 2 == 1) coeff = -coeff;
        h.push_back(coeff);
    }
    return LinearOperator::with_series(std::move(h), spec);
}

Matrix companion_matrix(const LinearOperator& op, Precision verify) {
    if (!op.is_constant()) {
        throw Error(ErrorKind::NotConstantCoefficient, "companion matrix needs constant coefficients");
    }
    const std::size_t n = op.order();
    const SolutionBasis sb = solution_basis(op);
    Matrix b(n, n, op.spec());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = sb.basis[j].coeff(i + 1);

    // Y' = Y B, coefficientwise.
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t idx = 0; idx < verify.n(); ++idx) {
            FieldElem rhs = FieldElem::zero(op.spec());
            for (std::size_t i = 0; i < n; ++i) rhs += sb.basis[i].coeff(idx) * b(i, j);
            if (!(sb.basis[j].coeff(idx + 1) == rhs)) {
                throw Error(ErrorKind::InvalidArgument, "derivative of the basis is not Y*B");
            }
        }
    }
    return b;
}

}  // namespace hurwitz
