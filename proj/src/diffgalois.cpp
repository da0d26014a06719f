#include "hurwitz/diffgalois.hpp"

#include "hurwitz/error.hpp"
#include "hurwitz/roots.hpp"

namespace hurwitz {

namespace {

/// n^2 x m matrix whose columns are the vectorized inputs.
Matrix stack_columns(const std::vector<Matrix>& mats, const std::vector<std::vector<FieldElem>>& extra,
                     std::size_t n, const FieldSpec& spec) {
    Matrix out(n * n, mats.size() + extra.size(), spec);
    std::size_t col = 0;
    for (const auto& m : mats) {
        const auto v = vectorize(m);
        for (std::size_t r = 0; r < v.size(); ++r) out(r, col) = v[r];
        ++col;
    }
    for (const auto& v : extra) {
        for (std::size_t r = 0; r < v.size(); ++r) out(r, col) = v[r];
        ++col;
    }
    return out;
}

void require_member_shape(const Matrix& c, std::size_t n, const FieldSpec& spec) {
    if (!(c.spec() == spec)) {
        throw Error(ErrorKind::MixedFields, "matrix over " + c.spec().to_string() + ", group over " + spec.to_string());
    }
    if (c.rows() != n || c.cols() != n) {
        throw Error(ErrorKind::ShapeMismatch, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }
}

std::vector<HurwitzSeries> row_times_matrix(const std::vector<HurwitzSeries>& y, const Matrix& c) {
    const FieldSpec spec = c.spec();
    std::vector<HurwitzSeries> out;
    out.reserve(c.cols());
    for (std::size_t j = 0; j < c.cols(); ++j) {
        std::vector<FieldElem> column = c.column_vector(j);
        out.push_back(HurwitzSeries::from_rule(spec, [y, column, spec](std::size_t idx, std::span<const FieldElem>) {
            FieldElem sum = FieldElem::zero(spec);
            for (std::size_t i = 0; i < column.size(); ++i) {
                if (!column[i].is_zero()) sum += column[i] * y[i].coeff(idx);
            }
            return sum;
        }));
    }
    return out;
}

Matrix shift_power(std::size_t size, std::size_t k, const FieldSpec& spec) {
    Matrix m(size, size, spec);
    for (std::size_t i = 0; i + k < size; ++i) m(i, i + k) = FieldElem::one(spec);
    return m;
}

std::string param_name(std::size_t k, std::size_t block, std::size_t block_count) {
    std::string base = k < 26 ? std::string(1, static_cast<char>('a' + k)) : "p" + std::to_string(k);
    if (block_count > 1) base += std::to_string(block + 1);
    return base;
}

}  // namespace

// ---- general route ---------------------------------------------------------

std::vector<Matrix> centralizer_basis(const Matrix& b) {
    if (!b.is_square()) throw Error(ErrorKind::ShapeMismatch, "centralizer of a non-square matrix");
    const std::size_t n = b.rows();
    std::vector<Matrix> powers;
    powers.reserve(n);
    powers.push_back(Matrix::identity(n, b.spec()));
    for (std::size_t i = 1; i < n; ++i) powers.push_back(powers.back() * b);

    const Matrix stacked = stack_columns(powers, {}, n, b.spec());
    if (rank(stacked) != n) {
        throw Error(ErrorKind::CentralizerMismatch, "powers I..B^{n-1} are linearly dependent");
    }
    const auto commutant = kernel(commutation_map(b));
    if (commutant.size() != n) {
        throw Error(ErrorKind::CentralizerMismatch, "commutant has dimension " + std::to_string(commutant.size()) +
                                                        ", expected " + std::to_string(n));
    }
    if (rank(stack_columns(powers, commutant, n, b.spec())) != n) {
        throw Error(ErrorKind::CentralizerMismatch, "powers of B do not span the commutant");
    }
    return powers;
}

GroupDescriptor group_descriptor(const LinearOperator& op) {
    const auto& a = op.constants();
    GroupDescriptor g;
    g.n = op.order();
    g.spec = op.spec();
    g.b = companion_matrix(op);
    g.algebra_basis = centralizer_basis(g.b);

    std::vector<FieldElem> charpoly = a;
    charpoly.push_back(FieldElem::one(op.spec()));
    const bool zero_root = evaluate_polynomial(charpoly, FieldElem::zero(op.spec())).is_zero();
    const bool kills_e1 = g.b.column_vector(0) == std::vector<FieldElem>(g.n, FieldElem::zero(op.spec()));
    if (zero_root != a[0].is_zero() || kills_e1 != a[0].is_zero()) {
        throw Error(ErrorKind::CentralizerMismatch, "a_0 = 0, zero root and B e_1 = 0 disagree");
    }
    g.fixed_vector.assign(g.n, FieldElem::zero(op.spec()));
    g.fixed_vector[0] = FieldElem::one(op.spec());
    g.constraint = a[0].is_zero() ? GroupConstraint::InvertibleAndFixesConstants : GroupConstraint::InvertibleOnly;
    return g;
}

Membership membership(const Matrix& c, const GroupDescriptor& group) {
    require_member_shape(c, group.n, group.spec);
    Membership result;
    const Matrix stacked = stack_columns(group.algebra_basis, {}, group.n, group.spec);
    auto coords = solve_any(stacked, vectorize(c));
    if (!coords) {
        result.reason = "not in span{I, B, ..., B^(n-1)}";
        return result;
    }
    // The powers are independent, so the coordinates are unique.
    result.coordinates = std::move(*coords);
    if (det(c).is_zero()) {
        result.reason = "not invertible";
        return result;
    }
    if (group.constraint == GroupConstraint::InvertibleAndFixesConstants &&
        !(c.column_vector(0) == group.fixed_vector)) {
        result.reason = "does not fix the constant solution";
        return result;
    }
    result.member = true;
    return result;
}

// ---- spectral route --------------------------------------------------------

HurwitzSeries shifted_exponential(const FieldElem& alpha, std::size_t j) {
    const FieldSpec spec = alpha.spec();
    return HurwitzSeries::from_rule(spec, [alpha, j, spec](std::size_t n, std::span<const FieldElem>) {
        if (n < j) return FieldElem::zero(spec);
        return FieldElem::from_integer(binomial(n, j), spec) * alpha.pow(n - j);
    });
}

SpectralData spectral_data(const LinearOperator& op, Precision verify) {
    const auto& a = op.constants();
    const FieldSpec spec = op.spec();
    const std::size_t n = op.order();
    std::vector<FieldElem> charpoly = a;
    charpoly.push_back(FieldElem::one(spec));
    const auto roots = split_roots(charpoly, spec);
    if (!roots) {
        throw Error(ErrorKind::NotSplitOverK, "characteristic polynomial does not split over " + spec.to_string());
    }

    SpectralData sd{spec, {}, {}, Matrix(n, n, spec), Matrix(n, n, spec), Matrix(n, n, spec), Matrix()};
    std::vector<HurwitzSeries> z;
    std::size_t col = 0;
    for (const auto& [alpha, mult] : *roots) {
        sd.roots.push_back(alpha);
        sd.multiplicities.push_back(mult);
        for (std::size_t j = 0; j < mult; ++j, ++col) {
            sd.s(col, col) = alpha;
            if (j > 0) sd.nilpotent(col - 1, col) = FieldElem::one(spec);
            z.push_back(shifted_exponential(alpha, j));
            for (std::size_t i = 0; i < n; ++i) sd.t(i, col) = z.back().coeff(i);
        }
    }
    sd.t_inverse = inverse(sd.t);

    const SolutionBasis basis = solution_basis(op);
    const auto yt = row_times_matrix(basis.basis, sd.t);
    for (std::size_t j = 0; j < n; ++j) {
        if (!eq_to_precision(yt[j], z[j], verify)) {
            throw Error(ErrorKind::InvalidArgument, "Y T differs from Z");
        }
    }
    const Matrix b = companion_matrix(op, verify);
    if (!(sd.t_inverse * b * sd.t == sd.s + sd.nilpotent)) {
        throw Error(ErrorKind::InvalidArgument, "T^-1 B T is not S + N");
    }
    return sd;
}

std::vector<BlockGroup> block_group_decomposition(const SpectralData& sd) {
    std::vector<BlockGroup> blocks;
    std::size_t offset = 0;
    for (std::size_t t = 0; t < sd.roots.size(); ++t) {
        BlockGroup block;
        block.root = sd.roots[t];
        block.offset = offset;
        block.size = sd.multiplicities[t];
        for (std::size_t k = 0; k < block.size; ++k) block.algebra_basis.push_back(shift_power(block.size, k, sd.spec));
        block.unipotent_required = block.root.is_zero();
        offset += block.size;
        blocks.push_back(std::move(block));
    }
    return blocks;
}

Matrix assemble_block_member(const SpectralData& sd, const std::vector<BlockGroup>& blocks,
                             const std::vector<std::vector<FieldElem>>& params) {
    if (params.size() != blocks.size()) throw Error(ErrorKind::ArityMismatch, "one parameter list per block");
    const std::size_t n = sd.t.rows();
    Matrix d(n, n, sd.spec);
    for (std::size_t t = 0; t < blocks.size(); ++t) {
        const auto& block = blocks[t];
        if (params[t].size() != block.size) throw Error(ErrorKind::ArityMismatch, "block parameter count");
        const Matrix local = matrix_poly_eval(params[t], shift_power(block.size, 1, sd.spec));
        for (std::size_t i = 0; i < block.size; ++i)
            for (std::size_t j = 0; j < block.size; ++j) d(block.offset + i, block.offset + j) = local(i, j);
    }
    return sd.t * d * sd.t_inverse;
}

bool block_membership(const Matrix& c, const SpectralData& sd, const std::vector<BlockGroup>& blocks) {
    const std::size_t n = sd.t.rows();
    require_member_shape(c, n, sd.spec);
    const Matrix m = sd.t_inverse * c * sd.t;
    std::vector<std::size_t> block_of(n);
    for (std::size_t t = 0; t < blocks.size(); ++t)
        for (std::size_t i = 0; i < blocks[t].size; ++i) block_of[blocks[t].offset + i] = t;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (block_of[i] != block_of[j]) {
                if (!m(i, j).is_zero()) return false;
                continue;
            }
            const std::size_t o = blocks[block_of[i]].offset;
            if (j < i) {
                if (!m(i, j).is_zero()) return false;
            } else if (!(m(i, j) == m(o, o + (j - i)))) {
                return false;
            }
        }
    }
    for (const auto& block : blocks) {
        const FieldElem& diagonal = m(block.offset, block.offset);
        if (diagonal.is_zero()) return false;
        if (block.unipotent_required && !diagonal.is_one()) return false;
    }
    return true;
}

// ---- parametric presentations ----------------------------------------------

std::string ParametricFamily::entry(std::size_t i, std::size_t j) const {
    std::string out;
    for (std::size_t k = 0; k < params.size(); ++k) {
        const FieldElem& c = generators[k](i, j);
        if (c.is_zero()) continue;
        std::string term;
        if (c.is_one()) {
            term = params[k];
        } else if ((-c).is_one() && c.spec().is_rationals()) {
            term = "-" + params[k];
        } else {
            term = c.to_string() + "*" + params[k];
        }
        if (!out.empty() && term.front() != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

ParametricFamily descriptor_family(const GroupDescriptor& group) {
    ParametricFamily f;
    for (std::size_t i = 0; i < group.n; ++i) f.params.push_back("c" + std::to_string(i));
    f.generators = group.algebra_basis;
    f.conditions.push_back("det != 0");
    if (group.constraint == GroupConstraint::InvertibleAndFixesConstants) f.conditions.push_back("c0 = 1");
    return f;
}

ParametricFamily block_family(const SpectralData& sd, const std::vector<BlockGroup>& blocks) {
    ParametricFamily f;
    const std::size_t n = sd.t.rows();
    for (std::size_t t = 0; t < blocks.size(); ++t) {
        const auto& block = blocks[t];
        for (std::size_t k = 0; k < block.size; ++k) {
            f.params.push_back(param_name(k, t, blocks.size()));
            Matrix d(n, n, sd.spec);
            const Matrix& local = block.algebra_basis[k];
            for (std::size_t i = 0; i < block.size; ++i)
                for (std::size_t j = 0; j < block.size; ++j) d(block.offset + i, block.offset + j) = local(i, j);
            f.generators.push_back(sd.t * d * sd.t_inverse);
        }
        const std::string lead = param_name(0, t, blocks.size());
        f.conditions.push_back(block.unipotent_required ? lead + " = 1" : lead + " != 0");
    }
    return f;
}

// ---- action on solutions ---------------------------------------------------

std::vector<HurwitzSeries> act(const Matrix& c, const SolutionBasis& basis, const GroupDescriptor& group) {
    const Membership m = membership(c, group);
    if (!m) throw Error(ErrorKind::NotAMember, m.reason);
    return row_times_matrix(basis.basis, c);
}

std::vector<HurwitzSeries> act(const Matrix& c, const SolutionBasis& basis) {
    return act(c, basis, group_descriptor(basis.op));
}

bool verify_automorphism(const Matrix& c, const SolutionBasis& basis, Precision p) {
    const auto& a = basis.op.constants();
    const std::size_t n = basis.op.order();
    require_member_shape(c, n, basis.op.spec());
    if (det(c).is_zero()) return false;

    const FieldSpec spec = basis.op.spec();
    // d on V in the basis Y: d y_j = sum_i pi_{i+1}(y_j) y_i.
    Matrix b(n, n, spec);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = basis.basis[j].coeff(i + 1);

    const auto sigma = row_times_matrix(basis.basis, c);
    const auto sigma_of_derivative = row_times_matrix(sigma, b);
    for (std::size_t j = 0; j < n; ++j) {
        if (!eq_to_precision(sigma[j].derive(), sigma_of_derivative[j], p)) return false;
    }
    if (a[0].is_zero() && !eq_to_precision(sigma[0], basis.basis[0], p)) return false;
    return true;
}

}  // namespace hurwitz
