#pragma once

// The group G(V|k) of differential automorphisms of the solution space of a
// constant-coefficient operator, presented as matrices C acting on the
// standard solution basis by Y -> Y C.
//
// General route (any field): G(V|k) is the invertible part of the algebra
// span{I, B, ..., B^{n-1}} spanned by powers of the companion matrix B; when
// a_0 = 0 members must also fix the constant solution.
//
// Spectral route (only when the characteristic polynomial splits over k):
// T^{-1} B T = S + N is in Jordan form with T_{ij} = pi_i(z_j), and the group
// is T (block upper-triangular Toeplitz) T^{-1}.

#include <cstddef>
#include <string>
#include <vector>

#include "hurwitz/field.hpp"
#include "hurwitz/linode.hpp"
#include "hurwitz/matrix.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

enum class GroupConstraint {
    InvertibleOnly,
    InvertibleAndFixesConstants,
};

struct GroupDescriptor {
    std::size_t n = 0;
    FieldSpec spec;
    Matrix b;
    /// I, B, ..., B^{n-1}.
    std::vector<Matrix> algebra_basis;
    GroupConstraint constraint = GroupConstraint::InvertibleOnly;
    /// Coordinates of the constant solution (e_1); meaningful only under
    /// InvertibleAndFixesConstants.
    std::vector<FieldElem> fixed_vector;
};

/// [I, B, ..., B^{n-1}], checked to be independent and to span the whole
/// kernel of X -> BX - XB. Throws CentralizerMismatch for derogatory B.
std::vector<Matrix> centralizer_basis(const Matrix& b);

/// Throws NotConstantCoefficient.
GroupDescriptor group_descriptor(const LinearOperator& op);

struct Membership {
    bool member = false;
    /// c_0..c_{n-1} with C = sum c_i B^i, when C lies in the algebra.
    std::vector<FieldElem> coordinates;
    std::string reason;

    explicit operator bool() const noexcept { return member; }
};

/// Throws ShapeMismatch / MixedFields on malformed input.
Membership membership(const Matrix& c, const GroupDescriptor& group);

struct SpectralData {
    FieldSpec spec;
    /// Distinct roots, canonical order.
    std::vector<FieldElem> roots;
    /// Block sizes m_t + 1.
    std::vector<std::size_t> multiplicities;
    Matrix s;
    Matrix nilpotent;
    Matrix t;
    Matrix t_inverse;
};

/// Throws NotSplitOverK when the characteristic polynomial has an
/// irreducible factor of degree > 1; NotConstantCoefficient.
SpectralData spectral_data(const LinearOperator& op, Precision verify = Precision(kDefaultVerifyPrecision));

/// z = x^[j] exp(alpha), via pi_n(z) = C(n,j) alpha^{n-j}.
HurwitzSeries shifted_exponential(const FieldElem& alpha, std::size_t j);

struct BlockGroup {
    FieldElem root;
    std::size_t offset = 0;
    std::size_t size = 0;
    /// N_t^0, ..., N_t^{size-1} (size x size shift powers).
    std::vector<Matrix> algebra_basis;
    /// Root 0: the block must be unipotent.
    bool unipotent_required = false;
};

std::vector<BlockGroup> block_group_decomposition(const SpectralData& sd);

/// T diag(sum_k params[t][k] N_t^k) T^{-1}.
Matrix assemble_block_member(const SpectralData& sd, const std::vector<BlockGroup>& blocks,
                             const std::vector<std::vector<FieldElem>>& params);

/// True iff T^{-1} C T is block diagonal with each block upper-triangular
/// Toeplitz, invertible, and unipotent where required.
bool block_membership(const Matrix& c, const SpectralData& sd, const std::vector<BlockGroup>& blocks);

/// A linear family sum_k param_k generators[k] with side conditions.
struct ParametricFamily {
    std::vector<std::string> params;
    std::vector<Matrix> generators;
    std::vector<std::string> conditions;

    /// Entry (i, j) as a linear form such as "a-b+2*c".
    std::string entry(std::size_t i, std::size_t j) const;
};

/// Parameters c0..c_{n-1} over the algebra basis.
ParametricFamily descriptor_family(const GroupDescriptor& group);
/// Per-block parameters a, b, c, ... (suffixed by block index when there is
/// more than one block).
ParametricFamily block_family(const SpectralData& sd, const std::vector<BlockGroup>& blocks);

/// Y C as series. Throws NotAMember.
std::vector<HurwitzSeries> act(const Matrix& c, const SolutionBasis& basis);
std::vector<HurwitzSeries> act(const Matrix& c, const SolutionBasis& basis, const GroupDescriptor& group);

/// Checks directly on series that Y -> Y C is an invertible map of V
/// commuting with d below the precision, and that it fixes the constant
/// solution when one exists. Never throws for non-members.
bool verify_automorphism(const Matrix& c, const SolutionBasis& basis, Precision p);

}  // namespace hurwitz
