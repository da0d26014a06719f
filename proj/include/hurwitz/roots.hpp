#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hurwitz/field.hpp"

namespace hurwitz {

struct RootMultiplicity {
    FieldElem root;
    std::size_t multiplicity;
};

/// Roots in k of the polynomial sum coeffs[i] X^i (leading coefficient
/// nonzero), with multiplicity, in canonical order. Returns nullopt when the
/// polynomial does not split into linear factors over k.
///
/// Q: rational-root theorem on the integer-scaled polynomial.
/// GF(p): residue scan for small p, otherwise distinct roots are split out
/// of gcd(f, X^p - X) by equal-degree factorization.
std::optional<std::vector<RootMultiplicity>> split_roots(const std::vector<FieldElem>& coeffs, const FieldSpec& spec);

/// Horner evaluation.
FieldElem evaluate_polynomial(const std::vector<FieldElem>& coeffs, const FieldElem& x);

/// Prime factorization of |n| > 0 as (prime, exponent) pairs, ascending.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n);

}  // namespace hurwitz
