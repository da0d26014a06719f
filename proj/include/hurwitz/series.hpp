#pragma once

// The differential ring Hk of Hurwitz series over a field k.
//
// A series is a handle to a shared, memoizing coefficient stream. Each stream
// owns a rule that produces pi_n from its own already-computed prefix and from
// coefficients of other (older) streams, so the dependency graph is acyclic
// and coefficients are computed at most once per stream.

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "hurwitz/field.hpp"

namespace hurwitz {

/// Number of leading coefficients (indices 0..N-1) taken into account.
class Precision {
public:
    explicit Precision(std::size_t n);
    std::size_t n() const noexcept { return n_; }

private:
    std::size_t n_;
};

/// Produces pi_n given pi_0..pi_{n-1} of the same stream.
using CoefficientRule = std::function<FieldElem(std::size_t n, std::span<const FieldElem> prefix)>;

class HurwitzSeries {
public:
    /// The zero series over Q.
    HurwitzSeries();

    static HurwitzSeries zero(const FieldSpec& spec);
    static HurwitzSeries one(const FieldSpec& spec);
    static HurwitzSeries constant(const FieldElem& c);
    /// Finite support; coefficients past the end are zero.
    static HurwitzSeries finite(const FieldSpec& spec, std::vector<FieldElem> coeffs);
    /// General stream. The rule must be deterministic and must only read
    /// the supplied prefix and other, previously constructed series.
    static HurwitzSeries from_rule(const FieldSpec& spec, CoefficientRule rule);

    /// x^[i] = (delta_n^i).
    static HurwitzSeries divided_power(std::size_t i, const FieldSpec& spec);
    /// exp(beta) = (1, beta, beta^2, ...).
    static HurwitzSeries exponential(const FieldElem& beta);
    /// (p(0), p'(0), p''(0), ...) for p = sum coeffs[i] X^i.
    static HurwitzSeries from_polynomial(const std::vector<FieldElem>& coeffs, const FieldSpec& spec);

    const FieldSpec& spec() const noexcept;

    /// pi_n; memoizes every coefficient up to n. Safe to call concurrently.
    FieldElem coeff(std::size_t n) const;
    /// pi_0..pi_{N-1}.
    std::vector<FieldElem> truncate(Precision p) const;

    HurwitzSeries derive() const;
    /// Throws NotAUnit if pi_0 is zero.
    HurwitzSeries invert() const;
    HurwitzSeries scale(const FieldElem& c) const;

    /// Same rule, independent copy of the memoized prefix.
    HurwitzSeries clone() const;

    /// Number of memoized coefficients.
    std::size_t cached() const;

    friend HurwitzSeries operator+(const HurwitzSeries& f, const HurwitzSeries& g);
    friend HurwitzSeries operator-(const HurwitzSeries& f, const HurwitzSeries& g);
    friend HurwitzSeries operator*(const HurwitzSeries& f, const HurwitzSeries& g);
    friend HurwitzSeries operator*(const FieldElem& c, const HurwitzSeries& f) { return f.scale(c); }
    HurwitzSeries operator-() const;

private:
    struct Node;
    explicit HurwitzSeries(std::shared_ptr<Node> node) : node_(std::move(node)) {}

    std::shared_ptr<Node> node_;
};

/// n-th derivative.
HurwitzSeries derive(const HurwitzSeries& f, std::size_t times = 1);

/// True iff pi_n(f) = pi_n(g) for all n < N. Throws MixedFields.
bool eq_to_precision(const HurwitzSeries& f, const HurwitzSeries& g, Precision p);

/// Hurwitz power f^e (e >= 0).
HurwitzSeries power(const HurwitzSeries& f, std::size_t e);

}  // namespace hurwitz
