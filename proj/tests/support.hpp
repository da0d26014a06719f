#pragma once

// Random generators and independent oracles shared by the test binaries.
// Nothing here calls into the code path it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hurwitz/field.hpp"
#include "hurwitz/matrix.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz::testing {

inline FieldSpec Q() { return FieldSpec::rationals(); }
inline FieldSpec GF(std::uint64_t p) { return FieldSpec::prime_field(p); }

inline FieldElem num(long n, const FieldSpec& spec) { return FieldElem::from_integer(n, spec); }
inline FieldElem frac(long n, long d, const FieldSpec& spec) {
    return FieldElem::from_rational(mpq_class(n, d), spec);
}

inline std::vector<FieldElem> nums(std::initializer_list<long> values, const FieldSpec& spec) {
    std::vector<FieldElem> out;
    for (long v : values) out.push_back(num(v, spec));
    return out;
}

class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

    /// Small rationals over Q, uniform residues over GF(p).
    FieldElem elem(const FieldSpec& spec) {
        if (spec.is_rationals()) return frac(integer(-9, 9), integer(1, 5), spec);
        return num(integer(0, static_cast<long>(spec.characteristic()) - 1), spec);
    }

    FieldElem nonzero(const FieldSpec& spec) {
        for (;;) {
            FieldElem e = elem(spec);
            if (!e.is_zero()) return e;
        }
    }

    std::vector<FieldElem> elems(std::size_t n, const FieldSpec& spec) {
        std::vector<FieldElem> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(elem(spec));
        return out;
    }

    HurwitzSeries series(std::size_t len, const FieldSpec& spec) { return HurwitzSeries::finite(spec, elems(len, spec)); }

    Matrix matrix(std::size_t rows, std::size_t cols, const FieldSpec& spec) {
        Matrix m(rows, cols, spec);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = elem(spec);
        return m;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// Pascal's triangle rows 0..n over Z.
inline std::vector<std::vector<mpz_class>> pascal(std::size_t n) {
    std::vector<std::vector<mpz_class>> t(n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
        t[r].assign(r + 1, 1);
        for (std::size_t j = 1; j < r; ++j) t[r][j] = t[r - 1][j - 1] + t[r - 1][j];
    }
    return t;
}

/// c_n = sum_j C(n,j) a_j b_{n-j} on vectors, binomials from Pascal's triangle.
inline std::vector<FieldElem> hurwitz_product_oracle(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b,
                                                     std::size_t len, const FieldSpec& spec) {
    const auto tri = pascal(len);
    auto at = [&](const std::vector<FieldElem>& v, std::size_t i) { return i < v.size() ? v[i] : FieldElem::zero(spec); };
    std::vector<FieldElem> c;
    for (std::size_t n = 0; n < len; ++n) {
        FieldElem sum = FieldElem::zero(spec);
        for (std::size_t j = 0; j <= n; ++j) sum += FieldElem::from_integer(tri[n][j], spec) * at(a, j) * at(b, n - j);
        c.push_back(sum);
    }
    return c;
}

/// Over Q: n! * (Cauchy product of a_n/n! and b_n/n!).
inline std::vector<mpq_class> egf_product_oracle(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    const std::size_t len = a.size();
    std::vector<mpq_class> fact(len, 1);
    for (std::size_t i = 1; i < len; ++i) fact[i] = fact[i - 1] * static_cast<unsigned long>(i);
    std::vector<mpq_class> out(len);
    for (std::size_t n = 0; n < len; ++n) {
        mpq_class sum = 0;
        for (std::size_t j = 0; j <= n; ++j) sum += (a[j] / fact[j]) * (b[n - j] / fact[n - j]);
        out[n] = sum * fact[n];
        out[n].canonicalize();
    }
    return out;
}

/// Leibniz formula over all permutations.
inline FieldElem det_oracle(const Matrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    FieldElem total = FieldElem::zero(a.spec());
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        FieldElem term = FieldElem::one(a.spec());
        for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
        total += inversions % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline std::vector<FieldElem> coeffs(const HurwitzSeries& s, std::size_t n) { return s.truncate(Precision(n)); }

inline std::vector<FieldElem> zeros(std::size_t n, const FieldSpec& spec) {
    return std::vector<FieldElem>(n, FieldElem::zero(spec));
}

}  // namespace hurwitz::testing
