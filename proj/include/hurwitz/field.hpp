#pragma once

// Exact scalar fields: the rationals and prime fields GF(p), p < 2^31.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace hurwitz {

class FieldSpec {
public:
    enum class Kind { Rationals, PrimeField };

    /// Defaults to the rationals.
    FieldSpec() = default;

    static FieldSpec rationals() { return {}; }
    /// Throws InvalidArgument unless 2 <= p < 2^31 and p is prime.
    static FieldSpec prime_field(std::uint64_t p);
    /// Grammar: "Q" | "gf:<p>".
    static FieldSpec parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const noexcept { return p_; }

    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;

private:
    FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_ = Kind::Rationals;
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

class FieldElem {
public:
    /// Zero of the rationals; exists so containers can be sized.
    FieldElem() = default;

    static FieldElem zero(const FieldSpec& spec);
    static FieldElem one(const FieldSpec& spec);
    /// Image of n under the ring map Z -> k.
    static FieldElem from_integer(const mpz_class& n, const FieldSpec& spec);
    static FieldElem from_integer(long n, const FieldSpec& spec);
    /// num/den mapped into k; DivisionByZero if den is zero in k.
    static FieldElem from_rational(const mpq_class& q, const FieldSpec& spec);

    const FieldSpec& spec() const noexcept { return spec_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& rhs);
    FieldElem& operator-=(const FieldElem& rhs);
    FieldElem& operator*=(const FieldElem& rhs);
    FieldElem& operator/=(const FieldElem& rhs);

    friend FieldElem operator+(FieldElem lhs, const FieldElem& rhs) { return lhs += rhs; }
    friend FieldElem operator-(FieldElem lhs, const FieldElem& rhs) { return lhs -= rhs; }
    friend FieldElem operator*(FieldElem lhs, const FieldElem& rhs) { return lhs *= rhs; }
    friend FieldElem operator/(FieldElem lhs, const FieldElem& rhs) { return lhs /= rhs; }

    /// Throws MixedFields when the specs differ.
    friend bool operator==(const FieldElem& a, const FieldElem& b);

    FieldElem inv() const;
    FieldElem pow(std::uint64_t e) const;

    /// Canonical order used for root sorting: ascending value in Q,
    /// ascending least residue in GF(p).
    std::strong_ordering canonical_compare(const FieldElem& other) const;

    /// Rational value; only meaningful over Q.
    const mpq_class& rational() const;
    /// Least nonnegative residue; only meaningful over GF(p).
    std::uint64_t residue() const;

    /// "a/b" in lowest terms ("/1" omitted) or the least residue.
    std::string to_string() const;

private:
    FieldElem(const FieldSpec& spec, std::uint64_t r) : spec_(spec), value_(r) {}
    FieldElem(const FieldSpec& spec, mpq_class q) : spec_(spec), value_(std::move(q)) {}

    void require_same(const FieldElem& rhs) const;
    std::uint64_t modulus() const noexcept { return spec_.characteristic(); }

    FieldSpec spec_;
    std::variant<mpq_class, std::uint64_t> value_;
};

/// Grammar: optional sign, decimal integer, optional "/" decimal integer.
/// Over GF(p) a fraction denotes division in GF(p).
FieldElem parse_elem(std::string_view text, const FieldSpec& spec);

/// Parses a comma/whitespace separated list of elements.
std::vector<FieldElem> parse_elem_list(std::string_view text, const FieldSpec& spec);

/// Exact C(n, j) over Z; zero when j > n.
mpz_class binomial(std::uint64_t n, std::uint64_t j);

/// C(n, 0), ..., C(n, n) over Z.
std::vector<mpz_class> binomial_row(std::uint64_t n);

/// C(n, 0), ..., C(n, n) computed over Z and mapped into k.
std::vector<FieldElem> binomial_row(std::uint64_t n, const FieldSpec& spec);

}  // namespace hurwitz
