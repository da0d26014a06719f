#include "hurwitz/field.hpp"

#include <cctype>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

std::uint64_t reduce_mpz(const mpz_class& n, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (e > 0) {
        if (e & 1U) result = result * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return result;
}

}  // namespace

// ---- FieldSpec -------------------------------------------------------------

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p < 2 || p >= kMaxPrime) {
        throw Error(ErrorKind::InvalidArgument, "prime field modulus must satisfy 2 <= p < 2^31");
    }
    if (!is_prime(p)) {
        throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    }
    return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q") return rationals();
    constexpr std::string_view prefix = "gf:";
    if (text.substr(0, prefix.size()) != prefix) {
        throw ParseError(0, "field must be \"Q\" or \"gf:<p>\", got \"" + std::string(text) + "\"");
    }
    std::string_view digits = text.substr(prefix.size());
    if (digits.empty() || digits.size() > 10) {
        throw ParseError(prefix.size(), "bad prime in field spec \"" + std::string(text) + "\"");
    }
    std::uint64_t p = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
            throw ParseError(prefix.size() + i, "bad prime in field spec \"" + std::string(text) + "\"");
        }
        p = p * 10 + static_cast<std::uint64_t>(digits[i] - '0');
    }
    return prime_field(p);
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? std::string("Q") : "gf:" + std::to_string(p_);
}

// ---- FieldElem -------------------------------------------------------------

FieldElem FieldElem::zero(const FieldSpec& spec) {
    if (spec.is_rationals()) return FieldElem(spec, mpq_class(0));
    return FieldElem(spec, std::uint64_t{0});
}

FieldElem FieldElem::one(const FieldSpec& spec) {
    if (spec.is_rationals()) return FieldElem(spec, mpq_class(1));
    return FieldElem(spec, std::uint64_t{1});
}

FieldElem FieldElem::from_integer(const mpz_class& n, const FieldSpec& spec) {
    if (spec.is_rationals()) return FieldElem(spec, mpq_class(n));
    return FieldElem(spec, reduce_mpz(n, spec.characteristic()));
}

FieldElem FieldElem::from_integer(long n, const FieldSpec& spec) {
    return from_integer(mpz_class(n), spec);
}

FieldElem FieldElem::from_rational(const mpq_class& q, const FieldSpec& spec) {
    if (spec.is_rationals()) {
        mpq_class c = q;
        c.canonicalize();
        return FieldElem(spec, std::move(c));
    }
    FieldElem num = from_integer(q.get_num(), spec);
    FieldElem den = from_integer(q.get_den(), spec);
    return num / den;
}

bool FieldElem::is_zero() const noexcept {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElem::is_one() const noexcept {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

void FieldElem::require_same(const FieldElem& rhs) const {
    if (!(spec_ == rhs.spec_)) {
        throw Error(ErrorKind::MixedFields,
                    "operands live in " + spec_.to_string() + " and " + rhs.spec_.to_string());
    }
}

FieldElem FieldElem::operator-() const {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) {
        return FieldElem(spec_, *r == 0 ? 0 : modulus() - *r);
    }
    return FieldElem(spec_, mpq_class(-std::get<mpq_class>(value_)));
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
    require_same(rhs);
    if (auto* r = std::get_if<std::uint64_t>(&value_)) {
        *r = (*r + std::get<std::uint64_t>(rhs.value_)) % modulus();
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
    require_same(rhs);
    if (auto* r = std::get_if<std::uint64_t>(&value_)) {
        *r = (*r + modulus() - std::get<std::uint64_t>(rhs.value_)) % modulus();
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
    require_same(rhs);
    if (auto* r = std::get_if<std::uint64_t>(&value_)) {
        // p < 2^31 so the product fits in 62 bits.
        *r = *r * std::get<std::uint64_t>(rhs.value_) % modulus();
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& rhs) {
    require_same(rhs);
    return *this *= rhs.inv();
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + spec_.to_string());
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) {
        return FieldElem(spec_, pow_mod(*r, modulus() - 2, modulus()));
    }
    mpq_class q = 1 / std::get<mpq_class>(value_);
    q.canonicalize();
    return FieldElem(spec_, std::move(q));
}

FieldElem FieldElem::pow(std::uint64_t e) const {
    FieldElem result = one(spec_);
    FieldElem base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    a.require_same(b);
    return a.value_ == b.value_;
}

std::strong_ordering FieldElem::canonical_compare(const FieldElem& other) const {
    require_same(other);
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) {
        return *r <=> std::get<std::uint64_t>(other.value_);
    }
    int c = cmp(std::get<mpq_class>(value_), std::get<mpq_class>(other.value_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

const mpq_class& FieldElem::rational() const {
    if (!spec_.is_rationals()) throw Error(ErrorKind::InvalidArgument, "not a rational element");
    return std::get<mpq_class>(value_);
}

std::uint64_t FieldElem::residue() const {
    if (spec_.is_rationals()) throw Error(ErrorKind::InvalidArgument, "not a prime field element");
    return std::get<std::uint64_t>(value_);
}

std::string FieldElem::to_string() const {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
    const mpq_class& q = std::get<mpq_class>(value_);
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---- parsing ---------------------------------------------------------------

FieldElem parse_elem(std::string_view text, const FieldSpec& spec) {
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_digits = [&]() -> mpz_class {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError(pos, "expected digits in \"" + std::string(text) + "\"");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    };

    skip_space();
    bool negative = false;
    constexpr std::string_view unicode_minus = "\xE2\x88\x92";
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    } else if (text.substr(pos, unicode_minus.size()) == unicode_minus) {
        negative = true;
        pos += unicode_minus.size();
    }
    mpz_class num = read_digits();
    mpz_class den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_digits();
    }
    skip_space();
    if (pos != text.size()) {
        throw ParseError(pos, "trailing characters in \"" + std::string(text) + "\"");
    }
    if (negative) num = -num;
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in \"" + std::string(text) + "\"");
    if (spec.is_rationals()) return FieldElem::from_rational(mpq_class(num, den), spec);
    return FieldElem::from_integer(num, spec) / FieldElem::from_integer(den, spec);
}

std::vector<FieldElem> parse_elem_list(std::string_view text, const FieldSpec& spec) {
    std::vector<FieldElem> out;
    std::size_t pos = 0;
    auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    while (pos < text.size()) {
        while (pos < text.size() && is_sep(text[pos])) ++pos;
        if (pos == text.size()) break;
        std::size_t start = pos;
        while (pos < text.size() && !is_sep(text[pos])) ++pos;
        try {
            out.push_back(parse_elem(text.substr(start, pos - start), spec));
        } catch (const ParseError& e) {
            throw ParseError(start + e.position(), "bad element in list \"" + std::string(text) + "\"");
        }
    }
    return out;
}

// ---- binomials -------------------------------------------------------------

mpz_class binomial(std::uint64_t n, std::uint64_t j) {
    if (j > n) return 0;
    if (j > n - j) j = n - j;
    mpz_class c = 1;
    // After step i, c = C(n, i + 1); each division is exact.
    for (std::uint64_t i = 0; i < j; ++i) {
        c *= static_cast<unsigned long>(n - i);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i + 1));
    }
    return c;
}

std::vector<mpz_class> binomial_row(std::uint64_t n) {
    std::vector<mpz_class> row;
    row.reserve(n + 1);
    mpz_class c = 1;
    for (std::uint64_t j = 0; j <= n; ++j) {
        row.push_back(c);
        c *= static_cast<unsigned long>(n - j);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j + 1));
    }
    return row;
}

std::vector<FieldElem> binomial_row(std::uint64_t n, const FieldSpec& spec) {
    std::vector<FieldElem> row;
    row.reserve(n + 1);
    for (const mpz_class& c : binomial_row(n)) row.push_back(FieldElem::from_integer(c, spec));
    return row;
}

}  // namespace hurwitz
