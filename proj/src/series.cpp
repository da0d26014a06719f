#include "hurwitz/series.hpp"

#include <mutex>

#include "hurwitz/error.hpp"

namespace hurwitz {

Precision::Precision(std::size_t n) : n_(n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "precision must be at least 1");
}

struct HurwitzSeries::Node {
    Node(FieldSpec s, CoefficientRule r) : spec(s), rule(std::move(r)) {}

    FieldSpec spec;
    CoefficientRule rule;
    std::mutex mutex;
    std::vector<FieldElem> cache;
};

namespace {

void require_same(const FieldSpec& a, const FieldSpec& b) {
    if (!(a == b)) {
        throw Error(ErrorKind::MixedFields, "series live in " + a.to_string() + " and " + b.to_string());
    }
}

}  // namespace

HurwitzSeries::HurwitzSeries() : HurwitzSeries(zero(FieldSpec::rationals())) {}

HurwitzSeries HurwitzSeries::from_rule(const FieldSpec& spec, CoefficientRule rule) {
    return HurwitzSeries(std::make_shared<Node>(spec, std::move(rule)));
}

HurwitzSeries HurwitzSeries::zero(const FieldSpec& spec) {
    return from_rule(spec, [z = FieldElem::zero(spec)](std::size_t, std::span<const FieldElem>) { return z; });
}

HurwitzSeries HurwitzSeries::one(const FieldSpec& spec) { return constant(FieldElem::one(spec)); }

HurwitzSeries HurwitzSeries::constant(const FieldElem& c) {
    return finite(c.spec(), {c});
}

HurwitzSeries HurwitzSeries::finite(const FieldSpec& spec, std::vector<FieldElem> coeffs) {
    for (const auto& c : coeffs) require_same(spec, c.spec());
    return from_rule(spec, [spec, coeffs = std::move(coeffs)](std::size_t n, std::span<const FieldElem>) {
        return n < coeffs.size() ? coeffs[n] : FieldElem::zero(spec);
    });
}

HurwitzSeries HurwitzSeries::divided_power(std::size_t i, const FieldSpec& spec) {
    std::vector<FieldElem> coeffs(i + 1, FieldElem::zero(spec));
    coeffs[i] = FieldElem::one(spec);
    return finite(spec, std::move(coeffs));
}

HurwitzSeries HurwitzSeries::exponential(const FieldElem& beta) {
    return from_rule(beta.spec(), [beta](std::size_t n, std::span<const FieldElem> prefix) {
        return n == 0 ? FieldElem::one(beta.spec()) : prefix[n - 1] * beta;
    });
}

HurwitzSeries HurwitzSeries::from_polynomial(const std::vector<FieldElem>& coeffs, const FieldSpec& spec) {
    // The n-th formal derivative at 0 is n! * coeffs[n].
    std::vector<FieldElem> values;
    values.reserve(coeffs.size());
    mpz_class factorial = 1;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        require_same(spec, coeffs[n].spec());
        if (n > 0) factorial *= static_cast<unsigned long>(n);
        values.push_back(FieldElem::from_integer(factorial, spec) * coeffs[n]);
    }
    return finite(spec, std::move(values));
}

const FieldSpec& HurwitzSeries::spec() const noexcept { return node_->spec; }

FieldElem HurwitzSeries::coeff(std::size_t n) const {
    std::lock_guard lock(node_->mutex);
    auto& cache = node_->cache;
    if (cache.size() <= n) cache.reserve(n + 1);
    while (cache.size() <= n) {
        FieldElem next = node_->rule(cache.size(), std::span<const FieldElem>(cache));
        cache.push_back(std::move(next));
    }
    return cache[n];
}

std::vector<FieldElem> HurwitzSeries::truncate(Precision p) const {
    coeff(p.n() - 1);
    std::lock_guard lock(node_->mutex);
    return {node_->cache.begin(), node_->cache.begin() + static_cast<std::ptrdiff_t>(p.n())};
}

std::size_t HurwitzSeries::cached() const {
    std::lock_guard lock(node_->mutex);
    return node_->cache.size();
}

HurwitzSeries HurwitzSeries::clone() const {
    auto node = std::make_shared<Node>(node_->spec, node_->rule);
    std::lock_guard lock(node_->mutex);
    node->cache = node_->cache;
    return HurwitzSeries(std::move(node));
}

HurwitzSeries HurwitzSeries::derive() const {
    return from_rule(spec(), [f = *this](std::size_t n, std::span<const FieldElem>) { return f.coeff(n + 1); });
}

HurwitzSeries HurwitzSeries::scale(const FieldElem& c) const {
    require_same(spec(), c.spec());
    return from_rule(spec(), [f = *this, c](std::size_t n, std::span<const FieldElem>) { return c * f.coeff(n); });
}

HurwitzSeries HurwitzSeries::invert() const {
    FieldElem a0 = coeff(0);
    if (a0.is_zero()) throw Error(ErrorKind::NotAUnit, "series with zero constant term is not invertible");
    FieldElem a0_inv = a0.inv();
    // b_n = -a_0^{-1} sum_{j=1}^{n} C(n,j) a_j b_{n-j}
    return from_rule(spec(), [f = *this, a0_inv](std::size_t n, std::span<const FieldElem> b) {
        if (n == 0) return a0_inv;
        const auto binom = binomial_row(n, f.spec());
        FieldElem sum = FieldElem::zero(f.spec());
        for (std::size_t j = 1; j <= n; ++j) {
            FieldElem aj = f.coeff(j);
            if (aj.is_zero()) continue;
            sum += binom[j] * aj * b[n - j];
        }
        return -(a0_inv * sum);
    });
}

HurwitzSeries HurwitzSeries::operator-() const {
    return from_rule(spec(), [f = *this](std::size_t n, std::span<const FieldElem>) { return -f.coeff(n); });
}

HurwitzSeries operator+(const HurwitzSeries& f, const HurwitzSeries& g) {
    require_same(f.spec(), g.spec());
    return HurwitzSeries::from_rule(f.spec(), [f, g](std::size_t n, std::span<const FieldElem>) {
        return f.coeff(n) + g.coeff(n);
    });
}

HurwitzSeries operator-(const HurwitzSeries& f, const HurwitzSeries& g) {
    require_same(f.spec(), g.spec());
    return HurwitzSeries::from_rule(f.spec(), [f, g](std::size_t n, std::span<const FieldElem>) {
        return f.coeff(n) - g.coeff(n);
    });
}

HurwitzSeries operator*(const HurwitzSeries& f, const HurwitzSeries& g) {
    require_same(f.spec(), g.spec());
    // c_n = sum_{j=0}^{n} C(n,j) a_j b_{n-j}
    return HurwitzSeries::from_rule(f.spec(), [f, g](std::size_t n, std::span<const FieldElem>) {
        const auto binom = binomial_row(n, f.spec());
        FieldElem sum = FieldElem::zero(f.spec());
        for (std::size_t j = 0; j <= n; ++j) {
            FieldElem aj = f.coeff(j);
            if (aj.is_zero() || binom[j].is_zero()) continue;
            sum += binom[j] * aj * g.coeff(n - j);
        }
        return sum;
    });
}

HurwitzSeries derive(const HurwitzSeries& f, std::size_t times) {
    if (times == 0) return f;
    return HurwitzSeries::from_rule(f.spec(), [f, times](std::size_t n, std::span<const FieldElem>) {
        return f.coeff(n + times);
    });
}

bool eq_to_precision(const HurwitzSeries& f, const HurwitzSeries& g, Precision p) {
    require_same(f.spec(), g.spec());
    for (std::size_t n = 0; n < p.n(); ++n) {
        if (!(f.coeff(n) == g.coeff(n))) return false;
    }
    return true;
}

HurwitzSeries power(const HurwitzSeries& f, std::size_t e) {
    HurwitzSeries result = HurwitzSeries::one(f.spec());
    for (std::size_t i = 0; i < e; ++i) result = result * f;
    return result;
}

}  // namespace hurwitz
