#include "hurwitz/roots.hpp"

#include <algorithm>
#include <map>

#include "hurwitz/error.hpp"

namespace hurwitz {

FieldElem evaluate_polynomial(const std::vector<FieldElem>& coeffs, const FieldElem& x) {
    FieldElem acc = FieldElem::zero(x.spec());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

// Synthetic division by (X - r); remainder is assumed zero.
std::vector<FieldElem> deflate(const std::vector<FieldElem>& coeffs, const FieldElem& r) {
    const std::size_t deg = coeffs.size() - 1;
    std::vector<FieldElem> q(deg, FieldElem::zero(r.spec()));
    FieldElem carry = FieldElem::zero(r.spec());
    for (std::size_t i = deg; i >= 1; --i) {
        carry = carry * r + coeffs[i];
        q[i - 1] = carry;
    }
    return q;
}

// Divides out every occurrence of the roots in `candidates` (ascending), in
// order, and reports what was found.
std::vector<RootMultiplicity> strip_roots(std::vector<FieldElem>& poly, const std::vector<FieldElem>& candidates) {
    std::vector<RootMultiplicity> found;
    for (const auto& r : candidates) {
        std::size_t mult = 0;
        while (poly.size() > 1 && evaluate_polynomial(poly, r).is_zero()) {
            poly = deflate(poly, r);
            ++mult;
        }
        if (mult > 0) found.push_back({r, mult});
        if (poly.size() == 1) break;
    }
    return found;
}

// ---- integer factorization -------------------------------------------------

mpz_class pollard_rho(const mpz_class& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        auto step = [&](mpz_class& v) {
            v = v * v + c;
            v %= n;
        };
        while (d == 1) {
            step(x);
            step(y);
            step(y);
            mpz_class diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> divs{1};
    for (const auto& [prime, exp] : factor_integer(n)) {
        const std::size_t existing = divs.size();
        mpz_class power = 1;
        for (unsigned e = 1; e <= exp; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < existing; ++i) divs.push_back(divs[i] * power);
        }
    }
    return divs;
}

// ---- Q ---------------------------------------------------------------------

std::optional<std::vector<RootMultiplicity>> split_rational(std::vector<FieldElem> poly, const FieldSpec& spec) {
    std::vector<RootMultiplicity> roots;
    const std::size_t degree = poly.size() - 1;

    std::size_t zero_mult = 0;
    while (poly.size() > 1 && poly.front().is_zero()) {
        poly.erase(poly.begin());
        ++zero_mult;
    }

    std::vector<FieldElem> candidates;
    if (poly.size() > 1) {
        mpz_class scale = 1;
        for (const auto& c : poly) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.rational().get_den_mpz_t());
        const mpz_class constant = abs(mpz_class(poly.front().rational() * scale));
        const mpz_class leading = abs(mpz_class(poly.back().rational() * scale));
        for (const auto& num : divisors(constant)) {
            for (const auto& den : divisors(leading)) {
                mpq_class q(num, den);
                q.canonicalize();
                candidates.push_back(FieldElem::from_rational(q, spec));
                candidates.push_back(FieldElem::from_rational(-q, spec));
            }
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const FieldElem& a, const FieldElem& b) { return a.canonical_compare(b) < 0; });
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }
    // Zero sorts among the negatives and positives.
    std::vector<RootMultiplicity> found = strip_roots(poly, candidates);
    for (const auto& r : found) roots.push_back(r);
    if (zero_mult > 0) roots.push_back({FieldElem::zero(spec), zero_mult});
    std::sort(roots.begin(), roots.end(),
              [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.root.canonical_compare(b.root) < 0; });

    std::size_t total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    if (total != degree) return std::nullopt;
    return roots;
}

// ---- GF(p) -----------------------------------------------------------------

using ModPoly = std::vector<std::uint64_t>;  // low to high, trimmed

struct ModRing {
    std::uint64_t p;

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t inv(std::uint64_t a) const {
        std::uint64_t r = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1U) r = mul(r, base);
            base = mul(base, base);
            e >>= 1U;
        }
        return r;
    }

    static void trim(ModPoly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    ModPoly rem(ModPoly a, const ModPoly& m) const {
        trim(a);
        const std::uint64_t lead_inv = inv(m.back());
        while (a.size() >= m.size()) {
            const std::uint64_t factor = mul(a.back(), lead_inv);
            const std::size_t shift = a.size() - m.size();
            for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = sub(a[shift + i], mul(factor, m[i]));
            trim(a);
        }
        return a;
    }

    ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m) const {
        if (a.empty() || b.empty()) return {};
        ModPoly c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mul(a[i], b[j])) % p;
        return rem(std::move(c), m);
    }

    ModPoly powmod(ModPoly base, std::uint64_t e, const ModPoly& m) const {
        ModPoly result = rem({1}, m);
        base = rem(std::move(base), m);
        while (e) {
            if (e & 1U) result = mulmod(result, base, m);
            base = mulmod(base, base, m);
            e >>= 1U;
        }
        return result;
    }

    ModPoly gcd(ModPoly a, ModPoly b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            ModPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.empty()) {
            const std::uint64_t li = inv(a.back());
            for (auto& c : a) c = mul(c, li);
        }
        return a;
    }

    // g is monic, squarefree and a product of linear factors.
    void split(const ModPoly& g, std::vector<std::uint64_t>& out) const {
        if (g.size() <= 1) return;
        if (g.size() == 2) {
            out.push_back(sub(0, g[0]));
            return;
        }
        for (std::uint64_t delta = 0;; ++delta) {
            ModPoly h = powmod({delta % p, 1}, (p - 1) / 2, g);
            if (h.empty()) h = {p - 1};
            else h[0] = sub(h[0], 1);
            trim(h);
            ModPoly d = gcd(g, h);
            if (d.size() > 1 && d.size() < g.size()) {
                split(d, out);
                // g / d
                ModPoly q;
                ModPoly r = g;
                const std::size_t qd = g.size() - d.size();
                q.assign(qd + 1, 0);
                for (std::size_t k = qd + 1; k-- > 0;) {
                    const std::uint64_t factor = r[k + d.size() - 1];
                    q[k] = factor;
                    for (std::size_t i = 0; i < d.size(); ++i) r[k + i] = sub(r[k + i], mul(factor, d[i]));
                }
                split(q, out);
                return;
            }
        }
    }
};

constexpr std::uint64_t kScanLimit = 1U << 16;

std::optional<std::vector<RootMultiplicity>> split_prime(std::vector<FieldElem> poly, const FieldSpec& spec) {
    const std::size_t degree = poly.size() - 1;
    const std::uint64_t p = spec.characteristic();
    std::vector<FieldElem> candidates;
    if (p <= kScanLimit) {
        for (std::uint64_t r = 0; r < p; ++r) candidates.push_back(FieldElem::from_integer(static_cast<long>(r), spec));
    } else {
        ModRing ring{p};
        ModPoly f;
        for (const auto& c : poly) f.push_back(c.residue());
        ModRing::trim(f);
        const std::uint64_t li = ring.inv(f.back());
        for (auto& c : f) c = ring.mul(c, li);
        // gcd(f, X^p - X) collects the distinct roots.
        ModPoly xp = ring.powmod({0, 1}, p, f);
        xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
        xp[1] = ring.sub(xp[1], 1);
        ModRing::trim(xp);
        ModPoly g = xp.empty() ? f : ring.gcd(f, xp);
        std::vector<std::uint64_t> residues;
        ring.split(g, residues);
        std::sort(residues.begin(), residues.end());
        for (auto r : residues) candidates.push_back(FieldElem::from_integer(static_cast<long>(r), spec));
    }
    std::vector<RootMultiplicity> roots = strip_roots(poly, candidates);
    std::size_t total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    if (total != degree) return std::nullopt;
    return roots;
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n) {
    mpz_class m = abs(n);
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "cannot factor zero");
    std::map<mpz_class, unsigned> out;
    for (unsigned long d = 2; d < 1000 && m > 1; ++d) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            ++out[mpz_class(d)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
        }
    }
    factor_into(m, out);
    return {out.begin(), out.end()};
}

std::optional<std::vector<RootMultiplicity>> split_roots(const std::vector<FieldElem>& coeffs, const FieldSpec& spec) {
    std::vector<FieldElem> poly = coeffs;
    while (poly.size() > 1 && poly.back().is_zero()) poly.pop_back();
    if (poly.empty() || poly.back().is_zero()) throw Error(ErrorKind::InvalidArgument, "zero polynomial");
    if (poly.size() == 1) return std::vector<RootMultiplicity>{};
    if (spec.is_rationals()) return split_rational(std::move(poly), spec);
    return split_prime(std::move(poly), spec);
}

}  // namespace hurwitz
