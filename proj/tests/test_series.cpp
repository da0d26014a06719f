#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "hurwitz/error.hpp"
#include "hurwitz/series.hpp"
#include "support.hpp"

using namespace hurwitz;
using namespace hurwitz::testing;

namespace {

std::vector<std::string> text(const HurwitzSeries& s, std::size_t n) {
    std::vector<std::string> out;
    for (const auto& c : coeffs(s, n)) out.push_back(c.to_string());
    return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("coefficients of the basic series") {
    const FieldElem beta = frac(-3, 2, Q());
    const auto e = HurwitzSeries::exponential(beta);
    for (std::size_t n = 0; n < 12; ++n) CHECK(e.coeff(n) == beta.pow(n));

    const auto x2 = HurwitzSeries::divided_power(2, Q());
    for (std::size_t n = 0; n < 8; ++n) CHECK(x2.coeff(n) == num(n == 2 ? 1 : 0, Q()));

    CHECK(HurwitzSeries::zero(GF(3)).coeff(5).is_zero());
    CHECK(text(HurwitzSeries::divided_power(0, Q()), 3) == Strings{"1", "0", "0"});
    CHECK(text(HurwitzSeries::exponential(num(0, Q())), 4) == Strings{"1", "0", "0", "0"});
    CHECK(text(HurwitzSeries::exponential(num(2, Q())), 4) == Strings{"1", "2", "4", "8"});
}

TEST_CASE("memoization is deterministic and append-only") {
    int calls = 0;
    const auto s = HurwitzSeries::from_rule(Q(), [&calls](std::size_t n, std::span<const FieldElem> prefix) {
        ++calls;
        return n == 0 ? FieldElem::one(Q()) : prefix[n - 1] + prefix[n - 1];
    });
    CHECK(s.coeff(10) == num(1024, Q()));
    CHECK(calls == 11);
    CHECK(s.coeff(3) == num(8, Q()));
    CHECK(s.coeff(10) == num(1024, Q()));
    CHECK(calls == 11);
    CHECK(s.cached() == 11);

    const auto copy = s.clone();
    CHECK(copy.cached() == 11);
    CHECK(copy.coeff(12) == num(4096, Q()));
    CHECK(s.cached() == 11);
}

TEST_CASE("addition and scaling") {
    const auto x = HurwitzSeries::divided_power(1, Q());
    CHECK(text(x + x, 4) == Strings{"0", "2", "0", "0"});
    Random rng(1);
    const auto f = rng.series(10, Q());
    CHECK(eq_to_precision(HurwitzSeries::zero(Q()) + f, f, Precision(20)));
    CHECK(text(num(3, Q()) * HurwitzSeries::exponential(num(2, Q())), 4) == Strings{"3", "6", "12", "24"});
    CHECK(eq_to_precision(f - f, HurwitzSeries::zero(Q()), Precision(12)));
    CHECK_THROWS_AS(f + HurwitzSeries::zero(GF(2)), Error);
}

TEST_CASE("Hurwitz product") {
    const auto xq = HurwitzSeries::divided_power(1, Q());
    CHECK(text(xq * xq, 4) == Strings{"0", "0", "2", "0"});
    const auto x2 = HurwitzSeries::divided_power(1, GF(2));
    CHECK(eq_to_precision(x2 * x2, HurwitzSeries::zero(GF(2)), Precision(16)));

    Random rng(2);
    for (const auto& spec : {Q(), GF(7)}) {
        for (int t = 0; t < 20; ++t) {
            const FieldElem a = rng.elem(spec), b = rng.elem(spec);
            CHECK(eq_to_precision(HurwitzSeries::exponential(a) * HurwitzSeries::exponential(b),
                                  HurwitzSeries::exponential(a + b), Precision(24)));
        }
    }

    // x^[i] x^[j] = C(i+j, i) x^[i+j], against the vector oracle.
    for (const auto& spec : {Q(), GF(3)}) {
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
                const auto oracle = hurwitz_product_oracle(coeffs(HurwitzSeries::divided_power(i, spec), 14),
                                                           coeffs(HurwitzSeries::divided_power(j, spec), 14), 14, spec);
                const auto expected = FieldElem::from_integer(pascal(i + j)[i + j][i], spec) *
                                      HurwitzSeries::divided_power(i + j, spec);
                CHECK(coeffs(HurwitzSeries::divided_power(i, spec) * HurwitzSeries::divided_power(j, spec), 14) == oracle);
                CHECK(coeffs(expected, 14) == oracle);
            }
        }
    }
}

TEST_CASE("product matches the direct formula on random series") {
    Random rng(4);
    for (const auto& spec : {Q(), GF(2), GF(5), GF(2147483647)}) {
        for (int t = 0; t < 10; ++t) {
            const auto a = rng.elems(12, spec), b = rng.elems(9, spec);
            const auto prod = HurwitzSeries::finite(spec, a) * HurwitzSeries::finite(spec, b);
            CHECK(coeffs(prod, 24) == hurwitz_product_oracle(a, b, 24, spec));
        }
    }
}

TEST_CASE("ring axioms, probed below 24") {
    Random rng(5);
    const Precision p(24);
    for (const auto& spec : {Q(), GF(3), GF(101)}) {
        for (int t = 0; t < 5; ++t) {
            const auto f = rng.series(24, spec), g = rng.series(24, spec), h = rng.series(24, spec);
            CHECK(eq_to_precision(f * g, g * f, p));
            CHECK(eq_to_precision((f * g) * h, f * (g * h), p));
            CHECK(eq_to_precision(f * (g + h), f * g + f * h, p));
            CHECK(eq_to_precision(f + g, g + f, p));
            CHECK(eq_to_precision(HurwitzSeries::one(spec) * f, f, p));
        }
    }
}

TEST_CASE("derivation is the shift and satisfies Leibniz") {
    const auto x3 = HurwitzSeries::divided_power(3, Q());
    CHECK(eq_to_precision(x3.derive(), HurwitzSeries::divided_power(2, Q()), Precision(10)));
    CHECK(eq_to_precision(HurwitzSeries::divided_power(0, Q()).derive(), HurwitzSeries::zero(Q()), Precision(10)));
    CHECK(eq_to_precision(HurwitzSeries::constant(num(5, Q())).derive(), HurwitzSeries::zero(Q()), Precision(10)));
    const FieldElem beta = frac(2, 3, Q());
    const auto e = HurwitzSeries::exponential(beta);
    CHECK(eq_to_precision(e.derive(), beta * e, Precision(20)));
    CHECK(eq_to_precision(derive(x3, 3), HurwitzSeries::one(Q()), Precision(6)));

    Random rng(6);
    for (const auto& spec : {Q(), GF(2), GF(7)}) {
        for (int t = 0; t < 5; ++t) {
            const auto f = rng.series(26, spec), g = rng.series(26, spec);
            CHECK(eq_to_precision((f * g).derive(), f.derive() * g + f * g.derive(), Precision(24)));
        }
    }
}

TEST_CASE("inversion") {
    const FieldElem beta = num(3, Q());
    CHECK(eq_to_precision(HurwitzSeries::exponential(beta).invert(), HurwitzSeries::exponential(-beta), Precision(20)));
    CHECK(eq_to_precision(HurwitzSeries::one(Q()).invert(), HurwitzSeries::one(Q()), Precision(10)));
    // Hand computation: b_1 = -1, b_2 = -(2 a1 b1) = 2, b_3 = -(3 a1 b2) = -6.
    const auto f = HurwitzSeries::finite(Q(), nums({1, 1}, Q()));
    CHECK(text(f.invert(), 4) == Strings{"1", "-1", "2", "-6"});

    try {
        (void)HurwitzSeries::divided_power(1, Q()).invert();
        FAIL("expected NotAUnit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAUnit);
    }

    Random rng(8);
    for (const auto& spec : {Q(), GF(2), GF(13)}) {
        for (int t = 0; t < 8; ++t) {
            auto a = rng.elems(10, spec);
            a[0] = rng.nonzero(spec);
            const auto s = HurwitzSeries::finite(spec, a);
            CHECK(eq_to_precision(s * s.invert(), HurwitzSeries::one(spec), Precision(24)));
        }
    }
}

TEST_CASE("Taylor expansion of polynomials") {
    CHECK(text(HurwitzSeries::from_polynomial(nums({0, 1}, Q()), Q()), 3) == Strings{"0", "1", "0"});
    CHECK(text(HurwitzSeries::from_polynomial(nums({0, 0, 1}, Q()), Q()), 4) == Strings{"0", "0", "2", "0"});
    CHECK(eq_to_precision(HurwitzSeries::from_polynomial(nums({0, 0, 1}, GF(2)), GF(2)), HurwitzSeries::zero(GF(2)),
                          Precision(6)));

    // Oracle: differentiate the coefficient list formally and read off p(0).
    auto taylor_oracle = [](std::vector<FieldElem> p, std::size_t len, const FieldSpec& spec) {
        std::vector<FieldElem> out;
        for (std::size_t n = 0; n < len; ++n) {
            out.push_back(p.empty() ? FieldElem::zero(spec) : p[0]);
            std::vector<FieldElem> dp;
            for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(FieldElem::from_integer(static_cast<long>(i), spec) * p[i]);
            p = std::move(dp);
        }
        return out;
    };

    Random rng(9);
    for (const auto& spec : {Q(), GF(3), GF(5)}) {
        for (int t = 0; t < 10; ++t) {
            const auto p = rng.elems(6, spec), q = rng.elems(5, spec);
            CHECK(coeffs(HurwitzSeries::from_polynomial(p, spec), 12) == taylor_oracle(p, 12, spec));
            // Product of polynomials maps to the Hurwitz product.
            std::vector<FieldElem> pq(p.size() + q.size() - 1, FieldElem::zero(spec));
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = 0; j < q.size(); ++j) pq[i + j] += p[i] * q[j];
            CHECK(eq_to_precision(HurwitzSeries::from_polynomial(pq, spec),
                                  HurwitzSeries::from_polynomial(p, spec) * HurwitzSeries::from_polynomial(q, spec),
                                  Precision(14)));
            // And formal differentiation to the derivation.
            std::vector<FieldElem> dp;
            for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(FieldElem::from_integer(static_cast<long>(i), spec) * p[i]);
            CHECK(eq_to_precision(HurwitzSeries::from_polynomial(dp, spec), HurwitzSeries::from_polynomial(p, spec).derive(),
                                  Precision(10)));
        }
    }
}

TEST_CASE("precision comparisons and truncation") {
    CHECK(eq_to_precision(HurwitzSeries::exponential(num(1, Q())) * HurwitzSeries::exponential(num(-1, Q())),
                          HurwitzSeries::one(Q()), Precision(32)));
    CHECK_FALSE(eq_to_precision(HurwitzSeries::divided_power(1, Q()), HurwitzSeries::divided_power(2, Q()), Precision(3)));
    CHECK(eq_to_precision(HurwitzSeries::divided_power(3, Q()), HurwitzSeries::zero(Q()), Precision(3)));
    CHECK(HurwitzSeries::exponential(num(2, Q())).truncate(Precision(4)) == nums({1, 2, 4, 8}, Q()));
    CHECK_THROWS_AS(Precision(0), Error);
    CHECK_THROWS_AS(eq_to_precision(HurwitzSeries::zero(Q()), HurwitzSeries::zero(GF(2)), Precision(1)), Error);
}

TEST_CASE("Q: Hurwitz product agrees with the exponential generating function product") {
    Random rng(10);
    for (int t = 0; t < 10; ++t) {
        const auto a = rng.elems(16, Q()), b = rng.elems(16, Q());
        std::vector<mpq_class> qa, qb;
        for (std::size_t i = 0; i < 16; ++i) {
            qa.push_back(a[i].rational());
            qb.push_back(b[i].rational());
        }
        const auto expected = egf_product_oracle(qa, qb);
        const auto got = coeffs(HurwitzSeries::finite(Q(), a) * HurwitzSeries::finite(Q(), b), 16);
        for (std::size_t n = 0; n < 16; ++n) CHECK(got[n].rational() == expected[n]);
    }
}

TEST_CASE("char p: the p-th power of x vanishes") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        const auto x = HurwitzSeries::divided_power(1, GF(p));
        CHECK(eq_to_precision(power(x, p), HurwitzSeries::zero(GF(p)), Precision(24)));
        CHECK_FALSE(eq_to_precision(power(x, p - 1), HurwitzSeries::zero(GF(p)), Precision(24)));
    }
}

TEST_CASE("concurrent reads of a shared series behave as if serialized") {
    const auto e = HurwitzSeries::exponential(num(3, GF(1000003)));
    const auto f = e * e + HurwitzSeries::divided_power(4, GF(1000003));
    std::vector<std::vector<FieldElem>> results(4);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < results.size(); ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t n = 0; n < 200; n += 1 + t) results[t].push_back(f.coeff(n));
        });
    }
    for (auto& th : threads) th.join();
    const auto expected = HurwitzSeries::exponential(num(6, GF(1000003))) + HurwitzSeries::divided_power(4, GF(1000003));
    for (std::size_t t = 0; t < results.size(); ++t) {
        std::size_t k = 0;
        for (std::size_t n = 0; n < 200; n += 1 + t) CHECK(results[t][k++] == expected.coeff(n));
    }
}
