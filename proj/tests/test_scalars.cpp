#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <string>
#include <vector>

#include "ncborel/errors.hpp"
#include "ncborel/rational.hpp"
#include "ncborel/scalar_poly.hpp"

using namespace ncborel;

namespace {

ScalarPoly rand_poly(std::mt19937& rng) {
    const auto ctx = ParamContext::standard();
    std::uniform_int_distribution<int> nterms(0, 4), expo(0, 2), coef(-3, 3), imc(-1, 1);
    ScalarPoly p = ScalarPoly::zero(ctx);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        ScalarPoly::Exps e(ctx->size(), 0);
        for (auto& x : e) x = static_cast<std::uint32_t>(expo(rng));
        p += ScalarPoly::monomial(e, GaussianRational(BigRat(coef(rng)), BigRat(imc(rng))),
                                  ctx);
    }
    return p;
}

}  // namespace

TEST_CASE("Gaussian rational arithmetic") {
    const GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK((i * i * i * i).is_one());
    CHECK(i.conj() == -i);

    const GaussianRational z(BigRat(3, 4), BigRat(-2, 5));
    CHECK(z + (-z) == GaussianRational(0));
    CHECK(z - z == GaussianRational(0));
    CHECK(z * z.conj() == GaussianRational(z.norm()));
    CHECK(z / z == GaussianRational(1));
    CHECK((z * i) / i == z);

    CHECK(GaussianRational::ratio(2, 4) == GaussianRational::ratio(1, 2));
    CHECK(GaussianRational::ratio(-6, 4) == GaussianRational(BigRat(-3, 2)));
    CHECK_THROWS_AS(z / GaussianRational(0), DivisionError);

    SUBCASE("predicates") {
        CHECK(GaussianRational(0).is_zero());
        CHECK(GaussianRational(1).is_one());
        CHECK(GaussianRational(2).is_real());
        CHECK_FALSE(i.is_real());
    }

    SUBCASE("printing follows the documented forms") {
        CHECK(GaussianRational(3).str() == "3");
        CHECK(GaussianRational::ratio(-1, 2).str() == "-1/2");
        CHECK(i.str() == "i");
        CHECK((i + i).str() == "2*i");
        CHECK((GaussianRational(1) + i).str() == "1 + i");
    }
}

TEST_CASE("combinatorial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(6) == 720);
    CHECK(factorial(20) == BigInt("2432902008176640000"));

    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(6, 6) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(52, 26) == BigInt("495918532948104"));
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));

    CHECK(falling_factorial(5, 0) == 1);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(5, 5) == 120);
    CHECK(falling_factorial(3, 4) == 0);
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(falling_factorial(n, k) == binomial(n, k) * factorial(k));
}

TEST_CASE("parameter contexts") {
    const auto std_ctx = ParamContext::standard();
    REQUIRE(std_ctx->size() == 4);
    CHECK(std_ctx->name(kParamLambda) == "lam");
    CHECK(std_ctx->name(kParamK1) == "k1");
    CHECK(std_ctx->name(kParamK2) == "k2");
    CHECK(std_ctx->name(kParamK3) == "k3");
    CHECK(std_ctx->index_of("k2") == std::size_t{2});
    CHECK_FALSE(std_ctx->index_of("gamma").has_value());

    SUBCASE("extensions deduplicate, sort, and ignore canonical collisions") {
        const auto ext = ParamContext::with_symbols({"beta", "alpha", "beta", "lam", "k1"});
        REQUIRE(ext->size() == 6);
        CHECK(ext->name(4) == "alpha");
        CHECK(ext->name(5) == "beta");
        CHECK(*ext == *ParamContext::with_symbols({"alpha", "beta"}));
    }
}

TEST_CASE("scalar polynomial arithmetic") {
    const auto ctx = ParamContext::standard();
    const ScalarPoly lam = ScalarPoly::lambda(ctx);
    const ScalarPoly k1 = ScalarPoly::k(1, ctx);
    const ScalarPoly k2 = ScalarPoly::k(2, ctx);
    const ScalarPoly one = ScalarPoly::one(ctx);

    CHECK((lam + k1) * (lam - k1) == lam * lam - k1 * k1);
    CHECK(lam * k1 == k1 * lam);
    CHECK((lam - lam).is_zero());
    CHECK(one.is_one());
    CHECK((lam * GaussianRational(0)).is_zero());
    CHECK(-(-lam) == lam);
    CHECK(lam * GaussianRational(2) / GaussianRational(2) == lam);

    SUBCASE("degrees") {
        const ScalarPoly p = lam * lam * k1 + k2 * k2 * k2;
        CHECK(p.degree_in(kParamLambda) == 2);
        CHECK(p.degree_in(kParamK1) == 1);
        CHECK(p.k_degree() == 3);
        CHECK(p.total_degree() == 3);
        CHECK(ScalarPoly::zero(ctx).total_degree() == 0);
    }

    SUBCASE("coefficient access and leading terms") {
        const ScalarPoly p = lam * k1 * GaussianRational(5) - one * GaussianRational(2);
        ScalarPoly::Exps e(ctx->size(), 0);
        CHECK(p.coeff(e) == GaussianRational(-2));
        e[kParamLambda] = 1;
        e[kParamK1] = 1;
        CHECK(p.coeff(e) == GaussianRational(5));
        const auto [le, lc] = p.leading_term();
        CHECK(le == e);
        CHECK(lc == GaussianRational(5));
    }

    SUBCASE("random distributivity and commutativity") {
        std::mt19937 rng(20230817);
        for (int trial = 0; trial < 200; ++trial) {
            const ScalarPoly a = rand_poly(rng), b = rand_poly(rng), c = rand_poly(rng);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            CHECK(a - b == -(b - a));
            CHECK(a * (b * c) == (a * b) * c);
        }
    }
}

TEST_CASE("scalar polynomial substitution") {
    const auto ctx = ParamContext::standard();
    const ScalarPoly lam = ScalarPoly::lambda(ctx);
    const ScalarPoly k1 = ScalarPoly::k(1, ctx);

    const ScalarPoly p = lam * lam * k1 + k1 * GaussianRational(3);
    CHECK(p.substitute({{"lam", GaussianRational(0)}}) == k1 * GaussianRational(3));
    CHECK(p.substitute({{"lam", GaussianRational(2)}}) == k1 * GaussianRational(7));
    CHECK(p.substitute({{"lam", GaussianRational(1)}, {"k1", GaussianRational(1)}}) ==
          ScalarPoly::constant(GaussianRational(4), ctx));
    // Unbound parameters stay formal.
    CHECK(p.substitute({}) == p);
    // The imaginary unit survives substitution.
    const ScalarPoly q = lam * GaussianRational::i();
    CHECK(q.substitute({{"lam", GaussianRational(1)}}) ==
          ScalarPoly::constant(GaussianRational::i(), ctx));
}

TEST_CASE("lambda shifting and division") {
    const auto ctx = ParamContext::standard();
    const ScalarPoly lam = ScalarPoly::lambda(ctx);
    const ScalarPoly k2 = ScalarPoly::k(2, ctx);

    const ScalarPoly p = lam * k2 + lam * lam * GaussianRational(3);
    CHECK(p.divisible_by_lambda());
    CHECK(p.divide_by_lambda() == k2 + lam * GaussianRational(3));
    CHECK(p.divide_by_lambda().shift_lambda(1) == p);
    CHECK(p.shift_lambda(2).divide_by_lambda().divide_by_lambda() == p);

    const ScalarPoly q = p + ScalarPoly::one(ctx);
    CHECK_FALSE(q.divisible_by_lambda());
    CHECK_THROWS_AS(q.divide_by_lambda(), DivisionError);
    // The zero polynomial divides cleanly.
    CHECK(ScalarPoly::zero(ctx).divisible_by_lambda());
}

TEST_CASE("exact polynomial division") {
    const auto ctx = ParamContext::standard();
    const ScalarPoly lam = ScalarPoly::lambda(ctx);
    const ScalarPoly k1 = ScalarPoly::k(1, ctx);

    const ScalarPoly a = (lam + k1) * (lam - k1);
    REQUIRE(a.try_divide(lam + k1).has_value());
    CHECK(*a.try_divide(lam + k1) == lam - k1);
    CHECK_FALSE(a.try_divide(lam + ScalarPoly::one(ctx)).has_value());
    CHECK_FALSE(lam.try_divide(ScalarPoly::zero(ctx)).has_value());

    std::mt19937 rng(991);
    for (int trial = 0; trial < 100; ++trial) {
        const ScalarPoly u = rand_poly(rng), v = rand_poly(rng);
        if (v.is_zero()) continue;
        const auto q = (u * v).try_divide(v);
        REQUIRE(q.has_value());
        CHECK(*q == u);
    }
}

TEST_CASE("homogeneous splits reassemble") {
    const auto ctx = ParamContext::standard();
    const ScalarPoly lam = ScalarPoly::lambda(ctx);
    const ScalarPoly k1 = ScalarPoly::k(1, ctx);
    const ScalarPoly k3 = ScalarPoly::k(3, ctx);

    const ScalarPoly p =
        lam * k1 * k1 + k3 * GaussianRational(2) + lam * lam * lam + ScalarPoly::one(ctx);

    SUBCASE("by k-degree") {
        const auto parts = p.split_by_k_degree();
        REQUIRE(parts.size() == 3);  // k-degrees 0, 1, 2
        ScalarPoly sum = ScalarPoly::zero(ctx);
        for (const auto& [deg, part] : parts) {
            CHECK(part.k_degree() == deg);
            sum += part;
        }
        CHECK(sum == p);
        CHECK(p.truncate_k_degree(1) == parts.at(0) + parts.at(1));
        CHECK(p.truncate_k_degree(0) == parts.at(0));
    }

    SUBCASE("by lam-degree") {
        const auto parts = p.split_by_lambda_degree();
        REQUIRE(parts.size() == 3);  // lam-degrees 0, 1, 3
        ScalarPoly sum = ScalarPoly::zero(ctx);
        for (const auto& [deg, part] : parts) {
            CHECK(part.degree_in(kParamLambda) == deg);
            sum += part;
        }
        CHECK(sum == p);
    }
}

TEST_CASE("rational content") {
    const auto ctx = ParamContext::standard();
    const ScalarPoly lam = ScalarPoly::lambda(ctx);
    const ScalarPoly k1 = ScalarPoly::k(1, ctx);

    CHECK((lam * GaussianRational(4) + k1 * GaussianRational(6)).content() == BigRat(2));
    CHECK((lam * GaussianRational::ratio(1, 2) + k1 * GaussianRational::ratio(3, 4))
              .content() == BigRat(1, 4));
    CHECK(ScalarPoly::zero(ctx).content() == BigRat(1));
    // i-only coefficients still carry integral content.
    CHECK((lam * (GaussianRational::i() + GaussianRational::i())).content() == BigRat(2));
}

TEST_CASE("scalar fractions") {
    const auto ctx = ParamContext::standard();
    const ScalarPoly lam = ScalarPoly::lambda(ctx);
    const ScalarPoly k1 = ScalarPoly::k(1, ctx);
    const ScalarPoly one = ScalarPoly::one(ctx);

    const ScalarFraction half(one, one + one);
    const ScalarFraction a(lam, k1);
    CHECK(a + a == ScalarFraction(lam + lam, k1));
    CHECK(a - a == ScalarFraction(ScalarPoly::zero(ctx)));
    CHECK(a * ScalarFraction(k1, lam) == ScalarFraction(one));
    CHECK(a / a == ScalarFraction(one));

    // Cross-multiplied equality identifies unreduced representatives.
    CHECK(ScalarFraction(lam * k1, k1 * k1) == ScalarFraction(lam, k1));
    CHECK(ScalarFraction(lam, k1) != ScalarFraction(k1, lam));

    SUBCASE("as_poly") {
        CHECK(ScalarFraction(lam * k1, k1).as_poly() == lam);
        CHECK_FALSE(ScalarFraction(lam, k1).as_poly().has_value());
        CHECK(half.as_poly() == one * GaussianRational::ratio(1, 2));
    }
}
