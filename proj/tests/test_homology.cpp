#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "ncborel/homology.hpp"
#include "ncborel/errors.hpp"

using namespace ncborel;

namespace {

Form dx(int a) { return Form::basis(set_of(a)); }

const ScalarPoly lam = ScalarPoly::lambda();
const NcPoly x1 = NcPoly::generator(1);
const NcPoly x2 = NcPoly::generator(2);
const NcPoly x3 = NcPoly::generator(3);

// Number of monomials x1^a x2^b x3^c lam^l of total degree exactly n:
// C(n + 3, 3).
std::size_t block_count(int k, int n) {
    if (n < k) return 0;
    const int m = n - k;
    std::size_t words = static_cast<std::size_t>(m + 3) * (m + 2) * (m + 1) / 6;
    std::size_t sets = (k == 0 || k == 3) ? 1 : 3;
    return words * sets;
}

}  // namespace

TEST_CASE("graded bases") {
    SUBCASE("sizes count weighted monomials") {
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= 3; ++k) {
                const auto basis = GradedBasis::make(k, n);
                CHECK(basis.size() == block_count(k, n));
                for (const auto& e : basis.elems()) {
                    CHECK(set_degree(e.I) == k);
                    CHECK(set_degree(e.I) + e.m.total() + e.lam ==
                          static_cast<std::uint32_t>(n));
                }
            }
        CHECK(GradedBasis::make(0, 6).size() == 84);
    }

    SUBCASE("element forms have the advertised grade") {
        const auto basis = GradedBasis::make(1, 4);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Form w = basis.element_form(i);
            CHECK(w.degree() == 1);
            CHECK(w.grade() == 4);
        }
    }

    SUBCASE("coords round trip") {
        std::mt19937 rng(909090);
        for (int trial = 0; trial < 20; ++trial) {
            const int k = trial % 4;
            const int n = k + trial % 3;
            const auto basis = GradedBasis::make(k, n);
            std::vector<GaussianRational> v(basis.size());
            std::uniform_int_distribution<int> coef(-4, 4);
            for (auto& c : v) c = GaussianRational(coef(rng));
            const Form w = basis.form_of(v);
            CHECK(basis.coords_of(w) == v);
        }
    }

    SUBCASE("index_of matches elems ordering") {
        const auto basis = GradedBasis::make(2, 4);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const auto& e = basis.elems()[i];
            const auto found = basis.index_of(e.I, e.m, e.lam);
            REQUIRE(found.has_value());
            CHECK(*found == i);
        }
        CHECK_FALSE(basis.index_of(set_of(1), Monomial{5, 0, 0}, 0).has_value());
    }

    SUBCASE("coords_of rejects forms outside the block") {
        const auto basis = GradedBasis::make(1, 2);
        CHECK_THROWS_AS(basis.coords_of(dx(1).right_mul(x1 * x1)), Error);
        CHECK_THROWS_AS(basis.coords_of(dx(1).right_mul(NcPoly::scalar(
                            ScalarPoly::k(1)))),
                        Error);
    }
}

TEST_CASE("matrix of d composes to zero on every block") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= 1; ++k) {
            const auto first = d_matrix(k, n);
            const auto second = d_matrix(k + 1, n);
            const auto prod = matmul(second.mat, first.mat);
            for (std::size_t r = 0; r < prod.rows(); ++r)
                for (std::size_t c = 0; c < prod.cols(); ++c)
                    CHECK(prod.at(r, c).is_zero());
        }
}

TEST_CASE("matrix of d agrees with the operator") {
    std::mt19937 rng(160493);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = trial % 3;
        const int n = k + 1 + trial % 3;
        const auto dm = d_matrix(k, n);
        std::vector<GaussianRational> v(dm.source.size());
        std::uniform_int_distribution<int> coef(-3, 3);
        for (auto& c : v) c = GaussianRational(coef(rng));
        const Form w = dm.source.form_of(v);
        const auto image = dm.target.coords_of(d(w));
        // mat * v column by column.
        std::vector<GaussianRational> mv(dm.target.size(), GaussianRational(0));
        for (std::size_t r = 0; r < dm.mat.rows(); ++r)
            for (std::size_t c = 0; c < dm.mat.cols(); ++c)
                mv[r] += dm.mat.at(r, c) * v[c];
        CHECK(image == mv);
    }
}

TEST_CASE("cohomology of the calculus is trivial beyond the constants") {
    const auto table = cohomology_dims(6);
    REQUIRE(table.max_grade == 6);
    REQUIRE(table.dims.size() == 7);
    for (int n = 0; n <= 6; ++n) {
        CHECK(table.dims[n][0] == (n == 0 ? 1 : 0));
        CHECK(table.dims[n][1] == 0);
        CHECK(table.dims[n][2] == 0);
        CHECK(table.dims[n][3] == 0);
    }

    SUBCASE("block bookkeeping is consistent") {
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= 3; ++k) {
                CHECK(table.block_dim[n][k] ==
                      static_cast<int>(block_count(k, n)));
                CHECK(table.block_rank[n][k] >= 0);
                CHECK(table.block_rank[n][k] <= table.block_dim[n][k]);
                if (k == 3) CHECK(table.block_rank[n][k] == 0);
            }
        // Rank of d out of (k, n) is bounded by the target block.
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= 2; ++k)
                CHECK(table.block_rank[n][k] <=
                      static_cast<int>(block_count(k + 1, n)));
    }

    SUBCASE("serial reference agrees with the parallel path") {
        const auto serial = cohomology_dims(6, Parallelism::serial);
        CHECK(serial == table);
    }
}

TEST_CASE("primitives") {
    SUBCASE("an exact 1-form has a quadratic primitive") {
        const Form w = dx(1).right_mul(x1);
        const auto prim = find_primitive(w, 3);
        REQUIRE(prim.has_value());
        CHECK(d(*prim) == w);
        // x1^2/2 + (lam/2) x1 works; the solver may normalize differently but
        // must agree after d.
        const NcPoly expect = (x1 * x1 + x1 * lam) * GaussianRational::ratio(1, 2);
        CHECK(d(Form::scalar(expect)) == w);
    }

    SUBCASE("closed 2-forms at low grade are exact") {
        const Form w = wedge(dx(1), dx(2)).right_mul(x1);
        REQUIRE(d(w).is_zero());
        const auto prim = find_primitive(w, 3);
        REQUIRE(prim.has_value());
        CHECK(d(*prim) == w);
        CHECK(prim->degree() == 1);
    }

    SUBCASE("non-closed input raises with the obstruction as witness") {
        const Form w = dx(1).right_mul(x2);
        try {
            find_primitive(w, 4);
            FAIL("expected NotClosedError");
        } catch (const NotClosedError& e) {
            CHECK(e.witness == d(w));
            CHECK_FALSE(e.witness.is_zero());
        }
    }

    SUBCASE("randomized exact forms are recovered") {
        std::mt19937 rng(271828);
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int trial = 0; trial < 15; ++trial) {
            const int k = trial % 3;
            const int n = k + 1 + trial % 3;
            const auto basis = GradedBasis::make(k, n);
            std::vector<GaussianRational> v(basis.size());
            for (auto& c : v) c = GaussianRational(coef(rng));
            const Form w = d(basis.form_of(v));
            if (w.is_zero()) continue;
            const auto prim = find_primitive(w, n + 1);
            REQUIRE(prim.has_value());
            CHECK(d(*prim) == w);
        }
    }

    SUBCASE("grade bound is honored") {
        const Form w = dx(1).right_mul(x1);
        CHECK_FALSE(find_primitive(w, 1).has_value());
        CHECK(find_primitive(w, 2).has_value());
    }
}
