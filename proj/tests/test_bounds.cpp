#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "symdec/bounds.hpp"
#include "symdec/construct.hpp"
#include "test_util.hpp"

using namespace symdec;
using namespace symdec::test;

TEST_CASE("a_bounds on the identity with N = d^2") {
    for (int d = 2; d <= 6; ++d) {
        CAPTURE(d);
        const auto rep = a_bounds(HermitianMatrix::identity(d), d * d);
        const double dd = d;
        CHECK(std::abs(rep.a_lower - 1.0 / (dd * dd * dd)) <= 1e-12);
        REQUIRE(rep.a_upper_psd.has_value());
        CHECK(std::abs(*rep.a_upper_psd - 1.0 / (dd * dd)) <= 1e-12);
        REQUIRE(rep.a_upper_projection.has_value());
        CHECK(*rep.a_upper_projection == doctest::Approx(1.0 / (dd * dd)).epsilon(1e-12));
    }
}

TEST_CASE("a_bounds on diag(1,2) with N = 4") {
    const auto rep = a_bounds(HermitianMatrix::diagonal({1.0, 2.0}), 4);
    CHECK(rep.a_lower == doctest::Approx(5.0 / 16.0).epsilon(1e-14));
    CHECK(rep.a_upper_positive == doctest::Approx(5.0 / 4.0).epsilon(1e-14));
    REQUIRE(rep.a_upper_psd.has_value());
    CHECK(*rep.a_upper_psd == doctest::Approx(25.0 / 16.0).epsilon(1e-12));
    REQUIRE(rep.x_upper_psd.has_value());
    CHECK(*rep.x_upper_psd == doctest::Approx(2.0 * std::sqrt(5.0) / 4.0).epsilon(1e-12));
    CHECK_FALSE(rep.a_upper_projection.has_value());  // not a projection
    CHECK_FALSE(rep.a_upper_condition.has_value());   // no family given
}

TEST_CASE("a_bounds respects field applicability") {
    // positive semidefinite but singular: PSD-bound fields stay empty
    const auto rep = a_bounds(HermitianMatrix::diagonal({1.0, 0.0}), 3);
    CHECK_FALSE(rep.a_upper_psd.has_value());
    CHECK_FALSE(rep.phi.has_value());
    REQUIRE(rep.a_upper_projection.has_value());  // diag(1,0) is a projection

    CHECK_THROWS_AS(a_bounds(HermitianMatrix::diagonal({1.0, -1.0}), 2), std::invalid_argument);
}

TEST_CASE("condition-number bound") {
    std::mt19937_64 rng(61);
    const auto t = random_positive_definite(3, rng);
    const auto basis = build_basis(t, 4, 5);
    const auto win = psd_window(basis);

    SUBCASE("strictly positive members produce the bound and obey it") {
        for (double frac : {0.0, 0.3, 0.6}) {
            const auto fam = build_family(basis, frac * win.x_sufficient);
            const auto rep = a_bounds(t, 4, &fam);
            REQUIRE(rep.a_upper_condition.has_value());
            CHECK(fam.a_fit <= *rep.a_upper_condition + 1e-8);
            CHECK(*rep.a_upper_condition >= rep.a_lower);
        }
    }

    SUBCASE("a singular member disables the bound") {
        auto fam = build_family(basis, 0.1 * win.x_sufficient);
        fam.members[0] = HermitianMatrix::diagonal({1.0, 1.0, 0.0});
        const auto rep = a_bounds(t, 4, &fam);
        CHECK_FALSE(rep.a_upper_condition.has_value());
    }
}

TEST_CASE("phi closed form") {
    for (int d = 2; d <= 6; ++d)
        CHECK(phi_closed_form(std::vector<double>(d, 1.0)) ==
              doctest::Approx(1.0 / std::sqrt(d * (d - 1.0))).epsilon(1e-14));

    CHECK(phi_closed_form({2.0, 1.0}) == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-14));
    CHECK(phi_closed_form({1.0, 2.0}) == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-14));

    // beta/b_d >= d makes the bracket largest for skewed spectra, so the flat
    // spectrum maximizes phi; the Monte Carlo oracle below confirms the same
    // direction.
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> unif(0.2, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 2 + trial % 5;
        std::vector<double> b(d);
        for (double& v : b) v = unif(rng);
        CHECK(phi_closed_form(b) <= 1.0 / std::sqrt(d * (d - 1.0)) + 1e-12);
    }

    CHECK_THROWS_AS(phi_closed_form({1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(phi_closed_form({1.0, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(phi_closed_form(std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("phi oracle confirms the closed form") {
    SUBCASE("flat spectrum in d = 2") {
        const auto res = phi_oracle({1.0, 1.0}, 200, 1);
        CHECK(res.value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
        CHECK(res.mc_violations == 0);
    }

    SUBCASE("(2,1) reference spectrum") {
        const auto res = phi_oracle({2.0, 1.0}, 200, 2);
        CHECK(std::abs(res.value - 1.0 / std::sqrt(5.0)) <= 1e-8);
        CHECK(res.mc_violations == 0);
    }

    SUBCASE("witness feasibility and agreement on random spectra") {
        std::mt19937_64 rng(71);
        std::uniform_real_distribution<double> unif(0.2, 3.0);
        for (int trial = 0; trial < 12; ++trial) {
            const int d = 2 + trial % 5;
            std::vector<double> b(d);
            for (double& v : b) v = unif(rng);
            const auto res = phi_oracle(b, 100, trial + 10);

            CHECK(std::abs(res.value - phi_closed_form(b)) <= 1e-7);
            CHECK(res.mc_violations == 0);
            CHECK(res.mc_min_lambda_max >= res.value - 1e-9);

            std::vector<double> desc = b;
            std::sort(desc.begin(), desc.end(), std::greater<double>());
            CHECK(std::abs(hs_inner(res.witness, HermitianMatrix::diagonal(desc))) <= 1e-11);
            CHECK(std::abs(hs_norm(res.witness) - 1.0) <= 1e-12);
        }
    }

    CHECK_THROWS_AS(phi_oracle({1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("bound chain around constructed families") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 2 + trial % 3;
        const auto t = random_positive_definite(d, rng);
        const int n = 2 + trial % (d * d - 1);
        const auto rep = a_bounds(t, n);

        REQUIRE(rep.a_upper_psd.has_value());
        CHECK(rep.a_lower <= *rep.a_upper_psd + 1e-12);

        // x_upper_psd reproduces ||T||_inf/(N phi), and a_upper_psd its square law
        REQUIRE(rep.phi.has_value());
        CHECK(*rep.x_upper_psd ==
              doctest::Approx(lambda_max(t) / (n * *rep.phi)).epsilon(1e-12));
        CHECK(*rep.a_upper_psd ==
              doctest::Approx(rep.a_lower + *rep.x_upper_psd * *rep.x_upper_psd).epsilon(1e-12));

        const auto basis = build_basis(t, n, trial);
        const auto win = psd_window(basis);
        const auto fam = build_family(basis, win.x_exact);
        CHECK(fam.a_fit >= rep.a_lower - 1e-8);
        CHECK(fam.a_fit <= std::min(rep.a_upper_positive, *rep.a_upper_psd) + 1e-8);
    }
}
