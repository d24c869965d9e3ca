#include <doctest.h>

#include "hankelspec/genfun.hpp"
#include "hankelspec/inverse.hpp"
#include "support/test_support.hpp"

using namespace hankelspec;
using testsupport::geometric_symbol;
using testsupport::random_zeta;

TEST_CASE("J at x = 0 is 1 in every form") {
    const ZetaSequence z = validate_zeta({{2, 0}, {1.5, 0}, {1, 0}, {0.5, 0}});
    CHECK(j_product(z, 0.0) == doctest::Approx(1.0));
    CHECK(j_partial_fraction(z, 0.0) == doctest::Approx(1.0));
    CHECK(inverse_j(z, 0.0).value == doctest::Approx(1.0));
}

TEST_CASE("closed values at zeta = (2, 0.5), x = -1") {
    const ZetaSequence z = validate_zeta({{2, 0}, {0.5, 0}});
    CHECK(j_product(z, -1.0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(j_partial_fraction(z, -1.0) == doctest::Approx(0.25).epsilon(1e-12));
    const InverseJValue inv = inverse_j(z, -1.0);
    CHECK(inv.c_constant == 0.0);
    CHECK(inv.value == doctest::Approx(4.0).epsilon(1e-12));
    // trace identity: both sides equal 0.6 in closed form
    const double lhs = 4.0 / 5.0 - 0.25 / 1.25;
    CHECK(lhs == doctest::Approx(0.6));
    CHECK(trace_logderiv_check(z, -1.0) < 1e-14);
}

TEST_CASE("odd single pair: C = rho^2 and J * (1/J) = 1") {
    const Complex a = std::polar(1.4, 2.0);
    const ZetaSequence z = validate_zeta({a});
    const double a_sq = 1.4 * 1.4;
    CHECK(j_product(z, -1.0) == doctest::Approx(1.0 / (1.0 + a_sq)).epsilon(1e-13));
    const InverseJValue inv = inverse_j(z, -1.0);
    CHECK(inv.c_constant == doctest::Approx(a_sq).epsilon(1e-13));
    CHECK(inv.value == doctest::Approx(1.0 + a_sq).epsilon(1e-13));
    CHECK(trace_logderiv_check(z, -1.0) < 1e-14);
    // both trace sides are a^2/(1 + a^2) here
    CHECK(a_sq / (1.0 + a_sq) ==
          doctest::Approx(j_product(z, -1.0) * a_sq).epsilon(1e-12));
}

TEST_CASE("near-pole evaluations are rejected") {
    const ZetaSequence z = validate_zeta({{2, 0}, {0.5, 0}});
    try {
        j_product(z, 0.25); // 1/rho_1^2
        FAIL("expected NearPole");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NearPole);
    }
    try {
        inverse_j(z, 4.0); // 1/sigma_1^2
        FAIL("expected NearPole");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NearPole);
    }
    CHECK_NOTHROW(j_product(z, 0.25 * (1.0 + 1e-6)));
}

TEST_CASE("resolvent at a true eigenvalue reciprocal raises SingularSystem") {
    // Gamma Gamma* of the constant symbol 1 has eigenvalue 1, so x = 1 makes
    // I - x Gamma Gamma* exactly singular.
    try {
        j_resolvent(SymbolCoefficients{{{1.0, 0.0}}}, 1.0, 8);
        FAIL("expected SingularSystem");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularSystem);
    }
}

TEST_CASE("resolvent form: zero and constant symbols") {
    CHECK(j_resolvent(SymbolCoefficients{}, -3.0, 8) == doctest::Approx(1.0));
    const Complex a{1.5, -0.5};
    const SymbolCoefficients c{{a}};
    for (double x : {-2.0, -0.7, 0.1}) {
        const double expect = 1.0 + x * std::norm(a) / (1.0 - x * std::norm(a));
        CHECK(j_resolvent(c, x, 12) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("resolvent form matches the product form for the geometric symbol") {
    const SymbolCoefficients c = geometric_symbol({1.875, 0}, {0.25, 0}, 128);
    const ZetaSequence z = validate_zeta({{2, 0}, {0.5, 0}});
    CHECK(j_resolvent(c, -1.0, 64) == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("three-way agreement, reciprocal, and trace residual on random spectra") {
    std::mt19937 rng(67);
    int done = 0;
    while (done < 8) {
        testsupport::ZetaGenOptions opts;
        opts.min_ratio = 0.35;
        opts.max_ratio = 0.8;
        opts.odd = done % 3 == 0;
        const ZetaSequence z = random_zeta(rng, 1 + done % 6, opts);
        const auto bounded = testsupport::reconstruct_bounded(z);
        if (!bounded) continue;
        ++done;
        const SymbolCoefficients& c = *bounded;
        const auto grid = genfun_grid(z, &c, -5.0, -0.01, 32, c.size());
        REQUIRE(grid.size() == 32);
        for (const auto& s : grid) {
            CHECK(std::abs(s.j_product - s.j_partial_fraction) <
                  1e-8 * std::max(1.0, std::abs(s.j_product)));
            CHECK(std::abs(s.j_product - s.j_resolvent.value()) <
                  1e-8 * std::max(1.0, std::abs(s.j_product)));
            CHECK(s.product_inverse_residual < 1e-10);
            CHECK(s.trace_residual < 1e-10);
        }
    }
}

TEST_CASE("J tends to prod (sigma/rho)^2 = 1 - sum nu^2 as x -> -infinity") {
    std::mt19937 rng(71);
    for (int rep = 0; rep < 8; ++rep) {
        testsupport::ZetaGenOptions opts;
        opts.min_ratio = 0.4; // moduli stay well away from 0 so the limit is clean
        const ZetaSequence z = random_zeta(rng, 1 + rep % 6, opts);
        const WeightTable w = compute_weights(z);
        const double limit = 1.0 - w.sum_nu_sq();
        CHECK(j_product(z, -1e8) == doctest::Approx(limit).epsilon(1e-6));
    }
}

TEST_CASE("finite-difference fallback agrees with the analytic derivative") {
    std::mt19937 rng(73);
    for (int rep = 0; rep < 6; ++rep) {
        const ZetaSequence z = random_zeta(rng, 1 + rep % 5);
        for (double x : {-4.0, -1.3, -0.2}) {
            CHECK(j_derivative_fd_residual(z, x) < 1e-6);
        }
    }
}

TEST_CASE("grid skips pole-adjacent points instead of failing") {
    const ZetaSequence z = validate_zeta({{2, 0}, {0.5, 0}});
    // 0.25 = 1/rho_1^2 sits inside [0.2, 0.3]
    const auto grid = genfun_grid(z, nullptr, 0.2, 0.3, 11, 0);
    CHECK(grid.size() < 11);
    CHECK(grid.size() >= 9);
}
