#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "yamabe/moments.hpp"
#include "yamabe/named_functions.hpp"
#include "yamabe/quadrature.hpp"

using namespace yamabe;

namespace {
const long double kPi = 3.14159265358979323846264338327950288L;
}

TEST_CASE("validation set: integrands with Beta/Gamma closed forms") {
    // int_0^inf s^a (1+s^2)^-m ds = i_numeric, across a spread of decay rates
    struct Item {
        int tm, a;
    };
    std::vector<Item> items = {{4, 0},  {4, 1},  {6, 2},  {7, 3},  {10, 5},
                               {12, 9}, {13, 4}, {14, 9}, {16, 10}, {9, 0}};
    for (auto it : items) {
        ISymbol sym{it.tm, it.a};
        REQUIRE(sym.convergent());
        auto q = integrate_halfline([&](long double s) {
            return std::pow(s, (long double)it.a) *
                   std::pow(1 + s * s, -0.5L * it.tm);
        });
        long double truth = i_numeric(sym);
        CHECK(std::fabs(q.value - truth) <= std::max(q.error_bound, 1e-15L * truth));
        CHECK(std::fabs(q.value - truth) <= 1e-10L * truth);
    }
}

TEST_CASE("two-dimensional quadrant moments against the exact engine") {
    // t-factorable integrand: rho^4 t^2 Q^(-15/2) over R^7_+
    RadialProfile p = RadialProfile::term(Rational(1), 2, 1, 15).times_t(1);
    MomentValue exact = halfspace_moment(p, 0, 7);
    auto q = integrate_quadrant([&](long double rho, long double t) { return p.eval(rho, t); },
                                5, QuadratureSpec{});
    CHECK(std::fabs(q.value * omega_numeric(7) - exact.numeric()) <= 1e-9L * exact.numeric());
}

TEST_CASE("determinism: identical spec and integrand give bit-identical values") {
    auto f = [](long double s) { return std::pow(1 + s * s, -3.0L) * (1 + std::sin(s) * 0); };
    auto a = integrate_halfline(f, QuadratureSpec{1e-11L, 9});
    auto b = integrate_halfline(f, QuadratureSpec{1e-11L, 9});
    CHECK(a.value == b.value);
    CHECK(a.error_bound == b.error_bound);
}

TEST_CASE("halving the tolerance never loosens the reported bound") {
    auto f = [](long double s) { return std::pow(1 + s * s, -2.0L); };
    long double prev = 1e10L;
    for (long double tol : {1e-4L, 5e-5L, 2.5e-5L, 1e-6L, 1e-8L, 1e-10L}) {
        auto q = integrate_halfline(f, QuadratureSpec{tol, 10});
        CHECK(q.error_bound <= prev + 1e-30L);
        prev = q.error_bound;
    }
}

TEST_CASE("refinement limit is an error, not a wrong answer") {
    // a nastily oscillatory integrand at an impossible tolerance and level cap
    auto f = [](long double s) { return std::cos(50 * s) * std::pow(1 + s * s, -1.5L); };
    CHECK_THROWS_AS(integrate_halfline(f, QuadratureSpec{1e-18L, 3}), std::runtime_error);
}

TEST_CASE("residual grids flag a perturbed coefficient but not an identity") {
    RadialProfile B = named::phitilde1_radial(7, Rational(0), Rational(0), Rational(0));
    RadialProfile lhs = laplacian_harmonic(B, HarmonicFactor::rn_pair, 7).scaled(Rational(-1));
    RadialProfile rhs = RadialProfile::term(Rational(35), 0, 2, 9);
    auto clean = residual_max([&](long double r, long double t) { return lhs.eval(r, t); },
                              [&](long double r, long double t) { return rhs.eval(r, t); });
    CHECK(clean.max_rel <= 1e-9L);
    // sanity harness: multiply one term by 1.01 and require the grid to see it
    RadialProfile Bbad = B + RadialProfile::q_pow(7 - 2, Rational(1, 1200));
    RadialProfile lhs_bad =
        laplacian_harmonic(Bbad, HarmonicFactor::rn_pair, 7).scaled(Rational(-1));
    auto dirty = residual_max([&](long double r, long double t) { return lhs_bad.eval(r, t); },
                              [&](long double r, long double t) { return rhs.eval(r, t); });
    CHECK(dirty.max_rel >= 1e-3L);
}

TEST_CASE("crosscheck pass/fail semantics") {
    QuadratureResult q{0.7853981633974483L, 1e-16L, 5};
    CHECK(crosscheck(kPi / 4, q, 1e-10L).pass);
    CHECK_FALSE(crosscheck(kPi / 4 * 1.001L, q, 1e-10L).pass);
    QuadratureResult z{1e-25L, 1e-26L, 5};
    CHECK(crosscheck(0.0L, z, 1e-10L).rel_err == 1.0L);  // scale set by the numeric side
}

TEST_CASE("interval and rectangle integrals") {
    auto q = integrate_interval([](long double x) { return std::sin(x); }, 0.0L, kPi);
    CHECK(std::fabs(q.value - 2.0L) <= 1e-14L);
    auto r = integrate_rectangle(
        [](long double x, long double y) { return std::exp(-x - y); }, 3.0L, 3.0L,
        QuadratureSpec{1e-10L, 9});
    long double truth = (1 - std::exp(-3.0L)) * (1 - std::exp(-3.0L));
    CHECK(std::fabs(r.value - truth) <= 1e-9L * truth);
}
