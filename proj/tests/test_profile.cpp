#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "yamabe/curvature.hpp"
#include "yamabe/named_functions.hpp"
#include "yamabe/profile.hpp"

using namespace yamabe;

namespace {

// bounded random profiles over one Q-parity class, log free
RadialProfile random_profile(SplitRng& rng, int terms = 4, bool half_powers = false) {
    std::vector<ProfileTerm> ts;
    for (int i = 0; i < terms; ++i) {
        int num = rng.small_int();
        if (num == 0) num = 1;
        Rational c(num, 1 + static_cast<int>(rng.next() % 7ull));
        int a = static_cast<int>(rng.next() % 3ull);
        int k = static_cast<int>(rng.next() % 3ull);
        int s = 8 + 2 * static_cast<int>(rng.next() % 5ull) + (half_powers ? 1 : 0);
        ts.push_back({c, a, k, s, 0});
    }
    return RadialProfile(ts);
}

}  // namespace

TEST_CASE("term algebra merges, multiplies and annihilates") {
    RadialProfile q12 = RadialProfile::q_pow(1);
    CHECK(q12 + q12 == q12.scaled(Rational(2)));
    // multiply adds exponents: rho^2 Q^-2 times t Q^-(3/2) equals rho^2 t Q^-(7/2)
    RadialProfile lhs = RadialProfile::term(Rational(1), 1, 0, 4) *
                        RadialProfile::term(Rational(1), 0, 1, 3);
    CHECK(lhs == RadialProfile::term(Rational(1), 1, 1, 7));
    CHECK(bubble(6).scaled(Rational(0)).is_zero());
}

TEST_CASE("rho powers reduce through Q = rho^2 + (1+t)^2") {
    // rho^2 Q^-1 == 1 - (1+t)^2 Q^-1 as functions
    RadialProfile a = RadialProfile::term(Rational(1), 1, 0, 2);
    RadialProfile b = RadialProfile::constant(Rational(1)) -
                      (RadialProfile::term(Rational(1), 0, 0, 2) +
                       RadialProfile::term(Rational(2), 0, 1, 2) +
                       RadialProfile::term(Rational(1), 0, 2, 2));
    CHECK(a == b);
    for (long double rho : {0.3L, 1.7L})
        for (long double t : {0.0L, 2.5L})
            CHECK(a.eval(rho, t) ==
                  doctest::Approx(static_cast<double>(rho * rho / (rho * rho + (1 + t) * (1 + t)))));
}

TEST_CASE("derivatives match the closed forms") {
    // d/dt Q^(-1/2) = -(1+t) Q^(-3/2)
    RadialProfile got = RadialProfile::q_pow(1).d_t();
    RadialProfile want =
        RadialProfile::term(Rational(-1), 0, 0, 3) + RadialProfile::term(Rational(-1), 0, 1, 3);
    CHECK(got == want);
    // (1/rho) d/drho of rho^2 Q^(-s/2) = 2 Q^(-s/2) - s rho^2 Q^(-s/2-1)
    for (int s : {3, 4, 7}) {
        RadialProfile lhs = RadialProfile::term(Rational(1), 1, 0, s).inv_rho_d_rho();
        RadialProfile rhs = RadialProfile::q_pow(s, Rational(2)) +
                            RadialProfile::term(Rational(-s), 1, 0, s + 2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("the n = 7 correction profile restricts and differentiates as displayed") {
    RadialProfile A = named::a_profile_7();
    // A at t = 0: 1/12 (1+rho^2)^(-5/2) + 5/6 (1+rho^2)^(-7/2)
    RadialProfile want0 =
        RadialProfile::q_pow(5, Rational(1, 12)) + RadialProfile::q_pow(7, Rational(5, 6));
    CHECK(A.restrict_boundary() == want0);
    // dA/dt at t = 0: -5/4 (1+rho^2)^(-7/2) - 35/6 (1+rho^2)^(-9/2)
    RadialProfile wantd =
        RadialProfile::q_pow(7, Rational(-5, 4)) + RadialProfile::q_pow(9, Rational(-35, 6));
    CHECK(A.d_t().restrict_boundary() == wantd);
    // restriction drops pure t terms
    CHECK(RadialProfile::term(Rational(1), 0, 1, 6).restrict_boundary().is_zero());
    CHECK(bubble(7).restrict_boundary() == RadialProfile::q_pow(5));
}

TEST_CASE("pointwise evaluation") {
    CHECK(bubble(6).eval(0.0L, 0.0L) == 1.0L);
    CHECK(RadialProfile::q_pow(1).eval(3.0L, 0.0L) ==
          doctest::Approx(0.31622776601683793320).epsilon(1e-15));
    // A(1,1) for n = 7 against direct substitution: Q = 5, 1 - t + t^2 = 1
    long double expect = std::pow(5.0L, -2.5L) / 12.0L + (5.0L / 6.0L) * std::pow(5.0L, -3.5L);
    CHECK(named::a_profile_7().eval(1.0L, 1.0L) == doctest::Approx((double)expect).epsilon(1e-17));
    CHECK_THROWS_AS(bubble(6).eval(1.0L, 1.0L, 128), std::domain_error);
    CHECK(bubble(6).eval(1.0L, 1.0L, 64) == bubble(6).eval(1.0L, 1.0L));
}

TEST_CASE("Leibniz rule holds exactly for d_t") {
    SplitRng rng(7);
    for (int i = 0; i < 50; ++i) {
        RadialProfile p = random_profile(rng);
        RadialProfile q = random_profile(rng);
        CHECK((p * q).d_t() == p.d_t() * q + p * q.d_t());
    }
}

TEST_CASE("d_t commutes with (1/rho) d_rho on random profiles") {
    SplitRng rng(8);
    for (int i = 0; i < 200; ++i) {
        RadialProfile p = random_profile(rng, 3, (i % 2) == 1);
        CHECK(p.d_t().inv_rho_d_rho() == p.inv_rho_d_rho().d_t());
    }
}

TEST_CASE("re-canonicalizing any result is a no-op") {
    SplitRng rng(9);
    for (int i = 0; i < 50; ++i) {
        RadialProfile p = random_profile(rng) * random_profile(rng);
        CHECK(RadialProfile(std::vector<ProfileTerm>(p.terms().begin(), p.terms().end())) == p);
    }
}

TEST_CASE("derivatives agree with central finite differences") {
    SplitRng rng(10);
    for (int i = 0; i < 20; ++i) {
        RadialProfile p = random_profile(rng, 3, (i % 2) == 1);
        long double rho = 0.4L + 0.13L * (i % 7);
        long double t = 0.3L + 0.11L * (i % 5);
        const long double h = 1e-5L;
        long double fd_t = (p.eval(rho, t + h) - p.eval(rho, t - h)) / (2 * h);
        long double ex_t = p.d_t().eval(rho, t);
        CHECK(std::fabs(fd_t - ex_t) <= 1e-6L * std::max(1.0L, std::fabs(ex_t)));
        long double fd_r = (p.eval(rho + h, t) - p.eval(rho - h, t)) / (2 * h);
        long double ex_r = rho * p.inv_rho_d_rho().eval(rho, t);
        CHECK(std::fabs(fd_r - ex_r) <= 1e-6L * std::max(1.0L, std::fabs(ex_r)));
    }
}

TEST_CASE("harmonic-factor Laplacian matches a coordinate finite-difference Laplacian") {
    // Concrete tensors provide the factor: a trace-free symmetric matrix for
    // degree 2, a totally trace-free symmetric 4-tensor for degree 4. The
    // full function of (y_1..y_n) is differenced coordinate by coordinate.
    for (int n : {6, 7}) {
        ConcreteCurvatureSample s2(n, 21);
        HarmonicQuarticSample s4(n, 22);
        SplitRng rng(23);
        RadialProfile B = named::phitilde1_radial(n, Rational(0), Rational(0), Rational(0));
        RadialProfile lap2 = laplacian_harmonic(B, HarmonicFactor::rn_pair, n);
        RadialProfile lap4 = laplacian_harmonic(B, HarmonicFactor::riem_quad, n);
        int d = n - 1;
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<long double> y(d);
            for (auto& v : y) v = 0.2L + 0.12L * static_cast<long double>(rng.next() % 14ull);
            long double t = 0.25L + 0.1L * static_cast<long double>(rng.next() % 12ull);
            auto rho_of = [&](const std::vector<long double>& yb) {
                long double r2 = 0;
                for (auto v : yb) r2 += v * v;
                return std::sqrt(r2);
            };
            auto h2 = [&](const std::vector<long double>& yb) {
                long double acc = 0;
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j)
                        acc += s2.rn(i, j).to_long_double() * yb[i] * yb[j];
                return acc;
            };
            auto f2 = [&](const std::vector<long double>& yb, long double tt) {
                return h2(yb) * B.eval(rho_of(yb), tt);
            };
            auto f4 = [&](const std::vector<long double>& yb, long double tt) {
                return s4.eval(yb) * B.eval(rho_of(yb), tt);
            };
            const long double h = 1e-4L;
            auto fd_lap = [&](auto&& f) {
                long double acc = 0, c0 = f(y, t);
                for (int i = 0; i < d; ++i) {
                    auto yp = y, ym = y;
                    yp[i] += h;
                    ym[i] -= h;
                    acc += (f(yp, t) - 2 * c0 + f(ym, t)) / (h * h);
                }
                acc += (f(y, t + h) - 2 * c0 + f(y, t - h)) / (h * h);
                return acc;
            };
            long double rho = rho_of(y);
            long double ex2 = h2(y) * lap2.eval(rho, t);
            long double got2 = fd_lap(f2);
            CHECK(std::fabs(got2 - ex2) <= 1e-5L * std::max(1.0L, std::fabs(ex2)));
            long double ex4 = s4.eval(y) * lap4.eval(rho, t);
            long double got4 = fd_lap(f4);
            CHECK(std::fabs(got4 - ex4) <= 1e-5L * std::max(1.0L, std::fabs(ex4)));
        }
    }
}

TEST_CASE("the bubble is harmonic and a constant has empty Laplacian") {
    for (int n : {5, 6, 7, 8}) CHECK(laplacian_harmonic(bubble(n), HarmonicFactor::scalar, n).is_zero());
    CHECK(laplacian_harmonic(RadialProfile::constant(Rational(3)), HarmonicFactor::scalar, 7)
              .is_zero());
}

TEST_CASE("profile serialization is stable") {
    RadialProfile A = named::a_profile_7();
    CHECK(A.to_string() ==
          "1/12 * Q^(-5/2) + 5/6 * Q^(-7/2) + -5/6 * t^1 * Q^(-7/2) + 5/6 * t^2 * Q^(-7/2)");
    CHECK(RadialProfile::zero().to_string() == "0");
    RadialProfile logp = RadialProfile::term(Rational(-1, 12), 0, 0, 0, 1);
    CHECK(logp.to_string() == "-1/12 * logQ^1");
}
