#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yamabe/verification.hpp"

using namespace yamabe;
using namespace yamabe::suite;

TEST_CASE("catalog construction rejects excluded combinations") {
    CHECK_THROWS_AS(named::Phi0(6), std::domain_error);        // 1/(n-6) pole
    CHECK_THROWS_AS(named::BetaKL(6), std::domain_error);      // same pole
    CHECK_THROWS_AS(named::PhiTilde1(6, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(named::PhiTilde2(6, Rational(1)), std::domain_error);
    CHECK_NOTHROW(named::PhiTilde1(6));  // the a1 = 0 form extends to n = 6
    CHECK_NOTHROW(named::PhiTilde0(8));  // log branch replaces the power branch
    CHECK_THROWS_AS(named::build_named("nope", 7), std::invalid_argument);
    // PhiTilde0 at n = 8 carries a log, never a 1/(n-8) power
    NamedFunction f8 = named::PhiTilde0(8);
    bool has_log = false;
    for (const auto& t : f8.body[0].profile.terms()) has_log |= t.log_deg > 0;
    CHECK(has_log);
}

TEST_CASE("PDE identities hold exactly across the catalog") {
    for (auto& r : pde_suite()) {
        CAPTURE(r.lemma_id);
        CAPTURE(r.n);
        CHECK(r.status == "pass");
    }
}

TEST_CASE("a wrong right-hand side is detected") {
    NamedFunction f = named::Phi0(7);
    f.body[0].neg_laplacian = RadialProfile::q_pow(7 - 4, Rational(2));
    VerificationReport r = verify_pde(f);
    CHECK(r.status == "fail");
}

TEST_CASE("internal consistency chains reproduce the final constants") {
    // n = 7: the stated lower bound plus twice the correction bound
    auto r7 = coefficient_suite_7();
    REQUIRE(r7.size() == 5);
    for (auto& r : r7) CHECK(r.status == "pass");
    // n = 8 at b = -2: quadratics, bracket, the flagged intermediate, final
    auto r8 = coefficient_suite_8(Rational(-2));
    REQUIRE(r8.size() == 6);
    int discrepancies = 0;
    for (auto& r : r8) {
        CHECK(r.status != "fail");
        if (r.status == "discrepancy") {
            ++discrepancies;
            CHECK(r.lemma_id == "stimafinalegamma8");
            CHECK(r.notes.find("121/13608") != std::string::npos);
            CHECK(r.notes.find("121/13601") != std::string::npos);
        }
    }
    CHECK(discrepancies == 1);
    // n = 6 log suite
    for (auto& r : coefficient_suite_6({Rational(1, 100), Rational(1, 1000),
                                        Rational(1, 10000)})) {
        CAPTURE(r.lemma_id);
        CHECK(r.status == "pass");
    }
}

TEST_CASE("the n = 8 suite away from b = -2 stays internally consistent") {
    auto r8 = coefficient_suite_8(Rational(0));
    for (auto& r : r8) {
        CAPTURE(r.lemma_id);
        CHECK(r.status != "fail");
    }
}

TEST_CASE("scan-b reports the published grid signs, vertex and roots") {
    auto sb = scan_b({Rational(-3), Rational(-2), Rational(-1), Rational(0)});
    REQUIRE(sb.rows.size() == 4);
    CHECK(sb.rows[0].sign == 1);
    CHECK(sb.rows[1].sign == 1);
    CHECK(sb.rows[2].sign == 1);
    CHECK(sb.rows[3].sign == -1);
    CHECK(sb.rows[1].value == Rational(121, 432));
    CHECK(sb.vertex_b == Rational(-50, 21));
    CHECK(sb.vertex_value == Rational(625, 1008) - Rational(35, 108));
    CHECK(sb.vertex_value.sign() > 0);
    CHECK(sb.has_roots);
    CHECK(sb.root_lo < -4.0L);
    CHECK(sb.root_hi > -0.8L);
    CHECK_THROWS_AS(scan_b({}), std::invalid_argument);
}

TEST_CASE("flat-case surface identity") {
    for (int n : {6, 7, 8}) {
        // the critical coefficient vanishes exactly
        Rational p(n, n - 2);
        CHECK((Rational(n - 1) / (p + Rational(1)) - Rational(n - 2, 2)).is_zero());
        for (auto r : {Rational(1), Rational(2)}) {
            auto rep = pohozaev_flat_check({n, r});
            CAPTURE(n);
            CHECK(rep.status == "pass");
            CHECK(rep.rel_err <= 1e-8L);
        }
    }
}

TEST_CASE("structural suite passes for every dimension in scope") {
    for (int n : {6, 7, 8}) {
        for (auto& r : structural_suite(n)) {
            CAPTURE(r.lemma_id);
            CAPTURE(n);
            CHECK(r.status == "pass");
        }
    }
}

TEST_CASE("symmetry oracle over random samples") {
    for (int n : {6, 7, 8}) {
        auto o = sym_oracle(n, 4, 555);
        CHECK(o.pass);
        CHECK(o.worst_rel <= 1e-8L);
        CHECK(o.worst_abs_on_zero <= 1e-9L);
    }
}

TEST_CASE("decay fits sit on the predicted exponents") {
    auto r = decay_fit_report(7);
    CHECK(r.status == "pass");
    CHECK(std::fabs(r.computed_numeric - (-3.0L)) <= 0.05L);
}
