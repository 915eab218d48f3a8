#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "fuchscodec/takeuchi.hpp"

using namespace fuchscodec;

namespace {
double dist_mod_sign_to_identity(const UnimodularMap& m) {
    double dp = std::max({std::abs(m.a - 1), std::abs(m.b), std::abs(m.c),
                          std::abs(m.d - 1)});
    double dm = std::max({std::abs(m.a + 1), std::abs(m.b), std::abs(m.c),
                          std::abs(m.d + 1)});
    return std::min(dp, dm);
}
}  // namespace

TEST_CASE("registry rows carry the tabulated values") {
    REQUIRE(registry().size() == 7);

    const TraceTriple& t1 = registry_row("T1");
    CHECK(t1.x2 == QuadElement::integer(5));
    CHECK(t1.y2 == QuadElement::integer(12));
    CHECK(t1.z2_printed == QuadElement::integer(15));
    CHECK(t1.e == 2);
    CHECK(t1.a == QuadElement::integer(5));
    CHECK(t1.b == QuadElement::integer(-30));

    const TraceTriple& t4 = registry_row("T4");
    CHECK(t4.x2 == QuadElement(5, Rational(3), Rational(1)));
    CHECK(t4.y2 == QuadElement(5, Rational(6), Rational(2)));
    CHECK(t4.z2_printed == QuadElement(5, Rational(7), Rational(3)));
    CHECK(t4.e == 2);

    const TraceTriple& t7 = registry_row("T7");
    CHECK(t7.e == 6);
    CHECK(t7.a == QuadElement(3, Rational(24), Rational(6)));
    CHECK(t7.b == QuadElement(3, Rational(-93), Rational(-54)));

    CHECK_THROWS_AS(registry_row("T9"), std::out_of_range);
}

TEST_CASE("traces exceed two and radicands embed positively") {
    for (const TraceTriple& t : registry()) {
        CHECK(t.x2.embed() > 4.0);
        CHECK(t.y2.embed() > 4.0);
        CHECK(t.z2_printed.embed() > 0.0);
        CHECK(t.e >= 2);
    }
}

TEST_CASE("Fricke residuals: corrected z passes exactly, printed T2 fails") {
    for (const TraceTriple& t : registry()) {
        auto exact = fricke_residual_corrected_exact(t);
        REQUIRE(exact.has_value());
        CHECK(exact->is_zero());
        CHECK(std::abs(fricke_residual(t, ZReading::corrected)) < 1e-12);
        if (t.label == "T2") {
            CHECK(fricke_residual(t, ZReading::printed) ==
                  doctest::Approx(0.27750476932545877).epsilon(1e-9));
        } else {
            // every other printed z equals x^2 y^2 / 4 exactly
            CHECK(t.z2_printed == t.corrected_z2());
            CHECK(std::abs(fricke_residual(t, ZReading::printed)) < 1e-9);
        }
    }
}

TEST_CASE("synthesize(T2) matches the closed-form radicand values to 1e-12") {
    GroupPresentation g = synthesize(registry_row("T2"));
    CHECK(std::abs(g.alpha.a - 0.58822983538394742321) < 1e-12);
    CHECK(std::abs(g.alpha.b) < 1e-15);
    CHECK(std::abs(g.alpha.c) < 1e-15);
    CHECK(std::abs(g.alpha.d - 1.7000157758867897672) < 1e-12);
    CHECK(std::abs(g.beta.a - 1.9816788294587098082) < 1e-12);
    CHECK(std::abs(g.beta.b - (-1.7108626429742518264)) < 1e-12);
    CHECK(std::abs(g.beta.c - (-1.7108626429742518264)) < 1e-12);
    CHECK(std::abs(g.beta.d - 1.9816788294587098082) < 1e-12);
    CHECK(g.gamma.trace() == doctest::Approx(1.6180339887498948482).epsilon(1e-13));
}

TEST_CASE("synthesize(T1) closed forms") {
    GroupPresentation g = synthesize(registry_row("T1"));
    CHECK(g.alpha.a == doctest::Approx(0.6180339887498948482).epsilon(1e-14));
    CHECK(g.alpha.d == doctest::Approx(1.6180339887498948482).epsilon(1e-14));
    CHECK(g.beta.a == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(g.beta.b == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
    CHECK(g.gamma.trace() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("group relations hold for all seven rows") {
    for (const TraceTriple& t : registry()) {
        GroupPresentation g = synthesize(t);

        UnimodularMap rel = compose(
            g.alpha,
            compose(g.beta, compose(g.alpha.inverse(),
                                    compose(g.beta.inverse(), g.gamma))));
        CHECK(dist_mod_sign_to_identity(rel) < 1e-8);

        UnimodularMap pw = UnimodularMap::identity();
        for (int k = 0; k < g.e; ++k) pw = compose(pw, g.gamma);
        CHECK(dist_mod_sign_to_identity(pw) < 1e-8);

        CHECK(std::abs(g.gamma.trace() - 2 * std::cos(M_PI / g.e)) < 1e-12);
        CHECK(std::abs(compose(g.alpha, g.beta).trace() -
                       std::sqrt(t.corrected_z2().embed())) < 1e-10);

        for (const UnimodularMap& m : g.squared)
            CHECK(std::abs(m.det() - 1.0) < 1e-10);
    }
}

TEST_CASE("squared generators are the six listed words") {
    GroupPresentation g = synthesize(registry_row("T1"));
    CHECK(eq_mod_sign(g.squared[0], compose(g.alpha, g.alpha), 1e-12));
    CHECK(eq_mod_sign(g.squared[1], compose(g.beta, g.beta), 1e-12));
    CHECK(eq_mod_sign(g.squared[2], g.gamma, 1e-12));
    // conjugation preserves the trace
    CHECK(g.squared[3].trace() == doctest::Approx(g.gamma.trace()).epsilon(1e-10));
    CHECK(g.squared[4].trace() == doctest::Approx(g.gamma.trace()).epsilon(1e-10));
    CHECK(g.squared[5].trace() == doctest::Approx(g.gamma.trace()).epsilon(1e-10));
    // explicit word check for the conjugates
    CHECK(eq_mod_sign(g.squared[3],
                      compose(g.alpha, compose(g.gamma, g.alpha.inverse())), 1e-12));
    CHECK(eq_mod_sign(
        g.squared[5],
        compose(g.alpha, compose(g.beta, compose(g.gamma, compose(g.beta.inverse(),
                                                                  g.alpha.inverse())))),
        1e-12));
}

TEST_CASE("two_cos_pi_over covers the elliptic orders that live in quadratic fields") {
    CHECK(two_cos_pi_over(2, 0)->is_zero());
    CHECK(*two_cos_pi_over(3, 0) == QuadElement::integer(1));
    CHECK(two_cos_pi_over(4, 2)->embed() == doctest::Approx(std::sqrt(2.0)));
    CHECK(two_cos_pi_over(5, 5)->embed() ==
          doctest::Approx(1.6180339887498948482).epsilon(1e-15));
    CHECK(two_cos_pi_over(6, 3)->embed() == doctest::Approx(std::sqrt(3.0)));
    CHECK_FALSE(two_cos_pi_over(5, 3).has_value());  // golden ratio is not in Q(sqrt3)
    CHECK_FALSE(two_cos_pi_over(7, 5).has_value());  // degree-3 value
}

TEST_CASE("synthesize rejects an unrealizable triple") {
    TraceTriple broken = registry_row("T1");
    broken.x2 = QuadElement::integer(6);  // spoils the Fricke identity
    CHECK_THROWS_AS(synthesize(broken), std::domain_error);
}

TEST_CASE("printed T2 z2 is the lone registry/Fricke disagreement") {
    const TraceTriple& t2 = registry_row("T2");
    CHECK(t2.z2_printed == QuadElement(5, Rational(6), Rational(9, 2)));
    CHECK(t2.corrected_z2() == QuadElement(5, Rational(21, 2), Rational(9, 2)));
    CHECK_FALSE(t2.z2_printed == t2.corrected_z2());
}
