#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kmslab/measures.hpp"

using namespace kmslab;

static SplitMix64 rng(0xc0f0001u);

namespace {

Potential pot_of(const char* beta, const char* theta) {
    return Potential(Real(beta), parse_scalar(theta));
}

Cylinder random_omega_cylinder(int max_constraints, long long window) {
    Cylinder c;
    int k = 1 + static_cast<int>(rng.below(max_constraints));
    for (int i = 0; i < k; ++i) c.require(rng.range(-window, window), rng.coin() ? 1 : 0);
    return c;
}

}  // namespace

TEST_CASE("existence gate") {
    CHECK(existence_gate(pot_of("1", "0.5")) == ExistenceResult::kms_exists);
    CHECK(existence_gate(pot_of("-1", "0.5")) == ExistenceResult::no_kms);
    CHECK(existence_gate(pot_of("1", "-0.2")) == ExistenceResult::no_kms);
    CHECK(existence_gate(pot_of("2", "0")) == ExistenceResult::kms_exists);
    CHECK(existence_gate(pot_of("0", "0.5")) == ExistenceResult::tracial_regime);
}

TEST_CASE("orbit measure on the all-ones fixed point at theta 0") {
    auto m = orbit_measure(BiSeq::constant(1), pot_of("1", "0"), Real("1e-12"));
    CHECK(m.periodic);
    CHECK(m.weights.size() == 1);
    CHECK(m.weights[0] == Real(1));
    Cylinder everything;
    CHECK(measure_of_cylinder(ConformalMeasure(m), everything) == Real(1));
}

TEST_CASE("periodic obstruction") {
    CHECK_THROWS_AS(orbit_measure(BiSeq::constant(1), pot_of("1", "0.5"), Real("1e-12")),
                    PeriodicObstruction);
}

TEST_CASE("gate is a precondition") {
    CHECK_THROWS_AS(orbit_measure(BiSeq::step(), pot_of("-1", "1"), Real("1e-12")),
                    std::invalid_argument);
}

TEST_CASE("divergent orbit series") {
    // at theta = 0 the step point has vanishing rate on the right side
    CHECK_THROWS_AS(orbit_measure(BiSeq::step(), pot_of("1", "0"), Real("1e-12")),
                    DivergentSeries);
}

TEST_CASE("orbit measure on the step point matches direct summation") {
    Potential pot = pot_of("1", "1");
    auto m = orbit_measure(BiSeq::step(), pot, Real("1e-14"));
    CHECK_FALSE(m.periodic);

    // independent oracle: sum exp(-S_n) with S_n from its definition
    Real z_direct(0);
    for (long long n = -120; n <= 120; ++n)
        z_direct += exp(-birkhoff(BiSeq::step(), n, pot));
    Cylinder bit0_at_0;
    bit0_at_0.require(0, 1).require(-1, 0);  // pins the atom n = 0
    Real w0 = measure_of_cylinder(ConformalMeasure(m), bit0_at_0);
    CHECK(to_double(abs(w0 - Real(1) / z_direct)) < 1e-13);
    // frozen value tanh(1/2)
    CHECK(to_double(abs(w0 - Real("0.46211715726000975850231848364367254873"))) < 1e-13);
}

TEST_CASE("atomic weights satisfy the one-step cocycle relation") {
    Potential pot = pot_of("1.3", "0.7");
    auto m = orbit_measure(BiSeq::parse("(1000)* . (1)*"), pot, Real("1e-12"));
    for (long long n = m.n_min; n + 1 <= m.n_max; ++n) {
        Real lhs = log(m.weights[static_cast<std::size_t>(n + 1 - m.n_min)]);
        Real rhs = log(m.weights[static_cast<std::size_t>(n - m.n_min)]) -
                   pot.beta * chi(shift(m.base, n), pot);
        CHECK(to_double(abs(lhs - rhs)) < 1e-14);
    }
}

TEST_CASE("certified tail bounds the truncation error") {
    Potential pot = pot_of("1.3", "0.7");
    BiSeq x = BiSeq::parse("(1000)* . (1)*");
    auto coarse = orbit_measure(x, pot, Real("1e-6"));
    auto fine = orbit_measure(x, pot, Real("1e-18"));
    for (int i = 0; i < 50; ++i) {
        Cylinder c = random_omega_cylinder(4, 6);
        Real a = measure_of_cylinder(ConformalMeasure(coarse), c);
        Real b = measure_of_cylinder(ConformalMeasure(fine), c);
        CHECK(abs(a - b) <= coarse.tail_bound);
    }
}

TEST_CASE("dyadic product cylinder masses") {
    DyadicProductMeasure mu{Rational(1, 4)};
    Cylinder c0;
    c0.require(1, 0);
    CHECK(mu.mass_exact(c0) == Rational(3, 4));
    Cylinder c;
    c.require(1, 1).require(2, 0);
    CHECK(mu.mass_exact(c) == Rational(3, 16));
    Cylinder everything;
    CHECK(mu.mass_exact(everything) == 1);
    Cylinder conflict;
    conflict.require(1, 1).require(1, 0);
    CHECK(mu.mass_exact(conflict) == 0);
}

TEST_CASE("lift slice masses and totals") {
    Potential pot = pot_of("1.3", "0.7");
    auto inner = orbit_measure(BiSeq::parse("(1000)* . (1)*"), pot, Real("1e-14"));
    ConformalMeasure lifted = lift(ConformalMeasure(inner), pot);

    Real q = exp(-pot.beta * (Real(1) + pot.theta_value()));
    Cylinder slice0;
    slice0.at_level(0);
    CHECK(to_double(abs(measure_of_cylinder(lifted, slice0) - (Real(1) - q))) < 1e-12);

    Cylinder total;  // level-free: mass of the nonnegative-level half
    CHECK(to_double(abs(measure_of_cylinder(lifted, total) - Real(1))) < 1e-12);

    Cylinder e5 = random_omega_cylinder(3, 4);
    Cylinder at3 = e5, at4 = e5;
    at3.at_level(3);
    at4.at_level(4);
    Real m3 = measure_of_cylinder(lifted, at3);
    Real m4 = measure_of_cylinder(lifted, at4);
    if (m4 > 0) CHECK(to_double(abs(m3 / m4 - Real(1) / q)) < 1e-10);
}

TEST_CASE("lift requires a positive rate") {
    DyadicProductMeasure mu{Rational(1, 4)};
    CHECK_THROWS_AS(lift(ConformalMeasure(mu), pot_of("-1", "0.5")), std::invalid_argument);
}

TEST_CASE("lifted translation identities") {
    Potential pot = pot_of("1.3", "0.7");
    auto inner = orbit_measure(BiSeq::parse("(1000)* . (1)*"), pot, Real("1e-16"));
    ConformalMeasure lifted = lift(ConformalMeasure(inner), pot);
    const Real e_b = exp(-pot.beta);
    const Real e_bt = exp(-pot.beta * (Real(1) + pot.theta_value()));

    for (int i = 0; i < 100; ++i) {
        Cylinder c = random_omega_cylinder(3, 5);
        c.at_level(rng.range(0, 4));
        Real base = measure_of_cylinder(lifted, c);
        Real v1 = lifted_translate_mass(lifted, c, kV1);
        Real v2 = lifted_translate_mass(lifted, c, kV2);
        CHECK(to_double(abs(v1 - e_b * base)) < 1e-10);
        CHECK(to_double(abs(v2 - e_bt * base)) < 1e-10);
    }
}

TEST_CASE("conformality sweep passes for orbit measures") {
    Potential pot = pot_of("1.3", "0.7");
    for (const char* desc : {"(0)* . (1)*", "(1000)* . (1)*", "(10000000)* . (1)*"}) {
        auto m = orbit_measure(BiSeq::parse(desc), pot, Real("1e-13"));
        auto rep = check_conformal(ConformalMeasure(m), pot, 6, Real("1e-9"));
        CHECK(rep.pass);
        CHECK(to_double(rep.max_deviation) < 1e-9);
        CHECK(rep.certified_tail > 0);
    }
}

TEST_CASE("bernoulli conformality fails for the odometer measure") {
    DyadicProductMeasure mu{Rational(1, 4)};
    Real beta = mu.beta();  // e^beta = 3
    Potential pot(beta, parse_scalar("1"));
    auto rep = check_conformal(ConformalMeasure(mu), pot, 2, Real("1e-9"));
    CHECK_FALSE(rep.pass);
    CHECK(to_double(rep.max_deviation) > 1e-3);

    // the spec example on C = {x_1 = 0}: both sides computed by hand
    Cylinder c;
    c.require(1, 0);
    Real lhs = measure_of_cylinder(ConformalMeasure(mu), c.shifted(1));
    Cylinder c0 = c, c1 = c;
    c0.require(-1, 0);
    c1.require(-1, 1);
    Real rhs = exp(-pot.beta) * measure_of_cylinder(ConformalMeasure(mu), c0) +
               exp(pot.beta * pot.theta_value()) * measure_of_cylinder(ConformalMeasure(mu), c1);
    CHECK(to_double(abs(lhs - rhs)) > 1e-3);
}

TEST_CASE("theta zero concentration") {
    Potential pot = pot_of("1", "0");
    auto point_mass = orbit_measure(BiSeq::constant(1), pot, Real("1e-12"));
    CHECK(theta_zero_concentration(ConformalMeasure(point_mass), Real("1e-12")));

    DyadicProductMeasure mu{Rational(1, 4)};
    CHECK_FALSE(theta_zero_concentration(ConformalMeasure(mu), Real("1e-12")));
}

TEST_CASE("cylinder depth cap raises") {
    Potential pot = pot_of("1.3", "0.7");
    auto m = orbit_measure(BiSeq::step(), pot, Real("1e-12"));
    Cylinder far;
    far.require(40, 1);
    CHECK_THROWS_AS(measure_of_cylinder(ConformalMeasure(m), far), UnsupportedCylinder);
}
