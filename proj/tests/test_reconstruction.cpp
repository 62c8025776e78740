#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "shlat/reconstruction.hpp"

using namespace shlat;

TEST_SUITE("reconstruction") {

TEST_CASE("two independent bits rebuild the pair") {
    fixtures::TwoBits f;
    ReconstructionReport r = analyze(f.x, {f.x1, f.x2});
    CHECK(r.n == 2);
    CHECK(r.sumExpr.equals_rational(1));  // exactly n - 1
    CHECK(r.mutuallyIndependent);
    CHECK(r.sufficientApplies);
    CHECK(r.groundTruthPerfect);
    CHECK(r.deltaExpr.num.is_zero());
    CHECK(r.consistent);
    CHECK(certify(r).verdict == "boundary");
    CHECK(certify(r).rhoSum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("adding the parity bit keeps reconstruction but breaks independence") {
    fixtures::TwoBits f;
    ReconstructionReport r = analyze(f.x, {f.x1, f.x2, f.x3});
    CHECK(r.sumExpr.equals_rational(make_rational(3, 2)));
    CHECK(!r.mutuallyIndependent);
    // Pairwise independence holds throughout.
    CHECK(mutually_independent({f.x1, f.x2}));
    CHECK(mutually_independent({f.x1, f.x3}));
    CHECK(mutually_independent({f.x2, f.x3}));
    CHECK(!mutually_independent({f.x1, f.x2, f.x3}));
    CHECK(r.groundTruthPerfect);
    CHECK(r.consistent);
}

TEST_CASE("divisor components satisfy the bound yet fail") {
    fixtures::Divisors f;
    ReconstructionReport r = analyze(f.x, {f.x1, f.x2});
    CHECK(r.sumDistances ==
          doctest::Approx(std::log2(6.0) / std::log2(12.0)).epsilon(1e-9));
    CHECK(r.necessaryHolds);
    CHECK(!r.mutuallyIndependent);
    CHECK(!r.groundTruthPerfect);
    CHECK(r.delta > 0.0);
    CHECK(r.consistent);
    CHECK(certify(r).verdict == "none");

    // Scaling the support drives the sum toward zero; the verdict stays.
    double previous = r.sumDistances;
    for (unsigned long m : {10ul, 100ul}) {
        fixtures::Divisors g(m);
        ReconstructionReport s = analyze(g.x, {g.x1, g.x2});
        CHECK(s.sumDistances ==
              doctest::Approx(std::log2(6.0) / std::log2(12.0 * double(m))).epsilon(1e-9));
        CHECK(s.sumDistances < previous);
        CHECK(!s.groundTruthPerfect);
        CHECK(s.consistent);
        previous = s.sumDistances;
    }
}

TEST_CASE("component validation") {
    fixtures::TwoBits f;
    CHECK(validate_components(f.x, {f.x1, f.x3}));
    CHECK(!validate_components(f.x1, {f.x}));
    CHECK_THROWS_AS(analyze(f.x1, {f.x}), ComponentNotDerived);
    CHECK_THROWS_AS(analyze(f.x, {}), BadParameters);
}

TEST_CASE("impossibility certificates") {
    // Two copies of the same bit cannot rebuild two fresh bits.
    fixtures::TwoBits f;
    ReconstructionReport r = analyze(f.x, {f.x1, f.x1});
    CHECK(impossibility_margin(r) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(certify(r).verdict == "boundary");

    ReconstructionReport s = analyze(f.x, {f.x1, f.x1, f.x1});
    // sum = 3/2 > n - 1 = 2 is false; use three bits against one generator.
    CHECK(s.sumDistances == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(certify(s).verdict == "none");

    SpacePtr sp = new_space(std::vector<Rational>(4, make_rational(1, 4)));
    RandomVariable x = one(sp);
    RandomVariable half = rv(sp, {"0", "0", "1", "1"});
    ReconstructionReport t = analyze(x, {half});
    // n = 1, sum = 1/2 > 0: perfect reconstruction from half a variable fails.
    CHECK(certify(t).verdict == "impossible");
    CHECK(!t.groundTruthPerfect);
    CHECK(t.consistent);
}

TEST_CASE("short soundness sweep is clean and reproducible") {
    SweepResult a = soundness_sweep(500, 42);
    CHECK(a.trials == 500);
    CHECK(a.failures == 0);
    CHECK(a.perfectCount > 0);
    CHECK(a.independentCount > 0);
    SweepResult b = soundness_sweep(500, 42);
    CHECK(a.perfectCount == b.perfectCount);
    CHECK(a.independentCount == b.independentCount);
}

}
