#include <doctest.h>

#include "fixtures.hpp"
#include "shlat/geometry.hpp"
#include "shlat/metrics.hpp"

using namespace shlat;

TEST_SUITE("geometry") {

TEST_CASE("variable sets deduplicate by equivalence") {
    fixtures::TwoBits f;
    VariableSet s;
    CHECK(s.add(f.x1));
    CHECK(!s.add(rv(f.space, {"a", "a", "b", "b"})));  // same class as x1
    CHECK(s.add(f.x2));
    CHECK(s.size() == 2);
    CHECK(s.contains(f.x1));
    CHECK(!s.contains(f.x));
}

TEST_CASE("segments have at most three points") {
    fixtures::TwoBits f;
    CHECK(segment(f.x1, f.x2).size() == 3);
    CHECK(segment(f.x1, f.x).size() == 2);   // x1 v x == x
    CHECK(segment(f.x1, f.x1).size() == 1);

    // Segment endpoints and midpoint are mutually aligned.
    VariableSet seg = segment(f.x1, f.x2);
    RandomVariable mid = join(f.x1, f.x2);
    CHECK(approx_eq(rajski_distance(f.x1, mid) + rajski_distance(mid, f.x2),
                    rajski_distance(f.x1, f.x2)));
}

TEST_CASE("convex envelope closes under joins") {
    fixtures::TwoBits f;
    VariableSet env = convex_envelope({f.x1, f.x2, f.x3});
    // Three generators, three pairwise joins all equivalent to X.
    CHECK(env.size() == 4);
    CHECK(env.contains(f.x));
    CHECK(is_convex(env));

    VariableSet pair = convex_envelope({f.x1, f.x2});
    CHECK(pair.size() == 3);
    CHECK(is_convex(pair));

    CHECK_THROWS_AS(convex_envelope(std::vector<RandomVariable>(11, f.x1)),
                    TooManyGenerators);
}

TEST_CASE("generated sublattice enumerates quotients") {
    SpacePtr s = new_space(std::vector<Rational>(3, make_rational(1, 3)));
    RandomVariable x = rv(s, {"a", "b", "c"});
    VariableSet sub = generated_sublattice(x);
    CHECK(sub.size() == 5);  // partitions of a 3-element set
    CHECK(sub.contains(x));
    CHECK(sub.contains(zero(s)));
    for (const auto& m : sub.members()) CHECK(is_leq(m, x));
    // Closure under join and meet.
    for (const auto& a : sub.members())
        for (const auto& b : sub.members()) {
            CHECK(sub.contains(join(a, b)));
            CHECK(sub.contains(meet(a, b)));
        }

    SpacePtr big = new_space(std::vector<Rational>(9, make_rational(1, 9)));
    CHECK_THROWS_AS(generated_sublattice(one(big)), SupportTooLarge);
}

TEST_CASE("four-value sublattice has fifteen classes") {
    fixtures::TwoBits f;
    VariableSet sub = generated_sublattice(f.x);
    CHECK(sub.size() == 15);  // Bell(4)
    CHECK(sub.contains(f.x1));
    CHECK(sub.contains(f.x3));
}

}
