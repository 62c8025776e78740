#include <doctest.h>

#include "fixtures.hpp"
#include "shlat/probability.hpp"

using namespace shlat;

TEST_SUITE("probability") {

TEST_CASE("space validation") {
    CHECK_THROWS_AS(new_space({}), EmptySupport);
    CHECK_THROWS_AS(new_space({make_rational(1, 2)}), SumNotOne);
    CHECK_THROWS_AS(new_space({make_rational(3, 2), make_rational(-1, 2)}), NegativeMass);
    SpacePtr s = new_space({make_rational(1, 3), make_rational(2, 3)});
    CHECK(s->size() == 2);
    CHECK(s->mass(0) == make_rational(1, 3));
}

TEST_CASE("support and restriction") {
    SpacePtr s = new_space({make_rational(1, 2), Rational(0), make_rational(1, 2)});
    CHECK(s->support() == std::vector<std::size_t>{0, 2});
    SpacePtr r = restrict_support(s);
    CHECK(r->size() == 2);
    CHECK(r->mass(1) == make_rational(1, 2));
    // Already restricted: same object back.
    CHECK(restrict_support(r) == r);
}

TEST_CASE("variable labeling") {
    fixtures::TwoBits f;
    CHECK_THROWS_AS(rv(f.space, {"a", "b"}), LengthMismatch);

    CHECK(f.x1.value_count() == 2);
    CHECK(f.x1.values() == std::vector<std::string>{"0", "1"});
    CHECK(f.x1.value_masses()[0] == make_rational(1, 2));
    CHECK(f.x.value_count() == 4);
    CHECK(f.x1.is_deterministic() == false);

    // First-occurrence order of a.s. values.
    RandomVariable v = rv(f.space, {"b", "a", "b", "a"});
    CHECK(v.values() == std::vector<std::string>{"b", "a"});
    CHECK(v.value_index(0) == 0);
    CHECK(v.value_index(1) == 1);
}

TEST_CASE("zero-mass outcomes carry no value") {
    SpacePtr s = new_space({make_rational(1, 2), Rational(0), make_rational(1, 2)});
    RandomVariable v = rv(s, {"a", "ghost", "b"});
    CHECK(v.value_count() == 2);
    CHECK(v.value_index(1) == -1);
    CHECK(v.values() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("joint and marginal") {
    fixtures::TwoBits f;
    JointDistribution j = joint(f.x1, f.x2);
    CHECK(j.rows() == 2);
    CHECK(j.cols() == 2);
    Rational total = 0;
    for (const auto& row : j.entries)
        for (const auto& cell : row) {
            CHECK(cell == make_rational(1, 4));
            total += cell;
        }
    CHECK(total == 1);

    auto m = marginal(f.x1);
    CHECK(m.size() == 2);
    CHECK(m.at("0") == make_rational(1, 2));

    SpacePtr other = new_space({make_rational(1, 2), make_rational(1, 2)});
    CHECK_THROWS_AS(joint(f.x1, rv(other, {"0", "1"})), SpaceMismatch);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == make_rational(3, 4));
    CHECK(parse_rational("-2/6") == make_rational(-1, 3));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(!parse_rational("0.5").has_value());
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("x").has_value());
    CHECK(to_string(make_rational(2, 4)) == "1/2");
}

}
