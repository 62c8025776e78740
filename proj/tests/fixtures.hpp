#ifndef SHLAT_TESTS_FIXTURES_HPP
#define SHLAT_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "shlat/probability.hpp"

namespace fixtures {

// Two fair bits. X is the pair, X1/X2 the bits, X3 their parity.
struct TwoBits {
    shlat::SpacePtr space;
    shlat::RandomVariable x, x1, x2, x3;

    TwoBits() {
        space = shlat::new_space(std::vector<shlat::Rational>(4, shlat::make_rational(1, 4)));
        x = shlat::rv(space, {"0", "1", "2", "3"});
        x1 = shlat::rv(space, {"0", "0", "1", "1"});
        x2 = shlat::rv(space, {"0", "1", "0", "1"});
        x3 = shlat::rv(space, {"0", "1", "1", "0"});
    }
};

// Non-distributive triple: X meets Z1 and Z2 trivially but not their join.
struct NonDistributive {
    shlat::SpacePtr space;
    shlat::RandomVariable x, z1, z2;

    NonDistributive() {
        space = shlat::new_space(std::vector<shlat::Rational>(4, shlat::make_rational(1, 4)));
        x = shlat::rv(space, {"0", "1", "0", "1"});
        z1 = shlat::rv(space, {"1", "1", "2", "2"});
        z2 = shlat::rv(space, {"2", "1", "1", "2"});
    }
};

// X uniform on {0..12m-1}, with the quotient components X div 2 and X div 3.
// The pair (X1, X2) never determines X, yet the distances shrink with m.
struct Divisors {
    shlat::SpacePtr space;
    shlat::RandomVariable x, x1, x2;

    explicit Divisors(unsigned long m = 1) {
        const unsigned long size = 12 * m;
        space = shlat::new_space(
            std::vector<shlat::Rational>(size, shlat::make_rational(1, long(size))));
        std::vector<std::string> lx(size), l1(size), l2(size);
        for (unsigned long v = 0; v < size; ++v) {
            lx[v] = std::to_string(v);
            l1[v] = std::to_string(v / 2);
            l2[v] = std::to_string(v / 3);
        }
        x = shlat::rv(space, lx);
        x1 = shlat::rv(space, l1);
        x2 = shlat::rv(space, l2);
    }
};

}  // namespace fixtures

#endif
