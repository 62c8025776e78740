#ifndef SHLAT_LATTICE_HPP
#define SHLAT_LATTICE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "shlat/probability.hpp"

namespace shlat {

// Row/column permutations and block boundaries putting a joint matrix into
// block-diagonal form. Blocks are the communication classes; block ids are
// assigned in discovery order. Permutations map original index -> new index.
struct BlockStructure {
    std::vector<std::size_t> rowPerm;
    std::vector<std::size_t> colPerm;
    std::size_t blockCount = 0;
    std::vector<std::size_t> blockOfRow;  // new row index -> block id
    std::vector<std::size_t> blockOfCol;  // new col index -> block id
    std::vector<Rational> blockMass;      // block id -> total mass
};

// Joint distribution of (X, Y, Z) where Z is a complementary information.
// Marginalizing over z recovers the joint of (X, Y) exactly.
struct ComplementTensor {
    // entries[x][y][z]
    std::vector<std::vector<std::vector<Rational>>> entries;
    std::size_t zCardinality = 0;
};

// True iff the a.s.-restricted joint matrix is a permutation matrix.
bool is_equivalent(const RandomVariable& x, const RandomVariable& y);

// True iff X is a deterministic function of Y almost surely.
bool is_leq(const RandomVariable& x, const RandomVariable& y);

// The random pair (X, Y); least upper bound.
RandomVariable join(const RandomVariable& x, const RandomVariable& y);

// Depth-first search over the bipartite row/column graph. Deterministic:
// seeded with row 0, re-seeded with the lowest-index unmarked row, then the
// lowest-index unmarked column. Expects a support-restricted joint.
BlockStructure block_diagonalize(const JointDistribution& j);

// Communication-class variable C(X, Y); greatest lower bound.
RandomVariable meet(const RandomVariable& x, const RandomVariable& y);

// For X <= Y, a canonical Z with join(X, Z) == Y and meet(X, Z) == 0,
// built by scanning each row of the joint in ascending column order and
// numbering its nonzero entries z = 0, 1, 2, ...
std::pair<RandomVariable, ComplementTensor> complement(const RandomVariable& x,
                                                       const RandomVariable& y);

RandomVariable zero(const SpacePtr& space);  // constant labeling
RandomVariable one(const SpacePtr& space);   // identity labeling

}  // namespace shlat

#endif
