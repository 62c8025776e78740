#ifndef SHLAT_GEOMETRY_HPP
#define SHLAT_GEOMETRY_HPP

#include <cstddef>
#include <vector>

#include "shlat/lattice.hpp"
#include "shlat/probability.hpp"

namespace shlat {

// Set of pairwise non-equivalent variables. Insertion keeps the earliest
// representative of each class.
class VariableSet {
public:
    bool add(const RandomVariable& x);  // false if an equivalent member exists
    bool contains(const RandomVariable& x) const;
    const std::vector<RandomVariable>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

private:
    std::vector<RandomVariable> members_;
};

// {X, X v Y, Y} deduplicated; 3, 2 or 1 elements.
VariableSet segment(const RandomVariable& x, const RandomVariable& y);

// All joins over nonempty subsets, generated by subset size then
// lexicographic index order, deduplicated.
VariableSet convex_envelope(const std::vector<RandomVariable>& vars,
                            std::size_t max_generators = 10);

// True iff every pairwise join is equivalent to some member.
bool is_convex(const VariableSet& set);

// All quotients of X, one per partition of its value set, enumerated by
// restricted-growth strings in lexicographic order. Closed under join and
// meet; contains 0 and X.
VariableSet generated_sublattice(const RandomVariable& x, std::size_t max_support = 8);

}  // namespace shlat

#endif
