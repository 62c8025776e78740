#include "shlat/geometry.hpp"

#include <algorithm>
#include <string>

namespace shlat {

bool VariableSet::contains(const RandomVariable& x) const {
    for (const auto& m : members_)
        if (is_equivalent(m, x)) return true;
    return false;
}

bool VariableSet::add(const RandomVariable& x) {
    if (contains(x)) return false;
    members_.push_back(x);
    return true;
}

VariableSet segment(const RandomVariable& x, const RandomVariable& y) {
    require_same_space(x, y);
    VariableSet s;
    s.add(x);
    s.add(join(x, y));
    s.add(y);
    return s;
}

VariableSet convex_envelope(const std::vector<RandomVariable>& vars,
                            std::size_t max_generators) {
    const std::size_t n = vars.size();
    if (n > max_generators) throw TooManyGenerators();
    for (std::size_t i = 1; i < n; ++i) require_same_space(vars[0], vars[i]);
    VariableSet out;
    // Subsets by size then lexicographic index order.
    for (std::size_t size = 1; size <= n; ++size) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            RandomVariable j = vars[idx[0]];
            for (std::size_t i = 1; i < size; ++i) j = join(j, vars[idx[i]]);
            out.add(j);
            // next combination
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t k = i; k < size; ++k) idx[k] = idx[k - 1] + 1;
        }
    }
    return out;
}

bool is_convex(const VariableSet& set) {
    const auto& m = set.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (!set.contains(join(m[i], m[j]))) return false;
    return true;
}

VariableSet generated_sublattice(const RandomVariable& x, std::size_t max_support) {
    const std::size_t n = x.value_count();
    if (n > max_support) throw SupportTooLarge();
    VariableSet out;
    if (n == 0) return out;
    // Restricted-growth strings: rgs[0] = 0, rgs[i] <= max(rgs[0..i-1]) + 1.
    std::vector<std::size_t> rgs(n, 0);
    while (true) {
        std::vector<std::string> labels(x.labels().size(), "0");
        for (std::size_t i : x.space()->support())
            labels[i] = std::to_string(rgs[x.value_index(i)]);
        out.add(rv(x.space(), std::move(labels)));
        // next string in lexicographic order
        bool advanced = false;
        for (std::size_t i = n; i-- > 1 && !advanced;) {
            std::size_t cap = 0;
            for (std::size_t k = 0; k < i; ++k) cap = std::max(cap, rgs[k]);
            if (rgs[i] <= cap) {
                ++rgs[i];
                for (std::size_t k = i + 1; k < n; ++k) rgs[k] = 0;
                advanced = true;
            }
        }
        if (!advanced) break;
    }
    return out;
}

}  // namespace shlat
