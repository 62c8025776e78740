#include "shlat/lattice.hpp"

#include <string>

namespace shlat {

bool is_equivalent(const RandomVariable& x, const RandomVariable& y) {
    require_same_space(x, y);
    // Permutation-matrix test without materializing the joint: the pairing
    // of a.s. values must be a bijection.
    std::vector<int> x_to_y(x.value_count(), -1);
    std::vector<int> y_to_x(y.value_count(), -1);
    for (std::size_t i : x.space()->support()) {
        int xi = x.value_index(i);
        int yi = y.value_index(i);
        if (x_to_y[xi] == -1) x_to_y[xi] = yi;
        else if (x_to_y[xi] != yi) return false;
        if (y_to_x[yi] == -1) y_to_x[yi] = xi;
        else if (y_to_x[yi] != xi) return false;
    }
    return true;
}

bool is_leq(const RandomVariable& x, const RandomVariable& y) {
    require_same_space(x, y);
    // Each a.s. value of Y must determine a single a.s. value of X.
    std::vector<int> y_to_x(y.value_count(), -1);
    for (std::size_t i : x.space()->support()) {
        int xi = x.value_index(i);
        int yi = y.value_index(i);
        if (y_to_x[yi] == -1) y_to_x[yi] = xi;
        else if (y_to_x[yi] != xi) return false;
    }
    return true;
}

RandomVariable join(const RandomVariable& x, const RandomVariable& y) {
    require_same_space(x, y);
    std::vector<std::string> labels;
    labels.reserve(x.labels().size());
    for (std::size_t i = 0; i < x.labels().size(); ++i)
        labels.push_back("(" + x.label(i) + "," + y.label(i) + ")");
    return rv(x.space(), std::move(labels));
}

BlockStructure block_diagonalize(const JointDistribution& j) {
    const std::size_t nR = j.rows(), nC = j.cols();
    BlockStructure bs;
    bs.rowPerm.assign(nR, nR);
    bs.colPerm.assign(nC, nC);
    std::vector<bool> row_done(nR, false), col_done(nC, false);
    std::vector<bool> row_assigned(nR, false), col_assigned(nC, false);
    std::vector<std::size_t> row_block(nR, 0), col_block(nC, 0);
    std::size_t next_row = 0, next_col = 0;

    // Stack entries: (is_row, original index).
    std::vector<std::pair<bool, std::size_t>> stack;
    std::size_t seed_row = 0, seed_col = 0;
    std::size_t block = 0;
    bool have_block = false;

    auto reseed = [&]() -> bool {
        while (seed_row < nR && row_done[seed_row]) ++seed_row;
        if (seed_row < nR) {
            stack.emplace_back(true, seed_row);
            return true;
        }
        while (seed_col < nC && col_done[seed_col]) ++seed_col;
        if (seed_col < nC) {
            stack.emplace_back(false, seed_col);
            return true;
        }
        return false;
    };

    while (reseed()) {
        if (have_block) ++block;
        have_block = true;
        while (!stack.empty()) {
            auto [is_row, i] = stack.back();
            stack.pop_back();
            if (is_row) {
                if (row_done[i]) continue;
                row_done[i] = true;
                row_block[i] = block;
                for (std::size_t c = 0; c < nC; ++c) {
                    if (!col_assigned[c] && j.entries[i][c] > 0) {
                        col_assigned[c] = true;
                        bs.colPerm[c] = next_col++;
                        col_block[c] = block;
                        stack.emplace_back(false, c);
                    }
                }
            } else {
                if (col_done[i]) continue;
                col_done[i] = true;
                col_block[i] = block;
                for (std::size_t r = 0; r < nR; ++r) {
                    if (!row_assigned[r] && j.entries[r][i] > 0) {
                        row_assigned[r] = true;
                        bs.rowPerm[r] = next_row++;
                        row_block[r] = block;
                        stack.emplace_back(true, r);
                    }
                }
            }
        }
    }

    // All-zero rows/columns never get discovered by the scan; a restricted
    // joint has none, but park them at the end for safety.
    for (std::size_t r = 0; r < nR; ++r)
        if (!row_assigned[r]) bs.rowPerm[r] = next_row++;
    for (std::size_t c = 0; c < nC; ++c)
        if (!col_assigned[c]) bs.colPerm[c] = next_col++;

    bs.blockCount = have_block ? block + 1 : 0;
    bs.blockOfRow.assign(nR, 0);
    bs.blockOfCol.assign(nC, 0);
    for (std::size_t r = 0; r < nR; ++r) bs.blockOfRow[bs.rowPerm[r]] = row_block[r];
    for (std::size_t c = 0; c < nC; ++c) bs.blockOfCol[bs.colPerm[c]] = col_block[c];
    bs.blockMass.assign(bs.blockCount, Rational(0));
    for (std::size_t r = 0; r < nR; ++r)
        for (std::size_t c = 0; c < nC; ++c)
            if (j.entries[r][c] > 0) bs.blockMass[row_block[r]] += j.entries[r][c];
    return bs;
}

RandomVariable meet(const RandomVariable& x, const RandomVariable& y) {
    require_same_space(x, y);
    JointDistribution j = joint(x, y);
    BlockStructure bs = block_diagonalize(j);
    std::vector<std::size_t> block_of_orig_row(j.rows());
    for (std::size_t r = 0; r < j.rows(); ++r)
        block_of_orig_row[r] = bs.blockOfRow[bs.rowPerm[r]];
    std::vector<std::string> labels(x.labels().size(), "0");
    for (std::size_t i : x.space()->support())
        labels[i] = std::to_string(block_of_orig_row[x.value_index(i)]);
    return rv(x.space(), std::move(labels));
}

std::pair<RandomVariable, ComplementTensor> complement(const RandomVariable& x,
                                                       const RandomVariable& y) {
    if (!is_leq(x, y)) throw NotComparable("complement: X <= Y required");
    JointDistribution j = joint(x, y);
    const std::size_t nR = j.rows(), nC = j.cols();

    // Since X <= Y, each column has a single nonzero entry; give it the next
    // z index of its row, scanning columns in ascending order.
    std::vector<std::size_t> z_of_col(nC, 0);
    std::size_t z_card = 0;
    ComplementTensor tensor;
    tensor.entries.assign(nR, {});
    std::vector<std::vector<std::size_t>> z_slots(nR);
    for (std::size_t r = 0; r < nR; ++r) {
        std::size_t z = 0;
        for (std::size_t c = 0; c < nC; ++c) {
            if (j.entries[r][c] > 0) z_of_col[c] = z++;
        }
        if (z > z_card) z_card = z;
    }
    tensor.zCardinality = z_card;
    for (std::size_t r = 0; r < nR; ++r)
        tensor.entries[r].assign(nC, std::vector<Rational>(z_card, Rational(0)));
    for (std::size_t r = 0; r < nR; ++r)
        for (std::size_t c = 0; c < nC; ++c)
            if (j.entries[r][c] > 0)
                tensor.entries[r][c][z_of_col[c]] = j.entries[r][c];

    std::vector<std::string> labels(x.labels().size(), "0");
    for (std::size_t i : x.space()->support())
        labels[i] = std::to_string(z_of_col[y.value_index(i)]);
    return {rv(x.space(), std::move(labels)), std::move(tensor)};
}

RandomVariable zero(const SpacePtr& space) {
    return rv(space, std::vector<std::string>(space->size(), "0"));
}

RandomVariable one(const SpacePtr& space) {
    std::vector<std::string> labels;
    labels.reserve(space->size());
    for (std::size_t i = 0; i < space->size(); ++i) labels.push_back(std::to_string(i));
    return rv(space, std::move(labels));
}

}  // namespace shlat
