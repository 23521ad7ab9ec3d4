#include "gamas/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace gamas {

namespace {

// Every permutation of {1..n} that maps each block onto itself, with its sign.
GroupAlgebraElement block_sum(int n, const std::vector<std::vector<int>>& blocks, bool signed_sum) {
    GroupAlgebraElement out(n);
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;

    std::vector<std::vector<int>> perms(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        perms[b] = blocks[b];
        std::sort(perms[b].begin(), perms[b].end());
    }

    // odometer over per-block orderings; parity tracked by sign_and_cycle_type at the end
    for (;;) {
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            std::vector<int> sorted = perms[b];
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t k = 0; k < sorted.size(); ++k) im[static_cast<std::size_t>(sorted[k] - 1)] = perms[b][k];
        }
        Permutation p(im);
        const int sign = signed_sum ? sign_and_cycle_type(p).sign : 1;
        out.add_term(p, sign);
        std::size_t b = 0;
        while (b < blocks.size() && !std::next_permutation(perms[b].begin(), perms[b].end())) ++b;
        if (b == blocks.size()) break;
    }
    return out;
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> lengths;
    for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
    shape_ = Partition(lengths);
    const int n = shape_.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& r : rows_) {
        for (int v : r) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("tableau entries must be exactly 1..n");
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
}

Tableau Tableau::row_reading(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int p : shape.parts()) {
        std::vector<int> r;
        for (int j = 0; j < p; ++j) r.push_back(next++);
        rows.push_back(std::move(r));
    }
    return Tableau(std::move(rows));
}

std::vector<std::vector<int>> Tableau::columns() const {
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(shape_.part(0)));
    for (const auto& r : rows_) {
        for (std::size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
    }
    return cols;
}

GroupAlgebraElement row_symmetrizer(const Tableau& t) {
    return block_sum(t.size(), t.rows(), false);
}

GroupAlgebraElement column_antisymmetrizer(const Tableau& t) {
    return block_sum(t.size(), t.columns(), true);
}

GroupAlgebraElement young_symmetrizer(const Tableau& t) {
    return algebra_multiply(column_antisymmetrizer(t), row_symmetrizer(t));
}

GroupAlgebraElement antisymmetrizer(int n, const std::vector<int>& block) {
    return block_sum(n, {block}, true);
}

}  // namespace gamas
