#pragma once

#include <vector>

#include "gamas/group_algebra.hpp"
#include "gamas/partition.hpp"

namespace gamas {

/// Young diagram filled bijectively with 1..n. Not required to be standard.
class Tableau {
public:
    /// Throws std::invalid_argument if rows are not a partition shape or the
    /// entries are not exactly 1..n.
    explicit Tableau(std::vector<std::vector<int>> rows);

    /// Row-reading filling: 1..lambda_1 in the first row, and so on.
    static Tableau row_reading(const Partition& shape);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    std::vector<std::vector<int>> columns() const;
    int size() const { return shape_.size(); }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// a_T: sum of the permutations preserving every row setwise.
GroupAlgebraElement row_symmetrizer(const Tableau& t);

/// b_T: signed sum of the permutations preserving every column setwise.
GroupAlgebraElement column_antisymmetrizer(const Tableau& t);

/// b_T a_T.
GroupAlgebraElement young_symmetrizer(const Tableau& t);

/// Signed sum over all permutations of the given index set (fixing the rest).
GroupAlgebraElement antisymmetrizer(int n, const std::vector<int>& block);

}  // namespace gamas
