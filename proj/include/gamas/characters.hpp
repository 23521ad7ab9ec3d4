#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gamas/group_algebra.hpp"
#include "gamas/partition.hpp"

namespace gamas {

inline constexpr int kCharacterTableCap = 24;

/// Irreducible characters of S_n. Rows and classes both follow partitions_of(n),
/// so row i is chi^{shapes[i]} and column j is the class of cycle type classes[j].
struct CharacterTable {
    int n = 0;
    std::vector<Partition> classes;
    std::vector<std::uint64_t> class_sizes;
    std::vector<Partition> shapes;
    std::vector<std::vector<std::int64_t>> rows;

    /// Index into shapes / classes; throws std::out_of_range when absent.
    std::size_t index_of(const Partition& p) const;
    std::span<const std::int64_t> row(const Partition& lambda) const { return rows[index_of(lambda)]; }
    std::int64_t value(const Partition& lambda, const Partition& rho) const {
        return rows[index_of(lambda)][index_of(rho)];
    }
};

/// chi^lambda on the class of cycle type rho, by the Murnaghan-Nakayama rule.
/// Throws SizeMismatch when |lambda| != |rho|.
std::int64_t character_value(const Partition& lambda, const Partition& rho);

/// Full table for S_n, built once per n and cached for the process lifetime.
/// Throws CapExceeded above kCharacterTableCap.
const CharacterTable& character_table(int n);

/// For each permutation of degree n in lexicographic order, the index of its
/// cycle type within partitions_of(n). Cached; n is capped at kDefaultPermutationCap.
const std::vector<std::uint8_t>& class_index_by_lex_rank(int n);

/// e_lambda = (chi^lambda(1)/n!) sum_sigma chi^lambda(sigma) sigma, using the
/// character row found in table.
GroupAlgebraElement central_idempotent(const Partition& lambda, const CharacterTable& table);
GroupAlgebraElement central_idempotent(const Partition& lambda);

}  // namespace gamas
