#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gamas/partition.hpp"
#include "gamas/tensor.hpp"

namespace gamas {

inline constexpr int kMatroidGroundCap = 64;
inline constexpr int kRankOracleCap = 14;

/// Linear matroid on the vectors of a configuration; subsets are bitmasks
/// over 0-based indices. Holds a rank cache, so one instance belongs to one
/// task at a time.
class LinearMatroid {
public:
    using Subset = std::uint64_t;

    /// Throws CapExceeded above kMatroidGroundCap elements.
    explicit LinearMatroid(VectorConfiguration cfg);

    int size() const { return cfg_.size(); }
    const VectorConfiguration& configuration() const { return cfg_; }

    int rank(Subset s) const;
    bool independent(Subset s) const { return rank(s) == std::popcount(s); }

private:
    VectorConfiguration cfg_;
    std::vector<std::vector<Integer>> integral_;
    mutable std::unordered_map<Subset, int> cache_;
};

struct RankPartition {
    std::vector<int> rho;  // weakly decreasing, positive
    int covered = 0;       // sum of rho = number of nonzero vectors

    bool operator==(const RankPartition&) const = default;
    Partition as_partition() const { return Partition(rho); }
};

/// Disjoint independent blocks covering every index (0-based).
struct BlockCertificate {
    std::vector<std::vector<int>> blocks;
};

/// rho_1 + ... + rho_k is the largest size of a union of k independent sets.
/// Matroid partition: k colour classes grown by shortest augmenting paths in
/// the exchange graph, with k increased until every nonzero vector is covered.
RankPartition rank_partition(const VectorConfiguration& cfg);

/// Same quantity from min over S of k * rank(S) + |E \ S|, by 2^n enumeration.
/// Throws CapExceeded above kRankOracleCap vectors.
RankPartition rank_partition_oracle(const VectorConfiguration& cfg);

/// Partition of the indices into independent blocks whose sizes are the parts
/// of conjugate(lambda), if one exists. Backtracking fills the largest blocks
/// first and prunes on dependence. Throws SizeMismatch when |lambda| != n.
std::optional<BlockCertificate> gamas_condition(const VectorConfiguration& cfg, const Partition& lambda);

/// Checks disjointness, coverage, block sizes against conjugate(lambda) and
/// independence of each block via is_independent.
bool validate_certificate(const VectorConfiguration& cfg, const Partition& lambda, const BlockCertificate& cert);

/// lambda dominates the conjugate of the rank partition. Throws SizeMismatch when |lambda| != n.
bool decide_appears(const VectorConfiguration& cfg, const Partition& lambda);
bool decide_appears(const RankPartition& rp, const Partition& lambda);

}  // namespace gamas
