#include "gamas/matroid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <queue>

#include "gamas/errors.hpp"

namespace gamas {

namespace {

using Subset = LinearMatroid::Subset;

constexpr Subset bit(int i) { return Subset{1} << i; }

}  // namespace

LinearMatroid::LinearMatroid(VectorConfiguration cfg) : cfg_(std::move(cfg)) {
    if (cfg_.size() > kMatroidGroundCap) throw CapExceeded("matroid ground set exceeds 64 elements");
    integral_.resize(static_cast<std::size_t>(cfg_.size()));
    for (int i = 0; i < cfg_.size(); ++i) clear_denominators(cfg_[static_cast<std::size_t>(i)], integral_[static_cast<std::size_t>(i)]);
}

int LinearMatroid::rank(Subset s) const {
    if (s == 0) return 0;
    if (auto it = cache_.find(s); it != cache_.end()) return it->second;
    std::vector<std::vector<Integer>> rows;
    for (Subset rest = s; rest; rest &= rest - 1) rows.push_back(integral_[static_cast<std::size_t>(std::countr_zero(rest))]);
    const int r = static_cast<int>(integer_rank(std::move(rows)));
    cache_.emplace(s, r);
    return r;
}

namespace {

// Colour classes of a matroid partition. owner[x] is x's class or -1.
class MatroidPartitioner {
public:
    explicit MatroidPartitioner(const LinearMatroid& m) : m_(m), owner_(static_cast<std::size_t>(m.size()), -1) {}

    void add_class() { classes_.push_back(0); }

    // Shortest augmenting path from s: s replaces y_1 in its class, y_1
    // replaces y_2, ..., the last element enters a class with room for it.
    bool augment(int s) {
        const int n = m_.size();
        const int k = static_cast<int>(classes_.size());
        std::vector<int> parent(static_cast<std::size_t>(n), -2);
        std::queue<int> q;
        parent[static_cast<std::size_t>(s)] = -1;
        q.push(s);
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            const int ox = owner_[static_cast<std::size_t>(x)];
            for (int j = 0; j < k; ++j) {
                if (j == ox) continue;
                if (m_.independent(classes_[static_cast<std::size_t>(j)] | bit(x))) {
                    apply_path(parent, x, j);
                    return true;
                }
            }
            for (int j = 0; j < k; ++j) {
                if (j == ox) continue;
                const Subset cls = classes_[static_cast<std::size_t>(j)];
                for (Subset rest = cls; rest; rest &= rest - 1) {
                    const int y = std::countr_zero(rest);
                    if (parent[static_cast<std::size_t>(y)] != -2) continue;
                    if (m_.independent((cls & ~bit(y)) | bit(x))) {
                        parent[static_cast<std::size_t>(y)] = x;
                        q.push(y);
                    }
                }
            }
        }
        return false;
    }

    int covered() const {
        return static_cast<int>(std::count_if(owner_.begin(), owner_.end(), [](int o) { return o >= 0; }));
    }
    bool is_covered(int x) const { return owner_[static_cast<std::size_t>(x)] >= 0; }

private:
    void apply_path(const std::vector<int>& parent, int last, int free_class) {
        // walk back from the end: last moves into free_class, each predecessor
        // takes over the slot vacated by its successor
        int target = free_class;
        for (int x = last; x != -1; x = parent[static_cast<std::size_t>(x)]) {
            const int old = owner_[static_cast<std::size_t>(x)];
            if (old >= 0) classes_[static_cast<std::size_t>(old)] &= ~bit(x);
            classes_[static_cast<std::size_t>(target)] |= bit(x);
            owner_[static_cast<std::size_t>(x)] = target;
            target = old;
        }
    }

    const LinearMatroid& m_;
    std::vector<int> owner_;
    std::vector<Subset> classes_;
};

}  // namespace

RankPartition rank_partition(const VectorConfiguration& cfg) {
    const LinearMatroid m(cfg);
    const int n = m.size();
    const int target = cfg.nonzero_count();
    MatroidPartitioner part(m);
    RankPartition rp;
    int previous = 0;
    while (previous < target) {
        part.add_class();
        bool progress = true;
        while (progress) {
            progress = false;
            for (int x = 0; x < n; ++x) {
                if (!part.is_covered(x) && part.augment(x)) progress = true;
            }
        }
        const int now = part.covered();
        rp.rho.push_back(now - previous);
        previous = now;
    }
    rp.covered = previous;
    return rp;
}

RankPartition rank_partition_oracle(const VectorConfiguration& cfg) {
    const int n = cfg.size();
    if (n > kRankOracleCap) throw CapExceeded("rank_partition_oracle: more than " + std::to_string(kRankOracleCap) + " vectors");
    const LinearMatroid m(cfg);
    const Subset full = n == 64 ? ~Subset{0} : bit(n) - 1;
    std::vector<int> ranks(std::size_t{1} << n);
    for (Subset s = 0; s <= full; ++s) ranks[s] = m.rank(s);
    const int target = cfg.nonzero_count();
    RankPartition rp;
    int previous = 0;
    for (int k = 1; previous < target; ++k) {
        int best = std::numeric_limits<int>::max();
        for (Subset s = 0; s <= full; ++s) {
            best = std::min(best, k * ranks[s] + (n - std::popcount(s)));
        }
        rp.rho.push_back(best - previous);
        previous = best;
    }
    rp.covered = previous;
    return rp;
}

std::optional<BlockCertificate> gamas_condition(const VectorConfiguration& cfg, const Partition& lambda) {
    const int n = cfg.size();
    if (lambda.size() != n) throw SizeMismatch("gamas_condition: |lambda| differs from the number of vectors");
    if (cfg.has_zero_vector()) return std::nullopt;
    const Partition profile = conjugate(lambda);
    if (profile.part(0) > cfg.dim()) return std::nullopt;

    const LinearMatroid m(cfg);
    const int blocks = profile.length();
    std::vector<Subset> block(static_cast<std::size_t>(blocks), 0);
    std::vector<int> fill(static_cast<std::size_t>(blocks), 0);

    std::function<bool(int)> place = [&](int x) -> bool {
        if (x == n) return true;
        for (int b = 0; b < blocks; ++b) {
            const auto ub = static_cast<std::size_t>(b);
            if (fill[ub] == profile.part(b)) continue;
            // empty blocks of equal capacity are interchangeable
            if (fill[ub] == 0 && b > 0 && fill[ub - 1] == 0 && profile.part(b - 1) == profile.part(b)) continue;
            if (!m.independent(block[ub] | bit(x))) continue;
            block[ub] |= bit(x);
            ++fill[ub];
            if (place(x + 1)) return true;
            block[ub] &= ~bit(x);
            --fill[ub];
        }
        return false;
    };
    if (!place(0)) return std::nullopt;

    BlockCertificate cert;
    for (Subset s : block) {
        std::vector<int> members;
        for (Subset rest = s; rest; rest &= rest - 1) members.push_back(std::countr_zero(rest));
        cert.blocks.push_back(std::move(members));
    }
    return cert;
}

bool validate_certificate(const VectorConfiguration& cfg, const Partition& lambda, const BlockCertificate& cert) {
    const int n = cfg.size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> sizes;
    for (const auto& b : cert.blocks) {
        std::vector<ExactVector> vs;
        for (int i : b) {
            if (i < 0 || i >= n || seen[static_cast<std::size_t>(i)]) return false;
            seen[static_cast<std::size_t>(i)] = true;
            vs.push_back(cfg[static_cast<std::size_t>(i)]);
        }
        if (!is_independent(vs)) return false;
        sizes.push_back(static_cast<int>(b.size()));
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) return false;
    return Partition::from_unsorted(sizes) == conjugate(lambda);
}

bool decide_appears(const RankPartition& rp, const Partition& lambda) {
    return dominates(lambda, conjugate(rp.as_partition()));
}

bool decide_appears(const VectorConfiguration& cfg, const Partition& lambda) {
    if (lambda.size() != cfg.size()) throw SizeMismatch("decide_appears: |lambda| differs from the number of vectors");
    return decide_appears(rank_partition(cfg), lambda);
}

}  // namespace gamas
