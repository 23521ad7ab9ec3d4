#include "gamas/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "gamas/errors.hpp"
#include "gamas/permutation.hpp"

namespace gamas {

namespace {

// Murnaghan-Nakayama on beta-sets. A partition with l parts becomes the set
// {lambda_i + l - i}; stripping a border strip of length r moves one bead from
// b to b - r, with sign (-1)^(beads strictly between).
class MurnaghanNakayama {
public:
    std::int64_t eval(const Partition& lambda, const Partition& rho) {
        std::vector<int> beads;
        const int l = lambda.length();
        for (int i = 0; i < l; ++i) beads.push_back(lambda.part(i) + l - 1 - i);
        std::sort(beads.begin(), beads.end());
        return rec(beads, rho.parts(), 0);
    }

private:
    using Key = std::pair<std::vector<int>, std::vector<int>>;  // beads, remaining cycle lengths

    std::int64_t rec(const std::vector<int>& beads, const std::vector<int>& rho, std::size_t next) {
        if (next == rho.size()) return 1;
        const Key key{beads, std::vector<int>(rho.begin() + static_cast<std::ptrdiff_t>(next), rho.end())};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int r = rho[next];
        std::int64_t total = 0;
        for (std::size_t i = 0; i < beads.size(); ++i) {
            const int b = beads[i];
            const int target = b - r;
            if (target < 0 || std::binary_search(beads.begin(), beads.end(), target)) continue;
            int between = 0;
            for (int x : beads) between += (x > target && x < b) ? 1 : 0;
            std::vector<int> moved = beads;
            moved[i] = target;
            std::sort(moved.begin(), moved.end());
            const std::int64_t sub = rec(moved, rho, next + 1);
            total += (between % 2 == 0) ? sub : -sub;
        }
        memo_.emplace(key, total);
        return total;
    }

    std::map<Key, std::int64_t> memo_;
};

std::mutex g_cache_mutex;
std::map<int, std::unique_ptr<CharacterTable>> g_tables;
std::map<int, std::unique_ptr<std::vector<std::uint8_t>>> g_class_index;

}  // namespace

std::size_t CharacterTable::index_of(const Partition& p) const {
    // both lists are sorted in decreasing lexicographic order
    const auto it = std::lower_bound(shapes.begin(), shapes.end(), p, std::greater<>());
    if (it == shapes.end() || *it != p) throw std::out_of_range("partition " + p.to_string() + " is not a partition of " + std::to_string(n));
    return static_cast<std::size_t>(it - shapes.begin());
}

std::int64_t character_value(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw SizeMismatch("character_value: |lambda| != |rho|");
    MurnaghanNakayama mn;
    return mn.eval(lambda, rho);
}

const CharacterTable& character_table(int n) {
    if (n < 0) throw std::invalid_argument("character_table: negative n");
    if (n > kCharacterTableCap) throw CapExceeded("character_table: n exceeds cap " + std::to_string(kCharacterTableCap));
    std::lock_guard lock(g_cache_mutex);
    auto& slot = g_tables[n];
    if (!slot) {
        auto t = std::make_unique<CharacterTable>();
        t->n = n;
        t->shapes = partitions_of(n);
        t->classes = t->shapes;
        const std::uint64_t nfact = factorial(n);
        for (const auto& c : t->classes) t->class_sizes.push_back(nfact / centralizer_order(c));
        MurnaghanNakayama mn;
        for (const auto& lambda : t->shapes) {
            std::vector<std::int64_t> row;
            for (const auto& rho : t->classes) row.push_back(mn.eval(lambda, rho));
            t->rows.push_back(std::move(row));
        }
        slot = std::move(t);
    }
    return *slot;
}

const std::vector<std::uint8_t>& class_index_by_lex_rank(int n) {
    const CharacterTable& table = character_table(n);
    std::lock_guard lock(g_cache_mutex);
    auto& slot = g_class_index[n];
    if (!slot) {
        auto v = std::make_unique<std::vector<std::uint8_t>>();
        v->reserve(factorial(n));
        for_each_permutation(n, [&](const Permutation& p) {
            v->push_back(static_cast<std::uint8_t>(table.index_of(sign_and_cycle_type(p).cycle_type)));
        });
        slot = std::move(v);
    }
    return *slot;
}

GroupAlgebraElement central_idempotent(const Partition& lambda, const CharacterTable& table) {
    const int n = lambda.size();
    if (table.n != n) throw SizeMismatch("central_idempotent: table is for a different n");
    const auto row = table.row(lambda);
    const auto& classes = class_index_by_lex_rank(n);
    // the identity class (1^n) is last in reverse-lexicographic order
    Rational scale(static_cast<long>(row.back()), static_cast<unsigned long>(factorial(n)));
    scale.canonicalize();
    GroupAlgebraElement e(n);
    std::size_t rank = 0;
    for_each_permutation(n, [&](const Permutation& p) {
        const std::int64_t chi = row[classes[rank++]];
        if (chi != 0) e.add_term(p, scale * Rational(static_cast<long>(chi)));
    });
    return e;
}

GroupAlgebraElement central_idempotent(const Partition& lambda) {
    return central_idempotent(lambda, character_table(lambda.size()));
}

}  // namespace gamas
