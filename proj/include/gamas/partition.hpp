#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gamas {

/// Weakly decreasing sequence of positive integers. The empty partition is valid.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Throws std::invalid_argument unless parts is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    /// Sorts and drops zeros first; for sequences that are not yet partitions.
    static Partition from_unsorted(std::vector<int> parts);
    /// "3,2,2" style text; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    /// Number of parts.
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// i-th part (0-based); 0 past the end.
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    /// Lexicographic on the parts.
    std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

Partition conjugate(const Partition& lambda);

/// Dominance order. Partitions of different sizes are never comparable.
bool dominates(const Partition& lambda, const Partition& mu);

/// Number of standard Young tableaux, by the hook length formula.
std::uint64_t syt_count(const Partition& lambda);

/// Dimension of the irreducible polynomial GL_d-module of highest weight
/// lambda, counted as semistandard tableaux with entries in 1..d.
std::uint64_t weyl_dimension(const Partition& lambda, int d);

/// Same number from the product formula prod_{i<j} (l_i - l_j + j - i)/(j - i).
std::uint64_t weyl_dimension_product(const Partition& lambda, int d);

/// Partitions obtained from mu by adding k boxes, no two in one row, with at
/// most max_rows rows. Reverse-lexicographic order.
std::vector<Partition> vertical_strips(const Partition& mu, int k, int max_rows);

Partition remove_first_column(const Partition& lambda);

/// z_mu = prod_i i^{m_i} m_i!, the centralizer order of a permutation of cycle type mu.
std::uint64_t centralizer_order(const Partition& mu);

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

}  // namespace gamas
