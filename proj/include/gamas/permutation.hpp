#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "gamas/partition.hpp"

namespace gamas {

inline constexpr int kDefaultPermutationCap = 10;

/// Bijection of {1..n}, stored as its 1-based image array: images()[i-1] = sigma(i).
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless images is a bijection of 1..n.
    explicit Permutation(std::vector<int> images);
    Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

    static Permutation identity(int n);
    /// Product of the given cycles (disjoint or not, applied right to left), e.g. {{1,2},{3,5}}.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    /// sigma(i), 1-based.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    /// Cycle notation without fixed points, "(1 2)(3 5)"; "()" for the identity.
    std::string cycle_string() const;

    bool operator==(const Permutation&) const = default;
    /// Lexicographic on image arrays.
    std::strong_ordering operator<=>(const Permutation& o) const { return images_ <=> o.images_; }

private:
    std::vector<int> images_;
};

/// (sigma o tau)(i) = sigma(tau(i)). Throws SizeMismatch on differing degree.
Permutation compose(const Permutation& sigma, const Permutation& tau);

struct SignAndCycleType {
    int sign;
    Partition cycle_type;
};
SignAndCycleType sign_and_cycle_type(const Permutation& sigma);

/// Position of sigma among all permutations of its degree in lexicographic order.
std::uint64_t lex_rank(const Permutation& sigma);

/// All n! permutations in lexicographic order. Throws CapExceeded when n > cap.
std::vector<Permutation> all_permutations(int n, int cap = kDefaultPermutationCap);

/// Streams the permutations in lexicographic order without materializing them.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn,
                          int cap = kDefaultPermutationCap);

}  // namespace gamas
