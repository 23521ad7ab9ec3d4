#include "gamas/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gamas/errors.hpp"

namespace gamas {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("permutation images must be a bijection of 1..n");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation result = identity(n);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        std::vector<int> im = identity(n).images_;
        const auto& c = *it;
        for (std::size_t k = 0; k < c.size(); ++k) {
            const int from = c[k];
            const int to = c[(k + 1) % c.size()];
            if (from < 1 || from > n || to < 1 || to > n) throw std::invalid_argument("cycle entry out of range");
            im[static_cast<std::size_t>(from - 1)] = to;
        }
        result = compose(Permutation(std::move(im)), result);
    }
    return result;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

std::string Permutation::cycle_string() const {
    const int n = degree();
    const char* sep = n >= 10 ? " " : "";
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::string s;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
        s += '(';
        int j = i;
        bool first = true;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            if (!first) s += sep;
            s += std::to_string(j);
            first = false;
            j = (*this)(j);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.degree() != tau.degree()) throw SizeMismatch("compose: permutations of differing degree");
    std::vector<int> im(static_cast<std::size_t>(sigma.degree()));
    for (int i = 1; i <= sigma.degree(); ++i) im[static_cast<std::size_t>(i - 1)] = sigma(tau(i));
    return Permutation(std::move(im));
}

SignAndCycleType sign_and_cycle_type(const Permutation& sigma) {
    const int n = sigma.degree();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> lengths;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = sigma(j)) {
            seen[static_cast<std::size_t>(j)] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    const int cycles = static_cast<int>(lengths.size());
    return {((n - cycles) % 2 == 0) ? 1 : -1, Partition::from_unsorted(std::move(lengths))};
}

std::uint64_t lex_rank(const Permutation& sigma) {
    const int n = sigma.degree();
    std::uint64_t rank = 0;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int k = 1; k <= n; ++k) {
        const int v = sigma(k);
        int smaller = 0;
        for (int u = 1; u < v; ++u) smaller += used[static_cast<std::size_t>(u)] ? 0 : 1;
        used[static_cast<std::size_t>(v)] = true;
        rank = rank * static_cast<std::uint64_t>(n - k + 1) + static_cast<std::uint64_t>(smaller);
    }
    return rank;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn, int cap) {
    if (n < 0) throw std::invalid_argument("negative permutation degree");
    if (n > cap) throw CapExceeded("permutation enumeration: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    do {
        fn(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
}

std::vector<Permutation> all_permutations(int n, int cap) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, cap);
    return out;
}

}  // namespace gamas
