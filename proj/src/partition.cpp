#include "gamas/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <gmpxx.h>

#include "gamas/errors.hpp"

namespace gamas {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return {};
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto field = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (field.empty() || field.size() > 6 ||
            !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw ParseError("malformed partition: \"" + std::string(text) + "\"");
        }
        parts.push_back(std::stoi(std::string(field)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + ": \"" + std::string(text) + "\"");
    }
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    // largest part first, then recurse on the remainder with a cap
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(static_cast<std::size_t>(lambda.part(0)), 0);
    for (int p : lambda.parts()) {
        for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(cols));
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return false;
    const int len = std::max(lambda.length(), mu.length());
    int a = 0;
    int b = 0;
    for (int i = 0; i < len; ++i) {
        a += lambda.part(i);
        b += mu.part(i);
        if (a < b) return false;
    }
    return true;
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw CapExceeded("factorial: n must lie in 0..20");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b.get_ui();
}

std::uint64_t syt_count(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
    mpz_class hooks = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.part(i); ++j) {
            hooks *= (lambda.part(i) - j - 1) + (conj.part(j) - i - 1) + 1;
        }
    }
    mpz_class f = num / hooks;
    if (!f.fits_ulong_p()) throw CapExceeded("syt_count: result exceeds 64 bits");
    return f.get_ui();
}

std::uint64_t weyl_dimension(const Partition& lambda, int d) {
    if (lambda.length() > d) return 0;
    if (lambda.empty()) return 1;
    // fill cells row by row; rows weakly increase, columns strictly increase
    std::vector<std::vector<int>> t(static_cast<std::size_t>(lambda.length()));
    for (int i = 0; i < lambda.length(); ++i) t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lambda.part(i)), 0);
    const Partition conj = conjugate(lambda);
    std::uint64_t count = 0;
    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == lambda.length()) {
            ++count;
            return;
        }
        if (c == lambda.part(r)) {
            fill(r + 1, 0);
            return;
        }
        const auto ur = static_cast<std::size_t>(r);
        const auto uc = static_cast<std::size_t>(c);
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[ur][uc - 1]);
        if (r > 0) lo = std::max(lo, t[ur - 1][uc] + 1);
        // leave room for the strictly increasing column below
        const int hi = d - (conj.part(c) - r - 1);
        for (int v = lo; v <= hi; ++v) {
            t[ur][uc] = v;
            fill(r, c + 1);
        }
    };
    fill(0, 0);
    return count;
}

std::uint64_t weyl_dimension_product(const Partition& lambda, int d) {
    if (lambda.length() > d) return 0;
    mpq_class prod = 1;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            prod *= mpq_class(lambda.part(i) - lambda.part(j) + j - i, j - i);
        }
    }
    prod.canonicalize();
    return prod.get_num().get_ui();
}

std::vector<Partition> vertical_strips(const Partition& mu, int k, int max_rows) {
    if (k < 0) throw std::invalid_argument("vertical_strips: negative k");
    const int rows = std::min(max_rows, mu.length() + k);
    std::vector<Partition> out;
    if (rows < 0 || mu.length() > max_rows) return out;
    std::vector<int> cur(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) cur[static_cast<std::size_t>(i)] = mu.part(i);
    // choose which rows receive a box, top to bottom
    std::function<void(int, int)> rec = [&](int row, int left) {
        if (left == 0) {
            out.push_back(Partition::from_unsorted(cur));
            return;
        }
        if (row == rows || rows - row < left) return;
        const auto ur = static_cast<std::size_t>(row);
        const bool fits = row == 0 || cur[ur - 1] > mu.part(row);
        if (fits) {
            ++cur[ur];
            rec(row + 1, left - 1);
            --cur[ur];
        }
        rec(row + 1, left);
    };
    rec(0, k);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Partition remove_first_column(const Partition& lambda) {
    std::vector<int> parts;
    for (int p : lambda.parts()) {
        if (p >= 2) parts.push_back(p - 1);
    }
    return Partition(std::move(parts));
}

std::uint64_t centralizer_order(const Partition& mu) {
    std::uint64_t z = 1;
    int i = 0;
    while (i < mu.length()) {
        int j = i;
        while (j < mu.length() && mu.part(j) == mu.part(i)) ++j;
        const int m = j - i;
        for (int t = 0; t < m; ++t) z *= static_cast<std::uint64_t>(mu.part(i));
        z *= factorial(m);
        i = j;
    }
    return z;
}

}  // namespace gamas
