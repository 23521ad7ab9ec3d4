#include "gamas/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <set>

#include "gamas/characters.hpp"
#include "gamas/errors.hpp"
#include "gamas/partition.hpp"
#include "gamas/tensor.hpp"

namespace gamas {

namespace {

constexpr std::size_t kMaxActiveTuples = std::size_t{1} << 20;
constexpr std::size_t kDenseGatherCap = std::size_t{1} << 16;

bool run_parallel(Execution exec) { return exec == Execution::parallel && !omp_in_parallel(); }

// Depth-first walk over permutations sigma, position k choosing value sigma(k).
// Partial products that hit zero prune the whole subtree; the lexicographic
// rank is carried along so the leaf can look up its cycle class.
class ClassSumWalker {
public:
    ClassSumWalker(int n, const std::vector<std::uint8_t>& class_of, std::size_t classes)
        : n_(n), class_of_(class_of), prod_(static_cast<std::size_t>(n) + 1), sums_(classes) {}

    // weight[k * n + j]: factor for sigma(k) = j (both 0-based)
    void walk_all(const std::vector<const Integer*>& weight) {
        weight_ = &weight;
        prod_[0] = 1;
        walk(0, 0, 0);
    }

    // Only permutations with sigma(0) = first.
    void walk_from(const std::vector<const Integer*>& weight, int first) {
        weight_ = &weight;
        const Integer& w = *weight[static_cast<std::size_t>(first)];
        if (w == 0) return;
        prod_[1] = w;
        walk(1, static_cast<std::uint64_t>(first), 1u << first);
    }

    std::vector<Integer>& sums() { return sums_; }
    void reset() {
        for (auto& s : sums_) s = 0;
    }

private:
    void walk(int k, std::uint64_t rank, unsigned used) {
        if (k == n_) {
            sums_[class_of_[rank]] += prod_[static_cast<std::size_t>(n_)];
            return;
        }
        std::uint64_t smaller = 0;
        const auto uk = static_cast<std::size_t>(k);
        for (int j = 0; j < n_; ++j) {
            if (used & (1u << j)) continue;
            const Integer& w = *(*weight_)[uk * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
            if (w != 0) {
                mpz_mul(prod_[uk + 1].get_mpz_t(), prod_[uk].get_mpz_t(), w.get_mpz_t());
                walk(k + 1, rank * static_cast<std::uint64_t>(n_ - k) + smaller, used | (1u << j));
            }
            ++smaller;
        }
    }

    int n_;
    const std::vector<std::uint8_t>& class_of_;
    const std::vector<const Integer*>* weight_ = nullptr;
    std::vector<Integer> prod_;
    std::vector<Integer> sums_;
};

std::size_t checked_power(std::size_t base, int exp, std::size_t cap) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

}  // namespace

ClassSumTensor class_sum_tensor(const VectorConfiguration& cfg, Execution exec) {
    const int n = cfg.size();
    if (n < 1) throw std::invalid_argument("class_sum_tensor: empty configuration");
    if (n > kSymmetrizeDegreeCap) {
        throw CapExceeded("symmetrization degree n = " + std::to_string(n) + " exceeds cap " + std::to_string(kSymmetrizeDegreeCap));
    }
    ClassSumTensor cs;
    cs.n = n;
    cs.d = cfg.dim();
    if (cfg.has_zero_vector()) return cs;

    std::vector<std::vector<Integer>> w(static_cast<std::size_t>(n));
    Integer denom = 1;
    for (int i = 0; i < n; ++i) denom *= clear_denominators(cfg[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]);
    cs.scale = Rational(Integer(1), denom);
    cs.scale.canonicalize();

    // coordinates where every vector vanishes contribute nothing
    std::vector<int> active;
    for (int j = 0; j < cfg.dim(); ++j) {
        for (int i = 0; i < n; ++i) {
            if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
                active.push_back(j);
                break;
            }
        }
    }
    const std::size_t a = active.size();
    const std::size_t count = checked_power(a, n, kMaxActiveTuples);
    if (count > kMaxActiveTuples) throw CapExceeded("symmetrization: too many active index tuples");

    const auto& class_of = class_index_by_lex_rank(n);
    const std::size_t classes = character_table(n).classes.size();
    cs.tuples.resize(count);
    cs.sums.resize(count);

#pragma omp parallel if (run_parallel(exec))
    {
        ClassSumWalker walker(n, class_of, classes);
        std::vector<const Integer*> weight(static_cast<std::size_t>(n * n));
        std::vector<int> digits(static_cast<std::size_t>(n));
#pragma omp for schedule(dynamic, 8)
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::size_t rest = idx;
            for (int k = n - 1; k >= 0; --k) {
                digits[static_cast<std::size_t>(k)] = active[rest % a];
                rest /= a;
            }
            for (int k = 0; k < n; ++k) {
                for (int i = 0; i < n; ++i) {
                    weight[static_cast<std::size_t>(k * n + i)] =
                        &w[static_cast<std::size_t>(i)][static_cast<std::size_t>(digits[static_cast<std::size_t>(k)])];
                }
            }
            walker.reset();
            walker.walk_all(weight);
            auto& tuple = cs.tuples[idx];
            tuple.resize(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) tuple[static_cast<std::size_t>(k)] = digits[static_cast<std::size_t>(k)] + 1;
            cs.sums[idx] = walker.sums();
        }
    }
    return cs;
}

SparseTensor contract(const ClassSumTensor& cs, std::span<const std::int64_t> row, const Rational& prefactor) {
    SparseTensor out(cs.n, cs.d);
    const Rational factor = prefactor * cs.scale;
    if (factor == 0) return out;
    Integer acc;
    for (std::size_t t = 0; t < cs.tuples.size(); ++t) {
        acc = 0;
        const auto& s = cs.sums[t];
        for (std::size_t c = 0; c < s.size(); ++c) {
            if (row[c] != 0 && s[c] != 0) acc += s[c] * static_cast<long>(row[c]);
        }
        if (acc != 0) out.add(cs.tuples[t], Rational(acc) * factor);
    }
    return out;
}

bool contract_nonzero(const ClassSumTensor& cs, std::span<const std::int64_t> row) {
    Integer acc;
    for (const auto& s : cs.sums) {
        acc = 0;
        for (std::size_t c = 0; c < s.size(); ++c) {
            if (row[c] != 0 && s[c] != 0) acc += s[c] * static_cast<long>(row[c]);
        }
        if (acc != 0) return true;
    }
    return false;
}

std::vector<Rational> matrix_class_sums(const ExactMatrix& a, Execution exec) {
    if (a.rows() != a.cols()) throw SizeMismatch("matrix_class_sums: matrix is not square");
    const int n = static_cast<int>(a.rows());
    if (n > kDefaultPermutationCap) {
        throw CapExceeded("generalized matrix function: n = " + std::to_string(n) + " exceeds cap " + std::to_string(kDefaultPermutationCap));
    }
    const auto& class_of = class_index_by_lex_rank(n);
    const std::size_t classes = character_table(n).classes.size();
    if (n == 0) return {Rational(1)};

    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n));
    Integer denom = 1;
    for (int i = 0; i < n; ++i) denom *= clear_denominators(a.row(static_cast<std::size_t>(i)), rows[static_cast<std::size_t>(i)]);
    std::vector<const Integer*> weight(static_cast<std::size_t>(n * n));
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) weight[static_cast<std::size_t>(k * n + j)] = &rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    }

    // one task per choice of sigma(1); partial sums are combined in task order
    std::vector<std::vector<Integer>> partial(static_cast<std::size_t>(n), std::vector<Integer>(classes));
#pragma omp parallel for schedule(dynamic, 1) if (run_parallel(exec))
    for (int first = 0; first < n; ++first) {
        ClassSumWalker walker(n, class_of, classes);
        walker.walk_from(weight, first);
        partial[static_cast<std::size_t>(first)] = walker.sums();
    }
    std::vector<Rational> sums(classes);
    for (std::size_t c = 0; c < classes; ++c) {
        Integer total = 0;
        for (const auto& p : partial) total += p[c];
        sums[c] = Rational(total, denom);
        sums[c].canonicalize();
    }
    return sums;
}

SparseTensor apply_dense(const SparseTensor& w, const GroupAlgebraElement& x, Execution exec) {
    const int n = w.degree();
    const int d = w.dim();
    if (x.degree() != n) throw SizeMismatch("apply_dense: degree mismatch");
    const std::size_t total = checked_power(static_cast<std::size_t>(d), n, kDenseGatherCap);
    if (total > kDenseGatherCap) throw CapExceeded("apply_dense: d^n exceeds the dense cap");

    std::vector<std::size_t> place(static_cast<std::size_t>(n));
    for (int k = n - 1, p = 1; k >= 0; --k, p *= d) place[static_cast<std::size_t>(k)] = static_cast<std::size_t>(p);
    auto encode = [&](const std::vector<int>& t) {
        std::size_t idx = 0;
        for (int k = 0; k < n; ++k) idx += static_cast<std::size_t>(t[static_cast<std::size_t>(k)] - 1) * place[static_cast<std::size_t>(k)];
        return idx;
    };
    auto decode = [&](std::size_t idx, std::vector<int>& t) {
        for (int k = n - 1; k >= 0; --k) {
            t[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<std::size_t>(d)) + 1;
            idx /= static_cast<std::size_t>(d);
        }
    };

    std::vector<Rational> dense(total);
    std::set<std::vector<int>> contents;
    for (const auto& [t, v] : w.entries()) {
        dense[encode(t)] = v;
        auto sorted = t;
        std::sort(sorted.begin(), sorted.end());
        contents.insert(std::move(sorted));
    }
    // place permutation preserves content, so only these orbits can be hit
    std::vector<std::size_t> targets;
    {
        std::vector<int> t(static_cast<std::size_t>(n));
        for (std::size_t idx = 0; idx < total; ++idx) {
            decode(idx, t);
            std::sort(t.begin(), t.end());
            if (contents.contains(t)) targets.push_back(idx);
        }
    }

    std::vector<std::vector<int>> inverses;
    std::vector<const Rational*> coeffs;
    for (const auto& [p, c] : x.terms()) {
        inverses.push_back(p.inverse().images());
        coeffs.push_back(&c);
    }

    std::vector<Rational> out(targets.size());
#pragma omp parallel if (run_parallel(exec))
    {
        std::vector<int> t(static_cast<std::size_t>(n));
        std::vector<int> s(static_cast<std::size_t>(n));
#pragma omp for schedule(dynamic, 16)
        for (std::size_t i = 0; i < targets.size(); ++i) {
            decode(targets[i], t);
            Rational acc = 0;
            for (std::size_t q = 0; q < inverses.size(); ++q) {
                // (w . sigma)[t] = w[s] with s_j = t_{sigma^{-1}(j)}
                const auto& inv = inverses[q];
                for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(inv[static_cast<std::size_t>(j)] - 1)];
                const Rational& ws = dense[encode(s)];
                if (ws != 0) acc += *coeffs[q] * ws;
            }
            out[i] = std::move(acc);
        }
    }

    SparseTensor result(n, d);
    std::vector<int> t(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (out[i] == 0) continue;
        decode(targets[i], t);
        result.add(t, out[i]);
    }
    return result;
}

}  // namespace gamas
