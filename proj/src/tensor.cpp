#include "gamas/tensor.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "gamas/errors.hpp"
#include "gamas/kernels.hpp"

namespace gamas {

VectorConfiguration::VectorConfiguration(int d, std::vector<ExactVector> vectors)
    : d_(d), vectors_(std::move(vectors)) {
    if (d < 0) throw std::invalid_argument("negative dimension");
    for (const auto& v : vectors_) {
        if (static_cast<int>(v.size()) != d) throw SizeMismatch("configuration vector has the wrong dimension");
    }
}

bool VectorConfiguration::has_zero_vector() const {
    return std::any_of(vectors_.begin(), vectors_.end(), [](const ExactVector& v) { return is_zero(v); });
}

int VectorConfiguration::nonzero_count() const {
    return static_cast<int>(std::count_if(vectors_.begin(), vectors_.end(), [](const ExactVector& v) { return !is_zero(v); }));
}

VectorConfiguration VectorConfiguration::select(const std::vector<int>& indices) const {
    std::vector<ExactVector> out;
    for (int i : indices) out.push_back(vectors_.at(static_cast<std::size_t>(i)));
    return {d_, std::move(out)};
}

VectorConfiguration VectorConfiguration::padded(int new_dim) const {
    if (new_dim < d_) throw std::invalid_argument("padded: new dimension is smaller");
    std::vector<ExactVector> out = vectors_;
    for (auto& v : out) v.resize(static_cast<std::size_t>(new_dim), Rational(0));
    return {new_dim, std::move(out)};
}

Rational SparseTensor::at(const Index& index) const {
    const auto it = entries_.find(index);
    return it == entries_.end() ? Rational(0) : it->second;
}

void SparseTensor::add(const Index& index, const Rational& value) {
    if (static_cast<int>(index.size()) != n_) throw SizeMismatch("tensor index of the wrong length");
    for (int i : index) {
        if (i < 1 || i > d_) throw std::out_of_range("tensor index entry out of range");
    }
    if (value == 0) return;
    auto [it, inserted] = entries_.try_emplace(index, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) entries_.erase(it);
    }
}

SparseTensor& SparseTensor::operator+=(const SparseTensor& o) {
    if (o.n_ != n_ || o.d_ != d_) throw SizeMismatch("tensor shapes differ");
    for (const auto& [k, v] : o.entries_) add(k, v);
    return *this;
}

SparseTensor& SparseTensor::operator-=(const SparseTensor& o) {
    if (o.n_ != n_ || o.d_ != d_) throw SizeMismatch("tensor shapes differ");
    for (const auto& [k, v] : o.entries_) add(k, -v);
    return *this;
}

SparseTensor& SparseTensor::operator*=(const Rational& c) {
    if (c == 0) {
        entries_.clear();
        return *this;
    }
    for (auto& [k, v] : entries_) v *= c;
    return *this;
}

SparseTensor tensor_product(const SparseTensor& a, const SparseTensor& b) {
    if (a.dim() != b.dim()) throw SizeMismatch("tensor_product: differing dimension");
    SparseTensor out(a.degree() + b.degree(), a.dim());
    for (const auto& [i, x] : a.entries()) {
        for (const auto& [j, y] : b.entries()) {
            auto idx = i;
            idx.insert(idx.end(), j.begin(), j.end());
            out.add(idx, x * y);
        }
    }
    return out;
}

Rational inner_product(const SparseTensor& a, const SparseTensor& b) {
    if (a.degree() != b.degree() || a.dim() != b.dim()) throw SizeMismatch("inner_product: tensor shapes differ");
    Rational s = 0;
    for (const auto& [k, v] : a.entries()) {
        const auto it = b.entries().find(k);
        if (it != b.entries().end()) s += v * it->second;
    }
    return s;
}

SparseTensor decomposable(const VectorConfiguration& cfg) {
    const int n = cfg.size();
    if (n < 1) throw std::invalid_argument("decomposable: empty configuration");
    SparseTensor out(n, cfg.dim());
    if (cfg.has_zero_vector()) return out;
    std::vector<std::vector<int>> support(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < cfg.dim(); ++j) {
            if (cfg[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] != 0) support[static_cast<std::size_t>(k)].push_back(j);
        }
    }
    std::vector<int> index(static_cast<std::size_t>(n));
    std::vector<Rational> prefix(static_cast<std::size_t>(n) + 1);
    prefix[0] = 1;
    // odometer over the supports, most significant position first
    std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
    for (;;) {
        for (int k = 0; k < n; ++k) {
            const auto uk = static_cast<std::size_t>(k);
            const int j = support[uk][pos[uk]];
            index[uk] = j + 1;
            prefix[uk + 1] = prefix[uk] * cfg[uk][static_cast<std::size_t>(j)];
        }
        out.add(index, prefix[static_cast<std::size_t>(n)]);
        int k = n - 1;
        while (k >= 0 && ++pos[static_cast<std::size_t>(k)] == support[static_cast<std::size_t>(k)].size()) {
            pos[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return out;
}

SparseTensor act(const SparseTensor& w, const Permutation& sigma) {
    if (sigma.degree() != w.degree()) throw SizeMismatch("act: permutation degree differs from tensor degree");
    SparseTensor out(w.degree(), w.dim());
    const int n = w.degree();
    std::vector<int> t(static_cast<std::size_t>(n));
    for (const auto& [s, v] : w.entries()) {
        // entry at s moves to t = s o sigma
        for (int k = 1; k <= n; ++k) t[static_cast<std::size_t>(k - 1)] = s[static_cast<std::size_t>(sigma(k) - 1)];
        out.add(t, v);
    }
    return out;
}

SparseTensor apply_algebra_element_reference(const SparseTensor& w, const GroupAlgebraElement& x) {
    if (x.degree() != w.degree()) throw SizeMismatch("apply_algebra_element: degree mismatch");
    SparseTensor out(w.degree(), w.dim());
    const int n = w.degree();
    std::vector<int> t(static_cast<std::size_t>(n));
    for (const auto& [sigma, c] : x.terms()) {
        for (const auto& [s, v] : w.entries()) {
            for (int k = 1; k <= n; ++k) t[static_cast<std::size_t>(k - 1)] = s[static_cast<std::size_t>(sigma(k) - 1)];
            out.add(t, c * v);
        }
    }
    return out;
}

SparseTensor apply_algebra_element(const SparseTensor& w, const GroupAlgebraElement& x) {
    if (x.degree() != w.degree()) throw SizeMismatch("apply_algebra_element: degree mismatch");
    std::size_t total = 1;
    for (int k = 0; k < w.degree() && total <= (std::size_t{1} << 16); ++k) total *= static_cast<std::size_t>(std::max(w.dim(), 1));
    if (total <= (std::size_t{1} << 16)) return apply_dense(w, x);
    return apply_algebra_element_reference(w, x);
}

namespace {

Rational idempotent_prefactor(const Partition& lambda, const CharacterTable& table) {
    const auto row = table.row(lambda);
    Rational r(static_cast<long>(row.back()), static_cast<unsigned long>(factorial(lambda.size())));
    r.canonicalize();
    return r;
}

void check_shape(const VectorConfiguration& cfg, const Partition& lambda, const CharacterTable& table) {
    if (lambda.size() != cfg.size()) throw SizeMismatch("shape size " + std::to_string(lambda.size()) + " differs from configuration size " + std::to_string(cfg.size()));
    if (table.n != cfg.size()) throw SizeMismatch("character table is for a different n");
}

}  // namespace

SparseTensor apply_t_lambda(const VectorConfiguration& cfg, const Partition& lambda, const CharacterTable& table) {
    check_shape(cfg, lambda, table);
    const ClassSumTensor cs = class_sum_tensor(cfg);
    return contract(cs, table.row(lambda), idempotent_prefactor(lambda, table));
}

SparseTensor apply_t_lambda(const VectorConfiguration& cfg, const Partition& lambda) {
    return apply_t_lambda(cfg, lambda, character_table(lambda.size()));
}

SparseTensor apply_t_lambda_reference(const VectorConfiguration& cfg, const Partition& lambda) {
    if (lambda.size() != cfg.size()) throw SizeMismatch("shape size differs from configuration size");
    if (cfg.size() > kSymmetrizeDegreeCap) throw CapExceeded("symmetrization degree exceeds cap");
    return apply_algebra_element_reference(decomposable(cfg), central_idempotent(lambda));
}

bool nonzero_after_symmetrize(const VectorConfiguration& cfg, const Partition& lambda, const CharacterTable& table) {
    check_shape(cfg, lambda, table);
    return contract_nonzero(class_sum_tensor(cfg), table.row(lambda));
}

bool nonzero_after_symmetrize(const VectorConfiguration& cfg, const Partition& lambda) {
    return nonzero_after_symmetrize(cfg, lambda, character_table(lambda.size()));
}

ExactMatrix gram_matrix(const VectorConfiguration& cfg) {
    const auto n = static_cast<std::size_t>(cfg.size());
    ExactMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            g(i, j) = dot(cfg[i], cfg[j]);
            g(j, i) = g(i, j);
        }
    }
    return g;
}

Rational generalized_matrix_function(const ExactMatrix& a, const Partition& lambda, const CharacterTable& table) {
    if (a.rows() != a.cols() || static_cast<int>(a.rows()) != lambda.size()) {
        throw SizeMismatch("generalized_matrix_function: matrix must be n x n with n = |lambda|");
    }
    const auto sums = matrix_class_sums(a);
    const auto row = table.row(lambda);
    Rational value = 0;
    for (std::size_t c = 0; c < sums.size(); ++c) value += sums[c] * Rational(static_cast<long>(row[c]));
    return value;
}

Rational generalized_matrix_function(const ExactMatrix& a, const Partition& lambda) {
    return generalized_matrix_function(a, lambda, character_table(lambda.size()));
}

Rational generalized_matrix_function_reference(const ExactMatrix& a, const Partition& lambda) {
    const int n = lambda.size();
    if (a.rows() != a.cols() || static_cast<int>(a.rows()) != n) {
        throw SizeMismatch("generalized_matrix_function: matrix must be n x n with n = |lambda|");
    }
    Rational value = 0;
    for_each_permutation(n, [&](const Permutation& sigma) {
        Rational term = character_value(lambda, sign_and_cycle_type(sigma).cycle_type);
        for (int i = 1; i <= n && term != 0; ++i) term *= a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(sigma(i) - 1));
        value += term;
    });
    return value;
}

std::size_t operator_rank(const GroupAlgebraElement& x, int d) {
    const int n = x.degree();
    if (d < 0) throw std::invalid_argument("operator_rank: negative dimension");
    std::size_t total = 1;
    for (int k = 0; k < n; ++k) {
        total *= static_cast<std::size_t>(d);
        if (total > kOperatorRankCap) throw CapExceeded("operator_rank: d^n exceeds cap " + std::to_string(kOperatorRankCap));
    }
    if (d == 0 && n > 0) return 0;

    // place permutations preserve the content of an index tuple, so the
    // operator is block diagonal over content classes
    std::map<std::vector<int>, std::vector<std::vector<int>>> blocks;
    std::vector<int> t(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (int k = n - 1; k >= 0; --k) {
            t[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(d)) + 1;
            rest /= static_cast<std::size_t>(d);
        }
        auto key = t;
        std::sort(key.begin(), key.end());
        blocks[key].push_back(t);
    }
    std::vector<const std::vector<std::vector<int>>*> block_list;
    for (const auto& [k, b] : blocks) block_list.push_back(&b);

    std::size_t result = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : result) if (!omp_in_parallel())
    for (std::size_t bi = 0; bi < block_list.size(); ++bi) {
        const auto& block = *block_list[bi];
        std::map<std::vector<int>, std::size_t> column;
        for (std::size_t i = 0; i < block.size(); ++i) column.emplace(block[i], i);
        ExactMatrix m(block.size(), block.size());
        std::vector<int> image(static_cast<std::size_t>(n));
        for (std::size_t r = 0; r < block.size(); ++r) {
            const auto& s = block[r];
            for (const auto& [sigma, c] : x.terms()) {
                for (int k = 1; k <= n; ++k) image[static_cast<std::size_t>(k - 1)] = s[static_cast<std::size_t>(sigma(k) - 1)];
                m(r, column.at(image)) += c;
            }
        }
        result += rank(m);
    }
    return result;
}

}  // namespace gamas
