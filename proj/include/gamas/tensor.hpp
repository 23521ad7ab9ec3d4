#pragma once

// Elements of V^{(x)n} over Q with the right S_n action by place permutation:
//   (v_1 (x) ... (x) v_n) . sigma = v_sigma(1) (x) ... (x) v_sigma(n),
// extended linearly. Index tuples are 1-based throughout the public API.

#include <cstddef>
#include <map>
#include <vector>

#include "gamas/characters.hpp"
#include "gamas/group_algebra.hpp"
#include "gamas/linalg.hpp"
#include "gamas/partition.hpp"

namespace gamas {

inline constexpr int kSymmetrizeDegreeCap = 8;
inline constexpr std::size_t kOperatorRankCap = 4096;

/// n vectors of a common dimension d; zero vectors are allowed.
class VectorConfiguration {
public:
    VectorConfiguration() = default;
    /// Throws SizeMismatch if some vector does not have dimension d.
    VectorConfiguration(int d, std::vector<ExactVector> vectors);

    int dim() const { return d_; }
    int size() const { return static_cast<int>(vectors_.size()); }
    const std::vector<ExactVector>& vectors() const { return vectors_; }
    const ExactVector& operator[](std::size_t i) const { return vectors_[i]; }

    bool has_zero_vector() const;
    int nonzero_count() const;

    /// Sub-configuration on the given 0-based indices, in that order.
    VectorConfiguration select(const std::vector<int>& indices) const;
    /// Zero-pads every vector to dimension new_dim >= dim().
    VectorConfiguration padded(int new_dim) const;

    bool operator==(const VectorConfiguration&) const = default;

private:
    int d_ = 0;
    std::vector<ExactVector> vectors_;
};

class SparseTensor {
public:
    using Index = std::vector<int>;
    using Entries = std::map<Index, Rational>;

    SparseTensor() = default;
    SparseTensor(int n, int d) : n_(n), d_(d) {}

    int degree() const { return n_; }
    int dim() const { return d_; }
    const Entries& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    Rational at(const Index& index) const;

    /// Adds value at a 1-based index tuple; zero results are pruned.
    void add(const Index& index, const Rational& value);

    SparseTensor& operator+=(const SparseTensor& o);
    SparseTensor& operator-=(const SparseTensor& o);
    SparseTensor& operator*=(const Rational& c);
    friend SparseTensor operator+(SparseTensor a, const SparseTensor& b) { return a += b; }
    friend SparseTensor operator-(SparseTensor a, const SparseTensor& b) { return a -= b; }
    friend SparseTensor operator*(const Rational& c, SparseTensor a) { return a *= c; }

    bool operator==(const SparseTensor&) const = default;

private:
    int n_ = 0;
    int d_ = 0;
    Entries entries_;
};

/// Product tensor of two tensors of the same dimension: degree n + m.
SparseTensor tensor_product(const SparseTensor& a, const SparseTensor& b);

/// <a, b> for the standard dot product on Q^d extended multiplicatively.
Rational inner_product(const SparseTensor& a, const SparseTensor& b);

/// v_1 (x) ... (x) v_n. Throws std::invalid_argument for an empty configuration.
SparseTensor decomposable(const VectorConfiguration& cfg);

/// w . sigma. On decomposables act(decomposable(v), sigma) = decomposable(v o sigma).
SparseTensor act(const SparseTensor& w, const Permutation& sigma);

/// sum_sigma x(sigma) (w . sigma). Uses the dense OpenMP gather kernel when d^n
/// is small enough, otherwise the sparse reference.
SparseTensor apply_algebra_element(const SparseTensor& w, const GroupAlgebraElement& x);

/// Serial sparse evaluation of the same sum, kept as the reference path.
SparseTensor apply_algebra_element_reference(const SparseTensor& w, const GroupAlgebraElement& x);

/// v^{(x)} T_lambda, evaluated by the class-sum kernel.
SparseTensor apply_t_lambda(const VectorConfiguration& cfg, const Partition& lambda);
SparseTensor apply_t_lambda(const VectorConfiguration& cfg, const Partition& lambda, const CharacterTable& table);

/// apply_algebra_element_reference(decomposable(cfg), central_idempotent(lambda)).
SparseTensor apply_t_lambda_reference(const VectorConfiguration& cfg, const Partition& lambda);

/// Exact zero test of v^{(x)} T_lambda.
bool nonzero_after_symmetrize(const VectorConfiguration& cfg, const Partition& lambda);
bool nonzero_after_symmetrize(const VectorConfiguration& cfg, const Partition& lambda, const CharacterTable& table);

/// G_ij = <v_i, v_j>.
ExactMatrix gram_matrix(const VectorConfiguration& cfg);

/// d_chi(A) = sum_sigma chi^lambda(sigma) prod_i A_{i, sigma(i)}.
Rational generalized_matrix_function(const ExactMatrix& a, const Partition& lambda);
Rational generalized_matrix_function(const ExactMatrix& a, const Partition& lambda, const CharacterTable& table);

/// Serial sum over all n! permutations, kept as the reference path.
Rational generalized_matrix_function_reference(const ExactMatrix& a, const Partition& lambda);

/// Rank of w -> w . x on all of (Q^d)^{(x)n}. Throws CapExceeded when d^n > kOperatorRankCap.
std::size_t operator_rank(const GroupAlgebraElement& x, int d);

}  // namespace gamas
