#pragma once

// Data-parallel kernels behind the tensor module. Each kernel takes an
// Execution flag; Execution::serial runs the same code on one thread, which is
// what the benchmark compares against. Exact arithmetic makes the result
// independent of scheduling.

#include <cstdint>
#include <span>
#include <vector>

#include "gamas/group_algebra.hpp"
#include "gamas/linalg.hpp"

namespace gamas {

class VectorConfiguration;
class SparseTensor;

enum class Execution { serial, parallel };

/// Per-class partial sums of a decomposable tensor's symmetrization. For each
/// index tuple t over the active coordinates,
///   sums[t][c] = sum over sigma of cycle class c of prod_k w_{sigma(k)}[t_k],
/// where w_i is v_i with denominators cleared. Any character row then gives
/// (v^{(x)} . sum_sigma chi(sigma) sigma)[t] = scale * sum_c chi_c sums[t][c].
struct ClassSumTensor {
    int n = 0;
    int d = 0;
    std::vector<std::vector<int>> tuples;  // 1-based, lexicographic
    std::vector<std::vector<Integer>> sums;
    Rational scale = 1;
};

/// Throws CapExceeded when n > kSymmetrizeDegreeCap or the number of active
/// index tuples exceeds 2^20.
ClassSumTensor class_sum_tensor(const VectorConfiguration& cfg, Execution exec = Execution::parallel);

/// prefactor * sum_c row[c] * sums[t][c] over all tuples, as a sparse tensor.
SparseTensor contract(const ClassSumTensor& cs, std::span<const std::int64_t> row, const Rational& prefactor);

/// Whether contract(cs, row, 1) has any nonzero entry; stops at the first one.
bool contract_nonzero(const ClassSumTensor& cs, std::span<const std::int64_t> row);

/// sums[c] = sum over sigma of class c of prod_i a(i, sigma(i)).
std::vector<Rational> matrix_class_sums(const ExactMatrix& a, Execution exec = Execution::parallel);

/// Dense gather evaluation of sum_sigma x(sigma) (w . sigma) over index tuples
/// in the orbits of w's support. Requires d^n <= 2^16.
SparseTensor apply_dense(const SparseTensor& w, const GroupAlgebraElement& x, Execution exec = Execution::parallel);

}  // namespace gamas
