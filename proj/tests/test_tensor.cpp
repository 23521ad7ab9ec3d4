#include <doctest.h>

#include "gamas/characters.hpp"
#include "gamas/errors.hpp"
#include "gamas/kernels.hpp"
#include "gamas/matroid.hpp"
#include "gamas/tableau.hpp"
#include "gamas/tensor.hpp"
#include "test_support.hpp"

using namespace gamas;
using namespace gamas::testing;

namespace {

// decomposable(v o sigma) with (v o sigma)_i = v_{sigma(i)}, built without act
SparseTensor permuted_decomposable(const VectorConfiguration& cfg, const Permutation& sigma) {
    std::vector<ExactVector> vs;
    for (int i = 1; i <= cfg.size(); ++i) vs.push_back(cfg[static_cast<std::size_t>(sigma(i) - 1)]);
    return decomposable(VectorConfiguration(cfg.dim(), vs));
}

// Full d^n x d^n matrix of w -> w.x on the standard basis, row-reduced.
std::size_t brute_operator_rank(const GroupAlgebraElement& x, int d) {
    const int n = x.degree();
    std::size_t total = 1;
    for (int k = 0; k < n; ++k) total *= static_cast<std::size_t>(d);
    ExactMatrix m(total, total);
    for (std::size_t r = 0; r < total; ++r) {
        std::vector<ExactVector> basis;
        std::size_t rest = r;
        std::vector<int> digits(static_cast<std::size_t>(n));
        for (int k = n - 1; k >= 0; --k) {
            digits[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(d)) + 1;
            rest /= static_cast<std::size_t>(d);
        }
        for (int k = 0; k < n; ++k) basis.push_back(unit(d, digits[static_cast<std::size_t>(k)]));
        const SparseTensor image = apply_algebra_element_reference(decomposable(VectorConfiguration(d, basis)), x);
        for (const auto& [idx, v] : image.entries()) {
            std::size_t c = 0;
            for (int k = 0; k < n; ++k) c = c * static_cast<std::size_t>(d) + static_cast<std::size_t>(idx[static_cast<std::size_t>(k)] - 1);
            m(r, c) = v;
        }
    }
    return rank(m);
}

Rational det3(const ExactMatrix& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace

TEST_CASE("decomposable") {
    const auto e = decomposable(config(2, {unit(2, 1), unit(2, 2)}));
    CHECK(e.entries().size() == 1);
    CHECK(e.at({1, 2}) == 1);
    CHECK(decomposable(config(2, {unit(2, 1), vec({0, 0})})).is_zero());
    const auto t = decomposable(config(2, {vec({1, 1}), unit(2, 1)}));
    CHECK(t.entries().size() == 2);
    CHECK(t.at({1, 1}) == 1);
    CHECK(t.at({2, 1}) == 1);
    CHECK_THROWS_AS(VectorConfiguration(2, {vec({1, 2, 3})}), SizeMismatch);
}

TEST_CASE("act") {
    const auto w = decomposable(config(2, {unit(2, 1), unit(2, 2)}));
    CHECK(act(w, Permutation::identity(2)) == w);
    const auto swapped = act(w, Permutation{2, 1});
    CHECK(swapped == decomposable(config(2, {unit(2, 2), unit(2, 1)})));
    CHECK(swapped.at({2, 1}) == 1);

    const auto cfg = config(2, {unit(2, 1), unit(2, 2), vec({1, 1})});
    const auto sigma = Permutation::from_cycles(3, {{1, 2, 3}});
    const auto tau = Permutation::from_cycles(3, {{1, 2}});
    const auto lhs = act(act(decomposable(cfg), sigma), tau);
    CHECK(lhs == act(decomposable(cfg), compose(sigma, tau)));
    CHECK(lhs == permuted_decomposable(cfg, compose(sigma, tau)));
    CHECK_THROWS_AS(act(w, Permutation::identity(3)), SizeMismatch);
}

TEST_CASE("act agrees with the decomposable rule") {
    TrialRng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 5));
        const int d = static_cast<int>(rng.uniform_int(1, 3));
        const auto cfg = random_config(rng, n, d);
        const auto sigma = random_permutation(rng, n);
        CHECK(act(decomposable(cfg), sigma) == permuted_decomposable(cfg, sigma));
    }
}

TEST_CASE("right action and module compatibility") {
    TrialRng rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 6));
        const int d = static_cast<int>(rng.uniform_int(1, 3));
        const auto w = random_tensor(rng, n, d, 6);
        const auto s = random_permutation(rng, n);
        const auto t = random_permutation(rng, n);
        CHECK(act(act(w, s), t) == act(w, compose(s, t)));

        GroupAlgebraElement x(n), y(n);
        for (int k = 0; k < 3; ++k) {
            x.add_term(random_permutation(rng, n), rng.nonzero_rational(3));
            y.add_term(random_permutation(rng, n), rng.nonzero_rational(3));
        }
        const auto lhs = apply_algebra_element_reference(w, algebra_multiply(x, y));
        CHECK(lhs == apply_algebra_element_reference(apply_algebra_element_reference(w, x), y));
        CHECK(apply_dense(w, x, Execution::serial) == apply_algebra_element_reference(w, x));
        CHECK(apply_dense(w, x, Execution::parallel) == apply_algebra_element_reference(w, x));
    }
}

TEST_CASE("apply_algebra_element examples") {
    TrialRng rng(47);
    const auto w = random_tensor(rng, 3, 2, 5);
    CHECK(apply_algebra_element(w, GroupAlgebraElement::identity(3)) == w);

    const auto v = vec({3, -2});
    const auto vv = decomposable(config(2, {v, v}));
    CHECK(apply_algebra_element(vv, GroupAlgebraElement::identity(2) - GroupAlgebraElement::basis(Permutation{2, 1})).is_zero());
}

TEST_CASE("antisymmetrizing the first two factors of a five-fold product") {
    TrialRng rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        ExactVector v1, v2;
        do {
            v1 = {rng.nonzero_rational(7), Rational(static_cast<long>(rng.uniform_int(-4, 4)))};
            v2 = {Rational(static_cast<long>(rng.uniform_int(-4, 4))), rng.nonzero_rational(7)};
        } while (!is_independent(std::vector<ExactVector>{v1, v2}));
        const auto v3 = random_vector(rng, 2, 3);
        const auto v4 = random_vector(rng, 2, 3);
        const auto v5 = random_vector(rng, 2, 3);
        const auto cfg = config(2, {v1, v2, v3, v4, v5});
        const auto lhs = apply_algebra_element(decomposable(cfg), antisymmetrizer(5, {1, 2}));
        const auto wedge = decomposable(config(2, {v1, v2})) - decomposable(config(2, {v2, v1}));
        const auto rest = is_zero(v3) || is_zero(v4) || is_zero(v5) ? SparseTensor(3, 2) : decomposable(config(2, {v3, v4, v5}));
        CHECK(lhs == tensor_product(wedge, rest));
    }
}

TEST_CASE("apply_t_lambda examples") {
    const auto v = vec({1, 2});
    const auto w = vec({-1, 3});
    const auto sym = apply_t_lambda(config(2, {v, w}), Partition{2});
    CHECK(sym == q(1, 2) * (decomposable(config(2, {v, w})) + decomposable(config(2, {w, v}))));
    CHECK(apply_t_lambda(config(2, {v, v}), Partition{1, 1}).is_zero());

    // six-term sum with the (2,1) row: chi = 2 on (1^3), 0 on (2,1), -1 on (3)
    const auto cfg = config(2, {unit(2, 1), unit(2, 1), unit(2, 2)});
    SparseTensor direct(3, 2);
    for (const auto& sigma : all_permutations(3)) {
        const auto type = sign_and_cycle_type(sigma).cycle_type;
        const long chi = type == Partition{1, 1, 1} ? 2 : type == Partition{3} ? -1 : 0;
        direct += Rational(chi) * permuted_decomposable(cfg, sigma);
    }
    direct *= q(2, 6);
    const auto t = apply_t_lambda(cfg, Partition{2, 1});
    CHECK(t == direct);
    CHECK(t.at({1, 1, 2}) == q(2, 3));
    CHECK(t.at({1, 2, 1}) == q(-1, 3));
    CHECK(t.at({2, 1, 1}) == q(-1, 3));
    CHECK(t.entries().size() == 3);
    CHECK_THROWS_AS(apply_t_lambda(cfg, Partition{2}), SizeMismatch);
}

TEST_CASE("nonzero_after_symmetrize examples") {
    TrialRng rng(59);
    for (int n = 1; n <= 6; ++n) {
        auto cfg = random_config(rng, n, 2, false);
        CHECK(nonzero_after_symmetrize(cfg, Partition{n}));
    }
    CHECK_FALSE(nonzero_after_symmetrize(config(2, {unit(2, 1), vec({0, 0}), unit(2, 2)}), Partition{3}));
    CHECK_FALSE(nonzero_after_symmetrize(config(2, {unit(2, 1), unit(2, 1), unit(2, 2)}), Partition{1, 1, 1}));
    const auto nine = config(1, std::vector<ExactVector>(9, vec({1})));
    CHECK_THROWS_AS(nonzero_after_symmetrize(nine, Partition{9}), CapExceeded);
}

TEST_CASE("class-sum kernel matches the sparse reference") {
    TrialRng rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 5));
        const int d = static_cast<int>(rng.uniform_int(1, 3));
        const auto cfg = random_config(rng, n, d);
        const auto shapes = partitions_of(n);
        const auto& lambda = shapes[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(shapes.size()) - 1))];
        const auto reference = apply_t_lambda_reference(cfg, lambda);
        CHECK(apply_t_lambda(cfg, lambda) == reference);
        const auto serial = class_sum_tensor(cfg, Execution::serial);
        const auto& table = character_table(n);
        Rational pre(static_cast<long>(table.row(lambda).back()), static_cast<unsigned long>(factorial(n)));
        pre.canonicalize();
        CHECK(contract(serial, table.row(lambda), pre) == reference);
        CHECK(contract_nonzero(serial, table.row(lambda)) == !reference.is_zero());
    }
}

TEST_CASE("T_lambda is a complete system of projectors") {
    TrialRng rng(67);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 4));
        const int d = static_cast<int>(rng.uniform_int(1, 3));
        const auto w = random_tensor(rng, n, d, 5);
        SparseTensor total(n, d);
        for (const auto& lambda : partitions_of(n)) {
            const auto e = central_idempotent(lambda);
            const auto once = apply_algebra_element(w, e);
            CHECK(apply_algebra_element(once, e) == once);
            total += once;
        }
        CHECK(total == w);
    }
}

TEST_CASE("gram_matrix") {
    CHECK(gram_matrix(config(3, {unit(3, 1), unit(3, 2), unit(3, 3)})) == ExactMatrix::identity(3));
    CHECK(gram_matrix(config(2, {unit(2, 1), unit(2, 1)})) == ExactMatrix(2, 2, {q(1), q(1), q(1), q(1)}));
    CHECK(gram_matrix(config(2, {vec({1, 1}), unit(2, 1)})) == ExactMatrix(2, 2, {q(2), q(1), q(1), q(1)}));
}

TEST_CASE("generalized matrix function") {
    TrialRng rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> entries;
        for (int k = 0; k < 9; ++k) entries.push_back(rng.nonzero_rational(5));
        const ExactMatrix a(3, 3, entries);
        CHECK(generalized_matrix_function(a, Partition{1, 1, 1}) == det3(a));
    }
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            CHECK(generalized_matrix_function(ExactMatrix::identity(static_cast<std::size_t>(n)), lambda) ==
                  static_cast<long>(syt_count(lambda)));
        }
    }
    const ExactMatrix ones(3, 3, std::vector<Rational>(9, Rational(1)));
    CHECK(generalized_matrix_function(ones, Partition{2, 1}) == 0);
    CHECK(generalized_matrix_function(ones, Partition{3}) == 6);  // permanent
    CHECK_THROWS_AS(generalized_matrix_function(ones, Partition{2}), SizeMismatch);

    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 6));
        std::vector<Rational> entries;
        for (int k = 0; k < n * n; ++k) entries.push_back(rng.bernoulli(0.3) ? Rational(0) : rng.nonzero_rational(4));
        const ExactMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n), entries);
        const auto shapes = partitions_of(n);
        const auto& lambda = shapes[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(shapes.size()) - 1))];
        CHECK(generalized_matrix_function(a, lambda) == generalized_matrix_function_reference(a, lambda));
        CHECK(matrix_class_sums(a, Execution::serial) == matrix_class_sums(a, Execution::parallel));
    }
}

TEST_CASE("Gram identity and nonnegativity") {
    TrialRng rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 6));
        const int d = static_cast<int>(rng.uniform_int(1, 3));
        const auto cfg = random_config(rng, n, d);
        for (const auto& lambda : partitions_of(n)) {
            const auto t = apply_t_lambda(cfg, lambda);
            const Rational gmf = generalized_matrix_function(gram_matrix(cfg), lambda);
            Rational pre(static_cast<long>(syt_count(lambda)), static_cast<unsigned long>(factorial(n)));
            pre.canonicalize();
            CHECK(inner_product(t, t) == pre * gmf);
            CHECK(gmf >= 0);
        }
    }
}

TEST_CASE("operator_rank") {
    CHECK(operator_rank(central_idempotent(Partition{2}), 2) == 3);
    CHECK(brute_operator_rank(central_idempotent(Partition{2}), 2) == 3);
    CHECK(operator_rank(central_idempotent(Partition{1, 1}), 2) == 1);
    CHECK(brute_operator_rank(central_idempotent(Partition{1, 1}), 2) == 1);
    const auto y = young_symmetrizer(Tableau::row_reading(Partition{2, 1}));
    CHECK(brute_operator_rank(y, 2) == 2);
    CHECK(operator_rank(y, 2) == 2);
    CHECK(weyl_dimension(Partition{2, 1}, 2) == 2);
    CHECK_THROWS_AS(operator_rank(GroupAlgebraElement::identity(9), 3), CapExceeded);

    for (int n = 1; n <= 4; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int d = 1; d <= 3; ++d) {
                const auto e = central_idempotent(lambda);
                const auto r = operator_rank(e, d);
                CHECK(r == syt_count(lambda) * weyl_dimension(lambda, d));
                if (n <= 3) CHECK(r == brute_operator_rank(e, d));
            }
        }
    }
}

TEST_CASE("column criterion") {
    TrialRng rng(79);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 6));
        const int d = static_cast<int>(rng.uniform_int(1, 3));
        const auto cfg = random_config(rng, n, d);
        const auto shapes = partitions_of(n);
        const auto& shape = shapes[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(shapes.size()) - 1))];
        const auto perm = random_permutation(rng, n);
        std::vector<std::vector<int>> rows;
        int next = 1;
        for (int p : shape.parts()) {
            std::vector<int> r;
            for (int j = 0; j < p; ++j) r.push_back(perm(next++));
            rows.push_back(r);
        }
        const Tableau t(rows);
        bool independent = true;
        for (const auto& col : t.columns()) {
            std::vector<ExactVector> vs;
            for (int i : col) vs.push_back(cfg[static_cast<std::size_t>(i - 1)]);
            independent = independent && is_independent(vs);
        }
        CHECK(apply_algebra_element(decomposable(cfg), column_antisymmetrizer(t)).is_zero() == !independent);
    }
}

TEST_CASE("dimension invariance under zero padding") {
    TrialRng rng(83);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 6));
        const int d = static_cast<int>(rng.uniform_int(1, 3));
        const auto cfg = random_config(rng, n, d);
        for (const auto& lambda : partitions_of(n)) {
            CHECK(nonzero_after_symmetrize(cfg, lambda) == nonzero_after_symmetrize(cfg.padded(d + 1), lambda));
        }
    }
}

TEST_CASE("det twist: antisymmetrizing a basis strips one column") {
    TrialRng rng(89);
    int applicable = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int d = static_cast<int>(rng.uniform_int(1, 3));
        const int n = static_cast<int>(rng.uniform_int(d, 6));
        const auto cfg = random_config(rng, n, d);
        std::vector<int> first;
        for (int i = 0; i < d; ++i) first.push_back(i);
        if (!is_independent(cfg.select(first).vectors())) continue;
        std::vector<int> block, rest;
        for (int i = 1; i <= d; ++i) block.push_back(i);
        for (int i = d; i < n; ++i) rest.push_back(i);
        const auto twisted = apply_algebra_element(decomposable(cfg), antisymmetrizer(n, block));
        for (const auto& lambda : partitions_of(n)) {
            if (lambda.length() != d) continue;
            ++applicable;
            const bool lhs = !apply_algebra_element(twisted, central_idempotent(lambda)).is_zero();
            const bool rhs = n == d || nonzero_after_symmetrize(cfg.select(rest), remove_first_column(lambda));
            CHECK(lhs == rhs);
        }
    }
    CHECK(applicable > 20);
}
