// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic only.
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "gamas/characters.hpp"
#include "gamas/errors.hpp"
#include "gamas/kernels.hpp"
#include "gamas/matroid.hpp"
#include "gamas/random.hpp"
#include "gamas/tableau.hpp"
#include "gamas/tensor.hpp"
#include "gamas/verify.hpp"
#include "../test_support.hpp"

using namespace gamas;
using namespace gamas::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

const Partition& pick(TrialRng& rng, const std::vector<Partition>& shapes) {
    return shapes[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(shapes.size()) - 1))];
}

// f^lambda by the branching rule: remove one corner at a time.
std::uint64_t syt_by_branching(const Partition& lambda, std::map<Partition, std::uint64_t>& memo) {
    if (lambda.size() <= 1) return 1;
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    auto parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
        auto smaller = parts;
        --smaller[i];
        if (smaller[i] == 0) smaller.pop_back();
        total += syt_by_branching(Partition(smaller), memo);
    }
    memo[lambda] = total;
    return total;
}

Tableau random_tableau(TrialRng& rng, const Partition& shape) {
    const auto perm = random_permutation(rng, shape.size());
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int p : shape.parts()) {
        std::vector<int> r;
        for (int j = 0; j < p; ++j) r.push_back(perm(next++));
        rows.push_back(r);
    }
    return Tableau(rows);
}

Outcome ac1() {
    Outcome o;
    TrialSpec spec;
    const auto base = run_verification(spec);
    if (base.checks.count("four-decider") == 0) o.fail("no four-decider checks ran");
    if (!base.ok()) o.fail(std::to_string(base.violations.size()) + " violations in the default run, first: " + base.violations.front().suite);
    spec.n_max = 6;
    const auto extended = run_verification(spec);
    if (!extended.ok()) o.fail(std::to_string(extended.violations.size()) + " violations in the n_max=6 run");
    if (o.pass) {
        o.detail = std::to_string(base.trials_run) + " + " + std::to_string(extended.trials_run) + " trials, " +
                   std::to_string(base.checks.at("four-decider") + extended.checks.at("four-decider")) +
                   " (cfg, lambda) pairs, 0 violations";
    }
    return o;
}

Outcome ac2() {
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        const auto& t = character_table(n);
        const Integer nfact(static_cast<unsigned long>(factorial(n)));
        const std::size_t k = t.shapes.size();
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                Integer rows = 0, cols = 0;
                for (std::size_t c = 0; c < k; ++c) {
                    rows += Integer(static_cast<unsigned long>(t.class_sizes[c])) * Integer(static_cast<long>(t.rows[a][c])) *
                            Integer(static_cast<long>(t.rows[b][c]));
                    cols += Integer(static_cast<long>(t.rows[c][a])) * Integer(static_cast<long>(t.rows[c][b]));
                }
                if (rows != (a == b ? nfact : Integer(0))) o.fail("row orthogonality, n=" + std::to_string(n));
                const Integer centralizer = a == b ? nfact / Integer(static_cast<unsigned long>(t.class_sizes[a])) : Integer(0);
                if (cols != centralizer) o.fail("column orthogonality, n=" + std::to_string(n));
            }
        }
    }
    for (int n = 1; n <= 5; ++n) {
        const auto shapes = partitions_of(n);
        std::vector<GroupAlgebraElement> e;
        GroupAlgebraElement sum(n);
        for (const auto& s : shapes) {
            e.push_back(central_idempotent(s));
            sum += e.back();
        }
        if (sum != GroupAlgebraElement::identity(n)) o.fail("idempotents do not sum to 1, n=" + std::to_string(n));
        for (std::size_t a = 0; a < e.size(); ++a) {
            for (std::size_t b = 0; b < e.size(); ++b) {
                const auto prod = e[a] * e[b];
                if (a == b ? prod != e[a] : !prod.is_zero()) o.fail("e_lambda e_mu, n=" + std::to_string(n));
            }
        }
    }
    std::map<Partition, std::uint64_t> memo;
    for (int n = 1; n <= 10; ++n) {
        for (const auto& s : partitions_of(n)) {
            const auto dim = character_value(s, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
            if (dim < 0 || static_cast<std::uint64_t>(dim) != syt_count(s) || syt_count(s) != syt_by_branching(s, memo)) {
                o.fail("chi(1^n) for " + s.to_string());
            }
        }
    }
    if (o.pass) o.detail = "orthogonality n<=8, idempotents n<=5, degrees n<=10";
    return o;
}

Outcome ac3() {
    Outcome o;
    int cases = 0;
    for (int n = 1; n <= 5; ++n) {
        for (const auto& s : partitions_of(n)) {
            const auto e = central_idempotent(s);
            for (int d : {2, 3}) {
                std::size_t total = 1;
                for (int k = 0; k < n; ++k) total *= static_cast<std::size_t>(d);
                if (total > 4096) continue;
                ++cases;
                if (operator_rank(e, d) != syt_count(s) * weyl_dimension(s, d)) {
                    o.fail("rank law fails for " + s.to_string() + ", d=" + std::to_string(d));
                }
            }
        }
    }
    if (o.pass) o.detail = std::to_string(cases) + " (lambda, d) cases";
    return o;
}

Outcome ac4() {
    Outcome o;
    TrialRng rng(0xA4);
    int pairs = 0;
    while (pairs < 600) {
        const int n = static_cast<int>(rng.uniform_int(1, 6));
        const int d = static_cast<int>(rng.uniform_int(1, 4));
        const auto cfg = random_config(rng, n, d);
        const auto lambda = pick(rng, partitions_of(n));
        const auto t = apply_t_lambda(cfg, lambda);
        const Rational gmf = generalized_matrix_function(gram_matrix(cfg), lambda);
        Rational pre(static_cast<unsigned long>(syt_count(lambda)), static_cast<unsigned long>(factorial(n)));
        pre.canonicalize();
        if (inner_product(t, t) != pre * gmf) o.fail("Gram identity, n=" + std::to_string(n) + " shape " + lambda.to_string());
        if (gmf < 0) o.fail("negative generalized matrix function");
        ++pairs;
    }
    if (o.pass) o.detail = std::to_string(pairs) + " (cfg, lambda) pairs";
    return o;
}

Outcome ac5() {
    Outcome o;
    const Tableau t({{2, 3, 4}, {1, 5}});
    const auto one = GroupAlgebraElement::identity(5);
    auto cyc = [](std::vector<int> c) { return GroupAlgebraElement::basis(Permutation::from_cycles(5, {std::move(c)})); };
    const auto b = (one - cyc({1, 2})) * (one - cyc({3, 5}));
    const auto a = (one + cyc({2, 3}) + cyc({2, 4}) + cyc({3, 4}) + cyc({2, 3, 4}) + cyc({2, 4, 3})) * (one + cyc({1, 5}));
    if (column_antisymmetrizer(t) != b) o.fail("b_T differs");
    if (row_symmetrizer(t) != a) o.fail("a_T differs");
    if (a.size() != 12) o.fail("a_T does not have 12 terms");
    for (const auto& [sigma, c] : a.terms()) {
        if (c != 1) o.fail("a_T coefficient is not 1");
    }

    TrialRng rng(0xA5);
    int trials = 0;
    while (trials < 50) {
        ExactVector v1{rng.nonzero_rational(9), Rational(static_cast<long>(rng.uniform_int(-9, 9)), 1UL + rng.uniform_int(0, 4))};
        ExactVector v2{Rational(static_cast<long>(rng.uniform_int(-9, 9)), 1UL + rng.uniform_int(0, 4)), rng.nonzero_rational(9)};
        for (auto& x : v1) x.canonicalize();
        for (auto& x : v2) x.canonicalize();
        if (!is_independent(std::vector<ExactVector>{v1, v2})) continue;
        std::vector<ExactVector> vs{v1, v2};
        for (int k = 0; k < 3; ++k) vs.push_back({rng.nonzero_rational(5), rng.nonzero_rational(5)});
        const auto cfg = config(2, vs);
        const auto lhs = apply_algebra_element(decomposable(cfg), antisymmetrizer(5, {1, 2}));
        const auto rhs = tensor_product(decomposable(config(2, {v1, v2})) - decomposable(config(2, {v2, v1})),
                                        decomposable(config(2, {vs[2], vs[3], vs[4]})));
        if (lhs != rhs || lhs.is_zero()) o.fail("five-fold antisymmetrization identity");
        ++trials;
    }
    if (o.pass) o.detail = "b_T, a_T (12 terms) and " + std::to_string(trials) + " rational bases";
    return o;
}

Outcome ac6() {
    Outcome o;
    TrialRng rng(0xA6);
    int configs = 0, certified = 0, with_zero = 0, with_dup = 0;
    while (configs < 320) {
        const int n = static_cast<int>(rng.uniform_int(1, 12));
        const int d = static_cast<int>(rng.uniform_int(1, 4));
        const auto cfg = random_config(rng, n, d);
        ++configs;
        with_zero += cfg.has_zero_vector() ? 1 : 0;
        for (int i = 1; i < n; ++i) {
            if (cfg[static_cast<std::size_t>(i)] == cfg[0]) {
                ++with_dup;
                break;
            }
        }
        const auto rp = rank_partition(cfg);
        if (rp != rank_partition_oracle(cfg)) o.fail("oracle disagrees, n=" + std::to_string(n));
        for (std::size_t i = 1; i < rp.rho.size(); ++i) {
            if (rp.rho[i - 1] < rp.rho[i]) o.fail("rho not weakly decreasing");
        }
        if (cfg.has_zero_vector()) continue;
        const auto lambda = conjugate(rp.as_partition());
        const auto cert = gamas_condition(cfg, lambda);
        if (!cert || !validate_certificate(cfg, lambda, *cert)) o.fail("rho not achieved by a certificate");
        ++certified;
    }
    if (with_zero == 0 || with_dup == 0) o.fail("generator produced no zeros or no duplicates");
    if (o.pass) {
        o.detail = std::to_string(configs) + " configurations (" + std::to_string(with_zero) + " with zeros, " +
                   std::to_string(with_dup) + " with repeats), " + std::to_string(certified) + " certified";
    }
    return o;
}

Outcome ac7() {
    Outcome o;
    TrialRng rng(0xA7);
    constexpr int kTarget = 250;
    auto small = [&](int lo = 1) {
        const int n = static_cast<int>(rng.uniform_int(lo, 6));
        const int d = static_cast<int>(rng.uniform_int(1, 3));
        return random_config(rng, n, d);
    };

    for (int i = 0; i < kTarget; ++i) {
        const auto cfg = small();
        const auto t = random_tableau(rng, pick(rng, partitions_of(cfg.size())));
        bool independent = true;
        for (const auto& col : t.columns()) {
            std::vector<ExactVector> vs;
            for (int k : col) vs.push_back(cfg[static_cast<std::size_t>(k - 1)]);
            independent = independent && is_independent(vs);
        }
        if (apply_algebra_element(decomposable(cfg), column_antisymmetrizer(t)).is_zero() == independent) o.fail("column criterion");
    }

    for (int i = 0; i < kTarget; ++i) {
        const auto cfg = small();
        const auto lambda = pick(rng, partitions_of(cfg.size()));
        const int extra = static_cast<int>(rng.uniform_int(1, 3));
        if (nonzero_after_symmetrize(cfg, lambda) != nonzero_after_symmetrize(cfg.padded(cfg.dim() + extra), lambda)) {
            o.fail("dimension invariance");
        }
    }

    for (int i = 0; i < kTarget; ++i) {
        const auto cfg = small();
        std::vector<ExactVector> scaled;
        for (const auto& v : cfg.vectors()) {
            const Rational c = rng.nonzero_rational(7);
            ExactVector w = v;
            for (auto& x : w) x *= c;
            scaled.push_back(std::move(w));
        }
        const VectorConfiguration other(cfg.dim(), scaled);
        for (const auto& lambda : partitions_of(cfg.size())) {
            if (nonzero_after_symmetrize(cfg, lambda) != nonzero_after_symmetrize(other, lambda)) o.fail("scaling invariance");
        }
    }

    for (int i = 0; i < kTarget; ++i) {
        const auto cfg = small();
        const auto shapes = partitions_of(cfg.size());
        std::vector<bool> appears;
        for (const auto& s : shapes) appears.push_back(nonzero_after_symmetrize(cfg, s));
        for (std::size_t a = 0; a < shapes.size(); ++a) {
            for (std::size_t b = 0; b < shapes.size(); ++b) {
                if (appears[a] && dominates(shapes[b], shapes[a]) && !appears[b]) o.fail("dominance closure");
            }
        }
    }

    int twists = 0;
    while (twists < kTarget) {
        const int d = static_cast<int>(rng.uniform_int(1, 3));
        const int n = static_cast<int>(rng.uniform_int(d, 6));
        const auto cfg = random_config(rng, n, d);
        std::vector<int> first, rest, block;
        for (int i = 0; i < d; ++i) first.push_back(i);
        for (int i = d; i < n; ++i) rest.push_back(i);
        for (int i = 1; i <= d; ++i) block.push_back(i);
        if (!is_independent(cfg.select(first).vectors())) continue;
        const auto twisted = apply_algebra_element(decomposable(cfg), antisymmetrizer(n, block));
        for (const auto& lambda : partitions_of(n)) {
            if (lambda.length() != d) continue;
            const bool lhs = !apply_algebra_element(twisted, central_idempotent(lambda)).is_zero();
            const bool rhs = n == d || nonzero_after_symmetrize(cfg.select(rest), remove_first_column(lambda));
            if (lhs != rhs) o.fail("det twist, n=" + std::to_string(n) + " shape " + lambda.to_string());
            ++twists;
        }
    }
    if (o.pass) {
        o.detail = std::to_string(kTarget) + " instances each of column/dimension/scaling/dominance, " + std::to_string(twists) +
                   " det-twist instances";
    }
    return o;
}

Outcome ac8() {
    Outcome o;
    CharacterTable bad = character_table(3);
    bad.rows[bad.index_of(Partition{2, 1})][bad.index_of(Partition{3})] = 1;
    VerifyOptions opts;
    opts.characters = [&bad](int n) -> const CharacterTable& { return n == 3 ? bad : character_table(n); };
    const auto report = run_verification(TrialSpec{}, opts);
    if (report.ok()) o.fail("mutated character value went unnoticed");
    else o.detail = std::to_string(report.violations.size()) + " violations reported for one mutated value";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 four-decider equivalence", ac1},   {"AC2 character algebra", ac2},       {"AC3 rank law", ac3},
        {"AC4 Gram identity", ac4},              {"AC5 worked examples", ac5},         {"AC6 rank partition", ac6},
        {"AC7 structural properties", ac7},      {"AC8 harness sensitivity", ac8},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::cout << (out.pass ? "PASS " : "FAIL ") << name << ": " << out.detail << " (" << ms << " ms)" << std::endl;
        failed += out.pass ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
