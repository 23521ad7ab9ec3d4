#include "gamas/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gamas/json_io.hpp"
#include "gamas/kernels.hpp"
#include "gamas/matroid.hpp"
#include "gamas/random.hpp"
#include "gamas/tableau.hpp"

namespace gamas {

namespace {

constexpr std::uint64_t kConfigStream = 0x636f6e666967ULL;  // "config"
constexpr std::uint64_t kAuxStream = 0x617578ULL;           // "aux"

std::string yes_no(bool b) { return b ? "nonzero" : "zero"; }

Violation make_violation(std::string suite, const VectorConfiguration& cfg, const Partition* lambda,
                         std::string expected, std::string actual) {
    Violation v;
    v.suite = std::move(suite);
    v.n = cfg.size();
    v.d = cfg.dim();
    v.config = cfg;
    if (lambda) v.shape = lambda->to_string();
    v.expected = std::move(expected);
    v.actual = std::move(actual);
    return v;
}

Violation make_standalone(std::string suite, int n, int d, std::string shape, std::string expected, std::string actual) {
    Violation v;
    v.suite = std::move(suite);
    v.n = n;
    v.d = d;
    v.shape = std::move(shape);
    v.expected = std::move(expected);
    v.actual = std::move(actual);
    return v;
}

// Answers of the four deciders for every lambda |- n.
struct Decisions {
    std::vector<bool> brute, gram, gamas, dominance;
};

Decisions decide_all(const VectorConfiguration& cfg, const CharacterTable& table, const ClassSumTensor& cs,
                     const std::vector<Rational>& gram_sums, const RankPartition& rp) {
    Decisions out;
    for (const auto& lambda : table.shapes) {
        const auto row = table.row(lambda);
        out.brute.push_back(contract_nonzero(cs, row));
        Rational g = 0;
        for (std::size_t c = 0; c < row.size(); ++c) g += gram_sums[c] * Rational(static_cast<long>(row[c]));
        out.gram.push_back(g != 0);
        out.gamas.push_back(gamas_condition(cfg, lambda).has_value());
        out.dominance.push_back(decide_appears(rp, lambda));
    }
    return out;
}

Decisions decide_all(const VectorConfiguration& cfg, const CharacterTable& table) {
    return decide_all(cfg, table, class_sum_tensor(cfg), matrix_class_sums(gram_matrix(cfg)), rank_partition(cfg));
}

Tableau random_tableau(const Partition& shape, TrialRng& rng) {
    std::vector<int> fill(static_cast<std::size_t>(shape.size()));
    std::iota(fill.begin(), fill.end(), 1);
    for (std::size_t i = fill.size(); i > 1; --i) {
        std::swap(fill[i - 1], fill[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1))]);
    }
    std::vector<std::vector<int>> rows;
    std::size_t next = 0;
    for (int p : shape.parts()) {
        rows.emplace_back(fill.begin() + static_cast<std::ptrdiff_t>(next), fill.begin() + static_cast<std::ptrdiff_t>(next + static_cast<std::size_t>(p)));
        next += static_cast<std::size_t>(p);
    }
    return Tableau(std::move(rows));
}

}  // namespace

void TrialSpec::validate() const {
    auto prob = [](double p, const char* name) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
    };
    prob(p_duplicate, "p_duplicate");
    prob(p_scale, "p_scale");
    prob(p_zero, "p_zero");
    if (n_max < 1 || n_max > kSymmetrizeDegreeCap) throw std::invalid_argument("n_max must lie in 1.." + std::to_string(kSymmetrizeDegreeCap));
    if (dims.empty()) throw std::invalid_argument("at least one dimension is required");
    for (int d : dims) {
        if (d < 1 || d > 8) throw std::invalid_argument("dimensions must lie in 1..8");
    }
    if (trials_per_cell < 0) throw std::invalid_argument("trials_per_cell must be non-negative");
    if (entry_range < 1 || entry_range > 1000000) throw std::invalid_argument("entry_range must lie in 1..1000000");
}

void VerificationReport::merge(VerificationReport other) {
    cells_run += other.cells_run;
    trials_run += other.trials_run;
    for (const auto& [k, v] : other.checks) checks[k] += v;
    for (auto& v : other.violations) violations.push_back(std::move(v));
}

void VerificationReport::sort() {
    std::stable_sort(violations.begin(), violations.end(),
                     [](const Violation& a, const Violation& b) { return a.sort_key() < b.sort_key(); });
}

std::uint64_t trial_aux_seed(std::uint64_t seed, int n, int d, int trial_index) {
    return mix_seed(seed, {kAuxStream, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(trial_index)});
}

VectorConfiguration generate_configuration(const TrialSpec& spec, int n, int d, int trial_index) {
    TrialRng rng(mix_seed(spec.seed, {kConfigStream, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d),
                                      static_cast<std::uint64_t>(trial_index)}));
    const std::int64_t range = spec.entry_range;
    std::vector<ExactVector> vs;
    for (int i = 0; i < n; ++i) {
        // three draws per vector whatever the outcome
        const double u_zero = rng.uniform01();
        const double u_dup = rng.uniform01();
        const double u_scale = rng.uniform01();
        ExactVector v(static_cast<std::size_t>(d));
        if (u_zero < spec.p_zero) {
            // zero vector
        } else if (i > 0 && u_dup < spec.p_duplicate) {
            v = vs[static_cast<std::size_t>(rng.uniform_int(0, i - 1))];
        } else if (i > 0 && u_scale < spec.p_scale) {
            const auto& src = vs[static_cast<std::size_t>(rng.uniform_int(0, i - 1))];
            const Rational c = rng.nonzero_rational(range);
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = c * src[j];
        } else {
            for (auto& x : v) x = Rational(static_cast<long>(rng.uniform_int(-range, range)));
        }
        vs.push_back(std::move(v));
    }
    return {d, std::move(vs)};
}

void check_four_deciders(const VectorConfiguration& cfg, const CharacterSource& chars, VerificationReport& out) {
    const int n = cfg.size();
    const CharacterTable& table = chars(n);
    const ClassSumTensor cs = class_sum_tensor(cfg);
    const std::vector<Rational> gram_sums = matrix_class_sums(gram_matrix(cfg));
    const RankPartition rp = rank_partition(cfg);
    const std::uint64_t nfact = factorial(n);

    for (const auto& lambda : table.shapes) {
        const auto row = table.row(lambda);
        const bool brute = contract_nonzero(cs, row);
        Rational gmf = 0;
        for (std::size_t c = 0; c < row.size(); ++c) gmf += gram_sums[c] * Rational(static_cast<long>(row[c]));
        const bool gram = gmf != 0;
        const auto cert = gamas_condition(cfg, lambda);
        const bool dominance = decide_appears(rp, lambda);

        ++out.checks["four-decider"];
        if (!(brute == gram && gram == cert.has_value() && cert.has_value() == dominance)) {
            auto v = make_violation("four-decider", cfg, &lambda, "all deciders agree", "deciders disagree");
            v.details = {{"brute", brute}, {"gram", gram}, {"gamas", cert.has_value()}, {"dominance", dominance}};
            out.violations.push_back(std::move(v));
        }
        if (cert) {
            ++out.checks["certificate"];
            if (!validate_certificate(cfg, lambda, *cert)) {
                auto v = make_violation("certificate", cfg, &lambda, "valid block certificate", "invalid certificate");
                v.details = {{"certificate", certificate_to_json(*cert)}};
                out.violations.push_back(std::move(v));
            }
        }

        // <v T, v T> = (chi(1)/n!) d_chi(G)
        Rational prefactor(static_cast<long>(row.back()), static_cast<unsigned long>(nfact));
        prefactor.canonicalize();
        const SparseTensor t = contract(cs, row, prefactor);
        const Rational lhs = inner_product(t, t);
        const Rational rhs = prefactor * gmf;
        ++out.checks["gram-identity"];
        if (lhs != rhs) {
            out.violations.push_back(make_violation("gram-identity", cfg, &lambda, to_string(lhs), to_string(rhs)));
        }
        ++out.checks["gram-nonnegative"];
        if (gmf < 0) {
            out.violations.push_back(make_violation("gram-nonnegative", cfg, &lambda, ">= 0", to_string(gmf)));
        }
    }
}

void check_rank_partition(const VectorConfiguration& cfg, VerificationReport& out) {
    const RankPartition rp = rank_partition(cfg);
    if (cfg.size() <= kRankOracleCap) {
        const RankPartition oracle = rank_partition_oracle(cfg);
        ++out.checks["matroid-oracle"];
        if (!(rp == oracle)) {
            auto v = make_violation("matroid-oracle", cfg, nullptr, rank_partition_to_json(oracle).dump(), rank_partition_to_json(rp).dump());
            out.violations.push_back(std::move(v));
        }
    }
    ++out.checks["rank-partition-shape"];
    const bool decreasing = std::is_sorted(rp.rho.begin(), rp.rho.end(), std::greater<>()) &&
                            std::all_of(rp.rho.begin(), rp.rho.end(), [](int r) { return r > 0; });
    if (!decreasing || rp.covered != cfg.nonzero_count()) {
        out.violations.push_back(make_violation("rank-partition-shape", cfg, nullptr,
                                                "weakly decreasing, covering every nonzero vector",
                                                rank_partition_to_json(rp).dump()));
        return;
    }
    if (!cfg.has_zero_vector()) {
        ++out.checks["rank-partition-achieved"];
        const Partition lambda = conjugate(rp.as_partition());
        const auto cert = gamas_condition(cfg, lambda);
        if (!cert || !validate_certificate(cfg, lambda, *cert)) {
            out.violations.push_back(make_violation("rank-partition-achieved", cfg, &lambda,
                                                    "certificate with block sizes rho", "none"));
        }
    }
}

void check_column_criterion(const VectorConfiguration& cfg, std::uint64_t aux_seed, VerificationReport& out) {
    TrialRng rng(mix_seed(aux_seed, {1}));
    const SparseTensor w = decomposable(cfg);
    for (const auto& lambda : partitions_of(cfg.size())) {
        const Tableau t = random_tableau(lambda, rng);
        const bool tensor_nonzero = !apply_algebra_element(w, column_antisymmetrizer(t)).is_zero();
        bool columns_independent = true;
        for (const auto& col : t.columns()) {
            std::vector<ExactVector> vs;
            for (int i : col) vs.push_back(cfg[static_cast<std::size_t>(i - 1)]);
            columns_independent = columns_independent && is_independent(vs);
        }
        ++out.checks["column-criterion"];
        if (tensor_nonzero != columns_independent) {
            auto v = make_violation("column-criterion", cfg, &lambda, yes_no(columns_independent), yes_no(tensor_nonzero));
            v.details = {{"tableau", t.rows()}};
            out.violations.push_back(std::move(v));
        }
    }
}

void check_dimension_invariance(const VectorConfiguration& cfg, const CharacterSource& chars, VerificationReport& out) {
    const CharacterTable& table = chars(cfg.size());
    const ClassSumTensor base = class_sum_tensor(cfg);
    const ClassSumTensor padded = class_sum_tensor(cfg.padded(cfg.dim() + 1));
    for (const auto& lambda : table.shapes) {
        const bool a = contract_nonzero(base, table.row(lambda));
        const bool b = contract_nonzero(padded, table.row(lambda));
        ++out.checks["dimension-invariance"];
        if (a != b) out.violations.push_back(make_violation("dimension-invariance", cfg, &lambda, yes_no(a), yes_no(b)));
    }
}

void check_scaling_invariance(const VectorConfiguration& cfg, std::uint64_t aux_seed, const CharacterSource& chars,
                              VerificationReport& out) {
    TrialRng rng(mix_seed(aux_seed, {2}));
    const int n = cfg.size();
    const auto i = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
    const Rational c = rng.nonzero_rational(5);
    std::vector<ExactVector> vs = cfg.vectors();
    for (auto& x : vs[i]) x *= c;
    const VectorConfiguration scaled(cfg.dim(), std::move(vs));

    const CharacterTable& table = chars(n);
    const Decisions before = decide_all(cfg, table);
    const Decisions after = decide_all(scaled, table);
    ++out.checks["scaling-invariance"];
    if (before.brute != after.brute || before.gram != after.gram || before.gamas != after.gamas ||
        before.dominance != after.dominance) {
        auto v = make_violation("scaling-invariance", cfg, nullptr, "unchanged decisions", "decisions changed");
        v.details = {{"index", i + 1}, {"factor", to_string(c)}};
        out.violations.push_back(std::move(v));
    }
}

void check_dominance_closure(const VectorConfiguration& cfg, const CharacterSource& chars, VerificationReport& out) {
    const CharacterTable& table = chars(cfg.size());
    const RankPartition rp = rank_partition(cfg);
    const ClassSumTensor cs = class_sum_tensor(cfg);
    for (const auto& lambda : table.shapes) {
        const bool d_lambda = decide_appears(rp, lambda);
        const bool a_lambda = contract_nonzero(cs, table.row(lambda));
        if (!d_lambda && !a_lambda) continue;
        for (const auto& mu : table.shapes) {
            if (mu == lambda || !dominates(mu, lambda)) continue;
            ++out.checks["dominance-closure"];
            const bool d_mu = decide_appears(rp, mu);
            const bool a_mu = contract_nonzero(cs, table.row(mu));
            if ((d_lambda && !d_mu) || (a_lambda && !a_mu)) {
                auto v = make_violation("dominance-closure", cfg, &lambda, "appears for every dominating shape",
                                        "fails for " + mu.to_string());
                v.details = {{"dominating", mu.to_string()}, {"dominance", {d_lambda, d_mu}}, {"brute", {a_lambda, a_mu}}};
                out.violations.push_back(std::move(v));
            }
        }
    }
}

void check_det_twist(const VectorConfiguration& cfg, const CharacterSource& chars, VerificationReport& out) {
    const int n = cfg.size();
    const int d = cfg.dim();
    if (n < d || d < 1) return;
    std::vector<int> first(static_cast<std::size_t>(d));
    std::iota(first.begin(), first.end(), 0);
    if (!is_independent(cfg.select(first).vectors())) return;

    std::vector<int> block(static_cast<std::size_t>(d));
    std::iota(block.begin(), block.end(), 1);
    const SparseTensor twisted = apply_algebra_element(decomposable(cfg), antisymmetrizer(n, block));
    const CharacterTable& table = chars(n);
    std::vector<int> rest_idx;
    for (int i = d; i < n; ++i) rest_idx.push_back(i);
    const VectorConfiguration rest = cfg.select(rest_idx);

    for (const auto& lambda : table.shapes) {
        if (lambda.length() != d) continue;
        const bool lhs = !apply_algebra_element(twisted, central_idempotent(lambda, table)).is_zero();
        const Partition reduced = remove_first_column(lambda);
        const bool rhs = n == d ? true : nonzero_after_symmetrize(rest, reduced, chars(n - d));
        ++out.checks["det-twist"];
        if (lhs != rhs) {
            auto v = make_violation("det-twist", cfg, &lambda, yes_no(rhs), yes_no(lhs));
            v.details = {{"reduced_shape", reduced.to_string()}};
            out.violations.push_back(std::move(v));
        }
    }
}

VerificationReport check_configuration(const VectorConfiguration& cfg, std::uint64_t seed, int trial_index,
                                       const CharacterSource& chars) {
    VerificationReport r;
    const std::uint64_t aux = trial_aux_seed(seed, cfg.size(), cfg.dim(), trial_index);
    check_four_deciders(cfg, chars, r);
    check_rank_partition(cfg, r);
    check_column_criterion(cfg, aux, r);
    check_dimension_invariance(cfg, chars, r);
    check_scaling_invariance(cfg, aux, chars, r);
    check_dominance_closure(cfg, chars, r);
    check_det_twist(cfg, chars, r);
    for (auto& v : r.violations) {
        v.trial_index = trial_index;
        v.seed = seed;
    }
    r.trials_run = 1;
    return r;
}

void check_character_orthogonality(int n, const CharacterSource& chars, VerificationReport& out) {
    const CharacterTable& t = chars(n);
    const std::size_t p = t.shapes.size();
    const Integer nfact(static_cast<unsigned long>(factorial(n)));
    for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = 0; b < p; ++b) {
            Integer s = 0;
            for (std::size_t c = 0; c < p; ++c) {
                s += Integer(static_cast<unsigned long>(t.class_sizes[c])) * static_cast<long>(t.rows[a][c]) * static_cast<long>(t.rows[b][c]);
            }
            const Integer expected = a == b ? nfact : Integer(0);
            ++out.checks["row-orthogonality"];
            if (s != expected) {
                out.violations.push_back(make_standalone("row-orthogonality", n, 0, t.shapes[a].to_string() + "|" + t.shapes[b].to_string(),
                                                         expected.get_str(), s.get_str()));
            }
        }
    }
    for (std::size_t c1 = 0; c1 < p; ++c1) {
        for (std::size_t c2 = 0; c2 < p; ++c2) {
            Integer s = 0;
            for (std::size_t a = 0; a < p; ++a) s += Integer(static_cast<long>(t.rows[a][c1])) * static_cast<long>(t.rows[a][c2]);
            const Integer expected = c1 == c2 ? Integer(static_cast<unsigned long>(centralizer_order(t.classes[c1]))) : Integer(0);
            ++out.checks["column-orthogonality"];
            if (s != expected) {
                out.violations.push_back(make_standalone("column-orthogonality", n, 0, t.classes[c1].to_string() + "|" + t.classes[c2].to_string(),
                                                         expected.get_str(), s.get_str()));
            }
        }
    }
}

void check_first_column(int n, const CharacterSource& chars, VerificationReport& out) {
    const CharacterTable& t = chars(n);
    const Partition ones = t.classes.back();
    for (const auto& lambda : t.shapes) {
        const std::int64_t chi1 = t.value(lambda, ones);
        const std::uint64_t f = syt_count(lambda);
        ++out.checks["first-column"];
        if (chi1 < 0 || static_cast<std::uint64_t>(chi1) != f) {
            out.violations.push_back(make_standalone("first-column", n, 0, lambda.to_string(), std::to_string(f), std::to_string(chi1)));
        }
    }
}

void check_idempotents(int n, const CharacterSource& chars, VerificationReport& out) {
    const CharacterTable& t = chars(n);
    std::vector<GroupAlgebraElement> e;
    for (const auto& lambda : t.shapes) e.push_back(central_idempotent(lambda, t));
    GroupAlgebraElement sum(n);
    for (std::size_t a = 0; a < e.size(); ++a) {
        sum += e[a];
        for (std::size_t b = 0; b < e.size(); ++b) {
            const GroupAlgebraElement prod = e[a] * e[b];
            const bool good = a == b ? prod == e[a] : prod.is_zero();
            ++out.checks["idempotents"];
            if (!good) {
                out.violations.push_back(make_standalone("idempotents", n, 0, t.shapes[a].to_string() + "|" + t.shapes[b].to_string(),
                                                         a == b ? "e" : "0", prod.to_string()));
            }
        }
    }
    ++out.checks["idempotents"];
    if (!(sum == GroupAlgebraElement::identity(n))) {
        out.violations.push_back(make_standalone("idempotents", n, 0, "sum", "identity", sum.to_string()));
    }
    // centrality against a transposition and a long cycle
    std::vector<Permutation> probes;
    if (n >= 2) probes.push_back(Permutation::from_cycles(n, {{1, 2}}));
    if (n >= 3) {
        std::vector<int> cyc(static_cast<std::size_t>(n));
        std::iota(cyc.begin(), cyc.end(), 1);
        probes.push_back(Permutation::from_cycles(n, {cyc}));
    }
    for (std::size_t a = 0; a < e.size(); ++a) {
        for (const auto& p : probes) {
            const auto s = GroupAlgebraElement::basis(p);
            ++out.checks["centrality"];
            if (!(e[a] * s == s * e[a])) {
                out.violations.push_back(make_standalone("centrality", n, 0, t.shapes[a].to_string(), "commutes with " + p.cycle_string(), "does not commute"));
            }
        }
    }
}

void check_rank_law(int n, int d, const CharacterSource& chars, VerificationReport& out) {
    const CharacterTable& t = chars(n);
    for (const auto& lambda : t.shapes) {
        const std::size_t r = operator_rank(central_idempotent(lambda, t), d);
        const std::uint64_t expected = syt_count(lambda) * weyl_dimension(lambda, d);
        ++out.checks["rank-law"];
        if (r != expected) {
            out.violations.push_back(make_standalone("rank-law", n, d, lambda.to_string(), std::to_string(expected), std::to_string(r)));
        }
    }
}

VerificationReport run_verification(const TrialSpec& spec, const VerifyOptions& opts) {
    spec.validate();
    const auto start = std::chrono::steady_clock::now();
    const CharacterSource& chars = opts.characters;
    VerificationReport report;

    // build every table before going parallel
    for (int n = 0; n <= spec.n_max; ++n) chars(n);

    for (int n = 1; n <= spec.n_max; ++n) {
        if (n <= 8) check_character_orthogonality(n, chars, report);
        check_first_column(n, chars, report);
        if (n <= 5) check_idempotents(n, chars, report);
        for (int d : spec.dims) {
            std::size_t power = 1;
            for (int k = 0; k < n; ++k) power *= static_cast<std::size_t>(d);
            if (n <= 5 && power <= kOperatorRankCap) check_rank_law(n, d, chars, report);
        }
    }

    struct Job {
        int n, d, trial;
    };
    std::vector<Job> jobs;
    for (int n = 1; n <= spec.n_max; ++n) {
        for (int d : spec.dims) {
            ++report.cells_run;
            for (int t = 0; t < spec.trials_per_cell; ++t) jobs.push_back({n, d, t});
        }
    }

    std::vector<VerificationReport> results(jobs.size());
    std::vector<std::string> errors(jobs.size());
    const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        try {
            const auto& j = jobs[i];
            const VectorConfiguration cfg = generate_configuration(spec, j.n, j.d, j.trial);
            results[i] = check_configuration(cfg, spec.seed, j.trial, chars);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (!errors[i].empty()) throw std::runtime_error("trial (n=" + std::to_string(jobs[i].n) + ", d=" + std::to_string(jobs[i].d) + ", trial=" + std::to_string(jobs[i].trial) + ") failed: " + errors[i]);
        report.merge(std::move(results[i]));
    }
    for (auto& v : report.violations) v.seed = spec.seed;
    report.sort();
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace gamas
