#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "gamas/characters.hpp"
#include "gamas/tensor.hpp"

namespace gamas {

struct TrialSpec {
    std::uint64_t seed = 0;
    int n_max = 5;
    std::vector<int> dims{1, 2, 3};
    int trials_per_cell = 50;
    int entry_range = 3;
    double p_duplicate = 0.3;
    double p_scale = 0.3;
    double p_zero = 0.05;

    /// Throws std::invalid_argument for probabilities outside [0,1], an
    /// empty or non-positive dimension list, or n_max outside 1..8.
    void validate() const;
};

struct Violation {
    std::string suite;
    int n = 0;
    int d = 0;
    int trial_index = -1;  // -1 for the standalone algebra suites
    std::string shape;
    std::optional<VectorConfiguration> config;
    std::string expected;
    std::string actual;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    std::uint64_t seed = 0;

    auto sort_key() const { return std::tie(suite, n, d, trial_index, shape); }
};

struct VerificationReport {
    std::uint64_t cells_run = 0;
    std::uint64_t trials_run = 0;
    std::map<std::string, std::uint64_t> checks;  // instances examined per suite
    std::vector<Violation> violations;
    std::chrono::milliseconds elapsed{0};

    bool ok() const { return violations.empty(); }
    void merge(VerificationReport other);
    /// Deterministic order: (suite, n, d, trial_index, shape).
    void sort();
};

/// Where a suite gets chi^lambda from. Tests substitute a corrupted table here.
using CharacterSource = std::function<const CharacterTable&(int n)>;

struct VerifyOptions {
    int jobs = 0;  // 0: OpenMP default
    CharacterSource characters = [](int n) -> const CharacterTable& { return character_table(n); };
};

/// Deterministic in (seed, n, d, trial_index). Entries are uniform integers in
/// [-entry_range, entry_range]; each vector is independently replaced by the
/// zero vector (p_zero), a copy of an earlier vector (p_duplicate) or a
/// nonzero rational multiple of an earlier vector (p_scale).
VectorConfiguration generate_configuration(const TrialSpec& spec, int n, int d, int trial_index);

/// Seed for the auxiliary choices a trial makes (random tableaux, scalings).
std::uint64_t trial_aux_seed(std::uint64_t seed, int n, int d, int trial_index);

// Per-configuration suites. Each appends violations and counts instances.
void check_four_deciders(const VectorConfiguration& cfg, const CharacterSource& chars, VerificationReport& out);
void check_rank_partition(const VectorConfiguration& cfg, VerificationReport& out);
void check_column_criterion(const VectorConfiguration& cfg, std::uint64_t aux_seed, VerificationReport& out);
void check_dimension_invariance(const VectorConfiguration& cfg, const CharacterSource& chars, VerificationReport& out);
void check_scaling_invariance(const VectorConfiguration& cfg, std::uint64_t aux_seed, const CharacterSource& chars, VerificationReport& out);
void check_dominance_closure(const VectorConfiguration& cfg, const CharacterSource& chars, VerificationReport& out);
void check_det_twist(const VectorConfiguration& cfg, const CharacterSource& chars, VerificationReport& out);

/// Every per-configuration suite above, tagged with the trial coordinates.
VerificationReport check_configuration(const VectorConfiguration& cfg, std::uint64_t seed, int trial_index,
                                       const CharacterSource& chars);

// Standalone algebra suites for a fixed n.
void check_character_orthogonality(int n, const CharacterSource& chars, VerificationReport& out);
void check_first_column(int n, const CharacterSource& chars, VerificationReport& out);
void check_idempotents(int n, const CharacterSource& chars, VerificationReport& out);
void check_rank_law(int n, int d, const CharacterSource& chars, VerificationReport& out);

/// The full self-check. Deterministic given the TrialSpec: the report (less elapsed)
/// does not depend on opts.jobs.
VerificationReport run_verification(const TrialSpec& spec, const VerifyOptions& opts = {});

}  // namespace gamas
