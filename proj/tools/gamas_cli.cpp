// gamas: command-line front end. Every subcommand writes JSON to stdout;
// --pretty switches to a human-readable rendering.
// Exit codes: 0 success, 1 violations or disagreeing deciders, 2 usage/input error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gamas/errors.hpp"
#include "gamas/json_io.hpp"
#include "gamas/kernels.hpp"
#include "gamas/matroid.hpp"
#include "gamas/tensor.hpp"
#include "gamas/verify.hpp"

using namespace gamas;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

Json read_json_file(const std::string& path) {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return Json::parse(in);
}

void emit(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }

void print_character_table(const CharacterTable& t) {
    std::size_t width = 6;
    for (const auto& s : t.shapes) width = std::max(width, s.to_string().size() + 2);
    std::cout << std::setw(static_cast<int>(width)) << "";
    for (const auto& c : t.classes) std::cout << std::setw(static_cast<int>(width)) << c.to_string();
    std::cout << '\n' << std::setw(static_cast<int>(width)) << "size";
    for (auto s : t.class_sizes) std::cout << std::setw(static_cast<int>(width)) << s;
    std::cout << '\n';
    for (std::size_t i = 0; i < t.shapes.size(); ++i) {
        std::cout << std::setw(static_cast<int>(width)) << t.shapes[i].to_string();
        for (auto v : t.rows[i]) std::cout << std::setw(static_cast<int>(width)) << v;
        std::cout << '\n';
    }
}

void print_report(const VerificationReport& r) {
    std::cout << "cells " << r.cells_run << ", trials " << r.trials_run << ", elapsed " << r.elapsed.count() << " ms\n";
    for (const auto& [suite, count] : r.checks) {
        std::size_t bad = 0;
        for (const auto& v : r.violations) bad += v.suite == suite ? 1 : 0;
        std::cout << "  " << std::left << std::setw(26) << suite << std::right << std::setw(8) << count << " checked"
                  << std::setw(6) << bad << " violations\n";
    }
    for (const auto& v : r.violations) {
        std::cout << "VIOLATION " << v.suite << " n=" << v.n << " d=" << v.d << " trial=" << v.trial_index
                  << " shape=" << v.shape << " expected=" << v.expected << " actual=" << v.actual << '\n';
    }
    std::cout << (r.ok() ? "OK" : "FAILED") << '\n';
}

struct DecideResult {
    Json json;
    bool agreed;
};

DecideResult run_decide(const VectorConfiguration& cfg, const Partition& lambda, const std::string& method) {
    Json answers = Json::object();
    std::optional<BlockCertificate> cert;
    if (method == "brute" || method == "all") answers["brute"] = nonzero_after_symmetrize(cfg, lambda);
    if (method == "gram" || method == "all") answers["gram"] = generalized_matrix_function(gram_matrix(cfg), lambda) != 0;
    if (method == "gamas" || method == "all") {
        cert = gamas_condition(cfg, lambda);
        answers["gamas"] = cert.has_value();
    }
    if (method == "dominance" || method == "all") answers["dominance"] = decide_appears(cfg, lambda);

    bool agreed = true;
    const bool first = answers.begin().value().get<bool>();
    for (const auto& [k, v] : answers.items()) agreed = agreed && v.get<bool>() == first;
    Json out{{"appears", first},
             {"certificate", cert ? certificate_to_json(*cert) : Json(nullptr)},
             {"methods_agreed", agreed},
             {"methods", std::move(answers)}};
    return {std::move(out), agreed};
}

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> dims;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos) throw ParseError("malformed --dims: " + text);
        dims.push_back(std::stoi(field));
    }
    return dims;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symmetrized-tensor nonvanishing deciders and their cross-check harness"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable output instead of JSON");

    auto* ct = app.add_subcommand("character-table", "character table of S_n");
    int ct_n = 0;
    ct->add_option("n", ct_n, "degree")->required()->check(CLI::Range(0, kCharacterTableCap));

    std::string config_path;
    std::string shape_text;
    bool reference = false;
    auto* sym = app.add_subcommand("symmetrize", "v_1 (x) ... (x) v_n T_lambda as a sparse tensor");
    sym->add_option("--config", config_path, "configuration JSON file ('-' for stdin)")->required();
    sym->add_option("--shape", shape_text, "partition, e.g. \"2,1\"")->required();
    sym->add_flag("--reference", reference, "use the serial sparse reference path");

    std::string method = "all";
    auto* dec = app.add_subcommand("decide", "does lambda appear for this configuration");
    dec->add_option("--config", config_path, "configuration JSON file ('-' for stdin)")->required();
    dec->add_option("--shape", shape_text, "partition, e.g. \"2,1\"")->required();
    dec->add_option("--method", method, "decider")->check(CLI::IsMember({"brute", "gram", "gamas", "dominance", "all"}));

    auto* rp = app.add_subcommand("rank-partition", "rank partition of a configuration");
    rp->add_option("--config", config_path, "configuration JSON file ('-' for stdin)")->required();

    std::string matrix_path;
    auto* gmf = app.add_subcommand("gmf", "generalized matrix function d_chi(A)");
    auto* gmf_matrix = gmf->add_option("--matrix", matrix_path, "matrix JSON file: [[\"p/q\", ...], ...]");
    auto* gmf_config = gmf->add_option("--config", config_path, "use the Gram matrix of this configuration");
    gmf_matrix->excludes(gmf_config);
    gmf->add_option("--shape", shape_text, "partition, e.g. \"2,1\"")->required();

    TrialSpec spec;
    std::string dims_text = "1,2,3";
    int jobs = 0;
    auto* sc = app.add_subcommand("selfcheck", "run every cross-decider and algebraic suite");
    sc->add_option("--seed", spec.seed, "PRNG seed")->capture_default_str();
    sc->add_option("--n-max", spec.n_max, "largest tensor degree")->capture_default_str();
    sc->add_option("--dims", dims_text, "comma-separated dimensions")->capture_default_str();
    sc->add_option("--trials", spec.trials_per_cell, "trials per (n, d) cell")->capture_default_str();
    sc->add_option("--p-dup", spec.p_duplicate, "probability of copying an earlier vector")->capture_default_str();
    sc->add_option("--p-scale", spec.p_scale, "probability of scaling an earlier vector")->capture_default_str();
    sc->add_option("--p-zero", spec.p_zero, "probability of a zero vector")->capture_default_str();
    sc->add_option("--entry-range", spec.entry_range, "entries drawn from [-R, R]")->capture_default_str();
    sc->add_option("--jobs", jobs, "worker threads (0: OpenMP default)")->capture_default_str();

    std::string record_path;
    auto* rep = app.add_subcommand("replay", "re-run the suites behind one violation record");
    rep->add_option("--record", record_path, "violation record JSON (as printed by selfcheck)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (ct->parsed()) {
            const auto& t = character_table(ct_n);
            if (pretty) print_character_table(t);
            else emit(character_table_to_json(t), false);
            return kExitOk;
        }
        if (sym->parsed()) {
            const auto cfg = config_from_json(read_json_file(config_path));
            const auto lambda = Partition::parse(shape_text);
            const auto t = reference ? apply_t_lambda_reference(cfg, lambda) : apply_t_lambda(cfg, lambda);
            emit(tensor_to_json(t), pretty);
            return kExitOk;
        }
        if (dec->parsed()) {
            const auto cfg = config_from_json(read_json_file(config_path));
            const auto lambda = Partition::parse(shape_text);
            auto result = run_decide(cfg, lambda, method);
            emit(result.json, pretty);
            return result.agreed ? kExitOk : kExitViolation;
        }
        if (rp->parsed()) {
            const auto cfg = config_from_json(read_json_file(config_path));
            emit(rank_partition_to_json(rank_partition(cfg)), pretty);
            return kExitOk;
        }
        if (gmf->parsed()) {
            if (matrix_path.empty() && config_path.empty()) throw ParseError("gmf needs --matrix or --config");
            const auto lambda = Partition::parse(shape_text);
            const ExactMatrix a = matrix_path.empty() ? gram_matrix(config_from_json(read_json_file(config_path)))
                                                      : matrix_from_json(read_json_file(matrix_path));
            emit(Json{{"value", rational_to_json(generalized_matrix_function(a, lambda))}}, pretty);
            return kExitOk;
        }
        if (sc->parsed()) {
            spec.dims = parse_dims(dims_text);
            VerifyOptions opts;
            opts.jobs = jobs;
            const auto report = run_verification(spec, opts);
            if (pretty) {
                print_report(report);
            } else {
                Json j = report_to_json(report);
                j["spec"] = trial_spec_to_json(spec);
                emit(j, false);
                std::cerr << "selfcheck: " << report.trials_run << " trials, " << report.violations.size()
                          << " violations, " << report.elapsed.count() << " ms\n";
            }
            return report.ok() ? kExitOk : kExitViolation;
        }
        if (rep->parsed()) {
            const Json record = read_json_file(record_path);
            const int n = record.value("n", 0);
            const int d = record.value("d", 0);
            VerificationReport report;
            VerifyOptions opts;
            if (record.contains("config") && !record["config"].is_null()) {
                const auto cfg = config_from_json(record["config"]);
                report = check_configuration(cfg, record.value("seed", std::uint64_t{0}), record.value("trial_index", 0), opts.characters);
            } else {
                const std::string suite = record.value("suite", "");
                if (n < 1) throw ParseError("record needs a configuration or a positive n");
                if (suite == "rank-law") check_rank_law(n, d, opts.characters, report);
                else if (suite == "idempotents" || suite == "centrality") check_idempotents(n, opts.characters, report);
                else if (suite == "first-column") check_first_column(n, opts.characters, report);
                else check_character_orthogonality(n, opts.characters, report);
            }
            report.sort();
            if (pretty) print_report(report);
            else emit(report_to_json(report), false);
            return report.ok() ? kExitOk : kExitViolation;
        }
    } catch (const Json::exception& e) {
        std::cerr << "error: invalid JSON: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
