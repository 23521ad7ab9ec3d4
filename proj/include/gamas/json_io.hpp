#pragma once

// JSON wire formats shared by the CLI and the harness. Rationals travel as
// "p/q" strings; index tuples, permutations and certificate blocks are 1-based.

#include <json.hpp>

#include "gamas/characters.hpp"
#include "gamas/group_algebra.hpp"
#include "gamas/matroid.hpp"
#include "gamas/tensor.hpp"
#include "gamas/verify.hpp"

namespace gamas {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
/// Accepts a rational string or a JSON integer.
Rational rational_from_json(const Json& j);

/// {"dim": d, "vectors": [["p/q", ...], ...]}
Json config_to_json(const VectorConfiguration& cfg);
VectorConfiguration config_from_json(const Json& j);

/// {"n": .., "dim": .., "entries": [{"index": [...], "value": "p/q"}]}, indices sorted.
Json tensor_to_json(const SparseTensor& t);

Json permutation_to_json(const Permutation& p);
/// [{"perm": [...], "coeff": "p/q"}] sorted by image array.
Json algebra_to_json(const GroupAlgebraElement& x);

/// {"n":.., "classes":[..], "class_sizes":[..], "rows":{"lambda":[..]}}
Json character_table_to_json(const CharacterTable& t);

/// {"rho": [...], "covered": k}
Json rank_partition_to_json(const RankPartition& rp);
Json certificate_to_json(const BlockCertificate& cert);

/// {"rows": [["p/q", ...], ...]}
ExactMatrix matrix_from_json(const Json& j);

Json trial_spec_to_json(const TrialSpec& spec);
Json violation_to_json(const Violation& v);
/// Deterministic: elapsed time is left out.
Json report_to_json(const VerificationReport& r);

}  // namespace gamas
