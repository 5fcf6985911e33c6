#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "asres/checker.hpp"
#include "asres/field.hpp"
#include "asres/minimalizer.hpp"
#include "asres/module.hpp"
#include "asres/rescomplex.hpp"

namespace asres {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json params_to_json(const ASParams& params);
Json generators_to_json(const ASParams& params);
Json basis_to_json(const BasisElement& e, long weight);
Json complex_to_json(const Complex& c);
Json provenance_to_json(const std::vector<CancellationStep>& steps);
Json report_to_json(const VerificationReport& report);

/// Everything `build` produces for one parameter set.
struct Artifact {
    ASParams params;
    std::vector<std::string> sign_flips;
    Complex cone;
    MinimalComplex minimal;
};

Artifact make_artifact(const ASParams& params);
/// Canonical document: schema, params, generators, sign flips, both
/// complexes, provenance and a summary of ranks.
Json artifact_to_json(const Artifact& artifact);

/// Inverse of the exporters. Throws Error(parse) on malformed input.
ASParams params_from_json(const Json& j);
BasisElement basis_from_json(const Json& j);
Complex complex_from_json(const Json& j, const ASParams& params);
Artifact artifact_from_json(const Json& j);

/// Deterministic text: two-space indentation and a trailing newline.
std::string dump(const Json& j);

/*
 * Macaulay2 script declaring the weighted polynomial ring and every
 * differential of `c` as a graded map, followed by checks that the maps
 * compose to zero and that the homology vanishes.
 */
std::string cas_script(const Complex& c, const FieldChoice& field, const std::string& title);

} // namespace asres
