#ifndef WILDVF_SERIALIZE_HPP
#define WILDVF_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "wildvf/corpus.hpp"
#include "wildvf/derivation.hpp"
#include "wildvf/embed.hpp"
#include "wildvf/liealg.hpp"
#include "wildvf/matmod.hpp"
#include "wildvf/reduce.hpp"
#include "wildvf/report.hpp"

// JSON forms. Every number that is a field element is a rational string
// "p/q" ("p" when q = 1); keys are emitted sorted, so emit() is canonical
// and a read followed by a write reproduces the input text exactly.
// Readers throw Error{ParseError} on malformed documents and the domain
// errors (NotCommuting, ...) on invalid content.

namespace wildvf {

using json = nlohmann::json;

/// Pretty-printed, two-space indent, trailing newline.
std::string emit(const json& j);
/// Single line, no trailing newline (for JSON-lines).
std::string emit_line(const json& j);
json parse_json(std::string_view text);

json to_json(const Rat& r);
Rat rat_from_json(const json& j);

json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j);

json to_json(const MatrixPair& p);
MatrixPair pair_from_json(const json& j);

json to_json(const Twist& th);
Twist twist_from_json(const json& j);

json to_json(const PairRecipe& r);
PairRecipe recipe_from_json(const json& j);

/// {"recipe": ..., "pair": ...}: one line of a fixture file.
json fixture_record(const PairRecipe& r, const MatrixPair& p);

/// {"vars": [...], "coeffs": [one polynomial string per variable]}
json to_json(const Derivation& d);
Derivation derivation_from_json(const json& j);

/// {"dim": n, "labels": [...], "constants": [[i, j, k, "c"], ...]} with
/// 0-based i < j; the remaining constants follow by antisymmetry.
json to_json(const LieAlg& l);
/// validate = false skips the Lie axioms (for inspecting broken data).
LieAlg liealg_from_json(const json& j, bool validate = true);

json to_json(const SeriesProfile& p);
SeriesProfile series_from_json(const json& j);

json to_json(const Fingerprint& f);
json to_json(const ModuleInvariants& inv);
json to_json(const SimilarityResult& r);

json to_json(const VerificationReport& r);
VerificationReport report_from_json(const json& j);

struct EmbeddedBundle {
    EmbeddedModule module;
    VerificationReport verification;
};
json to_json(const EmbeddedBundle& b);
EmbeddedBundle embedded_from_json(const json& j);

struct RealizedBundle {
    RealizedAlgebra algebra;
    RealizationReports reports;

    bool ok() const noexcept { return reports.ok(); }
};
json to_json(const RealizedBundle& b);
RealizedBundle realized_from_json(const json& j);

}  // namespace wildvf

#endif
