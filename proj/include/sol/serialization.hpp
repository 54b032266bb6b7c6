#pragma once

#include "sol/classify.hpp"
#include "sol/lattice.hpp"

#include <json.hpp>

#include <string>

namespace sol {

using Json = nlohmann::ordered_json;

struct SerializationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json to_json(const QuadNum& q);
QuadNum quadnum_from_json(const Json& j, FieldContext ctx);

Json to_json(const SolTranslation& t);
SolTranslation translation_from_json(const Json& j, FieldContext ctx);

/// {"N": ..., "phi": [p, q, r, s], "tau1": ..., "tau2": ..., "tau3": ...}
Json to_json(const SolLattice& L);
/// Validates invariants on ingest: the declared holonomy must match the
/// basis-derived one and the presentation relations must hold.
SolLattice lattice_from_json(const Json& j);

Json to_json(const PresentationReport& rep);
Json to_json(const IsotropyResult& res);
Json to_json(const Certificate& cert);
Json to_json(const ClassifyReport& rep);

/// Appends "~dec" annotation strings to every rational pair in-place;
/// annotations are output-only and never parsed back.
void annotate_decimals(Json& j, FieldContext ctx, int digits);

}  // namespace sol
