#pragma once

#include <string>

#include "d2p/separating.hpp"

#include <json.hpp>

namespace d2p::io {

using json = nlohmann::json;

json field_to_json(const Field& f);
Field field_from_json(const json& j);

/// {"p":..., "weights":[...], "s":..., "t":...}; an optional "field" object
/// overrides the derived field, otherwise field_for_p(p, multiplier) is used.
ModuleSpec module_spec_from_json(const json& j, int field_multiplier = 1);
json module_spec_to_json(const ModuleSpec& spec);

/// {"field": {...}, "n":..., "rho": [n*n encodings], "sigma": [...]}.
MatrixRep matrix_rep_from_json(const json& j);
json matrix_rep_to_json(const MatrixRep& rep);

json decomposition_to_json(const Decomposition& d);

json generator_table_to_json(const GeneratorTable& t, const ModuleSpec& spec);
std::string generator_table_to_csv(const GeneratorTable& t);
std::string generator_table_to_text(const GeneratorTable& t);

json separating_set_to_json(const SeparatingSet& set);
/// Poly text lines with provenance as trailing "#" comments.
std::string separating_set_to_text(const SeparatingSet& set);
/// One polynomial per line; blank lines and "#" comments ignored.
SeparatingSet separating_set_from_text(const std::string& text, const ModuleSpec& spec);

json point_to_json(const Point& v);
json separation_report_to_json(const SeparationReport& r);

json beta_sep_witness_to_json(int p, const BetaSepWitness& w);
json bound_comparison_to_json(const ModuleSpec& spec, const BoundComparison& b);

std::string read_file(const std::string& path);

}  // namespace d2p::io
