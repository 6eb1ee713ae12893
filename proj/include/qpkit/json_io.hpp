#pragma once

#include "qpkit/bound_algebra.hpp"
#include "qpkit/pipeline.hpp"
#include "qpkit/potential.hpp"

#include <nlohmann/json.hpp>

namespace qpkit {

using Json = nlohmann::ordered_json;

// Quiver files: {"vertices": [..], "arrows": [{"id","source","target","degree"?}]}.
// Serialization is canonical: vertices and arrows sorted by id.
Quiver quiver_from_json(const Json& j);
Json quiver_to_json(const Quiver& q);

// Path vectors: arrays of {"coeff": "p/q", "path": [arrow ids] | [vertex id]}.
PathVector path_vector_from_json(const Quiver& q, const Json& j);
Json path_vector_to_json(const Quiver& q, const PathVector& v);

std::vector<PathVector> relations_from_json(const Quiver& q, const Json& j);

// Quivers with potential: {"quiver": .., "potential": [{"coeff","cycle"}..]},
// optionally with a "differential" override used by the Ginzburg checker.
QuiverWithPotential qp_from_json(const Json& j);
Json qp_to_json(const QuiverWithPotential& qp);

// Bound algebras: {"quiver": .., "relations": [..]}.
Json algebra_to_json(const BoundAlgebra& a);

// Representations: {"dims": {vertex: n}, "maps": {arrow: [[".."..]..]}}.
Representation representation_from_json(const BoundAlgebra& A, const Json& j);
Json representation_to_json(const BoundAlgebra& A, const Representation& m);

// Pipeline input: {"quiver": .., "summands": [{"vertex": id, "power": p}..]}.
TiltingInput tilting_from_json(const Json& j);

Json translation_quiver_to_json(const TranslationQuiver& t);
Json pipeline_report(const PipelineData& p);

Json load_json_file(const std::string& path);

}  // namespace qpkit
