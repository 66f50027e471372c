#pragma once

#include <string>

#include "ageal/blueprint.hpp"
#include "ageal/groupoid.hpp"
#include "ageal/series.hpp"
#include "ageal/structure.hpp"

namespace ageal {

// ---------------------------------------------------------------------------
// JSON encodings.  All functions take and return strings so the JSON library
// stays an implementation detail of the core.
//
//   FiniteStructure  {"signature":[{"name","arity","symmetric","irreflexive"}],
//                     "size":N, "tuples":{name:[[i],[i,j],...]}}
//   Blueprint        {"template":<structure>, "blocks":[{"cardinality":int|"omega",
//                     "inner":"empty"|"complete"|"chain"}]}
//   Groupoid         {"k":int, "generators":[{"map":{"1":2,...}}]}  (1-based points;
//                     parsing closes over the generators)
//   SeriesPrefix     {"phi":[1,...]}
//
// Parsers throw input_error on malformed documents.
// ---------------------------------------------------------------------------

std::string to_json(const FiniteStructure& s, int indent = -1);
FiniteStructure structure_from_json(const std::string& text);

std::string to_json(const Blueprint& b, int indent = -1);
Blueprint blueprint_from_json(const std::string& text);

std::string to_json(const PermutationGroupoid& g, int indent = -1);
PermutationGroupoid groupoid_from_json(const std::string& text);

std::string to_json(const SeriesPrefix& prefix, int indent = -1);
SeriesPrefix series_from_json(const std::string& text);

enum class InputKind { structure, blueprint, groupoid, series };

// decide which of the four shapes a document carries by its top-level keys
InputKind classify_input(const std::string& text);

}
