#pragma once

// The shared JSON document format. Every structure carries a "kind" field;
// tables are arrays of rows of 0-based ids. Parsing enforces shape only and
// throws StructuralError on any schema violation; axioms are left to the
// checkers.
//
// Shorthands accepted wherever a nested structure is expected:
//   ring   "zn:N"                  Z/N
//   mcq    "cyclic:N"              the conjugation MCQ of Z/N
//          "trivial:N"             N trivial blocks
// Emitted documents always inline everything.

#include <json.hpp>

#include "linext/alexpair.hpp"
#include "linext/enumerate.hpp"
#include "linext/mcq.hpp"
#include "linext/quadruple.hpp"
#include "linext/quandle.hpp"
#include "linext/reduction.hpp"

namespace linext::schema {

using nlohmann::json;

/// "kind" of a document, or StructuralError if it has none.
std::string kind_of(const json& doc);

json to_json(const FiniteGroup& g);
json to_json(const FiniteRing& r);
json to_json(const FiniteModule& m);
json to_json(const Quandle& q);
json to_json(const Mcq& x);
json to_json(const GFamily& f);
json to_json(const AlexanderPair& p);
json to_json(const Quadruple& q);

FiniteGroup group_from_json(const json& j);
FiniteRing ring_from_json(const json& j);
FiniteModule module_from_json(const json& j);
Quandle quandle_from_json(const json& j);
Mcq mcq_from_json(const json& j);
GFamily gfamily_from_json(const json& j);
AlexanderPair pair_from_json(const json& j);
Quadruple quadruple_from_json(const json& j);

/// Parses "zn:N".
FiniteRing ring_from_ref(std::string_view ref);

/// {"kind": "report", "of": kind, "valid": bool, "violations": [...]}
json report_json(std::string_view of, const ValidityReport& r);

/// {"kind": "extension", "mcq": ..., "base": ..., "projection": [...],
///  "fiber_size": n}. `check` verifies the MCQ axioms and the projection.
json extension_json(const Mcq& ext, const Mcq& base,
                    std::span<const Elem> projection);

/// {"kind": "reduction", "quadruple", "reduced", "pair", "h"}
json reduction_json(const Quadruple& q, const Reduction& r);

}  // namespace linext::schema
