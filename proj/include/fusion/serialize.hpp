#pragma once

#include <string>

#include <json.hpp>

#include "fusion/category.hpp"
#include "fusion/codes.hpp"
#include "fusion/validate.hpp"

namespace fusion {

using json = nlohmann::json;

// Category files:
//   {name, unit, facts: [string],
//    indecomposables: [{label, simple, projective, cover_of?, twist?: {num, den},
//                       dual, composition: {label: mult}}],
//    fusion: [{a, b, result: {label: mult}}]}
// Label-valued fields are strings, or arrays of component labels for tuple
// objects. Map keys use the rendered name "(a,b,...)". Fusion lists (a, b)
// with a <= b only.

json label_to_json(const IndecompData& obj);
json object_sum_to_json(const ObjectSum& s);
json phase_to_json(const Phase& p);

/// Materializes the full fusion table.
json category_to_json(const CategoryData& cat);
/// Throws ParseError.
CategoryPtr category_from_json(const json& j);

/// Two-space indented dump with a trailing newline; object keys sorted.
std::string canonical_dump(const json& j);

json code_to_json(const BinaryCode& code);
/// Throws ParseError or CodeError.
BinaryCode code_from_json(const json& j);

json admissibility_to_json(const AdmissibilityReport& r);
json validation_to_json(const ValidationReport& r);

/// Reads and parses a file. Throws ParseError.
json read_json_file(const std::string& path);

}  // namespace fusion
