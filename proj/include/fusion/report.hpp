#pragma once

#include <string>
#include <vector>

#include "fusion/extension.hpp"
#include "fusion/serialize.hpp"
#include "fusion/verify.hpp"

namespace fusion {

json clauses_to_json(const std::vector<Clause>& clauses);

/// Extension report: simples with twists, projectives with lengths and
/// factor counts, the fusion table, hom dimensions from every label to every
/// simple (via Frobenius reciprocity), |C|, the code, a verification block,
/// and the category datum itself under "category".
json extension_report(const ExtensionCategory& ext, const std::vector<Clause>& verification,
                      std::uint64_t seed);

std::string extension_report_text(const ExtensionCategory& ext,
                                  const std::vector<Clause>& verification);

/// Labels, twists, compositions and the fusion table in readable form.
std::string category_text(const CategoryData& cat);

}  // namespace fusion
