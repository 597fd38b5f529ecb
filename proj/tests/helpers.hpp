#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fusion/category.hpp"
#include "oracles.hpp"

namespace testing_support {

using namespace fusion;

inline IndecompData simple_object(const Label& l, Phase twist, const Label& dual) {
  IndecompData o;
  o.label = l;
  o.components = {l};
  o.composition = ObjectSum(l);
  o.is_simple = true;
  o.twist = twist;
  o.dual = dual;
  return o;
}

/// Pointed rank-two datum {1, g} with g ⊠ g = 1 and twist(g) = `twist_g`.
/// `g_unit_result` overrides 1 ⊠ g when set.
inline CategoryPtr z2(Phase twist_g = Phase(1, 4), std::optional<ObjectSum> g_unit_result = {}) {
  std::vector<IndecompData> objs = {simple_object("1", Phase(), "1"), simple_object("g", twist_g, "g")};
  std::vector<FusionEntry> table = {{"1", "1", ObjectSum("1")},
                                    {"1", "g", g_unit_result.value_or(ObjectSum("g"))},
                                    {"g", "g", ObjectSum("1")}};
  return std::make_shared<CategoryData>("Z2", std::move(objs), "1", table, std::vector<std::string>{});
}

/// W_2 rebuilt from the literal oracle tables as an explicit datum, with an
/// optional replacement for one unordered entry.
inline CategoryPtr w2_from_oracle(const std::pair<std::string, std::string>& patched = {},
                                  const ObjectSum& patch = {}) {
  std::vector<IndecompData> objs;
  for (const auto& o : oracle::w2_objects()) {
    IndecompData d;
    d.label = o.label;
    d.components = {o.label};
    for (const auto& [f, m] : o.composition) d.composition.add(f, m);
    d.is_simple = o.simple;
    d.is_projective = o.projective;
    if (!o.cover_of.empty()) d.cover_of = o.cover_of;
    if (o.simple) d.twist = Phase(o.twist8, 8);
    d.dual = o.label;
    objs.push_back(std::move(d));
  }
  std::vector<FusionEntry> table;
  for (const auto& [key, sum] : oracle::w2_table()) {
    ObjectSum s;
    for (const auto& [f, m] : sum) s.add(f, m);
    if (key == patched) s = patch;
    table.push_back({key.first, key.second, s});
  }
  return std::make_shared<CategoryData>("W_2 (literal)", std::move(objs), "X_1^+", table,
                                        std::vector<std::string>{});
}

inline ObjectSum to_sum(const oracle::Sum& s) {
  ObjectSum out;
  for (const auto& [l, m] : s) out.add(l, m);
  return out;
}

}  // namespace testing_support
