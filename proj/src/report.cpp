#include "fusion/report.hpp"

#include <sstream>

namespace fusion {

json clauses_to_json(const std::vector<Clause>& clauses) {
  json out = json::array();
  for (const auto& c : clauses)
    out.push_back({{"name", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"computed", c.computed}});
  return out;
}

json extension_report(const ExtensionCategory& ext, const std::vector<Clause>& verification,
                      std::uint64_t seed) {
  const CategoryData& cat = ext.data();
  json simples = json::array();
  json projectives = json::array();
  json hom = json::array();
  for (const auto& o : cat.indecomposables()) {
    const InducedLabel& orbit = ext.orbit_of(o.label);
    if (o.is_simple)
      simples.push_back({{"label", o.label}, {"twist", phase_to_json(*o.twist)}, {"orbit", orbit.orbit}});
    if (o.is_projective) {
      json p = {{"label", o.label},
                {"length", o.length()},
                {"factors", object_sum_to_json(o.composition)},
                {"orbit", orbit.orbit}};
      if (o.cover_of) p["cover_of"] = *o.cover_of;
      projectives.push_back(std::move(p));
    }
    for (const auto& s : cat.indecomposables()) {
      if (!s.is_simple) continue;
      const HomDim h = frobenius_hom(ext, ObjectSum(o.label), ObjectSum(s.label));
      hom.push_back({{"a", o.label}, {"b", s.label}, {"dim", h ? json(*h) : json("unsupported")}});
    }
  }
  json fusion = json::array();
  for (std::size_t a = 0; a < cat.size(); ++a)
    for (std::size_t b = a; b < cat.size(); ++b)
      fusion.push_back({{"a", cat.at(a).label},
                        {"b", cat.at(b).label},
                        {"result", object_sum_to_json(cat.fuse_labels(a, b))}});
  return {{"name", cat.name()},
          {"base", ext.family().base_category().name()},
          {"code", code_to_json(ext.family().code())},
          {"alg_dimension", ext.alg_dimension()},
          {"simples", std::move(simples)},
          {"projectives", std::move(projectives)},
          {"fusion", std::move(fusion)},
          {"hom", std::move(hom)},
          {"verification",
           {{"passed", all_passed(verification)}, {"seed", seed}, {"clauses", clauses_to_json(verification)}}},
          {"category", category_to_json(cat)}};
}

std::string category_text(const CategoryData& cat) {
  std::ostringstream os;
  os << cat.name() << ": " << cat.size() << " indecomposables, unit " << cat.unit() << '\n';
  for (const auto& o : cat.indecomposables()) {
    os << "  " << o.label;
    if (o.is_simple) os << "  simple, twist " << o.twist->to_string();
    if (o.is_projective) os << "  projective";
    if (o.cover_of) os << "  cover of " << *o.cover_of;
    if (!o.is_simple) os << "  [" << o.composition.to_string() << "]";
    os << '\n';
  }
  os << "fusion:\n";
  for (std::size_t a = 0; a < cat.size(); ++a)
    for (std::size_t b = a; b < cat.size(); ++b)
      os << "  " << cat.at(a).label << " x " << cat.at(b).label << " = "
         << cat.fuse_labels(a, b).to_string() << '\n';
  for (const auto& f : cat.facts()) os << "fact: " << f << '\n';
  return os.str();
}

std::string extension_report_text(const ExtensionCategory& ext,
                                  const std::vector<Clause>& verification) {
  std::ostringstream os;
  os << "extension " << ext.data().name() << " of " << ext.family().base_category().name()
     << " along " << ext.family().code().to_string() << ", |C| = " << ext.alg_dimension() << '\n';
  for (const auto& label : ext.labels()) {
    const auto& orbit = ext.orbit_of(label);
    os << "  " << label << " <- {";
    for (std::size_t i = 0; i < orbit.orbit.size(); ++i) os << (i ? ", " : "") << orbit.orbit[i];
    os << "}\n";
  }
  os << category_text(ext.data());
  os << format_clauses(verification);
  return os.str();
}

}  // namespace fusion
