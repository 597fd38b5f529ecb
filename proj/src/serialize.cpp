#include "fusion/serialize.hpp"

#include <fstream>
#include <sstream>

#include "fusion/errors.hpp"

namespace fusion {

namespace {

json label_json(const CategoryData& cat, const Label& label) {
  if (auto i = cat.find(label)) return label_to_json(cat.at(*i));
  return label;
}

struct ParsedLabel {
  Label name;
  std::vector<Label> components;
};

ParsedLabel parse_label(const json& j, const char* what) {
  if (j.is_string()) return {j.get<std::string>(), {j.get<std::string>()}};
  if (j.is_array() && !j.empty()) {
    ParsedLabel out;
    for (const auto& c : j) {
      if (!c.is_string()) throw ParseError(std::string(what) + ": tuple label components must be strings");
      out.components.push_back(c.get<std::string>());
    }
    out.name = tuple_label(out.components);
    return out;
  }
  throw ParseError(std::string(what) + ": expected a label string or array");
}

ObjectSum parse_sum(const json& j, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object of multiplicities");
  ObjectSum out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0))
      throw ParseError(std::string(what) + ": multiplicity of " + key + " must be a nonnegative integer");
    out.add(key, value.get<Multiplicity>());
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json label_to_json(const IndecompData& obj) {
  if (obj.components.size() > 1) return obj.components;
  return obj.label;
}

json object_sum_to_json(const ObjectSum& s) {
  json out = json::object();
  for (const auto& [label, mult] : s) out[label] = mult;
  return out;
}

json phase_to_json(const Phase& p) { return {{"num", p.num()}, {"den", p.den()}}; }

json category_to_json(const CategoryData& cat) {
  json objects = json::array();
  for (const auto& o : cat.indecomposables()) {
    json e = {{"label", label_to_json(o)},
              {"simple", o.is_simple},
              {"projective", o.is_projective},
              {"dual", label_json(cat, o.dual)},
              {"composition", object_sum_to_json(o.composition)}};
    if (o.cover_of) e["cover_of"] = label_json(cat, *o.cover_of);
    if (o.twist) e["twist"] = phase_to_json(*o.twist);
    objects.push_back(std::move(e));
  }
  json fusion = json::array();
  for (std::size_t a = 0; a < cat.size(); ++a)
    for (std::size_t b = a; b < cat.size(); ++b)
      fusion.push_back({{"a", label_to_json(cat.at(a))},
                        {"b", label_to_json(cat.at(b))},
                        {"result", object_sum_to_json(cat.fuse_labels(a, b))}});
  return {{"name", cat.name()},
          {"unit", label_json(cat, cat.unit())},
          {"indecomposables", std::move(objects)},
          {"fusion", std::move(fusion)},
          {"facts", cat.facts()}};
}

CategoryPtr category_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("category file must be a JSON object");
    const json& name = field(j, "name");
    if (!name.is_string()) throw ParseError("'name' must be a string");
    std::vector<IndecompData> objects;
    const json& list = field(j, "indecomposables");
    if (!list.is_array()) throw ParseError("'indecomposables' must be an array");
    for (const auto& e : list) {
      IndecompData o;
      ParsedLabel l = parse_label(field(e, "label"), "label");
      o.label = l.name;
      o.components = l.components;
      const json& simple = field(e, "simple");
      const json& projective = field(e, "projective");
      if (!simple.is_boolean() || !projective.is_boolean())
        throw ParseError("'simple' and 'projective' must be booleans");
      o.is_simple = simple.get<bool>();
      o.is_projective = projective.get<bool>();
      o.dual = parse_label(field(e, "dual"), "dual").name;
      o.composition = parse_sum(field(e, "composition"), "composition");
      if (e.contains("cover_of")) o.cover_of = parse_label(e.at("cover_of"), "cover_of").name;
      if (e.contains("twist")) {
        const json& t = e.at("twist");
        const json& num = field(t, "num");
        const json& den = field(t, "den");
        if (!num.is_number_integer() || !den.is_number_integer())
          throw ParseError("twist num/den must be integers");
        const std::int64_t n = num.get<std::int64_t>();
        const std::int64_t d = den.get<std::int64_t>();
        if (d <= 0 || n < 0 || n >= d) throw ParseError("twist must satisfy 0 <= num < den");
        if (Rational(n, d).denominator() != d) throw ParseError("twist must be in lowest terms");
        o.twist = Phase(n, d);
      }
      objects.push_back(std::move(o));
    }
    const Label unit = parse_label(field(j, "unit"), "unit").name;
    std::vector<FusionEntry> table;
    const json& fusion = field(j, "fusion");
    if (!fusion.is_array()) throw ParseError("'fusion' must be an array");
    for (const auto& e : fusion)
      table.push_back({parse_label(field(e, "a"), "a").name, parse_label(field(e, "b"), "b").name,
                       parse_sum(field(e, "result"), "result")});
    std::vector<std::string> facts;
    if (j.contains("facts")) {
      if (!j.at("facts").is_array()) throw ParseError("'facts' must be an array");
      for (const auto& f : j.at("facts")) {
        if (!f.is_string()) throw ParseError("facts must be strings");
        facts.push_back(f.get<std::string>());
      }
    }
    return std::make_shared<const CategoryData>(name.get<std::string>(), std::move(objects), unit,
                                                table, std::move(facts));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed category JSON: ") + e.what());
  }
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json code_to_json(const BinaryCode& code) {
  json gens = json::array();
  for (Codeword g : code.generators()) gens.push_back(subset_elements(g));
  json words = json::array();
  for (Codeword w : code.codewords()) words.push_back(subset_elements(w));
  return {{"d", code.d()}, {"generators", std::move(gens)}, {"codewords", std::move(words)}};
}

BinaryCode code_from_json(const json& j) {
  try {
    const json& d = field(j, "d");
    if (!d.is_number_integer() || d.get<std::int64_t>() < 1) throw ParseError("'d' must be a positive integer");
    std::vector<std::vector<int>> gens;
    for (const auto& g : field(j, "generators")) gens.push_back(g.get<std::vector<int>>());
    return span(d.get<unsigned>(), gens);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed code JSON: ") + e.what());
  }
}

json admissibility_to_json(const AdmissibilityReport& r) {
  json out = {{"even", r.even},
              {"four_div", r.four_div},
              {"integral_weights", r.integral_weights},
              {"admissible", r.admissible()}};
  if (r.first_violation) {
    out["first_violation"] = subset_elements(*r.first_violation);
    out["violation"] = r.violation;
  }
  return out;
}

json validation_to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"checked", c.checked}, {"detail", c.detail}});
  return {{"passed", r.passed()},
          {"exhaustive", r.exhaustive},
          {"seed", r.seed},
          {"associativity_triples", r.associativity_triples},
          {"checks", std::move(checks)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace fusion
