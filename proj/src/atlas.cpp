#include "fusion/atlas.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "fusion/deligne.hpp"
#include "fusion/errors.hpp"

namespace fusion::atlas {

namespace {

enum class Kind { x1, x2, p1 };

struct W2Object {
  Kind kind;
  int sign;  // +1 / -1
};

Label name(Kind kind, int sign) {
  const char* s = sign > 0 ? "^+" : "^-";
  switch (kind) {
    case Kind::x1: return std::string("X_1") + s;
    case Kind::x2: return std::string("X_2") + s;
    case Kind::p1: return std::string("P_1") + s;
  }
  return {};
}

// The W_2 fusion rules on indecomposables.
ObjectSum w2_fuse(W2Object a, W2Object b) {
  if (a.kind > b.kind) std::swap(a, b);
  const int sign = a.sign * b.sign;
  if (a.kind == Kind::x1) return ObjectSum(name(b.kind, sign));
  if (a.kind == Kind::x2 && b.kind == Kind::x2) return ObjectSum(name(Kind::p1, sign));
  if (a.kind == Kind::x2) return ObjectSum{{kX2Plus, 2}, {kX2Minus, 2}};
  return ObjectSum{{kP1Plus, 2}, {kP1Minus, 2}};
}

const std::vector<W2Object>& w2_objects() {
  static const std::vector<W2Object> objs = {{Kind::x1, 1}, {Kind::x1, -1}, {Kind::x2, 1},
                                             {Kind::x2, -1}, {Kind::p1, 1}, {Kind::p1, -1}};
  return objs;
}

CategoryPtr build_w2() {
  std::vector<IndecompData> objects;
  for (const auto& o : w2_objects()) {
    IndecompData d;
    d.label = name(o.kind, o.sign);
    d.dual = d.label;
    if (o.kind == Kind::p1) {
      d.composition = ObjectSum{{kX1Plus, 2}, {kX1Minus, 2}};
      d.is_projective = true;
      d.cover_of = name(Kind::x1, o.sign);
    } else {
      d.composition = ObjectSum(d.label);
      d.is_simple = true;
      d.is_projective = o.kind == Kind::x2;
      d.twist = Phase(w2_lowest_weight(o.kind == Kind::x1 ? 1 : 2, o.sign));
    }
    objects.push_back(std::move(d));
  }
  std::vector<FusionEntry> table;
  const auto& objs = w2_objects();
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = i; j < objs.size(); ++j)
      table.push_back({name(objs[i].kind, objs[i].sign), name(objs[j].kind, objs[j].sign),
                       w2_fuse(objs[i], objs[j])});
  std::vector<std::string> facts = {
      "modular: rep(W_2) is a non-semisimple modular tensor category",
      "non-semisimple: P_1^+ and P_1^- are non-split extensions",
      "rigid: rep(W_2) is rigid",
  };
  return std::make_shared<const CategoryData>("W_2", std::move(objects), kX1Plus, table,
                                              std::move(facts));
}

// Display name of an SF_d^+ orbit: the member of shape (Y^ε, Y^+, ..., Y^+).
Label sf_orbit_name(const CategoryData& base, const InducedLabel& ind) {
  for (const auto& member : ind.orbit) {
    const auto& comps = base.at(member).components;
    bool tail_plus = true;
    for (std::size_t k = 1; k < comps.size(); ++k) {
      tail_plus = tail_plus && comps[k].size() > 2 && comps[k].substr(comps[k].size() - 2) == "^+";
    }
    if (tail_plus) return comps[0];
  }
  throw ModelingError("orbit of " + ind.rep + " has no member of the form (Y^e, Y^+, ..., Y^+)");
}

}  // namespace

Rational w2_lowest_weight(int i, int sign) {
  return Rational((i - 3) * (i - 3 + 2 * sign), 8);
}

CategoryPtr w2() {
  static const CategoryPtr cat = build_w2();
  return cat;
}

CategoryPtr w2_power(unsigned d) {
  static std::mutex mutex;
  static std::map<unsigned, CategoryPtr> memo;
  std::lock_guard lock(mutex);
  if (d == 0) throw std::invalid_argument("power requires d >= 1");
  memo.emplace(1, w2());
  unsigned k = d;
  while (!memo.count(k)) --k;
  for (; k < d; ++k) memo.emplace(k + 1, product(memo.at(k), w2()));
  return memo.at(d);
}

Rational x1_minus_weight(int p) {
  if (p < 2) throw CodeError("W_p requires p >= 2");
  return Rational(3 * p - 2, 4);
}

ExtensionPtr sf_plus(unsigned d, unsigned bound) {
  if (d == 0) throw std::invalid_argument("SF_d^+ requires d >= 1");
  if (d > bound)
    throw ResourceBound("SF_d^+ is built only for d <= " + std::to_string(bound));
  static std::mutex mutex;
  static std::map<unsigned, ExtensionPtr> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
  }
  const CategoryPtr base = w2_power(d);
  const CurrentFamily fam = current_family(base, even_code(d));
  const std::string n = std::to_string(d);
  ExtensionPtr ext = build_extension(
      fam, "SF_" + n + "^+", [&](const InducedLabel& ind) { return sf_orbit_name(*base, ind); },
      {"modular: rep(SF_" + n + "^+) is a non-semisimple modular tensor category",
       "rigid: simple current extension of a rigid category by an algebra of nonzero dimension"});
  std::lock_guard lock(mutex);
  return memo.emplace(d, ext).first->second;
}

WCodeResult w_code(const std::vector<int>& p, const BinaryCode& code) {
  WCodeResult out;
  out.report = admissible(code, p);
  if (!out.report.admissible()) {
    out.note = "not admissible: " + out.report.to_string();
    return out;
  }
  out.facts.push_back("modular: rep(W^C) is a non-semisimple modular tensor category");
  const bool all_two = std::all_of(p.begin(), p.end(), [](int x) { return x == 2; });
  if (!all_two) {
    out.note = "general-p fusion data unavailable; admissibility only";
    return out;
  }
  if (code.d() > kSfPlusBound) {
    out.note = "extension is built only for d <= " + std::to_string(kSfPlusBound);
    return out;
  }
  std::string levels;
  for (std::size_t i = 0; i < p.size(); ++i) levels += (i ? "," : "") + std::to_string(p[i]);
  out.extension = build_extension(current_family(w2_power(code.d()), code),
                                  "W^" + code.to_string() + "_{" + levels + "}", {}, out.facts);
  return out;
}

AtlasEntry entry(const std::string& key) {
  auto parse_d = [&](const std::string& prefix) -> unsigned {
    const std::string rest = key.substr(prefix.size());
    std::size_t used = 0;
    const unsigned long d = std::stoul(rest, &used);
    if (used != rest.size() || d == 0) throw std::invalid_argument("bad atlas key " + key);
    return static_cast<unsigned>(d);
  };
  if (key == "w2") return {key, w2(), nullptr, w2()->facts()};
  if (key.rfind("power:", 0) == 0) {
    CategoryPtr cat = w2_power(parse_d("power:"));
    return {key, cat, nullptr, cat->facts()};
  }
  if (key.rfind("sf_plus:", 0) == 0) {
    ExtensionPtr ext = sf_plus(parse_d("sf_plus:"));
    return {key, ext->category(), ext, ext->data().facts()};
  }
  throw std::invalid_argument("unknown atlas key " + key);
}

}  // namespace fusion::atlas
