#include "fusion/category.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "fusion/errors.hpp"

namespace fusion {

Label tuple_label(const std::vector<Label>& components) {
  if (components.size() == 1) return components.front();
  Label out = "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ',';
    out += components[i];
  }
  out += ')';
  return out;
}

CategoryData::CategoryData(std::string name, std::vector<IndecompData> indecomposables,
                           Label unit, std::vector<std::string> facts)
    : name_(std::move(name)), unit_(std::move(unit)), facts_(std::move(facts)) {
  std::stable_sort(indecomposables.begin(), indecomposables.end(),
                   [](const IndecompData& x, const IndecompData& y) { return x.label < y.label; });
  objects_.reserve(indecomposables.size());
  for (auto& obj : indecomposables) {
    if (obj.components.empty()) obj.components = {obj.label};
    if (!objects_.empty() && objects_.back().label == obj.label) {
      issues_.push_back("duplicate label " + obj.label);
      continue;
    }
    index_.emplace(obj.label, objects_.size());
    objects_.push_back(std::move(obj));
  }
}

CategoryData::CategoryData(std::string name, std::vector<IndecompData> indecomposables,
                           Label unit, const std::vector<FusionEntry>& fusion,
                           std::vector<std::string> facts)
    : CategoryData(std::move(name), std::move(indecomposables), std::move(unit),
                   std::move(facts)) {
  const std::size_t n = objects_.size();
  table_.assign(n * n, std::nullopt);
  std::vector<bool> listed(n * n, false);
  for (const auto& e : fusion) {
    auto ia = find(e.a);
    auto ib = find(e.b);
    if (!ia || !ib) {
      issues_.push_back("fusion entry (" + e.a + ", " + e.b + ") names an unknown label");
      continue;
    }
    const std::size_t ab = *ia * n + *ib;
    const std::size_t ba = *ib * n + *ia;
    if (listed[ab]) {
      if (*table_[ab] != e.result)
        issues_.push_back("conflicting fusion entries for (" + e.a + ", " + e.b + ")");
      continue;
    }
    listed[ab] = true;
    table_[ab] = e.result;
    if (!listed[ba]) table_[ba] = e.result;
  }
}

CategoryData::CategoryData(std::string name, std::vector<IndecompData> indecomposables,
                           Label unit, FusionRule rule, std::vector<std::string> facts,
                           HomRule hom)
    : CategoryData(std::move(name), std::move(indecomposables), std::move(unit),
                   std::move(facts)) {
  rule_ = std::move(rule);
  hom_rule_ = std::move(hom);
}

bool CategoryData::has_fact(const std::string& key) const {
  return std::any_of(facts_.begin(), facts_.end(), [&](const std::string& f) {
    return f == key || f.rfind(key + ":", 0) == 0;
  });
}

std::optional<std::size_t> CategoryData::find(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CategoryData::index_of(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownLabel(label);
  return it->second;
}

ObjectSum CategoryData::fuse_labels(std::size_t a, std::size_t b) const {
  const std::size_t n = objects_.size();
  if (a >= n || b >= n) throw std::out_of_range("label index out of range");
  const std::size_t key = a * n + b;
  if (!rule_) {
    const auto& entry = table_[key];
    if (!entry)
      throw MissingFusion("no fusion entry for (" + objects_[a].label + ", " +
                          objects_[b].label + ")");
    return *entry;
  }
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  // Computed outside the lock; a racing writer stores the same value.
  ObjectSum result = rule_(a, b);
  std::unique_lock lock(memo_mutex_);
  memo_.emplace(key, result);
  return result;
}

HomDim CategoryData::hom_labels(std::size_t a, std::size_t b) const {
  if (hom_rule_) return hom_rule_(a, b);
  const auto& x = objects_.at(a);
  const auto& y = objects_.at(b);
  if (!y.is_simple) return std::nullopt;
  if (x.is_simple) return a == b ? 1 : 0;
  if (x.cover_of) return *x.cover_of == y.label ? 1 : 0;
  return std::nullopt;
}

std::optional<bool> CategoryData::cached_validity() const {
  int v = validity_.load(std::memory_order_acquire);
  if (v < 0) return std::nullopt;
  return v == 1;
}

void CategoryData::cache_validity(bool ok) const {
  validity_.store(ok ? 1 : 0, std::memory_order_release);
}

namespace {

void require_known(const CategoryData& cat, const ObjectSum& s) {
  for (const auto& [label, mult] : s)
    if (!cat.contains(label)) throw UnknownLabel(label);
}

}  // namespace

ObjectSum fuse(const CategoryData& cat, const ObjectSum& a, const ObjectSum& b) {
  require_known(cat, a);
  require_known(cat, b);
  ObjectSum out;
  for (const auto& [la, ma] : a) {
    const std::size_t ia = cat.index_of(la);
    for (const auto& [lb, mb] : b) out += (ma * mb) * cat.fuse_labels(ia, cat.index_of(lb));
  }
  return out;
}

ObjectSum gr(const CategoryData& cat, const ObjectSum& a) {
  ObjectSum out;
  for (const auto& [label, mult] : a) out += mult * cat.at(label).composition;
  return out;
}

Multiplicity length(const CategoryData& cat, const ObjectSum& a) { return gr(cat, a).total(); }

ObjectSum dual(const CategoryData& cat, const ObjectSum& a) {
  ObjectSum out;
  for (const auto& [label, mult] : a) out.add(cat.at(label).dual, mult);
  return out;
}

HomDim hom_dim(const CategoryData& cat, const ObjectSum& a, const ObjectSum& b) {
  require_known(cat, a);
  require_known(cat, b);
  Multiplicity total = 0;
  for (const auto& [la, ma] : a) {
    const std::size_t ia = cat.index_of(la);
    for (const auto& [lb, mb] : b) {
      HomDim h = cat.hom_labels(ia, cat.index_of(lb));
      if (!h) return std::nullopt;
      total += ma * mb * *h;
    }
  }
  return total;
}

Phase twist_phase(const CategoryData& cat, const Label& simple) {
  const auto& obj = cat.at(simple);
  if (!obj.is_simple) throw NotSimple(simple + " is not simple");
  if (!obj.twist) throw NotSimple(simple + " carries no twist");
  return *obj.twist;
}

bool is_invertible(const CategoryData& cat, const Label& s) {
  const auto& obj = cat.at(s);
  if (!obj.is_simple || !cat.contains(obj.dual)) return false;
  return cat.fuse_labels(s, obj.dual) == ObjectSum(cat.unit());
}

Phase monodromy(const CategoryData& cat, const Label& g, const Label& s) {
  if (!is_invertible(cat, g)) throw NotInvertible(g + " is not invertible");
  const ObjectSum gs = cat.fuse_labels(g, s);
  if (!gs.is_single()) throw NotInvertible(g + " ⊠ " + s + " is not a single simple");
  return twist_phase(cat, gs.single_label()) - twist_phase(cat, g) - twist_phase(cat, s);
}

bool gr_consistency(const CategoryData& cat) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(cat.size() * cat.size());
  for (std::size_t a = 0; a < cat.size(); ++a)
    for (std::size_t b = 0; b < cat.size(); ++b) pairs.emplace_back(a, b);
  return gr_consistency(cat, pairs);
}

bool gr_consistency(const CategoryData& cat,
                    const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                    std::string* first_failure) {
  std::map<std::pair<Label, Label>, ObjectSum> simple_products;
  auto gr_of_simple_product = [&](const Label& s, const Label& t) -> const ObjectSum& {
    auto key = std::make_pair(s, t);
    auto it = simple_products.find(key);
    if (it == simple_products.end())
      it = simple_products.emplace(key, gr(cat, cat.fuse_labels(s, t))).first;
    return it->second;
  };
  for (const auto& [a, b] : pairs) {
    const ObjectSum lhs = gr(cat, cat.fuse_labels(a, b));
    ObjectSum rhs;
    for (const auto& [s, ms] : cat.at(a).composition)
      for (const auto& [t, mt] : cat.at(b).composition)
        rhs += (ms * mt) * gr_of_simple_product(s, t);
    if (lhs != rhs) {
      if (first_failure)
        *first_failure = "gr(" + cat.at(a).label + " ⊠ " + cat.at(b).label + ") = " +
                         lhs.to_string() + " but factor expansion gives " + rhs.to_string();
      return false;
    }
  }
  return true;
}

}  // namespace fusion
