#include "fusion/deligne.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fusion/errors.hpp"
#include "fusion/validate.hpp"

namespace fusion {

namespace {

std::string fact_key(const std::string& fact) { return fact.substr(0, fact.find(':')); }

std::vector<std::string> shared_facts(const CategoryData& a, const CategoryData& b) {
  std::set<std::string> left;
  for (const auto& f : a.facts()) left.insert(fact_key(f));
  std::set<std::string> keys;
  for (const auto& f : b.facts())
    if (left.count(fact_key(f))) keys.insert(fact_key(f));
  std::vector<std::string> out;
  for (const auto& k : keys) out.push_back(k + ": holds for both " + a.name() + " and " + b.name());
  return out;
}

}  // namespace

CategoryPtr product(CategoryPtr left, CategoryPtr right) {
  if (!left || !right) throw std::invalid_argument("product of a null datum");
  require_valid(*left);
  require_valid(*right);

  const std::size_t na = left->size();
  const std::size_t nb = right->size();

  // pair (i, j) sits at pair_name[i * nb + j]; names decide the final order.
  std::vector<Label> pair_name(na * nb);
  std::vector<std::vector<Label>> pair_components(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      auto comps = left->at(i).components;
      const auto& rc = right->at(j).components;
      comps.insert(comps.end(), rc.begin(), rc.end());
      pair_name[i * nb + j] = tuple_label(comps);
      pair_components[i * nb + j] = std::move(comps);
    }
  auto name_of = [&](const Label& l, const Label& r) {
    return pair_name[left->index_of(l) * nb + right->index_of(r)];
  };

  std::vector<std::size_t> order(na * nb);
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return pair_name[x] < pair_name[y]; });
  // position in the product datum -> (i, j)
  auto split = std::make_shared<std::vector<std::pair<std::size_t, std::size_t>>>();
  split->reserve(order.size());
  for (std::size_t k : order) split->emplace_back(k / nb, k % nb);

  std::vector<IndecompData> objects;
  objects.reserve(na * nb);
  for (std::size_t k : order) {
    const auto& a = left->at(k / nb);
    const auto& b = right->at(k % nb);
    IndecompData o;
    o.label = pair_name[k];
    o.components = pair_components[k];
    for (const auto& [s, ms] : a.composition)
      for (const auto& [t, mt] : b.composition) o.composition.add(name_of(s, t), ms * mt);
    o.is_simple = a.is_simple && b.is_simple;
    o.is_projective = a.is_projective && b.is_projective;
    if (a.cover_of && b.cover_of) o.cover_of = name_of(*a.cover_of, *b.cover_of);
    if (a.twist && b.twist) o.twist = *a.twist + *b.twist;
    o.dual = name_of(a.dual, b.dual);
    objects.push_back(std::move(o));
  }

  const Label unit = name_of(left->unit(), right->unit());
  auto names = std::make_shared<std::vector<Label>>(std::move(pair_name));
  auto rule = [left, right, nb, split, names](std::size_t x, std::size_t y) {
    const auto [xa, xb] = (*split)[x];
    const auto [ya, yb] = (*split)[y];
    const ObjectSum fa = left->fuse_labels(xa, ya);
    const ObjectSum fb = right->fuse_labels(xb, yb);
    ObjectSum out;
    for (const auto& [l, ml] : fa) {
      auto il = left->find(l);
      if (!il) throw ModelingError("factor fusion produced " + l + ", which has no pair label");
      for (const auto& [r, mr] : fb) {
        auto ir = right->find(r);
        if (!ir) throw ModelingError("factor fusion produced " + r + ", which has no pair label");
        out.add((*names)[*il * nb + *ir], ml * mr);
      }
    }
    return out;
  };
  auto hom = [left, right, split](std::size_t x, std::size_t y) -> HomDim {
    const auto [xa, xb] = (*split)[x];
    const auto [ya, yb] = (*split)[y];
    HomDim ha = left->hom_labels(xa, ya);
    if (!ha) return std::nullopt;
    HomDim hb = right->hom_labels(xb, yb);
    if (!hb) return std::nullopt;
    return *ha * *hb;
  };

  return std::make_shared<const CategoryData>(left->name() + " x " + right->name(),
                                              std::move(objects), unit, std::move(rule),
                                              shared_facts(*left, *right), std::move(hom));
}

CategoryPtr power(CategoryPtr cat, unsigned d) {
  if (d == 0) throw std::invalid_argument("power requires d >= 1");
  CategoryPtr out = cat;
  for (unsigned k = 1; k < d; ++k) out = product(out, cat);
  return out;
}

}  // namespace fusion
