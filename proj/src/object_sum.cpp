#include "fusion/object_sum.hpp"

#include <stdexcept>

namespace fusion {

ObjectSum::ObjectSum(Label label, Multiplicity mult) {
  if (mult != 0) terms_.emplace(std::move(label), mult);
}

ObjectSum::ObjectSum(
    std::initializer_list<std::pair<const Label, Multiplicity>> terms) {
  for (const auto& [label, mult] : terms) add(label, mult);
}

void ObjectSum::add(const Label& label, Multiplicity mult) {
  if (mult == 0) return;
  terms_[label] += mult;
}

ObjectSum& ObjectSum::operator+=(const ObjectSum& other) {
  for (const auto& [label, mult] : other.terms_) terms_[label] += mult;
  return *this;
}

ObjectSum operator*(Multiplicity k, const ObjectSum& s) {
  ObjectSum out;
  if (k == 0) return out;
  for (const auto& [label, mult] : s.terms_) out.terms_.emplace(label, k * mult);
  return out;
}

Multiplicity ObjectSum::multiplicity(const Label& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? 0 : it->second;
}

Multiplicity ObjectSum::total() const {
  Multiplicity n = 0;
  for (const auto& [label, mult] : terms_) n += mult;
  return n;
}

bool ObjectSum::is_single() const noexcept {
  return terms_.size() == 1 && terms_.begin()->second == 1;
}

const Label& ObjectSum::single_label() const {
  if (!is_single()) throw std::logic_error("not a single indecomposable: " + to_string());
  return terms_.begin()->first;
}

std::string ObjectSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [label, mult] : terms_) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult) + "*";
    out += label;
  }
  return out;
}

}  // namespace fusion
