#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace fusion {

/// Name of an indecomposable object in a Krull-Schmidt atlas.
using Label = std::string;
using Multiplicity = std::uint64_t;

/// A finite direct sum of indecomposables with nonnegative multiplicities.
///
/// Terms are kept in lexicographic label order and zero multiplicities are
/// never stored, so equality is equality of decompositions and the empty sum
/// is the zero object.
class ObjectSum {
 public:
  using Terms = std::map<Label, Multiplicity>;
  using const_iterator = Terms::const_iterator;

  ObjectSum() = default;
  ObjectSum(Label label, Multiplicity mult = 1);  // NOLINT: implicit by intent
  ObjectSum(std::initializer_list<std::pair<const Label, Multiplicity>> terms);

  static ObjectSum zero() { return {}; }

  void add(const Label& label, Multiplicity mult = 1);

  ObjectSum& operator+=(const ObjectSum& other);
  friend ObjectSum operator+(ObjectSum lhs, const ObjectSum& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ObjectSum operator*(Multiplicity k, const ObjectSum& s);

  Multiplicity multiplicity(const Label& label) const;
  /// Sum of all multiplicities.
  Multiplicity total() const;
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// True iff this is exactly one copy of one indecomposable.
  bool is_single() const noexcept;
  /// The label of a single-term sum; throws std::logic_error otherwise.
  const Label& single_label() const;

  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Terms& terms() const noexcept { return terms_; }

  friend bool operator==(const ObjectSum&, const ObjectSum&) = default;

  /// Human form such as "2*X_2^+ + 2*X_2^-"; the zero object prints as "0".
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace fusion
