#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusion/object_sum.hpp"
#include "fusion/phase.hpp"

namespace fusion {

/// One indecomposable of a Krull-Schmidt atlas.
struct IndecompData {
  Label label;
  /// Factor labels for tuple objects of a product datum; a single entry
  /// equal to `label` for atomic objects.
  std::vector<Label> components;
  /// Composition-factor multiplicities, keyed by simple labels.
  ObjectSum composition;
  bool is_simple = false;
  bool is_projective = false;
  /// The simple whose projective cover this is.
  std::optional<Label> cover_of;
  /// h mod 1 where the ribbon twist is e^{2 pi i h}; simples only.
  std::optional<Phase> twist;
  Label dual;

  Multiplicity length() const { return composition.total(); }
  bool is_tuple() const { return components.size() > 1; }
};

/// Renders factor labels the way tuple labels are named: "(a,b,c)".
/// A single component renders as itself.
Label tuple_label(const std::vector<Label>& components);

/// Dimension of a hom space, or nullopt where the datum does not determine it.
using HomDim = std::optional<Multiplicity>;

struct FusionEntry {
  Label a;
  Label b;
  ObjectSum result;
};

class CategoryData;
using CategoryPtr = std::shared_ptr<const CategoryData>;

/// A finite fusion datum: indecomposables, unit, fusion decompositions,
/// composition series, twists on simples, duals, and recorded facts.
///
/// Instances are immutable once built. The fusion table is either explicit
/// or produced on demand by a rule and memoized; the memo is a pure cache
/// guarded by a shared mutex, so a datum may be shared across threads.
///
/// Construction does not validate. Dangling references are kept and
/// reported by validate().
class CategoryData {
 public:
  /// Lazy fusion source by label index (indices into indecomposables()).
  using FusionRule = std::function<ObjectSum(std::size_t, std::size_t)>;
  using HomRule = std::function<HomDim(std::size_t, std::size_t)>;

  /// Datum with an explicit fusion table. An entry (a,b) also serves (b,a)
  /// unless (b,a) is listed separately.
  CategoryData(std::string name, std::vector<IndecompData> indecomposables,
               Label unit, const std::vector<FusionEntry>& fusion,
               std::vector<std::string> facts);

  /// Datum whose fusion is computed by `rule` and memoized. `hom`, when set,
  /// replaces the default hom rule for label pairs.
  CategoryData(std::string name, std::vector<IndecompData> indecomposables,
               Label unit, FusionRule rule, std::vector<std::string> facts,
               HomRule hom = {});

  CategoryData(const CategoryData&) = delete;
  CategoryData& operator=(const CategoryData&) = delete;

  const std::string& name() const noexcept { return name_; }
  const Label& unit() const noexcept { return unit_; }
  const std::vector<std::string>& facts() const noexcept { return facts_; }
  bool has_fact(const std::string& key) const;

  /// Sorted by label.
  const std::vector<IndecompData>& indecomposables() const noexcept { return objects_; }
  std::size_t size() const noexcept { return objects_.size(); }
  bool contains(const Label& label) const { return index_.count(label) != 0; }
  std::optional<std::size_t> find(const Label& label) const;
  /// Throws UnknownLabel.
  std::size_t index_of(const Label& label) const;
  const IndecompData& at(const Label& label) const { return objects_[index_of(label)]; }
  const IndecompData& at(std::size_t i) const { return objects_.at(i); }

  bool lazy() const noexcept { return static_cast<bool>(rule_); }

  /// Decomposition of the fusion of two indecomposables. Throws MissingFusion
  /// when an explicit table has no entry for the pair.
  ObjectSum fuse_labels(std::size_t a, std::size_t b) const;
  ObjectSum fuse_labels(const Label& a, const Label& b) const {
    return fuse_labels(index_of(a), index_of(b));
  }

  HomDim hom_labels(std::size_t a, std::size_t b) const;

  /// Problems found while building the table from named entries (unknown
  /// labels in entries, duplicate labels, ...). Reported by validate().
  const std::vector<std::string>& construction_issues() const noexcept {
    return issues_;
  }

  /// Cached outcome of a default-options validation: nullopt until run.
  std::optional<bool> cached_validity() const;
  void cache_validity(bool ok) const;

 private:
  CategoryData(std::string name, std::vector<IndecompData> indecomposables,
               Label unit, std::vector<std::string> facts);

  std::string name_;
  std::vector<IndecompData> objects_;
  std::unordered_map<Label, std::size_t> index_;
  Label unit_;
  std::vector<std::string> facts_;
  std::vector<std::string> issues_;

  // explicit table, dense n*n
  std::vector<std::optional<ObjectSum>> table_;

  FusionRule rule_;
  HomRule hom_rule_;
  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<std::size_t, ObjectSum> memo_;

  mutable std::atomic<int> validity_{-1};
};

// Object-level operations. All throw UnknownLabel for labels outside `cat`.

ObjectSum fuse(const CategoryData& cat, const ObjectSum& a, const ObjectSum& b);

/// Image in the Grothendieck group: composition factors with multiplicity.
ObjectSum gr(const CategoryData& cat, const ObjectSum& a);

/// Total number of composition factors.
Multiplicity length(const CategoryData& cat, const ObjectSum& a);

ObjectSum dual(const CategoryData& cat, const ObjectSum& a);

/// Additive in both arguments. Supported: simple to simple, projective cover
/// to simple, and componentwise products of supported pairs in product data.
/// Any term outside that makes the whole answer nullopt.
HomDim hom_dim(const CategoryData& cat, const ObjectSum& a, const ObjectSum& b);

/// Throws NotSimple.
Phase twist_phase(const CategoryData& cat, const Label& simple);

/// s ⊠ s* is exactly the unit.
bool is_invertible(const CategoryData& cat, const Label& s);

/// Double-braiding phase of an invertible simple g with a simple s,
/// twist(g⊠s) - twist(g) - twist(s) mod 1. Throws NotInvertible or NotSimple.
Phase monodromy(const CategoryData& cat, const Label& g, const Label& s);

/// gr(a⊠b) equals the bilinear expansion of gr over composition factors of
/// a and b, for every label pair (first overload) or the given index pairs.
bool gr_consistency(const CategoryData& cat);
bool gr_consistency(const CategoryData& cat,
                    const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                    std::string* first_failure = nullptr);

}  // namespace fusion
