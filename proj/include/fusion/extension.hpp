#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fusion/category.hpp"
#include "fusion/codes.hpp"

namespace fusion {

/// Invertible simples g_S of a base datum indexed by the codewords of a
/// binary code, with g_{} the unit and g_S ⊠ g_T = g_{S△T}. The algebra
/// object of the extension is the direct sum of the g_S.
class CurrentFamily {
 public:
  /// Checks the map covers exactly the codewords, that every g_S is an
  /// invertible simple of `base`, and the group law. Throws InvalidDatum.
  static CurrentFamily create(CategoryPtr base, BinaryCode code,
                              std::map<Codeword, Label> current);

  const CategoryPtr& base() const noexcept { return base_; }
  const CategoryData& base_category() const noexcept { return *base_; }
  const BinaryCode& code() const noexcept { return code_; }
  const std::map<Codeword, Label>& currents() const noexcept { return current_; }
  const Label& current(Codeword s) const;

  /// The algebra object ⊕_S g_S.
  ObjectSum algebra() const;

  /// {g_S ⊠ m : S in code}, sorted. Throws ModelingError if some g_S ⊠ m is
  /// not a single indecomposable.
  std::vector<Label> orbit(const Label& m) const;
  /// Lexicographic minimum of the orbit.
  Label orbit_rep(const Label& m) const { return orbit(m).front(); }

 private:
  CurrentFamily(CategoryPtr base, BinaryCode code, std::map<Codeword, Label> current)
      : base_(std::move(base)), code_(std::move(code)), current_(std::move(current)) {}

  CategoryPtr base_;
  BinaryCode code_;
  std::map<Codeword, Label> current_;
};

/// The family X_1^S over the d-th power of the W_2 atlas: X_1^- in the
/// coordinates of S, X_1^+ elsewhere. Throws CodeError for a code that is
/// not admissible at p = (2,...,2), InvalidDatum for any other base.
CurrentFamily current_family(CategoryPtr base, const BinaryCode& code);

/// Monodromy with every g_S vanishes on every composition factor of every
/// term of `a`.
bool is_local(const CurrentFamily& fam, const ObjectSum& a);

/// An orbit of base indecomposables under the currents.
struct InducedLabel {
  Label rep;
  std::vector<Label> orbit;

  /// "F(rep)".
  Label display() const { return "F(" + rep + ")"; }
  friend bool operator==(const InducedLabel&, const InducedLabel&) = default;
};

InducedLabel induced_label(const CurrentFamily& fam, const Label& m);

/// Term-by-term induction into "F(rep)" labels. Throws NonLocal.
ObjectSum induce(const CurrentFamily& fam, const ObjectSum& a);

/// Orbits of local base simples, ordered by representative.
std::vector<InducedLabel> classify_simples(const CurrentFamily& fam);

/// Category datum of a simple-current extension, together with the orbit
/// bookkeeping that ties each extension label to base objects.
///
/// Labels are orbits of local base simples and local base projective covers.
/// Fusion is induction of base fusion, twists are inherited from the base
/// (constant along orbits), and projective covers are identified through
/// Frobenius reciprocity.
class ExtensionCategory {
 public:
  const CurrentFamily& family() const noexcept { return family_; }
  const CategoryPtr& category() const noexcept { return category_; }
  const CategoryData& data() const noexcept { return *category_; }
  /// |code|, the categorical dimension of the algebra object.
  std::size_t alg_dimension() const noexcept { return family_.code().size(); }

  /// Labels of the extension in category order.
  std::vector<Label> labels() const;
  const InducedLabel& orbit_of(const Label& ext_label) const;
  /// Underlying base object ⊕_S g_S ⊠ rep.
  const ObjectSum& restrict(const Label& ext_label) const;
  /// Whether a base label is inside the induction domain.
  bool in_domain(const Label& base_label) const { return by_base_.count(base_label) != 0; }
  /// Extension label of F(m). Throws NonLocal for a non-local m, ModelingError
  /// for a local m outside the orbit closure of simples and covers.
  const Label& label_for(const Label& base_label) const;
  ObjectSum induce(const ObjectSum& base_sum) const;

 private:
  friend std::shared_ptr<const ExtensionCategory> build_extension(
      const CurrentFamily&, const std::string&, const std::function<Label(const InducedLabel&)>&,
      std::vector<std::string>);

  explicit ExtensionCategory(CurrentFamily family) : family_(std::move(family)) {}

  CurrentFamily family_;
  CategoryPtr category_;
  std::map<Label, InducedLabel> orbits_;
  std::map<Label, ObjectSum> restrict_;
  std::map<Label, Label> by_base_;
};

using ExtensionPtr = std::shared_ptr<const ExtensionCategory>;
using OrbitNamer = std::function<Label(const InducedLabel&)>;

/// Builds and validates the extension datum. `namer` picks display labels
/// (default "F(rep)"). Throws ModelingError when twists vary along an orbit,
/// when fusion of domain objects leaves the domain, when a projective cover
/// does not have exactly one simple top, or when the result fails validation.
ExtensionPtr build_extension(const CurrentFamily& fam, const std::string& name,
                             const OrbitNamer& namer = {}, std::vector<std::string> facts = {});

/// hom(F(a), F(b)) computed as hom_base(a, restrict(F(b))); arguments are
/// extension objects. nullopt when the base hom is not determined.
HomDim frobenius_hom(const ExtensionCategory& ext, const ObjectSum& a, const ObjectSum& b);

}  // namespace fusion
