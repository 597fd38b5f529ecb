#include "fusion/extension.hpp"

#include <algorithm>
#include <set>

#include "fusion/atlas.hpp"
#include "fusion/errors.hpp"
#include "fusion/validate.hpp"

namespace fusion {

CurrentFamily CurrentFamily::create(CategoryPtr base, BinaryCode code,
                                    std::map<Codeword, Label> current) {
  if (!base) throw InvalidDatum("current family over a null datum");
  const CategoryData& cat = *base;
  for (Codeword s : code.codewords())
    if (!current.count(s)) throw InvalidDatum("no current for codeword " + subset_string(s));
  for (const auto& [s, g] : current) {
    if (!code.contains(s)) throw InvalidDatum("current given for non-codeword " + subset_string(s));
    if (!cat.contains(g)) throw UnknownLabel(g);
    if (!is_invertible(cat, g)) throw InvalidDatum(g + " is not an invertible simple");
  }
  if (current.at(0) != cat.unit()) throw InvalidDatum("g_{} must be the unit");
  for (const auto& [s, gs] : current)
    for (const auto& [t, gt] : current)
      if (cat.fuse_labels(gs, gt) != ObjectSum(current.at(s ^ t)))
        throw InvalidDatum("group law fails: " + gs + " ⊠ " + gt + " ≠ " + current.at(s ^ t));
  return CurrentFamily(std::move(base), std::move(code), std::move(current));
}

const Label& CurrentFamily::current(Codeword s) const {
  auto it = current_.find(s);
  if (it == current_.end()) throw CodeError(subset_string(s) + " is not a codeword");
  return it->second;
}

ObjectSum CurrentFamily::algebra() const {
  ObjectSum out;
  for (const auto& [s, g] : current_) out.add(g);
  return out;
}

std::vector<Label> CurrentFamily::orbit(const Label& m) const {
  std::set<Label> members;
  for (const auto& [s, g] : current_) {
    const ObjectSum gm = base_->fuse_labels(g, m);
    if (!gm.is_single())
      throw ModelingError(g + " ⊠ " + m + " = " + gm.to_string() + " is not indecomposable");
    members.insert(gm.single_label());
  }
  return {members.begin(), members.end()};
}

CurrentFamily current_family(CategoryPtr base, const BinaryCode& code) {
  const unsigned d = code.d();
  const AdmissibilityReport report = admissible(code, std::vector<int>(d, 2));
  if (!report.admissible()) throw CodeError("code is not admissible for p = (2,...,2): " + report.to_string());
  if (!base) throw InvalidDatum("current family over a null datum");

  // The base must carry the same structure as the d-th power of W_2.
  const CategoryPtr reference = atlas::w2_power(d);
  auto mismatch = [&] { return InvalidDatum("base datum is not the " + std::to_string(d) + "-th power of W_2"); };
  if (base->size() != reference->size() || base->unit() != reference->unit()) throw mismatch();
  for (std::size_t i = 0; i < reference->size(); ++i) {
    const auto& want = reference->at(i);
    const auto& got = base->at(i);
    if (got.label != want.label || got.composition != want.composition ||
        got.is_simple != want.is_simple || got.is_projective != want.is_projective ||
        got.cover_of != want.cover_of || got.twist != want.twist || got.dual != want.dual)
      throw mismatch();
  }

  std::map<Codeword, Label> current;
  for (Codeword s : code.codewords()) {
    std::vector<Label> comps;
    for (unsigned k = 0; k < d; ++k) comps.push_back(s >> k & 1u ? atlas::kX1Minus : atlas::kX1Plus);
    current.emplace(s, tuple_label(comps));
  }
  return CurrentFamily::create(std::move(base), code, std::move(current));
}

bool is_local(const CurrentFamily& fam, const ObjectSum& a) {
  const CategoryData& cat = fam.base_category();
  for (const auto& [label, mult] : a)
    for (const auto& [factor, fm] : cat.at(label).composition)
      for (const auto& [s, g] : fam.currents())
        if (!monodromy(cat, g, factor).is_zero()) return false;
  return true;
}

InducedLabel induced_label(const CurrentFamily& fam, const Label& m) {
  auto orbit = fam.orbit(m);
  Label rep = orbit.front();
  return {std::move(rep), std::move(orbit)};
}

ObjectSum induce(const CurrentFamily& fam, const ObjectSum& a) {
  ObjectSum out;
  for (const auto& [label, mult] : a) {
    if (!is_local(fam, ObjectSum(label))) throw NonLocal(label + " is not local; its induction is a twisted module");
    out.add(induced_label(fam, label).display(), mult);
  }
  return out;
}

std::vector<InducedLabel> classify_simples(const CurrentFamily& fam) {
  std::map<Label, InducedLabel> orbits;
  for (const auto& obj : fam.base_category().indecomposables()) {
    if (!obj.is_simple || !is_local(fam, ObjectSum(obj.label))) continue;
    InducedLabel ind = induced_label(fam, obj.label);
    orbits.emplace(ind.rep, std::move(ind));
  }
  std::vector<InducedLabel> out;
  for (auto& [rep, ind] : orbits) out.push_back(std::move(ind));
  return out;
}

std::vector<Label> ExtensionCategory::labels() const {
  std::vector<Label> out;
  for (const auto& obj : category_->indecomposables()) out.push_back(obj.label);
  return out;
}

const InducedLabel& ExtensionCategory::orbit_of(const Label& ext_label) const {
  auto it = orbits_.find(ext_label);
  if (it == orbits_.end()) throw UnknownLabel(ext_label);
  return it->second;
}

const ObjectSum& ExtensionCategory::restrict(const Label& ext_label) const {
  auto it = restrict_.find(ext_label);
  if (it == restrict_.end()) throw UnknownLabel(ext_label);
  return it->second;
}

const Label& ExtensionCategory::label_for(const Label& base_label) const {
  auto it = by_base_.find(base_label);
  if (it != by_base_.end()) return it->second;
  if (!family_.base_category().contains(base_label)) throw UnknownLabel(base_label);
  if (!is_local(family_, ObjectSum(base_label)))
    throw NonLocal(base_label + " is not local; its induction is a twisted module");
  throw ModelingError(base_label + " is outside the orbit closure of simples and projective covers");
}

ObjectSum ExtensionCategory::induce(const ObjectSum& base_sum) const {
  ObjectSum out;
  for (const auto& [label, mult] : base_sum) out.add(label_for(label), mult);
  return out;
}

ExtensionPtr build_extension(const CurrentFamily& fam, const std::string& name,
                             const OrbitNamer& namer, std::vector<std::string> facts) {
  const CategoryData& base = fam.base_category();
  std::shared_ptr<ExtensionCategory> ext(new ExtensionCategory(fam));

  // Domain: local simples and local projective covers, grouped into orbits.
  std::map<Label, InducedLabel> by_rep;
  for (const auto& obj : base.indecomposables()) {
    if (!(obj.is_simple || obj.cover_of)) continue;
    if (!is_local(fam, ObjectSum(obj.label))) continue;
    InducedLabel ind = induced_label(fam, obj.label);
    by_rep.emplace(ind.rep, std::move(ind));
  }
  std::set<Label> used_names;
  for (const auto& [rep, ind] : by_rep) {
    Label shown = namer ? namer(ind) : ind.display();
    if (!used_names.insert(shown).second) throw ModelingError("orbit name " + shown + " is used twice");
    for (const auto& member : ind.orbit) {
      const auto& m = base.at(member);
      if (!(m.is_simple || m.cover_of))
        throw ModelingError("orbit of " + rep + " leaves simples and covers at " + member);
      ext->by_base_.emplace(member, shown);
    }
    ext->orbits_.emplace(shown, ind);
  }
  auto ext_label = [&](const Label& base_label) -> const Label& {
    auto it = ext->by_base_.find(base_label);
    if (it == ext->by_base_.end())
      throw ModelingError(base_label + " falls outside the induction domain");
    return it->second;
  };
  auto induce_base = [&](const ObjectSum& s) {
    ObjectSum out;
    for (const auto& [label, mult] : s) out.add(ext_label(label), mult);
    return out;
  };

  for (const auto& [shown, ind] : ext->orbits_) {
    ObjectSum res;
    for (const auto& [s, g] : fam.currents()) res += base.fuse_labels(g, ind.rep);
    ext->restrict_.emplace(shown, std::move(res));
  }

  std::vector<IndecompData> objects;
  for (const auto& [shown, ind] : ext->orbits_) {
    const auto& rep = base.at(ind.rep);
    IndecompData o;
    o.label = shown;
    o.is_simple = rep.is_simple;
    o.is_projective = rep.is_projective;
    o.composition = induce_base(rep.composition);
    o.dual = ext_label(rep.dual);
    if (rep.is_simple) {
      o.twist = rep.twist;
      for (const auto& member : ind.orbit)
        if (base.at(member).twist != rep.twist)
          throw ModelingError("twist is not constant on the orbit of " + ind.rep);
    }
    objects.push_back(std::move(o));
  }

  // Projective covers through Frobenius reciprocity: exactly one simple top
  // with a one-dimensional hom space.
  for (auto& o : objects) {
    const auto& rep = base.at(ext->orbits_.at(o.label).rep);
    if (!rep.cover_of) continue;
    std::optional<Label> top;
    for (const auto& s : objects) {
      if (!s.is_simple) continue;
      HomDim h = hom_dim(base, ObjectSum(rep.label), ext->restrict_.at(s.label));
      if (!h) throw ModelingError("hom from " + rep.label + " to the restriction of " + s.label + " is undetermined");
      if (*h == 0) continue;
      if (*h != 1 || top) throw ModelingError(o.label + " does not have a unique one-dimensional simple top");
      top = s.label;
    }
    if (!top) throw ModelingError(o.label + " has no simple quotient");
    o.cover_of = *top;
  }

  std::vector<FusionEntry> table;
  for (auto a = ext->orbits_.begin(); a != ext->orbits_.end(); ++a)
    for (auto b = a; b != ext->orbits_.end(); ++b) {
      const ObjectSum f = base.fuse_labels(a->second.rep, b->second.rep);
      if (!is_local(fam, f))
        throw ModelingError(a->second.rep + " ⊠ " + b->second.rep + " is not local");
      table.push_back({a->first, b->first, induce_base(f)});
    }

  facts.push_back("algebra-dimension: |C| = " + std::to_string(fam.code().size()) + ", nonzero");
  std::sort(facts.begin(), facts.end());
  ext->category_ = std::make_shared<const CategoryData>(
      name, std::move(objects), ext_label(base.unit()), table, std::move(facts));

  const ValidationReport report = validate(*ext->category_);
  if (!report.passed()) throw ModelingError("extension datum fails validation:\n" + report.to_string());
  ext->category_->cache_validity(true);
  return ext;
}

HomDim frobenius_hom(const ExtensionCategory& ext, const ObjectSum& a, const ObjectSum& b) {
  const CategoryData& base = ext.family().base_category();
  Multiplicity total = 0;
  for (const auto& [la, ma] : a) {
    const ObjectSum source(ext.orbit_of(la).rep);
    for (const auto& [lb, mb] : b) {
      HomDim h = hom_dim(base, source, ext.restrict(lb));
      if (!h) return std::nullopt;
      total += ma * mb * *h;
    }
  }
  return total;
}

}  // namespace fusion
