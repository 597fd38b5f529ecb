#include "fusion/verify.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "fusion/atlas.hpp"
#include "fusion/errors.hpp"
#include "fusion/validate.hpp"

namespace fusion {

bool all_passed(const std::vector<Clause>& clauses) {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.passed; });
}

std::string format_clauses(const std::vector<Clause>& clauses) {
  std::ostringstream os;
  for (const auto& c : clauses) {
    os << (c.passed ? "PASS" : "FAIL") << ": " << c.name;
    if (!c.expected.empty() || !c.computed.empty())
      os << " (expected " << c.expected << "; computed " << c.computed << ")";
    os << '\n';
  }
  return os.str();
}

namespace {

Clause clause(std::string name, bool passed, std::string expected, std::string computed) {
  return {std::move(name), passed, std::move(expected), std::move(computed)};
}

struct W2Shape {
  char kind;  // 'X' or 'P'
  int index;
  int sign;
};

W2Shape parse_w2(const Label& l) {
  if (l.size() != 5 || (l[0] != 'X' && l[0] != 'P') || l[1] != '_' || l[3] != '^' ||
      (l[4] != '+' && l[4] != '-'))
    throw ModelingError("not a W_2 label: " + l);
  return {l[0], l[2] - '0', l[4] == '+' ? 1 : -1};
}

Label w2_name(char kind, int index, int sign) {
  return std::string(1, kind) + "_" + std::to_string(index) + (sign > 0 ? "^+" : "^-");
}

}  // namespace

ObjectSum sf_plus_expected_fusion(unsigned d, const Label& a, const Label& b) {
  W2Shape x = parse_w2(a);
  W2Shape y = parse_w2(b);
  const Multiplicity half = Multiplicity{1} << (2 * d - 1);
  auto rank = [](const W2Shape& s) { return s.kind == 'P' ? 2 : s.index - 1; };
  if (rank(x) > rank(y)) std::swap(x, y);
  const int sign = x.sign * y.sign;
  if (rank(x) == 0) return ObjectSum(w2_name(y.kind, y.index, sign));
  if (rank(x) == 1 && rank(y) == 1) return ObjectSum(w2_name('P', 1, sign));
  if (rank(x) == 1) return ObjectSum{{"X_2^+", half}, {"X_2^-", half}};
  return ObjectSum{{"P_1^+", half}, {"P_1^-", half}};
}

bool parity_local(const std::vector<Label>& components, const BinaryCode& code) {
  for (Codeword s : code.codewords()) {
    int sum = 0;
    for (int k : subset_elements(s)) {
      const W2Shape w = parse_w2(components.at(k - 1));
      sum += w.sign * w.index;
    }
    if (sum % 2 != 0) return false;
  }
  return true;
}

std::vector<Clause> verify_w2() {
  // The W_2 list, written out pair by pair.
  static const std::vector<std::array<const char*, 3>> kTable = {
      {"P_1^+", "P_1^+", "2*P_1^+ + 2*P_1^-"}, {"P_1^+", "P_1^-", "2*P_1^+ + 2*P_1^-"},
      {"P_1^+", "X_1^+", "P_1^+"},             {"P_1^+", "X_1^-", "P_1^-"},
      {"P_1^+", "X_2^+", "2*X_2^+ + 2*X_2^-"}, {"P_1^+", "X_2^-", "2*X_2^+ + 2*X_2^-"},
      {"P_1^-", "P_1^-", "2*P_1^+ + 2*P_1^-"}, {"P_1^-", "X_1^+", "P_1^-"},
      {"P_1^-", "X_1^-", "P_1^+"},             {"P_1^-", "X_2^+", "2*X_2^+ + 2*X_2^-"},
      {"P_1^-", "X_2^-", "2*X_2^+ + 2*X_2^-"}, {"X_1^+", "X_1^+", "X_1^+"},
      {"X_1^+", "X_1^-", "X_1^-"},             {"X_1^+", "X_2^+", "X_2^+"},
      {"X_1^+", "X_2^-", "X_2^-"},             {"X_1^-", "X_1^-", "X_1^+"},
      {"X_1^-", "X_2^+", "X_2^-"},             {"X_1^-", "X_2^-", "X_2^+"},
      {"X_2^+", "X_2^+", "P_1^+"},             {"X_2^+", "X_2^-", "P_1^-"},
      {"X_2^-", "X_2^-", "P_1^+"},
  };
  const CategoryPtr cat = atlas::w2();
  std::vector<Clause> out = verify_category(*cat);
  const ValidationReport report = validate(*cat);
  out.push_back(clause("associativity triples", report.associativity_triples == 216, "216",
                       std::to_string(report.associativity_triples)));
  std::size_t matched = 0;
  std::size_t non_unit = 0;
  std::string first_bad;
  for (const auto& [a, b, want] : kTable) {
    const std::string got = cat->fuse_labels(a, b).to_string();
    if (got == want) {
      ++matched;
      if (std::string(a) != cat->unit() && std::string(b) != cat->unit()) ++non_unit;
    } else if (first_bad.empty()) {
      first_bad = std::string(a) + " ⊠ " + b + " = " + got + ", listed " + want;
    }
  }
  out.push_back(clause("fusion list (21 unordered pairs, 15 without the unit)",
                       matched == kTable.size() && non_unit == 15, "21 / 15",
                       std::to_string(matched) + " / " + std::to_string(non_unit) +
                           (first_bad.empty() ? "" : "; " + first_bad)));
  return out;
}

std::vector<Clause> verify_category(const CategoryData& cat, const VerifyOptions& opts) {
  ValidationOptions vo;
  vo.seed = opts.seed;
  const ValidationReport report = validate(cat, vo);
  std::vector<Clause> out;
  for (const auto& c : report.checks)
    out.push_back(clause("validate: " + c.name, c.status == CheckStatus::pass,
                         "pass", std::string(to_string(c.status)) + " over " + std::to_string(c.checked) +
                                     (c.detail.empty() ? "" : " (" + c.detail + ")")));
  return out;
}

std::vector<Clause> verify_extension(const ExtensionCategory& ext, const VerifyOptions& opts) {
  const CategoryData& base = ext.family().base_category();
  const CategoryData& cat = ext.data();
  std::vector<Clause> out = verify_category(cat, opts);

  const ObjectSum unit_restricted = ext.restrict(cat.unit());
  out.push_back(clause("algebra object", ext.alg_dimension() != 0 && unit_restricted == ext.family().algebra(),
                       "restrict(unit) = " + ext.family().algebra().to_string(),
                       "|C| = " + std::to_string(ext.alg_dimension()) + ", " + unit_restricted.to_string()));

  bool sound = true;
  std::string bad;
  for (const auto& label : ext.labels()) {
    const InducedLabel& orbit = ext.orbit_of(label);
    const Multiplicity want = ext.alg_dimension() * base.at(orbit.rep).length();
    const Multiplicity got = length(base, ext.restrict(label));
    bool twist_ok = true;
    if (base.at(orbit.rep).is_simple)
      for (const auto& m : orbit.orbit) twist_ok = twist_ok && base.at(m).twist == base.at(orbit.rep).twist;
    if (want != got || !twist_ok) {
      sound = false;
      if (bad.empty()) bad = label;
    }
  }
  out.push_back(clause("orbit soundness", sound, "length(restrict F(m)) = |C| length(m), constant twist",
                       sound ? "holds on every orbit" : "fails at " + bad));

  std::vector<Label> domain;
  for (const auto& obj : base.indecomposables())
    if (ext.in_domain(obj.label)) domain.push_back(obj.label);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const bool exhaustive = domain.size() * domain.size() <= opts.max_exhaustive_pairs;
  if (exhaustive) {
    for (std::size_t a = 0; a < domain.size(); ++a)
      for (std::size_t b = 0; b < domain.size(); ++b) pairs.emplace_back(a, b);
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, domain.size() - 1);
    for (std::size_t i = 0; i < opts.sample_pairs; ++i) pairs.emplace_back(pick(rng), pick(rng));
  }
  std::size_t mismatches = 0;
  std::size_t nonlocal = 0;
  std::string first;
  for (const auto& [a, b] : pairs) {
    const ObjectSum base_product = base.fuse_labels(domain[a], domain[b]);
    if (!is_local(ext.family(), base_product)) {
      ++nonlocal;
      continue;
    }
    const ObjectSum left = ext.induce(base_product);
    const ObjectSum right = fuse(cat, ext.induce(ObjectSum(domain[a])), ext.induce(ObjectSum(domain[b])));
    if (left != right) {
      ++mismatches;
      if (first.empty()) first = domain[a] + " ⊠ " + domain[b];
    }
  }
  const std::string mode = exhaustive ? "exhaustive" : "sampled, seed " + std::to_string(opts.seed);
  out.push_back(clause("induction preserves fusion (" + std::to_string(pairs.size()) + " pairs, " + mode + ")",
                       mismatches == 0 && nonlocal == 0, "0 mismatches",
                       std::to_string(mismatches) + " mismatches" + (first.empty() ? "" : ", first " + first)));
  out.push_back(clause("locality closed under fusion", nonlocal == 0, "0 non-local products",
                       std::to_string(nonlocal) + " non-local products"));

  bool pattern = true;
  std::string pattern_detail;
  std::size_t pairs_checked = 0;
  for (const auto& p : cat.indecomposables()) {
    if (!p.cover_of) continue;
    for (const auto& s : cat.indecomposables()) {
      if (!s.is_simple) continue;
      ++pairs_checked;
      const HomDim h = frobenius_hom(ext, ObjectSum(p.label), ObjectSum(s.label));
      const Multiplicity want = s.label == *p.cover_of ? 1 : 0;
      if (!h || *h != want) {
        pattern = false;
        if (pattern_detail.empty())
          pattern_detail = "hom(" + p.label + ", " + s.label + ") = " + (h ? std::to_string(*h) : "unsupported");
      }
    }
  }
  out.push_back(clause("Frobenius hom pattern of covers (" + std::to_string(pairs_checked) + " pairs)", pattern,
                       "[simple = top]", pattern ? "matches" : pattern_detail));
  return out;
}

std::vector<Clause> verify_sf_plus(unsigned d, const VerifyOptions& opts) {
  const ExtensionPtr ext = atlas::sf_plus(d);
  const CategoryData& cat = ext->data();
  const CategoryData& base = ext->family().base_category();
  std::vector<Clause> out;

  const auto simples = classify_simples(ext->family());
  std::vector<Label> names;
  for (const auto& o : cat.indecomposables())
    if (o.is_simple) names.push_back(o.label);
  const std::vector<Label> want_names = {"X_1^+", "X_1^-", "X_2^+", "X_2^-"};
  out.push_back(clause("simples", simples.size() == 4 && names == want_names, "4: X_1^+, X_1^-, X_2^+, X_2^-",
                       std::to_string(simples.size()) + " orbits, " + std::to_string(names.size()) + " labels"));

  const Multiplicity full = Multiplicity{1} << (2 * d);
  const Multiplicity half = full / 2;
  for (const char* p : {"P_1^+", "P_1^-"}) {
    const auto& obj = cat.at(p);
    const bool ok = obj.length() == full && obj.composition.multiplicity("X_1^+") == half &&
                    obj.composition.multiplicity("X_1^-") == half && obj.composition.size() == 2;
    out.push_back(clause(std::string("cover length ") + p, ok,
                         std::to_string(full) + " = " + std::to_string(half) + "*X_1^+ + " + std::to_string(half) + "*X_1^-",
                         std::to_string(obj.length()) + " = " + obj.composition.to_string()));
  }
  const bool projectives = cat.at("X_2^+").is_projective && cat.at("X_2^-").is_projective &&
                           cat.at("P_1^+").cover_of == Label("X_1^+") && cat.at("P_1^-").cover_of == Label("X_1^-");
  out.push_back(clause("projectives", projectives, "X_2^± projective, P_1^± covers X_1^±",
                       projectives ? "as expected" : "differs"));

  std::size_t pattern_ok = 0;
  for (int eps : {1, -1})
    for (int i : {1, 2})
      for (int delta : {1, -1}) {
        const HomDim h = frobenius_hom(*ext, ObjectSum(w2_name('P', 1, eps)), ObjectSum(w2_name('X', i, delta)));
        const Multiplicity want = (i == 1 && delta == eps) ? 1 : 0;
        if (h && *h == want) ++pattern_ok;
      }
  out.push_back(clause("Frobenius pattern hom(P_1^e, X_i^d) = [i=1][d=e]", pattern_ok == 8, "8 of 8",
                       std::to_string(pattern_ok) + " of 8"));

  std::size_t fusion_ok = 0;
  std::string fusion_bad;
  const std::vector<Label> all = {"P_1^+", "P_1^-", "X_1^+", "X_1^-", "X_2^+", "X_2^-"};
  std::size_t identities = 0;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a; b < all.size(); ++b) {
      ++identities;
      const ObjectSum got = cat.fuse_labels(all[a], all[b]);
      const ObjectSum want = sf_plus_expected_fusion(d, all[a], all[b]);
      if (got == want)
        ++fusion_ok;
      else if (fusion_bad.empty())
        fusion_bad = all[a] + " ⊠ " + all[b] + " = " + got.to_string() + ", expected " + want.to_string();
    }
  out.push_back(clause("fusion identities", fusion_ok == identities && identities == 21,
                       "21 of 21", std::to_string(fusion_ok) + " of " + std::to_string(identities) +
                                        (fusion_bad.empty() ? "" : "; " + fusion_bad)));

  if (d >= 2) {
    std::size_t simples_seen = 0;
    std::size_t agree = 0;
    std::size_t equal_index = 0;
    for (const auto& obj : base.indecomposables()) {
      if (!obj.is_simple) continue;
      ++simples_seen;
      const bool by_monodromy = is_local(ext->family(), ObjectSum(obj.label));
      const bool by_parity = parity_local(obj.components, ext->family().code());
      const int i0 = parse_w2(obj.components[0]).index;
      const bool same = std::all_of(obj.components.begin(), obj.components.end(),
                                    [&](const Label& c) { return parse_w2(c).index == i0; });
      if (by_monodromy == by_parity) ++agree;
      if (by_monodromy == same) ++equal_index;
    }
    const bool ok = agree == simples_seen && equal_index == simples_seen && simples_seen == full;
    out.push_back(clause("locality: monodromy vs parity criterion", ok,
                         std::to_string(full) + " base simples, all agree, local iff all i_k equal",
                         std::to_string(simples_seen) + " simples, " + std::to_string(agree) + " agree, " +
                             std::to_string(equal_index) + " match the equal-index rule"));
  }

  auto generic = verify_extension(*ext, opts);
  out.insert(out.end(), generic.begin(), generic.end());
  return out;
}

}  // namespace fusion
