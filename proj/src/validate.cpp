#include "fusion/validate.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <sstream>

#include "fusion/errors.hpp"

namespace fusion {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::malformed: return "malformed";
  }
  return "?";
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::pass; });
}

bool ValidationReport::malformed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::malformed; });
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "MALFORMED")
       << "  " << c.name << " (" << c.checked << " checked)";
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << (exhaustive ? "exhaustive sweep" : "sampled sweep, seed " + std::to_string(seed)) << '\n';
  return os.str();
}

namespace {

using Pair = std::array<std::size_t, 2>;
using Triple = std::array<std::size_t, 3>;

// Runs `body`, turning table-structure exceptions into a malformed verdict.
CheckResult run_check(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  try {
    body(r);
  } catch (const MissingFusion& e) {
    r.status = CheckStatus::malformed;
    r.detail = e.what();
  } catch (const UnknownLabel& e) {
    r.status = CheckStatus::malformed;
    r.detail = e.what();
  } catch (const NotSimple& e) {
    r.status = CheckStatus::fail;
    r.detail = e.what();
  }
  return r;
}

void fail(CheckResult& r, const std::string& why) {
  if (r.status == CheckStatus::pass) {
    r.status = CheckStatus::fail;
    r.detail = why;
  }
}

void malformed(CheckResult& r, const std::string& why) {
  if (r.status != CheckStatus::malformed) {
    r.status = CheckStatus::malformed;
    r.detail = why;
  }
}

}  // namespace

ValidationReport validate(const CategoryData& cat, const ValidationOptions& opts) {
  ValidationReport report;
  const std::size_t n = cat.size();
  const auto& objs = cat.indecomposables();
  report.exhaustive = n <= opts.max_exhaustive_labels;
  report.seed = opts.seed;

  std::vector<Pair> pairs;
  std::vector<Triple> triples;
  if (report.exhaustive) {
    pairs.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) pairs.push_back({a, b});
    triples.reserve(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) triples.push_back({a, b, c});
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < opts.sample_pairs; ++i) pairs.push_back({pick(rng), pick(rng)});
    for (std::size_t i = 0; i < opts.sample_triples; ++i)
      triples.push_back({pick(rng), pick(rng), pick(rng)});
  }

  // Dangling references are their own error class.
  report.checks.push_back(run_check("labels", [&](CheckResult& r) {
    for (const auto& issue : cat.construction_issues()) malformed(r, issue);
    if (n == 0) malformed(r, "no indecomposables");
    if (!cat.contains(cat.unit())) malformed(r, "unit " + cat.unit() + " is not a label");
    for (const auto& o : objs) {
      ++r.checked;
      if (!cat.contains(o.dual)) malformed(r, "dual of " + o.label + " is unknown: " + o.dual);
      if (o.cover_of && !cat.contains(*o.cover_of))
        malformed(r, "cover_of of " + o.label + " is unknown: " + *o.cover_of);
      for (const auto& [f, m] : o.composition)
        if (!cat.contains(f)) malformed(r, "composition of " + o.label + " names unknown " + f);
    }
  }));
  const bool structurally_sound = report.checks.back().status == CheckStatus::pass;

  report.checks.push_back(run_check("indecomposables", [&](CheckResult& r) {
    for (const auto& o : objs) {
      ++r.checked;
      const bool self_only = o.composition == ObjectSum(o.label);
      if (o.is_simple != self_only)
        fail(r, o.label + ": simple flag disagrees with composition " + o.composition.to_string());
      if (o.composition.empty()) fail(r, o.label + " has empty composition");
      for (const auto& [f, m] : o.composition)
        if (cat.contains(f) && !cat.at(f).is_simple)
          fail(r, o.label + " has non-simple composition factor " + f);
      if (o.cover_of) {
        if (!o.is_projective) fail(r, o.label + " is a cover but not projective");
        if (o.composition.multiplicity(*o.cover_of) == 0)
          fail(r, o.label + " covers " + *o.cover_of + " without containing it");
        if (cat.contains(*o.cover_of) && !cat.at(*o.cover_of).is_simple)
          fail(r, o.label + " covers non-simple " + *o.cover_of);
      }
    }
  }));

  if (!structurally_sound) {
    // Fusion sweeps would only repeat the dangling-label diagnosis.
    for (const char* name : {"unit", "closure", "symmetry", "associativity", "duals", "twists", "gr"}) {
      CheckResult r;
      r.name = name;
      r.status = CheckStatus::malformed;
      r.detail = "skipped: dangling labels";
      report.checks.push_back(r);
    }
    return report;
  }

  const std::size_t unit = cat.index_of(cat.unit());

  report.checks.push_back(run_check("unit", [&](CheckResult& r) {
    const auto& u = objs[unit];
    if (!u.is_simple) fail(r, "unit is not simple");
    if (u.dual != u.label) fail(r, "unit is not self-dual");
    if (!u.twist || !u.twist->is_zero()) fail(r, "unit twist is not 0");
    for (std::size_t a = 0; a < n; ++a) {
      ++r.checked;
      const ObjectSum expect(objs[a].label);
      if (cat.fuse_labels(unit, a) != expect) fail(r, "unit ⊠ " + objs[a].label + " ≠ " + objs[a].label);
      if (cat.fuse_labels(a, unit) != expect) fail(r, objs[a].label + " ⊠ unit ≠ " + objs[a].label);
    }
  }));

  report.checks.push_back(run_check("closure", [&](CheckResult& r) {
    for (const auto& [a, b] : pairs) {
      ++r.checked;
      for (const auto& [label, m] : cat.fuse_labels(a, b))
        if (!cat.contains(label))
          malformed(r, objs[a].label + " ⊠ " + objs[b].label + " contains unknown " + label);
    }
  }));

  report.checks.push_back(run_check("symmetry", [&](CheckResult& r) {
    for (const auto& [a, b] : pairs) {
      ++r.checked;
      if (cat.fuse_labels(a, b) != cat.fuse_labels(b, a))
        fail(r, objs[a].label + " ⊠ " + objs[b].label + " is not symmetric");
    }
  }));

  report.checks.push_back(run_check("associativity", [&](CheckResult& r) {
    for (const auto& [a, b, c] : triples) {
      ++r.checked;
      const ObjectSum left = fuse(cat, cat.fuse_labels(a, b), ObjectSum(objs[c].label));
      const ObjectSum right = fuse(cat, ObjectSum(objs[a].label), cat.fuse_labels(b, c));
      if (left != right)
        fail(r, "(" + objs[a].label + " ⊠ " + objs[b].label + ") ⊠ " + objs[c].label + " = " +
                    left.to_string() + " but " + objs[a].label + " ⊠ (" + objs[b].label +
                    " ⊠ " + objs[c].label + ") = " + right.to_string());
    }
    report.associativity_triples = r.checked;
  }));

  report.checks.push_back(run_check("duals", [&](CheckResult& r) {
    for (const auto& o : objs) {
      ++r.checked;
      const auto& d = cat.at(o.dual);
      if (d.dual != o.label) fail(r, "dual is not an involution at " + o.label);
      if (o.is_simple && !d.is_simple) fail(r, "dual of simple " + o.label + " is not simple");
      if (o.is_projective && !d.is_projective)
        fail(r, "dual of projective " + o.label + " is not projective");
      if (o.is_simple && gr(cat, cat.fuse_labels(o.label, o.dual)).multiplicity(cat.unit()) == 0)
        fail(r, "unit does not occur in " + o.label + " ⊠ " + o.dual);
    }
  }));

  report.checks.push_back(run_check("twists", [&](CheckResult& r) {
    for (const auto& o : objs) {
      ++r.checked;
      if (o.is_simple && !o.twist) fail(r, "simple " + o.label + " has no twist");
      if (!o.is_simple && o.twist) fail(r, "non-simple " + o.label + " carries a twist");
    }
  }));

  report.checks.push_back(run_check("gr", [&](CheckResult& r) {
    std::vector<std::pair<std::size_t, std::size_t>> ps;
    ps.reserve(pairs.size());
    for (const auto& [a, b] : pairs) ps.emplace_back(a, b);
    r.checked = ps.size();
    std::string why;
    if (!gr_consistency(cat, ps, &why)) fail(r, why);
  }));

  return report;
}

void require_valid(const CategoryData& cat) {
  if (auto cached = cat.cached_validity()) {
    if (!*cached) throw InvalidDatum("datum " + cat.name() + " failed validation");
    return;
  }
  const ValidationReport report = validate(cat);
  cat.cache_validity(report.passed());
  if (!report.passed())
    throw InvalidDatum("datum " + cat.name() + " failed validation:\n" + report.to_string());
}

}  // namespace fusion
