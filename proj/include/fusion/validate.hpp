#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fusion/category.hpp"

namespace fusion {

struct ValidationOptions {
  /// Atlases up to this many labels get exhaustive pair and triple sweeps;
  /// larger ones are sampled.
  std::size_t max_exhaustive_labels = 64;
  std::size_t sample_triples = 500;
  std::size_t sample_pairs = 2000;
  std::uint64_t seed = 20240601;
};

enum class CheckStatus { pass, fail, malformed };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::size_t checked = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::size_t associativity_triples = 0;

  bool passed() const;
  /// Any check hit dangling labels or missing table entries.
  bool malformed() const;
  const CheckResult* find(const std::string& name) const;
  std::string to_string() const;
};

/// Runs every structural check and reports per check; never throws for a
/// malformed datum. Checks: labels, indecomposables, unit, closure,
/// symmetry, associativity, duals, twists, gr.
ValidationReport validate(const CategoryData& cat, const ValidationOptions& opts = {});

/// Validates with default options (cached on the datum) and throws
/// InvalidDatum on failure.
void require_valid(const CategoryData& cat);

}  // namespace fusion
