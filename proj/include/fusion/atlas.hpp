#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusion/category.hpp"
#include "fusion/codes.hpp"
#include "fusion/extension.hpp"

namespace fusion::atlas {

inline const Label kX1Plus = "X_1^+";
inline const Label kX1Minus = "X_1^-";
inline const Label kX2Plus = "X_2^+";
inline const Label kX2Minus = "X_2^-";
inline const Label kP1Plus = "P_1^+";
inline const Label kP1Minus = "P_1^-";

/// Lowest conformal weight of X_i^± for W_2: (i-3)(i-3±2)/8.
Rational w2_lowest_weight(int i, int sign);

/// The triplet algebra W_2: simples X_1^±, X_2^±, projective covers P_1^±
/// of X_1^±, all self-dual, unit X_1^+. Twists are stored mod 1, so X_1^-
/// (weight 1) carries phase 0. Built once and shared.
CategoryPtr w2();

/// power(w2(), d), memoized per d.
CategoryPtr w2_power(unsigned d);

/// Lowest weight (3p-2)/4 of X_1^- for W_p. Throws CodeError for p < 2.
Rational x1_minus_weight(int p);

inline constexpr unsigned kSfPlusBound = 4;

/// Even symplectic fermions SF_d^+: the extension of W_2^{⊗d} along E(d),
/// with orbits named X_i^ε := F(X_i^ε ⊗ X_i^+ ⊗ ... ⊗ X_i^+) and
/// P_1^ε := F(P_1^ε ⊗ P_1^+ ⊗ ... ⊗ P_1^+). Memoized per d.
/// Throws std::invalid_argument for d == 0 and ResourceBound above `bound`.
ExtensionPtr sf_plus(unsigned d, unsigned bound = kSfPlusBound);

struct WCodeResult {
  AdmissibilityReport report;
  /// Set only when every level is 2 and the code is admissible.
  ExtensionPtr extension;
  std::vector<std::string> facts;
  std::string note;
};

/// The extension W^C_{p_1..p_d} when its fusion data is available (all
/// p_i = 2), otherwise the admissibility verdict alone. Throws CodeError on
/// a dimension mismatch.
WCodeResult w_code(const std::vector<int>& p, const BinaryCode& code);

/// Named atlas entry: "w2", "power:<d>", or "sf_plus:<d>".
struct AtlasEntry {
  std::string key;
  CategoryPtr datum;
  ExtensionPtr extension;  // for sf_plus entries
  std::vector<std::string> provenance;
};

/// Throws std::invalid_argument for an unknown key.
AtlasEntry entry(const std::string& key);

}  // namespace fusion::atlas
