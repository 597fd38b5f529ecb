#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fusion/category.hpp"
#include "fusion/extension.hpp"

namespace fusion {

/// One verification clause: what was expected and what came out.
struct Clause {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string computed;
};

bool all_passed(const std::vector<Clause>& clauses);
std::string format_clauses(const std::vector<Clause>& clauses);

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  /// Domain pairs up to this count are checked exhaustively in the
  /// induction/fusion comparison; beyond it, `sample_pairs` are drawn.
  std::size_t max_exhaustive_pairs = 1024;
  std::size_t sample_pairs = 1000;
};

/// Validate suite, every label pair of the shipped table against the
/// literal W_2 fusion list, and the associativity triple count.
std::vector<Clause> verify_w2();

/// Checks any datum: the validate suite plus gr consistency.
std::vector<Clause> verify_category(const CategoryData& cat, const VerifyOptions& opts = {});

/// Generic extension checks: validation, orbit soundness, the two-path
/// fusion comparison induce(a ⊠ b) = F(a) ⊠ F(b), locality closure under
/// fusion, Frobenius hom pattern of each projective cover, |C| != 0.
std::vector<Clause> verify_extension(const ExtensionCategory& ext, const VerifyOptions& opts = {});

/// Structure expected of SF_d^+ in closed form: four simples, covers of
/// length 4^d split evenly between X_1^±, projective X_2^±, the Frobenius
/// pattern, all 21 products, and (d >= 2) locality of base simples against
/// the parity criterion. Includes verify_extension.
std::vector<Clause> verify_sf_plus(unsigned d, const VerifyOptions& opts = {});

/// Closed-form SF_d^+ product of two of X_1^±, X_2^±, P_1^±.
ObjectSum sf_plus_expected_fusion(unsigned d, const Label& a, const Label& b);

/// Parity criterion for a tuple of W_2 simples X_{i_k}^{ε_k}: the sum of
/// ε_k i_k over k in S is even for every codeword S.
bool parity_local(const std::vector<Label>& components, const BinaryCode& code);

}  // namespace fusion
