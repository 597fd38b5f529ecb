#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusion/phase.hpp"

namespace fusion {

/// A subset of {1..d} as a bit mask: element k is bit k-1.
using Codeword = std::uint32_t;

/// Throws CodeError when an element is outside {1..d}.
Codeword subset_mask(unsigned d, const std::vector<int>& elements);
std::vector<int> subset_elements(Codeword word);
/// "{1,3}", or "{}" for the empty set.
std::string subset_string(Codeword word);
int weight(Codeword word);

/// An F_2-subspace of the power set of {1..d} under symmetric difference.
class BinaryCode {
 public:
  static constexpr unsigned max_dimension = 16;

  /// The span of `generators`. Throws CodeError for d outside [1, 16] or a
  /// generator with bits beyond d.
  BinaryCode(unsigned d, std::vector<Codeword> generators);

  unsigned d() const noexcept { return d_; }
  /// As given, duplicates and dependencies included.
  const std::vector<Codeword>& generators() const noexcept { return generators_; }
  /// Every codeword, ascending by mask; always starts with the empty set.
  const std::vector<Codeword>& codewords() const noexcept { return codewords_; }
  std::size_t size() const noexcept { return codewords_.size(); }
  unsigned rank() const noexcept { return rank_; }
  bool contains(Codeword w) const;

  /// Same subspace, regardless of generators.
  bool same_code(const BinaryCode& o) const { return d_ == o.d_ && codewords_ == o.codewords_; }

  std::string to_string() const;

 private:
  unsigned d_;
  std::vector<Codeword> generators_;
  std::vector<Codeword> codewords_;
  unsigned rank_ = 0;
};

BinaryCode span(unsigned d, const std::vector<std::vector<int>>& generators);

/// E(d): all even-cardinality subsets.
BinaryCode even_code(unsigned d);

bool is_even(const BinaryCode& code);

/// Lowest conformal weight of the simple current X_1^S over W_{p_1} ⊗ ... ⊗
/// W_{p_d}: the sum over i in S of (3 p_i - 2) / 4.
Rational lowest_weight_x1s(const std::vector<int>& p, Codeword s);

struct AdmissibilityReport {
  /// Every codeword has even cardinality (the extension is N-graded).
  bool even = true;
  /// The sum of p_i over every codeword lies in 4Z (the lattice is even).
  bool four_div = true;
  /// Every X_1^S has integral lowest weight; implied by the two above.
  bool integral_weights = true;
  std::optional<Codeword> first_violation;
  std::string violation;

  bool admissible() const { return even && four_div && integral_weights; }
  std::string to_string() const;
};

/// Throws CodeError when code.d() != p.size() or some p_i < 2.
AdmissibilityReport admissible(const BinaryCode& code, const std::vector<int>& p);

/// Every subspace of F_2^d exactly once, via reduced row echelon generator
/// matrices: by dimension, then pivot columns, then free entries.
std::vector<BinaryCode> enumerate_subspaces(unsigned d);

/// Subspaces passing admissible(). Throws ResourceBound when d > bound.
std::vector<BinaryCode> enumerate_admissible(unsigned d, const std::vector<int>& p,
                                             unsigned bound = 5);

}  // namespace fusion
