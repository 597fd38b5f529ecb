#include "fusion/codes.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "fusion/errors.hpp"

namespace fusion {

Codeword subset_mask(unsigned d, const std::vector<int>& elements) {
  Codeword w = 0;
  for (int e : elements) {
    if (e < 1 || static_cast<unsigned>(e) > d)
      throw CodeError("element " + std::to_string(e) + " is outside {1.." + std::to_string(d) + "}");
    w |= Codeword{1} << (e - 1);
  }
  return w;
}

std::vector<int> subset_elements(Codeword word) {
  std::vector<int> out;
  for (int k = 0; word; ++k, word >>= 1)
    if (word & 1u) out.push_back(k + 1);
  return out;
}

std::string subset_string(Codeword word) {
  std::string out = "{";
  bool first = true;
  for (int e : subset_elements(word)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

int weight(Codeword word) { return std::popcount(word); }

BinaryCode::BinaryCode(unsigned d, std::vector<Codeword> generators)
    : d_(d), generators_(std::move(generators)) {
  if (d_ < 1 || d_ > max_dimension)
    throw CodeError("code dimension must be in [1, " + std::to_string(max_dimension) + "]");
  const Codeword full = (Codeword{1} << d_) - 1;
  // Gaussian elimination keyed on the lowest set bit.
  std::vector<Codeword> basis;
  for (Codeword g : generators_) {
    if (g & ~full) throw CodeError("generator " + subset_string(g) + " exceeds d = " + std::to_string(d_));
    for (Codeword b : basis)
      if (g & (b & -b)) g ^= b;
    if (!g) continue;
    for (Codeword& b : basis)
      if (b & (g & -g)) b ^= g;
    basis.push_back(g);
  }
  rank_ = static_cast<unsigned>(basis.size());
  codewords_.reserve(std::size_t{1} << rank_);
  for (std::size_t combo = 0; combo < (std::size_t{1} << rank_); ++combo) {
    Codeword w = 0;
    for (unsigned k = 0; k < rank_; ++k)
      if (combo >> k & 1u) w ^= basis[k];
    codewords_.push_back(w);
  }
  std::sort(codewords_.begin(), codewords_.end());
}

bool BinaryCode::contains(Codeword w) const {
  return std::binary_search(codewords_.begin(), codewords_.end(), w);
}

std::string BinaryCode::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < codewords_.size(); ++i) {
    if (i) out += ", ";
    out += subset_string(codewords_[i]);
  }
  return out + "}";
}

BinaryCode span(unsigned d, const std::vector<std::vector<int>>& generators) {
  std::vector<Codeword> masks;
  masks.reserve(generators.size());
  for (const auto& g : generators) masks.push_back(subset_mask(d, g));
  return BinaryCode(d, std::move(masks));
}

BinaryCode even_code(unsigned d) {
  // {1,k} for k = 2..d span E(d).
  std::vector<Codeword> gens;
  for (unsigned k = 2; k <= d; ++k) gens.push_back(1u | (Codeword{1} << (k - 1)));
  return BinaryCode(d, std::move(gens));
}

bool is_even(const BinaryCode& code) {
  return std::all_of(code.codewords().begin(), code.codewords().end(),
                     [](Codeword w) { return weight(w) % 2 == 0; });
}

Rational lowest_weight_x1s(const std::vector<int>& p, Codeword s) {
  if (p.size() < 32 && (s >> p.size()) != 0)
    throw CodeError("subset " + subset_string(s) + " exceeds " + std::to_string(p.size()) + " factors");
  Rational total = 0;
  for (int i : subset_elements(s)) total += Rational(3 * p[i - 1] - 2, 4);
  return total;
}

std::string AdmissibilityReport::to_string() const {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::string out = std::string("even: ") + yn(even) + ", four_div: " + yn(four_div) +
                    ", integral_weights: " + yn(integral_weights);
  if (first_violation) out += "; first violation " + subset_string(*first_violation) + " (" + violation + ")";
  return out;
}

AdmissibilityReport admissible(const BinaryCode& code, const std::vector<int>& p) {
  if (p.size() != code.d())
    throw CodeError("code has d = " + std::to_string(code.d()) + " but " +
                    std::to_string(p.size()) + " levels were given");
  for (int pi : p)
    if (pi < 2) throw CodeError("levels must be at least 2");
  AdmissibilityReport report;
  for (Codeword s : code.codewords()) {
    std::vector<std::string> why;
    if (weight(s) % 2 != 0) {
      report.even = false;
      why.push_back("odd cardinality");
    }
    int sum = 0;
    for (int i : subset_elements(s)) sum += p[i - 1];
    if (sum % 4 != 0) {
      report.four_div = false;
      why.push_back("level sum " + std::to_string(sum) + " not in 4Z");
    }
    const Rational h = lowest_weight_x1s(p, s);
    if (h.denominator() != 1) {
      report.integral_weights = false;
      why.push_back("lowest weight " + fusion::to_string(h) + " not integral");
    }
    if (!why.empty() && !report.first_violation) {
      report.first_violation = s;
      for (std::size_t k = 0; k < why.size(); ++k) report.violation += (k ? "; " : "") + why[k];
    }
  }
  return report;
}

std::vector<BinaryCode> enumerate_subspaces(unsigned d) {
  if (d < 1 || d > BinaryCode::max_dimension) throw CodeError("bad dimension");
  std::vector<BinaryCode> out;
  for (unsigned k = 0; k <= d; ++k) {
    // pivot columns as an increasing k-subset of {0..d-1}
    std::vector<unsigned> pivots(k);
    std::function<void(unsigned, unsigned)> choose = [&](unsigned slot, unsigned from) {
      if (slot == k) {
        Codeword pivot_mask = 0;
        for (unsigned c : pivots) pivot_mask |= Codeword{1} << c;
        std::vector<std::vector<unsigned>> free(k);
        for (unsigned r = 0; r < k; ++r)
          for (unsigned c = pivots[r] + 1; c < d; ++c)
            if (!(pivot_mask >> c & 1u)) free[r].push_back(c);
        std::vector<Codeword> rows(k);
        std::function<void(unsigned)> fill = [&](unsigned r) {
          if (r == k) {
            out.emplace_back(d, rows);
            return;
          }
          const std::size_t n = std::size_t{1} << free[r].size();
          for (std::size_t bits = 0; bits < n; ++bits) {
            Codeword row = Codeword{1} << pivots[r];
            for (std::size_t j = 0; j < free[r].size(); ++j)
              if (bits >> j & 1u) row |= Codeword{1} << free[r][j];
            rows[r] = row;
            fill(r + 1);
          }
        };
        fill(0);
        return;
      }
      for (unsigned c = from; c + (k - slot) <= d; ++c) {
        pivots[slot] = c;
        choose(slot + 1, c + 1);
      }
    };
    choose(0, 0);
  }
  return out;
}

std::vector<BinaryCode> enumerate_admissible(unsigned d, const std::vector<int>& p, unsigned bound) {
  if (d > bound)
    throw ResourceBound("subspace enumeration is limited to d <= " + std::to_string(bound));
  if (p.size() != d) throw CodeError("expected " + std::to_string(d) + " levels");
  std::vector<BinaryCode> out;
  for (auto& code : enumerate_subspaces(d))
    if (admissible(code, p).admissible()) out.push_back(std::move(code));
  return out;
}

}  // namespace fusion
