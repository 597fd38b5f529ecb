#pragma once

// Reference data computed without the library: literal W_2 tables, a
// brute-force product of W_2 with itself, the parity locality criterion,
// and a closure-based subspace count. Plain strings, ints and maps only.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Sum = std::map<std::string, std::uint64_t>;

struct Obj {
  std::string label;
  bool simple;
  bool projective;
  std::string cover_of;  // empty if none
  int twist8;            // twist in eighths, -1 for non-simples
  Sum composition;
};

inline const std::vector<Obj>& w2_objects() {
  static const std::vector<Obj> objs = {
      {"P_1^+", false, true, "X_1^+", -1, {{"X_1^+", 2}, {"X_1^-", 2}}},
      {"P_1^-", false, true, "X_1^-", -1, {{"X_1^+", 2}, {"X_1^-", 2}}},
      {"X_1^+", true, false, "", 0, {{"X_1^+", 1}}},
      {"X_1^-", true, false, "", 0, {{"X_1^-", 1}}},
      {"X_2^+", true, true, "", 7, {{"X_2^+", 1}}},
      {"X_2^-", true, true, "", 3, {{"X_2^-", 1}}},
  };
  return objs;
}

// Every unordered product, written out by hand.
inline const std::map<std::pair<std::string, std::string>, Sum>& w2_table() {
  static const std::map<std::pair<std::string, std::string>, Sum> table = {
      {{"X_1^+", "X_1^+"}, {{"X_1^+", 1}}},
      {{"X_1^+", "X_1^-"}, {{"X_1^-", 1}}},
      {{"X_1^+", "X_2^+"}, {{"X_2^+", 1}}},
      {{"X_1^+", "X_2^-"}, {{"X_2^-", 1}}},
      {{"X_1^+", "P_1^+"}, {{"P_1^+", 1}}},
      {{"X_1^+", "P_1^-"}, {{"P_1^-", 1}}},
      {{"X_1^-", "X_1^-"}, {{"X_1^+", 1}}},
      {{"X_1^-", "X_2^+"}, {{"X_2^-", 1}}},
      {{"X_1^-", "X_2^-"}, {{"X_2^+", 1}}},
      {{"X_1^-", "P_1^+"}, {{"P_1^-", 1}}},
      {{"X_1^-", "P_1^-"}, {{"P_1^+", 1}}},
      {{"X_2^+", "X_2^+"}, {{"P_1^+", 1}}},
      {{"X_2^+", "X_2^-"}, {{"P_1^-", 1}}},
      {{"X_2^-", "X_2^-"}, {{"P_1^+", 1}}},
      {{"X_2^+", "P_1^+"}, {{"X_2^+", 2}, {"X_2^-", 2}}},
      {{"X_2^+", "P_1^-"}, {{"X_2^+", 2}, {"X_2^-", 2}}},
      {{"X_2^-", "P_1^+"}, {{"X_2^+", 2}, {"X_2^-", 2}}},
      {{"X_2^-", "P_1^-"}, {{"X_2^+", 2}, {"X_2^-", 2}}},
      {{"P_1^+", "P_1^+"}, {{"P_1^+", 2}, {"P_1^-", 2}}},
      {{"P_1^+", "P_1^-"}, {{"P_1^+", 2}, {"P_1^-", 2}}},
      {{"P_1^-", "P_1^-"}, {{"P_1^+", 2}, {"P_1^-", 2}}},
  };
  return table;
}

inline Sum w2_fuse(const std::string& a, const std::string& b) {
  const auto& t = w2_table();
  auto it = t.find({a, b});
  if (it == t.end()) it = t.find({b, a});
  return it->second;
}

inline const Obj& w2_obj(const std::string& l) {
  for (const auto& o : w2_objects())
    if (o.label == l) return o;
  throw std::out_of_range(l);
}

inline std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

// A fraction num/den reduced into [0,1), rendered "n/d" or "0".
inline std::string frac_mod1(long num, long den) {
  num %= den;
  if (num < 0) num += den;
  if (num == 0) return "0";
  const long g = std::gcd(num, den);
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

struct PairObj {
  std::string label;
  bool simple;
  bool projective;
  std::string cover_of;
  std::string twist;  // "" for non-simples
  std::string dual;
  Sum composition;
};

// W_2 x W_2 by componentwise arithmetic on the literal tables.
struct W2Squared {
  std::map<std::string, PairObj> objects;
  std::map<std::pair<std::string, std::string>, Sum> fusion;  // a <= b
};

inline W2Squared w2_squared() {
  W2Squared out;
  const auto& objs = w2_objects();
  for (const auto& l : objs)
    for (const auto& r : objs) {
      PairObj p;
      p.label = pair_label(l.label, r.label);
      p.simple = l.simple && r.simple;
      p.projective = l.projective && r.projective;
      if (!l.cover_of.empty() && !r.cover_of.empty()) p.cover_of = pair_label(l.cover_of, r.cover_of);
      if (p.simple) p.twist = frac_mod1(l.twist8 + r.twist8, 8);
      p.dual = p.label;  // every W_2 object is self-dual
      for (const auto& [a, m] : l.composition)
        for (const auto& [b, n] : r.composition) p.composition[pair_label(a, b)] += m * n;
      out.objects[p.label] = p;
    }
  for (const auto& a1 : objs)
    for (const auto& a2 : objs)
      for (const auto& b1 : objs)
        for (const auto& b2 : objs) {
          const std::string a = pair_label(a1.label, a2.label), b = pair_label(b1.label, b2.label);
          if (b < a) continue;
          Sum s;
          for (const auto& [x, m] : w2_fuse(a1.label, b1.label))
            for (const auto& [y, n] : w2_fuse(a2.label, b2.label)) s[pair_label(x, y)] += m * n;
          out.fusion[{a, b}] = s;
        }
  return out;
}

// Splits "(X_1^+,X_2^-)" or "X_1^+" into components.
inline std::vector<std::string> components(const std::string& label) {
  if (label.empty() || label.front() != '(') return {label};
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 1; i + 1 < label.size(); ++i) {
    if (label[i] == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += label[i];
    }
  }
  out.push_back(cur);
  return out;
}

// sum over k in S of eps_k * i_k is even for every even subset S of {1..d}.
// eps = +1 or -1 only changes the sign, so parity of sum of i_k over S.
inline bool parity_local(const std::vector<std::string>& simples) {
  const std::size_t d = simples.size();
  for (std::uint32_t s = 0; s < (1u << d); ++s) {
    if (__builtin_popcount(s) % 2) continue;
    long total = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if (!(s >> k & 1)) continue;
      const int i = simples[k][2] - '0';
      const int eps = simples[k].back() == '+' ? 1 : -1;
      total += eps * i;
    }
    if (total % 2) return false;
  }
  return true;
}

// All X-labels (simples) of W_2^d as component vectors.
inline std::vector<std::vector<std::string>> w2_power_simples(unsigned d) {
  std::vector<std::vector<std::string>> out = {{}};
  for (unsigned k = 0; k < d; ++k) {
    std::vector<std::vector<std::string>> next;
    for (const auto& v : out)
      for (const char* s : {"X_1^+", "X_1^-", "X_2^+", "X_2^-"}) {
        auto w = v;
        w.push_back(s);
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

// Subspaces of F_2^d found by closing {0} under adjoining one vector at a
// time; each subspace is recorded as its membership bitmap over 2^d vectors.
inline std::size_t subspace_count_by_closure(unsigned d) {
  const std::uint32_t n = 1u << d;
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> frontier;
  std::vector<bool> zero(n, false);
  zero[0] = true;
  seen.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    auto cur = frontier.back();
    frontier.pop_back();
    for (std::uint32_t v = 1; v < n; ++v) {
      if (cur[v]) continue;
      auto next = cur;
      for (std::uint32_t w = 0; w < n; ++w)
        if (cur[w]) next[w ^ v] = true;
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return seen.size();
}

// Sum over k of the Gaussian binomial [d choose k]_2.
inline std::uint64_t subspace_count_gaussian(unsigned d) {
  std::uint64_t total = 0;
  for (unsigned k = 0; k <= d; ++k) {
    std::uint64_t num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
      num *= (1ull << (d - i)) - 1;
      den *= (1ull << (i + 1)) - 1;
    }
    total += num / den;
  }
  return total;
}

}  // namespace oracle
