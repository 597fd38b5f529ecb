#include <doctest.h>

#include "fusion/codes.hpp"
#include "fusion/errors.hpp"
#include "oracles.hpp"

using namespace fusion;

namespace {

std::vector<std::string> words(const BinaryCode& c) {
  std::vector<std::string> out;
  for (Codeword w : c.codewords()) out.push_back(subset_string(w));
  return out;
}

}  // namespace

TEST_SUITE("codes") {

TEST_CASE("subset helpers") {
  CHECK(subset_mask(3, {1, 3}) == 0b101u);
  CHECK(subset_elements(0b110u) == std::vector<int>{2, 3});
  CHECK(subset_string(0) == "{}");
  CHECK(subset_string(0b101u) == "{1,3}");
  CHECK(weight(0b1011u) == 3);
  CHECK_THROWS_AS(subset_mask(2, {3}), CodeError);
  CHECK_THROWS_AS(subset_mask(2, {0}), CodeError);
}

TEST_CASE("span examples") {
  CHECK(words(span(2, {{1, 2}})) == std::vector<std::string>{"{}", "{1,2}"});
  const auto e3 = span(3, {{1, 2}, {2, 3}});
  CHECK(e3.size() == 4);
  CHECK(e3.same_code(even_code(3)));
  CHECK(e3.contains(subset_mask(3, {1, 3})));
  CHECK(words(span(4, {})) == std::vector<std::string>{"{}"});
  CHECK(span(3, {{1, 2}, {2, 3}, {1, 3}}).rank() == 2);
  CHECK_THROWS_AS(BinaryCode(17, {}), CodeError);
  CHECK_THROWS_AS(BinaryCode(0, {}), CodeError);
}

TEST_CASE("even codes") {
  CHECK(words(even_code(1)) == std::vector<std::string>{"{}"});
  CHECK(words(even_code(2)) == std::vector<std::string>{"{}", "{1,2}"});
  CHECK(even_code(4).size() == 8);
  for (unsigned d = 1; d <= 8; ++d) {
    CHECK(is_even(even_code(d)));
    CHECK(even_code(d).size() == (std::size_t{1} << (d - 1)));
  }
  CHECK_FALSE(is_even(span(2, {{1}})));
  CHECK(is_even(span(4, {{1, 2}, {3, 4}})));
}

TEST_CASE("span is idempotent and closes even codes") {
  for (unsigned d = 1; d <= 4; ++d)
    for (const auto& c : enumerate_subspaces(d)) {
      CHECK(BinaryCode(d, c.codewords()).same_code(c));
      CHECK(BinaryCode(d, c.codewords()).codewords() == c.codewords());
    }
  const auto subs = enumerate_subspaces(4);
  for (const auto& c1 : subs)
    for (const auto& c2 : subs) {
      if (!is_even(c1) || !is_even(c2)) continue;
      auto gens = c1.codewords();
      gens.insert(gens.end(), c2.codewords().begin(), c2.codewords().end());
      CHECK(is_even(BinaryCode(4, gens)));
    }
}

TEST_CASE("lowest weights") {
  CHECK(lowest_weight_x1s({2, 2}, subset_mask(2, {1, 2})) == Rational(2));
  CHECK(lowest_weight_x1s({2, 2}, 0) == Rational(0));
  CHECK(lowest_weight_x1s({2, 6}, subset_mask(2, {2})) == Rational(4));
  CHECK(lowest_weight_x1s({3}, 1) == Rational(7, 4));
  const std::vector<int> p = {2, 3, 5, 6};
  for (Codeword s = 0; s < 16; ++s)
    for (Codeword t = 0; t < 16; ++t)
      if ((s & t) == 0) CHECK(lowest_weight_x1s(p, s | t) == lowest_weight_x1s(p, s) + lowest_weight_x1s(p, t));
}

TEST_CASE("admissibility examples") {
  const auto r = admissible(even_code(2), {2, 2});
  CHECK(r.even);
  CHECK(r.four_div);
  CHECK(r.integral_weights);
  CHECK(r.admissible());
  CHECK_FALSE(admissible(span(1, {{1}}), {2}).even);
  const auto r24 = admissible(even_code(2), {2, 4});
  CHECK_FALSE(r24.four_div);
  CHECK(r24.even);
  REQUIRE(r24.first_violation.has_value());
  CHECK(subset_string(*r24.first_violation) == "{1,2}");
  CHECK(admissible(span(4, {{1, 2, 3, 4}}), {4, 4, 4, 4}).admissible());
  CHECK_THROWS_AS(admissible(even_code(2), {2}), CodeError);
  CHECK_THROWS_AS(admissible(even_code(2), {2, 1}), CodeError);
}

TEST_CASE("admissibility at level 2 is evenness") {
  for (unsigned d = 1; d <= 5; ++d) {
    const std::vector<int> p(d, 2);
    for (const auto& c : enumerate_subspaces(d)) {
      bool all_even = true;
      for (Codeword w : c.codewords()) all_even = all_even && (__builtin_popcount(w) % 2 == 0);
      CHECK(admissible(c, p).admissible() == all_even);
      CHECK(is_even(c) == all_even);
    }
  }
}

TEST_CASE("subspace enumeration matches independent counts") {
  for (unsigned d = 1; d <= 5; ++d) {
    const auto subs = enumerate_subspaces(d);
    CHECK(subs.size() == oracle::subspace_count_gaussian(d));
    CHECK(subs.size() == oracle::subspace_count_by_closure(d));
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = i + 1; j < subs.size(); ++j) CHECK_FALSE(subs[i].same_code(subs[j]));
  }
  CHECK(enumerate_subspaces(5).size() == 374);
  CHECK(enumerate_subspaces(2).size() == 5);
}

TEST_CASE("admissible enumeration") {
  const auto two = enumerate_admissible(2, {2, 2});
  REQUIRE(two.size() == 2);
  CHECK(two[0].size() == 1);
  CHECK(two[1].same_code(even_code(2)));
  const auto one = enumerate_admissible(1, {2});
  REQUIRE(one.size() == 1);
  CHECK(one[0].size() == 1);
  CHECK_THROWS_AS(enumerate_admissible(6, std::vector<int>(6, 2)), ResourceBound);
  // even subspaces of F_2^d are the subspaces of E(d), a space of dimension d-1
  for (unsigned d = 2; d <= 5; ++d)
    CHECK(enumerate_admissible(d, std::vector<int>(d, 2)).size() == oracle::subspace_count_gaussian(d - 1));
}

}  // TEST_SUITE
