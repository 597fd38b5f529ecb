#include <doctest.h>

#include <set>

#include "fusion/atlas.hpp"
#include "fusion/errors.hpp"
#include "fusion/extension.hpp"
#include "fusion/validate.hpp"
#include "fusion/verify.hpp"
#include "helpers.hpp"

using namespace fusion;
using namespace testing_support;
namespace a = fusion::atlas;

TEST_SUITE("extension") {

TEST_CASE("current family over W_2 x W_2") {
  const auto fam = current_family(a::w2_power(2), even_code(2));
  CHECK(fam.current(subset_mask(2, {1, 2})) == "(X_1^-,X_1^-)");
  CHECK(fam.current(0) == fam.base_category().unit());
  const Label g = fam.current(subset_mask(2, {1, 2}));
  CHECK(fuse(fam.base_category(), ObjectSum(g), ObjectSum(g)) == ObjectSum(fam.current(0)));
  CHECK(fam.algebra() == ObjectSum("(X_1^+,X_1^+)") + ObjectSum("(X_1^-,X_1^-)"));
  CHECK(fam.orbit("(X_2^+,X_2^-)") == std::vector<Label>{"(X_2^+,X_2^-)", "(X_2^-,X_2^+)"});
  CHECK(fam.orbit_rep("(X_2^-,X_2^+)") == "(X_2^+,X_2^-)");
}

TEST_CASE("current family preconditions") {
  CHECK_THROWS_AS(current_family(a::w2_power(2), span(2, {{1}})), CodeError);
  CHECK_THROWS_AS(current_family(z2(), BinaryCode(1, {})), InvalidDatum);
  CHECK_THROWS_AS(current_family(a::w2_power(2), even_code(3)), Error);
  CHECK_THROWS_AS(CurrentFamily::create(a::w2(), span(1, {{1}}), {{0, "X_1^+"}, {1, "X_2^+"}}), InvalidDatum);
  CHECK_THROWS_AS(CurrentFamily::create(a::w2(), span(1, {{1}}), {{0, "X_1^-"}, {1, "X_1^+"}}), InvalidDatum);
}

TEST_CASE("locality") {
  const auto fam = current_family(a::w2_power(2), even_code(2));
  CHECK_FALSE(is_local(fam, ObjectSum("(X_2^+,X_1^+)")));
  CHECK(is_local(fam, ObjectSum(fam.base_category().unit())));
  CHECK(is_local(fam, ObjectSum("(P_1^-,P_1^+)")));
  CHECK(is_local(fam, ObjectSum("(X_2^-,X_2^+)")));
  CHECK_FALSE(is_local(fam, ObjectSum("(X_1^+,X_1^+)") + ObjectSum("(X_1^+,X_2^+)")));
}

TEST_CASE("locality matches the parity criterion") {
  for (unsigned d = 1; d <= 3; ++d) {
    const auto fam = current_family(a::w2_power(d), even_code(d));
    for (const auto& comps : oracle::w2_power_simples(d)) {
      const Label l = tuple_label(comps);
      CAPTURE(l);
      CHECK(is_local(fam, ObjectSum(l)) == oracle::parity_local(comps));
      CHECK(parity_local(comps, fam.code()) == oracle::parity_local(comps));
    }
  }
}

TEST_CASE("induction") {
  const auto fam = current_family(a::w2_power(2), even_code(2));
  CHECK(induce(fam, ObjectSum("(X_1^-,X_1^-)")) == ObjectSum("F((X_1^+,X_1^+))"));
  CHECK(induce(fam, ObjectSum()).empty());
  CHECK(induce(fam, ObjectSum("(X_2^+,X_2^-)") + ObjectSum("(X_2^-,X_2^+)")) == ObjectSum("F((X_2^+,X_2^-))", 2));
  CHECK_THROWS_AS(induce(fam, ObjectSum("(X_2^+,X_1^+)")), NonLocal);
}

TEST_CASE("classification of simples") {
  CHECK(classify_simples(current_family(a::w2_power(2), even_code(2))).size() == 4);
  const auto trivial = classify_simples(current_family(a::w2(), BinaryCode(1, {})));
  REQUIRE(trivial.size() == 4);
  for (const auto& s : trivial) CHECK(s.orbit.size() == 1);
  const auto three = classify_simples(current_family(a::w2_power(3), even_code(3)));
  REQUIRE(three.size() == 4);
  for (const auto& s : three) {
    CHECK(s.orbit.size() == 4);
    for (const auto& m : s.orbit) {
      const auto comps = oracle::components(m);
      for (const auto& c : comps) CHECK(c[2] == comps[0][2]);
    }
  }
}

TEST_CASE("classification ignores the generator presentation") {
  const auto ref = classify_simples(current_family(a::w2_power(3), span(3, {{1, 2}, {2, 3}})));
  CHECK(classify_simples(current_family(a::w2_power(3), span(3, {{1, 3}, {1, 2}}))) == ref);
  CHECK(classify_simples(current_family(a::w2_power(3), span(3, {{2, 3}, {1, 3}, {1, 2}, {}}))) == ref);
  CHECK(classify_simples(current_family(a::w2_power(3), even_code(3))) == ref);
}

TEST_CASE("SF_2^+ as a generic extension") {
  const auto ext = build_extension(current_family(a::w2_power(2), even_code(2)), "E2");
  CHECK(ext->data().size() == 6);
  CHECK(ext->alg_dimension() == 2);
  CHECK(validate(ext->data()).passed());
  const Label x2p = ext->label_for("(X_2^+,X_2^+)");
  const Label x2m = ext->label_for("(X_2^-,X_2^+)");
  const Label p1p = ext->label_for("(P_1^+,P_1^+)");
  CHECK(fuse(ext->data(), ObjectSum(x2p), ObjectSum(p1p)) == ObjectSum(x2p, 8) + ObjectSum(x2m, 8));
  for (const auto& l : ext->labels()) {
    const auto& orbit = ext->orbit_of(l);
    CHECK(length(ext->family().base_category(), ext->restrict(l)) ==
          ext->alg_dimension() * ext->family().base_category().at(orbit.rep).length());
  }
  CHECK(all_passed(verify_extension(*ext)));
}

TEST_CASE("two-path fusion over W_2 x W_2") {
  const auto ext = build_extension(current_family(a::w2_power(2), even_code(2)), "E2");
  const auto& base = ext->family().base_category();
  std::vector<Label> domain;
  for (const auto& o : base.indecomposables())
    if (ext->in_domain(o.label)) domain.push_back(o.label);
  CHECK(domain.size() == 12);
  for (const auto& x : domain)
    for (const auto& y : domain) {
      CAPTURE(x);
      CAPTURE(y);
      CHECK(ext->induce(base.fuse_labels(x, y)) ==
            fuse(ext->data(), ObjectSum(ext->label_for(x)), ObjectSum(ext->label_for(y))));
    }
}

TEST_CASE("extensions whose fusion leaves the domain are rejected") {
  // (X_2^+,X_2^+,X_1^+) x (X_2^+,X_2^+,X_2^+) contains (P_1^+,P_1^+,X_2^+): local, neither simple nor a cover
  CHECK_THROWS_AS(build_extension(current_family(a::w2_power(3), span(3, {{1, 2}})), "C12"), ModelingError);
}

TEST_CASE("generic naming over W_2^3") {
  const auto r = a::w_code({2, 2, 2}, even_code(3));
  REQUIRE(r.extension);
  CHECK(r.extension->data().size() == 6);
  CHECK(r.extension->data().contains("F((X_2^+,X_2^+,X_2^+))"));
  CHECK(all_passed(verify_extension(*r.extension)));
}

TEST_CASE("Frobenius hom") {
  const auto ext = a::sf_plus(2);
  const auto hom = [&](const Label& x, const Label& y) { return frobenius_hom(*ext, ObjectSum(x), ObjectSum(y)); };
  for (const char* eps : {"+", "-"})
    for (const char* delta : {"+", "-"}) {
      CHECK(hom(std::string("P_1^") + eps, std::string("X_1^") + delta) == HomDim(std::string(eps) == delta ? 1 : 0));
      CHECK(hom(std::string("P_1^") + eps, std::string("X_2^") + delta) == HomDim(0));
    }
  CHECK(hom("X_1^+", "X_1^+") == HomDim(1));
  CHECK(hom("X_2^+", "X_2^-") == HomDim(0));
  CHECK_FALSE(hom("P_1^+", "P_1^-").has_value());
}

}  // TEST_SUITE
