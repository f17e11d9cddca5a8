#include <doctest.h>

#include "oracles.hpp"
#include "rootres/catalog.hpp"
#include "rootres/error.hpp"
#include "rootres/root_class.hpp"

using namespace rootres;

namespace {

const CatalogEntry& entry(std::string_view name) { return *find_catalog(name); }
const Subgroup& sub(std::string_view g, std::string_view s) { return *entry(g).subgroup(s); }

const RootClassSpec p2 = RootClassSpec::finite_p(2);
const RootClassSpec p3 = RootClassSpec::finite_p(3);
const RootClassSpec fin = RootClassSpec::all_finite();
const RootClassSpec sol = RootClassSpec::finite_solvable();

}  // namespace

TEST_CASE("class specs parse and print") {
  CHECK(RootClassSpec::parse("finite") == fin);
  CHECK(RootClassSpec::parse("solvable") == sol);
  CHECK(RootClassSpec::parse("p:3") == p3);
  CHECK(RootClassSpec::parse("p:3").str() == "p:3");
  CHECK_THROWS_AS(RootClassSpec::parse("p:4"), InputError);
  CHECK_THROWS_AS(RootClassSpec::parse("p:"), InputError);
  CHECK_THROWS_AS(RootClassSpec::parse("nilpotent"), InputError);
  CHECK_THROWS_AS(RootClassSpec::finite_p(1), InputError);
}

TEST_CASE("membership") {
  CHECK(member(entry("D4").group, p2));
  CHECK(!member(entry("S3").group, p3));
  for (const auto& k : {fin, p2, p3, sol}) CHECK(member(entry("C1").group, k));
  CHECK(member(entry("S4").group, sol));
  CHECK(member(entry("Q8").group, p2));
  CHECK(!member(entry("C6").group, p2));
}

TEST_CASE("residual cores") {
  CHECK(residual_core(entry("S3").group, p2).core == sub("S3", "A3"));
  CHECK(residual_core(entry("S3").group, fin).core.is_trivial());
  CHECK(residual_core(entry("S3").group, p3).core.is_whole());
  CHECK(residual_core(entry("C4").group, p2).residual());
  CHECK(!residual_core(entry("A4").group, p3).residual());
}

TEST_CASE("class kernels agree with brute force") {
  const std::vector<std::pair<RootClassSpec, oracle::Class>> classes{
      {fin, {oracle::Kind::Finite, 0}},
      {p2, {oracle::Kind::P, 2}},
      {p3, {oracle::Kind::P, 3}},
      {sol, {oracle::Kind::Solvable, 0}}};
  for (const auto& e : catalog()) {
    const oracle::PermSet g(e.group->elements().begin(), e.group->elements().end());
    for (const auto& [k, ok] : classes) {
      CAPTURE(e.name);
      CAPTURE(k.str());
      std::set<oracle::PermSet> mine, theirs;
      for (const auto& n : class_kernels(e.group, k)) {
        const auto v = n.element_perms();
        mine.insert({v.begin(), v.end()});
      }
      for (const auto& n : oracle::normal_subgroups(g)) {
        if (oracle::quotient_in_class(g, n, ok)) theirs.insert(n);
      }
      CHECK(mine == theirs);
    }
  }
}

TEST_CASE("root property witnesses") {
  const auto& d4 = entry("D4");
  // C2 inside C4 inside D4
  CHECK(axiom3_witness(d4.group, sub("D4", "C4"), sub("D4", "C2"), p2).is_trivial());
  CHECK(axiom3_witness(entry("S3").group, sub("S3", "A3"), sub("S3", "A3"), p2) == sub("S3", "A3"));
  CHECK(axiom3_witness(entry("S3").group, sub("S3", "S3"), sub("S3", "A3"), sol).is_trivial());
  // S3/1 is not a 2-group
  CHECK_THROWS_AS(axiom3_witness(entry("S3").group, sub("S3", "A3"), sub("S3", "1"), p2), InputError);
  // T12 is not normal in S3
  CHECK_THROWS_AS(axiom3_witness(entry("S3").group, sub("S3", "T12"), sub("S3", "1"), fin), InputError);
}

TEST_CASE("intersection of class kernels") {
  const auto& v = entry("C2xC2");
  auto r = lemma_prop3_check(v.group, sub("C2xC2", "A"), sub("C2xC2", "B"), p2);
  CHECK(r.holds);
  CHECK(r.quotient->order() == 4);
  CHECK(lemma_prop3_check(v.group, sub("C2xC2", "A"), sub("C2xC2", "A"), p2).holds);
  CHECK(lemma_prop3_check(entry("C6").group, sub("C6", "C2"), sub("C6", "C3"), sol).quotient->order() == 6);
  CHECK_THROWS_AS(lemma_prop3_check(entry("S3").group, sub("S3", "1"), sub("S3", "A3"), p2), InputError);
}

TEST_CASE("extension closure") {
  const auto& d4 = entry("D4");
  CHECK(extension_closure_check(d4.group, {sub("D4", "C2"), sub("D4", "C4"), sub("D4", "D4")}, p2));
  CHECK(extension_closure_check(d4.group, {sub("D4", "D4")}, p2));
  CHECK(extension_closure_check(entry("S3").group, {sub("S3", "A3"), sub("S3", "S3")}, sol));
  CHECK_THROWS_AS(extension_closure_check(entry("S3").group, {sub("S3", "A3"), sub("S3", "S3")}, p2),
                  InputError);
  CHECK_THROWS_AS(extension_closure_check(d4.group, {sub("D4", "C4")}, p2), InputError);
}

TEST_CASE("residual extension") {
  CHECK(residual_extension_check(entry("D4").group, sub("D4", "C4"), p2));
  CHECK(!residual_extension_check(entry("S3").group, sub("S3", "A3"), p2));  // A3 is not 2-residual
  CHECK(residual_extension_check(entry("S3").group, sub("S3", "A3"), sol));
}

TEST_CASE("sections") {
  CHECK(section(sub("S4", "A4"), sub("S4", "V4"))->order() == 3);
  CHECK_THROWS_AS(section(sub("S3", "S3"), sub("S3", "T12")), InputError);
}
