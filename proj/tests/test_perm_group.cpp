#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rootres/catalog.hpp"
#include "rootres/error.hpp"
#include "rootres/perm_group.hpp"

using namespace rootres;

namespace {

Perm cyc(std::string_view s, std::size_t n) { return Perm::from_cycles(s, n); }

GroupPtr group(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<Perm> ps;
  for (const auto* g : gens) ps.push_back(cyc(g, n));
  return generate(n, std::span<const Perm>(ps));
}

const CatalogEntry& entry(std::string_view name) { return *find_catalog(name); }

oracle::PermSet as_set(const Subgroup& s) {
  const auto v = s.element_perms();
  return {v.begin(), v.end()};
}

oracle::PermSet as_set(const GroupPtr& g) { return {g->elements().begin(), g->elements().end()}; }

}  // namespace

TEST_CASE("generation") {
  CHECK(group(3, {"(1 2)", "(1 3)"})->order() == 6);
  CHECK(group(3, {})->order() == 1);
  CHECK(group(4, {"(1 2 3 4)"})->order() == 4);
  CHECK(group(5, {"(1 2 3 4 5)", "(1 2)"})->order() == 120);
  const auto g = group(3, {"(1 2)", "(1 2 3)"});
  CHECK(g->element(PermGroup::kIdentity).is_identity());
  CHECK(std::is_sorted(g->elements().begin(), g->elements().end()));
}

TEST_CASE("generation errors") {
  const std::vector<Perm> mixed{cyc("(1 2)", 3), cyc("(1 2)", 4)};
  CHECK_THROWS_AS(generate(3, std::span<const Perm>(mixed)), InputError);
  const std::vector<Perm> sym{cyc("(1 2 3 4 5 6)", 6), cyc("(1 2)", 6)};
  try {
    generate(6, std::span<const Perm>(sym), 100);
    FAIL("expected the cap to trip");
  } catch (const CapExceeded& e) {
    CHECK(e.partial_count() > 100);
  }
}

TEST_CASE("catalog regenerates to the stated orders") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    CHECK(e.group->order() == e.expected_order);
    for (const auto& [name, s] : e.subgroups) {
      CAPTURE(name);
      CHECK(s.parent() == e.group);
    }
  }
  CHECK(find_catalog("nope") == nullptr);
}

TEST_CASE("normal subgroups: examples") {
  CHECK(normal_subgroups(entry("S3").group).size() == 3);
  CHECK(normal_subgroups(entry("C1").group).size() == 1);
  CHECK(normal_subgroups(entry("C2xC2").group).size() == 5);
  const auto ns = normal_subgroups(entry("S3").group);
  CHECK(ns[0].is_trivial());
  CHECK(ns[1] == *entry("S3").subgroup("A3"));
  CHECK(ns[2].is_whole());
}

TEST_CASE("subgroups and normal subgroups agree with brute force over the catalog") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const auto g = as_set(e.group);
    const auto oracle_subs = oracle::subgroups(g);
    const auto oracle_normals = oracle::normal_subgroups(g);
    std::set<oracle::PermSet> subs, normals;
    const auto all = all_subgroups(e.group);
    for (const auto& s : all) subs.insert(as_set(s));
    const auto ns = normal_subgroups(e.group);
    for (const auto& n : ns) {
      normals.insert(as_set(n));
      for (auto gi : e.group->generator_indices()) {
        for (auto x : n.elements()) CHECK(n.contains(e.group->conj(x, gi)));
      }
    }
    CHECK(subs == oracle_subs);
    CHECK(all.size() == oracle_subs.size());
    CHECK(normals == oracle_normals);
    CHECK(ns.size() == oracle_normals.size());
    CHECK(std::is_sorted(ns.begin(), ns.end(), canonical_less));
    CHECK(std::is_sorted(all.begin(), all.end(), canonical_less));
  }
}

TEST_CASE("canonical generators are reproduced from any generating set") {
  const auto& s4 = entry("S4");
  for (const auto& s : all_subgroups(s4.group)) {
    const auto gens = s.generator_perms();
    CHECK(subgroup_from_perms(s4.group, gens) == s);
    CHECK(subgroup_from_perms(s4.group, s.element_perms()).generator_perms() == gens);
  }
}

TEST_CASE("quotients") {
  const auto& s3 = entry("S3");
  const auto q = quotient(s3.group, *s3.subgroup("A3"));
  CHECK(q.group->order() == 2);
  CHECK(q.projection.kernel() == *s3.subgroup("A3"));
  CHECK(quotient(s3.group, trivial_subgroup(s3.group)).group->order() == 6);
  CHECK(quotient(s3.group, whole_group(s3.group)).group->order() == 1);
  CHECK_THROWS_AS(quotient(s3.group, *s3.subgroup("T12")), InputError);
  for (const auto& e : catalog()) {
    for (const auto& n : normal_subgroups(e.group)) {
      const auto qq = quotient(e.group, n);
      CHECK(qq.group->order() * n.order() == e.group->order());
      CHECK(qq.projection.kernel() == n);
    }
  }
}

TEST_CASE("intersections") {
  const auto& s3 = entry("S3");
  const auto& a3 = *s3.subgroup("A3");
  CHECK(intersect(a3, *s3.subgroup("T12")).is_trivial());
  CHECK(intersect(a3, a3) == a3);
  CHECK(intersect(a3, whole_group(s3.group)) == a3);
  CHECK_THROWS_AS(intersect(a3, *entry("S4").subgroup("A4")), InputError);
}

TEST_CASE("classification") {
  const auto s3 = classify(entry("S3").group);
  CHECK(s3.order == 6);
  CHECK(!s3.is_p_group(2));
  CHECK(!s3.is_p_group(3));
  CHECK(s3.solvable);
  const auto d4 = classify(entry("D4").group);
  CHECK(d4.is_p_group(2));
  CHECK(d4.solvable);
  const auto one = classify(entry("C1").group);
  CHECK(one.is_p_group(2));
  CHECK(one.is_p_group(7));
  CHECK(one.solvable);
  CHECK(!classify(group(5, {"(1 2 3)", "(3 4 5)"})).solvable);  // A5
}

TEST_CASE("homomorphisms") {
  const auto& s3 = entry("S3");
  const auto c2 = entry("C2").group;
  const auto flip = c2->element(1);
  // catalog S3: a = (1 2), b = (1 2 3)
  auto sign = make_hom(s3.group, c2, {flip, Perm::identity(2)});
  CHECK(sign.kernel() == *s3.subgroup("A3"));
  auto id = make_hom(s3.group, s3.group, {cyc("(1 2)", 3), cyc("(1 2 3)", 3)});
  CHECK(id.is_injective());
  CHECK(id.image().is_whole());

  const auto c4 = entry("C4").group;
  auto onto = try_make_hom(c4, c2, {flip});
  REQUIRE(onto);
  CHECK(onto->kernel().order() == 2);
  CHECK(!try_make_hom(c2, c4, {cyc("(1 2 3 4)", 4)}));
  CHECK_THROWS_AS(make_hom(c2, c4, {cyc("(1 2 3 4)", 4)}), InputError);

  std::mt19937 rng(3);
  const auto& g = s3.group;
  for (int i = 0; i < 100; ++i) {
    const auto x = g->element(rng() % g->order()), y = g->element(rng() % g->order());
    CHECK(sign(x * y) == sign(x) * sign(y));
  }
}

TEST_CASE("direct products") {
  CHECK(direct_product(entry("C2").group, entry("C3").group)->order() == 6);
  CHECK(direct_product(entry("S3").group, entry("C1").group)->order() == 6);
  const auto v = direct_product(entry("C2").group, entry("C2").group);
  CHECK(v->order() == 4);
  for (const auto& x : v->elements()) CHECK((x * x).is_identity());
  CHECK(v->generator_by_name("a_2").has_value());
}

TEST_CASE("transversals") {
  const auto& s3 = entry("S3");
  const auto reps = transversal(*s3.subgroup("A3"));
  CHECK(reps == std::vector<Perm>{Perm::identity(3), cyc("(2 3)", 3)});
  CHECK(transversal(whole_group(s3.group)) == std::vector<Perm>{Perm::identity(3)});
  CHECK(transversal(*s3.subgroup("T12")).size() == 3);
  for (const auto& e : catalog()) {
    for (const auto& h : all_subgroups(e.group)) {
      const auto t = right_transversal(h);
      CHECK(t.representatives.size() * h.order() == e.group->order());
      std::set<Perm> covered;
      for (auto r : t.representatives) {
        for (auto x : h.elements()) covered.insert(e.group->element(x) * e.group->element(r));
        // least element of its coset
        for (auto x : h.elements()) CHECK(e.group->element(r) <= e.group->element(x) * e.group->element(r));
      }
      CHECK(covered.size() == e.group->order());
      for (Index g = 0; g < e.group->order(); ++g) {
        CHECK(e.group->mul(t.subgroup_part[g], t.representatives[t.coset_of[g]]) == g);
      }
    }
  }
}
