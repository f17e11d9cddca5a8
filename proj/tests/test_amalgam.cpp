#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rootres/amalgam.hpp"
#include "rootres/catalog.hpp"
#include "rootres/error.hpp"

using namespace rootres;

namespace {

Perm cyc(std::string_view s, std::size_t n) { return Perm::from_cycles(s, n); }
const CatalogEntry& entry(std::string_view name) { return *find_catalog(name); }

AmalgamScheme power(std::string_view g, std::string_view h, std::size_t copies) {
  const auto& e = entry(g);
  const auto gens = e.subgroup(h)->generator_perms();
  return power_scheme(e.group, gens, copies);
}

Word random_word(std::mt19937& rng, const AmalgamScheme& s, std::size_t max_len) {
  Word w;
  const auto len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    const auto c = rng() % s.copies();
    const auto& g = s.factor(c);
    w.push_back({c, g->element(static_cast<Index>(rng() % g->order()))});
  }
  return w;
}

// Same element, different spelling: split syllables and push subgroup
// elements across boundaries.
Word respell(std::mt19937& rng, const AmalgamScheme& s, Word w) {
  const auto& h = s.amalgamated(0);
  for (int round = 0; round < 4 && !w.empty(); ++round) {
    const auto i = rng() % w.size();
    const auto& g = s.factor(w[i].copy);
    const auto y = g->element(static_cast<Index>(rng() % g->order()));
    const auto hh = g->element(h.elements()[rng() % h.order()]);
    // x = y * (y^-1 x), and h h^-1 inserted after it in another copy
    const auto x = w[i].elt;
    w[i].elt = y;
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, {w[i].copy, y.inverse() * x * hh});
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(i) + 2, {(w[i].copy + 1) % s.copies(), hh.inverse()});
  }
  return w;
}

std::vector<oracle::Letter> letters(const Word& w) {
  std::vector<oracle::Letter> out;
  for (const auto& s : w) out.push_back({s.copy, s.elt});
  return out;
}

oracle::PermSet subgroup_set(const Subgroup& h) {
  const auto v = h.element_perms();
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("power schemes build") {
  const auto q = power("S3", "A3", 2);
  CHECK(q.is_power());
  CHECK(q.copies() == 2);
  const auto p = power("C4", "C2", 3);
  CHECK(p.copies() == 3);
  CHECK(p.transversal(1).representatives.size() == 2);
}

TEST_CASE("incoherent identifications are rejected with a witness") {
  const auto& v = entry("C2xC2");
  const auto gens = whole_group(v.group).generator_perms();
  REQUIRE(gens.size() == 2);
  SchemeInput in;
  in.factors = {v.group, v.group, v.group};
  in.subgroup_generators = {gens, gens, gens};
  in.isos = {{0, 1, gens}, {1, 2, gens}, {0, 2, {gens[1], gens[0]}}};
  try {
    build_scheme(in);
    FAIL("expected rejection");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("(") != std::string::npos);
  }
  in.isos = {{0, 1, gens}, {1, 2, gens}, {0, 2, gens}};
  CHECK(build_scheme(in).is_power());  // identical factors, identity identifications
}

TEST_CASE("a non-isomorphic identification is rejected") {
  const auto& c4 = entry("C4");
  SchemeInput in;
  in.factors = {c4.group, c4.group};
  in.subgroup_generators = {{cyc("(1 2 3 4)", 4)}, {cyc("(1 2 3 4)", 4)}};
  in.isos = {{0, 1, {cyc("(1 3)(2 4)", 4)}}};
  CHECK_THROWS_AS(build_scheme(in), InputError);
}

TEST_CASE("reduction examples") {
  const auto q = power("S3", "A3", 2);
  const auto t12 = cyc("(1 2)", 3), t13 = cyc("(1 3)", 3);
  const auto r = cyc("(1 2 3)", 3);
  CHECK(reduce(q, {{0, t12}, {1, t13}}).length() == 2);
  const auto back = reduce(q, {{0, t12}, {0, t12}});
  CHECK(back.length() == 0);
  CHECK(back.head.is_identity());
  const auto hh = reduce(q, {{0, r}, {1, r.inverse()}});
  CHECK(hh.is_identity());
  CHECK_THROWS_AS(reduce(q, {{0, cyc("(1 2)", 4)}}), InputError);
}

TEST_CASE("equality examples") {
  const auto q = power("S3", "A3", 2);
  const auto t12 = cyc("(1 2)", 3), t13 = cyc("(1 3)", 3);
  const Word w{{0, t12}, {1, t13}};
  CHECK(equal(q, w, {{0, t12}, {1, Perm::identity(3)}, {1, t13}}));
  const auto r = cyc("(1 2 3)", 3);
  CHECK(equal(q, {{0, r}}, {{1, r}}));
  CHECK(!equal(q, {{0, t12}}, {{1, t12}}));

  // Amalgamation through a non-identity identification: A3 in S3 with C3
  // in C6.
  const auto c6 = entry("C6").group;
  const auto c6_sq = cyc("(1 3 5)(2 4 6)", 6);
  SchemeInput in;
  in.factors = {entry("S3").group, c6};
  in.subgroup_generators = {{r}, {c6_sq}};
  in.isos = {{0, 1, {c6_sq}}};
  const auto s = build_scheme(in);
  CHECK(equal(s, {{0, r}}, {{1, c6_sq}}));
  CHECK(!equal(s, {{0, r}}, {{1, c6_sq.inverse()}}));
  CHECK(s.transport(0, 1, r) == c6_sq);
  CHECK(reduce(s, {{1, cyc("(1 2 3 4 5 6)", 6)}, {0, t12}}).length() == 2);
}

TEST_CASE("multiplication and inversion") {
  const auto q = power("S3", "A3", 2);
  const auto a = cyc("(1 2)", 3), b = cyc("(2 3)", 3);
  const Word g{{0, a}, {1, b}};
  CHECK(multiply(q, g, {}) == reduce(q, g));
  CHECK(invert(q, g) == reduce(q, {{1, b.inverse()}, {0, a.inverse()}}));
  CHECK(multiply(q, {{0, a}}, {{1, b}}).length() == 2);
  CHECK(multiply(q, g, inverse_word(g)).is_identity());
}

TEST_CASE("copy relabelling") {
  const auto q = power("S3", "A3", 2);
  const Word w{{0, cyc("(1 2)", 3)}, {1, cyc("(1 3)", 3)}};
  const std::vector<std::size_t> swap{1, 0}, keep{0, 1};
  const Word expected{{1, cyc("(1 2)", 3)}, {0, cyc("(1 3)", 3)}};
  CHECK(copy_automorphism(q, swap, w) == expected);
  CHECK(copy_automorphism(q, keep, w) == w);
  CHECK(copy_automorphism(q, swap, copy_automorphism(q, swap, w)) == w);
  const std::vector<std::size_t> bad{0, 0};
  CHECK_THROWS_AS(copy_automorphism(q, bad, w), InputError);
}

TEST_CASE("quotient stage of a power") {
  const auto q = power("S3", "A3", 2);
  const auto& a3 = *entry("S3").subgroup("A3");
  const auto pq = power_quotient(q, a3);
  CHECK(pq.scheme.base()->order() == 2);
  CHECK(pq.scheme.amalgamated(0).is_trivial());
  const Word g{{0, cyc("(1 2)", 3)}, {1, cyc("(1 3)", 3)}};
  CHECK(reduce(pq.scheme, pq.map(g)).length() == 2);

  const auto same = power_quotient(q, trivial_subgroup(entry("S3").group));
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto w = random_word(rng, q, 5);
    CHECK(reduce(same.scheme, same.map(w)).length() == reduce(q, w).length());
  }
  CHECK_THROWS_AS(power_quotient(q, *entry("S3").subgroup("T12")), InputError);
}

TEST_CASE("families of homomorphisms") {
  const auto q = power("S3", "A3", 2);
  const auto c2 = entry("C2").group;
  const auto flip = c2->element(1);
  const auto s3 = entry("S3").group;
  const auto sign = make_hom(s3, c2, {flip, Perm::identity(2)});
  const auto trivial = make_hom(s3, c2, {Perm::identity(2), Perm::identity(2)});
  const std::vector<Homomorphism> both{sign, sign};
  CHECK_NOTHROW(check_family(q, both));
  CHECK(eval_hom_family(q, both, {{0, cyc("(1 2)", 3)}, {1, cyc("(1 3)", 3)}}).is_identity());
  const std::vector<Homomorphism> mixed{sign, trivial};
  CHECK_NOTHROW(check_family(q, mixed));
  CHECK(eval_hom_family(q, mixed, {{0, cyc("(1 2)", 3)}}) == flip);
  CHECK(eval_hom_family(q, mixed, {{1, cyc("(1 2)", 3)}}).is_identity());

  const auto t = power("S3", "T12", 2);
  CHECK_THROWS_AS(check_family(t, mixed), InputError);  // (1 2) is in H but sign(1 2) != 1
}

TEST_CASE("normal forms agree with the rewriting oracle on random words") {
  std::mt19937 rng(2024);
  for (const auto& [g, h, copies] : {std::tuple{"S3", "A3", 2}, std::tuple{"C4", "C2", 3},
                                     std::tuple{"S4", "D4", 2}, std::tuple{"Q8", "Z", 2},
                                     std::tuple{"D4", "V1", 3}, std::tuple{"S3", "1", 2}}) {
    const auto s = power(g, h, static_cast<std::size_t>(copies));
    const auto hs = subgroup_set(s.amalgamated(0));
    const auto deg = s.base()->degree();
    for (int i = 0; i < 200; ++i) {
      CAPTURE(g);
      const auto w = random_word(rng, s, 6);
      const auto nf = reduce(s, w);
      CHECK(reduce(s, nf.to_word()) == nf);
      CHECK(s.amalgamated(0).contains(nf.head));
      for (std::size_t k = 0; k < nf.tail.size(); ++k) {
        CHECK(!nf.tail[k].elt.is_identity());
        if (k) CHECK(nf.tail[k].copy != nf.tail[k - 1].copy);
      }
      CHECK(nf.length() == oracle::rewrite(hs, letters(w), deg).tail.size());
      const auto v = respell(rng, s, w);
      CHECK(equal(s, w, v));
      CHECK(oracle::words_equal(hs, letters(w), letters(v), deg));
      const auto u = random_word(rng, s, 3);
      CHECK(equal(s, w, u) == oracle::words_equal(hs, letters(w), letters(u), deg));
      CHECK(multiply(s, w, u) == reduce(s, [&] {
              Word c = w;
              c.insert(c.end(), u.begin(), u.end());
              return c;
            }()));
    }
  }
}
