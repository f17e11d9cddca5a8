#include <doctest.h>

#include "rootres/catalog.hpp"
#include "rootres/error.hpp"
#include "rootres/residuality.hpp"

using namespace rootres;
using nlohmann::json;

namespace {

Perm cyc(std::string_view s, std::size_t n) { return Perm::from_cycles(s, n); }
const CatalogEntry& entry(std::string_view name) { return *find_catalog(name); }
const RootClassSpec p2 = RootClassSpec::finite_p(2);

SeparationCertificate s3_certificate() {
  const auto& s3 = entry("S3");
  const auto q = power_scheme(s3.group, s3.subgroup("A3")->generator_perms(), 2);
  return separate_in_power(q, {{0, cyc("(1 2)", 3)}, {1, cyc("(1 3)", 3)}}, p2);
}

json perm_json(std::string_view s, std::size_t n) { return Perm::from_cycles(s, n).one_based(); }

}  // namespace

TEST_CASE("serialization is stable and round trips") {
  const auto c = s3_certificate();
  const auto text = c.serialize();
  CHECK(text.back() == '\n');
  CHECK(text == s3_certificate().serialize());
  const auto back = SeparationCertificate::from_json(json::parse(text));
  CHECK(back.serialize() == text);
  CHECK(json::parse(text)["format_version"] == 1);
  CHECK(verify_certificate(std::string_view(text)));
}

TEST_CASE("replacing the kernel by the whole group is rejected") {
  auto j = s3_certificate().to_json();
  j["data"]["kernel_generators"] = json::array({perm_json("(1 2)", 3), perm_json("(1 2 3)", 3)});
  const auto r = check_certificate(j);
  CHECK(!r.accepted);
  CHECK(!r.failures.empty());
}

TEST_CASE("a wrong coefficient is rejected") {
  const auto c = separate_free_word_certificate(FreeWord::parse("x1^-1 x2^-1 x1 x2"), RootClassSpec::finite_solvable(),
                                                0u, 8);
  auto j = c.to_json();
  CHECK(verify_certificate(j));
  j["data"]["coefficient"] = 2;
  CHECK(!verify_certificate(j));
}

TEST_CASE("a coefficient outside the residue range is rejected") {
  auto j = separate_free_word_certificate(FreeWord::parse("x1 x2"), RootClassSpec::finite_p(3), std::nullopt, 8)
               .to_json();
  CHECK(verify_certificate(j));
  j["data"]["coefficient"] = 4;  // 1 + 3
  CHECK(!verify_certificate(j));
}

TEST_CASE("a non-minimal degree is rejected") {
  auto j = separate_free_word_certificate(FreeWord::parse("x1^2"), p2, std::nullopt, 8).to_json();
  CHECK(verify_certificate(j));
  // x1^2 = 1 + 2 t1 + t1^2 over the integers: degree 1 already separates
  j["data"]["modulus"] = 0;
  j["class"] = "solvable";
  CHECK(!verify_certificate(j));
}

TEST_CASE("closedness certificates") {
  const auto s3 = entry("S3").group;
  const auto r = is_k_closed(s3, *entry("S3").subgroup("A3"), p2);
  const auto c = closedness_certificate(r, s3->index_of(cyc("(1 2)", 3)));
  CHECK(verify_certificate(c.to_json()));
  auto j = c.to_json();
  j["data"]["element"] = perm_json("(1 2 3)", 3);
  CHECK(!verify_certificate(j));
  CHECK_THROWS_AS(closedness_certificate(r, 0), InputError);
}

TEST_CASE("a kernel that is valid but not the least witness is rejected") {
  // D4 over its centre, p:2: the least witness for every syllable is 1.
  const auto& d4 = entry("D4");
  const auto q = power_scheme(d4.group, d4.subgroup("Z")->generator_perms(), 2);
  auto j = separate_in_power(q, {{0, cyc("(2 4)", 4)}, {1, cyc("(2 4)", 4)}}, p2).to_json();
  CHECK(verify_certificate(j));
  // the centre is also a witness at (2 4), just not the least one
  j["data"]["kernel_generators"] = json::array({perm_json("(1 3)(2 4)", 4)});
  j["data"]["syllable_kernels"] = json::array({j["data"]["kernel_generators"], j["data"]["kernel_generators"]});
  const auto r = check_certificate(j);
  CHECK(!r.accepted);
  bool least = false;
  for (const auto& f : r.failures) least = least || f.find("least witness") != std::string::npos;
  CHECK(least);
}

TEST_CASE("malformed payloads are distinguished from failed checks") {
  auto j = s3_certificate().to_json();
  CHECK_THROWS_AS(verify_certificate(std::string_view("{\"format_version\": 1, ")), MalformedCertificate);
  auto k = j;
  k.erase("claims");
  CHECK_THROWS_AS(verify_certificate(k), MalformedCertificate);
  k = j;
  k["kind"] = "magic";
  CHECK_THROWS_AS(verify_certificate(k), MalformedCertificate);
  k = j;
  k["format_version"] = 2;
  CHECK_THROWS_AS(verify_certificate(k), MalformedCertificate);
  k = j;
  k["data"]["extra"] = 1;
  CHECK_THROWS_AS(verify_certificate(k), MalformedCertificate);
  k = j;
  k["data"]["kernel_generators"] = json::array({json::array({1, 1, 2})});
  CHECK_THROWS_AS(verify_certificate(k), MalformedCertificate);
  k = j;
  k["class"] = "p:6";
  CHECK_THROWS_AS(verify_certificate(k), MalformedCertificate);
}

TEST_CASE("claims are re-derived") {
  auto j = s3_certificate().to_json();
  for (const char* field : {"quotient_in_class", "image_nontrivial", "kernel_normal"}) {
    auto k = j;
    k["claims"][field] = false;
    CHECK(!verify_certificate(k));
  }
  auto k = j;
  k["claims"]["image_length"] = 1;
  CHECK(!verify_certificate(k));
  k = j;
  k["claims"]["note"] = "anything";
  CHECK(!verify_certificate(k));
  k = j;
  k["class"] = "p:3";
  CHECK(!verify_certificate(k));
}
