#include "rootres/catalog.hpp"

#include <array>

#include "rootres/error.hpp"

namespace rootres {

namespace {

std::vector<NamedPerm> to_named(const std::vector<std::pair<std::string, std::string>>& gens,
                                std::size_t degree) {
  std::vector<NamedPerm> named;
  for (const auto& [n, cycles] : gens) named.push_back({n, Perm::from_cycles(cycles, degree)});
  return named;
}

struct Builder {
  CatalogEntry entry;

  Builder(std::string name, std::size_t order, std::size_t degree,
          std::vector<std::pair<std::string, std::string>> gens)
      : Builder(std::move(name), order, degree, to_named(gens, degree)) {}

  Builder(std::string name, std::size_t order, std::size_t degree, std::vector<NamedPerm> gens) {
    entry.name = std::move(name);
    entry.expected_order = order;
    entry.group = generate(degree, std::move(gens));
    if (entry.group->order() != order) {
      throw InternalError("catalog group " + entry.name + " has order " +
                          std::to_string(entry.group->order()));
    }
    entry.subgroups.emplace_back("1", trivial_subgroup(entry.group));
    entry.subgroups.emplace_back(entry.name, whole_group(entry.group));
  }

  Builder& sub(std::string name, std::initializer_list<const char*> cycles) {
    std::vector<Perm> gens;
    for (const char* c : cycles) gens.push_back(Perm::from_cycles(c, entry.group->degree()));
    entry.subgroups.emplace_back(std::move(name), subgroup_from_perms(entry.group, gens));
    return *this;
  }
};

std::string cycle_of(std::size_t n) {
  std::string s = "(";
  for (std::size_t i = 1; i <= n; ++i) {
    if (i > 1) s += ' ';
    s += std::to_string(i);
  }
  return s + ")";
}

CatalogEntry cyclic(std::size_t n) {
  std::vector<std::pair<std::string, std::string>> gens;
  if (n > 1) gens.emplace_back("a", cycle_of(n));
  Builder b("C" + std::to_string(n), n, n, gens);
  if (n > 1) {
    const Perm a = Perm::from_cycles(cycle_of(n), n);
    for (std::size_t d = 2; d < n; ++d) {
      if (n % d != 0) continue;
      const Perm gen = a.pow(static_cast<long long>(n / d));
      std::vector<Perm> gens{gen};
      b.entry.subgroups.emplace_back("C" + std::to_string(d),
                                     subgroup_from_perms(b.entry.group, gens));
    }
  }
  return std::move(b.entry);
}

// Right regular representation of the quaternion group on 8 points:
// point 4*s + u + 1 stands for (-1)^s * unit[u], units 1, i, j, k.
CatalogEntry quaternion() {
  // unit[a] * unit[b] = sign * unit[c]
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> table{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  auto right_mul = [](int unit) {
    std::vector<std::int64_t> img(8);
    for (int s = 0; s < 2; ++s) {
      for (int u = 0; u < 4; ++u) {
        auto [sign, v] = table[u][unit];
        img[4 * s + u] = 4 * ((s + sign) % 2) + v + 1;
      }
    }
    return Perm::from_one_based(img);
  };
  Builder b("Q8", 8, 8, std::vector<NamedPerm>{{"i", right_mul(1)}, {"j", right_mul(2)}});
  const Perm i = right_mul(1), j = right_mul(2), k = right_mul(3);
  for (auto [name, p] : {std::pair{"Z", i * i}, {"I", i}, {"J", j}, {"K", k}}) {
    std::vector<Perm> g{p};
    b.entry.subgroups.emplace_back(name, subgroup_from_perms(b.entry.group, g));
  }
  return std::move(b.entry);
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  for (std::size_t n = 1; n <= 12; ++n) out.push_back(cyclic(n));

  out.push_back(Builder("C2xC2", 4, 4, {{"a", "(1 2)"}, {"b", "(3 4)"}})
                    .sub("A", {"(1 2)"})
                    .sub("B", {"(3 4)"})
                    .sub("D", {"(1 2)(3 4)"})
                    .entry);
  out.push_back(Builder("C2xC2xC2", 8, 6, {{"a", "(1 2)"}, {"b", "(3 4)"}, {"c", "(5 6)"}})
                    .sub("A", {"(1 2)"})
                    .sub("AB", {"(1 2)", "(3 4)"})
                    .sub("D", {"(1 2)(3 4)(5 6)"})
                    .entry);
  out.push_back(Builder("C4xC2", 8, 6, {{"a", "(1 2 3 4)"}, {"b", "(5 6)"}})
                    .sub("C4", {"(1 2 3 4)"})
                    .sub("C2", {"(1 3)(2 4)"})
                    .sub("B", {"(5 6)"})
                    .sub("V", {"(1 3)(2 4)", "(5 6)"})
                    .entry);
  out.push_back(Builder("S3", 6, 3, {{"a", "(1 2)"}, {"b", "(1 2 3)"}})
                    .sub("A3", {"(1 2 3)"})
                    .sub("T12", {"(1 2)"})
                    .sub("T13", {"(1 3)"})
                    .sub("T23", {"(2 3)"})
                    .entry);
  out.push_back(Builder("S4", 24, 4, {{"a", "(1 2)"}, {"b", "(1 2 3 4)"}})
                    .sub("A4", {"(1 2 3)", "(2 3 4)"})
                    .sub("V4", {"(1 2)(3 4)", "(1 3)(2 4)"})
                    .sub("D4", {"(1 2 3 4)", "(1 3)"})
                    .sub("S3", {"(1 2)", "(1 2 3)"})
                    .sub("C4", {"(1 2 3 4)"})
                    .sub("C3", {"(1 2 3)"})
                    .entry);
  out.push_back(Builder("A4", 12, 4, {{"a", "(1 2 3)"}, {"b", "(1 2)(3 4)"}})
                    .sub("V4", {"(1 2)(3 4)", "(1 3)(2 4)"})
                    .sub("C3", {"(1 2 3)"})
                    .sub("C2", {"(1 2)(3 4)"})
                    .entry);
  out.push_back(Builder("D4", 8, 4, {{"a", "(1 2 3 4)"}, {"b", "(2 4)"}})
                    .sub("Z", {"(1 3)(2 4)"})
                    .sub("C4", {"(1 2 3 4)"})
                    .sub("C2", {"(1 3)(2 4)"})
                    .sub("R", {"(2 4)"})
                    .sub("V1", {"(2 4)", "(1 3)"})
                    .sub("V2", {"(1 2)(3 4)", "(1 4)(2 3)"})
                    .entry);
  out.push_back(Builder("D6", 12, 6, {{"a", "(1 2 3 4 5 6)"}, {"b", "(2 6)(3 5)"}})
                    .sub("C6", {"(1 2 3 4 5 6)"})
                    .sub("C3", {"(1 3 5)(2 4 6)"})
                    .sub("Z", {"(1 4)(2 5)(3 6)"})
                    .sub("R", {"(2 6)(3 5)"})
                    .entry);
  out.push_back(quaternion());
  return out;
}

}  // namespace

const Subgroup* CatalogEntry::subgroup(std::string_view n) const {
  for (const auto& [name, s] : subgroups) {
    if (name == n) return &s;
  }
  return nullptr;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_catalog(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace rootres
