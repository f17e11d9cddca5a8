#include "rootres/root_class.hpp"

#include <charconv>

#include "rootres/error.hpp"

namespace rootres {

RootClassSpec RootClassSpec::finite_p(unsigned p) {
  if (!is_prime(p)) throw InputError("class p:" + std::to_string(p) + " needs a prime");
  return RootClassSpec(Kind::FiniteP, p);
}

RootClassSpec RootClassSpec::parse(std::string_view text) {
  if (text == "finite") return all_finite();
  if (text == "solvable") return finite_solvable();
  if (text.starts_with("p:")) {
    auto digits = text.substr(2);
    unsigned p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw InputError("bad class spec '" + std::string(text) + "': expected p:<prime>");
    }
    return finite_p(p);
  }
  throw InputError("unknown class spec '" + std::string(text) +
                   "' (expected finite, p:<prime> or solvable)");
}

std::string RootClassSpec::str() const {
  switch (kind_) {
    case Kind::AllFinite:
      return "finite";
    case Kind::FiniteP:
      return "p:" + std::to_string(prime_);
    case Kind::FiniteSolvable:
      return "solvable";
  }
  return {};
}

bool member(const GroupPtr& g, const RootClassSpec& k) {
  switch (k.kind()) {
    case RootClassSpec::Kind::AllFinite:
      return true;
    case RootClassSpec::Kind::FiniteP:
      return is_power_of(g->order(), k.prime());
    case RootClassSpec::Kind::FiniteSolvable:
      return is_solvable(whole_group(g));
  }
  return false;
}

bool quotient_in_class(const GroupPtr& g, const Subgroup& n, const RootClassSpec& k) {
  return member(quotient(g, n).group, k);
}

std::vector<Subgroup> class_kernels(const GroupPtr& g, const RootClassSpec& k) {
  std::vector<Subgroup> out;
  for (auto& n : normal_subgroups(g)) {
    if (quotient_in_class(g, n, k)) out.push_back(std::move(n));
  }
  return out;
}

ResidualCore residual_core(const GroupPtr& g, const RootClassSpec& k) {
  Subgroup core = whole_group(g);
  for (const auto& n : class_kernels(g, k)) core = intersect(core, n);
  return {g, k, std::move(core)};
}

GroupPtr section(const Subgroup& b, const Subgroup& c) {
  if (!is_normal_in(c, b)) throw InputError("section: subgroup is not normal in the larger one");
  auto bg = as_group(b);
  return quotient(bg, rehome(bg, c)).group;
}

Subgroup axiom3_witness(const GroupPtr& a, const Subgroup& b, const Subgroup& c,
                        const RootClassSpec& k) {
  if (b.parent() != a || c.parent() != a) throw InputError("axiom3_witness: subgroups must lie in A");
  if (!is_normal(b)) throw InputError("axiom3_witness: B is not normal in A");
  if (!is_normal_in(c, b)) throw InputError("axiom3_witness: C is not normal in B");
  if (!quotient_in_class(a, b, k)) throw InputError("axiom3_witness: A/B is not in " + k.str());
  if (!member(section(b, c), k)) throw InputError("axiom3_witness: B/C is not in " + k.str());
  for (const auto& d : normal_subgroups(a)) {
    if (d.is_subset_of(c) && quotient_in_class(a, d, k)) return d;
  }
  throw InternalError("axiom3_witness: no normal D <= C with A/D in " + k.str() +
                      "; the root-class axiom fails on this instance");
}

Prop3Result lemma_prop3_check(const GroupPtr& g, const Subgroup& a, const Subgroup& b,
                              const RootClassSpec& k) {
  if (a.parent() != g || b.parent() != g) throw InputError("lemma_prop3_check: subgroups must lie in G");
  if (!is_normal(a) || !is_normal(b)) throw InputError("lemma_prop3_check: A and B must be normal");
  if (!quotient_in_class(g, a, k) || !quotient_in_class(g, b, k)) {
    throw InputError("lemma_prop3_check: G/A and G/B must lie in " + k.str());
  }
  auto q = quotient(g, intersect(a, b)).group;
  if (!member(q, k)) {
    throw InternalError("G/(A n B) is not in " + k.str() + " although G/A and G/B are");
  }
  return {q, true};
}

bool extension_closure_check(const GroupPtr& g, const std::vector<Subgroup>& chain,
                             const RootClassSpec& k) {
  if (chain.empty()) throw InputError("extension_closure_check: empty chain");
  for (const auto& s : chain) {
    if (s.parent() != g) throw InputError("extension_closure_check: chain leaves G");
  }
  if (!chain.back().is_whole()) throw InputError("extension_closure_check: chain must end at G");
  std::vector<Subgroup> terms;
  if (!chain.front().is_trivial()) terms.push_back(trivial_subgroup(g));
  terms.insert(terms.end(), chain.begin(), chain.end());
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!is_normal_in(terms[i - 1], terms[i])) {
      throw InputError("extension_closure_check: term " + std::to_string(i - 1) +
                       " is not normal in the next");
    }
    if (!member(section(terms[i], terms[i - 1]), k)) {
      throw InputError("extension_closure_check: factor " + std::to_string(i) + " is not in " +
                       k.str());
    }
  }
  if (!member(g, k)) {
    throw InternalError("group with a subnormal series of " + k.str() + " factors is outside " +
                        k.str());
  }
  return true;
}

bool residual_extension_check(const GroupPtr& g, const Subgroup& f, const RootClassSpec& k) {
  if (f.parent() != g) throw InputError("residual_extension_check: F must lie in G");
  if (!is_normal(f) || !quotient_in_class(g, f, k)) return false;
  if (!residual_core(as_group(f), k).residual()) return false;
  if (!residual_core(g, k).residual()) {
    throw InternalError("G is not " + k.str() + "-residual although F is and G/F is in the class");
  }
  return true;
}

}  // namespace rootres
