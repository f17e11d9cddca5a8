#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rootres/perm_group.hpp"

namespace rootres {

// One of the decidable root classes on finite groups.
class RootClassSpec {
 public:
  enum class Kind { AllFinite, FiniteP, FiniteSolvable };

  static RootClassSpec all_finite() { return RootClassSpec(Kind::AllFinite, 0); }
  static RootClassSpec finite_solvable() { return RootClassSpec(Kind::FiniteSolvable, 0); }
  // Throws InputError when p is not prime.
  static RootClassSpec finite_p(unsigned p);
  // "finite", "p:<prime>" or "solvable".
  static RootClassSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  unsigned prime() const noexcept { return prime_; }
  std::string str() const;

  friend bool operator==(const RootClassSpec&, const RootClassSpec&) = default;

 private:
  RootClassSpec(Kind k, unsigned p) : kind_(k), prime_(p) {}

  Kind kind_;
  unsigned prime_;
};

bool member(const GroupPtr& g, const RootClassSpec& k);
// Membership of g/n, computed on the actual quotient group.
bool quotient_in_class(const GroupPtr& g, const Subgroup& n, const RootClassSpec& k);

// The normal subgroups of g whose quotient lies in k, in canonical order.
std::vector<Subgroup> class_kernels(const GroupPtr& g, const RootClassSpec& k);

struct ResidualCore {
  GroupPtr group;
  RootClassSpec cls;
  Subgroup core;

  bool residual() const { return core.is_trivial(); }
};

// Intersection of every normal N with g/N in k. g is k-residual exactly
// when the core is trivial.
ResidualCore residual_core(const GroupPtr& g, const RootClassSpec& k);

// Root-class condition 3: for C normal in B normal in A with A/B and B/C in
// k, the first D normal in A (canonical order) with D <= C and A/D in k.
// b and c are subgroups of a. Throws InputError on unmet preconditions and
// InternalError if the search is exhausted.
Subgroup axiom3_witness(const GroupPtr& a, const Subgroup& b, const Subgroup& c,
                        const RootClassSpec& k);

struct Prop3Result {
  GroupPtr quotient;
  bool holds = false;
};

// G/(A n B) is in k whenever A, B are normal with G/A, G/B in k.
// Throws InputError on unmet preconditions, InternalError if it fails.
Prop3Result lemma_prop3_check(const GroupPtr& g, const Subgroup& a, const Subgroup& b,
                              const RootClassSpec& k);

// `chain` ascends through subgroups of g, each normal in the next, and ends
// at g itself; an implicit trivial subgroup sits below the first term. With
// every factor in k, g is in k. Throws InputError if the chain is not
// subnormal or a factor lies outside k, InternalError if g is not in k.
bool extension_closure_check(const GroupPtr& g, const std::vector<Subgroup>& chain,
                             const RootClassSpec& k);

// Finite form of the extension property for residuality: F normal in G,
// G/F in k, F k-residual => G k-residual. Returns whether the hypotheses
// hold; throws InternalError if they do and the conclusion fails.
bool residual_extension_check(const GroupPtr& g, const Subgroup& f, const RootClassSpec& k);

// Factor group b/c for c normal in b, both subgroups of one parent.
GroupPtr section(const Subgroup& b, const Subgroup& c);

}  // namespace rootres
