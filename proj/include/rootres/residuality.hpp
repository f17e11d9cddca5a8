#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rootres/amalgam.hpp"
#include "rootres/certificate.hpp"
#include "rootres/magnus.hpp"
#include "rootres/root_class.hpp"

namespace rootres {

// Decision of k-closedness of h in a: for every a outside h, the first
// normal N (canonical order) with A/N in k and a outside HN.
struct ClosednessReport {
  GroupPtr group;
  Subgroup subgroup;
  RootClassSpec cls = RootClassSpec::all_finite();
  bool closed = false;
  // (element, witness) for every element outside the subgroup, ascending,
  // when closed.
  std::vector<std::pair<Index, Subgroup>> witnesses;
  // Least element with no witness, when not closed.
  std::optional<Index> failing_element;

  nlohmann::json to_json() const;
};

// First entry of `kernels` whose product with h misses a.
std::optional<Subgroup> closedness_witness(const Subgroup& h, Index a,
                                           std::span<const Subgroup> kernels);

// Throws InputError unless h is a subgroup of a.
ClosednessReport is_k_closed(const GroupPtr& a, const Subgroup& h, const RootClassSpec& k);

// A closedness_witness certificate for element `a` of a closed report.
SeparationCertificate closedness_certificate(const ClosednessReport& report, Index a);

// Separates a non-trivial g of a generalized free power P = A *_H ... *_H A
// through P -> P_N = A/N *_{HN/N} ... *_{HN/N} A/N with A/N in k.
// Reduced length >= 2: N is the intersection of per-syllable closedness
// witnesses and the image keeps its length. Otherwise g is conjugate into A
// and N is any class kernel missing it.
// Throws InputError for a trivial word or non-power scheme, and
// HypothesisFailure when a needed witness does not exist.
SeparationCertificate separate_in_power(const AmalgamScheme& scheme, const Word& g,
                                        const RootClassSpec& k);

// Separates a freely non-trivial word in the unit group of a truncated
// series ring. The modulus defaults from the class: p for p:<p>, 2 for
// finite and solvable; modulus 0 (integer coefficients) needs "solvable".
SeparationCertificate separate_free_word_certificate(const FreeWord& w, const RootClassSpec& k,
                                                     std::optional<std::uint32_t> modulus,
                                                     std::size_t max_degree,
                                                     const SeriesLimits& limits = {});

// From a pair (alpha, beta): A -> X agreeing on h and separating a from
// its copy, the kernel of x -> (alpha(x), beta(x)), which is a closedness
// witness at a. Throws InputError on unmet preconditions.
Subgroup derive_closedness_witness(const GroupPtr& a, const Subgroup& h, const Perm& elt,
                                   const Homomorphism& alpha, const Homomorphism& beta,
                                   const RootClassSpec& k);

// Hypotheses of the residuality criterion for an amalgam: the family
// induces a map into a class member that is injective on H, and every
// factor is residual.
struct AmalgamHypotheses {
  bool target_in_class = false;
  bool family_agrees = false;
  bool injective_on_h = false;
  std::vector<bool> factor_residual;
  std::vector<std::string> failures;

  bool holds() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

// Throws InputError for a malformed family (wrong count or mismatched
// sources and targets).
AmalgamHypotheses check_residuality_hypotheses(const AmalgamScheme& scheme,
                                               std::span<const Homomorphism> homs,
                                               const RootClassSpec& k);

}  // namespace rootres
