#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rootres/perm_group.hpp"

namespace rootres {

// One letter of a word in an amalgam: an element of factor `copy`.
struct Syllable {
  std::size_t copy = 0;
  Perm elt;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

using Word = std::vector<Syllable>;

// g = head * t_1 * ... * t_s. The head lies in the amalgamated subgroup as
// seen in factor 0; every t_i is a non-identity canonical right-coset
// representative of H in its factor, with adjacent copies distinct.
struct NormalForm {
  Perm head;
  std::vector<Syllable> tail;

  std::size_t length() const noexcept { return tail.size(); }
  bool is_identity() const { return tail.empty() && head.is_identity(); }
  // The form as a word: (0, head) when the head is non-trivial, then the tail.
  Word to_word() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// An isomorphism phi_{from,to}: H_from -> H_to, given by the images of the
// listed subgroup generators of factor `from`.
struct IsoSpec {
  std::size_t from = 0;
  std::size_t to = 0;
  std::vector<Perm> images;
};

struct SchemeInput {
  std::vector<GroupPtr> factors;
  std::vector<std::vector<Perm>> subgroup_generators;
  // Missing (l, l) entries default to the identity and a missing (m, l) is
  // the inverse of a given (l, m); every other pair must be present.
  std::vector<IsoSpec> isos;
};

// A generalized free product of finitely many finite factors amalgamating
// one common subgroup through coherent isomorphisms. Immutable.
class AmalgamScheme {
 public:
  std::size_t copies() const noexcept { return factors_.size(); }
  const GroupPtr& factor(std::size_t l) const { return factors_.at(l); }
  const Subgroup& amalgamated(std::size_t l) const { return subgroups_.at(l); }
  const RightTransversal& transversal(std::size_t l) const { return transversals_.at(l); }
  bool is_power() const noexcept { return is_power_; }
  // The common factor of a power scheme. Throws InputError otherwise.
  const GroupPtr& base() const;

  // phi_{from,to} on an element index of H_from; returns an index in
  // factor `to`.
  Index transport(std::size_t from, std::size_t to, Index h) const;
  Perm transport(std::size_t from, std::size_t to, const Perm& h) const;

  friend AmalgamScheme build_scheme(const SchemeInput& input);

 private:
  std::vector<GroupPtr> factors_;
  std::vector<Subgroup> subgroups_;
  std::vector<RightTransversal> transversals_;
  // iso_[l][m][i]: image in factor m of element i of factor l (i in H_l).
  std::vector<std::vector<std::vector<Index>>> iso_;
  bool is_power_ = false;
};

// Validates the coherence conditions phi_ll = id, phi_lm^-1 = phi_ml and
// phi_lm phi_mn = phi_ln, reporting the failing triple and element.
// Throws InputError.
AmalgamScheme build_scheme(const SchemeInput& input);
// `copies` identical copies of a over h with identity identifications.
AmalgamScheme power_scheme(const GroupPtr& a, std::span<const Perm> h_generators,
                           std::size_t copies);

// Throws InputError on a syllable outside its factor.
NormalForm reduce(const AmalgamScheme& s, const Word& w);
bool equal(const AmalgamScheme& s, const Word& a, const Word& b);
NormalForm multiply(const AmalgamScheme& s, const Word& a, const Word& b);
NormalForm invert(const AmalgamScheme& s, const Word& w);
Word inverse_word(const Word& w);

// Relabels copies by `perm` (a permutation of 0..copies-1). Needs a power
// scheme.
Word copy_automorphism(const AmalgamScheme& s, std::span<const std::size_t> perm, const Word& w);

// The power scheme over A/N amalgamating HN/N, together with the map
// induced by A -> A/N on every copy.
struct PowerQuotient {
  AmalgamScheme scheme;
  Subgroup kernel;
  Homomorphism projection;

  Word map(const Word& w) const;
};

// Needs a power scheme; throws InputError unless n is normal in the base.
PowerQuotient power_quotient(const AmalgamScheme& s, const Subgroup& n);

// Throws InputError (with the witness) unless homs[l](h) ==
// homs[m](phi_lm(h)) for every l, m and h in H_l, all into one target.
void check_family(const AmalgamScheme& s, std::span<const Homomorphism> homs);
// The induced homomorphism out of the amalgam, evaluated on w.
Perm eval_hom_family(const AmalgamScheme& s, std::span<const Homomorphism> homs, const Word& w);

}  // namespace rootres
