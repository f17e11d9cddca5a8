#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rootres/perm.hpp"

namespace rootres {

// Position of an element in its group's canonical element list.
using Index = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 10000;

// Process-wide default for the group-order cap; readers and writers may
// race freely.
std::size_t default_order_cap() noexcept;
void set_default_order_cap(std::size_t cap) noexcept;

struct NamedPerm {
  std::string name;
  Perm perm;
};

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

// A finite permutation group with its full element list. Elements are kept
// sorted in the canonical (lexicographic) order, so index 0 is always the
// identity. Immutable once built.
class PermGroup {
  struct Token {};

 public:
  static constexpr Index kIdentity = 0;

  PermGroup(Token, std::size_t degree, std::vector<NamedPerm> generators,
            std::vector<Perm> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  const Perm& element(Index i) const { return elements_.at(i); }

  std::optional<Index> find(const Perm& p) const;
  bool contains(const Perm& p) const { return find(p).has_value(); }
  // Throws InputError when `p` is not an element.
  Index index_of(const Perm& p) const;

  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[a]; }
  Index conj(Index x, Index by) const { return mul(mul(inv(by), x), by); }

  const std::vector<NamedPerm>& generators() const noexcept { return generators_; }
  const std::vector<Index>& generator_indices() const noexcept { return generator_indices_; }
  std::optional<std::size_t> generator_by_name(std::string_view name) const;

  friend GroupPtr generate(std::size_t degree, std::vector<NamedPerm> gens, std::size_t cap);

 private:
  std::size_t degree_;
  std::vector<NamedPerm> generators_;
  std::vector<Index> generator_indices_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, Index, PermHash> lookup_;
  std::vector<Index> inverse_;
  // Full Cayley table, only for small orders.
  std::vector<Index> table_;
};

// Closure of `gens` under composition. Throws InputError on a degree
// mismatch and CapExceeded (with the partial count) past `cap`.
GroupPtr generate(std::size_t degree, std::vector<NamedPerm> gens,
                  std::size_t cap = default_order_cap());
// Same, naming the generators g1, g2, ...
GroupPtr generate(std::size_t degree, std::span<const Perm> gens,
                  std::size_t cap = default_order_cap());

// A subgroup of a fixed parent, stored as a sorted list of parent indices.
// Generators are canonical: greedily the least elements not yet generated.
class Subgroup {
 public:
  Subgroup() = default;
  // `elements` must already be closed and sorted.
  Subgroup(GroupPtr parent, std::vector<Index> elements);

  const GroupPtr& parent() const noexcept { return parent_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Index>& elements() const noexcept { return elements_; }
  const std::vector<Index>& generators() const noexcept { return generators_; }
  std::vector<Perm> generator_perms() const;
  std::vector<Perm> element_perms() const;

  bool contains(Index i) const { return i < mask_.size() && mask_[i]; }
  bool contains(const Perm& p) const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const;
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b);

 private:
  GroupPtr parent_;
  std::vector<Index> elements_;
  std::vector<Index> generators_;
  std::vector<bool> mask_;
};

// Canonical order on subgroups of one parent: by order, then by element list.
bool canonical_less(const Subgroup& a, const Subgroup& b);

Subgroup subgroup_generated(const GroupPtr& g, std::span<const Index> gens);
// Throws InputError when some perm is not in `g`.
Subgroup subgroup_from_perms(const GroupPtr& g, std::span<const Perm> gens);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);

// Throws InputError when the parents differ.
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);

// Smallest subgroup of `ambient` containing `seeds` and normal in `ambient`.
Subgroup normal_closure(const Subgroup& ambient, std::span<const Index> seeds);
Subgroup derived_subgroup(const Subgroup& s);

bool is_normal_in(const Subgroup& n, const Subgroup& ambient);
inline bool is_normal(const Subgroup& n) { return is_normal_in(n, whole_group(n.parent())); }

// Conjugacy classes in order of their least element, each sorted.
std::vector<std::vector<Index>> conjugacy_classes(const PermGroup& g);

// Every normal subgroup, sorted by canonical_less. Built as the lattice
// spanned by normal closures of class representatives.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

// Every subgroup, sorted by canonical_less (joins of cyclic subgroups).
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

// The subgroup as a group in its own right (same degree).
GroupPtr as_group(const Subgroup& s);
// Re-home a subgroup whose elements all lie in `g`.
Subgroup rehome(const GroupPtr& g, const Subgroup& s);

class Homomorphism {
 public:
  Homomorphism() = default;

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  const std::vector<Perm>& generator_images() const noexcept { return generator_images_; }

  Index apply(Index source_index) const { return table_.at(source_index); }
  Perm operator()(const Perm& x) const;

  Subgroup kernel() const;
  Subgroup image() const;
  bool is_injective() const { return kernel().is_trivial(); }

  friend std::optional<Homomorphism> try_make_hom(const GroupPtr&, const GroupPtr&,
                                                  std::vector<Perm>);

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Perm> generator_images_;
  std::vector<Index> table_;
};

// Assign one image per source generator. Valid iff the subgroup of
// source x target generated by the (generator, image) pairs has the order
// of the source, i.e. is the graph of a function.
std::optional<Homomorphism> try_make_hom(const GroupPtr& source, const GroupPtr& target,
                                         std::vector<Perm> images);
// Throws InputError when the assignment does not extend.
Homomorphism make_hom(const GroupPtr& source, const GroupPtr& target,
                      std::vector<Perm> images);

struct Quotient {
  GroupPtr group;
  Homomorphism projection;
  // coset_of[i]: the quotient point (coset) holding element i.
  std::vector<Index> coset_of;
};

// Action of g on the right cosets of n, cosets numbered by least element.
// Throws InputError unless n is normal.
Quotient quotient(const GroupPtr& g, const Subgroup& n);

// Acts on disjoint point sets; generator names clashing with the left
// factor get a "_2" suffix.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b,
                        std::size_t cap = default_order_cap());

// Right cosets H x of h in its parent. Every element g factors as
// g = subgroup_part[g] * representative(coset_of[g]).
struct RightTransversal {
  std::vector<Index> representatives;
  std::vector<Index> coset_of;
  std::vector<Index> subgroup_part;
};
RightTransversal right_transversal(const Subgroup& h);
// The least element of every right coset, in canonical order.
std::vector<Perm> transversal(const Subgroup& h);

struct Classification {
  std::size_t order = 1;
  std::vector<unsigned> prime_divisors;
  bool solvable = true;
  bool is_p_group(unsigned p) const;
};

Classification classify(const GroupPtr& g);
bool is_solvable(const Subgroup& s);

std::vector<unsigned> prime_divisors(std::size_t n);
bool is_prime(unsigned long long n);
bool is_power_of(std::size_t n, unsigned p);

}  // namespace rootres
