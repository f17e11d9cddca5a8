#pragma once

// Brute-force reference implementations. They use only Perm arithmetic and
// std containers, never the library's group, amalgam or series code.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rootres/perm.hpp"

namespace oracle {

using rootres::Perm;
using PermSet = std::set<Perm>;

PermSet closure(const std::vector<Perm>& gens, std::size_t degree);
// Every subgroup, as the closures of all generator triples.
std::set<PermSet> subgroups(const PermSet& g);
bool is_normal(const PermSet& n, const PermSet& g);
std::set<PermSet> normal_subgroups(const PermSet& g);
// {h n : h in h, n in n}.
PermSet product(const PermSet& h, const PermSet& n);

enum class Kind { Finite, P, Solvable };
struct Class {
  Kind kind = Kind::Finite;
  unsigned p = 0;
};
// Membership of g/n, from |g/n| for p-groups and from the derived series
// of g (g/n solvable iff some derived term of g lies in n).
bool quotient_in_class(const PermSet& g, const PermSet& n, const Class& k);

// Double loop: every a outside h has some normal n with g/n in the class
// and a outside hn.
bool is_closed(const PermSet& g, const PermSet& h, const Class& k);

// Words in a power of `a` over `h` with identity identifications: rewrite
// greedily to a reduced word, then compare reduced words by sliding
// h-elements across syllable boundaries.
struct Letter {
  std::size_t copy;
  Perm elt;
};
struct Reduced {
  Perm head;
  std::vector<Letter> tail;
};
Reduced rewrite(const PermSet& h, const std::vector<Letter>& word, std::size_t degree);
bool words_equal(const PermSet& h, const std::vector<Letter>& u, const std::vector<Letter>& v, std::size_t degree);

// Noncommutative polynomials with monomials spelled as strings of variable
// digits; exact integer arithmetic truncated past `degree`, reduced mod p
// when p > 0.
using Poly = std::map<std::string, std::int64_t>;
Poly magnus(const std::vector<int>& word, std::size_t degree, std::int64_t p);

}  // namespace oracle
