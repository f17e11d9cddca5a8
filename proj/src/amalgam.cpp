#include "rootres/amalgam.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "rootres/error.hpp"

namespace rootres {

namespace {

constexpr Index kUnset = std::numeric_limits<Index>::max();

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a->degree() == b->degree() && a->elements() == b->elements());
}

std::string pair_name(std::size_t l, std::size_t m) {
  return "(" + std::to_string(l) + "," + std::to_string(m) + ")";
}

// Element table of phi_{from,to} built by closing the generator graph.
std::vector<Index> iso_table(const GroupPtr& src, const Subgroup& h_src, const GroupPtr& dst,
                             const Subgroup& h_dst, const std::vector<Perm>& gens,
                             const IsoSpec& spec) {
  const auto name = pair_name(spec.from, spec.to);
  if (spec.images.size() != gens.size()) {
    throw InputError("isomorphism " + name + " lists " + std::to_string(spec.images.size()) +
                     " images for " + std::to_string(gens.size()) + " subgroup generators");
  }
  std::vector<Index> g_idx, img_idx;
  for (const auto& g : gens) g_idx.push_back(src->index_of(g));
  for (const auto& p : spec.images) {
    auto i = dst->find(p);
    if (!i) throw InputError("isomorphism " + name + ": image " + p.cycles() + " is not in factor " +
                             std::to_string(spec.to));
    img_idx.push_back(*i);
  }
  std::vector<Index> table(src->order(), kUnset);
  table[PermGroup::kIdentity] = PermGroup::kIdentity;
  std::vector<Index> queue{PermGroup::kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t k = 0; k < g_idx.size(); ++k) {
      const auto y = src->mul(queue[i], g_idx[k]);
      const auto t = dst->mul(table[queue[i]], img_idx[k]);
      if (table[y] == kUnset) {
        table[y] = t;
        queue.push_back(y);
      } else if (table[y] != t) {
        throw InputError("isomorphism " + name + " is not a well-defined homomorphism");
      }
    }
  }
  std::vector<Index> image;
  for (auto h : h_src.elements()) image.push_back(table[h]);
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
    throw InputError("isomorphism " + name + " is not injective");
  }
  if (image != h_dst.elements()) {
    throw InputError("isomorphism " + name + " does not map onto the amalgamated subgroup of factor " +
                     std::to_string(spec.to));
  }
  return table;
}

}  // namespace

Word NormalForm::to_word() const {
  Word w;
  if (!head.is_identity()) w.push_back({0, head});
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

const GroupPtr& AmalgamScheme::base() const {
  if (!is_power_) throw InputError("scheme is not a generalized free power");
  return factors_.front();
}

Index AmalgamScheme::transport(std::size_t from, std::size_t to, Index h) const {
  const auto r = iso_.at(from).at(to).at(h);
  if (r == kUnset) throw InputError("element is not in the amalgamated subgroup of factor " + std::to_string(from));
  return r;
}

Perm AmalgamScheme::transport(std::size_t from, std::size_t to, const Perm& h) const {
  return factors_.at(to)->element(transport(from, to, factors_.at(from)->index_of(h)));
}

AmalgamScheme build_scheme(const SchemeInput& input) {
  const auto n = input.factors.size();
  if (n < 2) throw InputError("an amalgam needs at least two factors");
  if (input.subgroup_generators.size() != n) {
    throw InputError("one amalgamated-subgroup generator list is needed per factor");
  }
  AmalgamScheme s;
  s.factors_ = input.factors;
  for (std::size_t l = 0; l < n; ++l) {
    for (const auto& g : input.subgroup_generators[l]) {
      if (!s.factors_[l]->contains(g)) {
        throw InputError("subgroup generator " + g.cycles() + " is not in factor " + std::to_string(l));
      }
    }
    s.subgroups_.push_back(subgroup_from_perms(s.factors_[l], input.subgroup_generators[l]));
  }

  s.iso_.assign(n, std::vector<std::vector<Index>>(n));
  for (const auto& spec : input.isos) {
    if (spec.from >= n || spec.to >= n) {
      throw InputError("isomorphism " + pair_name(spec.from, spec.to) + " names a missing factor");
    }
    if (!s.iso_[spec.from][spec.to].empty()) {
      throw InputError("isomorphism " + pair_name(spec.from, spec.to) + " given twice");
    }
    s.iso_[spec.from][spec.to] =
        iso_table(s.factors_[spec.from], s.subgroups_[spec.from], s.factors_[spec.to],
                  s.subgroups_[spec.to], input.subgroup_generators[spec.from], spec);
  }
  for (std::size_t l = 0; l < n; ++l) {
    if (s.iso_[l][l].empty()) {
      auto& t = s.iso_[l][l];
      t.assign(s.factors_[l]->order(), kUnset);
      for (auto h : s.subgroups_[l].elements()) t[h] = h;
    }
  }
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t m = 0; m < n; ++m) {
      if (!s.iso_[l][m].empty()) continue;
      if (s.iso_[m][l].empty()) {
        throw InputError("missing isomorphism between factors " + std::to_string(l) + " and " +
                         std::to_string(m));
      }
      auto& t = s.iso_[l][m];
      t.assign(s.factors_[l]->order(), kUnset);
      for (auto h : s.subgroups_[m].elements()) t[s.iso_[m][l][h]] = h;
    }
  }

  for (std::size_t l = 0; l < n; ++l) {
    const auto& g = *s.factors_[l];
    for (auto h : s.subgroups_[l].elements()) {
      if (s.iso_[l][l][h] != h) {
        throw InputError("coherence: phi" + pair_name(l, l) + " moves " + g.element(h).cycles());
      }
      for (std::size_t m = 0; m < n; ++m) {
        const auto hm = s.iso_[l][m][h];
        if (s.iso_[m][l][hm] != h) {
          throw InputError("coherence: phi" + pair_name(m, l) + " is not the inverse of phi" +
                           pair_name(l, m) + " at " + g.element(h).cycles());
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (s.iso_[m][k][hm] != s.iso_[l][k][h]) {
            throw InputError("coherence: phi" + pair_name(l, m) + " then phi" + pair_name(m, k) +
                             " differs from phi" + pair_name(l, k) + " at " + g.element(h).cycles() +
                             " (triple " + std::to_string(l) + "," + std::to_string(m) + "," +
                             std::to_string(k) + ")");
          }
        }
      }
    }
  }

  for (std::size_t l = 0; l < n; ++l) s.transversals_.push_back(right_transversal(s.subgroups_[l]));

  s.is_power_ = true;
  for (std::size_t l = 1; l < n && s.is_power_; ++l) {
    if (!same_group(s.factors_[0], s.factors_[l])) s.is_power_ = false;
  }
  for (std::size_t l = 0; l < n && s.is_power_; ++l) {
    for (std::size_t m = 0; m < n && s.is_power_; ++m) {
      for (auto h : s.subgroups_[l].elements()) {
        if (s.factors_[l]->element(h) != s.factors_[m]->element(s.iso_[l][m][h])) {
          s.is_power_ = false;
          break;
        }
      }
    }
  }
  return s;
}

AmalgamScheme power_scheme(const GroupPtr& a, std::span<const Perm> h_generators,
                           std::size_t copies) {
  SchemeInput in;
  in.factors.assign(copies, a);
  in.subgroup_generators.assign(copies, std::vector<Perm>(h_generators.begin(), h_generators.end()));
  for (std::size_t l = 0; l < copies; ++l) {
    for (std::size_t m = l + 1; m < copies; ++m) {
      in.isos.push_back({l, m, std::vector<Perm>(h_generators.begin(), h_generators.end())});
    }
  }
  return build_scheme(in);
}

NormalForm reduce(const AmalgamScheme& s, const Word& w) {
  struct Entry {
    std::size_t copy;
    Index elt;
  };
  // Built right to left; back() is the leftmost tail syllable.
  std::vector<Entry> rev;
  Index head = PermGroup::kIdentity;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const auto l = it->copy;
    if (l >= s.copies()) throw InputError("syllable names copy " + std::to_string(l) + " of " + std::to_string(s.copies()));
    const auto& g = *s.factor(l);
    auto a = g.find(it->elt);
    if (!a) throw InputError("syllable element " + it->elt.cycles() + " is not in factor " + std::to_string(l));
    Index x = g.mul(*a, s.transport(0, l, head));
    if (!rev.empty() && rev.back().copy == l) {
      x = g.mul(x, rev.back().elt);
      rev.pop_back();
    }
    const auto& t = s.transversal(l);
    const Index rep = t.representatives[t.coset_of[x]];
    if (rep != PermGroup::kIdentity) rev.push_back({l, rep});
    head = s.transport(l, 0, t.subgroup_part[x]);
  }
  NormalForm nf{s.factor(0)->element(head), {}};
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
    nf.tail.push_back({it->copy, s.factor(it->copy)->element(it->elt)});
  }
  return nf;
}

bool equal(const AmalgamScheme& s, const Word& a, const Word& b) { return reduce(s, a) == reduce(s, b); }

NormalForm multiply(const AmalgamScheme& s, const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return reduce(s, w);
}

Word inverse_word(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->copy, it->elt.inverse()});
  return out;
}

NormalForm invert(const AmalgamScheme& s, const Word& w) { return reduce(s, inverse_word(w)); }

Word copy_automorphism(const AmalgamScheme& s, std::span<const std::size_t> perm, const Word& w) {
  if (!s.is_power()) throw InputError("copy permutations need a generalized free power");
  if (perm.size() != s.copies()) throw InputError("copy permutation has the wrong length");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw InputError("copy relabelling is not a permutation");
    seen[p] = true;
  }
  Word out;
  for (const auto& syl : w) {
    if (syl.copy >= s.copies()) throw InputError("syllable names a missing copy");
    out.push_back({perm[syl.copy], syl.elt});
  }
  return out;
}

Word PowerQuotient::map(const Word& w) const {
  Word out;
  for (const auto& syl : w) out.push_back({syl.copy, projection(syl.elt)});
  return out;
}

PowerQuotient power_quotient(const AmalgamScheme& s, const Subgroup& n) {
  const auto& a = s.base();
  if (n.parent() != a) throw InputError("epsilon_N: kernel is not a subgroup of the base group");
  if (!is_normal(n)) throw InputError("epsilon_N: kernel is not normal in the base group");
  auto q = quotient(a, n);
  std::vector<Index> gens;
  for (auto h : s.amalgamated(0).generators()) gens.push_back(q.projection.apply(h));
  const Subgroup h_image = subgroup_generated(q.group, gens);
  auto scheme = power_scheme(q.group, h_image.generator_perms(), s.copies());
  return {std::move(scheme), n, std::move(q.projection)};
}

void check_family(const AmalgamScheme& s, std::span<const Homomorphism> homs) {
  if (homs.size() != s.copies()) {
    throw InputError("homomorphism family needs one map per copy (" + std::to_string(s.copies()) + ")");
  }
  for (std::size_t l = 0; l < homs.size(); ++l) {
    if (!same_group(homs[l].source(), s.factor(l))) {
      throw InputError("map " + std::to_string(l) + " does not start at factor " + std::to_string(l));
    }
    if (!same_group(homs[l].target(), homs[0].target())) {
      throw InputError("maps of the family have different targets");
    }
  }
  for (std::size_t l = 0; l < homs.size(); ++l) {
    for (auto hi : s.amalgamated(l).elements()) {
      const Perm h = s.factor(l)->element(hi);
      const Perm x = homs[l](h);
      for (std::size_t m = 0; m < homs.size(); ++m) {
        const Perm y = homs[m](s.transport(l, m, h));
        if (x != y) {
          throw InputError("family disagrees on the amalgamated subgroup: " + h.cycles() +
                           " in copy " + std::to_string(l) + " maps to " + x.cycles() +
                           " but its copy in " + std::to_string(m) + " maps to " + y.cycles());
        }
      }
    }
  }
}

Perm eval_hom_family(const AmalgamScheme& s, std::span<const Homomorphism> homs, const Word& w) {
  check_family(s, homs);
  Perm acc = Perm::identity(homs[0].target()->degree());
  for (const auto& syl : w) {
    if (syl.copy >= s.copies()) throw InputError("syllable names a missing copy");
    acc = acc * homs[syl.copy](syl.elt);
  }
  return acc;
}

}  // namespace rootres
