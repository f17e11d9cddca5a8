#include "rootres/perm_group.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <unordered_set>

#include "rootres/error.hpp"

namespace rootres {

namespace {

std::atomic<std::size_t> g_order_cap{kDefaultOrderCap};

constexpr std::size_t kTableLimit = 1024;
constexpr Index kUnset = std::numeric_limits<Index>::max();

// Sorted closure of `gens` inside `g`, as parent indices.
std::vector<Index> close(const PermGroup& g, std::span<const Index> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Index> out{PermGroup::kIdentity};
  seen[PermGroup::kIdentity] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto s : gens) {
      const auto y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_same_parent(const Subgroup& a, const Subgroup& b, const char* op) {
  if (a.parent() != b.parent()) {
    throw InputError(std::string(op) + ": subgroups have different parents");
  }
}

std::vector<Subgroup> lattice_closure(std::vector<Subgroup> seeds, bool with_meets) {
  std::set<std::vector<Index>> seen;
  std::vector<Subgroup> out;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.elements()).second) out.push_back(std::move(s));
  };
  for (auto& s : seeds) add(std::move(s));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      add(join(out[i], out[j]));
      if (with_meets) add(intersect(out[i], out[j]));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

std::size_t default_order_cap() noexcept { return g_order_cap.load(); }
void set_default_order_cap(std::size_t cap) noexcept { g_order_cap.store(cap); }

PermGroup::PermGroup(Token, std::size_t degree, std::vector<NamedPerm> generators,
                     std::vector<Perm> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {
  lookup_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    lookup_.emplace(elements_[i], static_cast<Index>(i));
  }
  const auto n = elements_.size();
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table_[a * n + b] = lookup_.at(elements_[a] * elements_[b]);
      }
    }
  }
  inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) inverse_[i] = lookup_.at(elements_[i].inverse());
  for (const auto& g : generators_) generator_indices_.push_back(lookup_.at(g.perm));
}

std::optional<Index> PermGroup::find(const Perm& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Index PermGroup::index_of(const Perm& p) const {
  auto i = find(p);
  if (!i) throw InputError("permutation " + p.cycles() + " is not an element of the group");
  return *i;
}

Index PermGroup::mul(Index a, Index b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return lookup_.at(elements_[a] * elements_[b]);
}

std::optional<std::size_t> PermGroup::generator_by_name(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

GroupPtr generate(std::size_t degree, std::vector<NamedPerm> gens, std::size_t cap) {
  for (const auto& g : gens) {
    if (g.perm.degree() != degree) {
      throw InputError("generator '" + g.name + "' has degree " +
                       std::to_string(g.perm.degree()) + ", expected " + std::to_string(degree));
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gens[i].name == gens[j].name) throw InputError("duplicate generator name '" + gens[i].name + "'");
    }
  }
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> elements{Perm::identity(degree)};
  seen.insert(elements.front());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Perm y = elements[i] * g.perm;
      if (seen.insert(y).second) {
        elements.push_back(std::move(y));
        if (elements.size() > cap) {
          throw CapExceeded("group order exceeds the cap of " + std::to_string(cap) +
                                " (closure reached " + std::to_string(elements.size()) +
                                " elements)",
                            elements.size());
        }
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return std::make_shared<const PermGroup>(PermGroup::Token{}, degree, std::move(gens),
                                           std::move(elements));
}

GroupPtr generate(std::size_t degree, std::span<const Perm> gens, std::size_t cap) {
  std::vector<NamedPerm> named;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    named.push_back({"g" + std::to_string(i + 1), gens[i]});
  }
  return generate(degree, std::move(named), cap);
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<Index> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  mask_.assign(parent_->order(), false);
  for (auto e : elements_) mask_[e] = true;
  std::vector<bool> current(parent_->order(), false);
  current[PermGroup::kIdentity] = true;
  std::size_t reached = 1;
  for (auto e : elements_) {
    if (reached == elements_.size()) break;
    if (current[e]) continue;
    generators_.push_back(e);
    const auto closed = close(*parent_, generators_);
    for (auto x : closed) current[x] = true;
    reached = closed.size();
  }
}

std::vector<Perm> Subgroup::generator_perms() const {
  std::vector<Perm> out;
  for (auto g : generators_) out.push_back(parent_->element(g));
  return out;
}

std::vector<Perm> Subgroup::element_perms() const {
  std::vector<Perm> out;
  for (auto g : elements_) out.push_back(parent_->element(g));
  return out;
}

bool Subgroup::contains(const Perm& p) const {
  auto i = parent_->find(p);
  return i && contains(*i);
}

bool Subgroup::is_whole() const { return elements_.size() == parent_->order(); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (parent_ != other.parent_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Index i) { return other.contains(i); });
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.parent_ == b.parent_ && a.elements_ == b.elements_;
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

Subgroup subgroup_generated(const GroupPtr& g, std::span<const Index> gens) {
  return Subgroup(g, close(*g, gens));
}

Subgroup subgroup_from_perms(const GroupPtr& g, std::span<const Perm> gens) {
  std::vector<Index> idx;
  for (const auto& p : gens) idx.push_back(g->index_of(p));
  return subgroup_generated(g, idx);
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {PermGroup::kIdentity}); }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<Index> all(g->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Index>(i);
  return Subgroup(g, std::move(all));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b, "intersect");
  std::vector<Index> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return Subgroup(a.parent(), std::move(out));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b, "join");
  std::vector<Index> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return subgroup_generated(a.parent(), gens);
}

Subgroup normal_closure(const Subgroup& ambient, std::span<const Index> seeds) {
  const auto& g = *ambient.parent();
  for (auto s : seeds) {
    if (!ambient.contains(s)) throw InputError("normal_closure: seed outside the ambient subgroup");
  }
  std::vector<Index> gens(seeds.begin(), seeds.end());
  Subgroup n = subgroup_generated(ambient.parent(), gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto x : n.generators()) {
      for (auto s : ambient.generators()) {
        const auto c = g.conj(x, s);
        if (!n.contains(c)) {
          gens = n.generators();
          gens.push_back(c);
          n = subgroup_generated(ambient.parent(), gens);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return n;
}

Subgroup derived_subgroup(const Subgroup& s) {
  const auto& g = *s.parent();
  std::vector<Index> seeds;
  const auto& gens = s.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto x = gens[i], y = gens[j];
      seeds.push_back(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
    }
  }
  return normal_closure(s, seeds);
}

bool is_normal_in(const Subgroup& n, const Subgroup& ambient) {
  if (!n.is_subset_of(ambient)) return false;
  const auto& g = *n.parent();
  for (auto x : n.generators()) {
    for (auto s : ambient.generators()) {
      if (!n.contains(g.conj(x, s))) return false;
    }
  }
  return true;
}

std::vector<std::vector<Index>> conjugacy_classes(const PermGroup& g) {
  std::vector<bool> done(g.order(), false);
  std::vector<std::vector<Index>> classes;
  for (Index x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Index> cls{x};
    done[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (auto s : g.generator_indices()) {
        const auto y = g.conj(cls[i], s);
        if (!done[y]) {
          done[y] = true;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  const Subgroup whole = whole_group(g);
  std::vector<Subgroup> seeds{trivial_subgroup(g), whole};
  for (const auto& cls : conjugacy_classes(*g)) {
    const Index rep = cls.front();
    seeds.push_back(normal_closure(whole, std::span<const Index>(&rep, 1)));
  }
  return lattice_closure(std::move(seeds), true);
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  std::vector<Subgroup> seeds{trivial_subgroup(g)};
  for (Index x = 0; x < g->order(); ++x) {
    seeds.push_back(subgroup_generated(g, std::span<const Index>(&x, 1)));
  }
  return lattice_closure(std::move(seeds), false);
}

GroupPtr as_group(const Subgroup& s) {
  return generate(s.parent()->degree(), s.generator_perms());
}

Subgroup rehome(const GroupPtr& g, const Subgroup& s) {
  return subgroup_from_perms(g, s.generator_perms());
}

// ---------------------------------------------------------------------------

Perm Homomorphism::operator()(const Perm& x) const {
  return target_->element(table_.at(source_->index_of(x)));
}

Subgroup Homomorphism::kernel() const {
  std::vector<Index> out;
  for (Index i = 0; i < table_.size(); ++i) {
    if (table_[i] == PermGroup::kIdentity) out.push_back(i);
  }
  return Subgroup(source_, std::move(out));
}

Subgroup Homomorphism::image() const {
  std::vector<Index> gens;
  for (auto s : source_->generator_indices()) gens.push_back(table_[s]);
  return subgroup_generated(target_, gens);
}

std::optional<Homomorphism> try_make_hom(const GroupPtr& source, const GroupPtr& target,
                                         std::vector<Perm> images) {
  const auto& src_gens = source->generator_indices();
  if (images.size() != src_gens.size()) {
    throw InputError("homomorphism needs " + std::to_string(src_gens.size()) +
                     " generator images, got " + std::to_string(images.size()));
  }
  std::vector<Index> img;
  for (const auto& p : images) img.push_back(target->index_of(p));

  std::vector<Index> table(source->order(), kUnset);
  table[PermGroup::kIdentity] = PermGroup::kIdentity;
  std::vector<Index> queue{PermGroup::kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto x = queue[i];
    for (std::size_t k = 0; k < src_gens.size(); ++k) {
      const auto y = source->mul(x, src_gens[k]);
      const auto t = target->mul(table[x], img[k]);
      if (table[y] == kUnset) {
        table[y] = t;
        queue.push_back(y);
      } else if (table[y] != t) {
        return std::nullopt;  // graph strictly larger than the source
      }
    }
  }
  Homomorphism h;
  h.source_ = source;
  h.target_ = target;
  h.generator_images_ = std::move(images);
  h.table_ = std::move(table);
  return h;
}

Homomorphism make_hom(const GroupPtr& source, const GroupPtr& target, std::vector<Perm> images) {
  auto h = try_make_hom(source, target, std::move(images));
  if (!h) throw InputError("generator assignment does not extend to a homomorphism");
  return *std::move(h);
}

Quotient quotient(const GroupPtr& g, const Subgroup& n) {
  if (n.parent() != g) throw InputError("quotient: subgroup belongs to a different group");
  if (!is_normal(n)) throw InputError("quotient: subgroup is not normal");
  std::vector<Index> coset_of(g->order(), kUnset);
  std::vector<Index> reps;
  for (Index x = 0; x < g->order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    const auto c = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (auto m : n.elements()) coset_of[g->mul(m, x)] = c;
  }
  std::vector<NamedPerm> gens;
  std::vector<Perm> images;
  for (std::size_t k = 0; k < g->generators().size(); ++k) {
    const auto s = g->generator_indices()[k];
    std::vector<std::int64_t> action(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) action[c] = coset_of[g->mul(reps[c], s)] + 1;
    Perm p = Perm::from_one_based(action);
    gens.push_back({g->generators()[k].name, p});
    images.push_back(std::move(p));
  }
  auto q = generate(reps.size(), std::move(gens), std::max(default_order_cap(), g->order()));
  Homomorphism proj = make_hom(g, q, std::move(images));
  return {q, std::move(proj), std::move(coset_of)};
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::size_t cap) {
  const auto n1 = a->degree(), n2 = b->degree();
  std::vector<NamedPerm> gens;
  for (const auto& g : a->generators()) {
    std::vector<std::int64_t> img(n1 + n2);
    for (std::size_t i = 0; i < n1; ++i) img[i] = g.perm[i] + 1;
    for (std::size_t i = 0; i < n2; ++i) img[n1 + i] = static_cast<std::int64_t>(n1 + i + 1);
    gens.push_back({g.name, Perm::from_one_based(img)});
  }
  for (const auto& g : b->generators()) {
    std::vector<std::int64_t> img(n1 + n2);
    for (std::size_t i = 0; i < n1; ++i) img[i] = static_cast<std::int64_t>(i + 1);
    for (std::size_t i = 0; i < n2; ++i) img[n1 + i] = static_cast<std::int64_t>(n1 + g.perm[i] + 1);
    std::string name = g.name;
    while (std::any_of(gens.begin(), gens.end(), [&](const NamedPerm& x) { return x.name == name; })) {
      name += "_2";
    }
    gens.push_back({name, Perm::from_one_based(img)});
  }
  return generate(n1 + n2, std::move(gens), cap);
}

RightTransversal right_transversal(const Subgroup& h) {
  const auto& g = *h.parent();
  RightTransversal t;
  t.coset_of.assign(g.order(), kUnset);
  t.subgroup_part.assign(g.order(), kUnset);
  for (Index x = 0; x < g.order(); ++x) {
    if (t.coset_of[x] != kUnset) continue;
    const auto c = static_cast<Index>(t.representatives.size());
    t.representatives.push_back(x);
    for (auto m : h.elements()) {
      const auto y = g.mul(m, x);
      t.coset_of[y] = c;
      t.subgroup_part[y] = m;
    }
  }
  return t;
}

std::vector<Perm> transversal(const Subgroup& h) {
  std::vector<Perm> out;
  for (auto r : right_transversal(h).representatives) out.push_back(h.parent()->element(r));
  return out;
}

// ---------------------------------------------------------------------------

bool Classification::is_p_group(unsigned p) const { return is_prime(p) && is_power_of(order, p); }

bool is_solvable(const Subgroup& s) {
  Subgroup d = s;
  while (!d.is_trivial()) {
    Subgroup next = derived_subgroup(d);
    if (next == d) return false;
    d = std::move(next);
  }
  return true;
}

Classification classify(const GroupPtr& g) {
  Classification c;
  c.order = g->order();
  c.prime_divisors = prime_divisors(c.order);
  c.solvable = is_solvable(whole_group(g));
  return c;
}

std::vector<unsigned> prime_divisors(std::size_t n) {
  std::vector<unsigned> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<unsigned>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_power_of(std::size_t n, unsigned p) {
  if (n == 0 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace rootres
