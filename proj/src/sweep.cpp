#include "rootres/sweep.hpp"

#include "rootres/catalog.hpp"
#include "rootres/error.hpp"

namespace rootres {

namespace {

template <class F>
void run(AxiomSweepReport& r, SweepCounts& c, const std::string& where, F&& check) {
  ++c.checked;
  try {
    if (!check()) {
      ++c.failed;
      r.failures.push_back(where);
    }
  } catch (const InternalError& e) {
    ++c.failed;
    r.failures.push_back(where + ": " + e.what());
  }
}

nlohmann::json counts_json(const SweepCounts& c) { return {{"checked", c.checked}, {"failed", c.failed}}; }

}  // namespace

AxiomSweepReport sweep_axioms(const RootClassSpec& k, std::size_t max_order, std::size_t product_order_limit) {
  AxiomSweepReport r;
  r.cls = k;
  r.max_order = max_order;
  r.product_order_limit = product_order_limit;

  std::vector<const CatalogEntry*> entries;
  for (const auto& e : catalog()) {
    if (e.group->order() <= max_order) entries.push_back(&e);
  }

  for (const auto* e : entries) {
    const auto& g = e->group;
    r.groups.push_back(e->name);
    const bool g_member = member(g, k);
    const auto subs = all_subgroups(g);
    const auto normals = normal_subgroups(g);

    if (g_member) {
      for (const auto& s : subs) {
        run(r, r.subgroup_closure, e->name + ": subgroup of order " + std::to_string(s.order()),
            [&] { return member(as_group(s), k); });
      }
    }

    for (const auto& b : normals) {
      if (!quotient_in_class(g, b, k)) continue;
      for (const auto& c : subs) {
        if (!c.is_subset_of(b) || !is_normal_in(c, b) || !member(section(b, c), k)) continue;
        run(r, r.root_property,
            e->name + ": root property at |B| = " + std::to_string(b.order()) + ", |C| = " + std::to_string(c.order()),
            [&] {
              const auto d = axiom3_witness(g, b, c, k);
              return is_normal(d) && d.is_subset_of(c) && quotient_in_class(g, d, k);
            });
      }
    }

    std::vector<Subgroup> kernels;
    for (const auto& n : normals) {
      if (quotient_in_class(g, n, k)) kernels.push_back(n);
    }
    for (std::size_t i = 0; i < kernels.size(); ++i) {
      for (std::size_t j = i; j < kernels.size(); ++j) {
        run(r, r.intersection,
            e->name + ": intersection of kernels of order " + std::to_string(kernels[i].order()) + " and " +
                std::to_string(kernels[j].order()),
            [&] { return lemma_prop3_check(g, kernels[i], kernels[j], k).holds; });
      }
    }

    // Series 1 <| C <| B <| G with B normal in G and C normal in B.
    for (const auto& b : normals) {
      if (b.is_whole() || !quotient_in_class(g, b, k)) continue;
      if (member(as_group(b), k)) {
        run(r, r.extension_closure, e->name + ": series through B of order " + std::to_string(b.order()),
            [&] { return extension_closure_check(g, {b, whole_group(g)}, k); });
      }
      for (const auto& c : subs) {
        if (c.is_trivial() || c == b || !c.is_subset_of(b) || !is_normal_in(c, b)) continue;
        if (!member(as_group(c), k) || !member(section(b, c), k)) continue;
        run(r, r.extension_closure,
            e->name + ": series through |C| = " + std::to_string(c.order()) + ", |B| = " + std::to_string(b.order()),
            [&] { return extension_closure_check(g, {c, b, whole_group(g)}, k); });
      }
    }

    for (const auto& f : normals) {
      if (!quotient_in_class(g, f, k) || !residual_core(as_group(f), k).residual()) continue;
      run(r, r.residual_extension, e->name + ": residual extension over F of order " + std::to_string(f.order()),
          [&] { return residual_extension_check(g, f, k); });
    }
  }

  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i; j < entries.size(); ++j) {
      const auto& a = entries[i]->group;
      const auto& b = entries[j]->group;
      if (a->order() * b->order() > product_order_limit) continue;
      if (!member(a, k) || !member(b, k)) continue;
      run(r, r.product_closure, entries[i]->name + " x " + entries[j]->name, [&] {
        const auto p = direct_product(a, b);
        return p->order() == a->order() * b->order() && member(p, k);
      });
    }
  }
  return r;
}

nlohmann::json AxiomSweepReport::to_json() const {
  return {{"class", cls.str()},
          {"max_order", max_order},
          {"product_order_limit", product_order_limit},
          {"groups", groups},
          {"subgroup_closure", counts_json(subgroup_closure)},
          {"product_closure", counts_json(product_closure)},
          {"root_property", counts_json(root_property)},
          {"intersection", counts_json(intersection)},
          {"extension_closure", counts_json(extension_closure)},
          {"residual_extension", counts_json(residual_extension)},
          {"failures", failures},
          {"passed", passed()}};
}

}  // namespace rootres
