#include "rootres/residuality.hpp"

#include <algorithm>

#include "rootres/error.hpp"
#include "rootres/io.hpp"

namespace rootres {

using nlohmann::json;

namespace {

json perms_json(const std::vector<Perm>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(io::perm_to_json(p));
  return out;
}

json subgroup_json(const Subgroup& s) { return perms_json(s.generator_perms()); }

std::string list_text(const std::vector<Perm>& ps) {
  std::string out = "<";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i].cycles();
  return out + ">";
}

// Generators as they appear in the serialized group, in key order.
std::string group_text(const json& g) {
  std::string out = "<";
  bool first = true;
  for (const auto& [name, images] : g.at("generators").items()) {
    out += (first ? "" : ", ") + name + "=" + Perm::from_one_based(images.get<std::vector<std::int64_t>>()).cycles();
    first = false;
  }
  return out + ">";
}

const char* const kChoiceRule = "least qualifying normal subgroup in canonical order";

const char* const kPowerNote =
    "Q_N is the generalized free power of the class member A/N over HN/N; "
    "such a power is residual in the class, so g survives in a quotient of Q in the class";

}  // namespace

std::optional<Subgroup> closedness_witness(const Subgroup& h, Index a, std::span<const Subgroup> kernels) {
  for (const auto& n : kernels) {
    if (!join(h, n).contains(a)) return n;
  }
  return std::nullopt;
}

ClosednessReport is_k_closed(const GroupPtr& a, const Subgroup& h, const RootClassSpec& k) {
  if (h.parent() != a) throw InputError("subgroup is not a subgroup of the given group");
  ClosednessReport r{a, h, k, true, {}, std::nullopt};
  const auto kernels = class_kernels(a, k);
  for (Index x = 0; x < a->order(); ++x) {
    if (h.contains(x)) continue;
    auto w = closedness_witness(h, x, kernels);
    if (!w) {
      r.closed = false;
      r.witnesses.clear();
      r.failing_element = x;
      return r;
    }
    r.witnesses.emplace_back(x, std::move(*w));
  }
  return r;
}

json ClosednessReport::to_json() const {
  json j;
  j["class"] = cls.str();
  j["group_order"] = group->order();
  j["subgroup"] = subgroup_json(subgroup);
  j["subgroup_order"] = subgroup.order();
  j["closed"] = closed;
  json ws = json::array();
  for (const auto& [x, n] : witnesses) {
    ws.push_back({{"element", group->element(x).cycles()},
                  {"kernel_generators", subgroup_json(n)},
                  {"kernel_order", n.order()}});
  }
  j["witnesses"] = ws;
  j["failing_element"] = failing_element ? json(group->element(*failing_element).cycles()) : json(nullptr);
  return j;
}

SeparationCertificate closedness_certificate(const ClosednessReport& report, Index a) {
  const auto& g = report.group;
  auto it = std::find_if(report.witnesses.begin(), report.witnesses.end(),
                         [&](const auto& w) { return w.first == a; });
  if (it == report.witnesses.end()) {
    throw InputError("element " + g->element(a).cycles() + " has no witness in the report");
  }
  const auto& n = it->second;
  const auto hn = join(report.subgroup, n);
  SeparationCertificate c;
  c.kind = CertificateKind::ClosednessWitness;
  c.cls = report.cls;
  c.inputs = {{"group", io::group_to_json(*g)}, {"subgroup", subgroup_json(report.subgroup)}};
  c.data = {{"element", io::perm_to_json(g->element(a))}, {"kernel_generators", subgroup_json(n)}};
  c.claims = {{"factor_order", g->order()},
              {"subgroup_order", report.subgroup.order()},
              {"kernel_order", n.order()},
              {"kernel_normal", true},
              {"quotient_order", g->order() / n.order()},
              {"quotient_in_class", true},
              {"product_order", hn.order()},
              {"element_outside_product", true},
              {"witness_choice", kChoiceRule},
              {"statement", g->element(a).cycles() + " lies outside " + list_text(report.subgroup.generator_perms()) +
                                " N for N = " + list_text(n.generator_perms()) + " in " +
                                group_text(c.inputs.at("group")) + ", class " + report.cls.str()}};
  return c;
}

SeparationCertificate separate_in_power(const AmalgamScheme& scheme, const Word& g, const RootClassSpec& k) {
  if (!scheme.is_power()) throw InputError("separation needs a generalized free power");
  const auto& a = scheme.base();
  const auto& h = scheme.amalgamated(0);
  const NormalForm nf = reduce(scheme, g);
  if (nf.is_identity()) throw InputError("trivial word: g reduces to the identity");
  const auto kernels = class_kernels(a, k);

  Subgroup n;
  std::vector<Subgroup> per_syllable;
  std::optional<Perm> factor_element;
  if (nf.length() >= 2) {
    for (std::size_t i = 0; i < nf.length(); ++i) {
      const auto x = a->index_of(nf.tail[i].elt);
      auto w = closedness_witness(h, x, kernels);
      if (!w) {
        throw HypothesisFailure("syllable " + std::to_string(i + 1) + " (" + nf.tail[i].elt.cycles() +
                                ") has no closedness witness: H is not " + k.str() +
                                "-closed there, so the power is not residual in the class");
      }
      per_syllable.push_back(std::move(*w));
    }
    n = per_syllable.front();
    for (std::size_t i = 1; i < per_syllable.size(); ++i) {
      lemma_prop3_check(a, n, per_syllable[i], k);
      n = intersect(n, per_syllable[i]);
    }
  } else {
    Perm e = nf.head;
    if (!nf.tail.empty()) e = e * nf.tail.front().elt;
    const auto x = a->index_of(e);
    auto it = std::find_if(kernels.begin(), kernels.end(), [&](const Subgroup& s) { return !s.contains(x); });
    if (it == kernels.end()) {
      throw HypothesisFailure("element " + e.cycles() + " lies in the residual core of the factor for " +
                              k.str() + ": the factor is not residual at g");
    }
    n = *it;
    factor_element = e;
  }
  if (!quotient_in_class(a, n, k)) throw InternalError("intersection of class kernels left the class");

  const auto pq = power_quotient(scheme, n);
  const NormalForm image = reduce(pq.scheme, pq.map(nf.to_word()));
  if (nf.length() >= 2 && image.length() != nf.length()) {
    throw InternalError("image in Q_N lost length: " + std::to_string(image.length()) + " vs " +
                        std::to_string(nf.length()));
  }
  if (image.is_identity()) throw InternalError("image in Q_N is trivial");

  SeparationCertificate c;
  c.kind = CertificateKind::PowerStage;
  c.cls = k;
  c.inputs = {{"scheme", io::power_scheme_to_json(scheme)}, {"word", io::word_to_json(g)}};
  json syl = json::array();
  for (const auto& s : per_syllable) syl.push_back(subgroup_json(s));
  const auto qorder = a->order() / n.order();
  c.data = {{"case", factor_element ? "in_factor" : "alternating"},
            {"input_normal_form", io::normal_form_to_json(nf)},
            {"kernel_generators", subgroup_json(n)},
            {"syllable_kernels", syl},
            {"factor_element", factor_element ? io::perm_to_json(*factor_element) : json(nullptr)},
            {"quotient_order", qorder},
            {"image_normal_form", io::normal_form_to_json(image)}};
  c.claims = {{"factor_order", a->order()},
              {"subgroup_order", h.order()},
              {"kernel_order", n.order()},
              {"kernel_normal", true},
              {"quotient_order", qorder},
              {"quotient_in_class", true},
              {"input_length", nf.length()},
              {"image_length", image.length()},
              {"image_nontrivial", true},
              {"note", kPowerNote},
              {"witness_choice", kChoiceRule}};
  std::string word_text;
  for (const auto& syl : g) word_text += "(" + std::to_string(syl.copy) + ":" + syl.elt.cycles() + ")";
  c.claims["statement"] = "g = " + word_text + " in the " + std::to_string(scheme.copies()) + "-fold power of " +
                          group_text(c.inputs.at("scheme").at("group")) + " over " + list_text(h.generator_perms()) +
                          " survives modulo N = " + list_text(n.generator_perms()) + " in class " + k.str();
  return c;
}

SeparationCertificate separate_free_word_certificate(const FreeWord& w, const RootClassSpec& k,
                                                     std::optional<std::uint32_t> modulus,
                                                     std::size_t max_degree, const SeriesLimits& limits) {
  std::uint32_t m = 2;
  if (k.kind() == RootClassSpec::Kind::FiniteP) m = k.prime();
  if (modulus) {
    if (*modulus == 0 && k.kind() != RootClassSpec::Kind::FiniteSolvable) {
      throw InputError("modulus 0 yields a torsion-free nilpotent target; use class solvable");
    }
    if (*modulus != 0 && !is_prime(*modulus)) throw InputError("modulus must be 0 or a prime");
    if (k.kind() == RootClassSpec::Kind::FiniteP && *modulus != k.prime()) {
      throw InputError("class " + k.str() + " needs modulus " + std::to_string(k.prime()));
    }
    m = *modulus;
  }
  const auto sep = separate_free_word(w, m, max_degree, limits);
  SeparationCertificate c;
  c.kind = CertificateKind::FreeWord;
  c.cls = k;
  c.inputs = {{"word", w.str()}};
  json mono = json::array();
  for (auto v : sep.monomial) mono.push_back(static_cast<unsigned>(v) + 1);
  c.data = {{"rank", sep.rank},
            {"degree", sep.degree},
            {"modulus", sep.modulus},
            {"monomial", mono},
            {"coefficient", sep.coefficient}};
  c.claims = {{"image_nontrivial", true},
              {"minimal_degree", sep.degree},
              {"statement", "the image of " + w.str() + " under x_i -> 1 + t_i is not 1 modulo degree " +
                                std::to_string(sep.degree + 1)}};
  if (m == 0) {
    c.claims["target"] = "torsion-free nilpotent";
    c.claims["nilpotency_class_at_most"] = sep.degree;
  } else {
    std::size_t exponent = 0, pow = 1;
    for (std::size_t i = 1; i <= sep.degree; ++i) {
      pow *= sep.rank;
      exponent += pow;
    }
    c.claims["target"] = "finite p-group";
    c.claims["prime"] = m;
    c.claims["order_exponent"] = exponent;
  }
  return c;
}

Subgroup derive_closedness_witness(const GroupPtr& a, const Subgroup& h, const Perm& elt,
                                   const Homomorphism& alpha, const Homomorphism& beta,
                                   const RootClassSpec& k) {
  if (h.parent() != a) throw InputError("subgroup is not a subgroup of the given group");
  if (!a->contains(elt)) throw InputError("element " + elt.cycles() + " is not in the group");
  const auto x = a->index_of(elt);
  if (h.contains(x)) throw InputError("element " + elt.cycles() + " lies in the subgroup");
  if (alpha.source() != a || beta.source() != a) throw InputError("homomorphisms must start at the factor");
  if (alpha.target() != beta.target()) throw InputError("homomorphisms must share a target");
  if (!member(alpha.target(), k)) throw InputError("target group is not in class " + k.str());
  for (auto y : h.elements()) {
    if (alpha.apply(y) != beta.apply(y)) {
      throw InputError("homomorphisms disagree on subgroup element " + a->element(y).cycles());
    }
  }
  if (alpha.apply(x) == beta.apply(x)) {
    throw InputError("images of " + elt.cycles() + " coincide; the induced map does not separate it from its copy");
  }
  Subgroup n = intersect(alpha.kernel(), beta.kernel());
  if (!quotient_in_class(a, n, k) || join(h, n).contains(x)) {
    throw InternalError("derived kernel is not a closedness witness");
  }
  return n;
}

AmalgamHypotheses check_residuality_hypotheses(const AmalgamScheme& scheme, std::span<const Homomorphism> homs,
                                               const RootClassSpec& k) {
  if (homs.size() != scheme.copies()) throw InputError("need one homomorphism per factor");
  for (std::size_t l = 0; l < homs.size(); ++l) {
    if (homs[l].source() != scheme.factor(l)) {
      throw InputError("homomorphism " + std::to_string(l) + " does not start at factor " + std::to_string(l));
    }
    if (homs[l].target() != homs[0].target()) throw InputError("homomorphisms must share a target");
  }
  AmalgamHypotheses r;
  r.target_in_class = member(homs[0].target(), k);
  if (!r.target_in_class) r.failures.push_back("target is not in class " + k.str());
  try {
    check_family(scheme, homs);
    r.family_agrees = true;
  } catch (const InputError& e) {
    r.failures.push_back(std::string("family does not agree on the amalgamated subgroup: ") + e.what());
  }
  const auto& h0 = scheme.amalgamated(0);
  std::vector<Index> images;
  for (auto y : h0.elements()) images.push_back(homs[0].apply(y));
  std::sort(images.begin(), images.end());
  r.injective_on_h = std::adjacent_find(images.begin(), images.end()) == images.end();
  if (!r.injective_on_h) {
    for (auto y : h0.elements()) {
      if (y != PermGroup::kIdentity && homs[0].apply(y) == PermGroup::kIdentity) {
        r.failures.push_back("not injective on the amalgamated subgroup: " +
                             scheme.factor(0)->element(y).cycles() + " maps to 1");
        break;
      }
    }
  }
  for (std::size_t l = 0; l < scheme.copies(); ++l) {
    const auto core = residual_core(scheme.factor(l), k);
    r.factor_residual.push_back(core.residual());
    if (!core.residual()) {
      r.failures.push_back("factor " + std::to_string(l) + " is not residual in class " + k.str() +
                           " (residual core of order " + std::to_string(core.core.order()) + ")");
    }
  }
  return r;
}

json AmalgamHypotheses::to_json() const {
  json j;
  j["target_in_class"] = target_in_class;
  j["family_agrees"] = family_agrees;
  j["injective_on_subgroup"] = injective_on_h;
  j["factor_residual"] = factor_residual;
  j["failures"] = failures;
  j["verdict"] = holds() ? "the amalgam is residual in the class" : "hypotheses fail";
  return j;
}

}  // namespace rootres
