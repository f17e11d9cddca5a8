#include "rootres/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "rootres/catalog.hpp"
#include "rootres/error.hpp"

namespace rootres::io {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Top-level comma split: "(1 2), (1,3)" -> {"(1 2)", "(1,3)"}.
std::vector<std::string> split_perm_list(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(text.substr(start)));
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t as_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw InputError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

json perm_to_json(const Perm& p) { return p.one_based(); }

Perm perm_from_json(const json& j, std::size_t degree) {
  if (!j.is_array()) throw InputError("permutation must be an array of 1-based images");
  std::vector<std::int64_t> images;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError("permutation entries must be integers");
    images.push_back(v.get<std::int64_t>());
  }
  if (images.size() != degree) {
    throw InputError("permutation has length " + std::to_string(images.size()) + ", expected degree " +
                     std::to_string(degree));
  }
  return Perm::from_one_based(images);
}

json group_to_json(const PermGroup& g) {
  json gens = json::object();
  for (const auto& gen : g.generators()) gens[gen.name] = perm_to_json(gen.perm);
  return {{"degree", g.degree()}, {"generators", gens}};
}

GroupPtr group_from_json(const json& j) {
  const auto degree = as_index(field(j, "degree"), "degree");
  const auto& gens = field(j, "generators");
  if (!gens.is_object()) throw InputError("'generators' must be an object of name: images");
  std::vector<NamedPerm> named;
  for (const auto& [name, images] : gens.items()) {
    try {
      named.push_back({name, perm_from_json(images, degree)});
    } catch (const InputError& e) {
      throw InputError("generator '" + name + "': " + e.what());
    }
  }
  return generate(degree, std::move(named));
}

Perm eval_generator_word(const PermGroup& g, std::string_view word) {
  Perm acc = Perm::identity(g.degree());
  std::istringstream in{std::string(word)};
  std::string tok;
  while (in >> tok) {
    if (tok == "id") continue;
    std::string name = tok;
    long long e = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      const auto exp = std::string_view(tok).substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), e);
      if (ec != std::errc{} || ptr != exp.data() + exp.size()) {
        throw InputError("bad exponent in '" + tok + "' of word '" + std::string(word) + "'");
      }
    }
    auto k = g.generator_by_name(name);
    if (!k) throw InputError("unknown generator '" + name + "' in word '" + std::string(word) + "'");
    acc = acc * g.generators()[*k].perm.pow(e);
  }
  return acc;
}

Perm element_from_json(const PermGroup& g, const json& j) {
  Perm p;
  if (j.is_array()) {
    p = perm_from_json(j, g.degree());
  } else if (j.is_string()) {
    const auto text = trim(j.get<std::string>());
    p = (!text.empty() && text.front() == '(') ? Perm::from_cycles(text, g.degree())
                                               : eval_generator_word(g, text);
  } else {
    throw InputError("group element must be an image array or a string");
  }
  if (!g.contains(p)) throw InputError("element " + p.cycles() + " is not in the group");
  return p;
}

GroupPtr resolve_group(std::string_view ref) {
  if (const auto* e = find_catalog(ref)) return e->group;
  if (!std::filesystem::exists(ref)) {
    throw InputError("'" + std::string(ref) + "' is neither a catalog group nor a readable file");
  }
  return group_from_json(read_json_file(ref));
}

std::vector<Perm> subgroup_generators_from_json(const GroupPtr& g, std::string_view group_ref,
                                                const json& j) {
  if (j.is_string()) return resolve_subgroup(g, group_ref, j.get<std::string>()).generator_perms();
  if (!j.is_array()) throw InputError("subgroup must be a name, a cycle list or an array of elements");
  std::vector<Perm> out;
  for (const auto& e : j) out.push_back(element_from_json(*g, e));
  return out;
}

Subgroup resolve_subgroup(const GroupPtr& g, std::string_view group_ref, std::string_view ref) {
  const auto text = trim(ref);
  if (!text.empty() && text.front() == '(') {
    std::vector<Perm> gens;
    for (const auto& part : split_perm_list(text)) {
      const Perm p = Perm::from_cycles(part, g->degree());
      if (!g->contains(p)) throw InputError("subgroup generator " + p.cycles() + " is not in the group");
      gens.push_back(p);
    }
    return subgroup_from_perms(g, gens);
  }
  if (const auto* e = find_catalog(group_ref); e && e->group == g) {
    if (const auto* s = e->subgroup(text)) return *s;
    std::string names;
    for (const auto& [n, _] : e->subgroups) names += " " + n;
    throw InputError("group " + std::string(group_ref) + " has no named subgroup '" + text +
                     "' (known:" + names + ")");
  }
  throw InputError("subgroup '" + text + "' must be given in cycle notation for a non-catalog group");
}

Word word_from_json(const AmalgamScheme& s, const json& j) {
  if (!j.is_array()) throw InputError("word must be an array of {\"copy\", \"elt\"} records");
  Word w;
  for (const auto& rec : j) {
    const auto copy = as_index(field(rec, "copy"), "copy");
    if (copy >= s.copies()) throw InputError("word names copy " + std::to_string(copy) + " of " + std::to_string(s.copies()));
    w.push_back({copy, element_from_json(*s.factor(copy), field(rec, "elt"))});
  }
  return w;
}

json word_to_json(const Word& w) {
  json out = json::array();
  for (const auto& syl : w) out.push_back({{"copy", syl.copy}, {"elt", perm_to_json(syl.elt)}});
  return out;
}

Word parse_inline_word(const AmalgamScheme& s, std::string_view text) {
  Word w;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) {
    throw InputError("word '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + msg);
  };
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != '(') fail("expected '('");
    std::size_t close = pos + 1;
    for (int depth = 1; close < text.size(); ++close) {
      if (text[close] == '(') ++depth;
      if (text[close] == ')' && --depth == 0) break;
    }
    if (close >= text.size()) fail("unterminated syllable");
    const auto body = text.substr(pos + 1, close - pos - 1);
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) fail("expected <copy>:<generator word>");
    std::size_t copy = 0;
    const auto copy_text = trim(body.substr(0, colon));
    auto [ptr, ec] = std::from_chars(copy_text.data(), copy_text.data() + copy_text.size(), copy);
    if (ec != std::errc{} || ptr != copy_text.data() + copy_text.size()) fail("bad copy index");
    if (copy >= s.copies()) fail("copy index out of range");
    try {
      w.push_back({copy, element_from_json(*s.factor(copy), json(std::string(body.substr(colon + 1))))});
    } catch (const InputError& e) {
      fail(e.what());
    }
    pos = close + 1;
  }
  return w;
}

Word resolve_word(const AmalgamScheme& s, std::string_view ref) {
  const auto text = trim(ref);
  if (text.empty() || text.front() == '(') return parse_inline_word(s, text);
  return word_from_json(s, read_json_file(text));
}

json normal_form_to_json(const NormalForm& nf) {
  return {{"head", perm_to_json(nf.head)}, {"tail", word_to_json(nf.tail)}, {"length", nf.length()}};
}

NormalForm normal_form_from_json(const json& j, std::size_t head_degree,
                                 const std::vector<std::size_t>& copy_degrees) {
  NormalForm nf;
  nf.head = perm_from_json(field(j, "head"), head_degree);
  const auto& tail = field(j, "tail");
  if (!tail.is_array()) throw InputError("normal form tail must be an array");
  for (const auto& rec : tail) {
    const auto copy = as_index(field(rec, "copy"), "copy");
    if (copy >= copy_degrees.size()) throw InputError("normal form names a missing copy");
    nf.tail.push_back({copy, perm_from_json(field(rec, "elt"), copy_degrees[copy])});
  }
  if (as_index(field(j, "length"), "length") != nf.tail.size()) {
    throw InputError("normal form length disagrees with its tail");
  }
  return nf;
}

AmalgamScheme scheme_from_json(const json& j) {
  auto group_of = [](const json& g) -> std::pair<GroupPtr, std::string> {
    if (g.is_string()) return {resolve_group(g.get<std::string>()), g.get<std::string>()};
    return {group_from_json(g), ""};
  };
  if (j.is_object() && j.contains("power")) {
    const auto n = as_index(j.at("power"), "power");
    auto [a, ref] = group_of(field(j, "group"));
    const auto h = subgroup_generators_from_json(a, ref, field(j, "subgroup"));
    return power_scheme(a, h, n);
  }
  SchemeInput in;
  const auto& factors = field(j, "factors");
  if (!factors.is_array()) throw InputError("'factors' must be an array");
  for (const auto& f : factors) {
    auto [g, ref] = group_of(field(f, "group"));
    in.subgroup_generators.push_back(subgroup_generators_from_json(g, ref, field(f, "subgroup")));
    in.factors.push_back(std::move(g));
  }
  if (j.contains("isos")) {
    for (const auto& iso : j.at("isos")) {
      IsoSpec spec;
      spec.from = as_index(field(iso, "from"), "from");
      spec.to = as_index(field(iso, "to"), "to");
      if (spec.to >= in.factors.size()) throw InputError("isomorphism targets a missing factor");
      for (const auto& e : field(iso, "images")) spec.images.push_back(element_from_json(*in.factors[spec.to], e));
      in.isos.push_back(std::move(spec));
    }
  }
  return build_scheme(in);
}

AmalgamScheme resolve_scheme(std::string_view ref) {
  if (ref.starts_with("power:")) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (parts.size() < 3) {
      const auto colon = ref.find(':', start);
      if (colon == std::string_view::npos) break;
      parts.emplace_back(ref.substr(start, colon - start));
      start = colon + 1;
    }
    parts.emplace_back(ref.substr(start));
    if (parts.size() != 4) throw InputError("inline scheme must read power:<copies>:<group>:<subgroup>");
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), n);
    if (ec != std::errc{} || ptr != parts[1].data() + parts[1].size()) throw InputError("bad copy count in '" + std::string(ref) + "'");
    auto a = resolve_group(parts[2]);
    const auto h = resolve_subgroup(a, parts[2], parts[3]).generator_perms();
    return power_scheme(a, h, n);
  }
  return scheme_from_json(read_json_file(ref));
}

json power_scheme_to_json(const AmalgamScheme& s) {
  json h = json::array();
  for (const auto& g : s.amalgamated(0).generator_perms()) h.push_back(perm_to_json(g));
  return {{"power", s.copies()}, {"group", group_to_json(*s.base())}, {"subgroup", h}};
}

json parse_json_text(std::string_view text, std::string_view origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(origin) + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path.string());
}

}  // namespace rootres::io
