#include "rootres/certificate.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <set>
#include <utility>

#include "rootres/error.hpp"
#include "rootres/perm_group.hpp"

// The verifier half of this file reads certificates with its own JSON
// readers and checks them with permutation-group primitives only.

namespace rootres {

using nlohmann::json;

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::PowerStage: return "power_stage";
    case CertificateKind::FreeWord: return "free_word";
    case CertificateKind::ClosednessWitness: return "closedness_witness";
  }
  return "?";
}

namespace {

CertificateKind kind_from_string(const std::string& s) {
  if (s == "power_stage") return CertificateKind::PowerStage;
  if (s == "free_word") return CertificateKind::FreeWord;
  if (s == "closedness_witness") return CertificateKind::ClosednessWitness;
  throw MalformedCertificate("unknown certificate kind '" + s + "'");
}

[[noreturn]] void malformed(const std::string& msg) { throw MalformedCertificate(msg); }

const json& object_with(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) malformed(where + " must be an object");
  for (const auto* k : keys) {
    if (!j.contains(k)) malformed(where + " lacks '" + k + "'");
  }
  if (j.size() != keys.size()) {
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : j.items()) {
      if (!allowed.count(k)) malformed(where + " has unexpected field '" + k + "'");
    }
  }
  return j;
}

std::int64_t read_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) malformed(where + " must be an integer");
  return j.get<std::int64_t>();
}

std::size_t read_count(const json& j, const std::string& where) {
  const auto v = read_int(j, where);
  if (v < 0) malformed(where + " must be non-negative");
  return static_cast<std::size_t>(v);
}

Perm read_perm(const json& j, std::size_t degree, const std::string& where) {
  if (!j.is_array()) malformed(where + " must be an image array");
  std::vector<std::int64_t> images;
  for (const auto& v : j) images.push_back(read_int(v, where));
  if (images.size() != degree) malformed(where + " has the wrong degree");
  try {
    return Perm::from_one_based(images);
  } catch (const InputError& e) {
    malformed(where + ": " + e.what());
  }
}

std::vector<Perm> read_perms(const json& j, std::size_t degree, const std::string& where) {
  if (!j.is_array()) malformed(where + " must be an array of permutations");
  std::vector<Perm> out;
  for (const auto& p : j) out.push_back(read_perm(p, degree, where));
  return out;
}

struct RawGroup {
  std::size_t degree = 0;
  std::vector<NamedPerm> generators;
};

RawGroup read_group(const json& j, const std::string& where) {
  object_with(j, {"degree", "generators"}, where);
  RawGroup g;
  g.degree = read_count(j.at("degree"), where + ".degree");
  if (g.degree == 0) malformed(where + ".degree must be positive");
  if (!j.at("generators").is_object()) malformed(where + ".generators must be an object");
  for (const auto& [name, p] : j.at("generators").items()) {
    g.generators.push_back({name, read_perm(p, g.degree, where + ".generators." + name)});
  }
  return g;
}

std::string join_cycles(const std::vector<Perm>& ps) {
  std::string out = "<";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i].cycles();
  return out + ">";
}

std::string describe_group(const RawGroup& g) {
  std::string out = "<";
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    out += (i ? ", " : "") + g.generators[i].name + "=" + g.generators[i].perm.cycles();
  }
  return out + ">";
}

// --- membership in the class, straight from the classification ----------

bool class_member(const GroupPtr& g, const RootClassSpec& k) {
  const auto c = classify(g);
  switch (k.kind()) {
    case RootClassSpec::Kind::AllFinite: return true;
    case RootClassSpec::Kind::FiniteP: return c.is_p_group(k.prime());
    case RootClassSpec::Kind::FiniteSolvable: return c.solvable;
  }
  return false;
}

// Normal subgroups with quotient in the class, in canonical order.
std::vector<Subgroup> kernels_in_class(const GroupPtr& g, const RootClassSpec& k) {
  std::vector<Subgroup> out;
  for (auto& n : normal_subgroups(g)) {
    if (class_member(quotient(g, n).group, k)) out.push_back(std::move(n));
  }
  return out;
}

// The least kernel whose product with h misses x (h may be null).
std::optional<Subgroup> first_witness(const std::vector<Subgroup>& kernels, const Subgroup* h, Index x) {
  for (const auto& n : kernels) {
    if (!(h ? join(*h, n) : n).contains(x)) return n;
  }
  return std::nullopt;
}

const char* const kChoiceRule = "least qualifying normal subgroup in canonical order";

// --- power words ---------------------------------------------------------

using Letter = std::pair<std::size_t, Index>;

// Stack reduction in a power of g over h with identity identifications:
// the element is head * top[0] * ... with consecutive copies distinct and
// no letter in h.
struct StackForm {
  Index head = PermGroup::kIdentity;
  std::vector<Letter> letters;
  bool trivial() const { return head == PermGroup::kIdentity && letters.empty(); }
};

StackForm stack_reduce(const PermGroup& g, const Subgroup& h, const std::vector<Letter>& word) {
  StackForm f;
  auto absorb = [&](Index x) {
    if (f.letters.empty()) {
      f.head = g.mul(f.head, x);
    } else {
      f.letters.back().second = g.mul(f.letters.back().second, x);
    }
  };
  for (const auto& [copy, x] : word) {
    if (!f.letters.empty() && f.letters.back().first == copy) {
      const Index y = g.mul(f.letters.back().second, x);
      if (h.contains(y)) {
        f.letters.pop_back();
        absorb(y);
      } else {
        f.letters.back().second = y;
      }
    } else if (h.contains(x)) {
      absorb(x);
    } else {
      f.letters.push_back({copy, x});
    }
  }
  return f;
}

std::vector<Letter> inverse_letters(const PermGroup& g, const std::vector<Letter>& w) {
  std::vector<Letter> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->first, g.inv(it->second)});
  return out;
}

struct ClaimedForm {
  Perm head;
  std::vector<std::pair<std::size_t, Perm>> tail;
};

ClaimedForm read_form(const json& j, std::size_t degree, std::size_t copies, const std::string& where) {
  object_with(j, {"head", "tail", "length"}, where);
  ClaimedForm f;
  f.head = read_perm(j.at("head"), degree, where + ".head");
  if (!j.at("tail").is_array()) malformed(where + ".tail must be an array");
  for (const auto& rec : j.at("tail")) {
    object_with(rec, {"copy", "elt"}, where + ".tail[]");
    const auto copy = read_count(rec.at("copy"), where + ".tail[].copy");
    if (copy >= copies) malformed(where + ".tail[].copy out of range");
    f.tail.push_back({copy, read_perm(rec.at("elt"), degree, where + ".tail[].elt")});
  }
  if (read_count(j.at("length"), where + ".length") != f.tail.size()) malformed(where + ".length disagrees with its tail");
  return f;
}

// --- free words ----------------------------------------------------------

std::optional<std::vector<int>> parse_free_word(std::string_view text) {
  std::vector<int> letters;
  std::size_t pos = 0;
  auto ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&](bool sign) -> std::optional<long long> {
    const auto start = pos;
    if (sign && pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    long long v = 0;
    auto [p, ec] = std::from_chars(text.data() + start, text.data() + pos, v);
    if (ec != std::errc{} || p != text.data() + pos) return std::nullopt;
    return v;
  };
  ws();
  if (text.substr(pos) == "1") return letters;
  while (true) {
    ws();
    if (pos == text.size()) break;
    if (text[pos] != 'x') return std::nullopt;
    ++pos;
    const auto i = number(false);
    if (!i || *i < 1 || *i > 255) return std::nullopt;
    long long e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const auto ex = number(true);
      if (!ex || std::llabs(*ex) > 1000) return std::nullopt;
      e = *ex;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) return std::nullopt;
    for (long long r = 0; r < std::llabs(e); ++r) letters.push_back(e > 0 ? static_cast<int>(*i) : -static_cast<int>(*i));
  }
  return letters;
}

// Coefficient of one monomial in the image of the word under x_i -> 1 + t_i,
// computed letter by letter over prefixes of the monomial.
std::optional<std::int64_t> word_coefficient(const std::vector<int>& word, const std::vector<std::size_t>& mono,
                                             std::uint32_t modulus) {
  const auto k = mono.size();
  std::vector<std::int64_t> f(k + 1, 0), g(k + 1, 0);
  f[0] = 1;
  auto norm = [&](std::int64_t c) {
    if (modulus == 0) return c;
    const auto p = static_cast<std::int64_t>(modulus);
    return ((c % p) + p) % p;
  };
  for (int letter : word) {
    const auto v = static_cast<std::size_t>(std::abs(letter)) - 1;
    for (std::size_t i = 0; i <= k; ++i) {
      std::int64_t acc = f[i];
      for (std::size_t e = 1; e <= i; ++e) {
        if (mono[i - e] != v) break;
        std::int64_t c = letter > 0 ? (e == 1 ? 1 : 0) : (e % 2 ? -1 : 1);
        if (c == 0) break;
        std::int64_t term = 0;
        if (__builtin_mul_overflow(f[i - e], c, &term) || __builtin_add_overflow(acc, term, &acc)) {
          return std::nullopt;
        }
      }
      g[i] = norm(acc);
    }
    std::swap(f, g);
  }
  return f[k];
}

// --- the checker ---------------------------------------------------------

class Checker {
 public:
  bool expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
    return ok;
  }

  void claims_equal(const json& claimed, const json& expected) {
    if (!claimed.is_object()) malformed("claims must be an object");
    for (const auto& [k, v] : expected.items()) {
      if (!claimed.contains(k)) {
        failures.push_back("claim '" + k + "' is missing");
      } else if (claimed.at(k) != v) {
        failures.push_back("claim '" + k + "' is " + claimed.at(k).dump() + ", re-derived " + v.dump());
      }
    }
    for (const auto& [k, v] : claimed.items()) {
      if (!expected.contains(k)) failures.push_back("unexpected claim '" + k + "'");
    }
  }

  std::optional<GroupPtr> build(const RawGroup& g, const std::string& what) {
    try {
      return generate(g.degree, g.generators);
    } catch (const CapExceeded& e) {
      failures.push_back(what + " exceeds the order cap");
    } catch (const InputError& e) {
      failures.push_back(what + ": " + e.what());
    }
    return std::nullopt;
  }

  std::optional<Subgroup> subgroup(const GroupPtr& g, const std::vector<Perm>& gens, const std::string& what,
                                   bool canonical) {
    for (const auto& p : gens) {
      if (!expect(g->contains(p), what + " generator " + p.cycles() + " lies outside the group")) return std::nullopt;
    }
    auto s = subgroup_from_perms(g, gens);
    if (canonical) expect(s.generator_perms() == gens, what + " generators are not in canonical form");
    return s;
  }

  std::vector<std::string> failures;
};

// --- power_stage ---------------------------------------------------------

void check_power_stage(Checker& ck, const RootClassSpec& k, const json& inputs, const json& data, const json& claims) {
  object_with(inputs, {"scheme", "word"}, "inputs");
  const auto& scheme = object_with(inputs.at("scheme"), {"power", "group", "subgroup"}, "inputs.scheme");
  const auto copies = read_count(scheme.at("power"), "inputs.scheme.power");
  const auto raw = read_group(scheme.at("group"), "inputs.scheme.group");
  const auto h_gens = read_perms(scheme.at("subgroup"), raw.degree, "inputs.scheme.subgroup");
  if (!inputs.at("word").is_array()) malformed("inputs.word must be an array");
  std::vector<std::pair<std::size_t, Perm>> word_perms;
  for (const auto& rec : inputs.at("word")) {
    object_with(rec, {"copy", "elt"}, "inputs.word[]");
    word_perms.push_back({read_count(rec.at("copy"), "inputs.word[].copy"), read_perm(rec.at("elt"), raw.degree, "inputs.word[].elt")});
  }
  object_with(data, {"case", "input_normal_form", "kernel_generators", "syllable_kernels", "factor_element",
                     "quotient_order", "image_normal_form"},
              "data");
  if (!data.at("case").is_string()) malformed("data.case must be a string");
  const auto which = data.at("case").get<std::string>();
  const auto n_gens = read_perms(data.at("kernel_generators"), raw.degree, "data.kernel_generators");
  if (!data.at("syllable_kernels").is_array()) malformed("data.syllable_kernels must be an array");
  std::vector<std::vector<Perm>> syllable_gens;
  for (const auto& s : data.at("syllable_kernels")) syllable_gens.push_back(read_perms(s, raw.degree, "data.syllable_kernels[]"));
  std::optional<Perm> claimed_e;
  if (!data.at("factor_element").is_null()) claimed_e = read_perm(data.at("factor_element"), raw.degree, "data.factor_element");
  const auto claimed_qorder = read_count(data.at("quotient_order"), "data.quotient_order");
  const auto input_form = read_form(data.at("input_normal_form"), raw.degree, std::max<std::size_t>(copies, 1), "data.input_normal_form");

  if (!ck.expect(copies >= 2, "a power needs at least two copies")) return;
  for (const auto& [c, p] : word_perms) {
    if (!ck.expect(c < copies, "word names copy " + std::to_string(c) + " of " + std::to_string(copies))) return;
  }
  const auto a = ck.build(raw, "factor group");
  if (!a) return;
  const auto& A = **a;
  const auto h = ck.subgroup(*a, h_gens, "amalgamated subgroup", true);
  if (!h) return;

  std::vector<Letter> word;
  for (const auto& [c, p] : word_perms) {
    if (!ck.expect(A.contains(p), "word syllable " + p.cycles() + " lies outside the factor")) return;
    word.push_back({c, A.index_of(p)});
  }
  const auto own = stack_reduce(A, *h, word);
  if (!ck.expect(!own.trivial(), "the input word is trivial")) return;

  // The claimed input form must be reduced and equal to the word.
  std::vector<Letter> form_word;
  if (!ck.expect(A.contains(input_form.head) && h->contains(A.index_of(input_form.head)),
                 "input form head lies outside the amalgamated subgroup")) {
    return;
  }
  form_word.push_back({0, A.index_of(input_form.head)});
  for (std::size_t i = 0; i < input_form.tail.size(); ++i) {
    const auto& [c, p] = input_form.tail[i];
    if (!ck.expect(A.contains(p), "input form syllable outside the factor")) return;
    const auto x = A.index_of(p);
    ck.expect(!h->contains(x), "input form syllable " + p.cycles() + " lies in the amalgamated subgroup");
    if (i > 0) ck.expect(input_form.tail[i - 1].first != c, "input form repeats a copy");
    form_word.push_back({c, x});
  }
  auto diff = form_word;
  const auto inv = inverse_letters(A, word);
  diff.insert(diff.end(), inv.begin(), inv.end());
  ck.expect(stack_reduce(A, *h, diff).trivial(), "input normal form is not equal to the word");
  const auto s = own.letters.size();
  ck.expect(input_form.tail.size() == s, "input normal form length differs from the reduced length");

  const auto n = ck.subgroup(*a, n_gens, "kernel", true);
  if (!n) return;
  if (!ck.expect(is_normal(*n), "kernel is not normal in the factor")) return;
  const auto q = quotient(*a, *n);
  const bool in_class = class_member(q.group, k);
  ck.expect(in_class, "factor modulo kernel is not in class " + k.str());
  ck.expect(claimed_qorder == q.group->order(), "quotient order disagrees");

  if (which == "alternating") {
    ck.expect(s >= 2, "alternating case needs reduced length at least 2");
    ck.expect(!claimed_e.has_value(), "alternating case carries no factor element");
    if (ck.expect(syllable_gens.size() == s && input_form.tail.size() == s, "need one kernel per syllable")) {
      Subgroup meet = whole_group(*a);
      const auto kernels = kernels_in_class(*a, k);
      for (std::size_t i = 0; i < s; ++i) {
        const auto ni = ck.subgroup(*a, syllable_gens[i], "syllable kernel", true);
        if (!ni) return;
        const bool normal = ck.expect(is_normal(*ni), "syllable kernel " + std::to_string(i + 1) + " is not normal");
        if (normal) {
          ck.expect(class_member(quotient(*a, *ni).group, k),
                    "syllable kernel " + std::to_string(i + 1) + " has quotient outside the class");
        }
        const auto x = A.index_of(input_form.tail[i].second);
        ck.expect(!join(*h, *ni).contains(x), "syllable " + std::to_string(i + 1) + " lies in H N_i");
        const auto first = first_witness(kernels, &*h, x);
        ck.expect(first && *first == *ni, "syllable kernel " + std::to_string(i + 1) + " is not the least witness");
        meet = intersect(meet, *ni);
      }
      ck.expect(meet == *n, "kernel is not the intersection of the syllable kernels");
    }
  } else if (which == "in_factor") {
    ck.expect(s <= 1, "factor case needs reduced length at most 1");
    ck.expect(syllable_gens.empty(), "factor case carries no syllable kernels");
    Perm e = input_form.head;
    if (!input_form.tail.empty()) e = e * input_form.tail.front().second;
    if (ck.expect(claimed_e.has_value() && *claimed_e == e, "factor element disagrees with the input form")) {
      ck.expect(!n->contains(e), "factor element lies in the kernel");
      const auto first = first_witness(kernels_in_class(*a, k), nullptr, A.index_of(e));
      ck.expect(first && *first == *n, "kernel is not the least class kernel missing the factor element");
    }
  } else {
    ck.failures.push_back("unknown case '" + which + "'");
    return;
  }

  // Image in the power of A/N over HN/N.
  const auto& Q = *q.group;
  std::vector<Perm> hn_gens;
  for (const auto& p : h_gens) hn_gens.push_back(q.projection(p));
  const auto hn = subgroup_from_perms(q.group, hn_gens);
  std::vector<Letter> image_word;
  for (const auto& [c, x] : word) image_word.push_back({c, q.projection.apply(x)});
  const auto image = stack_reduce(Q, hn, image_word);
  // Its degree follows from the kernel, so a mismatch is a failed check.
  ClaimedForm image_form;
  try {
    image_form = read_form(data.at("image_normal_form"), Q.degree(), copies, "data.image_normal_form");
  } catch (const MalformedCertificate& e) {
    ck.failures.push_back(std::string("image normal form does not fit A/N: ") + e.what());
    return;
  }
  std::vector<Letter> claimed_image;
  if (!ck.expect(Q.contains(image_form.head) && hn.contains(Q.index_of(image_form.head)),
                 "image form head lies outside HN/N")) {
    return;
  }
  claimed_image.push_back({0, Q.index_of(image_form.head)});
  for (std::size_t i = 0; i < image_form.tail.size(); ++i) {
    const auto& [c, p] = image_form.tail[i];
    if (!ck.expect(Q.contains(p), "image form syllable outside A/N")) return;
    ck.expect(!hn.contains(Q.index_of(p)), "image form syllable lies in HN/N");
    if (i > 0) ck.expect(image_form.tail[i - 1].first != c, "image form repeats a copy");
    claimed_image.push_back({c, Q.index_of(p)});
  }
  auto idiff = claimed_image;
  const auto iinv = inverse_letters(Q, image_word);
  idiff.insert(idiff.end(), iinv.begin(), iinv.end());
  ck.expect(stack_reduce(Q, hn, idiff).trivial(), "image normal form is not the image of the word");
  ck.expect(!image.trivial(), "image of the word is trivial");
  if (which == "alternating") ck.expect(image.letters.size() == s, "image lost length");

  std::string word_text;
  for (const auto& [c, p] : word_perms) word_text += "(" + std::to_string(c) + ":" + p.cycles() + ")";
  const json expected = {
      {"factor_order", A.order()},
      {"subgroup_order", h->order()},
      {"kernel_order", n->order()},
      {"kernel_normal", true},
      {"quotient_order", Q.order()},
      {"quotient_in_class", in_class},
      {"input_length", s},
      {"image_length", image.letters.size()},
      {"image_nontrivial", !image.trivial()},
      {"note",
       "Q_N is the generalized free power of the class member A/N over HN/N; "
       "such a power is residual in the class, so g survives in a quotient of Q in the class"},
      {"witness_choice", kChoiceRule},
      {"statement", "g = " + word_text + " in the " + std::to_string(copies) + "-fold power of " + describe_group(raw) +
                        " over " + join_cycles(h_gens) + " survives modulo N = " + join_cycles(n_gens) + " in class " +
                        k.str()}};
  ck.claims_equal(claims, expected);
}

// --- free_word -----------------------------------------------------------

void check_free_word(Checker& ck, const RootClassSpec& k, const json& inputs, const json& data, const json& claims) {
  object_with(inputs, {"word"}, "inputs");
  if (!inputs.at("word").is_string()) malformed("inputs.word must be a string");
  const auto text = inputs.at("word").get<std::string>();
  const auto parsed = parse_free_word(text);
  if (!parsed) malformed("inputs.word is not a free word");
  std::vector<int> word;
  for (int l : *parsed) {
    if (!word.empty() && word.back() == -l) {
      word.pop_back();
    } else {
      word.push_back(l);
    }
  }
  object_with(data, {"rank", "degree", "modulus", "monomial", "coefficient"}, "data");
  const auto rank = read_count(data.at("rank"), "data.rank");
  const auto d = read_count(data.at("degree"), "data.degree");
  const auto modulus_raw = read_int(data.at("modulus"), "data.modulus");
  const auto coeff = read_int(data.at("coefficient"), "data.coefficient");
  if (!data.at("monomial").is_array()) malformed("data.monomial must be an array");
  std::vector<std::int64_t> mono_raw;
  for (const auto& v : data.at("monomial")) mono_raw.push_back(read_int(v, "data.monomial[]"));

  if (!ck.expect(!word.empty(), "the word is freely trivial")) return;
  std::size_t own_rank = 0;
  for (int l : word) own_rank = std::max(own_rank, static_cast<std::size_t>(std::abs(l)));
  ck.expect(rank == own_rank, "rank disagrees with the word");
  if (!ck.expect(modulus_raw >= 0 && (modulus_raw == 0 || is_prime(static_cast<unsigned long long>(modulus_raw))),
                 "modulus must be 0 or a prime")) {
    return;
  }
  const auto modulus = static_cast<std::uint32_t>(modulus_raw);
  switch (k.kind()) {
    case RootClassSpec::Kind::FiniteP: ck.expect(modulus == k.prime(), "modulus differs from the class prime"); break;
    case RootClassSpec::Kind::AllFinite: ck.expect(modulus != 0, "class finite needs a prime modulus"); break;
    case RootClassSpec::Kind::FiniteSolvable: break;
  }
  if (!ck.expect(d >= 1 && d <= 12, "degree out of the verifiable range")) return;
  if (!ck.expect(mono_raw.size() == d, "witness monomial does not have the stated degree")) return;
  std::vector<std::size_t> mono;
  for (auto v : mono_raw) {
    if (!ck.expect(v >= 1 && static_cast<std::size_t>(v) <= own_rank, "witness monomial uses a missing variable")) return;
    mono.push_back(static_cast<std::size_t>(v - 1));
  }
  std::size_t work = 0, layer = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    layer *= own_rank;
    work += layer;
  }
  if (!ck.expect(work <= 2'000'000, "too many monomials to re-derive")) return;

  // Every lower-degree coefficient vanishes; in degree d every monomial
  // before the witness vanishes and the witness does not.
  bool minimal = true;
  std::vector<std::size_t> m;
  for (std::size_t deg = 1; deg <= d && minimal; ++deg) {
    m.assign(deg, 0);
    while (true) {
      if (deg == d && m == mono) break;
      const auto c = word_coefficient(word, m, modulus);
      if (!ck.expect(c.has_value(), "coefficient overflow")) return;
      if (*c != 0) {
        minimal = false;
        break;
      }
      std::size_t pos = deg;
      while (pos > 0 && ++m[pos - 1] == own_rank) m[--pos] = 0;
      if (pos == 0) break;
    }
  }
  ck.expect(minimal, "a coefficient before the witness is nonzero");
  const auto c = word_coefficient(word, mono, modulus);
  if (!ck.expect(c.has_value(), "coefficient overflow")) return;
  ck.expect(*c != 0, "witness coefficient is zero");
  ck.expect(*c == coeff, "witness coefficient is " + std::to_string(*c) + ", claimed " + std::to_string(coeff));

  json expected = {{"image_nontrivial", *c != 0},
                   {"minimal_degree", d},
                   {"statement", "the image of " + text + " under x_i -> 1 + t_i is not 1 modulo degree " +
                                     std::to_string(d + 1)}};
  if (modulus == 0) {
    expected["target"] = "torsion-free nilpotent";
    expected["nilpotency_class_at_most"] = d;
  } else {
    expected["target"] = "finite p-group";
    expected["prime"] = modulus;
    expected["order_exponent"] = work;
  }
  ck.claims_equal(claims, expected);
}

// --- closedness_witness --------------------------------------------------

void check_closedness(Checker& ck, const RootClassSpec& k, const json& inputs, const json& data, const json& claims) {
  object_with(inputs, {"group", "subgroup"}, "inputs");
  const auto raw = read_group(inputs.at("group"), "inputs.group");
  const auto h_gens = read_perms(inputs.at("subgroup"), raw.degree, "inputs.subgroup");
  object_with(data, {"element", "kernel_generators"}, "data");
  const auto elt = read_perm(data.at("element"), raw.degree, "data.element");
  const auto n_gens = read_perms(data.at("kernel_generators"), raw.degree, "data.kernel_generators");

  const auto a = ck.build(raw, "group");
  if (!a) return;
  const auto h = ck.subgroup(*a, h_gens, "subgroup", true);
  const auto n = ck.subgroup(*a, n_gens, "kernel", true);
  if (!h || !n) return;
  if (!ck.expect((*a)->contains(elt), "element lies outside the group")) return;
  ck.expect(!h->contains(elt), "element lies in the subgroup");
  const bool normal = ck.expect(is_normal(*n), "kernel is not normal");
  bool in_class = false;
  if (normal) in_class = ck.expect(class_member(quotient(*a, *n).group, k), "quotient is not in class " + k.str());
  const auto hn = join(*h, *n);
  const bool outside = ck.expect(!hn.contains(elt), "element lies in H N");
  if (!h->contains(elt)) {
    const auto first = first_witness(kernels_in_class(*a, k), &*h, (*a)->index_of(elt));
    ck.expect(first && *first == *n, "kernel is not the least witness");
  }
  const json expected = {{"factor_order", (*a)->order()},
                         {"subgroup_order", h->order()},
                         {"kernel_order", n->order()},
                         {"kernel_normal", normal},
                         {"quotient_order", (*a)->order() / n->order()},
                         {"quotient_in_class", in_class},
                         {"product_order", hn.order()},
                         {"element_outside_product", outside},
                         {"witness_choice", kChoiceRule},
                         {"statement", elt.cycles() + " lies outside " + join_cycles(h_gens) + " N for N = " +
                                           join_cycles(n_gens) + " in " + describe_group(raw) + ", class " + k.str()}};
  ck.claims_equal(claims, expected);
}

}  // namespace

json SeparationCertificate::to_json() const {
  return {{"format_version", kFormatVersion},
          {"kind", to_string(kind)},
          {"class", cls.str()},
          {"inputs", inputs},
          {"data", data},
          {"claims", claims}};
}

std::string SeparationCertificate::serialize() const { return to_json().dump(2) + "\n"; }

SeparationCertificate SeparationCertificate::from_json(const json& j) {
  object_with(j, {"format_version", "kind", "class", "inputs", "data", "claims"}, "certificate");
  if (read_int(j.at("format_version"), "format_version") != kFormatVersion) malformed("unsupported format_version");
  if (!j.at("kind").is_string()) malformed("kind must be a string");
  if (!j.at("class").is_string()) malformed("class must be a string");
  SeparationCertificate c;
  c.kind = kind_from_string(j.at("kind").get<std::string>());
  try {
    c.cls = RootClassSpec::parse(j.at("class").get<std::string>());
  } catch (const InputError& e) {
    malformed(std::string("class: ") + e.what());
  }
  c.inputs = j.at("inputs");
  c.data = j.at("data");
  c.claims = j.at("claims");
  return c;
}

VerificationReport check_certificate(const json& j) {
  const auto cert = SeparationCertificate::from_json(j);
  Checker ck;
  try {
    switch (cert.kind) {
      case CertificateKind::PowerStage: check_power_stage(ck, cert.cls, cert.inputs, cert.data, cert.claims); break;
      case CertificateKind::FreeWord: check_free_word(ck, cert.cls, cert.inputs, cert.data, cert.claims); break;
      case CertificateKind::ClosednessWitness: check_closedness(ck, cert.cls, cert.inputs, cert.data, cert.claims); break;
    }
  } catch (const MalformedCertificate&) {
    throw;
  } catch (const Error& e) {
    ck.failures.push_back(e.what());
  }
  return {ck.failures.empty(), std::move(ck.failures)};
}

bool verify_certificate(const json& j) { return check_certificate(j).accepted; }

bool verify_certificate(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("not JSON: ") + e.what());
  }
  return verify_certificate(j);
}

}  // namespace rootres
