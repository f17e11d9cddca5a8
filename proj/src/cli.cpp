#include "rootres/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rootres/amalgam.hpp"
#include "rootres/certificate.hpp"
#include "rootres/error.hpp"
#include "rootres/io.hpp"
#include "rootres/residuality.hpp"
#include "rootres/sweep.hpp"

namespace rootres {

namespace {

using nlohmann::json;

void emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
  if (!f) throw InputError("write to '" + path + "' failed");
}

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

struct Options {
  std::string group, subgroup, cls = "finite", scheme, word, out, cert;
  std::size_t max_order = 24;
  std::size_t cap = kDefaultOrderCap;
  std::size_t max_degree = 8;
  std::optional<std::uint32_t> modulus;
};

int cmd_closed(const Options& o, std::ostream& out) {
  const auto g = io::resolve_group(o.group);
  const auto h = io::resolve_subgroup(g, o.group, o.subgroup);
  const auto r = is_k_closed(g, h, RootClassSpec::parse(o.cls));
  emit(out, pretty(r.to_json()), o.out);
  return r.closed ? 0 : 1;
}

int cmd_separate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto s = io::resolve_scheme(o.scheme);
  const auto w = io::resolve_word(s, o.word);
  const auto k = RootClassSpec::parse(o.cls);
  try {
    emit(out, separate_in_power(s, w, k).serialize(), o.out);
  } catch (const HypothesisFailure& e) {
    err << "hypothesis failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int cmd_separate_free(const Options& o, std::ostream& out, std::ostream& err) {
  const auto w = FreeWord::parse(o.word);
  const auto k = RootClassSpec::parse(o.cls);
  try {
    emit(out, separate_free_word_certificate(w, k, o.modulus, o.max_degree).serialize(), o.out);
  } catch (const HypothesisFailure& e) {
    err << "hypothesis failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  json j;
  try {
    j = json::parse(read_text(o.cert));
  } catch (const json::parse_error& e) {
    throw MalformedCertificate(std::string("not JSON: ") + e.what());
  }
  const json list = j.is_array() ? j : json::array({j});
  if (list.empty()) throw MalformedCertificate("empty certificate list");
  bool all = true;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto r = check_certificate(list[i]);
    all = all && r.accepted;
    out << "certificate " << i << ": " << (r.accepted ? "accepted" : "rejected") << "\n";
    for (const auto& f : r.failures) out << "  " << f << "\n";
  }
  return all ? 0 : 1;
}

int cmd_axioms(const Options& o, std::ostream& out) {
  if (o.max_order > o.cap) throw InputError("--max-order exceeds --cap");
  const auto r = sweep_axioms(RootClassSpec::parse(o.cls), o.max_order);
  emit(out, pretty(r.to_json()), o.out);
  return r.passed() ? 0 : 1;
}

int cmd_normal_form(const Options& o, std::ostream& out) {
  const auto s = io::resolve_scheme(o.scheme);
  const auto nf = reduce(s, io::resolve_word(s, o.word));
  json j = io::normal_form_to_json(nf);
  json cycles = json::array();
  for (const auto& syl : nf.tail) cycles.push_back(std::to_string(syl.copy) + ":" + syl.elt.cycles());
  j["head_cycles"] = nf.head.cycles();
  j["tail_cycles"] = cycles;
  emit(out, pretty(j), o.out);
  return 0;
}

int cmd_core(const Options& o, std::ostream& out) {
  const auto g = io::resolve_group(o.group);
  const auto c = residual_core(g, RootClassSpec::parse(o.cls));
  json gens = json::array();
  for (const auto& p : c.core.generator_perms()) gens.push_back(p.cycles());
  const json j = {{"class", c.cls.str()},
                  {"group_order", g->order()},
                  {"core_order", c.core.order()},
                  {"core_generators", gens},
                  {"residual", c.residual()}};
  emit(out, pretty(j), o.out);
  return c.residual() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root-class residuality toolkit for finite groups and their amalgams"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--cap", o.cap, "order cap for every group closure")->check(CLI::PositiveNumber);

  auto* closed = app.add_subcommand("closed", "decide whether a subgroup is closed for the class");
  closed->add_option("--group", o.group, "catalog name or group file")->required();
  closed->add_option("--subgroup", o.subgroup, "catalog subgroup name or \"(1 2), (1 3)\"")->required();
  closed->add_option("--class", o.cls, "finite | p:<prime> | solvable");
  closed->add_option("--out", o.out, "report path (default stdout)");

  auto* separate = app.add_subcommand("separate", "certify a word of a generalized free power");
  separate->add_option("--scheme", o.scheme, "power:<n>:<group>:<subgroup> or scheme file")->required();
  separate->add_option("--word", o.word, "inline word \"(0:a)(1:b)\" or word file")->required();
  separate->add_option("--class", o.cls, "finite | p:<prime> | solvable");
  separate->add_option("--out", o.out, "certificate path (default stdout)");

  auto* free = app.add_subcommand("separate-free", "certify a free-group word through a truncated series ring");
  free->add_option("--word", o.word, "word such as \"x1 x2^-1\"")->required();
  free->add_option("--class", o.cls, "finite | p:<prime> | solvable");
  free->add_option("--modulus", o.modulus, "coefficient modulus: a prime, or 0 for integers");
  free->add_option("--max-degree", o.max_degree, "largest truncation degree tried");
  free->add_option("--out", o.out, "certificate path (default stdout)");

  auto* verify = app.add_subcommand("verify", "re-check a certificate (or an array of them)");
  verify->add_option("certificate", o.cert, "certificate file")->required();

  auto* axioms = app.add_subcommand("axioms", "sweep the catalog for the root-class conditions");
  axioms->add_option("--class", o.cls, "finite | p:<prime> | solvable");
  axioms->add_option("--max-order", o.max_order, "largest group order swept");
  axioms->add_option("--out", o.out, "report path (default stdout)");

  auto* nf = app.add_subcommand("normal-form", "reduce a word to its canonical form");
  nf->add_option("--scheme", o.scheme, "power:<n>:<group>:<subgroup> or scheme file")->required();
  nf->add_option("--word", o.word, "inline word or word file")->required();
  nf->add_option("--out", o.out, "output path (default stdout)");

  auto* core = app.add_subcommand("core", "print the residual core of a group");
  core->add_option("--group", o.group, "catalog name or group file")->required();
  core->add_option("--class", o.cls, "finite | p:<prime> | solvable");
  core->add_option("--out", o.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto saved_cap = default_order_cap();
  set_default_order_cap(o.cap);
  int code = 2;
  try {
    if (*closed) code = cmd_closed(o, out);
    else if (*separate) code = cmd_separate(o, out, err);
    else if (*free) code = cmd_separate_free(o, out, err);
    else if (*verify) code = cmd_verify(o, out);
    else if (*axioms) code = cmd_axioms(o, out);
    else if (*nf) code = cmd_normal_form(o, out);
    else if (*core) code = cmd_core(o, out);
  } catch (const MalformedCertificate& e) {
    err << "malformed certificate: " << e.what() << "\n";
    code = 2;
  } catch (const CapExceeded& e) {
    err << "order cap exceeded: " << e.what() << "\n";
    code = 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    code = 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = 2;
  }
  set_default_order_cap(saved_cap);
  return code;
}

}  // namespace rootres
