#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rootres/amalgam.hpp"
#include "rootres/perm_group.hpp"

namespace rootres::io {

using nlohmann::json;

json perm_to_json(const Perm& p);
// A 1-based image array of length `degree`.
Perm perm_from_json(const json& j, std::size_t degree);

// {"degree": n, "generators": {"name": [i1..in], ...}}
json group_to_json(const PermGroup& g);
GroupPtr group_from_json(const json& j);

// Group element given as an image array, cycle notation "(1 2)" or a word
// over the named generators such as "a b^-1 a^2" ("id" is the identity).
Perm element_from_json(const PermGroup& g, const json& j);
Perm eval_generator_word(const PermGroup& g, std::string_view word);

// Catalog name, or a path to a group file.
GroupPtr resolve_group(std::string_view ref);
// Catalog subgroup name of `group_ref`, or a comma-separated list of
// permutations in cycle notation: "(1 2), (1 2 3)".
Subgroup resolve_subgroup(const GroupPtr& g, std::string_view group_ref, std::string_view ref);
// String (as for resolve_subgroup) or an array of element specs.
std::vector<Perm> subgroup_generators_from_json(const GroupPtr& g, std::string_view group_ref,
                                                const json& j);

// [{"copy": l, "elt": <element spec>}, ...]
Word word_from_json(const AmalgamScheme& s, const json& j);
json word_to_json(const Word& w);
// Inline form "(0:a b)(1:a^-1)"; empty text is the identity word.
Word parse_inline_word(const AmalgamScheme& s, std::string_view text);
// Inline form or a path to a word file.
Word resolve_word(const AmalgamScheme& s, std::string_view ref);

json normal_form_to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const json& j, std::size_t head_degree,
                                 const std::vector<std::size_t>& copy_degrees);

// {"power": n, "group": G, "subgroup": S} or
// {"factors": [{"group": G, "subgroup": S}, ...],
//  "isos": [{"from": l, "to": m, "images": [...]}, ...]}
AmalgamScheme scheme_from_json(const json& j);
// "power:<n>:<group>:<subgroup>" or a path to a scheme file.
AmalgamScheme resolve_scheme(std::string_view ref);
// Power scheme with the base group and the subgroup generators inline.
json power_scheme_to_json(const AmalgamScheme& s);

// Throws InputError carrying the parser's byte position.
json parse_json_text(std::string_view text, std::string_view origin);
json read_json_file(const std::filesystem::path& path);

}  // namespace rootres::io
