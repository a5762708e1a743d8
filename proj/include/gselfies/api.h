#pragma once

// String-in/string-out surface for foreign-language bindings. Molecules are
// SMILES, token streams are bracket strings, group sets are JSON text.
// Errors surface as the primary exception types (GroupError, SmilesError,
// EncodeError). No state is shared between calls.

#include <cstdint>
#include <string>
#include <string_view>

namespace gselfies::api {

// Validates and returns the canonical JSON of the group set in |path|.
std::string load_groupset(const std::string &path);

// |groups_json| may be empty for the empty group set.
std::string encode(std::string_view smiles, std::string_view groups_json = {});
std::string decode(std::string_view tokens, std::string_view groups_json = {});
std::string expand_groups(std::string_view tokens, std::string_view groups_json);

// |corpus| is SMILES[<ws>id] per line; returns "SMILES\ttokens\n" per draw,
// the same bytes as `gselfies sample --out`.
std::string sample(std::string_view corpus, std::string_view groups_json, int n,
                   std::uint64_t seed);

}  // namespace gselfies::api
