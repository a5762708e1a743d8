#include "gselfies/api.h"

#include "gselfies/decoder.h"
#include "gselfies/encoder.h"
#include "gselfies/group.h"
#include "gselfies/sampler.h"
#include "gselfies/smiles.h"

namespace gselfies::api {
namespace {

GroupSet groups(std::string_view json) {
  return json.empty() ? GroupSet{} : groupset_from_json(json);
}

}  // namespace

std::string load_groupset(const std::string &path) {
  return groupset_to_json(gselfies::load_groupset(path));
}

std::string encode(std::string_view smiles, std::string_view groups_json) {
  return detokenize(gselfies::encode(parse_molecule(smiles), groups(groups_json)));
}

std::string decode(std::string_view tokens, std::string_view groups_json) {
  return write_smiles(gselfies::decode(tokens, groups(groups_json)));
}

std::string expand_groups(std::string_view tokens, std::string_view groups_json) {
  return detokenize(
      gselfies::expand_groups(tokenize_robust(tokens).tokens, groups(groups_json)));
}

std::string sample(std::string_view corpus, std::string_view groups_json, int n,
                   std::uint64_t seed) {
  GroupSet set = groups(groups_json);
  TokenBag bag = build_bag(read_corpus_text(corpus).molecules(), set);
  std::string out;
  for (const auto &s : gselfies::sample(bag, set, n, seed))
    out += write_smiles(s.molecule) + "\t" + detokenize(s.tokens) + "\n";
  return out;
}

}  // namespace gselfies::api
