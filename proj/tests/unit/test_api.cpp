#include <gtest/gtest.h>

#include "gselfies/api.h"
#include "gselfies/group.h"
#include "gselfies/isomorphism.h"
#include "gselfies/smiles.h"

using namespace gselfies;

namespace {

std::string fixture_path() { return std::string(GSELFIES_TEST_DATA_DIR) + "/celecoxib_groups.json"; }

}  // namespace

TEST(Api, LoadGroupset) {
  std::string json = api::load_groupset(fixture_path());
  EXPECT_NE(json.find("\"trifluoromethane\""), std::string::npos);
  EXPECT_EQ(groupset_from_json(json), load_groupset(fixture_path()));
  EXPECT_THROW(api::load_groupset("/nonexistent.json"), std::runtime_error);
}

TEST(Api, DecodeDemotion) {
  EXPECT_TRUE(isomorphic(parse_molecule(api::decode("[C][O][=C]")), parse_molecule("COC")));
}

TEST(Api, RoundTrip) {
  std::string groups = api::load_groupset(fixture_path());
  const char *smiles = "Cc1ccc(cc1)-c1cc(nn1-c1ccc(cc1)S(N)(=O)=O)C(F)(F)F";
  std::string tokens = api::encode(smiles, groups);
  EXPECT_NE(tokens.find("[:0toluene]"), std::string::npos);
  EXPECT_TRUE(isomorphic(parse_molecule(api::decode(tokens, groups)), parse_molecule(smiles)));
  std::string flat = api::expand_groups(tokens, groups);
  EXPECT_EQ(flat.find("[:"), std::string::npos);
  EXPECT_EQ(api::decode(api::encode(smiles)), api::decode(flat));
}

TEST(Api, Errors) {
  EXPECT_THROW(api::encode("C1CC"), SmilesError);
  EXPECT_THROW(api::decode("[C]", R"({"groups": 3})"), GroupError);
}

TEST(Api, Sample) {
  std::string a = api::sample("CCO\nc1ccccc1\n", "", 5, 11);
  EXPECT_EQ(a, api::sample("CCO\nc1ccccc1\n", "", 5, 11));
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 5);
}
