#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "gselfies/group.h"
#include "gselfies/smiles.h"

using namespace gselfies;

TEST(Group, Names) {
  EXPECT_TRUE(valid_group_name("benzene"));
  EXPECT_TRUE(valid_group_name("g12"));
  EXPECT_FALSE(valid_group_name(""));
  EXPECT_FALSE(valid_group_name("1abc"));
  EXPECT_FALSE(valid_group_name("g_12"));
  EXPECT_FALSE(valid_group_name("has space"));
  EXPECT_FALSE(valid_group_name("a]"));
}

TEST(Group, MakeValid) {
  Group g = make_group("benzene", "c1(*1)c(*1)c(*1)c(*1)c(*1)c1*1");
  EXPECT_EQ(g.templ.num_atoms(), 6);
  EXPECT_EQ(g.attachments.size(), 6u);
  for (std::size_t i = 0; i < g.attachments.size(); ++i)
    EXPECT_EQ(g.attachments[i].attachment_index, static_cast<int>(i));
}

TEST(Group, MakeInvalid) {
  EXPECT_THROW(make_group("bad name", "C*1"), GroupError);
  EXPECT_THROW(make_group("x", "CC"), GroupError);              // no attachment
  EXPECT_THROW(make_group("x", "C(F)(F)(F)(F)*1"), GroupError);   // no free valence
  EXPECT_THROW(make_group("x", "O*3"), GroupError);                 // cap over valence
  EXPECT_NO_THROW(make_group("x", "O*2"));
  // Caps are checked one attachment at a time: alternatives, not a sum.
  EXPECT_NO_THROW(make_group("x", "C(*1)(*1)(F)(F)F"));
  EXPECT_THROW(make_group("x", "C*1.C*1"), GroupError);          // disconnected
  EXPECT_THROW(make_group("x", "C*1", std::nullopt, 16), GroupError);
  EXPECT_THROW(make_group("x", "C(*1"), GroupError);
}

TEST(Group, AttachmentLimit) {
  std::string middle;
  for (int i = 0; i < 6; ++i) middle += "C(*1)(*1)";
  EXPECT_EQ(make_group("x", "C(*1)(*1)" + middle + "C(*1)*1").attachments.size(), 16u);
  EXPECT_THROW(make_group("x", "C(*1)(*1)(*1)" + middle + "C(*1)*1"), GroupError);
}

TEST(GroupSet, DuplicateAndOrder) {
  GroupSet set;
  set.add(make_group("small", "C*1"));
  set.add(make_group("big", "c1ccccc1*1"));
  set.add(make_group("urgent", "O*1", 5));
  EXPECT_THROW(set.add(make_group("small", "N*1")), GroupError);
  std::vector<std::string> order;
  for (const Group *g : set.matching_order()) order.push_back(g->name);
  EXPECT_EQ(order, (std::vector<std::string>{"urgent", "big", "small"}));
  EXPECT_NE(set.find("big"), nullptr);
  EXPECT_EQ(set.find("Big"), nullptr);
}

TEST(GroupSet, JsonRoundTrip) {
  GroupSet set;
  set.add(make_group("benzene", "c1(*1)c(*1)c(*1)c(*1)c(*1)c1*1", std::nullopt, 3));
  set.add(make_group("carbonyl", "C(=O)(*1)*1", 2));
  std::string text = groupset_to_json(set);
  GroupSet back = groupset_from_json(text);
  EXPECT_EQ(back, set);
  EXPECT_EQ(groupset_to_json(back), text);

  auto path = std::filesystem::temp_directory_path() / "gselfies_groups_test.json";
  save_groupset(set, path.string());
  EXPECT_EQ(load_groupset(path.string()), set);
  std::filesystem::remove(path);
}

TEST(GroupSet, JsonErrors) {
  EXPECT_THROW(groupset_from_json("not json"), GroupError);
  EXPECT_THROW(groupset_from_json(R"({"groups": [{"name": "a"}]})"), GroupError);
  EXPECT_THROW(groupset_from_json(R"({"groups": [{"name": "a", "template": "C*1", "x": 1}]})"),
               GroupError);
  EXPECT_THROW(groupset_from_json(
                   R"({"groups": [{"name": "a", "template": "C*1"}, {"name": "a", "template": "N*1"}]})"),
               GroupError);
  EXPECT_THROW(load_groupset("/nonexistent/groups.json"), std::runtime_error);
  EXPECT_TRUE(groupset_from_json(R"({"groups": []})").empty());
}

TEST(GroupSet, Alphabet) {
  GroupSet set;
  set.add(make_group("benzene", "c1(*1)c(*1)c(*1)c(*1)c(*1)c1*1"));
  auto a = alphabet(set);
  for (int i = 0; i < 6; ++i)
    EXPECT_NE(std::find(a.begin(), a.end(), "[:" + std::to_string(i) + "benzene]"), a.end());
  EXPECT_EQ(std::find(a.begin(), a.end(), "[:6benzene]"), a.end());
  for (const char *s : {"[C]", "[=O]", "[N+1]", "[Branch]", "[pop]", "[Ring3]", "[->]"})
    EXPECT_NE(std::find(a.begin(), a.end(), s), a.end()) << s;
  auto sorted = a;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
}
