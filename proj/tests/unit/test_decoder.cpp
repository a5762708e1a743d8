#include <gtest/gtest.h>

#include "gselfies/decoder.h"
#include "gselfies/isomorphism.h"
#include "gselfies/perception.h"
#include "gselfies/smiles.h"

using namespace gselfies;

namespace {

GroupSet benzene_set() {
  GroupSet set;
  set.add(make_group("benzene", "c1(*1)c(*1)c(*1)c(*1)c(*1)c1*1"));
  return set;
}

bool same(const MolGraph &g, const char *smiles) { return isomorphic(g, parse_molecule(smiles)); }

}  // namespace

TEST(Decoder, BondDemotion) {
  DecodeReport report;
  MolGraph g = decode("[C][O][=C]", GroupSet{}, &report);
  ASSERT_EQ(g.num_atoms(), 3);
  ASSERT_EQ(g.num_bonds(), 2);
  for (const auto &b : g.bonds()) EXPECT_EQ(b.order, 1);
  EXPECT_EQ(g.atom(1).element, Element::kO);
  EXPECT_TRUE(same(g, "COC"));
  EXPECT_EQ(report.demoted_bonds, 1);
}

TEST(Decoder, Linear) {
  EXPECT_TRUE(same(decode("[C][C][=O]", GroupSet{}), "CC=O"));
  EXPECT_TRUE(same(decode("[C][#N]", GroupSet{}), "C#N"));
  EXPECT_TRUE(same(decode("[N+1][O-1]", GroupSet{}), "[N+][O-]"));
  EXPECT_TRUE(decode("", GroupSet{}).empty());
}

TEST(Decoder, Cyclohexane) {
  // [#Branch] reads as digit 5: the ring closes back to the first carbon.
  MolGraph g = decode("[C][C][C][C][C][C][Ring1][#Branch]", GroupSet{});
  EXPECT_TRUE(same(g, "C1CCCCC1"));
  EXPECT_EQ(ring_count(g), 1);
}

TEST(Decoder, RingForward) {
  // From the first carbon, forward by 5.
  MolGraph g = decode("[C][Ring1][->][#Branch][C][C][C][C][C]", GroupSet{});
  EXPECT_TRUE(same(g, "C1CCCCC1"));
}

TEST(Decoder, Branch) {
  EXPECT_TRUE(same(decode("[C][Branch][O][pop][N]", GroupSet{}), "C(O)N"));
  EXPECT_TRUE(same(decode("[C][Branch][=O][pop][O]", GroupSet{}), "C(=O)O"));
}

TEST(Decoder, LoneGroupToken) {
  MolGraph g = decode("[:0benzene]", benzene_set());
  EXPECT_TRUE(same(g, "c1ccccc1"));
  EXPECT_EQ(perceive_aromatic_atoms(g).size(), 6u);
}

TEST(Decoder, GroupAttachments) {
  // Enter at attachment 0; the next token is read as an index offset.
  EXPECT_TRUE(same(decode("[C][:0benzene][Branch][C]", benzene_set()), "Cc1ccc(C)cc1"));
  EXPECT_TRUE(same(decode("[C][:0benzene][Ring2][C]", benzene_set()), "Cc1cccc(C)c1"));
  // Digit 0 lands on the occupied entry and advances to the next free one.
  EXPECT_TRUE(same(decode("[C][:0benzene][C][C]", benzene_set()), "Cc1ccccc1C"));
  // Pop in index position leaves the group.
  EXPECT_TRUE(same(decode("[C][:0benzene][pop][O]", benzene_set()), "Cc1ccccc1"));
}

TEST(Decoder, PopOnEmptyStack) {
  DecodeReport report;
  MolGraph g = decode("[pop][C][pop][O]", GroupSet{}, &report);
  EXPECT_TRUE(same(g, "CO"));
  EXPECT_EQ(report.ignored_tokens, 2);
}

TEST(Decoder, UnknownGroup) {
  DecodeReport report;
  MolGraph g = decode("[C][:0missing][O]", GroupSet{}, &report);
  EXPECT_TRUE(same(g, "CO"));
  EXPECT_EQ(report.unknown_groups, 1);
}

TEST(Decoder, Unlexable) {
  DecodeReport report;
  MolGraph g = decode("[C]xx[Zz][O]", GroupSet{}, &report);
  EXPECT_TRUE(same(g, "CO"));
  EXPECT_EQ(report.lex_skipped, 2);
}

TEST(Decoder, ValenceExhausted) {
  DecodeReport report;
  MolGraph g = decode("[F][F][C][O]", GroupSet{}, &report);
  EXPECT_TRUE(same(g, "FF"));
  EXPECT_EQ(report.skipped_atoms, 2);
  EXPECT_TRUE(validate(g).empty());
}

TEST(Decoder, RingDropped) {
  DecodeReport report;
  MolGraph g = decode("[C][C][Ring1][C]", GroupSet{}, &report);
  EXPECT_TRUE(same(g, "CC"));  // span 0 and the duplicate bond are both rejected
  EXPECT_EQ(report.dropped_rings, 1);
}
