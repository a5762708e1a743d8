#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "gselfies/decoder.h"
#include "gselfies/encoder.h"
#include "gselfies/isomorphism.h"
#include "gselfies/smiles.h"
#include "oracles.h"

using namespace gselfies;

namespace {

const char *kCelecoxib = "Cc1ccc(cc1)-c1cc(nn1-c1ccc(cc1)S(N)(=O)=O)C(F)(F)F";

GroupSet fixture_set() {
  return load_groupset(std::string(GSELFIES_TEST_DATA_DIR) + "/celecoxib_groups.json");
}

std::vector<std::vector<int>> mapped(const std::vector<GroupMatch> &ms) {
  std::vector<std::vector<int>> out;
  for (const auto &m : ms) out.push_back(m.atoms);
  return out;
}

void expect_roundtrip(const MolGraph &m, const GroupSet &set) {
  auto tokens = encode(m, set);
  MolGraph back = decode(tokens, set);
  EXPECT_TRUE(isomorphic(back, m)) << write_smiles(m) << " -> " << detokenize(tokens);
}

}  // namespace

TEST(Matcher, Toluene) {
  GroupSet set = fixture_set();
  auto mol = parse_molecule(kCelecoxib);
  auto emb = find_embeddings(mol, *set.find("toluene"));
  ASSERT_EQ(emb.size(), 1u);
  EXPECT_EQ(emb[0].atoms[0], 0);  // the methyl carbon
  // Benzene cannot sit on the pyrazole; it matches both phenyl rings.
  EXPECT_EQ(find_embeddings(mol, *set.find("benzene")).size() % 2, 0u);
  EXPECT_TRUE(find_embeddings(parse_molecule("CCCC"), *set.find("benzene")).empty());
}

TEST(Matcher, InducedOnly) {
  // Cyclopropane contains the C-C-C path but not as an induced subgraph.
  Group path = make_group("path", "C(*1)(*1)C(*1)(*1)C(*1)*1");
  EXPECT_TRUE(find_embeddings(parse_molecule("C1CC1"), path).empty());
  EXPECT_FALSE(find_embeddings(parse_molecule("CCC"), path).empty());
}

TEST(Matcher, AttachmentCapacity) {
  Group methyl = make_group("m", "C*1");
  EXPECT_TRUE(find_embeddings(parse_molecule("C=C"), methyl).empty());  // order 2 > cap 1
  EXPECT_EQ(find_embeddings(parse_molecule("CC"), methyl).size(), 2u);
  Group wide = make_group("w", "C*2");
  EXPECT_EQ(find_embeddings(parse_molecule("C=C"), wide).size(), 2u);
  // One bond per attachment: a *2 point cannot host two single bonds.
  EXPECT_TRUE(find_embeddings(parse_molecule("CC(C)C"), make_group("c", "C(C)*2")).empty());
}

TEST(Matcher, AgreesWithBruteForce) {
  std::mt19937_64 rng(2024);
  int instances = 0, hits = 0;
  while (instances < 1500) {
    MolGraph mol = oracle::random_molecule(rng, 2 + static_cast<int>(rng() % 7));
    MolGraph source = rng() % 4 ? mol : oracle::random_molecule(rng, 2 + static_cast<int>(rng() % 7));
    auto g = oracle::random_template(source, rng, 5, rng() % 5 == 0);
    if (!g) continue;
    ++instances;
    auto expect = oracle::brute_embeddings(mol, *g);
    hits += !expect.empty();
    ASSERT_EQ(mapped(find_embeddings(mol, *g)), expect)
        << write_smiles(mol) << " template " << g->template_text;
  }
  EXPECT_GT(hits, 500);
}

TEST(Matcher, GreedyDisjoint) {
  GroupSet set;
  set.add(make_group("eth", "C(*1)C*1"));
  auto ms = match_groups(parse_molecule("CCCCC"), set);
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(ms[0].atoms, (std::vector<int>{0, 1}));
  EXPECT_EQ(ms[1].atoms, (std::vector<int>{2, 3}));
}

TEST(Encoder, Celecoxib) {
  GroupSet set = fixture_set();
  auto mol = parse_molecule(kCelecoxib);
  auto tokens = encode(mol, set);
  int groups = 0;
  for (const auto &t : tokens) groups += t.kind == TokenKind::kGroup;
  EXPECT_EQ(groups, 4) << detokenize(tokens);
  // The CF3 group token is followed directly by [pop], read as its exit.
  auto it = std::find_if(tokens.begin(), tokens.end(), [](const Token &t) {
    return t.kind == TokenKind::kGroup && t.name == "trifluoromethane";
  });
  ASSERT_NE(it, tokens.end());
  ASSERT_NE(it + 1, tokens.end());
  EXPECT_EQ((it + 1)->kind, TokenKind::kPop);
  DecodeReport report;
  EXPECT_TRUE(isomorphic(decode(tokens, set, &report), mol));
  EXPECT_EQ(report.total(), 0);
}

TEST(Encoder, EmptySetIsAtomic) {
  for (const Token &t : encode(parse_molecule(kCelecoxib), GroupSet{}))
    EXPECT_NE(t.kind, TokenKind::kGroup);
  EXPECT_TRUE(encode(MolGraph{}, GroupSet{}).empty());
}

TEST(Encoder, RoundTripSmall) {
  GroupSet set = fixture_set();
  for (const char *s : {"C", "CC", "C=C", "C#N", "C1CC1", "c1ccccc1", "C1CCCCC1", "CC(C)(C)C",
                        "O=C(O)c1ccccc1", "c1ccc2ccccc2c1", "C1CC2CCC1CC2", "[NH4+]", "[O-]C=O",
                        "FC(F)(F)c1ccc(C(F)(F)F)cc1", "Cc1ccc(C)cc1", "C/C=C/C", "C12C3C4C1C5C2C3C45"})
    expect_roundtrip(parse_molecule(s), set);
}

TEST(Encoder, RoundTripRandom) {
  std::mt19937_64 rng(99);
  GroupSet set;
  set.add(make_group("eth", "C(*1)C*1"));
  set.add(make_group("carbonyl", "C(=O)(*1)*1"));
  for (int i = 0; i < 500; ++i) {
    auto m = oracle::random_molecule(rng, 1 + static_cast<int>(rng() % 12));
    expect_roundtrip(m, GroupSet{});
    expect_roundtrip(m, set);
  }
}

TEST(Encoder, Deterministic) {
  std::mt19937_64 rng(5);
  GroupSet set = fixture_set();
  auto m = parse_molecule("CC(=O)Nc1ccc(O)cc1");
  EXPECT_EQ(encode(m, set), encode(m, set));
  // Relabelled input may pick another embedding, but decodes the same.
  auto p = oracle::permuted(m, rng);
  EXPECT_TRUE(isomorphic(decode(encode(p, set), set), decode(encode(m, set), set)));
}

TEST(Encoder, Errors) {
  MolGraph two = parse_molecule("C.C");
  EXPECT_THROW(encode(two, GroupSet{}), EncodeError);
  MolGraph bad;
  Atom f;
  f.element = Element::kF;
  bad.add_atom(f);
  bad.add_atom(f);
  bad.add_atom(f);
  bad.add_bond(0, 1, 1);
  bad.add_bond(1, 2, 1);
  EXPECT_THROW(encode(bad, GroupSet{}), EncodeError);
}

TEST(Expand, AtomicEquivalent) {
  GroupSet set = fixture_set();
  auto tokens = encode(parse_molecule(kCelecoxib), set);
  auto flat = expand_groups(tokens, set);
  for (const Token &t : flat) EXPECT_NE(t.kind, TokenKind::kGroup);
  EXPECT_TRUE(isomorphic(decode(flat, GroupSet{}), decode(tokens, set)));
  EXPECT_THROW(expand_groups(tokenize("[C][:0nope]"), set), EncodeError);
}

TEST(Expand, Substring) {
  // A fragment of an encoding is still a valid string and expands cleanly.
  GroupSet set = fixture_set();
  auto tokens = encode(parse_molecule(kCelecoxib), set);
  std::vector<Token> part(tokens.begin() + 3, tokens.end() - 2);
  EXPECT_TRUE(isomorphic(decode(expand_groups(part, set), GroupSet{}), decode(part, set)));
}
