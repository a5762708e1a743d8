#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gselfies/isomorphism.h"
#include "gselfies/molgraph.h"
#include "gselfies/perception.h"
#include "gselfies/smiles.h"
#include "gselfies/valence.h"
#include "oracles.h"

using namespace gselfies;

TEST(Valence, StandardTable) {
  const auto &t = ValenceTable::standard();
  EXPECT_EQ(t.max_valence(Element::kC, 0), 4);
  EXPECT_EQ(t.max_valence(Element::kC, -1), 3);
  EXPECT_EQ(t.max_valence(Element::kN, 1), 4);
  EXPECT_EQ(t.max_valence(Element::kO, -1), 1);
  EXPECT_EQ(t.max_valence(Element::kB, -1), 4);
  EXPECT_EQ(t.max_valence(Element::kS, 0), 6);
  EXPECT_EQ(t.max_valence(Element::kCl, 0), 1);
  EXPECT_FALSE(t.supports(Element::kSe));
}

TEST(Valence, JsonOverride) {
  auto t = ValenceTable::from_json(R"({"C": {"valence": 4, "charge_rule": "absolute"},
                                       "N": {"valence": 5, "charge_rule": "add"},
                                       "Se": 2})");
  EXPECT_EQ(t.max_valence(Element::kN, 0), 5);
  EXPECT_EQ(t.max_valence(Element::kSe, 1), 3);
  EXPECT_EQ(t.max_valence(Element::kO, 0), 2);  // entries overlay the default
  EXPECT_THROW(ValenceTable::from_json("{\"Xx\": 1}"), std::invalid_argument);
}

TEST(MolGraph, RejectsParallelAndSelfBonds) {
  MolGraph g;
  g.add_atom({});
  g.add_atom({});
  g.add_bond(0, 1, 1);
  EXPECT_THROW(g.add_bond(1, 0, 2), std::invalid_argument);
  EXPECT_THROW(g.add_bond(0, 0, 1), std::invalid_argument);
  EXPECT_THROW(g.add_bond(0, 1, 4), std::invalid_argument);
}

TEST(MolGraph, FreeValence) {
  auto g = parse_molecule("C=O");
  EXPECT_EQ(free_valence(g, 0), 2);
  EXPECT_EQ(free_valence(g, 1), 0);
  EXPECT_THROW(free_valence(g, 7), std::out_of_range);
  EXPECT_TRUE(validate(g).empty());
}

TEST(MolGraph, ValidateFlagsOvervalence) {
  MolGraph g;
  Atom o;
  o.element = Element::kO;
  g.add_atom(o);
  g.add_atom(o);
  g.add_bond(0, 1, 3);
  EXPECT_FALSE(validate(g).empty());
}

TEST(MolGraph, Components) {
  auto g = parse_molecule("CC.O.N");
  int count = 0;
  auto comp = connected_components(g, &count);
  EXPECT_EQ(count, 3);
  EXPECT_EQ(comp[1], 0);
  EXPECT_EQ(comp[3], 2);
  EXPECT_FALSE(is_connected(g));
}

TEST(Perception, RingsAndBridges) {
  auto g = parse_molecule("C1CCCC1CC1CC1");
  auto rb = ring_bonds(g);
  EXPECT_EQ(std::count(rb.begin(), rb.end(), true), 8);
  EXPECT_EQ(ring_count(g), 2);
  EXPECT_EQ(ring_count(parse_molecule("c1ccc2ccccc2c1")), 2);
}

TEST(Perception, AromaticAtoms) {
  EXPECT_EQ(perceive_aromatic_atoms(parse_molecule("c1ccccc1")).size(), 6u);
  EXPECT_EQ(perceive_aromatic_atoms(parse_molecule("c1cc[nH]c1")).size(), 5u);
  EXPECT_EQ(perceive_aromatic_atoms(parse_molecule("c1ccoc1")).size(), 5u);
  EXPECT_EQ(perceive_aromatic_atoms(parse_molecule("C1=CCC=C1")).size(), 0u);
  EXPECT_EQ(perceive_aromatic_atoms(parse_molecule("C1CCCCC1")).size(), 0u);
  EXPECT_EQ(perceive_aromatic_atoms(parse_molecule("c1ccc2ccccc2c1")).size(), 10u);
}

TEST(Perception, KekulizeFailsOnOddRing) {
  EXPECT_THROW(parse_molecule("c1cccc1"), SmilesError);
  EXPECT_NO_THROW(parse_molecule("c1ccc[nH]1"));
}

TEST(Perception, MolecularWeight) {
  EXPECT_NEAR(molecular_weight(parse_molecule("CCO")), 46.069, 0.01);
  EXPECT_NEAR(molecular_weight(parse_molecule("c1ccccc1")), 78.114, 0.01);
  EXPECT_NEAR(molecular_weight(parse_molecule("CS(C)=O")), 78.136, 0.01);
}

using oracle::brute_isomorphic;
using oracle::permuted;
using oracle::random_graph;

TEST(Isomorphism, AgreesWithBruteForce) {
  std::mt19937_64 rng(7);
  int positives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    MolGraph a = random_graph(rng, n);
    MolGraph b = trial % 2 ? permuted(a, rng) : random_graph(rng, n);
    bool expect = brute_isomorphic(a, b);
    positives += expect;
    EXPECT_EQ(isomorphic_exact(a, b), expect) << "trial " << trial;
  }
  EXPECT_GT(positives, 150);
}

TEST(Isomorphism, KekuleFormsCompareEqual) {
  auto a = parse_molecule("C1=CC=CC=C1C");
  auto b = parse_molecule("CC1=CC=CC=C1");
  EXPECT_TRUE(isomorphic(a, b));
  EXPECT_TRUE(isomorphic(parse_molecule("Cc1ccccc1"), parse_molecule("CC1C=CC=CC=1")));
  EXPECT_FALSE(isomorphic(parse_molecule("CCO"), parse_molecule("COC")));
}

TEST(Isomorphism, CanonicalRanksInvariantUnderPermutation) {
  std::mt19937_64 rng(11);
  auto g = parse_molecule("CC(=O)Nc1ccc(O)cc1");
  auto h = permuted(g, rng);
  auto rg = canonical_ranks(g), rh = canonical_ranks(h);
  std::vector<int> sg(rg), sh(rh);
  std::sort(sg.begin(), sg.end());
  std::iota(sh.begin(), sh.end(), 0);
  EXPECT_EQ(sg, sh);
  EXPECT_EQ(invariant_hash(to_labeled(g)), invariant_hash(to_labeled(h)));
  // Writing with canonical ranks is permutation invariant.
  EXPECT_EQ(write_smiles(g, {}, rg), write_smiles(h, {}, rh));
}

TEST(Perception, KekulizeIdempotent) {
  auto corpus = read_corpus(std::string(GSELFIES_DATA_DIR) + "/aromatic_2k.smi").molecules();
  corpus.resize(300);
  for (const auto &g : corpus) {
    MolGraph k = kekulize(g);
    EXPECT_TRUE(isomorphic_exact(k, g)) << write_smiles(g);
    EXPECT_EQ(perceive_aromatic_atoms(k), perceive_aromatic_atoms(g));
    EXPECT_EQ(ring_count(k), ring_count(g));
  }
}
