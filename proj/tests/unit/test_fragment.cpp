#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gselfies/fragment.h"
#include "gselfies/isomorphism.h"
#include "gselfies/smiles.h"
#include "oracles.h"

using namespace gselfies;

namespace {

std::vector<std::string> pieces(const char *smiles) {
  std::vector<std::string> out;
  for (const auto &f : naive_fragment(parse_molecule(smiles))) out.push_back(fragment_smiles(f));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Fragment, Toluene) {
  auto frags = naive_fragment(parse_molecule("Cc1ccccc1"));
  ASSERT_EQ(frags.size(), 2u);
  std::vector<int> sizes;
  for (const auto &f : frags) {
    sizes.push_back(f.graph.num_atoms());
    ASSERT_EQ(f.attachments.size(), 1u);
    EXPECT_EQ(f.attachments[0].valency_cap, 1);
  }
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<int>{1, 6}));
}

TEST(Fragment, CyclohexaneIsWhole) {
  auto frags = naive_fragment(parse_molecule("C1CCCCC1"));
  ASSERT_EQ(frags.size(), 1u);
  EXPECT_EQ(frags[0].graph.num_atoms(), 6);
  EXPECT_TRUE(frags[0].attachments.empty());
  EXPECT_EQ(naive_fragment(parse_molecule("CCCO")).size(), 1u);
}

TEST(Fragment, Biphenyl) {
  auto p = pieces("c1ccccc1-c1ccccc1");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], p[1]);
}

TEST(Fragment, KeepsRingSubstituentsTogether) {
  // Chain atoms stay whole; C=O on the ring is not a single bond and stays.
  auto frags = naive_fragment(parse_molecule("O=C1CCCCC1CCO"));
  ASSERT_EQ(frags.size(), 2u);
  std::vector<int> sizes{frags[0].graph.num_atoms(), frags[1].graph.num_atoms()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<int>{3, 7}));
}

TEST(Fragment, CanonicalSmiles) {
  std::mt19937_64 rng(3);
  auto mol = parse_molecule("CC(=O)Nc1ccc(O)cc1");
  auto a = pieces("CC(=O)Nc1ccc(O)cc1");
  std::vector<std::string> b;
  for (const auto &f : naive_fragment(oracle::permuted(mol, rng))) b.push_back(fragment_smiles(f));
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST(Fragment, SameFragmentRespectsAttachments) {
  auto para = naive_fragment(parse_molecule("Cc1ccc(C)cc1"));
  auto meta = naive_fragment(parse_molecule("Cc1cccc(C)c1"));
  auto ring = [](const std::vector<Fragment> &fs) {
    return *std::find_if(fs.begin(), fs.end(), [](const Fragment &f) { return f.graph.num_atoms() == 6; });
  };
  EXPECT_FALSE(same_fragment(ring(para), ring(meta)));
  EXPECT_TRUE(same_fragment(ring(para), ring(naive_fragment(parse_molecule("c1cc(C)ccc1C")))));
}

TEST(Fragment, CollectCounts) {
  std::vector<MolGraph> corpus;
  for (const char *s : {"Cc1ccccc1", "Cc1ccccc1", "CCc1ccccc1", "C1CCCCC1"})
    corpus.push_back(parse_molecule(s));
  auto pool = collect_fragments(corpus, 1);
  // phenyl x3, methyl x2, ethyl x1; cyclohexane has no attachment.
  ASSERT_EQ(pool.size(), 3u);
  EXPECT_EQ(pool[0].count, 2);  // methyl, first seen
  EXPECT_EQ(pool[1].count, 3);
  EXPECT_EQ(pool[2].count, 1);
  auto par = collect_fragments(corpus, 0);
  ASSERT_EQ(par.size(), pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    EXPECT_EQ(par[i].smiles, pool[i].smiles);
    EXPECT_EQ(par[i].count, pool[i].count);
  }
}

TEST(Fragment, Tanimoto) {
  auto f = naive_fragment(parse_molecule("Cc1ccccc1"));
  auto fp = path_fingerprint(f[0]);
  EXPECT_DOUBLE_EQ(tanimoto_distance(fp, fp), 0.0);
  EXPECT_GT(tanimoto_distance(path_fingerprint(f[0]), path_fingerprint(f[1])), 0.0);
  EXPECT_LE(tanimoto_distance(path_fingerprint(f[0]), path_fingerprint(f[1])), 1.0);
}

TEST(Fragment, BuildGroupSet) {
  std::vector<MolGraph> corpus;
  for (const char *s : {"Cc1ccccc1", "Cc1ccccc1", "CCc1ccccc1", "OC1CCCC1", "NC1CCCC1"})
    corpus.push_back(parse_molecule(s));
  std::vector<std::string> warnings;
  FragmentOptions opt;
  opt.k = 2;
  GroupSet set = build_groupset(corpus, opt, &warnings);
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(set.groups()[0].name, "g1");
  EXPECT_EQ(set.groups()[0].templ.num_atoms(), 6);  // phenyl: 3 x 6 atoms scores highest
  EXPECT_TRUE(warnings.empty());

  opt.k = 50;
  GroupSet all = build_groupset(corpus, opt, &warnings);
  EXPECT_LT(all.size(), 50u);
  EXPECT_FALSE(warnings.empty());

  opt.k = 3;
  opt.strategy = SelectionStrategy::kDiverse;
  EXPECT_EQ(build_groupset(corpus, opt).size(), 3u);
  EXPECT_EQ(build_groupset(corpus, opt), build_groupset(corpus, opt));

  opt.k = 0;
  EXPECT_THROW(build_groupset(corpus, opt), std::invalid_argument);
  opt.k = 3;
  EXPECT_THROW(build_groupset({}, opt), std::invalid_argument);
}

TEST(Fragment, BenzeneCorpusTopGroup) {
  std::vector<MolGraph> corpus;
  const char *subs[] = {"C", "O", "N", "CC", "Cl", "F", "OC", "C(=O)O", "CN", "Br"};
  for (int i = 0; i < 100; ++i)
    corpus.push_back(parse_molecule(std::string("c1ccccc1") + subs[i % 10]));
  FragmentOptions opt;
  opt.k = 1;
  GroupSet set = build_groupset(corpus, opt);
  ASSERT_EQ(set.size(), 1u);
  const Group &g = set.groups()[0];
  EXPECT_EQ(g.templ.num_atoms(), 6);
  EXPECT_EQ(g.attachments.size(), 1u);
  for (const auto &a : g.templ.atoms()) EXPECT_EQ(a.element, Element::kC);
}

TEST(Fragment, CorpusThirtyGroups) {
  auto corpus = read_corpus(std::string(GSELFIES_DATA_DIR) + "/drug_10k.smi").molecules();
  FragmentOptions opt;
  opt.k = 30;
  std::vector<std::string> warnings;
  GroupSet set = build_groupset(corpus, opt, &warnings);
  ASSERT_EQ(set.size(), 30u);
  EXPECT_TRUE(warnings.empty());
  std::vector<Fragment> frags;
  for (const auto &g : set.groups()) {
    EXPECT_GE(g.attachments.size(), 1u);
    frags.push_back({g.templ, g.attachments});
  }
  for (std::size_t i = 0; i < frags.size(); ++i)
    for (std::size_t j = i + 1; j < frags.size(); ++j)
      EXPECT_FALSE(same_fragment(frags[i], frags[j])) << i << " " << j;
}
