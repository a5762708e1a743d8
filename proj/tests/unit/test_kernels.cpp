#include <gtest/gtest.h>

#include <cstdlib>

#include "gselfies/decoder.h"
#include "gselfies/group.h"
#include "gselfies/kernels.h"
#include "gselfies/smiles.h"

using namespace gselfies;

namespace {

std::vector<MolGraph> corpus(std::size_t n) {
  auto c = read_corpus(std::string(GSELFIES_DATA_DIR) + "/drug_2k.smi").molecules();
  c.resize(std::min(n, c.size()));
  return c;
}

GroupSet groups() { return load_groupset(std::string(GSELFIES_DATA_DIR) + "/groups/drug_53.json"); }

}  // namespace

TEST(Kernels, EncodeSerialEqualsParallel) {
  auto mols = corpus(300);
  GroupSet set = groups();
  auto a = encode_corpus_serial(mols, set);
  auto b = encode_corpus_parallel(mols, set, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].tokens, b[i].tokens);
    EXPECT_EQ(a[i].error, b[i].error);
  }
  std::vector<std::vector<Token>> strings;
  for (const auto &o : a) strings.push_back(o.tokens);
  auto da = decode_corpus_serial(strings, set);
  auto db = decode_corpus_parallel(strings, set, 3);
  for (std::size_t i = 0; i < da.size(); ++i) EXPECT_EQ(write_smiles(da[i]), write_smiles(db[i]));
}

TEST(Kernels, RoundTripSerialEqualsParallel) {
  auto mols = corpus(300);
  auto a = roundtrip_serial(mols, groups());
  auto b = roundtrip_parallel(mols, groups(), 4);
  EXPECT_EQ(a.total, 300u);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.passed, a.total);
}

TEST(Kernels, FuzzSerialEqualsParallel) {
  FuzzOptions opt;
  opt.n = 2000;
  opt.seed = 3;
  opt.check_roundtrip = true;
  auto a = fuzz_serial(groups(), opt);
  auto b = fuzz_parallel(groups(), opt, 4);
  EXPECT_EQ(a.strings, 2000);
  EXPECT_EQ(a.tokens, b.tokens);
  EXPECT_EQ(a.atoms, b.atoms);
  EXPECT_EQ(a.violation_count, 0);
  EXPECT_EQ(b.violation_count, 0);
}

TEST(Kernels, FuzzStringReproducible) {
  FuzzOptions opt;
  opt.seed = 9;
  opt.max_len = 30;
  auto alpha_text = alphabet(groups());
  std::vector<Token> alpha;
  for (const auto &s : alpha_text) alpha.push_back(tokenize(s)[0]);
  auto s = fuzz_string(alpha, opt, 17);
  EXPECT_EQ(s, fuzz_string(alpha, opt, 17));
  EXPECT_GE(s.size(), 1u);
  EXPECT_LE(s.size(), 30u);
}

TEST(Kernels, ThreadsFromEnvironment) {
  setenv("GSELFIES_THREADS", "3", 1);
  EXPECT_EQ(default_threads(), 3);
  unsetenv("GSELFIES_THREADS");
  EXPECT_GE(default_threads(), 1);
}
