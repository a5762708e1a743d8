#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "gselfies/isomorphism.h"
#include "gselfies/perception.h"
#include "gselfies/smiles.h"

using namespace gselfies;

TEST(Smiles, ParsesBasics) {
  auto g = parse_molecule("CC(=O)O");
  ASSERT_EQ(g.num_atoms(), 4);
  EXPECT_EQ(g.bond(g.bond_between(1, 2)).order, 2);
  auto h = parse_molecule("[NH4+]");
  EXPECT_EQ(h.atom(0).explicit_h, 4);
  EXPECT_EQ(h.atom(0).formal_charge, 1);
  EXPECT_EQ(parse_molecule("[O-2]").atom(0).formal_charge, -2);
  EXPECT_EQ(parse_molecule("[O--]").atom(0).formal_charge, -2);
  EXPECT_EQ(parse_molecule("ClCBr").atom(0).element, Element::kCl);
}

TEST(Smiles, RingClosures) {
  auto g = parse_molecule("C1CC%12CC1C%12");
  EXPECT_EQ(ring_count(g), 2);
  auto k = parse_molecule("C=1CCCC1");
  EXPECT_EQ(k.bond(k.bond_between(0, 4)).order, 2);
}

TEST(Smiles, StereoAndWarnings) {
  auto p = parse_smiles("C/C=C/[C@@H](F)Cl");
  EXPECT_EQ(p.graph.bond(0).stereo, BondStereo::kUp);
  EXPECT_EQ(p.warnings.size(), 1u);
  EXPECT_EQ(p.graph.atom(3).explicit_h, 1);
}

TEST(Smiles, ErrorCodes) {
  auto code = [](const char *s) {
    try {
      parse_molecule(s);
    } catch (const SmilesError &e) {
      return e.code();
    }
    return SmilesErrorCode::kEmpty;  // unreachable for these inputs
  };
  EXPECT_EQ(code("CC("), SmilesErrorCode::kUnbalancedParenthesis);
  EXPECT_EQ(code("CC)"), SmilesErrorCode::kUnbalancedParenthesis);
  EXPECT_EQ(code("C1CC"), SmilesErrorCode::kDanglingRingClosure);
  EXPECT_EQ(code("[Xe]"), SmilesErrorCode::kUnknownElement);
  EXPECT_EQ(code("C*"), SmilesErrorCode::kAttachmentOutsideTemplate);
  EXPECT_EQ(code("c1cccc1"), SmilesErrorCode::kUnkekulizable);
  EXPECT_EQ(code("[13C]"), SmilesErrorCode::kUnsupported);
  EXPECT_EQ(code("C(C)(C)(C)(C)C"), SmilesErrorCode::kValenceExceeded);
  EXPECT_EQ(code("C?"), SmilesErrorCode::kSyntax);
  EXPECT_THROW(parse_molecule(""), SmilesError);
}

TEST(Smiles, AttachmentTemplates) {
  auto p = parse_smiles("c1(*1)c(*1)c(*1)c(*1)c(*1)c1*1", true);
  EXPECT_EQ(p.graph.num_atoms(), 6);
  ASSERT_EQ(p.attachments.size(), 6u);
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(p.attachments[i].attachment_index, i);
    EXPECT_EQ(p.attachments[i].host_atom, i);
  }
  auto t = parse_smiles("C(*2)=O", true);
  EXPECT_EQ(t.attachments[0].valency_cap, 2);
  EXPECT_THROW(parse_smiles("C*0", true), SmilesError);
  EXPECT_THROW(parse_smiles("**", true), SmilesError);
}

TEST(Smiles, WriterRoundTrip) {
  const char *cases[] = {"CC(=O)Nc1ccc(O)cc1", "C1CC2CCC1CC2", "O=C1CC[NH2+]CC1",
                         "C#CC(F)(Cl)Br", "c1ccc2c(c1)[nH]c1ccccc12", "CC.O"};
  for (const char *s : cases) {
    auto g = parse_molecule(s);
    std::string out = write_smiles(g);
    EXPECT_TRUE(isomorphic_exact(g, parse_molecule(out))) << s << " -> " << out;
  }
}

TEST(Smiles, WriterEmitsAttachments) {
  auto p = parse_smiles("NS(=O)(=O)*1", true);
  std::string out = write_smiles(p.graph, p.attachments);
  auto q = parse_smiles(out, true);
  EXPECT_TRUE(isomorphic_exact(p.graph, q.graph)) << out;
  ASSERT_EQ(q.attachments.size(), 1u);
  EXPECT_EQ(q.graph.atom(q.attachments[0].host_atom).element, Element::kS);
}

TEST(Smiles, CorpusReaderSkipsBadLines) {
  auto c = read_corpus_text("CCO\tfirst\n\nC1CC\tbad\nc1ccccc1 benzene\n");
  ASSERT_EQ(c.records.size(), 2u);
  EXPECT_EQ(c.records[1].id, "benzene");
  ASSERT_EQ(c.skipped.size(), 1u);
  EXPECT_EQ(c.skipped[0].line, 3);
  EXPECT_THROW(read_corpus("/nonexistent/file.smi"), std::runtime_error);
}

TEST(Smiles, BundledCorporaParse) {
  for (const char *name : {"drug_2k.smi", "aromatic_2k.smi"}) {
    auto c = read_corpus(std::string(GSELFIES_DATA_DIR) + "/" + name);
    EXPECT_EQ(c.records.size(), 2000u) << name;
    EXPECT_TRUE(c.skipped.empty()) << name << ": " << (c.skipped.empty() ? "" : c.skipped[0].message);
  }
}

// Values frozen from RDKit (scripts/gen_reference_props.py).
TEST(Smiles, ReferenceDescriptors) {
  std::ifstream in(std::string(GSELFIES_DATA_DIR) + "/../tests/data/reference_props.tsv");
  ASSERT_TRUE(in);
  std::string line;
  std::getline(in, line);
  int rows = 0, aromatic_agree = 0;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string smi;
    double mw;
    int rings, arom, heavy;
    ss >> smi >> mw >> rings >> arom >> heavy;
    auto g = parse_molecule(smi);
    ++rows;
    EXPECT_NEAR(molecular_weight(g), mw, 0.02) << smi;
    EXPECT_EQ(ring_count(g), rings) << smi;
    EXPECT_EQ(g.num_atoms(), heavy) << smi;
    aromatic_agree += static_cast<int>(perceive_aromatic_atoms(g).size()) == arom;
  }
  EXPECT_EQ(rows, 400);
  // RDKit also lets ring carbons with exocyclic C=C join a pi system.
  EXPECT_GE(aromatic_agree, rows * 98 / 100);
  std::cout << "aromatic agreement " << aromatic_agree << "/" << rows << "\n";
}
