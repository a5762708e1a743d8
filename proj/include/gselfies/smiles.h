#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gselfies/molgraph.h"

namespace gselfies {

enum class SmilesErrorCode {
  kEmpty,
  kSyntax,
  kUnbalancedParenthesis,
  kDanglingRingClosure,
  kUnknownElement,
  kUnkekulizable,
  kAttachmentOutsideTemplate,
  kBadAttachment,
  kValenceExceeded,
  kUnsupported,  // isotopes, atom maps, quadruple bonds
};

std::string_view to_string(SmilesErrorCode code);

class SmilesError : public std::runtime_error {
public:
  SmilesError(SmilesErrorCode code, std::size_t position, const std::string &what)
      : std::runtime_error(what), code_(code), position_(position) {}

  SmilesErrorCode code() const { return code_; }
  std::size_t position() const { return position_; }

private:
  SmilesErrorCode code_;
  std::size_t position_;
};

// A template attachment point written as *N.
struct AttachmentMarker {
  int valency_cap = 1;
  int attachment_index = 0;
  int host_atom = 0;

  bool operator==(const AttachmentMarker &) const = default;
};

struct ParsedSmiles {
  MolGraph graph;
  std::vector<AttachmentMarker> attachments;
  std::vector<std::string> warnings;
};

// SMILES subset: organic and bracket atoms (charge, H count), bonds
// - = # : / \, branches, ring closures (digits and %nn), '.', lowercase
// aromatic atoms (kekulized on load). With |allow_attachments|, *N binds an
// attachment point of valency N (bare * = *1) to its single neighbour.
ParsedSmiles parse_smiles(std::string_view text, bool allow_attachments = false,
                          const ValenceTable &table = ValenceTable::standard());

// Shorthand for molecule input; warnings are dropped.
MolGraph parse_molecule(std::string_view text,
                        const ValenceTable &table = ValenceTable::standard());

// Kekule SMILES. Traversal starts at the lowest rank (identity ranks when
// |ranks| is empty) and visits neighbours in rank order. Attachment markers
// are written as "(*N)" right after their host atom. |atom_order| receives
// the written atom sequence, which is the atom order a re-parse produces.
std::string write_smiles(const MolGraph &graph,
                         std::span<const AttachmentMarker> attachments = {},
                         std::span<const int> ranks = {},
                         std::vector<int> *atom_order = nullptr);

struct CorpusRecord {
  std::string smiles;
  std::string id;
  MolGraph graph;
  int line = 0;
};

struct CorpusSkip {
  int line = 0;
  std::string smiles;
  std::string message;
};

struct Corpus {
  std::vector<CorpusRecord> records;
  std::vector<CorpusSkip> skipped;

  std::vector<MolGraph> molecules() const;
};

// One record per line: <smiles>[<whitespace><id>]. Blank lines are ignored;
// unparseable lines are skipped and reported. Throws std::runtime_error when
// the file cannot be opened.
Corpus read_corpus(const std::string &path,
                   const ValenceTable &table = ValenceTable::standard());
Corpus read_corpus_text(std::string_view text,
                        const ValenceTable &table = ValenceTable::standard());

}  // namespace gselfies
