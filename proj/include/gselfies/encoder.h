#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "gselfies/group.h"
#include "gselfies/molgraph.h"
#include "gselfies/token.h"

namespace gselfies {

class EncodeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GroupMatch {
  const Group *group = nullptr;
  std::vector<int> atoms;            // template atom -> molecule atom
  std::vector<int> attachment_bond;  // per attachment: molecule bond or -1
};

// Induced embeddings of |group| in |mol|, exact on element, charge,
// explicit H and bond order, whose external bonds fit the attachment points
// (one bond per attachment, order <= cap). Sorted lexicographically by
// mapped atom sequence.
std::vector<GroupMatch> find_embeddings(const MolGraph &mol, const Group &group);

// Groups in matching order; within a group embeddings are accepted greedily
// in lexicographic order when disjoint from everything accepted so far.
std::vector<GroupMatch> match_groups(const MolGraph &mol, const GroupSet &set);

// Throws EncodeError for unsupported elements, valence violations,
// disconnected input or ring spans beyond three base-16 digits. |ranks|
// overrides the canonical ranks that fix the traversal.
std::vector<Token> encode(const MolGraph &mol, const GroupSet &set,
                          std::span<const int> ranks = {});

// Decodes with |set| and re-encodes atomically; throws EncodeError on group
// names missing from |set|.
std::vector<Token> expand_groups(const std::vector<Token> &tokens, const GroupSet &set);

}  // namespace gselfies
