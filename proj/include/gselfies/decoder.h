#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gselfies/group.h"
#include "gselfies/molgraph.h"
#include "gselfies/token.h"

namespace gselfies {

// Every silent repair the decoder made, for diagnostics and tests.
struct DecodeReport {
  int demoted_bonds = 0;      // bond order reduced to fit valence or cap
  int skipped_atoms = 0;      // atom tokens consumed without placement
  int skipped_groups = 0;     // group tokens consumed without placement
  int unknown_groups = 0;     // group names absent from the set
  int ignored_tokens = 0;     // branch/pop/ring tokens with no effect
  int dropped_rings = 0;      // ring requests that produced no bond
  int lex_skipped = 0;        // unlexable units (string input only)
  std::vector<std::string> events;

  int total() const {
    return demoted_bonds + skipped_atoms + skipped_groups + unknown_groups +
           ignored_tokens + dropped_rings + lex_skipped;
  }
};

// Total on arbitrary token lists: the result is connected and satisfies the
// valence table of |set|. With |report|, every repair is recorded.
MolGraph decode(const std::vector<Token> &tokens, const GroupSet &set,
                DecodeReport *report = nullptr);
// Robust lexing first; unlexable units are skipped.
MolGraph decode(std::string_view text, const GroupSet &set,
                DecodeReport *report = nullptr);

}  // namespace gselfies
