#pragma once

#include <string>
#include <vector>

#include "gselfies/group.h"
#include "gselfies/molgraph.h"
#include "gselfies/smiles.h"

namespace gselfies {

struct Fragment {
  MolGraph graph;
  std::vector<AttachmentMarker> attachments;  // cap 1, one per cut
};

// Cuts every acyclic single bond that touches a ring atom; each connected
// piece becomes a fragment with one attachment per cut bond end.
std::vector<Fragment> naive_fragment(const MolGraph &mol);

// Attachment-annotated SMILES, canonical for the fragment (independent of
// the source molecule's atom order).
std::string fragment_smiles(const Fragment &fragment);

// Same fragment up to relabelling, attachment positions included.
bool same_fragment(const Fragment &a, const Fragment &b);

enum class SelectionStrategy { kFrequency, kDiverse };

struct FragmentCandidate {
  Fragment fragment;
  std::string smiles;
  int count = 0;
  int first_seen = 0;  // molecule index
  long score() const { return static_cast<long>(count) * fragment.graph.num_atoms(); }
};

// Deduplicated candidate pool in first-seen order; fragments with more than
// 25 atoms, no attachments, or more than 16 attachments are dropped.
// |threads| 1 runs the serial reference, 0 uses the OpenMP default.
std::vector<FragmentCandidate> collect_fragments(const std::vector<MolGraph> &corpus,
                                                 int threads = 0);

// Hashed paths of up to 5 bonds (atoms, bond orders, attachment marks).
std::vector<std::uint64_t> path_fingerprint(const Fragment &fragment);
double tanimoto_distance(const std::vector<std::uint64_t> &a,
                         const std::vector<std::uint64_t> &b);

struct FragmentOptions {
  int k = 30;
  SelectionStrategy strategy = SelectionStrategy::kFrequency;
  int threads = 0;
};

// Groups named g1..gk in selection order. Throws std::invalid_argument for
// k < 1 or an empty corpus; a short pool yields every candidate and a
// warning.
GroupSet build_groupset(const std::vector<MolGraph> &corpus, const FragmentOptions &options,
                        std::vector<std::string> *warnings = nullptr,
                        const ValenceTable &table = ValenceTable::standard());

}  // namespace gselfies
