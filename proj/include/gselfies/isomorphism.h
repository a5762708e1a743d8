#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gselfies/molgraph.h"

namespace gselfies {

// Vertex- and edge-labelled simple graph; the common currency of the
// isomorphism and canonical-ranking routines.
struct LabeledGraph {
  std::vector<std::uint64_t> vertex_labels;
  // (neighbor, edge label) per vertex
  std::vector<std::vector<std::pair<int, int>>> adjacency;

  int size() const { return static_cast<int>(vertex_labels.size()); }
  void add_edge(int a, int b, int label) {
    adjacency[a].push_back({b, label});
    adjacency[b].push_back({a, label});
  }
};

enum class BondLabeling {
  kExact,     // raw bond orders
  kAromatic,  // bonds in perceived aromatic rings share one label
};

LabeledGraph to_labeled(const MolGraph &graph,
                        BondLabeling labeling = BondLabeling::kExact);

// Iterated neighbourhood refinement of both graphs with a shared colour
// dictionary so the resulting colours are comparable across graphs.
std::pair<std::vector<int>, std::vector<int>>
refine_jointly(const LabeledGraph &a, const LabeledGraph &b);

// Backtracking search for a label-preserving bijection; returns the
// mapping a->b, or an empty vector when none exists.
std::vector<int> find_isomorphism(const LabeledGraph &a, const LabeledGraph &b);
bool isomorphic(const LabeledGraph &a, const LabeledGraph &b);

// Equality up to atom relabelling on element, charge, explicit H and bond
// order, with Kekule-equivalent aromatic rings compared equal. Stereo and
// aromatic flags are ignored.
bool isomorphic(const MolGraph &a, const MolGraph &b);
// Same, but bond orders must match exactly.
bool isomorphic_exact(const MolGraph &a, const MolGraph &b);

// Rank per vertex (0..n-1): refinement classes ordered by invariant, ties
// broken by individualizing the lowest id and refining again.
std::vector<int> canonical_ranks(const LabeledGraph &graph);
std::vector<int> canonical_ranks(const MolGraph &graph);

// Order-independent hash of the refined colour histogram.
std::uint64_t invariant_hash(const LabeledGraph &graph);

}  // namespace gselfies
