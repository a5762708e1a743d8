#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gselfies/element.h"
#include "gselfies/valence.h"

namespace gselfies {

enum class BondStereo : std::uint8_t { kNone, kUp, kDown };

struct Atom {
  Element element = Element::kC;
  int formal_charge = 0;
  int explicit_h = 0;
  bool aromatic = false;  // input provenance only, never interpreted
  int placement_index = 0;

  bool operator==(const Atom &) const = default;
};

struct Bond {
  int begin = 0;
  int end = 0;
  int order = 1;  // 1, 2 or 3
  BondStereo stereo = BondStereo::kNone;

  int other(int atom) const { return atom == begin ? end : begin; }

  bool operator==(const Bond &) const = default;
};

struct Neighbor {
  int atom;
  int bond;
};

// Atoms and bonds with integer bond orders. Atom ids are dense and equal
// placement order; placement_index mirrors the id.
class MolGraph {
public:
  int add_atom(Atom atom);
  // Rejects self loops and parallel bonds by throwing std::invalid_argument.
  int add_bond(int a, int b, int order, BondStereo stereo = BondStereo::kNone);

  int num_atoms() const { return static_cast<int>(atoms_.size()); }
  int num_bonds() const { return static_cast<int>(bonds_.size()); }
  bool empty() const { return atoms_.empty(); }

  const Atom &atom(int id) const { return atoms_.at(id); }
  const Bond &bond(int id) const { return bonds_.at(id); }
  const std::vector<Atom> &atoms() const { return atoms_; }
  const std::vector<Bond> &bonds() const { return bonds_; }

  std::span<const Neighbor> neighbors(int atom) const {
    return adjacency_.at(atom);
  }
  int degree(int atom) const {
    return static_cast<int>(adjacency_.at(atom).size());
  }

  // -1 when not bonded.
  int bond_between(int a, int b) const;
  int bond_order_sum(int atom) const;

  void set_bond_order(int bond, int order);
  void set_aromatic(int atom, bool aromatic) { atoms_.at(atom).aromatic = aromatic; }

  bool operator==(const MolGraph &other) const {
    return atoms_ == other.atoms_ && bonds_ == other.bonds_;
  }

private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// max_valence - explicit_h - sum of incident bond orders. Throws
// std::out_of_range for an unknown atom id.
int free_valence(const MolGraph &graph, int atom,
                 const ValenceTable &table = ValenceTable::standard());

// Invariant violations as human readable strings; empty when the graph is
// valid under |table|.
std::vector<std::string>
validate(const MolGraph &graph,
         const ValenceTable &table = ValenceTable::standard());

bool is_connected(const MolGraph &graph);

// Connected component id per atom, numbered in order of first atom.
std::vector<int> connected_components(const MolGraph &graph, int *count = nullptr);

}  // namespace gselfies
