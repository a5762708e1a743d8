#pragma once

#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gselfies/molgraph.h"

namespace gselfies {

class KekulizeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A bond is a ring bond iff it is not a bridge.
std::vector<bool> ring_bonds(const MolGraph &graph);
std::vector<bool> ring_atoms(const MolGraph &graph);

// Size of the smallest set of smallest rings: bonds - atoms + components.
int ring_count(const MolGraph &graph);

// Every simple cycle with min_size..max_size atoms, each as an atom list
// starting at its smallest atom id.
std::vector<std::vector<int>> simple_cycles(const MolGraph &graph,
                                            int min_size, int max_size);

// Hueckel aromaticity on the Kekule structure. Per atom: a ring double
// bond gives 1 pi electron, a lone-pair heteroatom (pyrrole N, furan O,
// thiophene S) or carbanion 2, C with an exocyclic C=O/C=N/C=S or a
// carbocation 0; anything else (sp3, triple bonds) disqualifies the ring.
// A 5-7 membered ring, or a connected union of such fused rings, whose total is
// 4n+2 is aromatic.
std::set<int> perceive_aromatic_atoms(const MolGraph &graph);

// Ring bonds lying inside some ring accepted by perceive_aromatic_atoms.
std::vector<bool> aromatic_bonds(const MolGraph &graph);

// Assigns alternating orders to aromatic-flagged atoms. |candidates|
// marks the bonds that may become double (implicit aromatic bonds from
// SMILES); when empty, single ring bonds between two aromatic-flagged atoms
// are used. Atoms that need a pi bond are matched by backtracking maximum
// matching; throws KekulizeError when no perfect matching exists.
MolGraph kekulize(const MolGraph &graph, std::span<const bool> candidates = {});

// Implicit hydrogens under the normal-valence model (S 2/4/6 ...), used for
// molecular weight; the decoder's maximum valences play no part here.
int implicit_hydrogens(const MolGraph &graph, int atom);
double molecular_weight(const MolGraph &graph);

}  // namespace gselfies
