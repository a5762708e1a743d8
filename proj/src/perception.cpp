#include "gselfies/perception.h"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace gselfies {

std::vector<bool> ring_bonds(const MolGraph &graph) {
  const int n = graph.num_atoms();
  std::vector<bool> is_ring(graph.num_bonds(), true);
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;

  struct Frame {
    int atom;
    int parent_bond;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame &f = stack.back();
      auto nbrs = graph.neighbors(f.atom);
      if (f.next < nbrs.size()) {
        Neighbor nb = nbrs[f.next++];
        if (nb.bond == f.parent_bond) continue;
        if (disc[nb.atom] < 0) {
          disc[nb.atom] = low[nb.atom] = timer++;
          stack.push_back({nb.atom, nb.bond, 0});
        } else {
          low[f.atom] = std::min(low[f.atom], disc[nb.atom]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().atom;
          low[parent] = std::min(low[parent], low[done.atom]);
          if (low[done.atom] > disc[parent]) is_ring[done.parent_bond] = false;
        }
      }
    }
  }
  return is_ring;
}

std::vector<bool> ring_atoms(const MolGraph &graph) {
  auto rb = ring_bonds(graph);
  std::vector<bool> atoms(graph.num_atoms(), false);
  for (int b = 0; b < graph.num_bonds(); ++b) {
    if (!rb[b]) continue;
    atoms[graph.bond(b).begin] = true;
    atoms[graph.bond(b).end] = true;
  }
  return atoms;
}

int ring_count(const MolGraph &graph) {
  int components = 0;
  connected_components(graph, &components);
  return graph.num_bonds() - graph.num_atoms() + components;
}

std::vector<std::vector<int>> simple_cycles(const MolGraph &graph, int min_size,
                                            int max_size) {
  std::vector<std::vector<int>> cycles;
  auto rb = ring_bonds(graph);
  std::vector<int> path;
  std::vector<bool> on_path(graph.num_atoms(), false);

  std::function<void(int, int)> extend = [&](int start, int u) {
    for (const auto &nb : graph.neighbors(u)) {
      if (!rb[nb.bond]) continue;
      int v = nb.atom;
      if (v == start && static_cast<int>(path.size()) >= min_size &&
          path.size() >= 3) {
        // Each cycle is seen in both directions; keep one.
        if (path[1] < path.back()) cycles.push_back(path);
        continue;
      }
      if (v <= start || on_path[v]) continue;
      if (static_cast<int>(path.size()) >= max_size) continue;
      on_path[v] = true;
      path.push_back(v);
      extend(start, v);
      path.pop_back();
      on_path[v] = false;
    }
  };

  for (int s = 0; s < graph.num_atoms(); ++s) {
    path.assign(1, s);
    on_path[s] = true;
    extend(s, s);
    on_path[s] = false;
  }
  return cycles;
}

namespace {

struct AromaticRings {
  // Each aromatic system as the list of its constituent rings.
  std::vector<std::vector<std::vector<int>>> systems;
};

constexpr int kNotCandidate = -1;

// Pi electrons an atom contributes to a ring it sits in, or kNotCandidate.
int pi_electrons(const MolGraph &graph, int a, const std::vector<bool> &rb) {
  const Atom &atom = graph.atom(a);
  int ring_doubles = 0, exo_doubles = 0;
  int exo_partner = -1;
  for (const auto &nb : graph.neighbors(a)) {
    int order = graph.bond(nb.bond).order;
    if (order == 3) return kNotCandidate;
    if (order == 2) {
      if (rb[nb.bond]) {
        ++ring_doubles;
      } else {
        ++exo_doubles;
        exo_partner = nb.atom;
      }
    }
  }
  if (ring_doubles > 1) return kNotCandidate;
  if (ring_doubles == 1) return exo_doubles == 0 ? 1 : kNotCandidate;
  if (exo_doubles == 1) {
    // C=O, C=N, C=S outside the ring: an empty p orbital.
    Element partner = graph.atom(exo_partner).element;
    bool polar = partner == Element::kO || partner == Element::kN ||
                 partner == Element::kS;
    return atom.element == Element::kC && polar ? 0 : kNotCandidate;
  }
  if (exo_doubles > 1) return kNotCandidate;
  int connections = graph.degree(a) + atom.explicit_h;
  switch (atom.element) {
  case Element::kC:
    if (atom.formal_charge == -1 && connections <= 3) return 2;
    if (atom.formal_charge == 1 && connections <= 3) return 0;
    return kNotCandidate;
  case Element::kN:
  case Element::kP:
  case Element::kAs:
    if (atom.formal_charge == 0 && connections <= 3) return 2;
    if (atom.formal_charge == -1 && connections <= 2) return 2;
    return kNotCandidate;
  case Element::kO:
  case Element::kS:
  case Element::kSe:
  case Element::kTe:
    return atom.formal_charge == 0 && connections == 2 ? 2 : kNotCandidate;
  case Element::kB:
    return atom.formal_charge == 0 && connections <= 3 ? 0 : kNotCandidate;
  default:
    return kNotCandidate;
  }
}

bool huckel(int electrons) { return electrons >= 2 && (electrons - 2) % 4 == 0; }

// Hueckel 4n+2 over single rings and over connected unions of fused rings
// (5-7 membered, sharing a bond) whose atoms can all join a pi system.
AromaticRings find_aromatic_rings(const MolGraph &graph) {
  constexpr int kMinRingSize = 5, kMaxRingSize = 7;
  constexpr std::size_t kMaxSubsets = 4096;
  AromaticRings out;
  auto rb = ring_bonds(graph);
  std::vector<int> electrons(graph.num_atoms(), kNotCandidate);
  for (int a = 0; a < graph.num_atoms(); ++a)
    if (graph.degree(a) >= 2) electrons[a] = pi_electrons(graph, a, rb);

  std::vector<std::vector<int>> rings;
  for (auto &cycle : simple_cycles(graph, kMinRingSize, kMaxRingSize)) {
    bool ok = std::all_of(cycle.begin(), cycle.end(),
                          [&](int a) { return electrons[a] != kNotCandidate; });
    if (ok) rings.push_back(std::move(cycle));
  }
  const std::size_t n = std::min<std::size_t>(rings.size(), 64);
  if (n == 0) return out;

  // Ring adjacency: sharing a bond means sharing two consecutive atoms,
  // approximated by sharing at least two atoms.
  std::vector<std::uint64_t> adj(n, 0);
  std::vector<std::set<int>> atom_sets(n);
  for (std::size_t i = 0; i < n; ++i) atom_sets[i] = {rings[i].begin(), rings[i].end()};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int shared = 0;
      for (int a : rings[i]) shared += atom_sets[j].count(a);
      if (shared >= 2) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
    }

  auto count_electrons = [&](std::uint64_t mask) {
    std::set<int> atoms;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) atoms.insert(rings[i].begin(), rings[i].end());
    int total = 0;
    for (int a : atoms) total += electrons[a];
    return total;
  };
  auto emit = [&](std::uint64_t mask) {
    std::vector<std::vector<int>> system;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) system.push_back(rings[i]);
    out.systems.push_back(std::move(system));
  };

  // Connected ring subsets, grown from their lowest ring index.
  std::set<std::uint64_t> seen;
  std::size_t budget = kMaxSubsets;
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::uint64_t> frontier{std::uint64_t{1} << start};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
      std::uint64_t mask = frontier.back();
      frontier.pop_back();
      if (huckel(count_electrons(mask))) emit(mask);
      std::uint64_t grow = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) grow |= adj[i];
      grow &= ~mask;
      grow &= ~((std::uint64_t{1} << start) - 1) & ~(std::uint64_t{1} << start);
      for (std::size_t i = start + 1; i < n; ++i) {
        if (!(grow >> i & 1)) continue;
        std::uint64_t next = mask | std::uint64_t{1} << i;
        if (!seen.insert(next).second) continue;
        if (budget == 0) break;
        --budget;
        frontier.push_back(next);
      }
    }
  }
  return out;
}

}  // namespace

std::set<int> perceive_aromatic_atoms(const MolGraph &graph) {
  std::set<int> atoms;
  for (const auto &system : find_aromatic_rings(graph).systems)
    for (const auto &ring : system) atoms.insert(ring.begin(), ring.end());
  return atoms;
}

std::vector<bool> aromatic_bonds(const MolGraph &graph) {
  std::vector<bool> out(graph.num_bonds(), false);
  for (const auto &system : find_aromatic_rings(graph).systems)
    for (const auto &ring : system)
      for (std::size_t i = 0; i < ring.size(); ++i) {
        int b = graph.bond_between(ring[i], ring[(i + 1) % ring.size()]);
        if (b >= 0) out[b] = true;
      }
  return out;
}

namespace {

class PiMatcher {
public:
  PiMatcher(int n, std::vector<std::vector<std::pair<int, int>>> adj)
      : adj_(std::move(adj)), mate_(n, -1), mate_bond_(n, -1) {}

  bool solve(const std::vector<int> &atoms) {
    atoms_ = atoms;
    return search(static_cast<int>(atoms.size()));
  }

  int mate_bond(int atom) const { return mate_bond_[atom]; }

private:
  bool search(int remaining) {
    if (remaining == 0) return true;
    if (++steps_ > kMaxSteps) throw KekulizeError("kekulization search limit exceeded");
    // Most constrained unmatched atom first.
    int best = -1, best_options = 1 << 30;
    for (int a : atoms_) {
      if (mate_[a] >= 0) continue;
      int options = 0;
      for (auto [b, bond] : adj_[a])
        if (mate_[b] < 0) ++options;
      if (options < best_options) {
        best = a;
        best_options = options;
        if (options <= 1) break;
      }
    }
    if (best_options == 0) return false;
    for (auto [b, bond] : adj_[best]) {
      if (mate_[b] >= 0) continue;
      mate_[best] = b;
      mate_[b] = best;
      mate_bond_[best] = mate_bond_[b] = bond;
      if (search(remaining - 2)) return true;
      mate_[best] = mate_[b] = -1;
      mate_bond_[best] = mate_bond_[b] = -1;
    }
    return false;
  }

  static constexpr long kMaxSteps = 2'000'000;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<int> mate_;
  std::vector<int> mate_bond_;
  std::vector<int> atoms_;
  long steps_ = 0;
};

}  // namespace

MolGraph kekulize(const MolGraph &graph, std::span<const bool> candidates) {
  const int n = graph.num_atoms();
  std::vector<bool> cand(graph.num_bonds(), false);
  if (!candidates.empty()) {
    for (int b = 0; b < graph.num_bonds(); ++b)
      cand[b] = b < static_cast<int>(candidates.size()) && candidates[b];
  } else {
    auto rb = ring_bonds(graph);
    for (int b = 0; b < graph.num_bonds(); ++b) {
      const Bond &bond = graph.bond(b);
      cand[b] = rb[b] && bond.order == 1 && graph.atom(bond.begin).aromatic &&
                graph.atom(bond.end).aromatic;
    }
  }

  std::vector<bool> needs_pi(n, false);
  for (int a = 0; a < n; ++a) {
    const Atom &atom = graph.atom(a);
    if (!atom.aromatic) continue;
    int used = atom.explicit_h;
    bool has_candidate = false, has_multiple = false;
    for (const auto &nb : graph.neighbors(a)) {
      used += cand[nb.bond] ? 1 : graph.bond(nb.bond).order;
      has_candidate = has_candidate || cand[nb.bond];
      has_multiple = has_multiple || (!cand[nb.bond] && graph.bond(nb.bond).order > 1);
    }
    // An atom already carrying a double bond (exocyclic C=O, or a Kekule
    // input) has its pi electron placed.
    needs_pi[a] = has_candidate && !has_multiple &&
                  lowest_normal_valence(atom.element, atom.formal_charge) - used >= 1;
  }

  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int b = 0; b < graph.num_bonds(); ++b) {
    if (!cand[b]) continue;
    const Bond &bond = graph.bond(b);
    if (needs_pi[bond.begin] && needs_pi[bond.end]) {
      adj[bond.begin].push_back({bond.end, b});
      adj[bond.end].push_back({bond.begin, b});
    }
  }

  MolGraph out = graph;
  for (int b = 0; b < graph.num_bonds(); ++b)
    if (cand[b]) out.set_bond_order(b, 1);

  // Components of the pi subgraph are matched independently.
  std::vector<int> comp(n, -1);
  PiMatcher matcher(n, adj);
  for (int s = 0; s < n; ++s) {
    if (!needs_pi[s] || comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = s;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (auto [v, bond] : adj[members[i]])
        if (comp[v] < 0) {
          comp[v] = s;
          members.push_back(v);
        }
    if (members.size() % 2 != 0 || !matcher.solve(members))
      throw KekulizeError("cannot kekulize aromatic system containing atom " +
                          std::to_string(s));
    for (int a : members) {
      int bond = matcher.mate_bond(a);
      if (bond >= 0) out.set_bond_order(bond, 2);
    }
  }
  return out;
}

int implicit_hydrogens(const MolGraph &graph, int atom) {
  const Atom &a = graph.atom(atom);
  return implicit_hydrogen_count(a.element, a.formal_charge,
                                 graph.bond_order_sum(atom) + a.explicit_h);
}

double molecular_weight(const MolGraph &graph) {
  double mw = 0.0;
  const double h = atomic_weight(Element::kH);
  for (int a = 0; a < graph.num_atoms(); ++a) {
    mw += atomic_weight(graph.atom(a).element);
    mw += h * (graph.atom(a).explicit_h + implicit_hydrogens(graph, a));
  }
  return mw;
}

}  // namespace gselfies
