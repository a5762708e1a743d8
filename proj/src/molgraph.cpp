#include "gselfies/molgraph.h"

#include <stdexcept>

namespace gselfies {

int MolGraph::add_atom(Atom atom) {
  atom.placement_index = num_atoms();
  atoms_.push_back(atom);
  adjacency_.emplace_back();
  return atom.placement_index;
}

int MolGraph::add_bond(int a, int b, int order, BondStereo stereo) {
  if (a < 0 || b < 0 || a >= num_atoms() || b >= num_atoms())
    throw std::out_of_range("bond endpoint out of range");
  if (a == b) throw std::invalid_argument("self bond");
  if (bond_between(a, b) >= 0) throw std::invalid_argument("parallel bond");
  if (order < 1 || order > 3) throw std::invalid_argument("bond order out of range");
  int id = num_bonds();
  bonds_.push_back(Bond{a, b, order, stereo});
  adjacency_[a].push_back({b, id});
  adjacency_[b].push_back({a, id});
  return id;
}

int MolGraph::bond_between(int a, int b) const {
  const auto &adj = adjacency_.at(a);
  for (const auto &n : adj)
    if (n.atom == b) return n.bond;
  return -1;
}

int MolGraph::bond_order_sum(int atom) const {
  int sum = 0;
  for (const auto &n : adjacency_.at(atom)) sum += bonds_[n.bond].order;
  return sum;
}

void MolGraph::set_bond_order(int bond, int order) {
  if (order < 1 || order > 3) throw std::invalid_argument("bond order out of range");
  bonds_.at(bond).order = order;
}

int free_valence(const MolGraph &graph, int atom, const ValenceTable &table) {
  const Atom &a = graph.atom(atom);
  auto maxv = table.max_valence(a.element, a.formal_charge);
  if (!maxv) return 0;
  int fv = *maxv - a.explicit_h - graph.bond_order_sum(atom);
  return fv < 0 ? 0 : fv;
}

std::vector<std::string> validate(const MolGraph &graph,
                                  const ValenceTable &table) {
  std::vector<std::string> problems;
  for (int i = 0; i < graph.num_atoms(); ++i) {
    const Atom &a = graph.atom(i);
    if (a.placement_index != i)
      problems.push_back("atom " + std::to_string(i) + ": placement index " +
                         std::to_string(a.placement_index));
    if (a.explicit_h < 0)
      problems.push_back("atom " + std::to_string(i) + ": negative H count");
    auto maxv = table.max_valence(a.element, a.formal_charge);
    if (!maxv) {
      problems.push_back("atom " + std::to_string(i) + ": element " +
                         std::string(element_symbol(a.element)) +
                         " not in valence table");
      continue;
    }
    int used = a.explicit_h + graph.bond_order_sum(i);
    if (used > *maxv)
      problems.push_back("atom " + std::to_string(i) + ": valence " +
                         std::to_string(used) + " exceeds " +
                         std::to_string(*maxv));
  }
  for (int b = 0; b < graph.num_bonds(); ++b) {
    const Bond &bond = graph.bond(b);
    if (bond.begin == bond.end)
      problems.push_back("bond " + std::to_string(b) + ": self loop");
    if (bond.order < 1 || bond.order > 3)
      problems.push_back("bond " + std::to_string(b) + ": bad order");
    if (graph.bond_between(bond.begin, bond.end) != b)
      problems.push_back("bond " + std::to_string(b) + ": duplicate");
  }
  return problems;
}

std::vector<int> connected_components(const MolGraph &graph, int *count) {
  std::vector<int> comp(graph.num_atoms(), -1);
  std::vector<int> stack;
  int n = 0;
  for (int s = 0; s < graph.num_atoms(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = n;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto &nb : graph.neighbors(u)) {
        if (comp[nb.atom] < 0) {
          comp[nb.atom] = n;
          stack.push_back(nb.atom);
        }
      }
    }
    ++n;
  }
  if (count) *count = n;
  return comp;
}

bool is_connected(const MolGraph &graph) {
  int n = 0;
  connected_components(graph, &n);
  return n <= 1;
}

}  // namespace gselfies
