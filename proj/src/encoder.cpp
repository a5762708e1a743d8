#include "gselfies/encoder.h"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>
#include <numeric>

#include "gselfies/decoder.h"
#include "gselfies/isomorphism.h"

namespace gselfies {

namespace {

bool same_atom(const Atom &a, const Atom &b) {
  return a.element == b.element && a.formal_charge == b.formal_charge &&
         a.explicit_h == b.explicit_h;
}

class EmbeddingSearch {
public:
  EmbeddingSearch(const MolGraph &mol, const Group &group)
      : mol_(mol), group_(group), t_(group.templ), n_(t_.num_atoms()),
        map_(n_, -1), used_(mol.num_atoms(), false), hosted_(n_) {
    for (const auto &m : group.attachments) hosted_[m.host_atom].push_back(m.attachment_index);
    plan_order();
  }

  std::vector<GroupMatch> run() {
    if (n_ <= mol_.num_atoms()) extend(0);
    std::sort(out_.begin(), out_.end(),
              [](const GroupMatch &a, const GroupMatch &b) { return a.atoms < b.atoms; });
    return std::move(out_);
  }

private:
  // Most-constrained-first: start at the highest degree atom, then always
  // take the unplaced atom with most placed neighbours.
  void plan_order() {
    std::vector<bool> placed(n_, false);
    std::vector<int> links(n_, 0);
    anchor_.assign(n_, -1);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int u = 0; u < n_; ++u) {
        if (placed[u]) continue;
        if (best < 0 || links[u] > links[best] ||
            (links[u] == links[best] && t_.degree(u) > t_.degree(best)))
          best = u;
      }
      placed[best] = true;
      order_.push_back(best);
      for (const auto &nb : t_.neighbors(best)) {
        ++links[nb.atom];
        if (!placed[nb.atom] && anchor_[nb.atom] < 0) anchor_[nb.atom] = best;
      }
    }
  }

  bool compatible(int u, int v) const {
    if (used_[v] || !same_atom(t_.atom(u), mol_.atom(v))) return false;
    int external = mol_.degree(v) - t_.degree(u);
    if (external < 0 || external > static_cast<int>(hosted_[u].size())) return false;
    for (const auto &nb : t_.neighbors(u))
      if (int w = map_[nb.atom]; w >= 0) {
        int b = mol_.bond_between(v, w);
        if (b < 0 || mol_.bond(b).order != t_.bond(nb.bond).order) return false;
      }
    // Induced: no molecule bond between v and an image without a template bond.
    for (const auto &nb : mol_.neighbors(v)) {
      if (!used_[nb.atom]) continue;
      int w = inverse_.at(nb.atom);
      if (t_.bond_between(u, w) < 0) return false;
    }
    return true;
  }

  void extend(int depth) {
    if (depth == n_) return accept();
    int u = order_[depth];
    auto try_candidate = [&](int v) {
      if (!compatible(u, v)) return;
      map_[u] = v;
      used_[v] = true;
      inverse_[v] = u;
      extend(depth + 1);
      inverse_.erase(v);
      used_[v] = false;
      map_[u] = -1;
    };
    if (anchor_[u] >= 0) {
      for (const auto &nb : mol_.neighbors(map_[anchor_[u]])) try_candidate(nb.atom);
    } else {
      for (int v = 0; v < mol_.num_atoms(); ++v) try_candidate(v);
    }
  }

  // Assigns external bonds to attachments per host: orders descending
  // against caps descending.
  void accept() {
    GroupMatch m{&group_, map_, std::vector<int>(group_.num_attachments(), -1)};
    for (int u = 0; u < n_; ++u) {
      std::vector<int> bonds;
      for (const auto &nb : mol_.neighbors(map_[u]))
        if (!used_[nb.atom]) bonds.push_back(nb.bond);
      if (bonds.empty()) continue;
      std::vector<int> atts = hosted_[u];
      std::stable_sort(bonds.begin(), bonds.end(), [&](int a, int b) {
        return mol_.bond(a).order > mol_.bond(b).order;
      });
      std::stable_sort(atts.begin(), atts.end(), [&](int a, int b) {
        return group_.attachments[a].valency_cap > group_.attachments[b].valency_cap;
      });
      for (std::size_t i = 0; i < bonds.size(); ++i) {
        if (mol_.bond(bonds[i]).order > group_.attachments[atts[i]].valency_cap) return;
        m.attachment_bond[atts[i]] = bonds[i];
      }
    }
    out_.push_back(std::move(m));
  }

  const MolGraph &mol_;
  const Group &group_;
  const MolGraph &t_;
  const int n_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::map<int, int> inverse_;
  std::vector<std::vector<int>> hosted_;
  std::vector<int> order_, anchor_;
  std::vector<GroupMatch> out_;
};

}  // namespace

std::vector<GroupMatch> find_embeddings(const MolGraph &mol, const Group &group) {
  return EmbeddingSearch(mol, group).run();
}

std::vector<GroupMatch> match_groups(const MolGraph &mol, const GroupSet &set) {
  std::vector<GroupMatch> accepted;
  std::vector<bool> taken(mol.num_atoms(), false);
  for (const Group *g : set.matching_order()) {
    for (auto &m : find_embeddings(mol, *g)) {
      if (std::any_of(m.atoms.begin(), m.atoms.end(), [&](int a) { return taken[a]; }))
        continue;
      for (int a : m.atoms) taken[a] = true;
      accepted.push_back(std::move(m));
    }
  }
  return accepted;
}

namespace {

BondModifier modifier_for(const Bond &b) {
  if (b.order == 2) return BondModifier::kDouble;
  if (b.order == 3) return BondModifier::kTriple;
  if (b.stereo == BondStereo::kUp) return BondModifier::kUp;
  if (b.stereo == BondStereo::kDown) return BondModifier::kDown;
  return BondModifier::kNone;
}

enum class Exit { kOpen, kSelfClosed };

struct RingDirective {
  int distance;
  bool forward;
  int bond;
};

struct Selection {
  int attachment;
  int child = -1;          // node entered through this attachment
  RingDirective ring{};    // used when child < 0
};

struct Node {
  int match = -1;  // -1: plain atom
  int atom = -1;   // plain atom id
  std::vector<int> children;   // emission order
  int parent_bond = -1;
  int size = 0;                // atoms in subtree
  std::vector<RingDirective> rings;  // plain nodes
  std::vector<Selection> selections; // group nodes
};

class Encoder {
public:
  Encoder(const MolGraph &mol, const GroupSet &set, std::span<const int> ranks)
      : mol_(mol), set_(set), overload_(OverloadTable::for_groups(set)) {
    check_input();
    if (ranks.empty()) {
      rank_ = canonical_ranks(mol);
    } else {
      if (static_cast<int>(ranks.size()) != mol.num_atoms())
        throw EncodeError("rank vector size mismatch");
      rank_.assign(ranks.begin(), ranks.end());
    }
  }

  std::vector<Token> run() {
    if (mol_.empty()) return {};
    matches_ = match_groups(mol_, set_);
    build_nodes();
    int start_atom = static_cast<int>(
        std::min_element(rank_.begin(), rank_.end()) - rank_.begin());
    int root = node_of_[start_atom];
    std::vector<bool> bond_seen(mol_.num_bonds(), false), visited(nodes_.size(), false);
    dfs(root, visited, bond_seen);
    order_children(root);
    int counter = 0;
    assign_positions(root, counter);
    place_rings();
    emit(root);
    return std::move(out_);
  }

private:
  void check_input() {
    for (int a = 0; a < mol_.num_atoms(); ++a)
      if (!set_.table().supports(mol_.atom(a).element))
        throw EncodeError("atom " + std::to_string(a) + ": element " +
                          std::string(element_symbol(mol_.atom(a).element)) +
                          " is not in the valence table");
    auto problems = validate(mol_, set_.table());
    if (!problems.empty()) throw EncodeError("invalid molecule: " + problems.front());
    if (!mol_.empty() && !is_connected(mol_))
      throw EncodeError("molecule is disconnected");
  }

  void build_nodes() {
    node_of_.assign(mol_.num_atoms(), -1);
    for (std::size_t i = 0; i < matches_.size(); ++i) {
      Node n;
      n.match = static_cast<int>(i);
      for (int a : matches_[i].atoms) node_of_[a] = static_cast<int>(nodes_.size());
      nodes_.push_back(n);
    }
    for (int a = 0; a < mol_.num_atoms(); ++a) {
      if (node_of_[a] >= 0) continue;
      Node n;
      n.atom = a;
      node_of_[a] = static_cast<int>(nodes_.size());
      nodes_.push_back(n);
    }
    attachment_of_bond_.assign(mol_.num_bonds(), {});
    for (std::size_t i = 0; i < matches_.size(); ++i) {
      const auto &m = matches_[i];
      for (int att = 0; att < m.group->num_attachments(); ++att)
        if (int b = m.attachment_bond[att]; b >= 0)
          attachment_of_bond_[b].push_back({static_cast<int>(i), att});
    }
  }

  std::vector<int> atoms_of(int node) const {
    const Node &n = nodes_[node];
    if (n.match < 0) return {n.atom};
    return matches_[n.match].atoms;
  }

  int attachment_for(int match, int bond) const {
    for (auto [m, att] : attachment_of_bond_[bond])
      if (m == match) return att;
    throw EncodeError("internal: bond without attachment");
  }

  void dfs(int u, std::vector<bool> &visited, std::vector<bool> &bond_seen) {
    visited[u] = true;
    struct Edge {
      int bond, near, far;
    };
    std::vector<Edge> edges;
    for (int a : atoms_of(u))
      for (const auto &nb : mol_.neighbors(a))
        if (node_of_[nb.atom] != u) edges.push_back({nb.bond, a, nb.atom});
    std::sort(edges.begin(), edges.end(), [&](const Edge &x, const Edge &y) {
      if (rank_[x.far] != rank_[y.far]) return rank_[x.far] < rank_[y.far];
      return rank_[x.near] < rank_[y.near];
    });
    nodes_[u].size = static_cast<int>(atoms_of(u).size());
    for (const auto &e : edges) {
      if (bond_seen[e.bond]) continue;
      bond_seen[e.bond] = true;
      int v = node_of_[e.far];
      if (!visited[v]) {
        nodes_[v].parent_bond = e.bond;
        nodes_[u].children.push_back(v);
        dfs(v, visited, bond_seen);
        nodes_[u].size += nodes_[v].size;
      } else {
        ring_bonds_.push_back(e.bond);
      }
    }
  }

  void order_children(int u) {
    Node &n = nodes_[u];
    if (n.match < 0) {
      std::stable_sort(n.children.begin(), n.children.end(),
                       [&](int a, int b) { return nodes_[a].size < nodes_[b].size; });
    } else {
      std::stable_sort(n.children.begin(), n.children.end(), [&](int a, int b) {
        return attachment_for(n.match, nodes_[a].parent_bond) <
               attachment_for(n.match, nodes_[b].parent_bond);
      });
    }
    for (int c : n.children) order_children(c);
  }

  void assign_positions(int u, int &counter) {
    if (pos_.empty()) pos_.assign(mol_.num_atoms(), -1);
    for (int a : atoms_of(u)) pos_[a] = counter++;
    for (int c : nodes_[u].children) assign_positions(c, counter);
  }

  void place_rings() {
    for (int b : ring_bonds_) {
      const Bond &bond = mol_.bond(b);
      int a = bond.begin, c = bond.end;
      int na = node_of_[a], nc = node_of_[c];
      bool ga = nodes_[na].match >= 0, gc = nodes_[nc].match >= 0;
      if (!ga && !gc) {
        int later = pos_[a] > pos_[c] ? a : c, earlier = bond.other(later);
        nodes_[node_of_[later]].rings.push_back({pos_[later] - pos_[earlier], false, b});
      } else if (ga != gc) {
        int plain = ga ? c : a, host = bond.other(plain);
        int d = pos_[host] - pos_[plain];
        nodes_[node_of_[plain]].rings.push_back({std::abs(d), d > 0, b});
      } else {
        // Both in groups: a selection on the later group carries the ring.
        int later = pos_[matches_[nodes_[na].match].atoms[0]] >
                            pos_[matches_[nodes_[nc].match].atoms[0]]
                        ? a
                        : c;
        int earlier = bond.other(later);
        Node &g = nodes_[node_of_[later]];
        Selection s;
        s.attachment = attachment_for(g.match, b);
        s.ring = {pos_[later] - pos_[earlier], false, b};
        g.selections.push_back(s);
      }
    }
    for (auto &n : nodes_) {
      std::sort(n.rings.begin(), n.rings.end(), [](const RingDirective &x, const RingDirective &y) {
        return std::tie(x.forward, x.distance) < std::tie(y.forward, y.distance);
      });
      if (n.match < 0) continue;
      for (int c : n.children) {
        Selection s;
        s.attachment = attachment_for(n.match, nodes_[c].parent_bond);
        s.child = c;
        n.selections.push_back(s);
      }
      std::sort(n.selections.begin(), n.selections.end(),
                [](const Selection &x, const Selection &y) { return x.attachment < y.attachment; });
    }
  }

  void digit(int d) { out_.push_back(overload_.token_for(d)); }

  void ring_tokens(const RingDirective &r) {
    if (r.distance >= 4096)
      throw EncodeError("ring span " + std::to_string(r.distance) + " exceeds three digits");
    int width = r.distance < 16 ? 1 : r.distance < 256 ? 2 : 3;
    out_.push_back(Token::ring(width, modifier_for(mol_.bond(r.bond))));
    if (r.forward) out_.push_back(Token::forward());
    for (int i = width - 1; i >= 0; --i) digit((r.distance >> (4 * i)) & 15);
  }

  Exit emit(int u) {
    const Node &n = nodes_[u];
    const BondModifier mod =
        n.parent_bond >= 0 ? modifier_for(mol_.bond(n.parent_bond)) : BondModifier::kNone;
    if (n.match < 0) {
      const Atom &a = mol_.atom(n.atom);
      out_.push_back(Token::atom(a.element, mod, a.formal_charge, a.explicit_h));
      for (const auto &r : n.rings) ring_tokens(r);
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i + 1 == n.children.size()) return emit(n.children[i]);
        out_.push_back(Token::branch());
        if (emit(n.children[i]) == Exit::kOpen) out_.push_back(Token::pop());
      }
      return Exit::kOpen;
    }

    const GroupMatch &m = matches_[n.match];
    const int k = m.group->num_attachments();
    const int entry = n.parent_bond >= 0 ? attachment_for(n.match, n.parent_bond) : 0;
    out_.push_back(Token::group(entry, m.group->name, mod));
    std::vector<bool> occupied(k, false);
    int occupied_count = 0;
    if (n.parent_bond >= 0) occupied[entry] = true, ++occupied_count;
    int current = entry;
    for (std::size_t i = 0; i < n.selections.size(); ++i) {
      const Selection &s = n.selections[i];
      digit(((s.attachment - current) % k + k) % k);
      occupied[s.attachment] = true;
      ++occupied_count;
      current = s.attachment;
      Exit body = Exit::kOpen;
      if (s.child >= 0)
        body = emit(s.child);
      else
        ring_tokens(s.ring);
      bool last = i + 1 == n.selections.size();
      if (last && occupied_count == k) return body;
      if (body == Exit::kOpen) out_.push_back(Token::pop());
    }
    return occupied_count == k ? Exit::kSelfClosed : Exit::kOpen;
  }

  const MolGraph &mol_;
  const GroupSet &set_;
  OverloadTable overload_;
  std::vector<int> rank_;
  std::vector<GroupMatch> matches_;
  std::vector<Node> nodes_;
  std::vector<int> node_of_;
  std::vector<std::vector<std::pair<int, int>>> attachment_of_bond_;
  std::vector<int> ring_bonds_;
  std::vector<int> pos_;
  std::vector<Token> out_;
};

}  // namespace

std::vector<Token> encode(const MolGraph &mol, const GroupSet &set,
                          std::span<const int> ranks) {
  return Encoder(mol, set, ranks).run();
}

std::vector<Token> expand_groups(const std::vector<Token> &tokens, const GroupSet &set) {
  for (const auto &t : tokens)
    if (t.kind == TokenKind::kGroup && !set.find(t.name))
      throw EncodeError("unknown group '" + t.name + "'");
  MolGraph mol = decode(tokens, set);
  std::vector<int> ranks(mol.num_atoms());
  std::iota(ranks.begin(), ranks.end(), 0);
  return encode(mol, GroupSet(set.table()), ranks);
}

}  // namespace gselfies
