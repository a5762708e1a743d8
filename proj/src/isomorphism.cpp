#include "gselfies/isomorphism.h"

#include <algorithm>
#include <numeric>

#include "gselfies/perception.h"

namespace gselfies {

LabeledGraph to_labeled(const MolGraph &graph, BondLabeling labeling) {
  LabeledGraph out;
  const int n = graph.num_atoms();
  out.vertex_labels.resize(n);
  out.adjacency.resize(n);
  for (int a = 0; a < n; ++a) {
    const Atom &atom = graph.atom(a);
    // Degree leads so refinement ranks terminal atoms first.
    out.vertex_labels[a] =
        (static_cast<std::uint64_t>(graph.degree(a)) << 40) |
        (static_cast<std::uint64_t>(atomic_number(atom.element)) << 24) |
        (static_cast<std::uint64_t>(atom.formal_charge + 128) << 16) |
        (static_cast<std::uint64_t>(atom.explicit_h) << 8);
  }
  std::vector<bool> aromatic;
  if (labeling == BondLabeling::kAromatic) aromatic = aromatic_bonds(graph);
  for (int b = 0; b < graph.num_bonds(); ++b) {
    const Bond &bond = graph.bond(b);
    int label = bond.order;
    if (!aromatic.empty() && aromatic[b]) label = 4;
    out.add_edge(bond.begin, bond.end, label);
  }
  return out;
}

namespace {

std::vector<int> initial_ranks(const LabeledGraph &g) {
  std::vector<std::uint64_t> labels = g.vertex_labels;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<int> ranks(g.size());
  for (int v = 0; v < g.size(); ++v)
    ranks[v] = static_cast<int>(
        std::lower_bound(labels.begin(), labels.end(), g.vertex_labels[v]) -
        labels.begin());
  return ranks;
}

int count_classes(const std::vector<int> &ranks) {
  if (ranks.empty()) return 0;
  return *std::max_element(ranks.begin(), ranks.end()) + 1;
}

// Order-preserving refinement: a vertex's new rank is the position of
// (old rank, sorted neighbour (edge label, rank) list) among all distinct
// signatures.
std::vector<int> refine(const LabeledGraph &g, std::vector<int> ranks) {
  const int n = g.size();
  using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
  std::vector<Signature> sigs(n);
  std::vector<int> order(n);
  int classes = count_classes(ranks);
  while (true) {
    for (int v = 0; v < n; ++v) {
      sigs[v].first = ranks[v];
      auto &nb = sigs[v].second;
      nb.clear();
      for (auto [u, label] : g.adjacency[v]) nb.push_back({label, ranks[u]});
      std::sort(nb.begin(), nb.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return sigs[x] < sigs[y]; });
    std::vector<int> next(n);
    int r = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || sigs[order[i]] != sigs[order[i - 1]]) ++r;
      next[order[i]] = r;
    }
    int next_classes = r + 1;
    ranks = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return ranks;
}

LabeledGraph disjoint_union(const LabeledGraph &a, const LabeledGraph &b) {
  LabeledGraph u;
  u.vertex_labels = a.vertex_labels;
  u.vertex_labels.insert(u.vertex_labels.end(), b.vertex_labels.begin(),
                         b.vertex_labels.end());
  u.adjacency = a.adjacency;
  const int offset = a.size();
  for (const auto &adj : b.adjacency) {
    auto &row = u.adjacency.emplace_back();
    for (auto [v, label] : adj) row.push_back({v + offset, label});
  }
  return u;
}

int edge_label(const LabeledGraph &g, int a, int b) {
  for (auto [v, label] : g.adjacency[a])
    if (v == b) return label;
  return -1;
}

class Matcher {
public:
  Matcher(const LabeledGraph &a, const LabeledGraph &b, std::vector<int> ca,
          std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        map_ab_(a.size(), -1), used_b_(b.size(), false) {
    build_order();
  }

  bool run() { return extend(0); }
  const std::vector<int> &mapping() const { return map_ab_; }

private:
  void build_order() {
    const int n = a_.size();
    std::vector<int> class_size(n + 1, 0);
    for (int c : ca_) ++class_size[c];
    std::vector<bool> placed(n, false);
    std::vector<int> mapped_nbrs(n, 0);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0) {
          best = v;
          continue;
        }
        auto key = [&](int x) {
          return std::tuple(mapped_nbrs[x] > 0 ? 0 : 1, class_size[ca_[x]],
                            -mapped_nbrs[x], x);
        };
        if (key(v) < key(best)) best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      for (auto [u, label] : a_.adjacency[best]) ++mapped_nbrs[u];
    }
    position_.assign(n, 0);
    for (int i = 0; i < n; ++i) position_[order_[i]] = i;
  }

  bool consistent(int u, int v) const {
    if (ca_[u] != cb_[v] || a_.vertex_labels[u] != b_.vertex_labels[v])
      return false;
    int mapped = 0;
    for (auto [w, label] : a_.adjacency[u]) {
      if (map_ab_[w] < 0) continue;
      ++mapped;
      if (edge_label(b_, v, map_ab_[w]) != label) return false;
    }
    int mapped_b = 0;
    for (auto [w, label] : b_.adjacency[v])
      if (used_b_[w]) ++mapped_b;
    return mapped == mapped_b;
  }

  bool extend(int depth) {
    if (depth == static_cast<int>(order_.size())) return true;
    int u = order_[depth];
    int anchor = -1;
    for (auto [w, label] : a_.adjacency[u])
      if (map_ab_[w] >= 0) {
        anchor = map_ab_[w];
        break;
      }
    auto attempt = [&](int v) {
      if (used_b_[v] || !consistent(u, v)) return false;
      map_ab_[u] = v;
      used_b_[v] = true;
      if (extend(depth + 1)) return true;
      map_ab_[u] = -1;
      used_b_[v] = false;
      return false;
    };
    if (anchor >= 0) {
      for (auto [v, label] : b_.adjacency[anchor])
        if (attempt(v)) return true;
    } else {
      for (int v = 0; v < b_.size(); ++v)
        if (attempt(v)) return true;
    }
    return false;
  }

  const LabeledGraph &a_;
  const LabeledGraph &b_;
  std::vector<int> ca_, cb_;
  std::vector<int> order_, position_;
  std::vector<int> map_ab_;
  std::vector<bool> used_b_;
};

std::size_t edge_count(const LabeledGraph &g) {
  std::size_t n = 0;
  for (const auto &row : g.adjacency) n += row.size();
  return n / 2;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>>
refine_jointly(const LabeledGraph &a, const LabeledGraph &b) {
  LabeledGraph u = disjoint_union(a, b);
  auto ranks = refine(u, initial_ranks(u));
  return {std::vector<int>(ranks.begin(), ranks.begin() + a.size()),
          std::vector<int>(ranks.begin() + a.size(), ranks.end())};
}

std::vector<int> find_isomorphism(const LabeledGraph &a, const LabeledGraph &b) {
  if (a.size() != b.size() || edge_count(a) != edge_count(b)) return {};
  if (a.size() == 0) return {};
  auto [ca, cb] = refine_jointly(a, b);
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return {};
  Matcher m(a, b, std::move(ca), std::move(cb));
  if (!m.run()) return {};
  return m.mapping();
}

bool isomorphic(const LabeledGraph &a, const LabeledGraph &b) {
  if (a.size() == 0 && b.size() == 0) return true;
  return !find_isomorphism(a, b).empty();
}

bool isomorphic(const MolGraph &a, const MolGraph &b) {
  return isomorphic(to_labeled(a, BondLabeling::kAromatic),
                    to_labeled(b, BondLabeling::kAromatic));
}

bool isomorphic_exact(const MolGraph &a, const MolGraph &b) {
  return isomorphic(to_labeled(a), to_labeled(b));
}

std::vector<int> canonical_ranks(const LabeledGraph &graph) {
  const int n = graph.size();
  auto ranks = refine(graph, initial_ranks(graph));
  while (count_classes(ranks) < n) {
    // Smallest tied class; individualize its lowest id.
    std::vector<int> size(n, 0);
    for (int r : ranks) ++size[r];
    int tied = -1;
    for (int r = 0; r < n; ++r)
      if (size[r] > 1) {
        tied = r;
        break;
      }
    int chosen = -1;
    for (int v = 0; v < n; ++v)
      if (ranks[v] == tied) {
        chosen = v;
        break;
      }
    // Shift everything at or above |tied| up by one, except the chosen vertex.
    for (int v = 0; v < n; ++v)
      if (ranks[v] >= tied && v != chosen) ranks[v] += 1;
    // Re-densify.
    std::vector<int> sorted = ranks;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int &r : ranks)
      r = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), r) -
                           sorted.begin());
    ranks = refine(graph, ranks);
  }
  return ranks;
}

std::vector<int> canonical_ranks(const MolGraph &graph) {
  return canonical_ranks(to_labeled(graph));
}

std::uint64_t invariant_hash(const LabeledGraph &graph) {
  auto ranks = refine(graph, initial_ranks(graph));
  const int n = graph.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return ranks[x] < ranks[y]; });
  auto mix = [](std::uint64_t h, std::uint64_t v) {
    // splitmix64 finalizer over the running value
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 31;
    return h;
  };
  std::uint64_t h = mix(0, static_cast<std::uint64_t>(n));
  for (int v : order) {
    h = mix(h, graph.vertex_labels[v]);
    h = mix(h, static_cast<std::uint64_t>(ranks[v]));
    std::vector<std::pair<int, int>> nb;
    for (auto [u, label] : graph.adjacency[v]) nb.push_back({label, ranks[u]});
    std::sort(nb.begin(), nb.end());
    for (auto [label, r] : nb)
      h = mix(h, (static_cast<std::uint64_t>(label) << 32) |
                     static_cast<std::uint32_t>(r));
  }
  return h;
}

}  // namespace gselfies
