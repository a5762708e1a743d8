#include "gselfies/fragment.h"

#include <algorithm>
#include <functional>
#include <iterator>
#include <numeric>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <omp.h>

#include "gselfies/isomorphism.h"
#include "gselfies/kernels.h"
#include "gselfies/perception.h"

namespace gselfies {

namespace {

constexpr int kMaxFragmentAtoms = 25;

LabeledGraph annotated(const Fragment &f) {
  LabeledGraph g = to_labeled(f.graph);
  for (const auto &m : f.attachments) g.vertex_labels[m.host_atom] += 1;
  return g;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 29;
  return h;
}

}  // namespace

std::vector<Fragment> naive_fragment(const MolGraph &mol) {
  auto in_ring = ring_atoms(mol);
  auto ring_bond = ring_bonds(mol);
  std::vector<bool> cut(mol.num_bonds(), false);
  for (int b = 0; b < mol.num_bonds(); ++b) {
    const Bond &bond = mol.bond(b);
    cut[b] = !ring_bond[b] && bond.order == 1 && (in_ring[bond.begin] || in_ring[bond.end]);
  }
  // Components over uncut bonds.
  const int n = mol.num_atoms();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (const auto &nb : mol.neighbors(a))
        if (!cut[nb.bond] && comp[nb.atom] < 0) {
          comp[nb.atom] = count;
          stack.push_back(nb.atom);
        }
    }
    ++count;
  }
  std::vector<Fragment> out(count);
  std::vector<int> local(n);
  for (int a = 0; a < n; ++a) {
    Atom atom = mol.atom(a);
    atom.aromatic = false;
    local[a] = out[comp[a]].graph.add_atom(atom);
  }
  for (int b = 0; b < mol.num_bonds(); ++b) {
    const Bond &bond = mol.bond(b);
    if (cut[b]) {
      for (int end : {bond.begin, bond.end}) {
        Fragment &f = out[comp[end]];
        int index = static_cast<int>(f.attachments.size());
        f.attachments.push_back({1, index, local[end]});
      }
    } else {
      out[comp[bond.begin]].graph.add_bond(local[bond.begin], local[bond.end], bond.order);
    }
  }
  return out;
}

std::string fragment_smiles(const Fragment &fragment) {
  auto ranks = canonical_ranks(annotated(fragment));
  // Attachment indices follow the written order so a re-parse agrees.
  std::vector<AttachmentMarker> markers = fragment.attachments;
  std::sort(markers.begin(), markers.end(), [&](const auto &a, const auto &b) {
    return ranks[a.host_atom] < ranks[b.host_atom];
  });
  for (std::size_t i = 0; i < markers.size(); ++i) markers[i].attachment_index = static_cast<int>(i);
  return write_smiles(fragment.graph, markers, ranks);
}

bool same_fragment(const Fragment &a, const Fragment &b) {
  if (a.graph.num_atoms() != b.graph.num_atoms() ||
      a.attachments.size() != b.attachments.size())
    return false;
  return !find_isomorphism(annotated(a), annotated(b)).empty() || a.graph.num_atoms() == 0;
}

std::vector<FragmentCandidate> collect_fragments(const std::vector<MolGraph> &corpus,
                                                 int threads) {
  const int n = static_cast<int>(corpus.size());
  std::vector<std::vector<Fragment>> per_mol(n);
  auto keep = [](const Fragment &f) {
    int k = static_cast<int>(f.attachments.size());
    return k > 0 && k <= kMaxAttachments && f.graph.num_atoms() <= kMaxFragmentAtoms;
  };
  auto work = [&](int i) {
    for (auto &f : naive_fragment(corpus[i]))
      if (keep(f)) per_mol[i].push_back(std::move(f));
  };
  if (threads == 1) {
    for (int i = 0; i < n; ++i) work(i);
  } else {
    int t = threads > 0 ? threads : default_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(t)
    for (int i = 0; i < n; ++i) work(i);
  }

  // Sequential merge keeps first-seen order deterministic.
  std::vector<FragmentCandidate> pool;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  for (int i = 0; i < n; ++i) {
    for (auto &f : per_mol[i]) {
      std::uint64_t h = invariant_hash(annotated(f));
      auto &bucket = buckets[h];
      bool merged = false;
      for (int c : bucket)
        if (same_fragment(pool[c].fragment, f)) {
          ++pool[c].count;
          merged = true;
          break;
        }
      if (merged) continue;
      bucket.push_back(static_cast<int>(pool.size()));
      FragmentCandidate cand;
      cand.smiles = fragment_smiles(f);
      cand.fragment = std::move(f);
      cand.count = 1;
      cand.first_seen = i;
      pool.push_back(std::move(cand));
    }
  }
  return pool;
}

std::vector<std::uint64_t> path_fingerprint(const Fragment &fragment) {
  constexpr int kMaxBonds = 5;
  const MolGraph &g = fragment.graph;
  std::vector<int> marks(g.num_atoms(), 0);
  for (const auto &m : fragment.attachments) ++marks[m.host_atom];
  auto atom_code = [&](int a) {
    const Atom &x = g.atom(a);
    return (static_cast<std::uint64_t>(atomic_number(x.element)) << 16) |
           (static_cast<std::uint64_t>(x.formal_charge + 8) << 8) |
           static_cast<std::uint64_t>(marks[a]);
  };
  std::set<std::uint64_t> bits;
  std::vector<int> path;
  std::vector<bool> on_path(g.num_atoms(), false);
  // Direction-independent: hash the lexicographically smaller of the two
  // readings of each path.
  auto record = [&](const std::vector<std::uint64_t> &codes) {
    std::vector<std::uint64_t> rev(codes.rbegin(), codes.rend());
    const auto &use = std::min(codes, rev);
    std::uint64_t h = 1469598103934665603ULL;
    for (auto c : use) h = mix(h, c);
    bits.insert(h % 2048);
  };
  std::vector<std::uint64_t> codes;
  std::function<void(int, int)> walk = [&](int a, int depth) {
    record(codes);
    if (depth == kMaxBonds) return;
    for (const auto &nb : g.neighbors(a)) {
      if (on_path[nb.atom]) continue;
      on_path[nb.atom] = true;
      codes.push_back(100 + static_cast<std::uint64_t>(g.bond(nb.bond).order));
      codes.push_back(atom_code(nb.atom));
      walk(nb.atom, depth + 1);
      codes.pop_back();
      codes.pop_back();
      on_path[nb.atom] = false;
    }
  };
  for (int a = 0; a < g.num_atoms(); ++a) {
    on_path[a] = true;
    codes.assign(1, atom_code(a));
    walk(a, 0);
    on_path[a] = false;
  }
  return {bits.begin(), bits.end()};
}

double tanimoto_distance(const std::vector<std::uint64_t> &a,
                         const std::vector<std::uint64_t> &b) {
  std::vector<std::uint64_t> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  std::size_t uni = a.size() + b.size() - both.size();
  if (uni == 0) return 0.0;
  return 1.0 - static_cast<double>(both.size()) / static_cast<double>(uni);
}

GroupSet build_groupset(const std::vector<MolGraph> &corpus, const FragmentOptions &options,
                        std::vector<std::string> *warnings, const ValenceTable &table) {
  if (options.k < 1) throw std::invalid_argument("k must be at least 1");
  if (corpus.empty()) throw std::invalid_argument("empty corpus");
  auto pool = collect_fragments(corpus, options.threads);

  // Score descending, first-seen as tie-break.
  std::vector<int> by_score(pool.size());
  std::iota(by_score.begin(), by_score.end(), 0);
  std::stable_sort(by_score.begin(), by_score.end(),
                   [&](int a, int b) { return pool[a].score() > pool[b].score(); });

  const int k = std::min<int>(options.k, static_cast<int>(pool.size()));
  if (k < options.k && warnings)
    warnings->push_back("requested " + std::to_string(options.k) + " groups but only " +
                        std::to_string(pool.size()) + " candidates exist");

  std::vector<int> chosen;
  if (options.strategy == SelectionStrategy::kFrequency) {
    chosen.assign(by_score.begin(), by_score.begin() + k);
  } else if (k > 0) {
    std::vector<std::vector<std::uint64_t>> fps(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) fps[i] = path_fingerprint(pool[i].fragment);
    std::vector<double> min_dist(pool.size(), 2.0);
    std::vector<bool> taken(pool.size(), false);
    int next = by_score[0];
    while (static_cast<int>(chosen.size()) < k) {
      chosen.push_back(next);
      taken[next] = true;
      for (std::size_t i = 0; i < pool.size(); ++i)
        min_dist[i] = std::min(min_dist[i], tanimoto_distance(fps[i], fps[next]));
      next = -1;
      for (int c : by_score)  // score order breaks distance ties
        if (!taken[c] && (next < 0 || min_dist[c] > min_dist[next])) next = c;
      if (next < 0) break;
    }
  }

  GroupSet set(table);
  for (std::size_t i = 0; i < chosen.size(); ++i)
    set.add(make_group("g" + std::to_string(i + 1), pool[chosen[i]].smiles, std::nullopt, 0,
                       table));
  return set;
}

}  // namespace gselfies
