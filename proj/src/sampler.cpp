#include "gselfies/sampler.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include <omp.h>

#include "gselfies/decoder.h"
#include "gselfies/encoder.h"
#include "gselfies/kernels.h"
#include "gselfies/perception.h"

namespace gselfies {

std::uint64_t splitmix64(std::uint64_t &state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t draw_seed(std::uint64_t seed, std::uint64_t draw_index) {
  std::uint64_t state = seed;
  std::uint64_t a = splitmix64(state);
  state = a ^ draw_index;
  return splitmix64(state);
}

namespace {

int thread_count(int threads) { return threads > 0 ? threads : default_threads(); }

}  // namespace

TokenBag build_bag(const std::vector<MolGraph> &corpus, const GroupSet &set, int threads) {
  const int n = static_cast<int>(corpus.size());
  std::vector<std::vector<Token>> encoded(n);
  std::vector<char> failed(n, 0);
  auto work = [&](int i) {
    try {
      encoded[i] = encode(corpus[i], set);
    } catch (const EncodeError &) {
      failed[i] = 1;
    }
  };
  if (threads == 1) {
    for (int i = 0; i < n; ++i) work(i);
  } else {
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(threads))
    for (int i = 0; i < n; ++i) work(i);
  }
  TokenBag bag;
  for (int i = 0; i < n; ++i) {
    if (failed[i] || encoded[i].empty()) {
      bag.skipped += failed[i];
      continue;
    }
    bag.lengths.push_back(static_cast<int>(encoded[i].size()));
    bag.tokens.insert(bag.tokens.end(), encoded[i].begin(), encoded[i].end());
  }
  return bag;
}

std::vector<Sample> sample(const TokenBag &bag, const GroupSet &set, int n,
                           std::uint64_t seed, int threads) {
  if (n < 0) throw std::invalid_argument("sample count must be non-negative");
  if (n > 0 && (bag.tokens.empty() || bag.lengths.empty()))
    throw std::invalid_argument("empty token bag");
  std::vector<Sample> out(n);
  auto work = [&](int i) {
    std::mt19937_64 rng(draw_seed(seed, static_cast<std::uint64_t>(i)));
    int l = bag.lengths[uniform_below(rng, bag.lengths.size())];
    Sample &s = out[i];
    s.tokens.reserve(l);
    for (int j = 0; j < l; ++j) s.tokens.push_back(bag.tokens[uniform_below(rng, bag.tokens.size())]);
    s.molecule = decode(s.tokens, set);
  };
  if (threads == 1) {
    for (int i = 0; i < n; ++i) work(i);
  } else {
#pragma omp parallel for schedule(dynamic, 64) num_threads(thread_count(threads))
    for (int i = 0; i < n; ++i) work(i);
  }
  return out;
}

MoleculeMetrics metrics(const MolGraph &mol, int token_length) {
  MoleculeMetrics m;
  m.token_length = token_length;
  m.heavy_atom_count = mol.num_atoms();
  m.molecular_weight = molecular_weight(mol);
  m.ring_count = ring_count(mol);
  m.aromatic_atom_count = static_cast<int>(perceive_aromatic_atoms(mol).size());
  return m;
}

std::vector<MoleculeMetrics> metrics(const std::vector<Sample> &samples) {
  std::vector<MoleculeMetrics> out(samples.size());
  const int n = static_cast<int>(samples.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (int i = 0; i < n; ++i)
    out[i] = metrics(samples[i].molecule, static_cast<int>(samples[i].tokens.size()));
  return out;
}

std::string metrics_csv(const std::vector<MoleculeMetrics> &rows) {
  std::string out =
      "index,token_length,heavy_atom_count,molecular_weight,ring_count,aromatic_atom_count\n";
  char buf[160];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto &r = rows[i];
    std::snprintf(buf, sizeof buf, "%zu,%d,%d,%.3f,%d,%d\n", i, r.token_length,
                  r.heavy_atom_count, r.molecular_weight, r.ring_count, r.aromatic_atom_count);
    out += buf;
  }
  return out;
}

double wasserstein_1d(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("wasserstein_1d: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  // Sweep the merged support integrating |F_a(x) - F_b(x)| dx.
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double x = std::min(a[0], b[0]), total = 0.0;
  while (i < a.size() || j < b.size()) {
    double next;
    if (j == b.size() || (i < a.size() && a[i] <= b[j]))
      next = a[i];
    else
      next = b[j];
    total += std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb) * (next - x);
    x = next;
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
  }
  return total;
}

std::map<std::string, double> metric_distances(const std::vector<MoleculeMetrics> &a,
                                               const std::vector<MoleculeMetrics> &b) {
  auto column = [](const std::vector<MoleculeMetrics> &rows, auto field) {
    std::vector<double> out;
    for (const auto &r : rows) out.push_back(static_cast<double>(r.*field));
    return out;
  };
  return {
      {"token_length", wasserstein_1d(column(a, &MoleculeMetrics::token_length),
                                      column(b, &MoleculeMetrics::token_length))},
      {"heavy_atom_count", wasserstein_1d(column(a, &MoleculeMetrics::heavy_atom_count),
                                          column(b, &MoleculeMetrics::heavy_atom_count))},
      {"molecular_weight", wasserstein_1d(column(a, &MoleculeMetrics::molecular_weight),
                                          column(b, &MoleculeMetrics::molecular_weight))},
      {"ring_count", wasserstein_1d(column(a, &MoleculeMetrics::ring_count),
                                    column(b, &MoleculeMetrics::ring_count))},
      {"aromatic_atom_count", wasserstein_1d(column(a, &MoleculeMetrics::aromatic_atom_count),
                                             column(b, &MoleculeMetrics::aromatic_atom_count))},
  };
}

}  // namespace gselfies
