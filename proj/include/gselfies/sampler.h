#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gselfies/group.h"
#include "gselfies/molgraph.h"
#include "gselfies/token.h"

namespace gselfies {

// SplitMix64 (Steele, Lea, Flood 2014); seeds one independent stream per draw.
std::uint64_t splitmix64(std::uint64_t &state);
std::uint64_t draw_seed(std::uint64_t seed, std::uint64_t draw_index);

// Uniform integer in [0, bound) from a 64-bit generator by rejection, so the
// stream is identical on every platform (unlike std::uniform_int_distribution).
template <class Rng> std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % bound;
}

struct TokenBag {
  std::vector<Token> tokens;   // the multiset, in corpus order
  std::vector<int> lengths;    // one per encoded string
  int skipped = 0;             // molecules that failed to encode
};

TokenBag build_bag(const std::vector<MolGraph> &corpus, const GroupSet &set,
                   int threads = 0);

struct Sample {
  std::vector<Token> tokens;
  MolGraph molecule;
};

// Draw i uses std::mt19937_64 seeded with draw_seed(seed, i): a uniform
// source length l, then l tokens uniformly with replacement. Results are
// ordered by draw index and independent of the thread count.
std::vector<Sample> sample(const TokenBag &bag, const GroupSet &set, int n,
                           std::uint64_t seed, int threads = 0);

struct MoleculeMetrics {
  int token_length = 0;
  int heavy_atom_count = 0;
  double molecular_weight = 0.0;
  int ring_count = 0;
  int aromatic_atom_count = 0;
};

MoleculeMetrics metrics(const MolGraph &mol, int token_length = 0);
std::vector<MoleculeMetrics> metrics(const std::vector<Sample> &samples);

std::string metrics_csv(const std::vector<MoleculeMetrics> &rows);

// Exact 1-Wasserstein distance between the empirical distributions,
// the integral of |F_a - F_b|. Equals the mean absolute difference of the
// sorted samples when the sizes match.
double wasserstein_1d(std::vector<double> a, std::vector<double> b);

// Per-metric W1 between two metric tables.
std::map<std::string, double> metric_distances(const std::vector<MoleculeMetrics> &a,
                                               const std::vector<MoleculeMetrics> &b);

}  // namespace gselfies
