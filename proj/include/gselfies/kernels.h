#pragma once

// Corpus-level kernels. Each has a plain-loop serial reference and an
// OpenMP version; both produce identical, index-ordered output.

#include <cstdint>
#include <string>
#include <vector>

#include "gselfies/group.h"
#include "gselfies/molgraph.h"
#include "gselfies/token.h"

namespace gselfies {

// Thread count from GSELFIES_THREADS, else the OpenMP default.
int default_threads();

struct EncodeOutcome {
  std::vector<Token> tokens;
  std::string error;  // empty on success
};

std::vector<EncodeOutcome> encode_corpus_serial(const std::vector<MolGraph> &mols,
                                                const GroupSet &set);
std::vector<EncodeOutcome> encode_corpus_parallel(const std::vector<MolGraph> &mols,
                                                  const GroupSet &set, int threads = 0);

std::vector<MolGraph> decode_corpus_serial(const std::vector<std::vector<Token>> &strings,
                                           const GroupSet &set);
std::vector<MolGraph> decode_corpus_parallel(const std::vector<std::vector<Token>> &strings,
                                             const GroupSet &set, int threads = 0);

struct RoundTripFailure {
  std::size_t index;
  std::string reason;
  std::string tokens;
};

struct RoundTripResult {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<RoundTripFailure> failures;
  double pass_rate() const { return total ? static_cast<double>(passed) / total : 1.0; }
};

// isomorphic(decode(encode(m))) per molecule.
RoundTripResult roundtrip_serial(const std::vector<MolGraph> &mols, const GroupSet &set);
RoundTripResult roundtrip_parallel(const std::vector<MolGraph> &mols, const GroupSet &set,
                                   int threads = 0);

struct FuzzOptions {
  long n = 100000;
  int max_len = 100;
  std::uint64_t seed = 0;
  bool check_roundtrip = false;  // also re-encode each decoded graph
};

struct FuzzViolation {
  long draw;
  std::string tokens;
  std::string problem;
};

struct FuzzResult {
  long strings = 0;
  long tokens = 0;
  long atoms = 0;
  std::vector<FuzzViolation> violations;  // first few, in draw order
  long violation_count = 0;
};

// Draw i: std::mt19937_64(draw_seed(seed, i)), length uniform in
// [1, max_len], tokens uniform over alphabet(set). Checks every decode for
// valence validity and connectivity.
FuzzResult fuzz_serial(const GroupSet &set, const FuzzOptions &options);
FuzzResult fuzz_parallel(const GroupSet &set, const FuzzOptions &options, int threads = 0);

// The i-th fuzz string, for reproducing a reported violation.
std::vector<Token> fuzz_string(const std::vector<Token> &alphabet, const FuzzOptions &options,
                               long draw);

}  // namespace gselfies
