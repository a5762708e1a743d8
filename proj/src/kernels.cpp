#include "gselfies/kernels.h"

#include <algorithm>
#include <cstdlib>
#include <random>

#include <omp.h>

#include "gselfies/decoder.h"
#include "gselfies/encoder.h"
#include "gselfies/isomorphism.h"
#include "gselfies/sampler.h"
#include "gselfies/smiles.h"

namespace gselfies {

int default_threads() {
  if (const char *env = std::getenv("GSELFIES_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
}

namespace {

int resolve(int threads) { return threads > 0 ? threads : default_threads(); }

EncodeOutcome encode_one(const MolGraph &mol, const GroupSet &set) {
  EncodeOutcome out;
  try {
    out.tokens = encode(mol, set);
  } catch (const EncodeError &ex) {
    out.error = ex.what();
  }
  return out;
}

// Empty reason means the round trip held.
std::string roundtrip_one(const MolGraph &mol, const GroupSet &set, std::string *tokens) {
  std::vector<Token> t;
  try {
    t = encode(mol, set);
  } catch (const EncodeError &ex) {
    return std::string("encode: ") + ex.what();
  }
  *tokens = detokenize(t);
  MolGraph back = decode(t, set);
  if (!isomorphic(back, mol)) return "decoded graph differs: " + write_smiles(back);
  return {};
}

RoundTripResult collect(const std::vector<std::string> &reasons,
                        const std::vector<std::string> &tokens) {
  RoundTripResult r;
  r.total = reasons.size();
  for (std::size_t i = 0; i < reasons.size(); ++i) {
    if (reasons[i].empty())
      ++r.passed;
    else
      r.failures.push_back({i, reasons[i], tokens[i]});
  }
  return r;
}

std::vector<Token> fuzz_alphabet(const GroupSet &set) {
  std::vector<Token> out;
  for (const auto &s : alphabet(set)) out.push_back(parse_token(s.substr(1, s.size() - 2)));
  return out;
}

// Empty when the decode satisfies every invariant.
std::string check_decode(const std::vector<Token> &tokens, const GroupSet &set, bool roundtrip,
                         int *atoms) {
  MolGraph g = decode(tokens, set);
  *atoms = g.num_atoms();
  auto problems = validate(g, set.table());
  if (!problems.empty()) return problems.front();
  if (!g.empty() && !is_connected(g)) return "disconnected output";
  if (!(decode(tokens, set) == g)) return "non-deterministic decode";
  if (roundtrip) {
    try {
      if (!isomorphic(decode(encode(g, set), set), g)) return "re-encode round trip failed";
    } catch (const EncodeError &ex) {
      return std::string("re-encode failed: ") + ex.what();
    }
  }
  return {};
}

FuzzResult fuzz_impl(const GroupSet &set, const FuzzOptions &options, int threads) {
  if (options.n < 0 || options.max_len < 1)
    throw std::invalid_argument("fuzz: n must be >= 0 and max_len >= 1");
  const auto alpha = fuzz_alphabet(set);
  const long n = options.n;
  std::vector<std::string> problems(n);
  std::vector<int> lengths(n), atoms(n);
  auto work = [&](long i) {
    auto t = fuzz_string(alpha, options, i);
    lengths[i] = static_cast<int>(t.size());
    problems[i] = check_decode(t, set, options.check_roundtrip, &atoms[i]);
  };
  if (threads == 1) {
    for (long i = 0; i < n; ++i) work(i);
  } else {
#pragma omp parallel for schedule(dynamic, 256) num_threads(resolve(threads))
    for (long i = 0; i < n; ++i) work(i);
  }
  FuzzResult r;
  r.strings = n;
  for (long i = 0; i < n; ++i) {
    r.tokens += lengths[i];
    r.atoms += atoms[i];
    if (problems[i].empty()) continue;
    ++r.violation_count;
    if (r.violations.size() < 20)
      r.violations.push_back({i, detokenize(fuzz_string(alpha, options, i)), problems[i]});
  }
  return r;
}

}  // namespace

std::vector<Token> fuzz_string(const std::vector<Token> &alphabet, const FuzzOptions &options,
                               long draw) {
  std::mt19937_64 rng(draw_seed(options.seed, static_cast<std::uint64_t>(draw)));
  int len = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(options.max_len)));
  std::vector<Token> t;
  t.reserve(len);
  for (int j = 0; j < len; ++j) t.push_back(alphabet[uniform_below(rng, alphabet.size())]);
  return t;
}

std::vector<EncodeOutcome> encode_corpus_serial(const std::vector<MolGraph> &mols,
                                                const GroupSet &set) {
  std::vector<EncodeOutcome> out;
  out.reserve(mols.size());
  for (const auto &m : mols) out.push_back(encode_one(m, set));
  return out;
}

std::vector<EncodeOutcome> encode_corpus_parallel(const std::vector<MolGraph> &mols,
                                                  const GroupSet &set, int threads) {
  const long n = static_cast<long>(mols.size());
  std::vector<EncodeOutcome> out(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(resolve(threads))
  for (long i = 0; i < n; ++i) out[i] = encode_one(mols[i], set);
  return out;
}

std::vector<MolGraph> decode_corpus_serial(const std::vector<std::vector<Token>> &strings,
                                           const GroupSet &set) {
  std::vector<MolGraph> out;
  out.reserve(strings.size());
  for (const auto &s : strings) out.push_back(decode(s, set));
  return out;
}

std::vector<MolGraph> decode_corpus_parallel(const std::vector<std::vector<Token>> &strings,
                                             const GroupSet &set, int threads) {
  const long n = static_cast<long>(strings.size());
  std::vector<MolGraph> out(n);
#pragma omp parallel for schedule(dynamic, 32) num_threads(resolve(threads))
  for (long i = 0; i < n; ++i) out[i] = decode(strings[i], set);
  return out;
}

RoundTripResult roundtrip_serial(const std::vector<MolGraph> &mols, const GroupSet &set) {
  std::vector<std::string> reasons(mols.size()), tokens(mols.size());
  for (std::size_t i = 0; i < mols.size(); ++i) reasons[i] = roundtrip_one(mols[i], set, &tokens[i]);
  return collect(reasons, tokens);
}

RoundTripResult roundtrip_parallel(const std::vector<MolGraph> &mols, const GroupSet &set,
                                   int threads) {
  const long n = static_cast<long>(mols.size());
  std::vector<std::string> reasons(n), tokens(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(resolve(threads))
  for (long i = 0; i < n; ++i) reasons[i] = roundtrip_one(mols[i], set, &tokens[i]);
  return collect(reasons, tokens);
}

FuzzResult fuzz_serial(const GroupSet &set, const FuzzOptions &options) {
  return fuzz_impl(set, options, 1);
}

FuzzResult fuzz_parallel(const GroupSet &set, const FuzzOptions &options, int threads) {
  return fuzz_impl(set, options, resolve(threads));
}

}  // namespace gselfies
