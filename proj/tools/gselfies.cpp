// gselfies: batch command-line front end.
//
// Exit codes: 0 success, 1 invariant or verification failure, 2 usage error
// (bad flags, unreadable inputs, malformed group sets).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gselfies/decoder.h"
#include "gselfies/encoder.h"
#include "gselfies/fragment.h"
#include "gselfies/kernels.h"
#include "gselfies/sampler.h"
#include "gselfies/smiles.h"
#include "gselfies/stats.h"
#include "gselfies/version.h"

using namespace gselfies;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kFailure = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupSet groups_from(const std::string &path) {
  if (path.empty()) return GroupSet{};
  try {
    return load_groupset(path);
  } catch (const std::exception &ex) {
    throw UsageError(ex.what());
  }
}

Corpus corpus_from(const std::string &path) {
  try {
    Corpus c = read_corpus(path);
    for (const auto &s : c.skipped)
      std::cerr << path << ":" << s.line << ": skipped: " << s.message << "\n";
    return c;
  } catch (const std::runtime_error &ex) {
    throw UsageError(ex.what());
  }
}

// Non-empty lines as (payload, id) split on the first tab.
std::vector<std::pair<std::string, std::string>> read_lines(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      out.push_back({line, ""});
    else
      out.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return out;
}

void write_file(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::string with_id(const std::string &payload, const std::string &id) {
  return id.empty() ? payload + "\n" : payload + "\t" + id + "\n";
}

std::vector<MolGraph> graphs(const Corpus &c) { return c.molecules(); }

// --- subcommands ------------------------------------------------------------

int run_encode(const std::string &groups, const std::string &in, const std::string &out) {
  GroupSet set = groups_from(groups);
  Corpus corpus = corpus_from(in);
  auto results = encode_corpus_parallel(graphs(corpus), set);
  std::string text;
  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].error.empty()) {
      std::cerr << in << ":" << corpus.records[i].line << ": " << results[i].error << "\n";
      ++failed;
    }
    text += with_id(detokenize(results[i].tokens), corpus.records[i].id);
  }
  write_file(out, text);
  return failed ? kFailure : kOk;
}

int run_decode(const std::string &groups, const std::string &in, const std::string &out) {
  GroupSet set = groups_from(groups);
  auto lines = read_lines(in);
  std::vector<std::vector<Token>> strings;
  for (const auto &[tokens, id] : lines) {
    auto lexed = tokenize_robust(tokens);
    if (lexed.skipped) std::cerr << "skipped " << lexed.skipped << " unlexable units\n";
    strings.push_back(std::move(lexed.tokens));
  }
  auto mols = decode_corpus_parallel(strings, set);
  std::string text;
  for (std::size_t i = 0; i < mols.size(); ++i)
    text += with_id(write_smiles(mols[i]), lines[i].second);
  write_file(out, text);
  return kOk;
}

int run_roundtrip(const std::string &groups, const std::string &in, const std::string &report) {
  GroupSet set = groups_from(groups);
  Corpus corpus = corpus_from(in);
  auto r = roundtrip_parallel(graphs(corpus), set);
  json doc;
  doc["corpus"] = in;
  doc["groups"] = set.size();
  doc["molecules"] = r.total;
  doc["skipped_lines"] = corpus.skipped.size();
  doc["passed"] = r.passed;
  doc["pass_rate"] = r.pass_rate();
  doc["failures"] = json::array();
  for (const auto &f : r.failures) {
    const auto &rec = corpus.records[f.index];
    doc["failures"].push_back({{"line", rec.line}, {"id", rec.id}, {"smiles", rec.smiles},
                               {"tokens", f.tokens}, {"reason", f.reason}});
  }
  write_file(report, doc.dump(2) + "\n");
  std::cerr << "round trip: " << r.passed << "/" << r.total << "\n";
  return r.failures.empty() ? kOk : kFailure;
}

int run_fragment(const std::string &in, int k, const std::string &strategy,
                 const std::string &out) {
  if (k < 1) throw UsageError("--k must be at least 1");
  Corpus corpus = corpus_from(in);
  if (corpus.records.empty()) throw UsageError("corpus '" + in + "' has no molecules");
  FragmentOptions opt;
  opt.k = k;
  opt.strategy = strategy == "diverse" ? SelectionStrategy::kDiverse : SelectionStrategy::kFrequency;
  std::vector<std::string> warnings;
  GroupSet set = build_groupset(graphs(corpus), opt, &warnings);
  for (const auto &w : warnings) std::cerr << "warning: " << w << "\n";
  write_file(out, groupset_to_json(set));
  return kOk;
}

json metrics_summary(const std::vector<MoleculeMetrics> &rows) {
  json s;
  auto mean = [&](auto field) {
    double t = 0;
    for (const auto &r : rows) t += static_cast<double>(r.*field);
    return rows.empty() ? 0.0 : t / static_cast<double>(rows.size());
  };
  s["mean_token_length"] = mean(&MoleculeMetrics::token_length);
  s["mean_heavy_atom_count"] = mean(&MoleculeMetrics::heavy_atom_count);
  s["mean_molecular_weight"] = mean(&MoleculeMetrics::molecular_weight);
  s["mean_ring_count"] = mean(&MoleculeMetrics::ring_count);
  s["mean_aromatic_atom_count"] = mean(&MoleculeMetrics::aromatic_atom_count);
  long aromatic = std::count_if(rows.begin(), rows.end(),
                                [](const auto &r) { return r.aromatic_atom_count > 0; });
  s["fraction_with_aromatic_atoms"] =
      rows.empty() ? 0.0 : static_cast<double>(aromatic) / static_cast<double>(rows.size());
  return s;
}

std::vector<MoleculeMetrics> read_metrics_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::string line;
  std::getline(in, line);
  std::vector<MoleculeMetrics> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    MoleculeMetrics m;
    long index;
    if (std::sscanf(line.c_str(), "%ld,%d,%d,%lf,%d,%d", &index, &m.token_length,
                    &m.heavy_atom_count, &m.molecular_weight, &m.ring_count,
                    &m.aromatic_atom_count) != 6)
      throw UsageError("malformed metrics row in '" + path + "'");
    rows.push_back(m);
  }
  return rows;
}

int run_sample(const std::string &groups, const std::string &bag_from, int n,
               std::uint64_t seed, const std::string &metrics_path, const std::string &out,
               const std::string &summary, const std::string &reference) {
  if (n < 0) throw UsageError("--n must be non-negative");
  GroupSet set = groups_from(groups);
  Corpus corpus = corpus_from(bag_from);
  auto mols = graphs(corpus);
  TokenBag bag = build_bag(mols, set);
  if (n > 0 && bag.tokens.empty()) throw UsageError("token bag is empty");
  auto samples = sample(bag, set, n, seed);
  auto rows = metrics(samples);
  if (!metrics_path.empty()) write_file(metrics_path, metrics_csv(rows));
  if (!out.empty()) {
    std::string text;
    for (const auto &s : samples) text += write_smiles(s.molecule) + "\t" + detokenize(s.tokens) + "\n";
    write_file(out, text);
  }
  if (!summary.empty()) {
    // Source token lengths are those of the same dialect.
    auto encoded = encode_corpus_parallel(mols, set);
    std::vector<MoleculeMetrics> source;
    for (std::size_t i = 0; i < mols.size(); ++i)
      if (encoded[i].error.empty())
        source.push_back(metrics(mols[i], static_cast<int>(encoded[i].tokens.size())));
    json doc;
    doc["n"] = n;
    doc["seed"] = seed;
    doc["groups"] = set.size();
    doc["bag_tokens"] = bag.tokens.size();
    doc["bag_strings"] = bag.lengths.size();
    doc["sampled"] = metrics_summary(rows);
    doc["source"] = metrics_summary(source);
    if (n > 0 && !source.empty()) {
      json w;
      for (const auto &[k, v] : metric_distances(rows, source)) w[k] = v;
      doc["wasserstein_vs_source"] = w;
    }
    if (!reference.empty()) {
      auto ref = read_metrics_csv(reference);
      if (n > 0 && !ref.empty()) {
        json w;
        for (const auto &[k, v] : metric_distances(rows, ref)) w[k] = v;
        doc["wasserstein_vs_reference"] = w;
      }
    }
    write_file(summary, doc.dump(2) + "\n");
  }
  return kOk;
}

json dialect_json(const DialectStats &s) {
  json d;
  d["strings"] = s.strings;
  d["mean_tokens"] = s.mean_tokens;
  d["mean_characters"] = s.mean_characters;
  d["vocabulary"] = s.vocabulary;
  d["index_bytes"] = s.index_bytes;
  d["deflate_bytes"] = s.deflate_bytes;
  json h = json::object();
  for (const auto &[len, count] : s.length_histogram) h[std::to_string(len)] = count;
  d["length_histogram"] = h;
  return d;
}

int run_stats(const std::string &groups, const std::string &in, const std::string &out) {
  GroupSet set = groups_from(groups);
  Corpus corpus = corpus_from(in);
  auto mols = graphs(corpus);
  auto encode_all = [&](const GroupSet &s, int *failed) {
    std::vector<std::vector<Token>> strings;
    for (auto &r : encode_corpus_parallel(mols, s)) {
      if (!r.error.empty()) {
        ++*failed;
        continue;
      }
      strings.push_back(std::move(r.tokens));
    }
    return strings;
  };
  int failed = 0;
  auto grouped = dialect_stats(encode_all(set, &failed));
  auto plain = dialect_stats(encode_all(GroupSet{}, &failed));
  std::size_t smiles_chars = 0;
  for (const auto &r : corpus.records) smiles_chars += r.smiles.size();
  json doc;
  doc["corpus"] = in;
  doc["molecules"] = mols.size();
  doc["groups"] = set.size();
  doc["mean_smiles_characters"] =
      mols.empty() ? 0.0 : static_cast<double>(smiles_chars) / static_cast<double>(mols.size());
  doc["group_dialect"] = dialect_json(grouped);
  doc["empty_dialect"] = dialect_json(plain);
  doc["token_length_ratio"] = plain.mean_tokens > 0 ? grouped.mean_tokens / plain.mean_tokens : 0.0;
  doc["deflate_ratio"] = plain.deflate_bytes > 0
                             ? static_cast<double>(grouped.deflate_bytes) / plain.deflate_bytes
                             : 0.0;
  doc["encode_failures"] = failed;
  write_file(out, doc.dump(2) + "\n");
  return failed ? kFailure : kOk;
}

int run_fuzz(const std::string &groups, long n, int max_len, std::uint64_t seed,
             bool roundtrip, const std::string &out) {
  if (n < 0 || max_len < 1) throw UsageError("--n must be >= 0 and --max-len >= 1");
  GroupSet set = groups_from(groups);
  FuzzOptions opt;
  opt.n = n;
  opt.max_len = max_len;
  opt.seed = seed;
  opt.check_roundtrip = roundtrip;
  auto r = fuzz_parallel(set, opt);
  json doc;
  doc["strings"] = r.strings;
  doc["max_len"] = max_len;
  doc["seed"] = seed;
  doc["groups"] = set.size();
  doc["alphabet_size"] = alphabet(set).size();
  doc["tokens"] = r.tokens;
  doc["atoms"] = r.atoms;
  doc["roundtrip_checked"] = roundtrip;
  doc["violations"] = r.violation_count;
  doc["examples"] = json::array();
  for (const auto &v : r.violations)
    doc["examples"].push_back({{"draw", v.draw}, {"tokens", v.tokens}, {"problem", v.problem}});
  write_file(out, doc.dump(2) + "\n");
  return r.violation_count ? kFailure : kOk;
}

int run_expand(const std::string &groups, const std::string &in, const std::string &out) {
  GroupSet set = groups_from(groups);
  auto lines = read_lines(in);
  std::string text;
  int failed = 0;
  for (const auto &[tokens, id] : lines) {
    try {
      text += with_id(detokenize(expand_groups(tokenize_robust(tokens).tokens, set)), id);
    } catch (const EncodeError &ex) {
      std::cerr << ex.what() << "\n";
      text += with_id("", id);
      ++failed;
    }
  }
  write_file(out, text);
  return failed ? kFailure : kOk;
}

int run_bench(const std::string &groups, const std::string &in, const std::string &out,
              int repeats) {
  using clock = std::chrono::steady_clock;
  GroupSet set = groups_from(groups);
  Corpus corpus = corpus_from(in);
  auto mols = graphs(corpus);
  std::vector<double> enc_ms, dec_ms;
  std::size_t tokens = 0;
  int failed = 0;
  for (const auto &m : mols) {
    std::vector<Token> t;
    double best_enc = 1e300, best_dec = 1e300;
    try {
      for (int r = 0; r < repeats; ++r) {
        auto t0 = clock::now();
        t = encode(m, set);
        auto t1 = clock::now();
        MolGraph back = decode(t, set);
        auto t2 = clock::now();
        best_enc = std::min(best_enc, std::chrono::duration<double, std::milli>(t1 - t0).count());
        best_dec = std::min(best_dec, std::chrono::duration<double, std::milli>(t2 - t1).count());
      }
    } catch (const EncodeError &) {
      ++failed;
      continue;
    }
    tokens += t.size();
    enc_ms.push_back(best_enc);
    dec_ms.push_back(best_dec);
  }
  auto summary = [](std::vector<double> v) {
    json s;
    if (v.empty()) return s;
    std::sort(v.begin(), v.end());
    s["mean_ms"] = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    s["median_ms"] = v[v.size() / 2];
    s["p95_ms"] = v[std::min(v.size() - 1, v.size() * 95 / 100)];
    s["max_ms"] = v.back();
    return s;
  };
  json doc;
  doc["corpus"] = in;
  doc["molecules"] = enc_ms.size();
  doc["encode_failures"] = failed;
  doc["groups"] = set.size();
  doc["total_tokens"] = tokens;
  doc["repeats"] = repeats;
  // Everything under "timing" varies run to run; the rest is deterministic.
  doc["timing"] = {{"encode", summary(enc_ms)}, {"decode", summary(dec_ms)},
                   {"reference_ceiling_encode_ms", 12.9}};
  write_file(out, doc.dump(2) + "\n");
  return failed ? kFailure : kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Group SELFIES: encode, decode, fragment, sample and verify molecular strings"};
  app.set_version_flag("--version", std::string(kVersion));
  app.set_config("--config", "", "TOML/INI file with option values");
  app.require_subcommand(1);

  std::string groups, in, out, report, strategy = "frequency", metrics_path, summary, reference;
  int k = 30, max_len = 100, repeats = 1;
  long n = 1000;
  std::uint64_t seed = 0;
  bool roundtrip = false;

  auto add_groups = [&](CLI::App *cmd) {
    cmd->add_option("--groups", groups, "group set JSON (omit for the empty set)")
        ->check(CLI::ExistingFile);
  };

  auto *encode_cmd = app.add_subcommand("encode", "SMILES corpus -> one token string per line");
  add_groups(encode_cmd);
  encode_cmd->add_option("--in", in, "corpus (SMILES[<TAB>id] per line)")->required()->check(CLI::ExistingFile);
  encode_cmd->add_option("--out", out, "output file (default stdout)");

  auto *decode_cmd = app.add_subcommand("decode", "token strings -> SMILES per line");
  add_groups(decode_cmd);
  decode_cmd->add_option("--in", in, "token strings")->required()->check(CLI::ExistingFile);
  decode_cmd->add_option("--out", out, "output file (default stdout)");

  auto *rt_cmd = app.add_subcommand("roundtrip", "verify decode(encode(m)) is isomorphic to m");
  add_groups(rt_cmd);
  rt_cmd->add_option("--in", in, "corpus")->required()->check(CLI::ExistingFile);
  rt_cmd->add_option("--report", report, "JSON report (default stdout)");

  auto *frag_cmd = app.add_subcommand("fragment", "extract a group set from a corpus");
  frag_cmd->add_option("--in", in, "corpus")->required()->check(CLI::ExistingFile);
  frag_cmd->add_option("--k", k, "number of groups")->check(CLI::PositiveNumber);
  frag_cmd->add_option("--strategy", strategy, "frequency|diverse")
      ->check(CLI::IsMember({"frequency", "diverse"}));
  frag_cmd->add_option("--out", out, "group set JSON (default stdout)");

  auto *sample_cmd = app.add_subcommand("sample", "bag-of-tokens random generation");
  add_groups(sample_cmd);
  sample_cmd->add_option("--bag-from", in, "corpus for the token bag")->required()->check(CLI::ExistingFile);
  sample_cmd->add_option("--n", n, "number of molecules");
  sample_cmd->add_option("--seed", seed, "random seed");
  sample_cmd->add_option("--metrics", metrics_path, "per-molecule metrics CSV");
  sample_cmd->add_option("--out", out, "sampled SMILES<TAB>tokens per line");
  sample_cmd->add_option("--summary", summary, "summary JSON with Wasserstein distances");
  sample_cmd->add_option("--reference", reference, "metrics CSV of another run to compare against")
      ->check(CLI::ExistingFile);

  auto *stats_cmd = app.add_subcommand("stats", "length histograms and compressed sizes");
  add_groups(stats_cmd);
  stats_cmd->add_option("--in", in, "corpus")->required()->check(CLI::ExistingFile);
  stats_cmd->add_option("--out", out, "JSON output (default stdout)");

  auto *fuzz_cmd = app.add_subcommand("fuzz", "decode random token strings and check invariants");
  add_groups(fuzz_cmd);
  fuzz_cmd->add_option("--n", n, "number of strings");
  fuzz_cmd->add_option("--max-len", max_len, "maximum string length");
  fuzz_cmd->add_option("--seed", seed, "random seed");
  fuzz_cmd->add_flag("--roundtrip", roundtrip, "also re-encode every decoded graph");
  fuzz_cmd->add_option("--out", out, "JSON report (default stdout)");

  auto *expand_cmd = app.add_subcommand("expand", "replace group tokens by atomic tokens");
  add_groups(expand_cmd);
  expand_cmd->add_option("--in", in, "token strings")->required()->check(CLI::ExistingFile);
  expand_cmd->add_option("--out", out, "output file (default stdout)");

  auto *bench_cmd = app.add_subcommand("bench", "per-molecule encode/decode timing");
  add_groups(bench_cmd);
  bench_cmd->add_option("--in", in, "corpus")->required()->check(CLI::ExistingFile);
  bench_cmd->add_option("--out", out, "JSON report (default stdout)");
  bench_cmd->add_option("--repeats", repeats, "timing repeats per molecule (best kept)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*encode_cmd) return run_encode(groups, in, out);
    if (*decode_cmd) return run_decode(groups, in, out);
    if (*rt_cmd) return run_roundtrip(groups, in, report);
    if (*frag_cmd) return run_fragment(in, k, strategy, out);
    if (*sample_cmd)
      return run_sample(groups, in, static_cast<int>(n), seed, metrics_path, out, summary, reference);
    if (*stats_cmd) return run_stats(groups, in, out);
    if (*fuzz_cmd) return run_fuzz(groups, n, max_len, seed, roundtrip, out);
    if (*expand_cmd) return run_expand(groups, in, out);
    if (*bench_cmd) return run_bench(groups, in, out, repeats);
  } catch (const UsageError &ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception &ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
