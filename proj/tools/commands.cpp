//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "commands.h"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "molfrag/assemble.h"
#include "molfrag/corpus.h"
#include "molfrag/decompose.h"
#include "molfrag/fingerprint.h"
#include "molfrag/record.h"
#include "molfrag/smiles.h"
#include "molfrag/stats.h"
#include "molfrag/vocab.h"

namespace molfrag::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::kSchemeMismatch:
  case ErrorCode::kMalformedVocab:
  case ErrorCode::kVersionMismatch:
  case ErrorCode::kDuplicateKey:
  case ErrorCode::kNoMotifs:
    return kExitScheme;
  case ErrorCode::kIo:
  case ErrorCode::kEmptyCorpus:
    return kExitIo;
  default:
    return kExitParse;
  }
}

int default_workers() {
  if (const char *env = std::getenv("MOLFRAG_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0)
      return w;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct Options {
  std::string scheme;
  int k = 0;
  std::string vocab;
  std::string input;
  std::string output;
  int workers = 1;
  std::uint64_t seed = 0;
  std::string split = "0.8,0.1,0.1";
  bool skip_invalid = false;
  std::string order = "valency-first";
  std::string report;
};

class Fingerprint {
public:
  explicit Fingerprint(std::string_view command) { add("command", command); }
  Fingerprint &add(std::string_view name, std::string_view value) {
    text_ += name;
    text_ += '=';
    text_ += value;
    text_ += '\n';
    return *this;
  }
  Fingerprint &add(std::string_view name, std::int64_t value) {
    return add(name, std::to_string(value));
  }
  std::string hex() const { return fnv1a_hex(text_); }

private:
  std::string text_;
};

// Writes to `path`, or to `fallback` when the path is empty or "-".
void write_output(const std::string &path, std::ostream &fallback,
                  const std::function<void(std::ostream &)> &body) {
  if (path.empty() || path == "-") {
    body(fallback);
    fallback.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
  body(file);
  file.flush();
  if (!file)
    throw Error(ErrorCode::kIo, "failed writing " + path);
}

std::string comment_header(std::string_view command, const std::string &fp,
                           std::string_view extra = {}) {
  std::string s = "# format_version=" + std::to_string(kFormatVersion)
                  + " command=" + std::string(command) + " config=" + fp;
  if (!extra.empty()) {
    s += ' ';
    s += extra;
  }
  return s;
}

ParsedCorpus load_corpus(const Options &o, std::ostream &err) {
  const std::vector<CorpusLine> lines = read_corpus_file(o.input);
  ParsedCorpus corpus = parse_corpus(lines, o.workers);
  if (!corpus.failures.empty()) {
    if (!o.skip_invalid) {
      const ParseFailure &f = corpus.failures.front();
      throw Error(f.code, o.input + " line " + std::to_string(f.line) + ": "
                              + f.message
                              + (corpus.failures.size() > 1
                                     ? " (" + std::to_string(corpus.failures.size())
                                           + " invalid lines in total)"
                                     : std::string()));
    }
    for (const ParseFailure &f: corpus.failures)
      err << "skipped line " << f.line << ": " << f.message << '\n';
  }
  return corpus;
}

VocabScheme parse_vocab_scheme(const std::string &s) {
  if (s == "bbb")
    return VocabScheme::kBbb;
  if (s == "psm")
    return VocabScheme::kPsm;
  throw CLI::ValidationError("--scheme", "build-vocab takes bbb or psm");
}

MiningResult mine(const ParsedCorpus &corpus, VocabScheme scheme, int k,
                  int workers) {
  if (corpus.molecules.empty())
    throw Error(ErrorCode::kEmptyCorpus, "no molecules in the input corpus");
  return scheme == VocabScheme::kBbb
             ? bbb_build_vocab(corpus.molecules, k, workers, corpus.hash())
             : psm_build_vocab(corpus.molecules, k, workers, corpus.hash());
}

int cmd_build_vocab(const Options &o, std::ostream &out, std::ostream &err) {
  const VocabScheme scheme = parse_vocab_scheme(o.scheme);
  const ParsedCorpus corpus = load_corpus(o, err);
  const MiningResult result = mine(corpus, scheme, o.k, o.workers);
  const Vocabulary &vocab = result.vocab;
  if (vocab.empty())
    throw Error(ErrorCode::kNoMotifs, "the corpus has no eligible motifs");
  if (vocab.size() < o.k)
    err << "warning: only " << vocab.size() << " of " << o.k
        << " requested motifs are available\n";

  const std::string fp = Fingerprint("build-vocab")
                             .add("scheme", o.scheme)
                             .add("k", o.k)
                             .add("skip_invalid", o.skip_invalid)
                             .hex();
  write_output(o.output, out,
               [&](std::ostream &s) { save_vocab(vocab, s, fp); });

  const VocabComposition comp = vocab_composition(vocab);
  err << "molecules: " << corpus.molecules.size() << '\n'
      << "k: " << vocab.size() << " (requested " << o.k << ")\n"
      << "ring motif fraction: " << format_double(comp.ring_motif_fraction)
      << '\n'
      << "top motifs:\n";
  for (int i = 0; i < std::min(10, vocab.size()); ++i)
    err << "  " << (i + 1) << '\t' << vocab.entry(i).smiles << '\t'
        << vocab.entry(i).count << '\n';
  return kExitOk;
}

Scheme parse_scheme(const std::string &s) {
  auto scheme = scheme_from_name(s);
  if (!scheme)
    throw CLI::ValidationError("--scheme", "expected bbb, psm or subcover");
  return *scheme;
}

void check_compatible(Scheme scheme, const Vocabulary &vocab) {
  if (scheme == Scheme::kPsm && vocab.scheme() != VocabScheme::kPsm)
    throw Error(ErrorCode::kSchemeMismatch,
                "scheme psm needs a psm vocabulary, got "
                    + std::string(scheme_name(vocab.scheme())));
  if (scheme == Scheme::kSubcover && vocab.scheme() != VocabScheme::kBbb)
    throw Error(ErrorCode::kSchemeMismatch,
                "scheme subcover needs a bbb vocabulary, got "
                    + std::string(scheme_name(vocab.scheme())));
}

std::vector<std::string> render_records(const ParsedCorpus &corpus,
                                        const std::vector<Decomposition> &d,
                                        const Vocabulary &vocab, int workers) {
  std::vector<std::string> lines(d.size());
  const auto n = static_cast<std::int64_t>(d.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(std::max(1, workers))
  for (std::int64_t i = 0; i < n; ++i)
    lines[i] = decomposition_record(corpus.lines[i].id, corpus.molecules[i],
                                    d[i], vocab);
  return lines;
}

int cmd_decompose(const Options &o, std::ostream &out, std::ostream &err) {
  const Scheme scheme = parse_scheme(o.scheme);
  const Vocabulary vocab = load_vocab_file(o.vocab);
  check_compatible(scheme, vocab);
  const ParsedCorpus corpus = load_corpus(o, err);
  const auto decomps =
      decompose_corpus(corpus.molecules, vocab, scheme, o.workers);
  const auto lines = render_records(corpus, decomps, vocab, o.workers);

  const std::string fp = Fingerprint("decompose")
                             .add("scheme", o.scheme)
                             .add("skip_invalid", o.skip_invalid)
                             .hex();
  nlohmann::ordered_json header;
  header["format_version"] = kFormatVersion;
  header["command"] = "decompose";
  header["scheme"] = o.scheme;
  header["config"] = fp;
  header["vocab_scheme"] = scheme_name(vocab.scheme());
  header["vocab_k"] = vocab.size();
  header["vocab_corpus_hash"] = vocab.corpus_hash();
  write_output(o.output, out, [&](std::ostream &s) {
    s << header.dump() << '\n';
    for (const std::string &line: lines)
      s << line << '\n';
  });

  const auto ids = corpus.ids();
  const DecompositionStats st =
      decomposition_stats(ids, corpus.molecules, decomps);
  err << "molecules: " << corpus.molecules.size() << '\n'
      << "mean fragments: " << format_double(st.mean_fragments) << '\n'
      << "single-atom rate: " << format_double(st.single_atom_rate) << '\n';
  return kExitOk;
}

int cmd_stats(const Options &o, std::ostream &out, std::ostream &err) {
  Fingerprint fpb("stats");
  fpb.add("report", o.report);

  if (o.report == "rings") {
    if (o.input.empty())
      throw CLI::RequiredError("--input");
    const ParsedCorpus corpus = load_corpus(o, err);
    const RingHistogram h = ring_histogram(corpus.molecules, o.workers);
    fpb.add("skip_invalid", o.skip_invalid);
    write_output(o.output, out, [&](std::ostream &s) {
      s << comment_header("stats", fpb.hex(), "report=rings") << '\n';
      s << "ring_size,count,mean_per_molecule\n";
      for (int r = kMinRingSize; r <= kMaxRingSize; ++r)
        s << r << ',' << h.counts[r - kMinRingSize] << ','
          << format_double(h.mean(r)) << '\n';
      s << ">" << kMaxRingSize << ',' << h.overflow << ','
        << format_double(h.overflow_mean()) << '\n';
    });
    return kExitOk;
  }

  if (o.report == "vocab") {
    if (o.vocab.empty())
      throw CLI::RequiredError("--vocab");
    const Vocabulary vocab = load_vocab_file(o.vocab);
    const VocabComposition c = vocab_composition(vocab);
    write_output(o.output, out, [&](std::ostream &s) {
      s << comment_header("stats", fpb.hex(), "report=vocab") << '\n';
      s << "metric,value\n";
      s << "scheme," << scheme_name(vocab.scheme()) << '\n';
      s << "entries," << c.entries << '\n';
      s << "ring_motifs," << c.ring_motifs << '\n';
      s << "ring_motif_fraction," << format_double(c.ring_motif_fraction)
        << '\n';
      for (const auto &[atoms, n]: c.atom_count_distribution)
        s << "atom_count_" << atoms << ',' << n << '\n';
    });
    return kExitOk;
  }

  if (o.report == "decomposition" || o.report == "summary") {
    if (o.input.empty())
      throw CLI::RequiredError("--input");
    if (o.vocab.empty())
      throw CLI::RequiredError("--vocab");
    const Scheme scheme = parse_scheme(o.scheme);
    const Vocabulary vocab = load_vocab_file(o.vocab);
    check_compatible(scheme, vocab);
    const ParsedCorpus corpus = load_corpus(o, err);
    const auto decomps =
        decompose_corpus(corpus.molecules, vocab, scheme, o.workers);
    const auto ids = corpus.ids();
    const DecompositionStats st =
        decomposition_stats(ids, corpus.molecules, decomps);
    fpb.add("scheme", o.scheme).add("skip_invalid", o.skip_invalid);
    write_output(o.output, out, [&](std::ostream &s) {
      s << comment_header("stats", fpb.hex(), "report=" + o.report) << '\n';
      if (o.report == "decomposition") {
        s << "id,scheme,fragments,motifs,singles,atoms\n";
        for (const auto &r: st.records)
          s << r.id << ',' << scheme_name(r.scheme) << ',' << r.fragments
            << ',' << r.motifs << ',' << r.singles << ',' << r.atoms << '\n';
        return;
      }
      s << "metric,value\n";
      s << "scheme," << o.scheme << '\n';
      s << "molecules," << st.records.size() << '\n';
      s << "mean_fragments," << format_double(st.mean_fragments) << '\n';
      s << "median_fragments," << format_double(st.median_fragments) << '\n';
      s << "total_atoms," << st.total_atoms << '\n';
      s << "total_singles," << st.total_singles << '\n';
      s << "single_atom_rate," << format_double(st.single_atom_rate) << '\n';
      for (const auto &[size, n]: st.fragment_histogram)
        s << "fragments_hist_" << size << ',' << n << '\n';
    });
    return kExitOk;
  }
  throw CLI::ValidationError("--report",
                             "expected rings, decomposition, summary or vocab");
}

std::vector<double> parse_ratios(const std::string &text) {
  std::vector<double> r;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      std::size_t used = 0;
      r.push_back(std::stod(field, &used));
      if (used != field.size())
        throw std::invalid_argument(field);
    } catch (const std::exception &) {
      throw CLI::ValidationError("--split", "bad ratio '" + field + "'");
    }
  }
  if (r.size() != 3)
    throw CLI::ValidationError("--split", "expected three ratios");
  double sum = 0.0;
  for (double x: r) {
    if (!(x >= 0.0))
      throw CLI::ValidationError("--split", "ratios must be non-negative");
    sum += x;
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw CLI::ValidationError("--split", "ratios must sum to 1");
  return r;
}

// Uniform integer in [0, bound) with rejection sampling, so the split does
// not depend on the standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max()
                              - (std::mt19937_64::max() % bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x <= limit)
      return x % bound;
  }
}

int cmd_split(const Options &o, std::ostream &, std::ostream &err) {
  const std::vector<double> ratios = parse_ratios(o.split);
  if (o.output.empty() || o.output == "-")
    throw CLI::ValidationError("--output", "split needs an output prefix");
  const std::vector<CorpusLine> lines = read_corpus_file(o.input);
  const std::size_t n = lines.size();

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i)
    perm[i] = i;
  std::mt19937_64 rng(o.seed);
  for (std::size_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[uniform_below(rng, i)]);

  const auto take = [&](double r) {
    return static_cast<std::size_t>(std::floor(r * static_cast<double>(n) + 1e-9));
  };
  const std::size_t n_train = std::min(n, take(ratios[0]));
  const std::size_t n_valid = std::min(n - n_train, take(ratios[1]));
  const std::size_t bounds[4] = { 0, n_train, n_train + n_valid, n };
  static constexpr const char *kNames[3] = { "train", "valid", "test" };

  const std::string fp = Fingerprint("split")
                             .add("seed", static_cast<std::int64_t>(o.seed))
                             .add("split", o.split)
                             .hex();
  for (int part = 0; part < 3; ++part) {
    std::vector<std::size_t> chosen(perm.begin() + bounds[part],
                                    perm.begin() + bounds[part + 1]);
    std::sort(chosen.begin(), chosen.end());
    const std::string path = o.output + "." + kNames[part] + ".smi";
    write_output(path, std::cout, [&](std::ostream &s) {
      s << comment_header("split", fp, std::string("part=") + kNames[part])
        << '\n';
      for (std::size_t i: chosen)
        s << lines[i].text << '\n';
    });
    err << kNames[part] << ": " << chosen.size() << " -> " << path << '\n';
  }
  return kExitOk;
}

AssemblyOrder parse_order(const std::string &s) {
  if (s == "valency-first")
    return AssemblyOrder::kValencyFirst;
  if (s == "cycle-first")
    return AssemblyOrder::kCycleFirst;
  throw CLI::ValidationError("--order", "expected valency-first or cycle-first");
}

int cmd_assemble(const Options &o, std::ostream &out, std::ostream &err) {
  const AssemblyOrder order = parse_order(o.order);
  std::ifstream in(o.input, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::kIo, "cannot open " + o.input);

  struct Item {
    int line;
    std::string text;
  };
  std::vector<Item> items;
  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#')
      continue;
    items.push_back({ line_no, text });
  }

  const auto n = static_cast<std::int64_t>(items.size());
  std::vector<std::string> smiles(items.size());
  std::vector<std::string> ids(items.size());
  std::vector<char> connected(items.size(), 1);
  std::vector<std::string> errors(items.size());
  std::vector<ErrorCode> codes(items.size(), ErrorCode::kInvalidInput);
#pragma omp parallel for schedule(dynamic, 16) num_threads(std::max(1, o.workers))
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      const ScoredBondGraph g = parse_scored_graph(items[i].text, ids[i]);
      const AssemblyResult r = assemble(g, order);
      smiles[i] = write_smiles(r.mol);
      connected[i] = r.connected;
    } catch (const Error &e) {
      errors[i] = e.what();
      codes[i] = e.code();
    }
  }
  for (std::int64_t i = 0; i < n; ++i) {
    if (!errors[i].empty())
      throw Error(codes[i], o.input + " line " + std::to_string(items[i].line)
                                + ": " + errors[i]);
    if (!connected[i])
      err << "warning: record " << ids[i] << " assembled into "
          << "a disconnected molecule\n";
  }

  const std::string fp =
      Fingerprint("assemble").add("order", o.order).hex();
  write_output(o.output, out, [&](std::ostream &s) {
    s << comment_header("assemble", fp) << '\n';
    for (std::int64_t i = 0; i < n; ++i)
      s << smiles[i] << '\t' << ids[i] << '\n';
  });
  return kExitOk;
}

int cmd_compare(const Options &o, std::ostream &out, std::ostream &err) {
  const ParsedCorpus corpus = load_corpus(o, err);
  const auto ids = corpus.ids();
  const MiningResult bbb = mine(corpus, VocabScheme::kBbb, o.k, o.workers);
  const MiningResult psm = mine(corpus, VocabScheme::kPsm, o.k, o.workers);

  struct Row {
    Scheme scheme;
    const Vocabulary *vocab;
  };
  const Row rows[3] = { { Scheme::kBbb, &bbb.vocab },
                        { Scheme::kPsm, &psm.vocab },
                        { Scheme::kSubcover, &bbb.vocab } };
  std::ostringstream table;
  table << "scheme,vocab_scheme,vocab_size,molecules,mean_fragments,"
           "median_fragments,mean_motifs,single_atom_rate,"
           "ring_motif_fraction\n";
  for (const Row &row: rows) {
    const auto decomps =
        decompose_corpus(corpus.molecules, *row.vocab, row.scheme, o.workers);
    const DecompositionStats st =
        decomposition_stats(ids, corpus.molecules, decomps);
    std::int64_t motifs = 0;
    for (const auto &r: st.records)
      motifs += r.motifs;
    const double mean_motifs =
        st.records.empty() ? 0.0
                           : static_cast<double>(motifs)
                                 / static_cast<double>(st.records.size());
    const std::string ring_fraction =
        row.vocab->empty()
            ? std::string("nan")
            : format_double(vocab_composition(*row.vocab).ring_motif_fraction);
    table << scheme_name(row.scheme) << ',' << scheme_name(row.vocab->scheme())
          << ',' << row.vocab->size() << ',' << st.records.size() << ','
          << format_double(st.mean_fragments) << ','
          << format_double(st.median_fragments) << ','
          << format_double(mean_motifs) << ','
          << format_double(st.single_atom_rate) << ',' << ring_fraction
          << '\n';
  }

  const std::string fp = Fingerprint("compare")
                             .add("k", o.k)
                             .add("skip_invalid", o.skip_invalid)
                             .hex();
  write_output(o.output, out, [&](std::ostream &s) {
    s << comment_header("compare", fp, "corpus_hash=" + corpus.hash()) << '\n'
      << table.str();
  });
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app { "Molecular fragmentation toolkit", "molfrag" };
  app.require_subcommand(1);
  Options o;
  o.workers = default_workers();

  auto common = [&](CLI::App *sub) {
    sub->add_option("--workers", o.workers,
                    "Worker threads (default: MOLFRAG_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--output", o.output, "Output file (default: stdout)");
  };

  CLI::App *build = app.add_subcommand("build-vocab", "Mine a motif vocabulary");
  build->add_option("--scheme", o.scheme, "bbb or psm")->required();
  build->add_option("--k", o.k, "Vocabulary size")
      ->required()
      ->check(CLI::PositiveNumber);
  build->add_option("--input", o.input, "SMILES corpus")->required();
  build->add_flag("--skip-invalid", o.skip_invalid,
                  "Skip unparsable lines instead of failing");
  common(build);

  CLI::App *dec = app.add_subcommand("decompose", "Decompose a corpus");
  dec->add_option("--scheme", o.scheme, "bbb, psm or subcover")->required();
  dec->add_option("--vocab", o.vocab, "Vocabulary file")->required();
  dec->add_option("--input", o.input, "SMILES corpus")->required();
  dec->add_flag("--skip-invalid", o.skip_invalid,
                "Skip unparsable lines instead of failing");
  common(dec);

  CLI::App *stats = app.add_subcommand("stats", "Corpus and vocabulary reports");
  stats->add_option("--report", o.report,
                    "rings, decomposition, summary or vocab")
      ->required();
  stats->add_option("--input", o.input, "SMILES corpus");
  stats->add_option("--vocab", o.vocab, "Vocabulary file");
  stats->add_option("--scheme", o.scheme, "bbb, psm or subcover")
      ->default_val("bbb");
  stats->add_flag("--skip-invalid", o.skip_invalid,
                  "Skip unparsable lines instead of failing");
  common(stats);

  CLI::App *split = app.add_subcommand("split", "Seeded train/valid/test split");
  split->add_option("--input", o.input, "SMILES corpus")->required();
  split->add_option("--seed", o.seed, "Random seed")->default_val(0);
  split->add_option("--split", o.split, "Ratios, e.g. 0.8,0.1,0.1")
      ->default_val("0.8,0.1,0.1");
  common(split);

  CLI::App *asmb =
      app.add_subcommand("assemble", "Valency correction and cycle breaking");
  asmb->add_option("--input", o.input, "Scored graph records")->required();
  asmb->add_option("--order", o.order, "valency-first or cycle-first")
      ->default_val("valency-first");
  common(asmb);

  CLI::App *cmp =
      app.add_subcommand("compare", "Run all three schemes side by side");
  cmp->add_option("--input", o.input, "SMILES corpus")->required();
  cmp->add_option("--k", o.k, "Vocabulary size for both schemes")
      ->required()
      ->check(CLI::PositiveNumber);
  cmp->add_flag("--skip-invalid", o.skip_invalid,
                "Skip unparsable lines instead of failing");
  common(cmp);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (build->parsed())
      return cmd_build_vocab(o, out, err);
    if (dec->parsed())
      return cmd_decompose(o, out, err);
    if (stats->parsed())
      return cmd_stats(o, out, err);
    if (split->parsed())
      return cmd_split(o, out, err);
    if (asmb->parsed())
      return cmd_assemble(o, out, err);
    if (cmp->parsed())
      return cmd_compare(o, out, err);
  } catch (const CLI::Error &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace molfrag::cli
