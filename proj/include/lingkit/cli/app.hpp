// Copyright 2026 The lingkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lingkit/lingkit.hpp"

namespace lingkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Every flag of every subcommand, with the defaults reported by --help.
struct PipelineConfig {
  unsigned threads = 1;
  uint64_t seed = 0;

  // input corpus (one of)
  std::string corpus_path;
  std::string manifest_path;

  // ingest
  std::string ingest_out;

  // split
  size_t train_n = 5000;
  size_t dev_n = 50;
  size_t test_n = 100;
  bool proportional = false;
  std::string split_out;
  std::string split_dir;

  // filter-foreign
  std::string foreign = "eng,fra,por,ara";
  double threshold = filter::kDefaultThreshold;
  size_t sample_limit = filter::kDefaultSampleLimit;
  std::string filter_out;

  // learn-bpe / apply-bpe / wordpiece
  size_t merges = 100000;
  size_t per_lang = 0;  // 0 = every sentence
  int64_t min_frequency = subword::kDefaultMinPairFrequency;
  std::string codes_path;
  bool decode = false;
  size_t vocab_size = subword::kVocabPreset250k;
  std::string preset;
  std::string vocab_path;
  std::string vocab_out;
  std::string train_text;

  // lid
  std::string model_path;
  std::string train_path;
  std::string test_path;
  uint32_t n_min = 1;
  uint32_t n_max = 4;
  uint32_t max_features = 500000;
  uint32_t min_df = 2;
  double alpha = lid::kDefaultAlpha;
  size_t top_k = 1;
  std::vector<std::string> texts;

  // jaccard
  std::string langs;
  double bold_threshold = similarity::kDefaultHighlightThreshold;
  std::string bold_out;

  // metrics
  std::string gold_path;
  std::string pred_path;
  bool strict = false;
  std::string scores;

  // shared io
  std::string input;
  std::string output;
  std::string report;
  std::string confusion;
  std::string format = "human";
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile("cannot open: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write: " + path);
  out << content;
  if (!out) throw IoError("failed writing: " + path);
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile("cannot open: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

inline Corpus load_input_corpus(const PipelineConfig& c) {
  if (!c.manifest_path.empty()) return load_corpus(c.manifest_path, c.threads);
  if (!c.corpus_path.empty()) return Corpus::from_labeled(read_labeled_file(c.corpus_path));
  throw InvalidArgument("one of --corpus or --manifest is required");
}

inline metrics::ReportFormat report_format(const std::string& f) {
  return f == "tsv" ? metrics::ReportFormat::kTsv : metrics::ReportFormat::kHuman;
}

inline std::string format_posterior(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", p);
  return buf;
}

// Writes to `path`, or to `out` when path is empty or "-".
inline void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file(path, content);
  }
}

inline std::string join_results(const CLI::Option* opt) {
  if (opt->count() == 0) return opt->get_default_str();
  std::string s;
  for (const auto& r : opt->results()) {
    if (!s.empty()) s += ',';
    s += r;
  }
  return s.empty() ? "true" : s;
}

// Resolved configuration of the selected subcommand, one line on stderr.
inline void log_config(const CLI::App& app, const CLI::App& sub, std::ostream& err) {
  err << "# config: command=" << sub.get_name();
  for (const CLI::App* scope : {&app, &sub}) {
    for (const CLI::Option* opt : scope->get_options()) {
      if (opt->get_name() == "--help" || opt->get_name() == "--help-all") continue;
      const std::string value = join_results(opt);
      if (value.empty() && opt->count() == 0) continue;
      err << ' ' << opt->get_single_name() << '=' << value;
    }
  }
  err << '\n';
}

}  // namespace detail

// Subcommand bodies. Each returns an exit status; errors propagate as
// lingkit::Error.
namespace commands {

inline int ingest(const PipelineConfig& c, std::ostream& out) {
  const Corpus corpus = load_corpus(c.manifest_path, c.threads);
  write_labeled_file(c.ingest_out, corpus.labeled());
  metrics::Table t{{"lang", "sentences"}, {}};
  for (const auto& [lang, sentences] : corpus) t.rows.push_back({lang.str(), std::to_string(sentences.size())});
  t.rows.push_back({"total", std::to_string(corpus.total())});
  out << t.render(detail::report_format(c.format));
  return kExitOk;
}

inline int split(const PipelineConfig& c, std::ostream& out) {
  const Corpus corpus = detail::load_input_corpus(c);
  const SplitSpec spec{c.train_n, c.dev_n, c.test_n, c.seed};
  const auto splits =
      make_splits(corpus, spec, c.proportional ? SplitMode::kProportional : SplitMode::kStrict);
  detail::write_file(c.split_out, serialize_splits(splits));
  if (!c.split_dir.empty()) {
    std::filesystem::create_directories(c.split_dir);
    const auto m = materialize_splits(corpus, splits);
    const std::filesystem::path dir(c.split_dir);
    write_labeled_file(dir / "train.tsv", m.train);
    write_labeled_file(dir / "dev.tsv", m.dev);
    write_labeled_file(dir / "test.tsv", m.test);
  }
  metrics::Table t{{"lang", "train", "dev", "test"}, {}};
  for (const auto& [lang, s] : splits) {
    t.rows.push_back({lang.str(), std::to_string(s.train.size()), std::to_string(s.dev.size()),
                      std::to_string(s.test.size())});
  }
  out << t.render(detail::report_format(c.format));
  return kExitOk;
}

inline int filter_foreign(const PipelineConfig& c, std::ostream& out) {
  const Corpus corpus = detail::load_input_corpus(c);
  const auto model = lid::load_model(c.model_path);
  filter::ForeignFilterConfig config;
  const auto tags = parse_language_list(c.foreign);
  config.foreign_set = {tags.begin(), tags.end()};
  config.threshold = c.threshold;
  config.model_ref = c.model_path;
  config.sample_limit = c.sample_limit;
  const auto result = filter::filter_foreign(corpus, model, config, c.threads);
  write_labeled_file(c.filter_out, result.kept.labeled());
  const std::string summary = filter::format_filter_report(result.report);
  if (!c.report.empty()) detail::write_file(c.report, summary);
  out << summary;
  for (const auto& s : result.report.removed_sample) {
    out << "# removed " << s.corpus_lang << " -> " << s.predicted << ' '
        << detail::format_posterior(s.score) << '\t' << s.text << '\n';
  }
  return kExitOk;
}

inline int learn_bpe(const PipelineConfig& c, std::ostream& out) {
  std::vector<std::string> sentences;
  if (!c.input.empty()) {
    for (auto& line : detail::read_lines(c.input)) {
      std::string cleaned = clean_text(line);
      if (!cleaned.empty()) sentences.push_back(std::move(cleaned));
    }
  } else {
    const Corpus corpus = detail::load_input_corpus(c);
    const size_t per_lang = c.per_lang == 0 ? std::numeric_limits<size_t>::max() : c.per_lang;
    sentences = subword::sample_concat(corpus, per_lang, c.seed);
  }
  const auto model = subword::learn_bpe(sentences, c.merges, c.min_frequency);
  subword::save_codes(c.codes_path, model);
  out << "learned " << model.size() << " merges from " << sentences.size() << " sentences\n";
  return kExitOk;
}

inline int apply_bpe(const PipelineConfig& c, std::ostream& out) {
  std::ostringstream result;
  const auto lines = detail::read_lines(c.input);
  if (c.decode) {
    for (const auto& line : lines) result << subword::bpe_decode(whitespace_tokenize(line)) << '\n';
  } else {
    const auto model = subword::load_codes(c.codes_path);
    for (const auto& line : lines) {
      result << join(subword::apply_bpe_sentence(model, clean_text(line))) << '\n';
    }
  }
  detail::emit(c.output, result.str(), out);
  return kExitOk;
}

inline int wordpiece(const PipelineConfig& c, std::ostream& out) {
  size_t cap = c.vocab_size;
  if (c.preset == "110k") cap = subword::kVocabPreset110k;
  if (c.preset == "250k") cap = subword::kVocabPreset250k;

  std::unique_ptr<subword::WordPieceVocab> vocab;
  if (!c.codes_path.empty()) {
    if (c.train_text.empty()) throw InvalidArgument("--codes requires --train-text");
    const auto model = subword::load_codes(c.codes_path);
    std::vector<std::string> sentences;
    for (auto& line : detail::read_lines(c.train_text)) {
      std::string cleaned = clean_text(line);
      if (!cleaned.empty()) sentences.push_back(std::move(cleaned));
    }
    vocab = std::make_unique<subword::WordPieceVocab>(
        subword::build_wordpiece_vocab(model, sentences, cap));
    if (!c.vocab_out.empty()) subword::save_vocab(c.vocab_out, *vocab);
    if (c.input.empty()) out << "vocabulary: " << vocab->size() << " pieces (cap " << cap << ")\n";
  } else if (!c.vocab_path.empty()) {
    vocab = std::make_unique<subword::WordPieceVocab>(subword::load_vocab(c.vocab_path));
  } else {
    throw InvalidArgument("one of --codes (build) or --vocab (load) is required");
  }

  if (!c.input.empty()) {
    std::ostringstream result;
    for (const auto& line : detail::read_lines(c.input)) {
      std::vector<std::string> pieces;
      for (const auto& token : whitespace_tokenize(clean_text(line))) {
        auto p = subword::wordpiece_encode(*vocab, token);
        pieces.insert(pieces.end(), p.begin(), p.end());
      }
      result << join(pieces) << '\n';
    }
    detail::emit(c.output, result.str(), out);
  }
  return kExitOk;
}

inline int train_lid(const PipelineConfig& c, std::ostream& out) {
  lid::LidFeatureConfig fc;
  fc.n_min = c.n_min;
  fc.n_max = c.n_max;
  fc.max_features = c.max_features;
  fc.min_df = c.min_df;
  const auto train = read_labeled_file(c.train_path);
  const auto model = lid::train_lid(train, fc, c.alpha, c.threads);
  lid::save_model(c.model_path, model);
  out << "trained " << model.num_labels() << " labels, " << model.num_features()
      << " features on " << train.size() << " sentences\n";
  return kExitOk;
}

inline int identify(const PipelineConfig& c, std::ostream& out) {
  const auto model = lid::load_model(c.model_path);
  std::vector<std::string> texts = c.texts;
  if (!c.input.empty()) {
    auto lines = detail::read_lines(c.input);
    texts.insert(texts.end(), lines.begin(), lines.end());
  }
  std::vector<std::string> cleaned;
  std::vector<size_t> positions;
  for (size_t i = 0; i < texts.size(); ++i) {
    std::string t = clean_text(texts[i]);
    if (t.empty()) continue;
    cleaned.push_back(std::move(t));
    positions.push_back(i);
  }
  const auto preds = lid::identify_all(model, cleaned, c.threads);
  std::vector<std::string> lines(texts.size());
  const size_t k = std::max<size_t>(1, c.top_k);
  for (size_t j = 0; j < preds.size(); ++j) {
    std::string line;
    for (size_t r = 0; r < k && r < preds[j].ranked.size(); ++r) {
      if (r) line += '\t';
      line += preds[j].ranked[r].lang.str() + '\t' + detail::format_posterior(preds[j].ranked[r].posterior);
    }
    lines[positions[j]] = std::move(line);
  }
  std::string result;
  for (const auto& l : lines) result += l + '\n';
  detail::emit(c.output, result, out);
  return kExitOk;
}

inline int eval_lid(const PipelineConfig& c, std::ostream& out) {
  const auto model = lid::load_model(c.model_path);
  const auto test = read_labeled_file(c.test_path);
  const auto report = lid::evaluate_lid(model, test, c.threads);
  if (!c.report.empty()) {
    detail::write_file(c.report, metrics::emit_classification_report(report, metrics::ReportFormat::kTsv));
  }
  if (!c.confusion.empty()) detail::write_file(c.confusion, metrics::confusion_csv(report));
  out << metrics::emit_classification_report(report, detail::report_format(c.format));
  return kExitOk;
}

inline int jaccard(const PipelineConfig& c, std::ostream& out) {
  const Corpus corpus = detail::load_input_corpus(c);
  const auto langs = c.langs.empty() ? corpus.languages() : parse_language_list(c.langs);
  const auto m = similarity::similarity_matrix(corpus, langs, c.bold_threshold, c.threads);
  detail::emit(c.output, similarity::matrix_csv(m), out);
  if (!c.bold_out.empty()) detail::write_file(c.bold_out, similarity::highlight_tsv(m));
  return kExitOk;
}

inline int score_seq(const PipelineConfig& c, std::ostream& out) {
  const auto gold = metrics::read_conll_file(c.gold_path);
  const auto pred = metrics::read_conll_file(c.pred_path);
  const auto report = metrics::span_report(
      gold, pred, c.strict ? metrics::BioMode::kStrict : metrics::BioMode::kLenient);
  const auto table = metrics::span_table(report);
  if (!c.report.empty()) detail::write_file(c.report, table.render(metrics::ReportFormat::kTsv));
  out << table.render(detail::report_format(c.format));
  return kExitOk;
}

inline int score_cls(const PipelineConfig& c, std::ostream& out) {
  std::vector<std::string> gold, pred;
  size_t line_no = 0;
  for (const auto& line : detail::read_lines(c.input)) {
    ++line_no;
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw FormatError(c.input + ":" + std::to_string(line_no) + ": expected 'gold<TAB>pred'");
    }
    gold.push_back(line.substr(0, tab));
    pred.push_back(line.substr(tab + 1));
  }
  const auto report = metrics::classification_report(gold, pred);
  if (!c.report.empty()) {
    detail::write_file(c.report, metrics::emit_classification_report(report, metrics::ReportFormat::kTsv));
  }
  if (!c.confusion.empty()) detail::write_file(c.confusion, metrics::confusion_csv(report));
  out << metrics::emit_classification_report(report, detail::report_format(c.format));
  return kExitOk;
}

inline double parse_score(const std::string& s) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw FormatError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw FormatError("not a number: '" + s + "'");
  return v;
}

// Input lines are `dataset<TAB>run1[<TAB>run2...]`; --scores takes a single
// comma-separated run list.
inline int aggregate(const PipelineConfig& c, std::ostream& out) {
  std::vector<metrics::DatasetResult> results;
  if (!c.scores.empty()) {
    std::vector<double> runs;
    std::stringstream ss(c.scores);
    std::string item;
    while (std::getline(ss, item, ',')) runs.push_back(parse_score(item));
    const std::string line = metrics::format_aggregate(metrics::aggregate_runs(runs)) + "\n";
    if (!c.report.empty()) detail::write_file(c.report, line);
    out << line;
    return kExitOk;
  }
  for (const auto& line : detail::read_lines(c.input)) {
    if (line.empty() || line.front() == '#') continue;
    std::stringstream ss(line);
    std::string name, field;
    std::getline(ss, name, '\t');
    std::vector<double> runs;
    while (std::getline(ss, field, '\t')) runs.push_back(parse_score(field));
    results.push_back({name, metrics::aggregate_runs(runs)});
  }
  if (results.empty()) throw EmptyList("no dataset scores in " + c.input);
  const auto table = metrics::benchmark_table(results);
  if (!c.report.empty()) detail::write_file(c.report, table.render(metrics::ReportFormat::kTsv));
  out << table.render(detail::report_format(c.format));
  return kExitOk;
}

}  // namespace commands

// Runs the tool with `args` (without the program name). Usage errors exit
// with 2, operation errors with 1 and the error name on `err`.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  PipelineConfig c;
  CLI::App app{"lingkit: multilingual corpus curation and language identification", "lingkit"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--threads", c.threads, "Worker threads; outputs do not depend on it")
      ->check(CLI::Range(1u, 1024u));

  auto corpus_opts = [&](CLI::App* sub) {
    auto* a = sub->add_option("--corpus", c.corpus_path, "Labeled corpus file (lang<TAB>text)");
    auto* b = sub->add_option("--manifest", c.manifest_path, "Corpus manifest (path<TAB>lang<TAB>domain<TAB>script)");
    a->excludes(b);
  };
  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Standard output format")
        ->check(CLI::IsMember({"human", "tsv"}));
  };

  auto* ingest = app.add_subcommand("ingest", "Load a manifest into a cleaned, deduplicated labeled corpus");
  ingest->add_option("--manifest", c.manifest_path, "Corpus manifest")->required();
  ingest->add_option("--out", c.ingest_out, "Output labeled corpus file")->required();
  format_opt(ingest);

  auto* split = app.add_subcommand("split", "Draw seeded per-language train/dev/test splits");
  corpus_opts(split);
  split->add_option("--train", c.train_n, "Train sentences per language");
  split->add_option("--dev", c.dev_n, "Dev sentences per language");
  split->add_option("--test", c.test_n, "Test sentences per language");
  split->add_option("--seed", c.seed, "Random seed");
  split->add_flag("--proportional", c.proportional,
                  "Scale sizes down for short languages instead of failing");
  split->add_option("--out", c.split_out, "Split assignment file")->required();
  split->add_option("--out-dir", c.split_dir, "Also write train.tsv, dev.tsv and test.tsv here");
  format_opt(split);

  auto* filt = app.add_subcommand("filter-foreign", "Remove sentences identified as foreign languages");
  corpus_opts(filt);
  filt->add_option("--model", c.model_path, "LID model file")->required();
  filt->add_option("--foreign", c.foreign, "Comma-separated foreign language tags");
  filt->add_option("--threshold", c.threshold, "Minimum top-1 posterior for removal")
      ->check(CLI::Range(0.0, 1.0));
  filt->add_option("--sample", c.sample_limit, "Removed sentences to list");
  filt->add_option("--out", c.filter_out, "Kept corpus (labeled file)")->required();
  filt->add_option("--report", c.report, "Per-language TSV summary file");

  auto* lbpe = app.add_subcommand("learn-bpe", "Learn BPE merge operations (subword-nmt codes format)");
  corpus_opts(lbpe);
  lbpe->add_option("--input", c.input, "Plain text, one sentence per line (instead of a corpus)");
  lbpe->add_option("--merges", c.merges, "Number of merge operations")->check(CLI::PositiveNumber);
  lbpe->add_option("--per-lang", c.per_lang, "Sentences sampled per language (0 = all)");
  lbpe->add_option("--min-frequency", c.min_frequency, "Minimum pair frequency to merge");
  lbpe->add_option("--seed", c.seed, "Random seed for sampling");
  lbpe->add_option("--out", c.codes_path, "Output codes file")->required();

  auto* abpe = app.add_subcommand("apply-bpe", "Segment text with learned BPE codes");
  abpe->add_option("--codes", c.codes_path, "Codes file");
  abpe->add_option("--input", c.input, "Input text, one sentence per line")->required();
  abpe->add_option("--output", c.output, "Output file (default: stdout)");
  abpe->add_flag("--decode", c.decode, "Decode space-separated pieces back to text");

  auto* wp = app.add_subcommand("wordpiece", "Build a WordPiece vocabulary from BPE codes and/or encode text");
  wp->alias("wordpiece-encode");
  wp->add_option("--codes", c.codes_path, "BPE codes used to derive the vocabulary");
  wp->add_option("--train-text", c.train_text, "Sentences the vocabulary is derived from");
  wp->add_option("--vocab-size", c.vocab_size, "Vocabulary size cap")->check(CLI::PositiveNumber);
  wp->add_option("--preset", c.preset, "Size preset: 110k (110000) or 250k (250000)")
      ->check(CLI::IsMember({"110k", "250k"}));
  wp->add_option("--vocab", c.vocab_path, "Existing vocabulary file");
  wp->add_option("--vocab-out", c.vocab_out, "Write the derived vocabulary here");
  wp->add_option("--input", c.input, "Text to encode");
  wp->add_option("--output", c.output, "Encoded output (default: stdout)");

  auto* tlid = app.add_subcommand("train-lid", "Train the character n-gram language identifier");
  tlid->add_option("--train", c.train_path, "Training sentences (lang<TAB>text)")->required();
  tlid->add_option("--out", c.model_path, "Output model file")->required();
  tlid->add_option("--n-min", c.n_min, "Smallest n-gram order");
  tlid->add_option("--n-max", c.n_max, "Largest n-gram order");
  tlid->add_option("--max-features", c.max_features, "Feature vocabulary cap");
  tlid->add_option("--min-df", c.min_df, "Minimum document frequency");
  tlid->add_option("--alpha", c.alpha, "Additive smoothing constant");

  auto* ident = app.add_subcommand("identify", "Identify the language of each input line");
  ident->add_option("--model", c.model_path, "LID model file")->required();
  ident->add_option("--input", c.input, "Text file, one item per line");
  ident->add_option("--top-k", c.top_k, "Ranked labels to print per line")->check(CLI::PositiveNumber);
  ident->add_option("--output", c.output, "Output file (default: stdout)");
  ident->add_option("text", c.texts, "Texts to identify");

  auto* elid = app.add_subcommand("eval-lid", "Evaluate a LID model (per-language P/R/F1, macro F1)");
  elid->add_option("--model", c.model_path, "LID model file")->required();
  elid->add_option("--test", c.test_path, "Test sentences (lang<TAB>text)")->required();
  elid->add_option("--report", c.report, "TSV report file");
  elid->add_option("--confusion", c.confusion, "Confusion matrix CSV file");
  format_opt(elid);

  auto* jac = app.add_subcommand("jaccard", "Pairwise Jaccard similarity of per-language vocabularies");
  corpus_opts(jac);
  jac->add_option("--langs", c.langs, "Comma-separated languages (default: all, tag order)");
  jac->add_option("--out", c.output, "Matrix CSV file (default: stdout)");
  jac->add_option("--bold-threshold", c.bold_threshold, "Highlight pairs scoring at or above this")
      ->check(CLI::Range(0.0, 1.0));
  jac->add_option("--bold-out", c.bold_out, "Highlighted pair list file");

  auto* sseq = app.add_subcommand("score-seq", "Span-level P/R/F1 for BIO sequence labeling");
  sseq->add_option("--gold", c.gold_path, "Gold CoNLL file (token<TAB>tag)")->required();
  sseq->add_option("--pred", c.pred_path, "Predicted CoNLL file")->required();
  sseq->add_flag("--strict", c.strict, "Reject I- tags that do not continue a span");
  sseq->add_option("--report", c.report, "TSV report file");
  format_opt(sseq);

  auto* scls = app.add_subcommand("score-cls", "Classification report and confusion matrix");
  scls->add_option("--input", c.input, "gold<TAB>pred per line")->required();
  scls->add_option("--report", c.report, "TSV report file");
  scls->add_option("--confusion", c.confusion, "Confusion matrix CSV file");
  format_opt(scls);

  auto* agg = app.add_subcommand("aggregate", "Mean and sample std over runs; benchmark average");
  auto* agg_in = agg->add_option("--input", c.input, "dataset<TAB>run1<TAB>run2... per line");
  auto* agg_scores = agg->add_option("--scores", c.scores, "Comma-separated run scores");
  agg_in->excludes(agg_scores);
  agg->add_option("--report", c.report, "TSV report file");
  format_opt(agg);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("lingkit");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    err << "run 'lingkit --help' for usage\n";
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  detail::log_config(app, *sub, err);
  const std::string name = sub->get_name();
  try {
    if (name == "ingest") return commands::ingest(c, out);
    if (name == "split") return commands::split(c, out);
    if (name == "filter-foreign") return commands::filter_foreign(c, out);
    if (name == "learn-bpe") return commands::learn_bpe(c, out);
    if (name == "apply-bpe") {
      if (!c.decode && c.codes_path.empty()) throw InvalidArgument("--codes is required");
      return commands::apply_bpe(c, out);
    }
    if (name == "wordpiece") return commands::wordpiece(c, out);
    if (name == "train-lid") return commands::train_lid(c, out);
    if (name == "identify") return commands::identify(c, out);
    if (name == "eval-lid") return commands::eval_lid(c, out);
    if (name == "jaccard") return commands::jaccard(c, out);
    if (name == "score-seq") return commands::score_seq(c, out);
    if (name == "score-cls") return commands::score_cls(c, out);
    if (name == "aggregate") {
      if (c.input.empty() && c.scores.empty()) throw InvalidArgument("--input or --scores is required");
      return commands::aggregate(c, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  err << "usage error: unknown subcommand " << name << '\n';
  return kExitUsage;
}

}  // namespace lingkit::cli
