// spellbench: build spelling benchmarks from a lexicon and a corpus, emit
// prompt manifests, post-process OCR output, and score/aggregate results.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spellbench/corpus_stats.hpp"
#include "spellbench/error.hpp"
#include "spellbench/image.hpp"
#include "spellbench/io.hpp"
#include "spellbench/lexicon.hpp"
#include "spellbench/ocr.hpp"
#include "spellbench/ocr_http.hpp"
#include "spellbench/prompts.hpp"
#include "spellbench/report.hpp"
#include "spellbench/scoring.hpp"
#include "spellbench/sha256.hpp"
#include "spellbench/version.hpp"
#include "spellbench/wikispell.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace spellbench;

namespace {

std::string iso_utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Audit metadata written beside each run's primary output. Contains the
// wall clock, so it is not part of the byte-determinism contract.
struct RunMeta {
  std::string subcommand;
  std::string timestamp;  // --timestamp override or current UTC time
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::map<std::string, std::string> input_checksums;
  std::string effective_config;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  void add_input(const fs::path& path) {
    input_checksums[path.string()] = sha256_hex(read_file(path));
  }

  void write(const fs::path& target_dir_or_file) const {
    nlohmann::json j;
    const std::string run_id =
        sha256_hex(subcommand + "|" + timestamp + "|" + effective_config).substr(0, 16);
    j["run_id"] = run_id;
    j["subcommand"] = subcommand;
    j["created"] = timestamp;
    j["toolkit_version"] = kVersion;
    if (has_seed) j["seed"] = seed;
    j["input_checksums"] = input_checksums;
    j["effective_config"] = effective_config;
    j["wall_clock_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started)
            .count();
    fs::path out = target_dir_or_file;
    if (fs::is_directory(out) || out.extension().empty())
      out /= "run_meta.json";
    else
      out += ".meta.json";
    write_file(out, j.dump(2) + "\n");
  }
};

std::map<std::string, fs::path> parse_model_paths(const std::vector<std::string>& specs) {
  std::map<std::string, fs::path> out;
  for (const std::string& spec : specs) {
    const std::size_t eq = spec.find('=');
    std::string name, path;
    if (eq == std::string::npos) {
      path = spec;
      name = fs::path(spec).stem().string();
    } else {
      name = spec.substr(0, eq);
      path = spec.substr(eq + 1);
    }
    if (name.empty() || path.empty()) throw ConfigError("bad --scores value, expected name=path: " + spec);
    if (!out.emplace(name, path).second) throw ConfigError("duplicate model name: " + name);
  }
  return out;
}

std::vector<IrregularVerb> load_verbs(const std::string& verbs_path) {
  if (verbs_path.empty()) return default_irregular_verbs();
  return irregular_verbs_from_tsv(read_file(verbs_path));
}

nlohmann::json prompt_record_to_json(const PromptRecord& p) {
  nlohmann::json j;
  j["prompt_id"] = p.prompt_id;
  j["kind"] = to_string(p.kind);
  j["prompt"] = p.prompt_text;
  j["target"] = p.target_text ? nlohmann::json(*p.target_text) : nlohmann::json(nullptr);
  j["bucket"] = p.bucket ? nlohmann::json(to_string(*p.bucket)) : nlohmann::json(nullptr);
  j["length_class"] = p.length_class ? nlohmann::json(to_string(*p.length_class)) : nlohmann::json(nullptr);
  return j;
}

void write_prompt_records(const std::vector<PromptRecord>& prompts, const fs::path& path) {
  std::string out;
  for (const PromptRecord& p : prompts) {
    out += prompt_record_to_json(p).dump();
    out += '\n';
  }
  write_file(path, out);
}

// ---- subcommand implementations ----------------------------------------------

struct CountFreqArgs {
  std::string input, out, language = "en", format = "jsonl", mode = "auto", words_file, corpus_id;
  std::uint64_t doc_limit = 0;  // 0 = profile default; negative handled by CLI11
  bool no_doc_limit = false;
  bool case_insensitive = false;
  unsigned workers = 1;
  std::string timestamp;
};

int run_count_freq(const CountFreqArgs& args, RunMeta& meta) {
  LangConfig config = LangConfig::default_profile(args.language);
  if (args.mode == "delimited") config.counting_mode = CountingMode::Delimited;
  else if (args.mode == "doc-substring") config.counting_mode = CountingMode::DocSubstring;
  else if (args.mode != "auto") throw ConfigError("unknown --mode: " + args.mode);
  if (config.counting_mode == CountingMode::Delimited && config.delimiters.empty())
    config.delimiters = LangConfig::default_delimiters();
  if (args.no_doc_limit) config.doc_limit.reset();
  else if (args.doc_limit > 0) config.doc_limit = args.doc_limit;
  config.case_sensitive = !args.case_insensitive;

  const CorpusFormat format = [&] {
    if (args.format == "jsonl") return CorpusFormat::Jsonl;
    if (args.format == "lines") return CorpusFormat::PlainLines;
    throw ConfigError("unknown --format: " + args.format);
  }();

  meta.add_input(args.input);
  std::ifstream in(args.input, std::ios::binary);
  if (!in) throw IoError("cannot open " + args.input);
  std::uint64_t skipped = 0;
  auto provider = doc_provider_from_stream(in, format, skipped);

  FrequencyTable table;
  if (config.counting_mode == CountingMode::Delimited) {
    table = count_delimited(provider, config, args.workers);
  } else {
    if (args.words_file.empty())
      throw ConfigError("doc-substring counting requires --words with the candidate word list");
    meta.add_input(args.words_file);
    const std::vector<std::string> words = kept_lexicon_from_tsv(read_file(args.words_file));
    table = count_doc_substring(provider, words, config, args.workers);
  }
  table.provenance.docs_skipped = skipped;
  table.provenance.corpus_id = args.corpus_id.empty() ? fs::path(args.input).filename().string() : args.corpus_id;
  table.provenance.created = meta.timestamp;
  write_file(args.out, frequency_table_to_tsv(table));
  std::cerr << "counted " << table.entries.size() << " distinct words over " << table.docs_processed
            << " documents (" << skipped << " skipped)\n";
  meta.write(args.out);
  return 0;
}

int run_filter_lexicon(const std::string& input, const std::string& out, const std::string& report_path,
                       const std::string& language, RunMeta& meta) {
  meta.add_input(input);
  IngestResult ingest = ingest_lexicon(read_file(input));
  std::vector<LexiconEntry> entries;
  if (!language.empty()) {
    for (LexiconEntry& e : ingest.entries)
      if (e.language_code == language) entries.push_back(std::move(e));
  } else {
    std::set<std::string> langs;
    for (const LexiconEntry& e : ingest.entries) langs.insert(e.language_code);
    if (langs.size() > 1) {
      std::string msg = "lexicon mixes languages (";
      for (const auto& l : langs) msg += l + " ";
      msg.back() = ')';
      throw ConfigError(msg + "; pass --language to choose one");
    }
    entries = std::move(ingest.entries);
  }
  FilterResult filtered = filter_entries(entries);
  write_file(out, kept_lexicon_to_tsv(filtered.kept));
  nlohmann::json report = filtered.report.to_json();
  report["rows_total"] = ingest.rows_total;
  report["rows_malformed"] = ingest.rows_malformed;
  if (!report_path.empty()) write_file(report_path, report.dump(2) + "\n");
  std::cerr << "kept " << filtered.report.total_kept << " of " << filtered.report.total_in << " entries\n";
  meta.write(out);
  return 0;
}

struct BuildWikispellArgs {
  std::string lexicon, freq, out;
  std::uint64_t seed = 0;
  std::uint64_t eval_per_bucket = 1000, train_uniform = 5000, train_weighted = 5000;
};

int run_build_wikispell(const BuildWikispellArgs& args, RunMeta& meta) {
  meta.add_input(args.lexicon);
  meta.add_input(args.freq);
  const std::vector<std::string> kept = kept_lexicon_from_tsv(read_file(args.lexicon));
  const FrequencyTable table = frequency_table_from_tsv(read_file(args.freq));
  SamplingSpec spec;
  spec.seed = args.seed;
  spec.eval_per_bucket = args.eval_per_bucket;
  spec.train_uniform = args.train_uniform;
  spec.train_weighted = args.train_weighted;
  const WikiSpellDataset ds = build_wikispell(kept, table, spec);
  for (const std::string& w : ds.eval.warnings) std::cerr << "warning: " << w << "\n";
  emit_dataset(ds, args.out);
  std::cerr << "wrote dataset to " << args.out << "\n";
  meta.write(args.out);
  return 0;
}

struct GenPromptsArgs {
  std::string dataset, out, split = "test";
  std::string prompt_template = kDefaultSpellingTemplate;
  std::uint64_t words_per_bucket = 100;
  std::uint64_t seed = 0;
  int samples_per_prompt = 4;
};

int run_gen_prompts(const GenPromptsArgs& args, RunMeta& meta) {
  meta.add_input(fs::path(args.dataset) / "metadata.json");
  const auto eval_words = load_eval_words(args.dataset, args.split);
  const std::vector<PromptRecord> prompts =
      gen_spelling_prompts(eval_words, args.words_per_bucket, args.prompt_template, args.seed);
  const Manifest manifest = build_manifest(prompts, args.samples_per_prompt, args.seed);
  emit_manifest(manifest, args.out);
  write_prompt_records(manifest.prompts, fs::path(args.out) / "prompts.jsonl");
  std::cerr << "wrote " << manifest.prompts.size() << " prompts, " << manifest.rows.size()
            << " manifest rows\n";
  meta.write(args.out);
  return 0;
}

int run_load_creative(const std::string& corpus, const std::string& checksum, const std::string& out,
                      int samples_per_prompt, RunMeta& meta) {
  std::vector<PromptRecord> prompts;
  if (corpus.empty()) {
    prompts = load_creative_prompts();
  } else {
    meta.add_input(corpus);
    prompts = load_creative_prompts_file(corpus, checksum.empty() ? detail::kCreativeCorpusSha256 : checksum);
  }
  const Manifest manifest = build_manifest(prompts, samples_per_prompt, 0);
  emit_manifest(manifest, out);
  write_prompt_records(manifest.prompts, fs::path(out) / "prompts.jsonl");
  std::map<std::string, int> classes;
  for (const PromptRecord& p : manifest.prompts)
    if (p.length_class) ++classes[to_string(*p.length_class)];
  std::cerr << "loaded " << manifest.prompts.size() << " creative prompts (";
  for (const auto& [cls, n] : classes) std::cerr << cls << "=" << n << " ";
  std::cerr << ")\n";
  meta.write(out);
  return 0;
}

struct OcrArgs {
  std::string manifest, out, backend = "precomputed", responses, endpoint, images, raw_dir;
  std::string credential_env = "OCR_CREDENTIAL";
  unsigned workers = 8;
  int timeout_seconds = 30;
  int retries = 3;
};

int run_ocr_cmd(const OcrArgs& args, RunMeta& meta) {
  meta.add_input(args.manifest);
  const std::vector<ManifestEntry> manifest = parse_manifest_jsonl(read_file(args.manifest));
  std::vector<std::string> image_ids;
  image_ids.reserve(manifest.size());
  for (const ManifestEntry& e : manifest) image_ids.push_back(e.image_path);

  std::unique_ptr<OcrBackend> backend;
  if (args.backend == "precomputed") {
    if (args.responses.empty()) throw ConfigError("--responses is required with the precomputed backend");
    backend = std::make_unique<PrecomputedDirBackend>(args.responses);
  } else if (args.backend == "http") {
    if (args.endpoint.empty()) throw ConfigError("--endpoint is required with the http backend");
    HttpBackendConfig cfg;
    cfg.endpoint = args.endpoint;
    cfg.credential_env = args.credential_env;
    cfg.timeout_seconds = args.timeout_seconds;
    cfg.max_retries = args.retries;
    backend = std::make_unique<HttpBackend>(cfg);
  } else {
    throw ConfigError("unknown --backend: " + args.backend);
  }

  ImageLoader loader;
  if (backend->needs_images()) {
    if (args.images.empty()) throw ConfigError("--images is required with the http backend");
    const fs::path images_root = args.images;
    loader = [images_root](const std::string& image_path) {
      const Raster full = load_image(images_root / image_path);
      return encode_png(preprocess_image(full));
    };
  }

  std::optional<fs::path> raw_dir;
  if (!args.raw_dir.empty()) raw_dir = fs::path(args.raw_dir);
  const std::vector<OcrOutcome> outcomes = run_ocr(image_ids, *backend, loader, args.workers, raw_dir);
  write_file(args.out, ocr_outcomes_to_jsonl(outcomes));
  std::uint64_t failures = 0;
  for (const OcrOutcome& o : outcomes) failures += o.result ? 0 : 1;
  std::cerr << "processed " << outcomes.size() << " images, " << failures << " pipeline failures\n";
  meta.write(args.out);
  return 0;
}

int run_score(const std::string& manifest_path, const std::string& ocr_path, const std::string& out,
              const std::string& verbs_path, RunMeta& meta) {
  meta.add_input(manifest_path);
  meta.add_input(ocr_path);
  const std::vector<ManifestEntry> manifest = parse_manifest_jsonl(read_file(manifest_path));
  const std::map<std::string, OcrRecord> ocr = parse_ocr_jsonl(read_file(ocr_path));
  const std::vector<IrregularVerb> verbs = load_verbs(verbs_path);
  const ScoreRun run = score_samples(manifest, ocr, verbs);
  write_file(out, scores_to_jsonl(run.scores));
  if (run.skipped_no_target > 0)
    std::cerr << "skipped " << run.skipped_no_target << " rows with no target text\n";
  std::cerr << "scored " << run.scores.size() << " samples\n";
  meta.write(out);
  return 0;
}

int run_classify(const std::string& pairs_path, const std::string& verbs_path) {
  const std::vector<IrregularVerb> verbs = load_verbs(verbs_path);
  const std::string text = pairs_path.empty() ? std::string(std::istreambuf_iterator<char>(std::cin),
                                                            std::istreambuf_iterator<char>())
                                              : read_file(pairs_path);
  for (const std::string& line : split_lines(text)) {
    if (line.empty()) continue;
    const auto cols = split_on(line, '\t');
    if (cols.size() != 2) throw ParseError("classify input row must be target<TAB>reading: " + line);
    const SampleState state = match_spelling(cols[0], cols[1]);
    std::string cls = "-", tags = "-";
    if (state == SampleState::Incorrect) {
      cls = to_string(classify_error(cols[0], cols[1]));
      if (is_regularized_irregular(cols[0], cols[1], verbs)) tags = kTagRegularizedIrregular;
    }
    std::cout << cols[0] << '\t' << cols[1] << '\t' << to_string(state) << '\t' << cls << '\t' << tags
              << '\n';
  }
  return 0;
}

int run_validate_plan(const std::vector<std::string>& scores_specs, const std::string& out,
                      std::uint64_t per_verdict, std::uint64_t seed, RunMeta& meta) {
  std::map<std::string, std::vector<SampleScore>> by_model;
  for (const auto& [model, path] : parse_model_paths(scores_specs)) {
    meta.add_input(path);
    by_model[model] = scores_from_jsonl(read_file(path));
  }
  const ValidationPlan plan = plan_validation(by_model, per_verdict, seed);
  for (const std::string& w : plan.warnings) std::cerr << "warning: " << w << "\n";
  write_file(out, validation_plan_to_csv(plan));
  std::cerr << "wrote labeling sheet with " << plan.rows.size() << " rows\n";
  meta.write(out);
  return 0;
}

int run_validate_apply(const std::string& sheet_path, const std::vector<std::string>& scores_specs,
                       const std::string& out, RunMeta& meta) {
  meta.add_input(sheet_path);
  const std::vector<ValidationSheetRow> sheet = parse_validation_sheet(read_file(sheet_path));
  nlohmann::json outcomes = nlohmann::json::array();
  for (const auto& [model, path] : parse_model_paths(scores_specs)) {
    meta.add_input(path);
    const std::vector<SampleScore> scores = scores_from_jsonl(read_file(path));
    std::uint64_t correct = 0, scored = 0;
    for (const SampleScore& s : scores) {
      if (s.state == SampleState::PipelineError) continue;
      ++scored;
      correct += s.state == SampleState::Correct;
    }
    const double acc = scored ? static_cast<double>(correct) / static_cast<double>(scored) : 0.0;
    const ValidationOutcome outcome = apply_validation(model, acc, sheet);
    outcomes.push_back(validation_outcome_to_json(outcome));
    std::cerr << model << ": measured " << acc << " -> adjusted " << outcome.adjusted_accuracy << "\n";
  }
  write_file(out, outcomes.dump(2) + "\n");
  meta.write(out);
  return 0;
}

int run_prefs(const std::string& ratings_path, const std::string& out, RunMeta& meta) {
  meta.add_input(ratings_path);
  const std::vector<PreferenceRecord> records = parse_ratings_csv(read_file(ratings_path));
  const PreferenceReport report = aggregate_preferences(records);
  write_file(out, preference_report_to_json(report).dump(2) + "\n");
  std::cerr << "aggregated " << records.size() << " ratings\n";
  meta.write(out);
  return 0;
}

int run_report(const std::vector<std::string>& scores_specs, const std::string& validation_path,
               const std::string& prefs_path, const std::string& verbs_path,
               std::uint64_t samples_per_prompt, const std::string& out, RunMeta& meta) {
  std::map<std::string, std::vector<SampleScore>> by_model;
  for (const auto& [model, path] : parse_model_paths(scores_specs)) {
    meta.add_input(path);
    by_model[model] = scores_from_jsonl(read_file(path));
  }
  ReportBundle bundle = build_report_bundle(by_model, samples_per_prompt, load_verbs(verbs_path));
  if (!validation_path.empty()) {
    meta.add_input(validation_path);
    for (const auto& j : nlohmann::json::parse(read_file(validation_path))) {
      ValidationOutcome v;
      v.model = j.at("model").get<std::string>();
      v.measured_accuracy = j.at("measured_accuracy").get<double>();
      v.false_negative_rate = j.at("false_negative_rate").get<double>();
      v.false_positive_rate = j.at("false_positive_rate").get<double>();
      v.adjusted_accuracy = j.at("adjusted_accuracy").get<double>();
      bundle.validation.push_back(std::move(v));
    }
  }
  if (!prefs_path.empty()) {
    meta.add_input(prefs_path);
    const nlohmann::json j = nlohmann::json::parse(read_file(prefs_path));
    PreferenceReport prefs;
    for (const auto& [q, cell] : j.at("by_question").items()) {
      PreferenceCell c;
      c.n_prompts = cell.at("n_prompts").get<std::uint64_t>();
      c.n_ratings = cell.at("n_ratings").get<std::uint64_t>();
      c.rate = cell.at("rate").get<double>();
      c.ci_lo = cell.at("ci95")[0].get<double>();
      c.ci_hi = cell.at("ci95")[1].get<double>();
      prefs.by_question[q] = c;
    }
    if (j.contains("by_category"))
      for (const auto& [q, cats] : j.at("by_category").items())
        for (const auto& [cat, cell] : cats.items()) {
          PreferenceCell c;
          c.n_prompts = cell.at("n_prompts").get<std::uint64_t>();
          c.n_ratings = cell.at("n_ratings").get<std::uint64_t>();
          c.rate = cell.at("rate").get<double>();
          c.ci_lo = cell.at("ci95")[0].get<double>();
          c.ci_hi = cell.at("ci95")[1].get<double>();
          prefs.by_category[q][cat] = c;
        }
    bundle.preferences = std::move(prefs);
  }
  for (const std::string& n : bundle.notices) std::cerr << "note: " << n << "\n";
  emit_report_bundle(bundle, out);
  std::cerr << "wrote report bundle to " << out << "\n";
  meta.write(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spelling benchmark construction and evaluation toolkit"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "read defaults from a TOML config file");
  app.require_subcommand(1);

  std::string timestamp;
  app.add_option("--timestamp", timestamp,
                 "pin the provenance timestamp (ISO-8601) for reproducible outputs");

  // count-freq
  CountFreqArgs cf;
  auto* count_freq = app.add_subcommand("count-freq", "build a word-frequency table from a corpus");
  count_freq->add_option("--input", cf.input, "corpus file (one document per line)")->required();
  count_freq->add_option("--out", cf.out, "output TSV path")->required();
  count_freq->add_option("--language", cf.language, "BCP-47-style language code")->capture_default_str();
  count_freq->add_option("--format", cf.format, "input format: jsonl | lines")->capture_default_str();
  count_freq->add_option("--mode", cf.mode, "counting mode: auto | delimited | doc-substring")
      ->capture_default_str();
  count_freq->add_option("--words", cf.words_file, "candidate words TSV (doc-substring mode)");
  count_freq->add_option("--doc-limit", cf.doc_limit, "documents to ingest (0 = language default)");
  count_freq->add_flag("--no-doc-limit", cf.no_doc_limit, "ingest the whole corpus");
  count_freq->add_flag("--case-insensitive", cf.case_insensitive, "fold case before counting");
  count_freq->add_option("--workers", cf.workers, "worker threads")->capture_default_str();
  count_freq->add_option("--corpus-id", cf.corpus_id, "corpus identifier for provenance");

  // filter-lexicon
  std::string fl_input, fl_out, fl_report, fl_language;
  auto* filter_lex = app.add_subcommand("filter-lexicon", "apply headword exclusion rules");
  filter_lex->add_option("--input", fl_input, "lexicon TSV: headword<TAB>language<TAB>pos1|pos2")->required();
  filter_lex->add_option("--out", fl_out, "kept-lexicon TSV (headword per line)")->required();
  filter_lex->add_option("--report", fl_report, "exclusion report JSON path");
  filter_lex->add_option("--language", fl_language, "keep only this language's rows");

  // build-wikispell
  BuildWikispellArgs bw;
  auto* build_ws = app.add_subcommand("build-wikispell", "bucket a lexicon and emit spelling splits");
  build_ws->add_option("--lexicon", bw.lexicon, "kept-lexicon TSV")->required();
  build_ws->add_option("--freq", bw.freq, "frequency table TSV")->required();
  build_ws->add_option("--seed", bw.seed, "sampling seed")->required();
  build_ws->add_option("--out", bw.out, "output dataset directory")->required();
  build_ws->add_option("--eval-per-bucket", bw.eval_per_bucket)->capture_default_str();
  build_ws->add_option("--train-uniform", bw.train_uniform)->capture_default_str();
  build_ws->add_option("--train-weighted", bw.train_weighted)->capture_default_str();

  // gen-prompts
  GenPromptsArgs gp;
  auto* gen_prompts_cmd = app.add_subcommand("gen-prompts", "generate spelling prompts and a manifest");
  gen_prompts_cmd->add_option("--dataset", gp.dataset, "dataset directory from build-wikispell")->required();
  gen_prompts_cmd->add_option("--out", gp.out, "output directory")->required();
  gen_prompts_cmd->add_option("--split", gp.split, "eval split to draw from: test | dev")->capture_default_str();
  gen_prompts_cmd->add_option("--template", gp.prompt_template, "prompt template with {word}")
      ->capture_default_str();
  gen_prompts_cmd->add_option("--words-per-bucket", gp.words_per_bucket)->capture_default_str();
  gen_prompts_cmd->add_option("--seed", gp.seed, "sampling seed")->required();
  gen_prompts_cmd->add_option("--samples-per-prompt", gp.samples_per_prompt)->capture_default_str();

  // load-creative
  std::string lc_corpus, lc_checksum, lc_out;
  int lc_samples = 4;
  auto* load_creative_cmd = app.add_subcommand("load-creative", "emit the creative prompt corpus");
  load_creative_cmd->add_option("--corpus", lc_corpus, "corpus text file (default: embedded asset)");
  load_creative_cmd->add_option("--checksum", lc_checksum, "expected sha256 of --corpus, or 'none'");
  load_creative_cmd->add_option("--out", lc_out, "output directory")->required();
  load_creative_cmd->add_option("--samples-per-prompt", lc_samples)->capture_default_str();

  // ocr
  OcrArgs oc;
  auto* ocr_cmd = app.add_subcommand("ocr", "run OCR over manifest images");
  ocr_cmd->add_option("--manifest", oc.manifest, "manifest JSONL")->required();
  ocr_cmd->add_option("--out", oc.out, "output OCR results JSONL")->required();
  ocr_cmd->add_option("--backend", oc.backend, "precomputed | http")->capture_default_str();
  ocr_cmd->add_option("--responses", oc.responses, "directory of precomputed responses");
  ocr_cmd->add_option("--endpoint", oc.endpoint, "OCR endpoint URL (http backend)");
  ocr_cmd->add_option("--images", oc.images, "image root directory (http backend)");
  ocr_cmd->add_option("--raw-dir", oc.raw_dir, "persist raw backend responses here");
  ocr_cmd->add_option("--credential-env", oc.credential_env, "environment variable holding the credential")
      ->capture_default_str();
  ocr_cmd->add_option("--workers", oc.workers, "max in-flight requests")->capture_default_str();
  ocr_cmd->add_option("--timeout", oc.timeout_seconds, "request timeout in seconds")->capture_default_str();
  ocr_cmd->add_option("--retries", oc.retries, "max retries per image")->capture_default_str();

  // score
  std::string sc_manifest, sc_ocr, sc_out, sc_verbs;
  auto* score_cmd = app.add_subcommand("score", "score OCR readings against manifest targets");
  score_cmd->add_option("--manifest", sc_manifest, "manifest JSONL")->required();
  score_cmd->add_option("--ocr", sc_ocr, "OCR results JSONL")->required();
  score_cmd->add_option("--out", sc_out, "output scores JSONL")->required();
  score_cmd->add_option("--verbs", sc_verbs, "irregular verbs TSV (root<TAB>past)");

  // classify
  std::string cl_pairs, cl_verbs;
  auto* classify_cmd = app.add_subcommand("classify", "classify target/reading pairs from a TSV");
  classify_cmd->add_option("--pairs", cl_pairs, "TSV of target<TAB>reading (default: stdin)");
  classify_cmd->add_option("--verbs", cl_verbs, "irregular verbs TSV");

  // validate-plan
  std::vector<std::string> vp_scores;
  std::string vp_out;
  std::uint64_t vp_n = 32, vp_seed = 0;
  auto* vplan_cmd = app.add_subcommand("validate-plan", "sample a balanced manual-labeling sheet");
  vplan_cmd->add_option("--scores", vp_scores, "scores files, name=path (repeatable)")->required();
  vplan_cmd->add_option("--out", vp_out, "output CSV sheet")->required();
  vplan_cmd->add_option("--per-verdict", vp_n, "rows per verdict per model")->capture_default_str();
  vplan_cmd->add_option("--seed", vp_seed, "sampling seed")->required();

  // validate-apply
  std::string va_sheet, va_out;
  std::vector<std::string> va_scores;
  auto* vapply_cmd = app.add_subcommand("validate-apply", "compute OCR-corrected accuracy from a labeled sheet");
  vapply_cmd->add_option("--sheet", va_sheet, "filled labeling sheet CSV")->required();
  vapply_cmd->add_option("--scores", va_scores, "scores files, name=path (repeatable)")->required();
  vapply_cmd->add_option("--out", va_out, "output outcomes JSON")->required();

  // prefs
  std::string pf_ratings, pf_out;
  auto* prefs_cmd = app.add_subcommand("prefs", "aggregate human preference ratings");
  prefs_cmd->add_option("--ratings", pf_ratings, "ratings CSV")->required();
  prefs_cmd->add_option("--out", pf_out, "output preference report JSON")->required();

  // report
  std::vector<std::string> rp_scores;
  std::string rp_validation, rp_prefs, rp_verbs, rp_out;
  std::uint64_t rp_samples = 4;
  auto* report_cmd = app.add_subcommand("report", "emit accuracy/consistency tables and plot data");
  report_cmd->add_option("--scores", rp_scores, "scores files, name=path (repeatable)")->required();
  report_cmd->add_option("--out", rp_out, "output directory")->required();
  report_cmd->add_option("--validation", rp_validation, "validation outcomes JSON");
  report_cmd->add_option("--prefs", rp_prefs, "preference report JSON");
  report_cmd->add_option("--verbs", rp_verbs, "irregular verbs TSV");
  report_cmd->add_option("--samples-per-prompt", rp_samples)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  RunMeta meta;
  meta.timestamp = timestamp.empty() ? iso_utc_now() : timestamp;
  cf.timestamp = meta.timestamp;

  try {
    if (*count_freq) {
      meta.subcommand = "count-freq";
      meta.effective_config = count_freq->config_to_str();
      return run_count_freq(cf, meta);
    }
    if (*filter_lex) {
      meta.subcommand = "filter-lexicon";
      meta.effective_config = filter_lex->config_to_str();
      return run_filter_lexicon(fl_input, fl_out, fl_report, fl_language, meta);
    }
    if (*build_ws) {
      meta.subcommand = "build-wikispell";
      meta.seed = bw.seed;
      meta.has_seed = true;
      meta.effective_config = build_ws->config_to_str();
      return run_build_wikispell(bw, meta);
    }
    if (*gen_prompts_cmd) {
      meta.subcommand = "gen-prompts";
      meta.seed = gp.seed;
      meta.has_seed = true;
      meta.effective_config = gen_prompts_cmd->config_to_str();
      return run_gen_prompts(gp, meta);
    }
    if (*load_creative_cmd) {
      meta.subcommand = "load-creative";
      meta.effective_config = load_creative_cmd->config_to_str();
      return run_load_creative(lc_corpus, lc_checksum, lc_out, lc_samples, meta);
    }
    if (*ocr_cmd) {
      meta.subcommand = "ocr";
      meta.effective_config = ocr_cmd->config_to_str();
      return run_ocr_cmd(oc, meta);
    }
    if (*score_cmd) {
      meta.subcommand = "score";
      meta.effective_config = score_cmd->config_to_str();
      return run_score(sc_manifest, sc_ocr, sc_out, sc_verbs, meta);
    }
    if (*classify_cmd) return run_classify(cl_pairs, cl_verbs);
    if (*vplan_cmd) {
      meta.subcommand = "validate-plan";
      meta.seed = vp_seed;
      meta.has_seed = true;
      meta.effective_config = vplan_cmd->config_to_str();
      return run_validate_plan(vp_scores, vp_out, vp_n, vp_seed, meta);
    }
    if (*vapply_cmd) {
      meta.subcommand = "validate-apply";
      meta.effective_config = vapply_cmd->config_to_str();
      return run_validate_apply(va_sheet, va_scores, va_out, meta);
    }
    if (*prefs_cmd) {
      meta.subcommand = "prefs";
      meta.effective_config = prefs_cmd->config_to_str();
      return run_prefs(pf_ratings, pf_out, meta);
    }
    if (*report_cmd) {
      meta.subcommand = "report";
      meta.effective_config = report_cmd->config_to_str();
      return run_report(rp_scores, rp_validation, rp_prefs, rp_verbs, rp_samples, rp_out, meta);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
