#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "spellbench/corpus_stats.hpp"
#include "spellbench/error.hpp"
#include "spellbench/io.hpp"
#include "spellbench/rng.hpp"
#include "spellbench/unicode.hpp"
#include "spellbench/version.hpp"

#include "json.hpp"

namespace spellbench {

// Rank-percentile bands over the lexicon ordered by corpus frequency.
// Words in [30%, 50%) belong to no bucket and are unused.
enum class FrequencyBucket { Top1, P1to10, P10to20, P20to30, Bottom50 };

inline constexpr std::array<FrequencyBucket, 5> kAllBuckets = {
    FrequencyBucket::Top1, FrequencyBucket::P1to10, FrequencyBucket::P10to20,
    FrequencyBucket::P20to30, FrequencyBucket::Bottom50};

inline const char* to_string(FrequencyBucket b) {
  switch (b) {
    case FrequencyBucket::Top1: return "top1";
    case FrequencyBucket::P1to10: return "p1to10";
    case FrequencyBucket::P10to20: return "p10to20";
    case FrequencyBucket::P20to30: return "p20to30";
    case FrequencyBucket::Bottom50: return "bottom50";
  }
  return "?";
}

inline const char* bucket_label(FrequencyBucket b) {
  switch (b) {
    case FrequencyBucket::Top1: return "Top 1%";
    case FrequencyBucket::P1to10: return "1-10%";
    case FrequencyBucket::P10to20: return "10-20%";
    case FrequencyBucket::P20to30: return "20-30%";
    case FrequencyBucket::Bottom50: return "Bottom 50%";
  }
  return "?";
}

inline std::optional<FrequencyBucket> bucket_from_string(std::string_view s) {
  for (FrequencyBucket b : kAllBuckets)
    if (s == to_string(b)) return b;
  return std::nullopt;
}

// Unicode scalar values joined by single ASCII spaces; removing the
// spaces recovers the word exactly.
inline std::string to_spelling(std::string_view word) {
  if (word.empty()) throw ContractError("to_spelling: word is empty");
  std::string out;
  bool first = true;
  for (char32_t cp : uni::to_scalars(word)) {
    if (uni::is_whitespace(cp)) throw ContractError("to_spelling: word contains whitespace");
    if (!first) out.push_back(' ');
    uni::append_scalar(out, cp);
    first = false;
  }
  return out;
}

struct BucketedRow {
  std::string word;
  std::uint64_t frequency = 0;
  std::uint64_t rank = 0;  // 1-based
  std::optional<FrequencyBucket> bucket;
};

struct BucketedLexicon {
  std::vector<BucketedRow> rows;  // in rank order

  std::vector<std::string> words_in(FrequencyBucket b) const {
    std::vector<std::string> out;
    for (const BucketedRow& row : rows)
      if (row.bucket == b) out.push_back(row.word);
    return out;
  }

  std::map<FrequencyBucket, std::uint64_t> bucket_sizes() const {
    std::map<FrequencyBucket, std::uint64_t> sizes;
    for (FrequencyBucket b : kAllBuckets) sizes[b] = 0;
    for (const BucketedRow& row : rows)
      if (row.bucket) ++sizes[*row.bucket];
    return sizes;
  }

  std::uint64_t unbucketed_count() const {
    std::uint64_t n = 0;
    for (const BucketedRow& row : rows)
      if (!row.bucket) ++n;
    return n;
  }
};

// The band containing percentile position (rank-1)/N, in integer
// arithmetic (x = 100*(rank-1) compared against multiples of N).
inline std::optional<FrequencyBucket> bucket_for_rank(std::uint64_t rank, std::uint64_t total) {
  const std::uint64_t x = 100 * (rank - 1);
  if (x < total) return FrequencyBucket::Top1;
  if (x < 10 * total) return FrequencyBucket::P1to10;
  if (x < 20 * total) return FrequencyBucket::P10to20;
  if (x < 30 * total) return FrequencyBucket::P20to30;
  if (x < 50 * total) return std::nullopt;
  return FrequencyBucket::Bottom50;
}

// Ranks the kept lexicon by (frequency desc, word asc in scalar-value
// order) and assigns percentile-band buckets. Words missing from the
// table count as frequency zero.
inline BucketedLexicon assign_buckets(const std::vector<std::string>& kept_words,
                                      const FrequencyTable& table) {
  if (kept_words.empty()) throw ContractError("assign_buckets: empty lexicon");
  BucketedLexicon out;
  out.rows.reserve(kept_words.size());
  for (const std::string& word : kept_words)
    out.rows.push_back(BucketedRow{word, table.count_of(word), 0, std::nullopt});
  // UTF-8 byte order coincides with scalar-value order.
  std::sort(out.rows.begin(), out.rows.end(), [](const BucketedRow& a, const BucketedRow& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.word < b.word;
  });
  const std::uint64_t total = out.rows.size();
  for (std::uint64_t i = 0; i < total; ++i) {
    out.rows[i].rank = i + 1;
    out.rows[i].bucket = bucket_for_rank(i + 1, total);
  }
  return out;
}

struct SamplingSpec {
  std::uint64_t seed = 0;
  std::uint64_t eval_per_bucket = 1000;
  std::uint64_t train_uniform = 5000;
  std::uint64_t train_weighted = 5000;

  void validate() const {
    if (eval_per_bucket == 0 || train_uniform == 0 || train_weighted == 0)
      throw ConfigError("sampling spec counts must be positive");
  }
};

struct EvalSets {
  // Per bucket, in draw order.
  std::map<FrequencyBucket, std::vector<std::string>> dev;
  std::map<FrequencyBucket, std::vector<std::string>> test;
  std::vector<std::string> warnings;

  std::set<std::string> all_words() const {
    std::set<std::string> words;
    for (const auto& [b, ws] : dev) words.insert(ws.begin(), ws.end());
    for (const auto& [b, ws] : test) words.insert(ws.begin(), ws.end());
    return words;
  }
};

namespace detail {
// Sub-stream labels, in documented draw order.
inline constexpr std::uint64_t kEvalStreamBase = 1;  // +0..4 per bucket
inline constexpr std::uint64_t kTrainUniformStream = 6;
inline constexpr std::uint64_t kTrainWeightedStream = 7;
}  // namespace detail

// Per bucket, draws 2*eval_per_bucket distinct words uniformly without
// replacement; the first half becomes test, the second half dev. Buckets
// smaller than the request shrink to floor(size/2) with a warning.
inline EvalSets sample_eval_sets(const BucketedLexicon& bucketed, const SamplingSpec& spec) {
  spec.validate();
  EvalSets sets;
  SplitMix64 master(spec.seed);
  for (std::size_t bi = 0; bi < kAllBuckets.size(); ++bi) {
    const FrequencyBucket bucket = kAllBuckets[bi];
    const std::vector<std::string> pool = bucketed.words_in(bucket);
    if (pool.size() < 2)
      throw ContractError(std::string("bucket ") + to_string(bucket) + " has fewer than 2 words");
    std::uint64_t k = spec.eval_per_bucket;
    if (pool.size() < 2 * k) {
      k = pool.size() / 2;
      sets.warnings.push_back(std::string("bucket ") + to_string(bucket) + " has " +
                              std::to_string(pool.size()) + " words; shrinking eval draw to " +
                              std::to_string(k) + " per split");
    }
    SplitMix64 rng = master.fork(detail::kEvalStreamBase + bi);
    const std::vector<std::size_t> picks = sample_indices(pool.size(), 2 * k, rng);
    auto& test = sets.test[bucket];
    auto& dev = sets.dev[bucket];
    for (std::uint64_t i = 0; i < k; ++i) test.push_back(pool[picks[i]]);
    for (std::uint64_t i = k; i < 2 * k; ++i) dev.push_back(pool[picks[i]]);
  }
  return sets;
}

struct TrainSet {
  std::vector<std::string> uniform_part;   // from Bottom50, in draw order
  std::vector<std::string> weighted_part;  // frequency-proportional, in draw order
};

// Training words: `train_uniform` drawn uniformly from Bottom50 minus the
// eval words, plus `train_weighted` drawn without replacement from all
// bucketed words minus eval and the uniform part, with probability
// proportional to frequency. Zero-frequency words carry zero weight in
// the second draw.
inline TrainSet sample_train_set(const BucketedLexicon& bucketed, const EvalSets& eval,
                                 const SamplingSpec& spec) {
  spec.validate();
  const std::set<std::string> held_out = eval.all_words();
  SplitMix64 master(spec.seed);
  TrainSet train;

  std::vector<std::string> bottom_pool;
  for (const BucketedRow& row : bucketed.rows)
    if (row.bucket == FrequencyBucket::Bottom50 && held_out.count(row.word) == 0)
      bottom_pool.push_back(row.word);
  if (bottom_pool.size() < spec.train_uniform)
    throw ContractError("uniform training pool (bottom50 minus eval) has " +
                        std::to_string(bottom_pool.size()) + " words; need " +
                        std::to_string(spec.train_uniform));
  {
    SplitMix64 rng = master.fork(detail::kTrainUniformStream);
    for (std::size_t i : sample_indices(bottom_pool.size(), spec.train_uniform, rng))
      train.uniform_part.push_back(bottom_pool[i]);
  }

  const std::set<std::string> uniform_set(train.uniform_part.begin(), train.uniform_part.end());
  std::vector<std::string> weighted_pool;
  std::vector<std::uint64_t> weights;
  std::uint64_t positive = 0;
  for (const BucketedRow& row : bucketed.rows) {
    if (!row.bucket || held_out.count(row.word) > 0 || uniform_set.count(row.word) > 0) continue;
    weighted_pool.push_back(row.word);
    weights.push_back(row.frequency);
    if (row.frequency > 0) ++positive;
  }
  if (positive < spec.train_weighted)
    throw ContractError("weighted training pool has only " + std::to_string(positive) +
                        " positive-frequency words; need " + std::to_string(spec.train_weighted));
  {
    SplitMix64 rng = master.fork(detail::kTrainWeightedStream);
    WeightedSampler sampler(weights);
    for (std::uint64_t i = 0; i < spec.train_weighted; ++i)
      train.weighted_part.push_back(weighted_pool[sampler.draw(rng)]);
  }
  return train;
}

enum class Split { Train, Dev, Test };

inline const char* to_string(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Dev: return "dev";
    case Split::Test: return "test";
  }
  return "?";
}

struct SpellingExample {
  std::string word;
  std::string spelling;
  std::optional<FrequencyBucket> bucket;
  Split split = Split::Train;
};

struct WikiSpellDataset {
  std::vector<SpellingExample> examples;
  EvalSets eval;
  TrainSet train;
  std::map<FrequencyBucket, std::uint64_t> bucket_sizes;
  std::uint64_t unbucketed = 0;
  SamplingSpec spec;
};

// Full pipeline: bucket the lexicon, draw eval sets, draw the training
// set, and collect one example per (word, split).
inline WikiSpellDataset build_wikispell(const std::vector<std::string>& kept_words,
                                        const FrequencyTable& table, const SamplingSpec& spec) {
  const BucketedLexicon bucketed = assign_buckets(kept_words, table);
  WikiSpellDataset ds;
  ds.spec = spec;
  ds.bucket_sizes = bucketed.bucket_sizes();
  ds.unbucketed = bucketed.unbucketed_count();
  ds.eval = sample_eval_sets(bucketed, spec);
  ds.train = sample_train_set(bucketed, ds.eval, spec);

  std::map<std::string, FrequencyBucket> bucket_of;
  for (const BucketedRow& row : bucketed.rows)
    if (row.bucket) bucket_of.emplace(row.word, *row.bucket);

  for (FrequencyBucket b : kAllBuckets) {
    for (const std::string& w : ds.eval.test.at(b))
      ds.examples.push_back(SpellingExample{w, to_spelling(w), b, Split::Test});
    for (const std::string& w : ds.eval.dev.at(b))
      ds.examples.push_back(SpellingExample{w, to_spelling(w), b, Split::Dev});
  }
  for (const std::string& w : ds.train.uniform_part)
    ds.examples.push_back(SpellingExample{w, to_spelling(w), bucket_of.at(w), Split::Train});
  for (const std::string& w : ds.train.weighted_part)
    ds.examples.push_back(SpellingExample{w, to_spelling(w), bucket_of.at(w), Split::Train});
  return ds;
}

// Writes train.tsv / dev.tsv / test.tsv (`word<TAB>spelling`, sorted by
// word) plus a metadata.json sidecar carrying the seed, counts, and the
// per-bucket eval words that downstream prompt generation consumes.
inline void emit_dataset(const WikiSpellDataset& ds, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (Split split : {Split::Train, Split::Dev, Split::Test}) {
    std::vector<const SpellingExample*> rows;
    for (const SpellingExample& ex : ds.examples)
      if (ex.split == split) rows.push_back(&ex);
    std::sort(rows.begin(), rows.end(),
              [](const SpellingExample* a, const SpellingExample* b) { return a->word < b->word; });
    std::string text;
    for (const SpellingExample* ex : rows) {
      text += ex->word;
      text += '\t';
      text += ex->spelling;
      text += '\n';
    }
    write_file(out_dir / (std::string(to_string(split)) + ".tsv"), text);
  }

  nlohmann::json meta;
  meta["seed"] = ds.spec.seed;
  meta["eval_per_bucket"] = ds.spec.eval_per_bucket;
  meta["train_uniform"] = ds.spec.train_uniform;
  meta["train_weighted"] = ds.spec.train_weighted;
  meta["toolkit_version"] = kVersion;
  meta["unbucketed_words"] = ds.unbucketed;
  for (FrequencyBucket b : kAllBuckets) {
    const char* name = to_string(b);
    meta["bucket_sizes"][name] = ds.bucket_sizes.at(b);
    auto dev_sorted = ds.eval.dev.at(b);
    auto test_sorted = ds.eval.test.at(b);
    std::sort(dev_sorted.begin(), dev_sorted.end());
    std::sort(test_sorted.begin(), test_sorted.end());
    meta["eval_words"]["dev"][name] = dev_sorted;
    meta["eval_words"]["test"][name] = test_sorted;
  }
  meta["counts"]["train"] = ds.train.uniform_part.size() + ds.train.weighted_part.size();
  std::uint64_t n_dev = 0, n_test = 0;
  for (FrequencyBucket b : kAllBuckets) {
    n_dev += ds.eval.dev.at(b).size();
    n_test += ds.eval.test.at(b).size();
  }
  meta["counts"]["dev"] = n_dev;
  meta["counts"]["test"] = n_test;
  meta["warnings"] = ds.eval.warnings;
  write_file(out_dir / "metadata.json", meta.dump(2) + "\n");
}

// Reads back the per-bucket eval words from a dataset directory.
inline std::map<FrequencyBucket, std::vector<std::string>> load_eval_words(
    const std::filesystem::path& dataset_dir, std::string_view split) {
  if (split != "dev" && split != "test") throw ConfigError("split must be dev or test");
  const nlohmann::json meta = nlohmann::json::parse(read_file(dataset_dir / "metadata.json"));
  std::map<FrequencyBucket, std::vector<std::string>> out;
  const auto& words = meta.at("eval_words").at(std::string(split));
  for (FrequencyBucket b : kAllBuckets)
    out[b] = words.at(to_string(b)).get<std::vector<std::string>>();
  return out;
}

}  // namespace spellbench
