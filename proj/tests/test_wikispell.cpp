#include "spellbench/wikispell.hpp"

#include <filesystem>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace spellbench;

TEST_CASE("to_spelling") {
  CHECK(to_spelling("elephant") == "e l e p h a n t");
  CHECK(to_spelling("a") == "a");
  CHECK(to_spelling("0-6-2") == "0 - 6 - 2");
  CHECK(to_spelling("caf\xC3\xA9") == "c a f \xC3\xA9");
  CHECK_THROWS_AS(to_spelling(""), ContractError);
  CHECK_THROWS_AS(to_spelling("ice cream"), ContractError);
  CHECK_THROWS_AS(to_spelling("nb\xC2\xA0sp"), ContractError);
}

TEST_CASE("to_spelling space-stripping inverts on random unicode words") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string word;
    const std::size_t len = 1 + rng.below(12);
    std::size_t scalars = 0;
    while (scalars < len) {
      char32_t cp = 0;
      switch (rng.below(4)) {
        case 0: cp = static_cast<char32_t>(0x21 + rng.below(0x5E)); break;        // ASCII graphic
        case 1: cp = static_cast<char32_t>(0xA1 + rng.below(0x500)); break;       // Latin ext & friends
        case 2: cp = static_cast<char32_t>(0x4E00 + rng.below(0x1000)); break;    // CJK
        default: cp = static_cast<char32_t>(0x10000 + rng.below(0x100)); break;   // beyond BMP
      }
      if (uni::is_whitespace(cp)) continue;
      uni::append_scalar(word, cp);
      ++scalars;
    }
    const std::string spelled = to_spelling(word);
    CHECK(uni::scalar_length(spelled) == 2 * scalars - 1);
    std::string stripped;
    for (char c : spelled)
      if (c != ' ') stripped.push_back(c);
    REQUIRE(stripped == word);
  }
}

namespace {

// Band sizes from the closed form: the number of ranks below the x% mark
// is ceil(N*x/100).
std::uint64_t ranks_below(std::uint64_t n, std::uint64_t percent) {
  return (n * percent + 99) / 100;
}

std::optional<FrequencyBucket> oracle_bucket(std::uint64_t rank, std::uint64_t n) {
  if (rank <= ranks_below(n, 1)) return FrequencyBucket::Top1;
  if (rank <= ranks_below(n, 10)) return FrequencyBucket::P1to10;
  if (rank <= ranks_below(n, 20)) return FrequencyBucket::P10to20;
  if (rank <= ranks_below(n, 30)) return FrequencyBucket::P20to30;
  if (rank <= ranks_below(n, 50)) return std::nullopt;
  return FrequencyBucket::Bottom50;
}

}  // namespace

TEST_CASE("assign_buckets rank bands") {
  SUBCASE("N=1000 with distinct frequencies") {
    auto words = fixtures::make_words(1000);
    FrequencyTable table;
    table.language_code = "en";
    for (std::size_t i = 0; i < 1000; ++i) table.entries[words[i]] = 1001 - i;
    const BucketedLexicon b = assign_buckets(words, table);
    auto sizes = b.bucket_sizes();
    CHECK(sizes[FrequencyBucket::Top1] == 10);
    CHECK(sizes[FrequencyBucket::P1to10] == 90);
    CHECK(sizes[FrequencyBucket::P10to20] == 100);
    CHECK(sizes[FrequencyBucket::P20to30] == 100);
    CHECK(sizes[FrequencyBucket::Bottom50] == 500);
    CHECK(b.unbucketed_count() == 200);
    // Rank 1..10 = Top1 boundary check.
    CHECK(b.rows[9].bucket == FrequencyBucket::Top1);
    CHECK(b.rows[10].bucket == FrequencyBucket::P1to10);
    CHECK(b.rows[500].bucket == FrequencyBucket::Bottom50);
    CHECK_FALSE(b.rows[499].bucket.has_value());
  }
  SUBCASE("absent word gets frequency zero and lands in Bottom50") {
    auto words = fixtures::make_words(100);
    words.push_back("zz-never-seen");
    FrequencyTable table;
    for (std::size_t i = 0; i < 100; ++i) table.entries[words[i]] = 100 - i;
    const BucketedLexicon b = assign_buckets(words, table);
    for (const BucketedRow& row : b.rows)
      if (row.word == "zz-never-seen") {
        CHECK(row.frequency == 0);
        CHECK(row.bucket == FrequencyBucket::Bottom50);
      }
  }
  SUBCASE("equal frequencies break ties lexicographically") {
    FrequencyTable table;
    table.entries["beta"] = 5;
    table.entries["alpha"] = 5;
    const BucketedLexicon b = assign_buckets({"beta", "alpha"}, table);
    CHECK(b.rows[0].word == "alpha");
    CHECK(b.rows[0].rank == 1);
    CHECK(b.rows[1].word == "beta");
  }
  SUBCASE("empty lexicon rejected") {
    CHECK_THROWS_AS(assign_buckets({}, FrequencyTable{}), ContractError);
  }
}

TEST_CASE("assign_buckets equals the brute-force oracle on random lexicons") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(200);
    auto words = fixtures::make_words(n);
    FrequencyTable table;
    for (const auto& w : words)
      if (rng.below(100) < 70) table.entries[w] = 1 + rng.below(50);  // ties are common
    const BucketedLexicon b = assign_buckets(words, table);
    REQUIRE(b.rows.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(b.rows[i].rank == i + 1);
      CHECK(b.rows[i].bucket == oracle_bucket(i + 1, n));
      if (i > 0) {
        const bool order_ok = b.rows[i - 1].frequency > b.rows[i].frequency ||
                              (b.rows[i - 1].frequency == b.rows[i].frequency &&
                               b.rows[i - 1].word < b.rows[i].word);
        CHECK(order_ok);
      }
    }
  }
}

namespace {

WikiSpellDataset small_dataset(std::uint64_t seed) {
  // 400 words, frequencies chosen so every bucket exists and Bottom50 has
  // headroom for the train draw.
  auto words = fixtures::make_words(400);
  FrequencyTable table;
  for (std::size_t i = 0; i < 180; ++i) table.entries[words[i]] = 400 - i;
  SamplingSpec spec;
  spec.seed = seed;
  spec.eval_per_bucket = 10;
  spec.train_uniform = 50;
  spec.train_weighted = 50;
  return build_wikispell(words, table, spec);
}

}  // namespace

TEST_CASE("sample_eval_sets") {
  auto words = fixtures::make_words(2000);
  FrequencyTable table;
  for (std::size_t i = 0; i < 2000; ++i) table.entries[words[i]] = 2001 - i;
  const BucketedLexicon b = assign_buckets(words, table);
  SUBCASE("exhaustion: dev and test cover a 2k-word bucket exactly") {
    SamplingSpec spec;
    spec.seed = 3;
    spec.eval_per_bucket = 500;
    const EvalSets sets = sample_eval_sets(b, spec);
    const auto& dev = sets.dev.at(FrequencyBucket::Bottom50);
    const auto& test = sets.test.at(FrequencyBucket::Bottom50);
    CHECK(dev.size() == 500);
    CHECK(test.size() == 500);
    std::set<std::string> both(dev.begin(), dev.end());
    both.insert(test.begin(), test.end());
    CHECK(both.size() == 1000);  // disjoint halves of the whole bucket
  }
  SUBCASE("undersized buckets shrink with a warning") {
    SamplingSpec spec;
    spec.seed = 3;
    spec.eval_per_bucket = 50;  // Top1 bucket only has 20 words
    const EvalSets sets = sample_eval_sets(b, spec);
    CHECK(sets.dev.at(FrequencyBucket::Top1).size() == 10);
    CHECK(sets.test.at(FrequencyBucket::Top1).size() == 10);
    CHECK_FALSE(sets.warnings.empty());
  }
  SUBCASE("same seed is reproducible, different seeds differ") {
    SamplingSpec spec;
    spec.seed = 3;
    spec.eval_per_bucket = 10;
    const EvalSets a = sample_eval_sets(b, spec);
    const EvalSets b2 = sample_eval_sets(b, spec);
    CHECK(a.dev == b2.dev);
    CHECK(a.test == b2.test);
    spec.seed = 4;
    const EvalSets c = sample_eval_sets(b, spec);
    CHECK(a.test != c.test);
  }
}

TEST_CASE("sample_train_set holdout and pool rules") {
  const WikiSpellDataset ds = small_dataset(11);
  SUBCASE("sizes") {
    CHECK(ds.train.uniform_part.size() == 50);
    CHECK(ds.train.weighted_part.size() == 50);
  }
  SUBCASE("train is disjoint from eval") {
    const auto held = ds.eval.all_words();
    for (const auto& w : ds.train.uniform_part) CHECK(held.count(w) == 0);
    for (const auto& w : ds.train.weighted_part) CHECK(held.count(w) == 0);
  }
  SUBCASE("train words are distinct") {
    std::set<std::string> all(ds.train.uniform_part.begin(), ds.train.uniform_part.end());
    all.insert(ds.train.weighted_part.begin(), ds.train.weighted_part.end());
    CHECK(all.size() == 100);
  }
  SUBCASE("weighted part never contains zero-frequency words") {
    // Words at index >= 180 have frequency zero in the fixture.
    for (const auto& w : ds.train.weighted_part) CHECK(w < "w000180");
  }
  SUBCASE("insufficient pool is a hard error naming it") {
    auto words = fixtures::make_words(40);
    FrequencyTable table;
    for (std::size_t i = 0; i < 20; ++i) table.entries[words[i]] = 20 - i;
    SamplingSpec spec;
    spec.seed = 1;
    spec.eval_per_bucket = 2;
    spec.train_uniform = 1000;
    spec.train_weighted = 5;
    try {
      build_wikispell(words, table, spec);
      FAIL("expected ContractError");
    } catch (const ContractError& e) {
      CHECK(std::string(e.what()).find("uniform training pool") != std::string::npos);
    }
  }
}

TEST_CASE("weighted draw follows frequencies (monte carlo)") {
  // First draw over weights {100, 1, 1} should pick index 0 with
  // probability 100/102 = 0.9804.
  int first_hits = 0;
  const int trials = 10000;
  for (int trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(static_cast<std::uint64_t>(trial) + 1);
    WeightedSampler sampler({100, 1, 1});
    if (sampler.draw(rng) == 0) ++first_hits;
  }
  const double rate = static_cast<double>(first_hits) / trials;
  CHECK(rate > 0.9804 - 0.015);
  CHECK(rate < 0.9804 + 0.015);
}

TEST_CASE("exact pool exhaustion takes the whole pool") {
  // Bottom50 pool minus eval is exactly the uniform request.
  auto words = fixtures::make_words(200);
  FrequencyTable table;
  for (std::size_t i = 0; i < 100; ++i) table.entries[words[i]] = 200 - i;
  SamplingSpec spec;
  spec.seed = 9;
  spec.eval_per_bucket = 5;
  spec.train_uniform = 90;  // bottom50 has 100 words, eval takes 10
  spec.train_weighted = 10;
  const WikiSpellDataset ds = build_wikispell(words, table, spec);
  std::set<std::string> uniform(ds.train.uniform_part.begin(), ds.train.uniform_part.end());
  CHECK(uniform.size() == 90);
  const auto held = ds.eval.all_words();
  std::size_t expected = 0;
  for (const auto& row : assign_buckets(words, table).rows)
    if (row.bucket == FrequencyBucket::Bottom50 && held.count(row.word) == 0) {
      CHECK(uniform.count(row.word) == 1);
      ++expected;
    }
  CHECK(expected == 90);
}

TEST_CASE("emit_dataset is deterministic and sorted") {
  namespace fs = std::filesystem;
  const fs::path dir1 = fs::temp_directory_path() / "sb_ws_emit1";
  const fs::path dir2 = fs::temp_directory_path() / "sb_ws_emit2";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  const WikiSpellDataset ds = small_dataset(21);
  emit_dataset(ds, dir1);
  emit_dataset(ds, dir2);
  for (const char* name : {"train.tsv", "dev.tsv", "test.tsv", "metadata.json"})
    CHECK(read_file(dir1 / name) == read_file(dir2 / name));
  SUBCASE("rows are word-sorted and spelled") {
    const auto lines = split_lines(read_file(dir1 / "train.tsv"));
    CHECK(lines.size() == 100);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const auto cols = split_on(lines[i], '\t');
      REQUIRE(cols.size() == 2);
      CHECK(cols[1] == to_spelling(cols[0]));
      if (i > 0) CHECK(split_on(lines[i - 1], '\t')[0] < cols[0]);
    }
  }
  SUBCASE("eval words round-trip through metadata") {
    const auto test_words = load_eval_words(dir1, "test");
    for (FrequencyBucket b : kAllBuckets) {
      auto expected = ds.eval.test.at(b);
      std::sort(expected.begin(), expected.end());
      CHECK(test_words.at(b) == expected);
    }
  }
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}
