#include "spellbench/prompts.hpp"

#include <cstdlib>
#include <filesystem>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace spellbench;

namespace {

std::map<FrequencyBucket, std::vector<std::string>> eval_words_fixture(std::size_t per_bucket) {
  std::map<FrequencyBucket, std::vector<std::string>> out;
  for (std::size_t bi = 0; bi < kAllBuckets.size(); ++bi)
    out[kAllBuckets[bi]] = fixtures::make_words(per_bucket, "b" + std::to_string(bi) + "w");
  return out;
}

}  // namespace

TEST_CASE("spelling prompt template") {
  CHECK(std::string(kDefaultSpellingTemplate) == "A sign with the word \"{word}\" written on it.");
  const auto prompts = gen_spelling_prompts(eval_words_fixture(120), 100, kDefaultSpellingTemplate, 5);
  CHECK(prompts.size() == 500);
  SUBCASE("substitution and record fields") {
    std::set<std::string> ids;
    for (const auto& p : prompts) {
      REQUIRE(p.target_text.has_value());
      CHECK(p.prompt_text == "A sign with the word \"" + *p.target_text + "\" written on it.");
      CHECK(p.bucket.has_value());
      CHECK(p.kind == PromptKind::Spelling);
      ids.insert(p.prompt_id);
    }
    CHECK(ids.size() == 500);
  }
  SUBCASE("quoted-span extraction recovers the target") {
    for (const auto& p : prompts) CHECK(extract_quoted_target(p.prompt_text) == p.target_text);
  }
  SUBCASE("per-bucket draws are disjoint and reproducible") {
    const auto again = gen_spelling_prompts(eval_words_fixture(120), 100, kDefaultSpellingTemplate, 5);
    REQUIRE(again.size() == prompts.size());
    for (std::size_t i = 0; i < prompts.size(); ++i) CHECK(again[i].prompt_text == prompts[i].prompt_text);
    const auto other = gen_spelling_prompts(eval_words_fixture(120), 100, kDefaultSpellingTemplate, 6);
    bool any_diff = false;
    for (std::size_t i = 0; i < prompts.size(); ++i)
      any_diff = any_diff || other[i].prompt_text != prompts[i].prompt_text;
    CHECK(any_diff);
  }
}

TEST_CASE("gen_spelling_prompts edge cases") {
  SUBCASE("kilopascals renders the documented prompt") {
    std::map<FrequencyBucket, std::vector<std::string>> words;
    for (FrequencyBucket b : kAllBuckets) words[b] = {"kilopascals"};
    const auto prompts = gen_spelling_prompts(words, 1, kDefaultSpellingTemplate, 0);
    CHECK(prompts.size() == 5);
    CHECK(prompts[0].prompt_text == "A sign with the word \"kilopascals\" written on it.");
  }
  SUBCASE("template without placeholder is a config error") {
    CHECK_THROWS_AS(gen_spelling_prompts(eval_words_fixture(10), 1, "A sign.", 0), ConfigError);
  }
  SUBCASE("short bucket is a contract violation") {
    CHECK_THROWS_AS(gen_spelling_prompts(eval_words_fixture(10), 11, kDefaultSpellingTemplate, 0),
                    ContractError);
  }
}

TEST_CASE("creative corpus") {
  const auto prompts = load_creative_prompts();
  REQUIRE(prompts.size() == 175);
  SUBCASE("length class histogram") {
    std::map<LengthClass, int> hist;
    for (const auto& p : prompts) {
      REQUIRE(p.length_class.has_value());
      ++hist[*p.length_class];
    }
    CHECK(hist[LengthClass::OneLetter] == 10);
    CHECK(hist[LengthClass::OneWord] == 50);
    CHECK(hist[LengthClass::TwoWords] == 25);
    CHECK(hist[LengthClass::ThreePlus] == 90);
  }
  SUBCASE("known targets") {
    std::map<std::string, std::optional<std::string>> expectations = {
        {"The word \"exquisite\" written in modern calligraphy.", std::string("exquisite")},
        {"Studio shot of book shelf in the shape of letter G, museum quality, white background.",
         std::nullopt},
        {"A logo for the company EcoGrow, where the letters look like plants.", std::nullopt},
    };
    int hit = 0;
    for (const auto& p : prompts) {
      auto it = expectations.find(p.prompt_text);
      if (it != expectations.end()) {
        CHECK(p.target_text == it->second);
        ++hit;
      }
    }
    CHECK(hit == 3);
  }
  SUBCASE("single-quoted titles are extracted when no double quotes exist") {
    int checked = 0;
    for (const auto& p : prompts) {
      if (p.prompt_text.find("Elusive Interludes") != std::string::npos) {
        CHECK(p.target_text == std::string("Elusive Interludes"));
        ++checked;
      }
      if (p.prompt_text.find("Diffusion Models") != std::string::npos) {
        CHECK(p.target_text == std::string("Diffusion Models"));
        ++checked;
      }
      if (p.prompt_text.find("antique book") != std::string::npos) {
        CHECK(p.target_text == std::string("knowledge is power"));
        ++checked;
      }
    }
    CHECK(checked == 3);
  }
  SUBCASE("ids are unique and stable under reload") {
    std::set<std::string> ids;
    for (const auto& p : prompts) ids.insert(p.prompt_id);
    CHECK(ids.size() == 175);
    const auto again = load_creative_prompts();
    for (std::size_t i = 0; i < prompts.size(); ++i) CHECK(again[i].prompt_id == prompts[i].prompt_id);
  }
  SUBCASE("checksum mismatch is a hard error") {
    CHECK_THROWS_AS(load_creative_prompts_from_text("tampered corpus\n"), Error);
    CHECK_THROWS_AS(
        load_creative_prompts_from_text(std::string(detail::kCreativeCorpusText) + "extra line\n"), Error);
  }
  SUBCASE("data asset matches the embedded corpus") {
    const char* data_dir = std::getenv("SPELLBENCH_DATA_DIR");
    REQUIRE(data_dir != nullptr);
    const std::string file_text = read_file(std::filesystem::path(data_dir) / "drawtext_creative_prompts.txt");
    CHECK(file_text == detail::kCreativeCorpusText);
    const std::string pinned =
        split_lines(read_file(std::filesystem::path(data_dir) / "drawtext_creative_prompts.txt.sha256"))[0];
    CHECK(pinned == detail::kCreativeCorpusSha256);
    CHECK(sha256_hex(file_text) == pinned);
  }
}

TEST_CASE("extract_quoted_target rules") {
  CHECK(extract_quoted_target("no quotes here") == std::nullopt);
  CHECK(extract_quoted_target("the word \"dog\" on a sign") == std::string("dog"));
  CHECK(extract_quoted_target("\"a\" and \"longer\" spans") == std::string("longer"));
  CHECK(extract_quoted_target("don't pair word-internal apostrophes") == std::nullopt);
  CHECK(extract_quoted_target("a 'quoted title' here") == std::string("quoted title"));
  CHECK(extract_quoted_target("double \"wins\" over 'single'") == std::string("wins"));
  CHECK(extract_quoted_target("keeps \"that's bananas!\" intact") == std::string("that's bananas!"));
  CHECK(extract_quoted_target("\xE2\x80\x98smart open' with ascii close") == std::string("smart open"));
}

TEST_CASE("manifest construction") {
  SUBCASE("cardinality") {
    const auto prompts = gen_spelling_prompts(eval_words_fixture(120), 100, kDefaultSpellingTemplate, 5);
    const Manifest m = build_manifest(prompts, 4, 5);
    CHECK(m.rows.size() == 2000);
    std::set<std::pair<std::string, int>> keys;
    for (const auto& row : m.rows) keys.insert({row.prompt_id, row.sample_index});
    CHECK(keys.size() == 2000);
  }
  SUBCASE("single prompt, single sample") {
    PromptRecord p;
    p.prompt_id = "sp-000-abc";
    p.prompt_text = "A sign with the word \"x\" written on it.";
    p.target_text = "x";
    const Manifest m = build_manifest({p}, 1);
    REQUIRE(m.rows.size() == 1);
    CHECK(m.rows[0].image_path == "images/sp-000-abc/0.png");
  }
  SUBCASE("emit is byte-identical and parses back") {
    namespace fs = std::filesystem;
    const auto prompts = load_creative_prompts();
    const Manifest m = build_manifest(prompts, 2, 0);
    const std::string once = manifest_to_jsonl(m);
    CHECK(manifest_to_jsonl(m) == once);
    const auto rows = parse_manifest_jsonl(once);
    REQUIRE(rows.size() == 350);
    CHECK(rows[0].prompt_id == m.rows[0].prompt_id);
    // Rows are ordered by (prompt_id, sample_index).
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const bool ordered = rows[i - 1].prompt_id < rows[i].prompt_id ||
                           (rows[i - 1].prompt_id == rows[i].prompt_id &&
                            rows[i - 1].sample_index < rows[i].sample_index);
      CHECK(ordered);
    }
  }
  SUBCASE("duplicate prompt ids rejected") {
    PromptRecord p;
    p.prompt_id = "sp-000-abc";
    p.prompt_text = "x";
    CHECK_THROWS_AS(build_manifest({p, p}, 1), ContractError);
  }
  SUBCASE("bad sample count rejected") {
    CHECK_THROWS_AS(build_manifest({}, 0), ConfigError);
  }
}
