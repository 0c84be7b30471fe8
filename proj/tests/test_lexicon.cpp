#include "spellbench/lexicon.hpp"

#include "doctest.h"

using namespace spellbench;

TEST_CASE("ingest_lexicon") {
  SUBCASE("plain row") {
    const auto r = ingest_lexicon("elephant\ten\tNoun\n");
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].headword == "elephant");
    CHECK(r.entries[0].language_code == "en");
    CHECK(r.entries[0].pos_tags == std::set<std::string>{"Noun"});
  }
  SUBCASE("duplicates merge pos tags") {
    const auto r = ingest_lexicon("run\ten\tNoun\nrun\ten\tVerb\n");
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].pos_tags == std::set<std::string>{"Noun", "Verb"});
  }
  SUBCASE("same headword in two languages stays separate") {
    const auto r = ingest_lexicon("chat\ten\nchat\tfr\n");
    CHECK(r.entries.size() == 2);
  }
  SUBCASE("empty stream") { CHECK(ingest_lexicon("").entries.empty()); }
  SUBCASE("pos column optional, multi-valued") {
    const auto r = ingest_lexicon("set\ten\nrun\ten\tNoun|Verb|Adjective\n");
    CHECK(r.entries[0].pos_tags.empty());
    CHECK(r.entries[1].pos_tags.size() == 3);
  }
  SUBCASE("malformed rows are tallied") {
    std::string tsv = "onlyonecolumn\n";
    for (int i = 0; i < 10; ++i) tsv += "word" + std::to_string(i) + "\ten\n";
    const auto r = ingest_lexicon(tsv);  // 1 of 11 malformed: under the 10% bar
    CHECK(r.rows_malformed == 1);
    CHECK(r.entries.size() == 10);
  }
  SUBCASE("more than 10% malformed is a hard failure") {
    CHECK_THROWS_AS(ingest_lexicon("a\ten\nbroken-row\n"), ParseError);
    CHECK_THROWS_AS(ingest_lexicon("a\ten\tNoun\textra\tcolumns\n"), ParseError);
  }
}

TEST_CASE("exclusion rules in fixed order") {
  auto entry = [](std::string w, std::set<std::string> tags = {}) {
    return LexiconEntry{std::move(w), "en", std::move(tags)};
  };
  SUBCASE("whitespace") {
    CHECK(exclusion_reason_for(entry("ice cream")) == std::string(kReasonWhitespace));
    CHECK(exclusion_reason_for(entry("tab\there")) == std::string(kReasonWhitespace));
    CHECK(exclusion_reason_for(entry("nbsp\xC2\xA0x")) == std::string(kReasonWhitespace));
  }
  SUBCASE("all punctuation or symbol") {
    CHECK(exclusion_reason_for(entry("!!!")) == std::string(kReasonAllPunctSymbol));
    CHECK(exclusion_reason_for(entry("+-$")) == std::string(kReasonAllPunctSymbol));
    CHECK(exclusion_reason_for(entry("\xE2\x80\x94")) == std::string(kReasonAllPunctSymbol));
  }
  SUBCASE("length over 30 scalar values") {
    CHECK(exclusion_reason_for(entry(std::string(31, 'a'))) == std::string(kReasonTooLong));
    CHECK(exclusion_reason_for(entry(std::string(30, 'a'))) == nullptr);
    // 31 Hangul syllables are 31 scalars even though they are 93 bytes.
    std::string hangul;
    for (int i = 0; i < 31; ++i) hangul += "\xEA\xB0\x80";
    CHECK(exclusion_reason_for(entry(hangul)) == std::string(kReasonTooLong));
    std::string hangul30;
    for (int i = 0; i < 30; ++i) hangul30 += "\xEA\xB0\x80";
    CHECK(exclusion_reason_for(entry(hangul30)) == nullptr);
  }
  SUBCASE("proverb tag") {
    CHECK(exclusion_reason_for(entry("stitch-in-time", {"Proverb"})) == std::string(kReasonProverb));
    CHECK(exclusion_reason_for(entry("run", {"Noun", "Proverb"})) == std::string(kReasonProverb));
    CHECK(exclusion_reason_for(entry("run", {"Noun", "Verb"})) == nullptr);
  }
  SUBCASE("first matching rule wins") {
    // Whitespace beats all-punct, all-punct beats length.
    CHECK(exclusion_reason_for(entry("! !")) == std::string(kReasonWhitespace));
    CHECK(exclusion_reason_for(entry(std::string(40, '!'))) == std::string(kReasonAllPunctSymbol));
    CHECK(exclusion_reason_for(entry(std::string(31, 'a'), {"Proverb"})) == std::string(kReasonTooLong));
  }
  SUBCASE("kept entries") {
    CHECK(exclusion_reason_for(entry("elephant", {"Noun"})) == nullptr);
    CHECK(exclusion_reason_for(entry("don't")) == nullptr);
    CHECK(exclusion_reason_for(entry("0-6-2")) == nullptr);  // digits are not P/S
    CHECK(exclusion_reason_for(entry("a")) == nullptr);
  }
}

TEST_CASE("filter_entries report balances and is idempotent") {
  std::vector<LexiconEntry> entries;
  entries.push_back({"elephant", "en", {"Noun"}});
  entries.push_back({"ice cream", "en", {}});
  entries.push_back({"!!!", "en", {}});
  entries.push_back({std::string(31, 'a'), "en", {}});
  entries.push_back({"penny-wise", "en", {"Proverb"}});
  entries.push_back({"dog", "en", {"Noun"}});
  const FilterResult r = filter_entries(entries);
  CHECK(r.kept.size() == 2);
  CHECK(r.report.total_in == 6);
  CHECK(r.report.total_kept == 2);
  std::uint64_t excluded_sum = 0;
  for (const auto& [reason, n] : r.report.excluded_by_reason) excluded_sum += n;
  CHECK(r.report.total_in == r.report.total_kept + excluded_sum);
  SUBCASE("every excluded entry violates its recorded reason") {
    for (const LexiconEntry& e : r.excluded) CHECK(exclusion_reason_for(e) == e.exclusion_reason);
  }
  SUBCASE("idempotent") {
    const FilterResult again = filter_entries(r.kept);
    CHECK(again.kept.size() == r.kept.size());
    CHECK(again.excluded.empty());
  }
}

TEST_CASE("kept lexicon TSV round trip") {
  std::vector<LexiconEntry> kept = {{"b", "en", {}}, {"a", "en", {}}};
  const std::string tsv = kept_lexicon_to_tsv(kept);
  CHECK(tsv == "b\na\n");
  CHECK(kept_lexicon_from_tsv(tsv) == std::vector<std::string>{"b", "a"});
}
