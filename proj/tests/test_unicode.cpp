#include "spellbench/unicode.hpp"

#include "doctest.h"

using namespace spellbench;

TEST_CASE("whitespace covers the usual suspects") {
  CHECK(uni::is_whitespace(U' '));
  CHECK(uni::is_whitespace(U'\t'));
  CHECK(uni::is_whitespace(U'\n'));
  CHECK(uni::is_whitespace(0x00A0));  // NBSP
  CHECK(uni::is_whitespace(0x3000));  // ideographic space
  CHECK_FALSE(uni::is_whitespace(U'a'));
  CHECK_FALSE(uni::is_whitespace(0x200B));  // ZWSP has no White_Space property
  CHECK_FALSE(uni::is_whitespace(0x001C));  // file separator, Cc
}

TEST_CASE("punctuation/symbol category lookup") {
  CHECK(uni::is_punct_or_symbol(U'!'));
  CHECK(uni::is_punct_or_symbol(U'$'));
  CHECK(uni::is_punct_or_symbol(U'+'));   // Sm
  CHECK(uni::is_punct_or_symbol(0x2014)); // em dash, Pd
  CHECK(uni::is_punct_or_symbol(0x20AC)); // euro sign, Sc
  CHECK_FALSE(uni::is_punct_or_symbol(U'a'));
  CHECK_FALSE(uni::is_punct_or_symbol(U'7'));
  CHECK_FALSE(uni::is_punct_or_symbol(0xAC00));  // Hangul syllable
  CHECK(uni::all_punct_or_symbol("!!!"));
  CHECK(uni::all_punct_or_symbol("?$+"));
  CHECK_FALSE(uni::all_punct_or_symbol("a!"));
}

TEST_CASE("case folding") {
  CHECK(uni::case_fold("STOPPING") == "stopping");
  CHECK(uni::case_fold("Dog") == "dog");
  CHECK(uni::case_fold("\xC3\x89") == "\xC3\xA9");  // E acute
  CHECK(uni::case_fold("\xCE\xA3") == "\xCF\x83");  // Greek Sigma -> sigma
  SUBCASE("idempotent") {
    const std::string once = uni::case_fold("KILOPASCALS \xC3\x89\xCE\xA3");
    CHECK(uni::case_fold(once) == once);
  }
}

TEST_CASE("utf-8 round trip and strictness") {
  const std::string text = "caf\xC3\xA9 \xE2\x82\xAC \xF0\x9F\x98\x80";
  CHECK(uni::from_scalars(uni::to_scalars(text)) == text);
  CHECK(uni::scalar_length(text) == 7);
  CHECK_THROWS_AS(uni::to_scalars("\xFF"), ParseError);
  CHECK_THROWS_AS(uni::to_scalars("\xC3"), ParseError);          // truncated
  CHECK_THROWS_AS(uni::to_scalars("\xC0\xAF"), ParseError);      // overlong
  CHECK_THROWS_AS(uni::to_scalars("\xED\xA0\x80"), ParseError);  // surrogate
  bool bad = false;
  const auto lossy = uni::to_scalars_lossy("a\xFF" "b", &bad);
  CHECK(bad);
  REQUIRE(lossy.size() == 3);
  CHECK(lossy[1] == uni::kReplacement);
}

TEST_CASE("trim strips unicode whitespace") {
  CHECK(uni::trim("  stop  ") == "stop");
  CHECK(uni::trim("\xC2\xA0stop\xE3\x80\x80") == "stop");  // NBSP / ideographic space
  CHECK(uni::trim("") == "");
  CHECK(uni::trim("  ") == "");
}
