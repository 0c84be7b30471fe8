#include "spellbench/scoring.hpp"

#include "doctest.h"

using namespace spellbench;

namespace {

std::vector<PreferenceRecord> make_records(int prompts, int raters,
                                           const std::function<PrefChoice(int, int)>& choose,
                                           PrefQuestion q = PrefQuestion::Fidelity) {
  std::vector<PreferenceRecord> records;
  for (int p = 0; p < prompts; ++p)
    for (int r = 0; r < raters; ++r)
      records.push_back({"pr-" + std::to_string(p), "text", q, "rater-" + std::to_string(r),
                         choose(p, r)});
  return records;
}

PrefChoice swap_choice(PrefChoice c) {
  if (c == PrefChoice::A) return PrefChoice::B;
  if (c == PrefChoice::B) return PrefChoice::A;
  return PrefChoice::Indifferent;
}

}  // namespace

TEST_CASE("aggregate_preferences endpoints") {
  SUBCASE("unanimous A is rate 1.0") {
    const auto report = aggregate_preferences(make_records(20, 25, [](int, int) { return PrefChoice::A; }));
    const PreferenceCell& cell = report.by_question.at("Fidelity");
    CHECK(cell.rate == 1.0);
    CHECK(cell.ci_hi == 1.0);
    CHECK(cell.n_prompts == 20);
    CHECK(cell.n_ratings == 500);
  }
  SUBCASE("a perfect split is rate 0.5") {
    const auto report = aggregate_preferences(
        make_records(20, 24, [](int, int r) { return r % 2 ? PrefChoice::A : PrefChoice::B; }));
    CHECK(report.by_question.at("Fidelity").rate == 0.5);
  }
  SUBCASE("indifferent gets half credit") {
    const auto report =
        aggregate_preferences(make_records(10, 10, [](int, int) { return PrefChoice::Indifferent; }));
    CHECK(report.by_question.at("Fidelity").rate == 0.5);
  }
}

TEST_CASE("label swap inverts the rate") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    auto records = make_records(30, 25, [&](int, int) {
      const auto roll = rng.below(10);
      return roll < 5 ? PrefChoice::A : roll < 8 ? PrefChoice::B : PrefChoice::Indifferent;
    });
    auto swapped = records;
    for (auto& rec : swapped) rec.choice = swap_choice(rec.choice);
    const double rate = aggregate_preferences(records).by_question.at("Fidelity").rate;
    const double inverse = aggregate_preferences(swapped).by_question.at("Fidelity").rate;
    CHECK(rate + inverse == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("per-category breakdown") {
  std::vector<PreferenceRecord> records;
  for (int p = 0; p < 10; ++p)
    for (int r = 0; r < 5; ++r) {
      records.push_back({"pr-" + std::to_string(p), p < 5 ? "text" : "color", PrefQuestion::Alignment,
                         "rater-" + std::to_string(r), p < 5 ? PrefChoice::A : PrefChoice::B});
    }
  const auto report = aggregate_preferences(records);
  CHECK(report.by_question.at("Alignment").rate == 0.5);
  CHECK(report.by_category.at("Alignment").at("text").rate == 1.0);
  CHECK(report.by_category.at("Alignment").at("color").rate == 0.0);
  CHECK(report.by_category.at("Alignment").at("text").n_prompts == 5);
}

TEST_CASE("interval behaves like a normal approximation") {
  // Bernoulli(0.6) single-rater choices over many prompts: the interval
  // should usually cover 0.6. The full calibration run lives in the
  // acceptance suite.
  SplitMix64 rng(7);
  const auto records = make_records(200, 25, [&](int, int) {
    return rng.below(10) < 6 ? PrefChoice::A : PrefChoice::B;
  });
  const PreferenceCell cell = aggregate_preferences(records).by_question.at("Fidelity");
  CHECK(cell.rate > 0.5);
  CHECK(cell.rate < 0.7);
  CHECK(cell.ci_lo <= cell.rate);
  CHECK(cell.ci_hi >= cell.rate);
  CHECK(cell.ci_lo >= 0.0);
  CHECK(cell.ci_hi <= 1.0);
}

TEST_CASE("ratings csv parsing") {
  const char* csv =
      "prompt_id,category,question,rater_id,choice\n"
      "pr-0,text,Fidelity,r1,A\n"
      "pr-0,text,TextAccuracy,r1,Indifferent\n"
      "pr-1,color,Alignment,r2,B\n";
  const auto records = parse_ratings_csv(csv);
  REQUIRE(records.size() == 3);
  CHECK(records[0].question == PrefQuestion::Fidelity);
  CHECK(records[1].choice == PrefChoice::Indifferent);
  CHECK(records[2].category == "color");
  SUBCASE("malformed choice is a parse error") {
    CHECK_THROWS_AS(parse_ratings_csv("prompt_id,category,question,rater_id,choice\np,c,Fidelity,r,maybe\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_ratings_csv("prompt_id,category,question,rater_id,choice\np,c,Vibes,r,A\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_ratings_csv("wrong,header\n"), ParseError);
  }
}

TEST_CASE("text accuracy question is pinned") {
  CHECK(std::string(kTextAccuracyQuestionTemplate) ==
        "Which set of images more accurately shows the text: \"<target>\"?");
  CHECK(text_accuracy_question("exquisite") ==
        "Which set of images more accurately shows the text: \"exquisite\"?");
}
