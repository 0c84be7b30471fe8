#include "spellbench/report.hpp"

#include "doctest.h"

using namespace spellbench;

namespace {

std::vector<SampleScore> tiny_scores(FrequencyBucket bucket, int words, int correct_words) {
  std::vector<SampleScore> scores;
  for (int w = 0; w < words; ++w)
    for (int i = 0; i < 4; ++i) {
      SampleScore s;
      s.prompt_id = std::string(to_string(bucket)) + "-" + std::to_string(w);
      s.sample_index = i;
      s.bucket = bucket;
      s.target = "word";
      if (w < correct_words) {
        s.state = SampleState::Correct;
        s.reading = "word";
      } else {
        s.state = SampleState::Incorrect;
        s.reading = "wordd";
        s.error_class = ErrorClass::RepeatInsertion;
      }
      scores.push_back(std::move(s));
    }
  return scores;
}

}  // namespace

TEST_CASE("report bundle arithmetic matches hand-computed values") {
  std::map<std::string, std::vector<SampleScore>> by_model;
  auto a = tiny_scores(FrequencyBucket::Top1, 10, 8);  // 32/40 correct
  auto more = tiny_scores(FrequencyBucket::Bottom50, 10, 3);
  a.insert(a.end(), more.begin(), more.end());
  by_model["alpha"] = a;
  by_model["beta"] = tiny_scores(FrequencyBucket::Top1, 10, 5);
  const ReportBundle bundle = build_report_bundle(by_model, 4, default_irregular_verbs());

  const auto& alpha = bundle.models.at("alpha");
  REQUIRE(alpha.size() == 3);  // top1, bottom50, pooled
  CHECK(alpha[0].bucket == FrequencyBucket::Top1);
  CHECK(*alpha[0].accuracy == doctest::Approx(0.8));
  CHECK(alpha[1].bucket == FrequencyBucket::Bottom50);
  CHECK(*alpha[1].accuracy == doctest::Approx(0.3));
  CHECK_FALSE(alpha[2].bucket.has_value());
  CHECK(*alpha[2].accuracy == doctest::Approx(44.0 / 80.0));
  CHECK(alpha[0].error_class_counts.at("repeat_insertion") == 8);

  SUBCASE("missing buckets are noticed, not invented") {
    bool noticed = false;
    for (const auto& n : bundle.notices) noticed = noticed || n.find("beta") != std::string::npos;
    CHECK(noticed);
  }
  SUBCASE("accuracy csv has one column per model") {
    const std::string csv = accuracy_csv(bundle);
    const auto lines = split_lines(csv);
    CHECK(lines[0] == "bucket,alpha,beta");
    CHECK(lines[1] == "top1,0.8000,0.5000");
    CHECK(lines[5] == "bottom50,0.3000,");
  }
  SUBCASE("every json cell is recomputable from the scores") {
    const nlohmann::json j = report_bundle_to_json(bundle);
    for (const auto& [model, scores] : by_model) {
      for (const auto& jb : j["models"][model]["buckets"]) {
        // Recount directly from the raw scores.
        std::uint64_t n_correct = 0, n_samples = 0;
        for (const SampleScore& s : scores) {
          const bool in_bucket = jb["bucket"] == "all" ||
                                 (s.bucket && std::string(to_string(*s.bucket)) == jb["bucket"]);
          if (!in_bucket) continue;
          ++n_samples;
          n_correct += s.state == SampleState::Correct;
        }
        CHECK(jb["n_samples"] == n_samples);
        CHECK(jb["states"]["correct"] == n_correct);
        CHECK(jb["accuracy"].get<double>() ==
              doctest::Approx(static_cast<double>(n_correct) / static_cast<double>(n_samples)));
      }
    }
  }
  SUBCASE("text rendering stays stable") {
    const std::string text = report_bundle_to_text(bundle);
    CHECK(text.find("model: alpha") != std::string::npos);
    CHECK(text.find("Top 1%") != std::string::npos);
    CHECK(report_bundle_to_text(bundle) == text);
  }
}

TEST_CASE("empty scores produce an empty bundle with a notice") {
  std::map<std::string, std::vector<SampleScore>> by_model;
  by_model["empty"] = {};
  const ReportBundle bundle = build_report_bundle(by_model, 4, default_irregular_verbs());
  CHECK(bundle.models.empty());
  REQUIRE_FALSE(bundle.notices.empty());
  CHECK(bundle.notices[0].find("empty") != std::string::npos);
}

TEST_CASE("emit_report_bundle is deterministic on disk") {
  namespace fs = std::filesystem;
  std::map<std::string, std::vector<SampleScore>> by_model;
  by_model["m"] = tiny_scores(FrequencyBucket::P1to10, 6, 2);
  const ReportBundle bundle = build_report_bundle(by_model, 4, default_irregular_verbs());
  const fs::path dir1 = fs::temp_directory_path() / "sb_rep1";
  const fs::path dir2 = fs::temp_directory_path() / "sb_rep2";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  emit_report_bundle(bundle, dir1);
  emit_report_bundle(bundle, dir2);
  for (const char* name : {"report.json", "report.txt", "accuracy_by_bucket.csv", "consistency_by_bucket.csv"})
    CHECK(read_file(dir1 / name) == read_file(dir2 / name));
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}
