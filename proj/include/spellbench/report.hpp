#pragma once

#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spellbench/io.hpp"
#include "spellbench/scoring.hpp"
#include "spellbench/version.hpp"

#include "json.hpp"

namespace spellbench {

inline nlohmann::json bucket_report_to_json(const BucketReport& r) {
  nlohmann::json j;
  j["bucket"] = r.bucket ? nlohmann::json(to_string(*r.bucket)) : nlohmann::json("all");
  j["n_words"] = r.n_words;
  j["n_samples"] = r.n_samples;
  j["states"]["correct"] = r.n_correct;
  j["states"]["incorrect"] = r.n_incorrect;
  j["states"]["no_text"] = r.n_no_text;
  j["states"]["pipeline_error"] = r.n_pipeline_error;
  j["accuracy"] = r.accuracy ? nlohmann::json(*r.accuracy) : nlohmann::json(nullptr);
  j["consistency_words"] = r.consistency_words;
  j["all_right_words"] = r.all_right_words;
  j["all_wrong_words"] = r.all_wrong_words;
  j["all_right_rate"] = r.all_right_rate ? nlohmann::json(*r.all_right_rate) : nlohmann::json(nullptr);
  j["all_wrong_rate"] = r.all_wrong_rate ? nlohmann::json(*r.all_wrong_rate) : nlohmann::json(nullptr);
  j["words_with_pipeline_error"] = r.words_with_pipeline_error;
  j["error_classes"] = nlohmann::json::object();
  for (const auto& [cls, n] : r.error_class_counts) j["error_classes"][cls] = n;
  return j;
}

inline nlohmann::json validation_outcome_to_json(const ValidationOutcome& v) {
  nlohmann::json j;
  j["model"] = v.model;
  j["measured_accuracy"] = v.measured_accuracy;
  j["false_negative_rate"] = v.false_negative_rate;
  j["false_positive_rate"] = v.false_positive_rate;
  j["adjusted_accuracy"] = v.adjusted_accuracy;
  return j;
}

inline nlohmann::json preference_cell_to_json(const PreferenceCell& c) {
  nlohmann::json j;
  j["n_prompts"] = c.n_prompts;
  j["n_ratings"] = c.n_ratings;
  j["rate"] = c.rate;
  j["ci95"] = {c.ci_lo, c.ci_hi};
  return j;
}

inline nlohmann::json preference_report_to_json(const PreferenceReport& r) {
  nlohmann::json j;
  j["by_question"] = nlohmann::json::object();
  for (const auto& [q, cell] : r.by_question) j["by_question"][q] = preference_cell_to_json(cell);
  j["by_category"] = nlohmann::json::object();
  for (const auto& [q, cats] : r.by_category) {
    j["by_category"][q] = nlohmann::json::object();
    for (const auto& [cat, cell] : cats) j["by_category"][q][cat] = preference_cell_to_json(cell);
  }
  return j;
}

struct ReportBundle {
  // model -> per-bucket reports (five buckets present in the scores, plus
  // the pooled "all" row at the end).
  std::map<std::string, std::vector<BucketReport>> models;
  std::map<std::string, RegularizationResult> regularization;
  std::vector<ValidationOutcome> validation;
  std::optional<PreferenceReport> preferences;
  std::vector<std::string> notices;
};

inline ReportBundle build_report_bundle(const std::map<std::string, std::vector<SampleScore>>& scores_by_model,
                                        std::uint64_t samples_per_prompt,
                                        const std::vector<IrregularVerb>& verbs) {
  ReportBundle bundle;
  for (const auto& [model, scores] : scores_by_model) {
    if (scores.empty()) {
      bundle.notices.push_back("model " + model + ": empty scores file");
      continue;
    }
    bundle.models[model] = per_bucket_report(scores, samples_per_prompt);
    bundle.regularization[model] = regularization_rate(scores, verbs);
    for (FrequencyBucket b : kAllBuckets) {
      bool present = false;
      for (const BucketReport& r : bundle.models[model])
        present = present || r.bucket == b;
      if (!present)
        bundle.notices.push_back("model " + model + ": bucket " + to_string(b) + " absent from scores; row omitted");
    }
  }
  return bundle;
}

namespace detail {

inline std::string fmt_rate(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", *v);
  return buf;
}

}  // namespace detail

// Plot-data CSV mirroring the accuracy figure: bucket rows, one accuracy
// column per model.
inline std::string accuracy_csv(const ReportBundle& bundle) {
  std::string out = "bucket";
  for (const auto& [model, reports] : bundle.models) out += "," + detail::csv_escape(model);
  out += "\n";
  for (FrequencyBucket b : kAllBuckets) {
    out += to_string(b);
    for (const auto& [model, reports] : bundle.models) {
      out += ",";
      for (const BucketReport& r : reports)
        if (r.bucket == b) out += detail::fmt_rate(r.accuracy);
    }
    out += "\n";
  }
  return out;
}

// Consistency CSV: per bucket, all-right and all-wrong rate columns per model.
inline std::string consistency_csv(const ReportBundle& bundle) {
  std::string out = "bucket";
  for (const auto& [model, reports] : bundle.models)
    out += "," + detail::csv_escape(model + ":all_right") + "," + detail::csv_escape(model + ":all_wrong");
  out += "\n";
  for (FrequencyBucket b : kAllBuckets) {
    out += to_string(b);
    for (const auto& [model, reports] : bundle.models) {
      std::string right = "", wrong = "";
      for (const BucketReport& r : reports)
        if (r.bucket == b) {
          right = detail::fmt_rate(r.all_right_rate);
          wrong = detail::fmt_rate(r.all_wrong_rate);
        }
      out += "," + right + "," + wrong;
    }
    out += "\n";
  }
  return out;
}

inline nlohmann::json report_bundle_to_json(const ReportBundle& bundle) {
  nlohmann::json j;
  j["toolkit_version"] = kVersion;
  j["models"] = nlohmann::json::object();
  for (const auto& [model, reports] : bundle.models) {
    nlohmann::json jm;
    jm["buckets"] = nlohmann::json::array();
    for (const BucketReport& r : reports) jm["buckets"].push_back(bucket_report_to_json(r));
    const auto reg = bundle.regularization.find(model);
    if (reg != bundle.regularization.end()) {
      jm["regularization"]["rate"] =
          reg->second.rate ? nlohmann::json(*reg->second.rate) : nlohmann::json(nullptr);
      jm["regularization"]["tagged"] = reg->second.tagged;
      jm["regularization"]["total"] = reg->second.total;
    }
    j["models"][model] = std::move(jm);
  }
  j["validation"] = nlohmann::json::array();
  for (const ValidationOutcome& v : bundle.validation) j["validation"].push_back(validation_outcome_to_json(v));
  if (bundle.preferences) j["preferences"] = preference_report_to_json(*bundle.preferences);
  j["notices"] = bundle.notices;
  return j;
}

// Human-readable aligned-column tables.
inline std::string report_bundle_to_text(const ReportBundle& bundle) {
  std::string out;
  char buf[256];
  for (const auto& [model, reports] : bundle.models) {
    out += "model: " + model + "\n";
    std::snprintf(buf, sizeof(buf), "  %-12s %8s %8s %9s %10s %10s %8s\n", "bucket", "words",
                  "samples", "accuracy", "all_right", "all_wrong", "pkerr");
    out += buf;
    for (const BucketReport& r : reports) {
      std::snprintf(buf, sizeof(buf), "  %-12s %8llu %8llu %9s %10s %10s %8llu\n",
                    r.bucket ? bucket_label(*r.bucket) : "all",
                    static_cast<unsigned long long>(r.n_words),
                    static_cast<unsigned long long>(r.n_samples), detail::fmt_rate(r.accuracy).c_str(),
                    detail::fmt_rate(r.all_right_rate).c_str(), detail::fmt_rate(r.all_wrong_rate).c_str(),
                    static_cast<unsigned long long>(r.n_pipeline_error));
      out += buf;
    }
    const auto reg = bundle.regularization.find(model);
    if (reg != bundle.regularization.end() && reg->second.total > 0) {
      std::snprintf(buf, sizeof(buf), "  regularized-irregular rate: %s (%llu/%llu)\n",
                    detail::fmt_rate(reg->second.rate).c_str(),
                    static_cast<unsigned long long>(reg->second.tagged),
                    static_cast<unsigned long long>(reg->second.total));
      out += buf;
    }
    out += "\n";
  }
  if (!bundle.validation.empty()) {
    out += "validation:\n";
    std::snprintf(buf, sizeof(buf), "  %-16s %9s %7s %7s %9s\n", "model", "measured", "fn", "fp", "adjusted");
    out += buf;
    for (const ValidationOutcome& v : bundle.validation) {
      std::snprintf(buf, sizeof(buf), "  %-16s %9.4f %7.4f %7.4f %9.4f\n", v.model.c_str(),
                    v.measured_accuracy, v.false_negative_rate, v.false_positive_rate, v.adjusted_accuracy);
      out += buf;
    }
    out += "\n";
  }
  if (bundle.preferences) {
    out += "preferences (rate for model A, 95% interval):\n";
    for (const auto& [q, cell] : bundle.preferences->by_question) {
      std::snprintf(buf, sizeof(buf), "  %-14s %6.4f [%6.4f, %6.4f]  prompts=%llu raters' ratings=%llu\n",
                    q.c_str(), cell.rate, cell.ci_lo, cell.ci_hi,
                    static_cast<unsigned long long>(cell.n_prompts),
                    static_cast<unsigned long long>(cell.n_ratings));
      out += buf;
    }
    for (const auto& [q, cats] : bundle.preferences->by_category) {
      for (const auto& [cat, cell] : cats) {
        std::snprintf(buf, sizeof(buf), "    %-12s %-14s %6.4f [%6.4f, %6.4f]\n", q.c_str(), cat.c_str(),
                      cell.rate, cell.ci_lo, cell.ci_hi);
        out += buf;
      }
    }
    out += "\n";
  }
  for (const std::string& notice : bundle.notices) out += "note: " + notice + "\n";
  return out;
}

inline void emit_report_bundle(const ReportBundle& bundle, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  write_file(out_dir / "report.json", report_bundle_to_json(bundle).dump(2) + "\n");
  write_file(out_dir / "report.txt", report_bundle_to_text(bundle));
  write_file(out_dir / "accuracy_by_bucket.csv", accuracy_csv(bundle));
  write_file(out_dir / "consistency_by_bucket.csv", consistency_csv(bundle));
}

}  // namespace spellbench
