#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "spellbench/error.hpp"
#include "spellbench/io.hpp"
#include "spellbench/ocr.hpp"
#include "spellbench/prompts.hpp"
#include "spellbench/rng.hpp"
#include "spellbench/unicode.hpp"
#include "spellbench/wikispell.hpp"

#include "json.hpp"

namespace spellbench {

// ---- exact-match state ------------------------------------------------------

enum class SampleState { Correct, Incorrect, NoText, PipelineError };

inline const char* to_string(SampleState s) {
  switch (s) {
    case SampleState::Correct: return "correct";
    case SampleState::Incorrect: return "incorrect";
    case SampleState::NoText: return "no_text";
    case SampleState::PipelineError: return "pipeline_error";
  }
  return "?";
}

inline SampleState sample_state_from_string(std::string_view s) {
  if (s == "correct") return SampleState::Correct;
  if (s == "incorrect") return SampleState::Incorrect;
  if (s == "no_text") return SampleState::NoText;
  if (s == "pipeline_error") return SampleState::PipelineError;
  throw ParseError("unknown sample state: " + std::string(s));
}

// Whole-string comparison under case folding; no partial credit.
inline SampleState match_spelling(std::string_view target, const std::optional<std::string>& reading) {
  if (target.empty()) throw ContractError("match_spelling: empty target");
  if (!reading) return SampleState::NoText;
  return uni::case_fold(*reading) == uni::case_fold(target) ? SampleState::Correct
                                                            : SampleState::Incorrect;
}

// ---- minimal edit scripts ---------------------------------------------------

enum class EditOpKind { Match, Substitute, Delete, Insert };

struct EditOp {
  EditOpKind kind = EditOpKind::Match;
  char32_t target_char = 0;   // set for Match/Substitute/Delete
  char32_t reading_char = 0;  // set for Match/Substitute/Insert
};

struct EditScript {
  std::vector<EditOp> ops;
  std::size_t cost = 0;  // equals the Levenshtein distance
};

// Levenshtein alignment with a fixed traceback preference
// (match > substitution > deletion > insertion), so ambiguous minimal
// scripts resolve deterministically. Inputs are expected case-folded.
inline EditScript edit_script(std::string_view target, std::string_view reading) {
  const std::vector<char32_t> t = uni::to_scalars(target);
  const std::vector<char32_t> r = uni::to_scalars(reading);
  const std::size_t m = t.size(), n = r.size();
  std::vector<std::vector<std::uint32_t>> d(m + 1, std::vector<std::uint32_t>(n + 1, 0));
  for (std::size_t i = 0; i <= m; ++i) d[i][0] = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j <= n; ++j) d[0][j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const std::uint32_t sub = d[i - 1][j - 1] + (t[i - 1] == r[j - 1] ? 0 : 1);
      d[i][j] = std::min({sub, d[i - 1][j] + 1, d[i][j - 1] + 1});
    }

  EditScript script;
  script.cost = d[m][n];
  std::size_t i = m, j = n;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && t[i - 1] == r[j - 1] && d[i][j] == d[i - 1][j - 1]) {
      script.ops.push_back(EditOp{EditOpKind::Match, t[i - 1], r[j - 1]});
      --i, --j;
    } else if (i > 0 && j > 0 && d[i][j] == d[i - 1][j - 1] + 1) {
      script.ops.push_back(EditOp{EditOpKind::Substitute, t[i - 1], r[j - 1]});
      --i, --j;
    } else if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      script.ops.push_back(EditOp{EditOpKind::Delete, t[i - 1], 0});
      --i;
    } else {
      script.ops.push_back(EditOp{EditOpKind::Insert, 0, r[j - 1]});
      --j;
    }
  }
  std::reverse(script.ops.begin(), script.ops.end());
  return script;
}

// ---- structural error classes -----------------------------------------------

enum class ErrorClass { DropOnly, RepeatInsertion, AddInsertion, SubstitutionOnly, Mixed };

inline const char* to_string(ErrorClass c) {
  switch (c) {
    case ErrorClass::DropOnly: return "drop_only";
    case ErrorClass::RepeatInsertion: return "repeat_insertion";
    case ErrorClass::AddInsertion: return "add_insertion";
    case ErrorClass::SubstitutionOnly: return "substitution_only";
    case ErrorClass::Mixed: return "mixed";
  }
  return "?";
}

inline ErrorClass error_class_from_string(std::string_view s) {
  if (s == "drop_only") return ErrorClass::DropOnly;
  if (s == "repeat_insertion") return ErrorClass::RepeatInsertion;
  if (s == "add_insertion") return ErrorClass::AddInsertion;
  if (s == "substitution_only") return ErrorClass::SubstitutionOnly;
  if (s == "mixed") return ErrorClass::Mixed;
  throw ParseError("unknown error class: " + std::string(s));
}

namespace detail {

// True when every inserted character equals the aligned target character
// immediately before or after its insertion point.
inline bool insertions_are_repeats(const EditScript& script) {
  for (std::size_t k = 0; k < script.ops.size(); ++k) {
    if (script.ops[k].kind != EditOpKind::Insert) continue;
    bool adjacent_equal = false;
    for (std::size_t l = k; l-- > 0;) {
      if (script.ops[l].kind == EditOpKind::Insert) continue;
      adjacent_equal = script.ops[l].target_char == script.ops[k].reading_char;
      break;
    }
    if (!adjacent_equal) {
      for (std::size_t l = k + 1; l < script.ops.size(); ++l) {
        if (script.ops[l].kind == EditOpKind::Insert) continue;
        adjacent_equal = script.ops[l].target_char == script.ops[k].reading_char;
        break;
      }
    }
    if (!adjacent_equal) return false;
  }
  return true;
}

}  // namespace detail

inline ErrorClass classify_script(const EditScript& script) {
  std::size_t subs = 0, dels = 0, inss = 0;
  for (const EditOp& op : script.ops) {
    subs += op.kind == EditOpKind::Substitute;
    dels += op.kind == EditOpKind::Delete;
    inss += op.kind == EditOpKind::Insert;
  }
  if (dels > 0 && subs == 0 && inss == 0) return ErrorClass::DropOnly;
  if (inss > 0 && subs == 0 && dels == 0)
    return detail::insertions_are_repeats(script) ? ErrorClass::RepeatInsertion : ErrorClass::AddInsertion;
  if (subs > 0 && dels == 0 && inss == 0) return ErrorClass::SubstitutionOnly;
  return ErrorClass::Mixed;
}

// Classifies an incorrect reading from the minimal edit script between
// the case-folded target and reading.
inline ErrorClass classify_error(std::string_view target, std::string_view reading) {
  const std::string ft = uni::case_fold(target);
  const std::string fr = uni::case_fold(reading);
  if (ft == fr) throw ContractError("classify_error called on a correct reading");
  return classify_script(edit_script(ft, fr));
}

// ---- irregular-verb regularization tag ----------------------------------------

inline constexpr char kTagRegularizedIrregular[] = "regularized_irregular";

struct IrregularVerb {
  std::string root;  // e.g. fight
  std::string past;  // e.g. fought
};

// Toolkit-chosen list of 23 common irregular past-tense verbs; editable
// via a `root<TAB>past` TSV.
inline std::vector<IrregularVerb> default_irregular_verbs() {
  return {
      {"begin", "began"},  {"choose", "chose"}, {"dig", "dug"},     {"fight", "fought"},
      {"throw", "threw"},  {"know", "knew"},    {"grow", "grew"},   {"sing", "sang"},
      {"drink", "drank"},  {"swim", "swam"},    {"run", "ran"},     {"come", "came"},
      {"go", "went"},      {"take", "took"},    {"give", "gave"},   {"speak", "spoke"},
      {"write", "wrote"},  {"drive", "drove"},  {"ride", "rode"},   {"fall", "fell"},
      {"hold", "held"},    {"teach", "taught"}, {"catch", "caught"},
  };
}

inline std::vector<IrregularVerb> irregular_verbs_from_tsv(std::string_view tsv) {
  std::vector<IrregularVerb> verbs;
  for (const std::string& line : split_lines(tsv)) {
    if (line.empty() || line[0] == '#') continue;
    const auto cols = split_on(line, '\t');
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty())
      throw ParseError("irregular verb row must be root<TAB>past: " + line);
    verbs.push_back(IrregularVerb{cols[0], cols[1]});
  }
  return verbs;
}

// The reading spells root+"d" or root+"ed" where the entry's past form is
// the target.
inline bool is_regularized_irregular(std::string_view target, std::string_view reading,
                                     const std::vector<IrregularVerb>& verbs) {
  const std::string ft = uni::case_fold(target);
  const std::string fr = uni::case_fold(reading);
  for (const IrregularVerb& v : verbs) {
    if (uni::case_fold(v.past) != ft) continue;
    const std::string root = uni::case_fold(v.root);
    if (fr == root + "d" || fr == root + "ed") return true;
  }
  return false;
}

// ---- per-sample scores --------------------------------------------------------

struct SampleScore {
  std::string prompt_id;
  int sample_index = 0;
  std::optional<FrequencyBucket> bucket;
  std::string target;
  std::optional<std::string> reading;
  SampleState state = SampleState::PipelineError;
  std::optional<ErrorClass> error_class;  // present iff state == Incorrect
  std::vector<std::string> tags;
};

inline SampleScore score_sample(std::string_view target, const std::optional<std::string>& reading,
                                const std::vector<IrregularVerb>& verbs) {
  SampleScore s;
  s.target = std::string(target);
  s.reading = reading;
  s.state = match_spelling(target, reading);
  if (s.state == SampleState::Incorrect) {
    s.error_class = classify_error(target, *reading);
    if (is_regularized_irregular(target, *reading, verbs)) s.tags.push_back(kTagRegularizedIrregular);
  }
  return s;
}

struct ScoreRun {
  std::vector<SampleScore> scores;
  std::uint64_t skipped_no_target = 0;  // manifest rows with no target text
};

// Joins manifest rows with OCR outcomes by image path. Rows whose OCR
// record is missing or failed become PipelineError, never misspellings.
inline ScoreRun score_samples(const std::vector<ManifestEntry>& manifest,
                              const std::map<std::string, OcrRecord>& ocr_by_id,
                              const std::vector<IrregularVerb>& verbs) {
  ScoreRun run;
  for (const ManifestEntry& entry : manifest) {
    if (!entry.target) {
      ++run.skipped_no_target;
      continue;
    }
    SampleScore s;
    auto it = ocr_by_id.find(entry.image_path);
    if (it == ocr_by_id.end()) {
      s.target = *entry.target;
      s.state = SampleState::PipelineError;
    } else if (!it->second.result) {
      s.target = *entry.target;
      s.state = SampleState::PipelineError;
    } else {
      const NormalizedReading nr = normalized_reading_for(*it->second.result);
      s = score_sample(*entry.target, nr.reading, verbs);
    }
    s.prompt_id = entry.prompt_id;
    s.sample_index = entry.sample_index;
    s.bucket = entry.bucket;
    run.scores.push_back(std::move(s));
  }
  std::sort(run.scores.begin(), run.scores.end(), [](const SampleScore& a, const SampleScore& b) {
    if (a.prompt_id != b.prompt_id) return a.prompt_id < b.prompt_id;
    return a.sample_index < b.sample_index;
  });
  return run;
}

inline std::string scores_to_jsonl(const std::vector<SampleScore>& scores) {
  std::string out;
  for (const SampleScore& s : scores) {
    nlohmann::json j;
    j["prompt_id"] = s.prompt_id;
    j["sample_index"] = s.sample_index;
    j["bucket"] = s.bucket ? nlohmann::json(to_string(*s.bucket)) : nlohmann::json(nullptr);
    j["target"] = s.target;
    j["reading"] = s.reading ? nlohmann::json(*s.reading) : nlohmann::json(nullptr);
    j["state"] = to_string(s.state);
    j["error_class"] = s.error_class ? nlohmann::json(to_string(*s.error_class)) : nlohmann::json(nullptr);
    j["tags"] = s.tags;
    out += j.dump();
    out += '\n';
  }
  return out;
}

inline std::vector<SampleScore> scores_from_jsonl(std::string_view text) {
  std::vector<SampleScore> scores;
  std::size_t line_no = 0;
  for (const std::string& line : split_lines(text)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw ParseError("scores line " + std::to_string(line_no) + " is not a JSON object");
    for (const char* field : {"prompt_id", "sample_index", "target", "state"})
      if (!j.contains(field)) throw ParseError("scores line " + std::to_string(line_no) + ": missing field " + field);
    SampleScore s;
    s.prompt_id = j["prompt_id"].get<std::string>();
    s.sample_index = j["sample_index"].get<int>();
    if (j.contains("bucket") && j["bucket"].is_string())
      s.bucket = bucket_from_string(j["bucket"].get<std::string>());
    s.target = j["target"].get<std::string>();
    if (j.contains("reading") && j["reading"].is_string()) s.reading = j["reading"].get<std::string>();
    s.state = sample_state_from_string(j["state"].get<std::string>());
    if (j.contains("error_class") && j["error_class"].is_string())
      s.error_class = error_class_from_string(j["error_class"].get<std::string>());
    if (j.contains("tags") && j["tags"].is_array())
      for (const auto& t : j["tags"]) s.tags.push_back(t.get<std::string>());
    scores.push_back(std::move(s));
  }
  return scores;
}

// ---- per-bucket accuracy and consistency --------------------------------------

struct BucketReport {
  std::optional<FrequencyBucket> bucket;  // nullopt = all rows pooled
  std::uint64_t n_words = 0;
  std::uint64_t n_samples = 0;
  std::uint64_t n_correct = 0;
  std::uint64_t n_incorrect = 0;
  std::uint64_t n_no_text = 0;
  std::uint64_t n_pipeline_error = 0;
  std::optional<double> accuracy;  // over scored (non-pipeline-error) samples
  std::uint64_t consistency_words = 0;  // words with no pipeline-error sample
  std::uint64_t all_right_words = 0;
  std::uint64_t all_wrong_words = 0;
  std::optional<double> all_right_rate;
  std::optional<double> all_wrong_rate;
  std::uint64_t words_with_pipeline_error = 0;
  std::map<std::string, std::uint64_t> error_class_counts;
};

namespace detail {

inline BucketReport report_for(std::optional<FrequencyBucket> bucket,
                               const std::map<std::string, std::vector<const SampleScore*>>& by_word,
                               std::uint64_t samples_per_prompt) {
  BucketReport rep;
  rep.bucket = bucket;
  rep.n_words = by_word.size();
  for (const auto& [word, samples] : by_word) {
    if (samples.size() != samples_per_prompt)
      throw ContractError("prompt " + word + " has " + std::to_string(samples.size()) +
                          " samples; expected " + std::to_string(samples_per_prompt));
    bool any_error = false, all_right = true, all_wrong = true;
    for (const SampleScore* s : samples) {
      ++rep.n_samples;
      switch (s->state) {
        case SampleState::Correct: ++rep.n_correct; all_wrong = false; break;
        case SampleState::Incorrect: ++rep.n_incorrect; all_right = false; break;
        case SampleState::NoText: ++rep.n_no_text; all_right = false; break;
        case SampleState::PipelineError: ++rep.n_pipeline_error; any_error = true; break;
      }
      if (s->error_class) ++rep.error_class_counts[to_string(*s->error_class)];
    }
    if (any_error) {
      ++rep.words_with_pipeline_error;
    } else {
      ++rep.consistency_words;
      if (all_right) ++rep.all_right_words;
      if (all_wrong) ++rep.all_wrong_words;
    }
  }
  const std::uint64_t scored = rep.n_samples - rep.n_pipeline_error;
  if (scored > 0) rep.accuracy = static_cast<double>(rep.n_correct) / static_cast<double>(scored);
  if (rep.consistency_words > 0) {
    rep.all_right_rate = static_cast<double>(rep.all_right_words) / static_cast<double>(rep.consistency_words);
    rep.all_wrong_rate = static_cast<double>(rep.all_wrong_words) / static_cast<double>(rep.consistency_words);
  }
  return rep;
}

}  // namespace detail

// One report per bucket present in the scores, plus a pooled row.
// Requires every prompt to carry exactly samples_per_prompt samples.
inline std::vector<BucketReport> per_bucket_report(const std::vector<SampleScore>& scores,
                                                   std::uint64_t samples_per_prompt = 4) {
  std::map<std::string, std::vector<const SampleScore*>> pooled;
  std::map<FrequencyBucket, std::map<std::string, std::vector<const SampleScore*>>> grouped;
  for (const SampleScore& s : scores) {
    pooled[s.prompt_id].push_back(&s);
    if (s.bucket) grouped[*s.bucket][s.prompt_id].push_back(&s);
  }
  std::vector<BucketReport> reports;
  for (FrequencyBucket b : kAllBuckets) {
    auto it = grouped.find(b);
    if (it == grouped.end()) continue;
    reports.push_back(detail::report_for(b, it->second, samples_per_prompt));
  }
  if (!pooled.empty()) reports.push_back(detail::report_for(std::nullopt, pooled, samples_per_prompt));
  return reports;
}

// ---- OCR validation (manual labeling) ------------------------------------------

struct ValidationPlanRow {
  std::string model;
  std::string prompt_id;
  int sample_index = 0;
  std::string target;
  std::optional<std::string> reading;
  std::string ocr_verdict;  // "correct" | "incorrect"
};

struct ValidationPlan {
  std::vector<ValidationPlanRow> rows;
  std::vector<std::string> warnings;
};

// Balanced labeling sheet: per model, `per_verdict_n` uniformly sampled
// rows the OCR called correct and the same number it called incorrect
// (no-text counts as incorrect; pipeline errors are not sampled).
inline ValidationPlan plan_validation(const std::map<std::string, std::vector<SampleScore>>& by_model,
                                      std::uint64_t per_verdict_n, std::uint64_t seed) {
  ValidationPlan plan;
  SplitMix64 master(seed);
  std::uint64_t model_index = 0;
  for (const auto& [model, scores] : by_model) {
    for (const bool correct_verdict : {true, false}) {
      std::vector<const SampleScore*> pool;
      for (const SampleScore& s : scores) {
        if (s.state == SampleState::PipelineError) continue;
        const bool is_correct = s.state == SampleState::Correct;
        if (is_correct == correct_verdict) pool.push_back(&s);
      }
      std::sort(pool.begin(), pool.end(), [](const SampleScore* a, const SampleScore* b) {
        if (a->prompt_id != b->prompt_id) return a->prompt_id < b->prompt_id;
        return a->sample_index < b->sample_index;
      });
      std::uint64_t n = per_verdict_n;
      if (pool.size() < n) {
        plan.warnings.push_back("model " + model + " has only " + std::to_string(pool.size()) + " " +
                                (correct_verdict ? "correct" : "incorrect") + "-verdict samples; taking all");
        n = pool.size();
      }
      SplitMix64 rng = master.fork(model_index * 2 + (correct_verdict ? 0 : 1) + 1);
      std::vector<std::size_t> picks = sample_indices(pool.size(), n, rng);
      std::sort(picks.begin(), picks.end());
      for (std::size_t p : picks) {
        const SampleScore& s = *pool[p];
        plan.rows.push_back(ValidationPlanRow{model, s.prompt_id, s.sample_index, s.target, s.reading,
                                              correct_verdict ? "correct" : "incorrect"});
      }
    }
    ++model_index;
  }
  return plan;
}

namespace detail {

inline std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += '"';
  return out;
}

inline std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace detail

inline constexpr char kValidationSheetHeader[] =
    "model,prompt_id,sample_index,target,reading,ocr_verdict,manual_label";

inline std::string validation_plan_to_csv(const ValidationPlan& plan) {
  std::string out = std::string(kValidationSheetHeader) + "\n";
  for (const ValidationPlanRow& row : plan.rows) {
    out += detail::csv_escape(row.model) + "," + detail::csv_escape(row.prompt_id) + "," +
           std::to_string(row.sample_index) + "," + detail::csv_escape(row.target) + "," +
           detail::csv_escape(row.reading.value_or("")) + "," + row.ocr_verdict + ",\n";
  }
  return out;
}

struct ValidationSheetRow {
  std::string model;
  std::string ocr_verdict;
  std::string manual_label;
};

inline std::vector<ValidationSheetRow> parse_validation_sheet(std::string_view csv) {
  const std::vector<std::string> lines = split_lines(csv);
  if (lines.empty() || detail::csv_split(lines[0]).size() != 7)
    throw ParseError("validation sheet must start with the header: " + std::string(kValidationSheetHeader));
  std::vector<ValidationSheetRow> rows;
  std::vector<std::string> unlabeled;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto fields = detail::csv_split(lines[i]);
    if (fields.size() != 7) throw ParseError("validation sheet row " + std::to_string(i + 1) + " has " +
                                             std::to_string(fields.size()) + " fields; expected 7");
    ValidationSheetRow row{fields[0], fields[5], fields[6]};
    if (row.manual_label != "correct" && row.manual_label != "incorrect") {
      unlabeled.push_back("row " + std::to_string(i + 1) + (row.manual_label.empty()
                              ? " (blank)" : " (got '" + row.manual_label + "')"));
      continue;
    }
    if (row.ocr_verdict != "correct" && row.ocr_verdict != "incorrect")
      throw ParseError("validation sheet row " + std::to_string(i + 1) + " has an invalid ocr_verdict");
    rows.push_back(std::move(row));
  }
  if (!unlabeled.empty()) {
    std::string msg = "validation sheet has unlabeled rows: ";
    for (std::size_t i = 0; i < unlabeled.size(); ++i) msg += (i ? ", " : "") + unlabeled[i];
    throw ParseError(msg);
  }
  return rows;
}

struct ValidationOutcome {
  std::string model;
  double measured_accuracy = 0;
  double false_negative_rate = 0;  // OCR said incorrect, manual says correct
  double false_positive_rate = 0;  // OCR said correct, manual says incorrect
  double adjusted_accuracy = 0;
};

inline double adjusted_accuracy(double acc, double fn, double fp) {
  return acc * (1.0 - fp) + (1.0 - acc) * fn;
}

inline ValidationOutcome apply_validation(const std::string& model, double measured_accuracy,
                                          const std::vector<ValidationSheetRow>& sheet) {
  std::uint64_t n_incorrect = 0, fn_hits = 0, n_correct = 0, fp_hits = 0;
  for (const ValidationSheetRow& row : sheet) {
    if (row.model != model) continue;
    if (row.ocr_verdict == "incorrect") {
      ++n_incorrect;
      if (row.manual_label == "correct") ++fn_hits;
    } else {
      ++n_correct;
      if (row.manual_label == "incorrect") ++fp_hits;
    }
  }
  ValidationOutcome out;
  out.model = model;
  out.measured_accuracy = measured_accuracy;
  out.false_negative_rate = n_incorrect ? static_cast<double>(fn_hits) / static_cast<double>(n_incorrect) : 0.0;
  out.false_positive_rate = n_correct ? static_cast<double>(fp_hits) / static_cast<double>(n_correct) : 0.0;
  out.adjusted_accuracy = adjusted_accuracy(measured_accuracy, out.false_negative_rate, out.false_positive_rate);
  return out;
}

// ---- irregular regularization rate ---------------------------------------------

struct RegularizationResult {
  std::optional<double> rate;
  std::uint64_t tagged = 0;
  std::uint64_t total = 0;  // non-pipeline-error samples on irregular-verb prompts
};

inline RegularizationResult regularization_rate(const std::vector<SampleScore>& scores,
                                                const std::vector<IrregularVerb>& verbs) {
  std::set<std::string> past_forms;
  for (const IrregularVerb& v : verbs) past_forms.insert(uni::case_fold(v.past));
  RegularizationResult res;
  for (const SampleScore& s : scores) {
    if (past_forms.count(uni::case_fold(s.target)) == 0) continue;
    if (s.state == SampleState::PipelineError) continue;
    ++res.total;
    for (const std::string& tag : s.tags)
      if (tag == kTagRegularizedIrregular) ++res.tagged;
  }
  if (res.total > 0) res.rate = static_cast<double>(res.tagged) / static_cast<double>(res.total);
  return res;
}

// ---- human preference aggregation ----------------------------------------------

enum class PrefQuestion { Fidelity, Alignment, TextAccuracy };

inline const char* to_string(PrefQuestion q) {
  switch (q) {
    case PrefQuestion::Fidelity: return "Fidelity";
    case PrefQuestion::Alignment: return "Alignment";
    case PrefQuestion::TextAccuracy: return "TextAccuracy";
  }
  return "?";
}

inline PrefQuestion pref_question_from_string(std::string_view s) {
  if (s == "Fidelity") return PrefQuestion::Fidelity;
  if (s == "Alignment") return PrefQuestion::Alignment;
  if (s == "TextAccuracy") return PrefQuestion::TextAccuracy;
  throw ParseError("unknown question: " + std::string(s));
}

enum class PrefChoice { A, B, Indifferent };

inline PrefChoice pref_choice_from_string(std::string_view s) {
  if (s == "A") return PrefChoice::A;
  if (s == "B") return PrefChoice::B;
  if (s == "Indifferent") return PrefChoice::Indifferent;
  throw ParseError("unknown choice: " + std::string(s));
}

inline const char* to_string(PrefChoice c) {
  switch (c) {
    case PrefChoice::A: return "A";
    case PrefChoice::B: return "B";
    case PrefChoice::Indifferent: return "Indifferent";
  }
  return "?";
}

// The rendered-text rating question, with <target> substituted.
inline constexpr char kTextAccuracyQuestionTemplate[] =
    "Which set of images more accurately shows the text: \"<target>\"?";

inline std::string text_accuracy_question(std::string_view target) {
  std::string q = kTextAccuracyQuestionTemplate;
  q.replace(q.find("<target>"), 8, target);
  return q;
}

struct PreferenceRecord {
  std::string prompt_id;
  std::string category;
  PrefQuestion question = PrefQuestion::Fidelity;
  std::string rater_id;
  PrefChoice choice = PrefChoice::A;
};

inline constexpr char kRatingsCsvHeader[] = "prompt_id,category,question,rater_id,choice";

inline std::vector<PreferenceRecord> parse_ratings_csv(std::string_view csv) {
  const std::vector<std::string> lines = split_lines(csv);
  if (lines.empty()) throw ParseError("ratings CSV is empty");
  if (detail::csv_split(lines[0]).size() != 5)
    throw ParseError("ratings CSV must start with the header: " + std::string(kRatingsCsvHeader));
  std::vector<PreferenceRecord> records;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto fields = detail::csv_split(lines[i]);
    if (fields.size() != 5)
      throw ParseError("ratings row " + std::to_string(i + 1) + " has " + std::to_string(fields.size()) +
                       " fields; expected 5");
    PreferenceRecord rec;
    rec.prompt_id = fields[0];
    rec.category = fields[1];
    rec.question = pref_question_from_string(fields[2]);
    rec.rater_id = fields[3];
    rec.choice = pref_choice_from_string(fields[4]);
    records.push_back(std::move(rec));
  }
  return records;
}

struct PreferenceCell {
  std::uint64_t n_prompts = 0;
  std::uint64_t n_ratings = 0;
  double rate = 0;   // mean over per-prompt scores
  double ci_lo = 0;  // 95% normal-approximation interval, clamped to [0,1]
  double ci_hi = 0;
};

struct PreferenceReport {
  std::map<std::string, PreferenceCell> by_question;                // question -> cell
  std::map<std::string, std::map<std::string, PreferenceCell>> by_category;  // question -> category -> cell
};

namespace detail {

inline PreferenceCell summarize_prompt_scores(const std::vector<std::pair<double, std::uint64_t>>& scores) {
  PreferenceCell cell;
  cell.n_prompts = scores.size();
  if (scores.empty()) return cell;
  double sum = 0;
  for (const auto& [score, n] : scores) {
    sum += score;
    cell.n_ratings += n;
  }
  const double mean = sum / static_cast<double>(scores.size());
  double var = 0;
  for (const auto& [score, n] : scores) var += (score - mean) * (score - mean);
  const double stdev = scores.size() > 1 ? std::sqrt(var / static_cast<double>(scores.size() - 1)) : 0.0;
  const double half = 1.96 * stdev / std::sqrt(static_cast<double>(scores.size()));
  cell.rate = mean;
  cell.ci_lo = std::max(0.0, mean - half);
  cell.ci_hi = std::min(1.0, mean + half);
  return cell;
}

}  // namespace detail

// Per prompt and question, score = (#A + 0.5*#Indifferent) / #ratings;
// preference rates are means of prompt scores with a 95% interval.
inline PreferenceReport aggregate_preferences(const std::vector<PreferenceRecord>& records) {
  struct Tally {
    std::uint64_t a = 0, b = 0, indif = 0;
    std::string category;
  };
  std::map<std::pair<std::string, std::string>, Tally> per_prompt;  // (question, prompt) -> tally
  for (const PreferenceRecord& rec : records) {
    Tally& t = per_prompt[{to_string(rec.question), rec.prompt_id}];
    t.category = rec.category;
    switch (rec.choice) {
      case PrefChoice::A: ++t.a; break;
      case PrefChoice::B: ++t.b; break;
      case PrefChoice::Indifferent: ++t.indif; break;
    }
  }
  std::map<std::string, std::vector<std::pair<double, std::uint64_t>>> question_scores;
  std::map<std::string, std::map<std::string, std::vector<std::pair<double, std::uint64_t>>>> category_scores;
  for (const auto& [key, t] : per_prompt) {
    const std::uint64_t n = t.a + t.b + t.indif;
    const double score = (static_cast<double>(t.a) + 0.5 * static_cast<double>(t.indif)) / static_cast<double>(n);
    question_scores[key.first].push_back({score, n});
    category_scores[key.first][t.category].push_back({score, n});
  }
  PreferenceReport report;
  for (const auto& [q, scores] : question_scores) report.by_question[q] = detail::summarize_prompt_scores(scores);
  for (const auto& [q, cats] : category_scores)
    for (const auto& [cat, scores] : cats) report.by_category[q][cat] = detail::summarize_prompt_scores(scores);
  return report;
}

}  // namespace spellbench
