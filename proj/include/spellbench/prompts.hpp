#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spellbench/creative_corpus_data.hpp"
#include "spellbench/error.hpp"
#include "spellbench/io.hpp"
#include "spellbench/rng.hpp"
#include "spellbench/sha256.hpp"
#include "spellbench/unicode.hpp"
#include "spellbench/version.hpp"
#include "spellbench/wikispell.hpp"

#include "json.hpp"

namespace spellbench {

inline constexpr char kDefaultSpellingTemplate[] = "A sign with the word \"{word}\" written on it.";

enum class PromptKind { Spelling, Creative };

inline const char* to_string(PromptKind k) { return k == PromptKind::Spelling ? "spelling" : "creative"; }

enum class LengthClass { OneLetter, OneWord, TwoWords, ThreePlus };

inline const char* to_string(LengthClass c) {
  switch (c) {
    case LengthClass::OneLetter: return "one_letter";
    case LengthClass::OneWord: return "one_word";
    case LengthClass::TwoWords: return "two_words";
    case LengthClass::ThreePlus: return "three_plus";
  }
  return "?";
}

struct PromptRecord {
  std::string prompt_id;
  PromptKind kind = PromptKind::Spelling;
  std::string prompt_text;
  std::optional<std::string> target_text;
  std::optional<FrequencyBucket> bucket;     // spelling prompts only
  std::optional<LengthClass> length_class;   // creative prompts only
};

namespace detail {

inline std::string prompt_id_for(PromptKind kind, std::size_t index, std::string_view prompt_text) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%03zu", index);
  return std::string(kind == PromptKind::Spelling ? "sp-" : "cr-") + buf + "-" +
         sha256_hex(prompt_text).substr(0, 8);
}

inline constexpr std::uint64_t kPromptStreamBase = 21;  // +0..4 per bucket

}  // namespace detail

// Extracts the rendered-text target from a prompt: the longest
// double-quoted span, or, failing that, a single-quoted span whose
// opening quote starts a word (so apostrophes inside words never open a
// span). Returns nullopt when the prompt quotes nothing.
inline std::optional<std::string> extract_quoted_target(std::string_view prompt) {
  const std::vector<char32_t> cps = uni::to_scalars(prompt);
  std::optional<std::string> best;
  std::size_t best_len = 0;

  auto consider = [&](std::size_t lo, std::size_t hi) {  // exclusive of the quotes
    if (hi <= lo) return;
    const std::size_t len = hi - lo;
    if (len > best_len) {
      best_len = len;
      best = uni::from_scalars(std::vector<char32_t>(cps.begin() + static_cast<std::ptrdiff_t>(lo),
                                                     cps.begin() + static_cast<std::ptrdiff_t>(hi)));
    }
  };

  // Pass 1: ASCII double quotes, paired in sequence.
  std::optional<std::size_t> open;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i] != U'"') continue;
    if (!open) {
      open = i + 1;
    } else {
      consider(*open, i);
      open.reset();
    }
  }
  if (best) return best;

  // Pass 2: single quotes. U+2018 always opens; ASCII ' opens only at a
  // word boundary. U+2019 always closes; ASCII ' closes only when not
  // followed by a letter or digit.
  auto is_word_char = [&](char32_t cp) {
    return !uni::is_whitespace(cp) && !uni::is_punct_or_symbol(cp);
  };
  open.reset();
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (!open) {
      if (cp == U'‘' || (cp == U'\'' && (i == 0 || !is_word_char(cps[i - 1]))))
        open = i + 1;
    } else {
      if (cp == U'’' || (cp == U'\'' && (i + 1 == cps.size() || !is_word_char(cps[i + 1]))))
        consider(*open, i), open.reset();
    }
  }
  return best;
}

// Draws `words_per_bucket` words uniformly without replacement from each
// bucket's eval words and instantiates the prompt template.
inline std::vector<PromptRecord> gen_spelling_prompts(
    const std::map<FrequencyBucket, std::vector<std::string>>& eval_words_per_bucket,
    std::uint64_t words_per_bucket, std::string_view prompt_template, std::uint64_t seed) {
  const std::size_t placeholder = prompt_template.find("{word}");
  if (placeholder == std::string_view::npos)
    throw ConfigError("prompt template must contain the {word} placeholder");

  std::vector<PromptRecord> prompts;
  SplitMix64 master(seed);
  for (std::size_t bi = 0; bi < kAllBuckets.size(); ++bi) {
    const FrequencyBucket bucket = kAllBuckets[bi];
    auto it = eval_words_per_bucket.find(bucket);
    if (it == eval_words_per_bucket.end() || it->second.size() < words_per_bucket)
      throw ContractError(std::string("bucket ") + to_string(bucket) + " supplies " +
                          std::to_string(it == eval_words_per_bucket.end() ? 0 : it->second.size()) +
                          " words; need " + std::to_string(words_per_bucket));
    SplitMix64 rng = master.fork(detail::kPromptStreamBase + bi);
    for (std::size_t pick : sample_indices(it->second.size(), words_per_bucket, rng)) {
      const std::string& word = it->second[pick];
      std::string text(prompt_template);
      text.replace(text.find("{word}"), 6, word);
      PromptRecord rec;
      rec.prompt_id = detail::prompt_id_for(PromptKind::Spelling, prompts.size(), text);
      rec.kind = PromptKind::Spelling;
      rec.prompt_text = std::move(text);
      rec.target_text = word;
      rec.bucket = bucket;
      prompts.push_back(std::move(rec));
    }
  }
  return prompts;
}

inline constexpr std::size_t kCreativeCorpusSize = 175;

// Class boundaries by corpus position: 10 one-letter, 50 one-word,
// 25 two-word, 90 three-plus prompts, in that order.
inline LengthClass creative_class_for_index(std::size_t index) {
  if (index < 10) return LengthClass::OneLetter;
  if (index < 60) return LengthClass::OneWord;
  if (index < 85) return LengthClass::TwoWords;
  return LengthClass::ThreePlus;
}

// Parses the creative corpus from text that must hash to the pinned
// checksum; a mismatch is a hard error so silent edits cannot slip in.
inline std::vector<PromptRecord> load_creative_prompts_from_text(
    std::string_view corpus_text, std::string_view expected_sha256 = detail::kCreativeCorpusSha256) {
  if (expected_sha256 != "none" && sha256_hex(corpus_text) != expected_sha256)
    throw Error("creative corpus checksum mismatch: expected " + std::string(expected_sha256) +
                ", got " + sha256_hex(corpus_text));
  const std::vector<std::string> lines = split_lines(corpus_text);
  if (lines.size() != kCreativeCorpusSize)
    throw Error("creative corpus has " + std::to_string(lines.size()) + " prompts; expected " +
                std::to_string(kCreativeCorpusSize));
  std::vector<PromptRecord> prompts;
  prompts.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    PromptRecord rec;
    rec.prompt_id = detail::prompt_id_for(PromptKind::Creative, i, lines[i]);
    rec.kind = PromptKind::Creative;
    rec.prompt_text = lines[i];
    rec.target_text = extract_quoted_target(lines[i]);
    rec.length_class = creative_class_for_index(i);
    prompts.push_back(std::move(rec));
  }
  return prompts;
}

inline std::vector<PromptRecord> load_creative_prompts() {
  return load_creative_prompts_from_text(detail::kCreativeCorpusText);
}

inline std::vector<PromptRecord> load_creative_prompts_file(
    const std::filesystem::path& path, std::string_view expected_sha256 = detail::kCreativeCorpusSha256) {
  return load_creative_prompts_from_text(read_file(path), expected_sha256);
}

// ---- manifests --------------------------------------------------------------

struct ManifestRow {
  std::string prompt_id;
  int sample_index = 0;
  std::string image_path;
};

struct Manifest {
  std::vector<PromptRecord> prompts;
  std::vector<ManifestRow> rows;
  int samples_per_prompt = 4;
  std::uint64_t seed = 0;
};

inline Manifest build_manifest(std::vector<PromptRecord> prompts, int samples_per_prompt,
                               std::uint64_t seed = 0) {
  if (samples_per_prompt <= 0) throw ConfigError("samples_per_prompt must be positive");
  Manifest m;
  m.prompts = std::move(prompts);
  m.samples_per_prompt = samples_per_prompt;
  m.seed = seed;
  std::sort(m.prompts.begin(), m.prompts.end(),
            [](const PromptRecord& a, const PromptRecord& b) { return a.prompt_id < b.prompt_id; });
  for (std::size_t i = 1; i < m.prompts.size(); ++i)
    if (m.prompts[i].prompt_id == m.prompts[i - 1].prompt_id)
      throw ContractError("duplicate prompt_id: " + m.prompts[i].prompt_id);
  for (const PromptRecord& p : m.prompts)
    for (int s = 0; s < samples_per_prompt; ++s)
      m.rows.push_back(ManifestRow{p.prompt_id, s, "images/" + p.prompt_id + "/" + std::to_string(s) + ".png"});
  return m;
}

// One JSONL row per (prompt, sample), ordered by (prompt_id, sample_index).
inline std::string manifest_to_jsonl(const Manifest& m) {
  std::map<std::string, const PromptRecord*> by_id;
  for (const PromptRecord& p : m.prompts) by_id[p.prompt_id] = &p;
  std::string out;
  for (const ManifestRow& row : m.rows) {
    const PromptRecord& p = *by_id.at(row.prompt_id);
    nlohmann::json j;
    j["prompt_id"] = row.prompt_id;
    j["sample_index"] = row.sample_index;
    j["prompt"] = p.prompt_text;
    j["target"] = p.target_text ? nlohmann::json(*p.target_text) : nlohmann::json(nullptr);
    j["bucket"] = p.bucket ? nlohmann::json(to_string(*p.bucket)) : nlohmann::json(nullptr);
    j["image_path"] = row.image_path;
    out += j.dump();
    out += '\n';
  }
  return out;
}

inline void emit_manifest(const Manifest& m, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  write_file(out_dir / "manifest.jsonl", manifest_to_jsonl(m));
  nlohmann::json meta;
  meta["samples_per_prompt"] = m.samples_per_prompt;
  meta["seed"] = m.seed;
  meta["prompt_count"] = m.prompts.size();
  meta["row_count"] = m.rows.size();
  meta["toolkit_version"] = kVersion;
  write_file(out_dir / "manifest_meta.json", meta.dump(2) + "\n");
}

struct ManifestEntry {
  std::string prompt_id;
  int sample_index = 0;
  std::string prompt;
  std::optional<std::string> target;
  std::optional<FrequencyBucket> bucket;
  std::string image_path;
};

inline std::vector<ManifestEntry> parse_manifest_jsonl(std::string_view text) {
  std::vector<ManifestEntry> rows;
  std::size_t line_no = 0;
  for (const std::string& line : split_lines(text)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw ParseError("manifest line " + std::to_string(line_no) + " is not a JSON object");
    for (const char* field : {"prompt_id", "sample_index", "prompt", "image_path"})
      if (!j.contains(field))
        throw ParseError("manifest line " + std::to_string(line_no) + ": missing field " + field);
    ManifestEntry e;
    e.prompt_id = j["prompt_id"].get<std::string>();
    e.sample_index = j["sample_index"].get<int>();
    e.prompt = j["prompt"].get<std::string>();
    if (j.contains("target") && j["target"].is_string()) e.target = j["target"].get<std::string>();
    if (j.contains("bucket") && j["bucket"].is_string())
      e.bucket = bucket_from_string(j["bucket"].get<std::string>());
    e.image_path = j["image_path"].get<std::string>();
    rows.push_back(std::move(e));
  }
  return rows;
}

}  // namespace spellbench
