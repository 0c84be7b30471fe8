#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "spellbench/error.hpp"
#include "spellbench/io.hpp"
#include "spellbench/unicode.hpp"

#include "json.hpp"

namespace spellbench {

// Exclusion reasons, in the order the rules are tested. Every excluded
// entry records the first rule it violated.
inline constexpr char kReasonWhitespace[] = "whitespace";
inline constexpr char kReasonAllPunctSymbol[] = "all-punct-symbol";
inline constexpr char kReasonTooLong[] = "too-long";
inline constexpr char kReasonProverb[] = "proverb";

inline constexpr std::size_t kMaxHeadwordScalars = 30;

struct LexiconEntry {
  std::string headword;
  std::string language_code;
  std::set<std::string> pos_tags;
  bool excluded = false;
  std::string exclusion_reason;  // set iff excluded
};

struct ExclusionReport {
  std::map<std::string, std::uint64_t> excluded_by_reason;
  std::uint64_t total_in = 0;
  std::uint64_t total_kept = 0;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["total_in"] = total_in;
    j["total_kept"] = total_kept;
    j["excluded"] = nlohmann::json::object();
    for (const auto& [reason, n] : excluded_by_reason) j["excluded"][reason] = n;
    return j;
  }
};

struct IngestResult {
  std::vector<LexiconEntry> entries;
  std::uint64_t rows_total = 0;
  std::uint64_t rows_malformed = 0;
};

// Reads `headword<TAB>language<TAB>pos1|pos2|...` rows (third column
// optional). Duplicate headwords within a language merge, unioning pos
// tags. More than 10% malformed rows means the wrong file was supplied.
inline IngestResult ingest_lexicon(std::string_view tsv) {
  IngestResult result;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (const std::string& line : split_lines(tsv)) {
    if (line.empty()) continue;
    ++result.rows_total;
    const std::vector<std::string> cols = split_on(line, '\t');
    if (cols.size() < 2 || cols.size() > 3 || cols[0].empty() || cols[1].empty()) {
      ++result.rows_malformed;
      continue;
    }
    std::set<std::string> tags;
    if (cols.size() == 3) {
      for (const std::string& tag : split_on(cols[2], '|'))
        if (!tag.empty()) tags.insert(tag);
    }
    const auto key = std::make_pair(cols[1], cols[0]);
    auto it = index.find(key);
    if (it != index.end()) {
      result.entries[it->second].pos_tags.insert(tags.begin(), tags.end());
      continue;
    }
    index.emplace(key, result.entries.size());
    result.entries.push_back(LexiconEntry{cols[0], cols[1], std::move(tags)});
  }
  if (result.rows_total > 0 && result.rows_malformed * 10 > result.rows_total)
    throw ParseError("more than 10% of lexicon rows are malformed (" +
                     std::to_string(result.rows_malformed) + "/" + std::to_string(result.rows_total) +
                     "); is this the right file?");
  return result;
}

// Applies the headword exclusion rules in fixed order: whitespace,
// all-punctuation/symbol, length over 30 scalar values, "Proverb" pos tag.
// Length is counted in Unicode scalar values, so syllabic blocks encoded
// as single code points count once.
inline const char* exclusion_reason_for(const LexiconEntry& entry) {
  if (uni::contains_whitespace(entry.headword)) return kReasonWhitespace;
  if (uni::all_punct_or_symbol(entry.headword)) return kReasonAllPunctSymbol;
  if (uni::scalar_length(entry.headword) > kMaxHeadwordScalars) return kReasonTooLong;
  if (entry.pos_tags.count("Proverb") > 0) return kReasonProverb;
  return nullptr;
}

struct FilterResult {
  std::vector<LexiconEntry> kept;
  std::vector<LexiconEntry> excluded;
  ExclusionReport report;
};

inline FilterResult filter_entries(const std::vector<LexiconEntry>& entries) {
  FilterResult result;
  result.report.total_in = entries.size();
  for (const LexiconEntry& entry : entries) {
    if (const char* reason = exclusion_reason_for(entry)) {
      LexiconEntry marked = entry;
      marked.excluded = true;
      marked.exclusion_reason = reason;
      ++result.report.excluded_by_reason[reason];
      result.excluded.push_back(std::move(marked));
    } else {
      result.kept.push_back(entry);
      ++result.report.total_kept;
    }
  }
  return result;
}

inline std::string kept_lexicon_to_tsv(const std::vector<LexiconEntry>& kept) {
  std::string out;
  for (const LexiconEntry& entry : kept) {
    out += entry.headword;
    out += '\n';
  }
  return out;
}

inline std::vector<std::string> kept_lexicon_from_tsv(std::string_view tsv) {
  std::vector<std::string> words;
  for (const std::string& line : split_lines(tsv)) {
    if (line.empty()) continue;
    // Tolerate a trailing tab-separated column so filtered files round-trip.
    words.push_back(split_on(line, '\t')[0]);
  }
  return words;
}

}  // namespace spellbench
