#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <istream>
#include <memory>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include "spellbench/error.hpp"
#include "spellbench/io.hpp"
#include "spellbench/unicode.hpp"
#include "spellbench/version.hpp"

namespace spellbench {

enum class CountingMode { Delimited, DocSubstring };

inline const char* to_string(CountingMode m) {
  return m == CountingMode::Delimited ? "delimited" : "doc_substring";
}

inline CountingMode counting_mode_from_string(std::string_view s) {
  if (s == "delimited") return CountingMode::Delimited;
  if (s == "doc_substring") return CountingMode::DocSubstring;
  throw ParseError("unknown counting mode: " + std::string(s));
}

// Word-counting settings for one language. The default delimiter set is
// reproduced exactly; tokens keep embedded periods, apostrophes, hyphens
// and asterisks because those characters are not in it.
struct LangConfig {
  std::string language_code = "en";
  CountingMode counting_mode = CountingMode::Delimited;
  std::set<char32_t> delimiters = default_delimiters();
  std::optional<std::uint64_t> doc_limit;
  bool case_sensitive = true;

  static std::set<char32_t> default_delimiters() {
    return {U'?', U'!', U'/', U':', U';', U',', U'\\', U'"', U'&',
            U'(', U')', U'[', U']', U'{', U'}', U'<', U'>', U'`'};
  }

  // zh and th (by primary subtag) count document frequency of substrings;
  // every other language splits on delimiters. Default corpus subset
  // sizes: 140M documents for English, 1M for the rest.
  static LangConfig default_profile(std::string_view language_code) {
    LangConfig cfg;
    cfg.language_code = std::string(language_code);
    const std::string primary(language_code.substr(0, language_code.find('-')));
    if (primary == "zh" || primary == "th") {
      cfg.counting_mode = CountingMode::DocSubstring;
      cfg.delimiters.clear();
    }
    cfg.doc_limit = (primary == "en") ? 140'000'000ull : 1'000'000ull;
    return cfg;
  }

  void validate() const {
    if (counting_mode == CountingMode::Delimited && delimiters.empty())
      throw ConfigError("delimited counting requires a non-empty delimiter set");
  }
};

struct Provenance {
  std::string corpus_id;
  std::optional<std::uint64_t> doc_limit;
  std::string toolkit_version = kVersion;
  std::string created;  // ISO-8601; empty means not recorded
  std::uint64_t docs_skipped = 0;
};

// Immutable after construction; merge-safe value type.
struct FrequencyTable {
  std::string language_code;
  CountingMode counting_mode = CountingMode::Delimited;
  std::unordered_map<std::string, std::uint64_t> entries;
  std::uint64_t docs_processed = 0;
  Provenance provenance;

  std::uint64_t count_of(const std::string& word) const {
    auto it = entries.find(word);
    return it == entries.end() ? 0 : it->second;
  }

  // Rows sorted by (count desc, word asc); the canonical emit order.
  std::vector<std::pair<std::string, std::uint64_t>> sorted_rows() const {
    std::vector<std::pair<std::string, std::uint64_t>> rows(entries.begin(), entries.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    return rows;
  }
};

// Maximal substrings containing no delimiter and no Unicode whitespace.
inline std::vector<std::string> segment_delimited(std::string_view text, const LangConfig& config) {
  if (config.counting_mode != CountingMode::Delimited)
    throw ContractError("segment_delimited requires delimited counting mode");
  std::vector<std::string> tokens;
  std::string current;
  std::size_t i = 0;
  while (i < text.size()) {
    char32_t cp = 0;
    if (!uni::decode_scalar(text, i, cp)) cp = uni::kReplacement;
    if (uni::is_whitespace(cp) || config.delimiters.count(cp) > 0) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      uni::append_scalar(current, config.case_sensitive ? cp : uni::fold_scalar(cp));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

namespace detail {

// Multi-pattern substring matcher over UTF-8 bytes. Byte-level matches of
// well-formed UTF-8 patterns coincide with scalar-level substring matches.
class AhoCorasick {
 public:
  explicit AhoCorasick(const std::vector<std::string>& patterns) {
    nodes_.emplace_back();
    for (std::size_t id = 0; id < patterns.size(); ++id) {
      const std::string& p = patterns[id];
      if (p.empty()) throw ConfigError("empty substring pattern");
      int node = 0;
      for (unsigned char b : p) {
        auto it = nodes_[static_cast<std::size_t>(node)].next.find(b);
        if (it == nodes_[static_cast<std::size_t>(node)].next.end()) {
          nodes_.emplace_back();
          nodes_[static_cast<std::size_t>(node)].next.emplace(b, static_cast<int>(nodes_.size() - 1));
          node = static_cast<int>(nodes_.size() - 1);
        } else {
          node = it->second;
        }
      }
      nodes_[static_cast<std::size_t>(node)].pattern = static_cast<int>(id);
    }
    build_links();
  }

  std::size_t pattern_count() const { return pattern_count_; }

  // Marks each pattern occurring in `text` at least once: seen[id] = stamp.
  void mark_matches(std::string_view text, std::vector<std::uint64_t>& seen, std::uint64_t stamp) const {
    int node = 0;
    for (unsigned char b : text) {
      node = step(node, b);
      for (int v = node; v != 0; v = nodes_[static_cast<std::size_t>(v)].output_link) {
        const Node& n = nodes_[static_cast<std::size_t>(v)];
        if (n.pattern < 0) continue;
        if (seen[static_cast<std::size_t>(n.pattern)] == stamp) break;  // chain already collected
        seen[static_cast<std::size_t>(n.pattern)] = stamp;
      }
    }
  }

 private:
  struct Node {
    std::unordered_map<unsigned char, int> next;
    int fail = 0;
    int output_link = 0;  // nearest suffix node that ends a pattern
    int pattern = -1;
  };

  int step(int node, unsigned char b) const {
    for (;;) {
      const Node& n = nodes_[static_cast<std::size_t>(node)];
      auto it = n.next.find(b);
      if (it != n.next.end()) return it->second;
      if (node == 0) return 0;
      node = n.fail;
    }
  }

  void build_links() {
    std::deque<int> queue;
    for (auto& [b, child] : nodes_[0].next) {
      nodes_[static_cast<std::size_t>(child)].fail = 0;
      queue.push_back(child);
    }
    pattern_count_ = 0;
    for (const Node& n : nodes_)
      if (n.pattern >= 0) ++pattern_count_;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (auto& [b, child] : nodes_[static_cast<std::size_t>(u)].next) {
        int f = nodes_[static_cast<std::size_t>(u)].fail;
        f = step(f, b);
        if (f == child) f = 0;
        nodes_[static_cast<std::size_t>(child)].fail = f;
        const Node& fn = nodes_[static_cast<std::size_t>(f)];
        nodes_[static_cast<std::size_t>(child)].output_link = fn.pattern >= 0 ? f : fn.output_link;
        queue.push_back(child);
      }
    }
  }

  std::vector<Node> nodes_;
  std::size_t pattern_count_ = 0;
};

inline void count_tokens_into(std::string_view doc, const LangConfig& config,
                              std::unordered_map<std::string, std::uint64_t>& accum) {
  for (std::string& tok : segment_delimited(doc, config)) ++accum[std::move(tok)];
}

}  // namespace detail

// Sums per-shard tables. Order-independent; rejects mode/language mixes.
inline FrequencyTable merge_tables(const std::vector<FrequencyTable>& parts) {
  if (parts.empty()) throw ConfigError("merge_tables needs at least one part");
  FrequencyTable out;
  out.language_code = parts.front().language_code;
  out.counting_mode = parts.front().counting_mode;
  out.provenance = parts.front().provenance;
  out.provenance.docs_skipped = 0;
  for (const FrequencyTable& part : parts) {
    if (part.language_code != out.language_code)
      throw ConfigError("merge_tables: language mismatch (" + part.language_code + " vs " + out.language_code + ")");
    if (part.counting_mode != out.counting_mode) throw ConfigError("merge_tables: counting mode mismatch");
    out.docs_processed += part.docs_processed;
    out.provenance.docs_skipped += part.provenance.docs_skipped;
    for (const auto& [word, count] : part.entries) out.entries[word] += count;
  }
  return out;
}

// Pull-based document source; returns false when exhausted.
using DocProvider = std::function<bool(std::string&)>;

inline DocProvider doc_provider_from(const std::vector<std::string>& docs) {
  auto index = std::make_shared<std::size_t>(0);
  return [&docs, index](std::string& out) {
    if (*index >= docs.size()) return false;
    out = docs[(*index)++];
    return true;
  };
}

inline DocProvider doc_provider_from_stream(std::istream& in, CorpusFormat format, std::uint64_t& skipped) {
  return [&in, format, &skipped](std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (format == CorpusFormat::PlainLines) {
        out = std::move(line);
        return true;
      }
      nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
      if (doc.is_discarded() || !doc.is_object() || !doc.contains("text") || !doc["text"].is_string()) {
        ++skipped;
        continue;
      }
      out = std::move(doc["text"].get_ref<std::string&>());
      return true;
    }
    return false;
  };
}

// Token-occurrence counting across at most doc_limit documents. Documents
// are consumed in batches; each batch is split across `workers` threads
// whose partial tables are summed, so any worker count produces identical
// entries.
inline FrequencyTable count_delimited(const DocProvider& docs, const LangConfig& config,
                                      unsigned workers = 1, std::size_t batch_size = 2048) {
  config.validate();
  if (config.counting_mode != CountingMode::Delimited)
    throw ContractError("count_delimited requires delimited counting mode");
  if (workers == 0) workers = 1;

  FrequencyTable table;
  table.language_code = config.language_code;
  table.counting_mode = CountingMode::Delimited;
  table.provenance.doc_limit = config.doc_limit;

  const std::uint64_t limit = config.doc_limit.value_or(UINT64_MAX);
  std::vector<std::string> batch;
  batch.reserve(batch_size);
  std::string doc;
  bool more = true;
  while (more && table.docs_processed < limit) {
    batch.clear();
    while (batch.size() < batch_size && table.docs_processed + batch.size() < limit) {
      if (!docs(doc)) {
        more = false;
        break;
      }
      batch.push_back(std::move(doc));
    }
    if (batch.empty()) break;

    const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(workers, batch.size()));
    std::vector<std::unordered_map<std::string, std::uint64_t>> partials(n_threads);
    std::vector<std::thread> threads;
    const std::size_t chunk = (batch.size() + n_threads - 1) / n_threads;
    for (unsigned t = 0; t < n_threads; ++t) {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(batch.size(), lo + chunk);
      threads.emplace_back([&, t, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) detail::count_tokens_into(batch[i], config, partials[t]);
      });
    }
    for (auto& th : threads) th.join();
    for (auto& partial : partials)
      for (auto& [word, count] : partial) table.entries[word] += count;
    table.docs_processed += batch.size();
  }
  return table;
}

inline FrequencyTable count_delimited(const std::vector<std::string>& docs, const LangConfig& config,
                                      unsigned workers = 1) {
  return count_delimited(doc_provider_from(docs), config, workers);
}

// Document-frequency counting: entries[w] = number of documents containing
// w as a contiguous substring, each document scanned once.
inline FrequencyTable count_doc_substring(const DocProvider& docs, const std::vector<std::string>& words,
                                          const LangConfig& config, unsigned workers = 1,
                                          std::size_t batch_size = 1024) {
  if (config.counting_mode != CountingMode::DocSubstring)
    throw ContractError("count_doc_substring requires doc_substring counting mode");
  if (words.empty()) throw ContractError("count_doc_substring requires a non-empty word set");
  if (workers == 0) workers = 1;

  // Dedupe patterns; counts are reported per distinct word.
  std::vector<std::string> patterns;
  patterns.reserve(words.size());
  {
    std::set<std::string> uniq;
    for (const std::string& w : words) {
      const std::string key = config.case_sensitive ? w : uni::case_fold(w);
      if (!key.empty() && uniq.insert(key).second) patterns.push_back(key);
    }
  }
  if (patterns.empty()) throw ContractError("count_doc_substring: all candidate words were empty");
  const detail::AhoCorasick matcher(patterns);

  FrequencyTable table;
  table.language_code = config.language_code;
  table.counting_mode = CountingMode::DocSubstring;
  table.provenance.doc_limit = config.doc_limit;

  std::vector<std::uint64_t> doc_freq(patterns.size(), 0);
  const std::uint64_t limit = config.doc_limit.value_or(UINT64_MAX);
  std::vector<std::string> batch;
  batch.reserve(batch_size);
  std::string doc;
  bool more = true;
  while (more && table.docs_processed < limit) {
    batch.clear();
    while (batch.size() < batch_size && table.docs_processed + batch.size() < limit) {
      if (!docs(doc)) {
        more = false;
        break;
      }
      batch.push_back(std::move(doc));
    }
    if (batch.empty()) break;

    const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(workers, batch.size()));
    std::vector<std::vector<std::uint64_t>> partials(n_threads, std::vector<std::uint64_t>(patterns.size(), 0));
    std::vector<std::thread> threads;
    const std::size_t chunk = (batch.size() + n_threads - 1) / n_threads;
    for (unsigned t = 0; t < n_threads; ++t) {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(batch.size(), lo + chunk);
      threads.emplace_back([&, t, lo, hi] {
        std::vector<std::uint64_t> seen(patterns.size(), 0);
        std::uint64_t stamp = 0;
        for (std::size_t i = lo; i < hi; ++i) {
          ++stamp;
          const std::string text = config.case_sensitive ? batch[i] : uni::case_fold(batch[i]);
          matcher.mark_matches(text, seen, stamp);
          for (std::size_t p = 0; p < patterns.size(); ++p)
            if (seen[p] == stamp) ++partials[t][p];
        }
      });
    }
    for (auto& th : threads) th.join();
    for (const auto& partial : partials)
      for (std::size_t p = 0; p < patterns.size(); ++p) doc_freq[p] += partial[p];
    table.docs_processed += batch.size();
  }

  for (std::size_t p = 0; p < patterns.size(); ++p)
    if (doc_freq[p] > 0) table.entries[patterns[p]] = doc_freq[p];
  return table;
}

inline FrequencyTable count_doc_substring(const std::vector<std::string>& docs,
                                          const std::vector<std::string>& words, const LangConfig& config,
                                          unsigned workers = 1) {
  return count_doc_substring(doc_provider_from(docs), words, config, workers);
}

// ---- persistence ----------------------------------------------------------

// TSV `word<TAB>count`, sorted by (count desc, word asc), preceded by a
// `#`-prefixed provenance header block.
inline std::string frequency_table_to_tsv(const FrequencyTable& table) {
  std::string out;
  out += "# spellbench frequency table\n";
  out += "# language: " + table.language_code + "\n";
  out += "# counting_mode: " + std::string(to_string(table.counting_mode)) + "\n";
  if (!table.provenance.corpus_id.empty()) out += "# corpus: " + table.provenance.corpus_id + "\n";
  if (table.provenance.doc_limit) out += "# doc_limit: " + std::to_string(*table.provenance.doc_limit) + "\n";
  out += "# docs_processed: " + std::to_string(table.docs_processed) + "\n";
  out += "# docs_skipped: " + std::to_string(table.provenance.docs_skipped) + "\n";
  out += "# toolkit_version: " + table.provenance.toolkit_version + "\n";
  if (!table.provenance.created.empty()) out += "# created: " + table.provenance.created + "\n";
  for (const auto& [word, count] : table.sorted_rows()) {
    out += word;
    out += '\t';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

inline FrequencyTable frequency_table_from_tsv(std::string_view text) {
  FrequencyTable table;
  bool saw_mode = false;
  for (const std::string& line : split_lines(text)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::size_t colon = line.find(':');
      if (colon == std::string::npos) continue;
      std::string key = line.substr(1, colon - 1);
      std::string value = line.substr(colon + 1);
      key.erase(0, key.find_first_not_of(' '));
      key.erase(key.find_last_not_of(' ') + 1);
      value.erase(0, value.find_first_not_of(' '));
      if (key == "language") table.language_code = value;
      else if (key == "counting_mode") { table.counting_mode = counting_mode_from_string(value); saw_mode = true; }
      else if (key == "corpus") table.provenance.corpus_id = value;
      else if (key == "doc_limit") table.provenance.doc_limit = std::stoull(value);
      else if (key == "docs_processed") table.docs_processed = std::stoull(value);
      else if (key == "docs_skipped") table.provenance.docs_skipped = std::stoull(value);
      else if (key == "toolkit_version") table.provenance.toolkit_version = value;
      else if (key == "created") table.provenance.created = value;
      continue;
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("frequency table row missing tab: " + line);
    const std::string word = line.substr(0, tab);
    std::uint64_t count = 0;
    try {
      count = std::stoull(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw ParseError("frequency table row has a non-numeric count: " + line);
    }
    if (count == 0) throw ParseError("frequency table row with zero count: " + line);
    table.entries[word] = count;
  }
  if (!saw_mode && table.language_code.empty() && table.entries.empty())
    throw ParseError("empty frequency table input");
  return table;
}

}  // namespace spellbench
