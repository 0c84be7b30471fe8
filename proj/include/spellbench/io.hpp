#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spellbench/error.hpp"

#include "json.hpp"

namespace spellbench {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, std::string_view data) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.emplace_back(text.substr(start));
      break;
    }
    std::string line(text.substr(start, nl - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = nl + 1;
  }
  return lines;
}

inline std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t p = s.find(sep, start);
    if (p == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      return parts;
    }
    parts.emplace_back(s.substr(start, p - start));
    start = p + 1;
  }
}

enum class CorpusFormat { Jsonl, PlainLines };

// Streams documents one per line: either raw text or JSONL objects with a
// required "text" field. The callback returns false to stop early.
// Undecodable lines are tallied, never fatal.
struct StreamStats {
  std::uint64_t docs_emitted = 0;
  std::uint64_t docs_skipped = 0;
};

inline StreamStats stream_documents(std::istream& in, CorpusFormat format,
                                    std::uint64_t doc_limit,
                                    const std::function<bool(std::string&&)>& sink) {
  StreamStats stats;
  std::string line;
  while (stats.docs_emitted < doc_limit && std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (format == CorpusFormat::PlainLines) {
      ++stats.docs_emitted;
      if (!sink(std::move(line))) break;
      continue;
    }
    nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("text") || !doc["text"].is_string()) {
      ++stats.docs_skipped;
      continue;
    }
    ++stats.docs_emitted;
    if (!sink(std::move(doc["text"].get_ref<std::string&>()))) break;
  }
  return stats;
}

inline StreamStats stream_documents_file(const std::filesystem::path& path, CorpusFormat format,
                                         std::uint64_t doc_limit,
                                         const std::function<bool(std::string&&)>& sink) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return stream_documents(in, format, doc_limit, sink);
}

}  // namespace spellbench
