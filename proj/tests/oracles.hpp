#pragma once

// Independent reference implementations used only by tests. These must
// never call into the code paths they check.

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace oracles {

// Byte-level tokenizer for ASCII fixtures: splits on the default
// delimiter characters plus ASCII whitespace.
inline std::vector<std::string> naive_tokens(std::string_view doc) {
  static const std::string delims = "?!/:;,\\\"&()[]{}<>`";
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : doc) {
    if (std::isspace(static_cast<unsigned char>(c)) || delims.find(c) != std::string::npos) {
      if (!cur.empty()) tokens.push_back(cur), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  return tokens;
}

inline std::map<std::string, std::uint64_t> naive_token_counts(const std::vector<std::string>& docs) {
  std::map<std::string, std::uint64_t> counts;
  for (const std::string& doc : docs)
    for (const std::string& tok : naive_tokens(doc)) ++counts[tok];
  return counts;
}

// Quadratic per-(doc, word) contains check.
inline std::map<std::string, std::uint64_t> naive_doc_substring_counts(
    const std::vector<std::string>& docs, const std::vector<std::string>& words) {
  std::map<std::string, std::uint64_t> counts;
  for (const std::string& w : words) {
    std::uint64_t n = 0;
    for (const std::string& doc : docs)
      if (doc.find(w) != std::string::npos) ++n;
    if (n > 0) counts[w] = n;
  }
  return counts;
}

// Distance-only Levenshtein with a rolling row.
inline std::size_t lev_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t cost = a[i - 1] == b[j - 1] ? diag : diag + 1;
      diag = row[j];
      row[j] = std::min({cost, row[j] + 1, row[j - 1] + 1});
    }
  }
  return row[b.size()];
}

inline std::optional<std::size_t> hamming(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return std::nullopt;
  std::size_t h = 0;
  for (std::size_t i = 0; i < a.size(); ++i) h += a[i] != b[i];
  return h;
}

// Names match the production enum's to_string values so tests can
// compare against them without including the implementation.
inline constexpr char kDrop[] = "drop_only";
inline constexpr char kRepeat[] = "repeat_insertion";
inline constexpr char kAdd[] = "add_insertion";
inline constexpr char kSub[] = "substitution_only";
inline constexpr char kMixed[] = "mixed";

// For an insertion-only pair, enumerates every embedding of the target
// into the reading and collects whether each is a pure repeat (every
// inserted character equals an adjacent target character) or not.
inline void embedding_classes(std::string_view t, std::string_view r, std::size_t ti, std::size_t ri,
                              std::vector<int>& align, std::set<std::string>& classes) {
  if (ti == t.size()) {
    // Remaining reading characters are all insertions at the tail.
    std::vector<int> full = align;
    for (std::size_t k = ri; k < r.size(); ++k) full.push_back(-1);
    bool all_repeat = true;
    for (std::size_t k = 0; k < full.size(); ++k) {
      if (full[k] >= 0) continue;
      bool ok = false;
      for (std::size_t l = k; l-- > 0;)
        if (full[l] >= 0) {
          ok = t[static_cast<std::size_t>(full[l])] == r[k];
          break;
        }
      if (!ok)
        for (std::size_t l = k + 1; l < full.size(); ++l)
          if (full[l] >= 0) {
            ok = t[static_cast<std::size_t>(full[l])] == r[k];
            break;
          }
      if (!ok) {
        all_repeat = false;
        break;
      }
    }
    classes.insert(all_repeat ? kRepeat : kAdd);
    return;
  }
  if (ri == r.size()) return;
  if (r.size() - ri < t.size() - ti) return;
  if (t[ti] == r[ri]) {
    align.push_back(static_cast<int>(ti));
    embedding_classes(t, r, ti + 1, ri + 1, align, classes);
    align.pop_back();
  }
  align.push_back(-1);
  embedding_classes(t, r, ti, ri + 1, align, classes);
  align.pop_back();
}

// The set of structural classes over all minimal edit scripts, computed
// from the characterization: a deletion-only minimal script exists iff
// dist == |t|-|r| (and then every minimal script is deletion-only);
// symmetrically for insertions; a substitution-only script is minimal iff
// lengths match and dist equals the Hamming distance; otherwise every
// minimal script mixes operation kinds.
inline std::set<std::string> minimal_script_classes(std::string_view t, std::string_view r) {
  const std::size_t dist = lev_distance(t, r);
  std::set<std::string> classes;
  if (t.size() >= r.size() && dist == t.size() - r.size()) {
    classes.insert(kDrop);
    return classes;
  }
  if (r.size() > t.size() && dist == r.size() - t.size()) {
    std::vector<int> align;
    embedding_classes(t, r, 0, 0, align, classes);
    return classes;
  }
  const auto h = hamming(t, r);
  if (h && dist == *h) {
    classes.insert(kSub);
    // A same-cost mixed script may or may not exist; substitution_only is
    // the unique pure class, which is what the classifier must report.
    return classes;
  }
  classes.insert(kMixed);
  return classes;
}

}  // namespace oracles
