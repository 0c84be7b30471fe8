#pragma once

// Deterministic synthetic fixtures shared by the unit and acceptance suites.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "spellbench/rng.hpp"

namespace fixtures {

inline std::vector<std::string> make_words(std::size_t n, const std::string& prefix = "w") {
  std::vector<std::string> words;
  words.reserve(n);
  char buf[32];
  for (std::size_t i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof(buf), "%s%06zu", prefix.c_str(), i);
    words.emplace_back(buf);
  }
  return words;
}

// Documents whose tokens are drawn from `vocab` with Zipf weights
// (weight of rank i proportional to 1/(i+1), integer-scaled).
inline std::vector<std::string> make_zipf_docs(std::size_t n_docs, const std::vector<std::string>& vocab,
                                               std::size_t tokens_per_doc, std::uint64_t seed) {
  std::vector<std::uint64_t> cumulative(vocab.size());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    total += 1'000'000 / (i + 1) + 1;
    cumulative[i] = total;
  }
  spellbench::SplitMix64 rng(seed);
  std::vector<std::string> docs;
  docs.reserve(n_docs);
  for (std::size_t d = 0; d < n_docs; ++d) {
    std::string doc;
    for (std::size_t k = 0; k < tokens_per_doc; ++k) {
      const std::uint64_t r = rng.below(total);
      const std::size_t idx = static_cast<std::size_t>(
          std::lower_bound(cumulative.begin(), cumulative.end(), r + 1) - cumulative.begin());
      if (!doc.empty()) doc.push_back(' ');
      doc += vocab[idx];
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace fixtures
