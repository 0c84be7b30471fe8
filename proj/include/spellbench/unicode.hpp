#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spellbench/error.hpp"
#include "spellbench/unicode_tables.hpp"

namespace spellbench::uni {

inline constexpr char32_t kReplacement = 0xFFFD;

// The Unicode White_Space property, enumerated.
inline constexpr char32_t kWhitespace[] = {
    0x0009, 0x000A, 0x000B, 0x000C, 0x000D, 0x0020, 0x0085, 0x00A0, 0x1680,
    0x2000, 0x2001, 0x2002, 0x2003, 0x2004, 0x2005, 0x2006, 0x2007, 0x2008,
    0x2009, 0x200A, 0x2028, 0x2029, 0x202F, 0x205F, 0x3000,
};

inline bool is_whitespace(char32_t cp) {
  for (char32_t w : kWhitespace)
    if (cp == w) return true;
  return false;
}

// General category is P* or S*.
inline bool is_punct_or_symbol(char32_t cp) {
  const auto* begin = detail::kPunctSymbolRanges;
  const auto* end = begin + detail::kPunctSymbolRangeCount;
  auto it = std::upper_bound(begin, end, cp, [](char32_t v, const detail::CpRange& r) {
    return v < r.lo;
  });
  if (it == begin) return false;
  --it;
  return cp >= it->lo && cp <= it->hi;
}

// Per-scalar case fold (1:1 mappings only; see scripts/gen_unicode_tables.py).
inline char32_t fold_scalar(char32_t cp) {
  const auto* begin = detail::kFoldPairs;
  const auto* end = begin + detail::kFoldPairCount;
  auto it = std::lower_bound(begin, end, cp, [](const detail::FoldPair& p, char32_t v) {
    return p.from < v;
  });
  if (it != end && it->from == cp) return it->to;
  return cp;
}

// Decodes the scalar value starting at s[i]; advances i past it.
// Returns false on an invalid byte sequence (i is advanced by one byte).
inline bool decode_scalar(std::string_view s, std::size_t& i, char32_t& out) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    out = b0;
    ++i;
    return true;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return false;
  }
  if (i + static_cast<std::size_t>(len) > s.size()) {
    ++i;
    return false;
  }
  for (int k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return false;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  // Reject overlong forms, surrogates, and out-of-range values.
  static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++i;
    return false;
  }
  i += static_cast<std::size_t>(len);
  out = cp;
  return true;
}

inline void append_scalar(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Strict decode; throws ParseError on invalid UTF-8.
inline std::vector<char32_t> to_scalars(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    char32_t cp = 0;
    if (!decode_scalar(s, i, cp)) throw ParseError("invalid UTF-8 at byte " + std::to_string(i - 1));
    out.push_back(cp);
  }
  return out;
}

inline std::string from_scalars(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append_scalar(out, cp);
  return out;
}

// Lenient decode: invalid bytes become U+FFFD. Used on raw corpus text.
inline std::vector<char32_t> to_scalars_lossy(std::string_view s, bool* had_errors = nullptr) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    char32_t cp = 0;
    if (!decode_scalar(s, i, cp)) {
      cp = kReplacement;
      if (had_errors) *had_errors = true;
    }
    out.push_back(cp);
  }
  return out;
}

inline std::size_t scalar_length(std::string_view s) { return to_scalars(s).size(); }

inline bool contains_whitespace(std::string_view s) {
  for (char32_t cp : to_scalars(s))
    if (is_whitespace(cp)) return true;
  return false;
}

inline bool all_punct_or_symbol(std::string_view s) {
  for (char32_t cp : to_scalars(s))
    if (!is_punct_or_symbol(cp)) return false;
  return true;
}

inline std::string case_fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : to_scalars(s)) append_scalar(out, fold_scalar(cp));
  return out;
}

// Trims Unicode whitespace from both ends.
inline std::string trim(std::string_view s) {
  auto cps = to_scalars(s);
  std::size_t lo = 0, hi = cps.size();
  while (lo < hi && is_whitespace(cps[lo])) ++lo;
  while (hi > lo && is_whitespace(cps[hi - 1])) --hi;
  return from_scalars(std::vector<char32_t>(cps.begin() + static_cast<std::ptrdiff_t>(lo),
                                            cps.begin() + static_cast<std::ptrdiff_t>(hi)));
}

}  // namespace spellbench::uni
