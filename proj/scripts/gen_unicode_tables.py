#!/usr/bin/env python3
"""Regenerate include/spellbench/unicode_tables.hpp.

Emits two tables derived from the Python unicodedata database:
  - merged code point ranges whose general category is P* or S*
  - per-scalar case-fold mappings (1:1 only; scalars whose full casefold
    expands to multiple code points fall back to a 1:1 lowercase mapping
    when one exists, otherwise they fold to themselves)

Run from the repository root:  python3 scripts/gen_unicode_tables.py
"""

import sys
import unicodedata

MAX_CP = 0x110000


def punct_symbol_ranges():
    ranges = []
    start = None
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            in_set = False
        else:
            in_set = unicodedata.category(chr(cp))[0] in ("P", "S")
        if in_set and start is None:
            start = cp
        elif not in_set and start is not None:
            ranges.append((start, cp - 1))
            start = None
    if start is not None:
        ranges.append((start, MAX_CP - 1))
    return ranges


def fold_pairs():
    pairs = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        c = chr(cp)
        f = c.casefold()
        if len(f) == 1:
            if ord(f) != cp:
                pairs.append((cp, ord(f)))
            continue
        g = c.lower()
        if len(g) == 1 and ord(g) != cp:
            pairs.append((cp, ord(g)))
    return pairs


def main():
    ranges = punct_symbol_ranges()
    pairs = fold_pairs()
    out = sys.stdout
    out.write("// Generated by scripts/gen_unicode_tables.py -- do not edit by hand.\n")
    out.write("// Unicode data version: %s\n" % unicodedata.unidata_version)
    out.write("#pragma once\n\n")
    out.write("#include <cstdint>\n#include <cstddef>\n\n")
    out.write("namespace spellbench::detail {\n\n")
    out.write("inline constexpr char kUnicodeDataVersion[] = \"%s\";\n\n" % unicodedata.unidata_version)
    out.write("struct CpRange { char32_t lo; char32_t hi; };\n\n")
    out.write("// General categories P* and S*, as merged inclusive ranges.\n")
    out.write("inline constexpr CpRange kPunctSymbolRanges[] = {\n")
    for i in range(0, len(ranges), 6):
        chunk = ranges[i : i + 6]
        out.write("    " + " ".join("{0x%X,0x%X}," % r for r in chunk) + "\n")
    out.write("};\n")
    out.write("inline constexpr std::size_t kPunctSymbolRangeCount = %d;\n\n" % len(ranges))
    out.write("struct FoldPair { char32_t from; char32_t to; };\n\n")
    out.write("// Scalars whose case fold differs from the scalar itself, sorted by `from`.\n")
    out.write("inline constexpr FoldPair kFoldPairs[] = {\n")
    for i in range(0, len(pairs), 6):
        chunk = pairs[i : i + 6]
        out.write("    " + " ".join("{0x%X,0x%X}," % p for p in chunk) + "\n")
    out.write("};\n")
    out.write("inline constexpr std::size_t kFoldPairCount = %d;\n\n" % len(pairs))
    out.write("}  // namespace spellbench::detail\n")


if __name__ == "__main__":
    main()
