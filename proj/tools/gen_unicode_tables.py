#!/usr/bin/env python3
"""Regenerates include/forge/unicode_tables.hpp from Python's unicodedata.

Tables cover the BMP only; that is enough for the EN/ZH corpora this
library targets. Run and commit the output whenever the mapping policy
changes:

    python3 tools/gen_unicode_tables.py > include/forge/unicode_tables.hpp
"""

import sys
import unicodedata


def bmp():
    for cp in range(0x10000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        yield cp


def ranges_of(pred):
    out = []
    start = None
    prev = None
    for cp in bmp():
        if pred(cp):
            if start is None:
                start = cp
            prev = cp
        elif start is not None:
            out.append((start, prev))
            start = None
    if start is not None:
        out.append((start, prev))
    return out


def main():
    compat = []  # (cp, replacement string) where per-codepoint NFKC differs
    for cp in bmp():
        ch = chr(cp)
        folded = unicodedata.normalize("NFKC", ch)
        if folded != ch:
            compat.append((cp, folded))

    lower = []  # 1:1 simple lowercase mappings
    for cp in bmp():
        lo = chr(cp).lower()
        if len(lo) == 1 and lo != chr(cp):
            lower.append((cp, ord(lo)))

    punct = ranges_of(lambda cp: unicodedata.category(chr(cp)).startswith("P"))
    space = ranges_of(lambda cp: chr(cp).isspace())

    w = sys.stdout.write
    w("// Generated by tools/gen_unicode_tables.py -- do not edit by hand.\n")
    w("#pragma once\n\n")
    w("#include <cstdint>\n\n")
    w("namespace forge::unicode_tables {\n\n")

    blob = []
    offsets = []
    for _, repl in compat:
        offsets.append(len(blob))
        encoded = repl.encode("utf-8")
        blob.append(len(encoded))
        blob.extend(encoded)

    w("// Codepoints whose single-character NFKC normalization differs from\n")
    w("// the character itself, paired with byte offsets into kCompatBlob.\n")
    w(f"inline constexpr std::uint32_t kCompatKeys[{len(compat)}] = {{\n")
    w(format_list(f"0x{cp:04X}" for cp, _ in compat))
    w("};\n\n")
    w(f"inline constexpr std::uint32_t kCompatOffsets[{len(offsets)}] = {{\n")
    w(format_list(str(o) for o in offsets))
    w("};\n\n")
    w("// Each entry: one length byte followed by that many UTF-8 bytes.\n")
    w(f"inline constexpr unsigned char kCompatBlob[{len(blob)}] = {{\n")
    w(format_list(str(b) for b in blob))
    w("};\n\n")

    w(f"inline constexpr std::uint32_t kLowerKeys[{len(lower)}] = {{\n")
    w(format_list(f"0x{cp:04X}" for cp, _ in lower))
    w("};\n\n")
    w(f"inline constexpr std::uint32_t kLowerValues[{len(lower)}] = {{\n")
    w(format_list(f"0x{lo:04X}" for _, lo in lower))
    w("};\n\n")

    w("// Closed [first, last] codepoint ranges, general category P*.\n")
    w(f"inline constexpr std::uint32_t kPunctRanges[{2 * len(punct)}] = {{\n")
    w(format_list(f"0x{a:04X}, 0x{b:04X}" for a, b in punct))
    w("};\n\n")

    w("// Closed [first, last] codepoint ranges of whitespace.\n")
    w(f"inline constexpr std::uint32_t kSpaceRanges[{2 * len(space)}] = {{\n")
    w(format_list(f"0x{a:04X}, 0x{b:04X}" for a, b in space))
    w("};\n\n")

    w("}  // namespace forge::unicode_tables\n")


def format_list(items, per_line=12):
    items = list(items)
    lines = []
    for i in range(0, len(items), per_line):
        lines.append("    " + ", ".join(items[i : i + per_line]) + ",")
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    main()
