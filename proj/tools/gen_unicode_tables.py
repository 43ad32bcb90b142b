#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from Python's unicodedata.

The output is committed so builds never depend on the host Python's Unicode
version. Rerun only when deliberately upgrading the tables:

    python3 tools/gen_unicode_tables.py > src/unicode_tables.inc
"""

import sys
import unicodedata

MAX_CP = 0x110000


def ranges_from(pred):
    out = []
    start = None
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            ok = False
        else:
            ok = pred(chr(cp))
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def main():
    w = sys.stdout.write
    w("// Generated by tools/gen_unicode_tables.py (Unicode %s). Do not edit.\n"
      % unicodedata.unidata_version)

    letter = ranges_from(lambda c: unicodedata.category(c).startswith("L"))
    digit = ranges_from(lambda c: unicodedata.category(c) == "Nd")

    w("static const CpRange kLetterRanges[] = {\n")
    for a, b in letter:
        w("    {0x%X, 0x%X},\n" % (a, b))
    w("};\n")
    w("static const CpRange kDigitRanges[] = {\n")
    for a, b in digit:
        w("    {0x%X, 0x%X},\n" % (a, b))
    w("};\n")

    # simple lowercase: single-codepoint lower mappings only
    lower = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        lo = chr(cp).lower()
        if len(lo) == 1 and lo != chr(cp):
            lower.append((cp, ord(lo)))
    w("static const CpPair kLowerMap[] = {\n")
    for a, b in lower:
        w("    {0x%X, 0x%X},\n" % (a, b))
    w("};\n")

    # canonical (non-compatibility) decompositions, one level
    decomp = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF or 0xAC00 <= cp <= 0xD7A3:
            continue  # Hangul handled algorithmically
        d = unicodedata.decomposition(chr(cp))
        if not d or d.startswith("<"):
            continue
        parts = [int(x, 16) for x in d.split()]
        if len(parts) == 1:
            decomp.append((cp, parts[0], 0))
        elif len(parts) == 2:
            decomp.append((cp, parts[0], parts[1]))
    w("static const Decomp kDecompMap[] = {\n")
    for cp, a, b in decomp:
        w("    {0x%X, 0x%X, 0x%X},\n" % (cp, a, b))
    w("};\n")

    # combining classes
    ccc = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        c = unicodedata.combining(chr(cp))
        if c:
            ccc.append((cp, c))
    w("static const CpCcc kCccMap[] = {\n")
    for cp, c in ccc:
        w("    {0x%X, %d},\n" % (cp, c))
    w("};\n")

    # primary composites: two-element canonical decomps that recompose.
    # Exclusions are detected empirically through normalize('NFC').
    comp = []
    for cp, a, b in decomp:
        if b == 0:
            continue
        nfd = unicodedata.normalize("NFD", chr(cp))
        if unicodedata.normalize("NFC", nfd) == chr(cp):
            comp.append((a, b, cp))
    comp.sort()
    w("static const Comp kCompMap[] = {\n")
    for a, b, cp in comp:
        w("    {0x%X, 0x%X, 0x%X},\n" % (a, b, cp))
    w("};\n")


if __name__ == "__main__":
    main()
