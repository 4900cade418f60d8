#!/usr/bin/env python3
"""Brute-force enumeration oracle for the OILU toolkit.

Derives the digit/glyph algebra, the seven-segment split tables and the
split:a series golden from first principles, independently of the C++
implementation. The test suites compare the library against the frozen
output of this script, never against the library itself.

Usage:
    python3 tools/split_oracle.py            # print derived values
    python3 tools/split_oracle.py --write    # also refresh tests/golden/
"""

import argparse
import os
import sys

# --- glyph algebra -----------------------------------------------------------

TOP, BOTTOM, LEFT, RIGHT = "T", "B", "L", "R"

# Glyphs as side sets; Bar is the special center stroke.
GLYPH_SIDES = {
    0: frozenset("TBLR"),         # square
    2: frozenset("BL"),           # corners, one CCW quarter turn apart
    4: frozenset("BR"),
    6: frozenset("TR"),
    8: frozenset("TL"),
    3: frozenset("LBR"),          # cups, opening toward the missing side
    5: frozenset("TBR"),
    7: frozenset("TLR"),
    9: frozenset("TLB"),
}

GLYPH_NAME = {
    0: "square", 1: "bar",
    2: "corner-bl", 4: "corner-br", 6: "corner-tr", 8: "corner-tl",
    3: "cup-up", 5: "cup-left", 7: "cup-down", 9: "cup-right",
}

# One counterclockwise quarter turn moves the top side to the left, etc.
SIDE_CCW = {"T": "L", "L": "B", "B": "R", "R": "T"}


def classify(sides, center_bar=False):
    """Side set -> OILU digit, or None for a non-OILU (extra) shape."""
    if center_bar:
        return 1 if not sides else None
    sides = frozenset(sides)
    if len(sides) == 4:
        return 0
    if len(sides) == 3:
        missing = next(iter(frozenset("TBLR") - sides))
        return {"T": 3, "B": 7, "L": 5, "R": 9}[missing]
    if len(sides) == 2:
        for d, s in GLYPH_SIDES.items():
            if len(s) == 2 and s == sides:
                return d
        return None  # opposite pair
    if len(sides) == 1:
        return 1 if next(iter(sides)) in "LR" else None
    return None


def rotate_digit(d, k=1):
    """Digit after k CCW quarter turns of its glyph."""
    for _ in range(k % 4):
        if d in (0, 1):
            continue
        d = classify(frozenset(SIDE_CCW[s] for s in GLYPH_SIDES[d]))
        assert d is not None
    return d


def facet(text, k):
    return "".join(str(rotate_digit(int(c), k)) for c in text)


def related_set(text):
    out = []
    for k in range(4):
        f = facet(text, k)
        if f not in out:
            out.append(f)
    return out


def canonical(text):
    best_k = min(range(4), key=lambda k: (facet(text, k), k))
    return facet(text, best_k), best_k


# --- seven-segment splitting -------------------------------------------------

SEGMENTS = {
    "0": "abcdef", "1": "bc", "2": "abged", "3": "abgcd",
    "4": "fgbc", "5": "afgcd", "6": "afgecd", "7": "abc",
    "8": "abcdefg", "9": "abcdfg",
    "A": "abcefg", "B": "cdefg", "C": "adef", "D": "bcdeg", "E": "adefg",
    "F": "aefg",
}

DIGITS_FOR_BASE = {10: "0123456789", 16: "0123456789ABCDEF"}

UPPER_SIDE = {"a": "T", "f": "L", "b": "R"}   # g -> B under strategies a, b
LOWER_SIDE = {"e": "L", "c": "R", "d": "B"}   # g -> T under strategies a, c


def raw_halves(digit_char, strategy):
    segs = SEGMENTS[digit_char]
    upper = {UPPER_SIDE[s] for s in segs if s in UPPER_SIDE}
    lower = {LOWER_SIDE[s] for s in segs if s in LOWER_SIDE}
    if "g" in segs:
        if strategy in ("a", "b"):
            upper.add("B")
        if strategy in ("a", "c"):
            lower.add("T")
    return frozenset(upper), frozenset(lower)


def raw_pair(digit_char, strategy):
    u, l = raw_halves(digit_char, strategy)
    return classify(u), classify(l)


def split_table(strategy, base):
    """digit_char -> (upper, lower, replaced). Extra-bearing or colliding raw
    pairs fall back to the strategy-a pair (which is always clean)."""
    digits = DIGITS_FOR_BASE[base]
    raw = {c: raw_pair(c, strategy) for c in digits}
    counts = {}
    for p in raw.values():
        if None not in p:
            counts[p] = counts.get(p, 0) + 1
    table = {}
    for c in digits:
        p = raw[c]
        needs_fallback = None in p or counts[p] > 1
        if needs_fallback:
            p = raw_pair(c, "a")
            assert None not in p, "strategy a produced an extra symbol"
        table[c] = (p[0], p[1], needs_fallback)
    pairs = [(u, l) for (u, l, _) in table.values()]
    assert len(set(pairs)) == len(pairs), f"table not injective: {strategy}/{base}"
    return table


def split_number(text, strategy, base):
    table = split_table(strategy, base)
    return "".join(f"{table[c][0]}{table[c][1]}" for c in text)


# --- derived goldens ---------------------------------------------------------

def series_seed8():
    values = ["8"]
    for _ in range(4):
        values.append(split_number(values[-1], "a", 10))
    return values


def check_everything():
    # Exactly ten glyphs, bijective digit map.
    seen = set()
    for mask in range(16):
        sides = frozenset(s for i, s in enumerate("TBLR") if mask & (1 << i))
        for bar in (False, True):
            d = classify(sides, bar)
            if d is not None:
                seen.add((d, sides, bar))
    assert len({d for d, _, _ in seen}) == 10

    # Rotation group and the published facet example.
    for d in range(10):
        assert rotate_digit(d, 4) == d
    assert facet("3172", 1) == "5194"
    assert facet("3172", 2) == "7136"
    assert facet("3172", 3) == "9158"
    assert sorted(related_set("3172")) == ["3172", "5194", "7136", "9158"]
    assert canonical("9158") == ("3172", 1)

    # Display energy: 25 OILU strokes versus 49 segments over the ten digits.
    strokes = {0: 4, 1: 1}
    strokes.update({d: 2 for d in (2, 4, 6, 8)})
    strokes.update({d: 3 for d in (3, 5, 7, 9)})
    assert sum(strokes.values()) == 25
    assert sum(len(SEGMENTS[c]) for c in "0123456789") == 49

    # Strategy a is clean and nothing ever falls back to it.
    for base in (10, 16):
        for c in DIGITS_FOR_BASE[base]:
            assert None not in raw_pair(c, "a")
        assert not any(r for (_, _, r) in split_table("a", base).values())

    # Decimal and hexadecimal tables agree on the shared digits.
    for strategy in "abc":
        t10 = split_table(strategy, 10)
        t16 = split_table(strategy, 16)
        for c in "0123456789":
            assert t10[c] == t16[c], (strategy, c)

    # Splitting doubles length; the seed-8 series therefore doubles too.
    values = series_seed8()
    assert [len(v) for v in values] == [1, 2, 4, 8, 16]


def render_tables():
    lines = ["# OILU seven-segment split tables.",
             "# Regenerate with: python3 tools/split_oracle.py --write",
             "# Columns: digit upper lower replaced"]
    for strategy in "abc":
        for base in (10, 16):
            lines.append(f"[strategy {strategy} base {base}]")
            for c, (u, l, r) in split_table(strategy, base).items():
                lines.append(f"{c} {u} {l} {int(r)}")
    return "\n".join(lines) + "\n"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--write", action="store_true",
                        help="refresh the frozen files under tests/golden/")
    args = parser.parse_args()

    check_everything()

    tables = render_tables()
    series = "\n".join(series_seed8()) + "\n"
    sys.stdout.write(tables)
    sys.stdout.write("\n[series seed 8 rule split:a steps 4]\n")
    sys.stdout.write(series)
    sys.stdout.write("\n[canonical examples]\n")
    for t in ("3172", "9158", "11", "2"):
        c, k = canonical(t)
        sys.stdout.write(f"{t} -> {c} k={k}\n")

    if args.write:
        root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        golden = os.path.join(root, "tests", "golden")
        os.makedirs(golden, exist_ok=True)
        with open(os.path.join(golden, "split_tables.txt"), "w") as f:
            f.write(tables)
        with open(os.path.join(golden, "series_seed8_splita.txt"), "w") as f:
            f.write(series)
        sys.stdout.write(f"\nwrote {golden}/split_tables.txt and series_seed8_splita.txt\n")


if __name__ == "__main__":
    main()
