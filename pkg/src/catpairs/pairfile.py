"""Plain-text exchange format for order pairs.

A pair file starts with a header line ``n <size>`` followed by one line
per related pair, ``S <i> <j>`` or ``R <i> <j>``, with 1-based labels.
Lines are sorted lexicographically within each relation, S before R, and
blank lines are ignored on input.  Example::

    n 2
    S 1 2

ParseError flags malformed text (bad header, bad tokens, duplicates);
ValueError flags well-formed text with impossible labels (out of range or
on the diagonal).
"""

from __future__ import annotations

from .errors import ParseError
from .relations import CatalanPair


def serialize_pair(pair: CatalanPair) -> str:
    lines = [f"n {pair.n}"]
    for name, relation in (("S", pair.S), ("R", pair.R)):
        lines.extend(
            sorted(f"{name} {i + 1} {j + 1}" for i, j in relation.pairs)
        )
    return "\n".join(lines) + "\n"


def parse_pair(text: str) -> CatalanPair:
    n: int | None = None
    pairs: dict[str, list[tuple[int, int]]] = {"S": [], "R": []}
    seen: set[tuple[str, int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n" or not tokens[1].isdigit():
                raise ParseError(f"line {lineno}: expected header 'n <size>'")
            n = int(tokens[1])
            continue
        if len(tokens) != 3 or tokens[0] not in ("S", "R"):
            raise ParseError(
                f"line {lineno}: expected 'S <i> <j>' or 'R <i> <j>'"
            )
        try:
            i, j = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise ParseError(f"line {lineno}: labels must be integers") from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(
                f"line {lineno}: labels must lie in 1..{n}, got ({i}, {j})"
            )
        if i == j:
            raise ValueError(f"line {lineno}: diagonal pair ({i}, {j})")
        key = (tokens[0], i, j)
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate pair {key}")
        seen.add(key)
        pairs[tokens[0]].append((i - 1, j - 1))
    if n is None:
        raise ParseError("empty input: missing 'n <size>' header")
    return CatalanPair.from_pairs(n, pairs["S"], pairs["R"])
