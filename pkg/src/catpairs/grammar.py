"""The three-operation node grammar and parallelogram polyominoes.

A pair of size n decomposes recursively into a distinguished label plus
two smaller pairs; reading that recursion as a binary tree (left = the
S-side block, right = the R-side block) gives the ``pair_to_tree`` /
``tree_to_pair`` round trip used everywhere as the universal
intermediate.

``grammar_pair`` rebuilds the same pairs bottom-up from per-node rules
keyed by which children are present (right child only, left child only,
or both), written out directly rather than through ``compose_pair`` so
the two routes can be checked against each other.

Parallelogram polyominoes (two non-touching lattice paths over N/E with
shared endpoints) join the tree world through a column codec: column
heights and overlaps spell a balanced U/D word, and the word's
first-return structure is the tree.
"""

from __future__ import annotations

from functools import lru_cache

from . import trees
from .errors import ParseError
from .relations import CatalanPair, Relation, compose_pair, decompose_pair


def tree_to_pair(t: trees.Tree) -> CatalanPair:
    """Fold a binary tree into a pair: each node composes its subtrees."""
    if t == trees.EMPTY:
        return CatalanPair.empty(0)
    return compose_pair(tree_to_pair(t[0]), tree_to_pair(t[1]))


def pair_to_tree(pair: CatalanPair) -> trees.Tree:
    """Recursively decompose a valid pair into its shape tree."""
    if pair.n == 0:
        return trees.EMPTY
    _, left, right = decompose_pair(pair)
    return (pair_to_tree(left), pair_to_tree(right))


def validate_grammar_tree(t: object) -> str | None:
    if not trees.is_tree(t):
        return "expected nested (left, right) tuples with () for the empty tree"
    return None


def grammar_pair(t: trees.Tree) -> CatalanPair:
    """Per-node relation rules for the three ways a node can branch.

    With the new label x and an existing block on labels Y:
    right child only -> x precedes the block: R gains {(x, y): y in Y};
    left child only  -> x follows the block:  S gains {(y, x): y in Y};
    both children    -> x sits between them: the left block S-feeds x,
    and both x and the left block R-feed the right block.
    """
    message = validate_grammar_tree(t)
    if message is not None:
        raise ValueError(message)
    return _grammar(t)


def _grammar(t: trees.Tree) -> CatalanPair:
    if t == trees.EMPTY:
        return CatalanPair.empty(0)
    left_pair = _grammar(t[0])
    right_pair = _grammar(t[1])
    k, m = left_pair.n, right_pair.n
    n = k + m + 1
    if k == 0:
        s_rows = (0,) + tuple(row << 1 for row in right_pair.S.rows)
        r_rows = (((1 << m) - 1) << 1,) + tuple(
            row << 1 for row in right_pair.R.rows
        )
    elif m == 0:
        s_rows = tuple(row | (1 << k) for row in left_pair.S.rows) + (0,)
        r_rows = left_pair.R.rows + (0,)
    else:
        block = ((1 << m) - 1) << (k + 1)
        s_rows = (
            tuple(row | (1 << k) for row in left_pair.S.rows)
            + (0,)
            + tuple(row << (k + 1) for row in right_pair.S.rows)
        )
        r_rows = (
            tuple(row | block for row in left_pair.R.rows)
            + (block,)
            + tuple(row << (k + 1) for row in right_pair.R.rows)
        )
    return CatalanPair(Relation(n, s_rows), Relation(n, r_rows))


# ---------------------------------------------------------------------------
# Parallelogram polyominoes as (upper word, lower word) over N/E

Polyomino = tuple[str, str]

EMPTY_POLYOMINO: Polyomino = ("", "")


def validate_polyomino(value: object) -> str | None:
    if (
        not isinstance(value, tuple)
        or len(value) != 2
        or not all(isinstance(w, str) for w in value)
    ):
        return "expected a pair (upper word, lower word)"
    upper, lower = value
    if value == EMPTY_POLYOMINO:
        return None
    if any(c not in "NE" for c in upper + lower):
        return "paths may only use the letters N and E"
    if len(upper) != len(lower):
        return "upper and lower paths must have the same length"
    if upper.count("N") != lower.count("N"):
        return "paths must end at the same point"
    if upper == lower:
        return "paths must be distinct"
    for t in range(1, len(upper)):
        if upper[:t].count("N") <= lower[:t].count("N"):
            return f"paths touch after {t} steps, before the endpoint"
    return None


def parse_polyomino(text: str) -> Polyomino:
    parts = text.strip().split(";")
    if len(parts) != 2:
        raise ParseError("expected 'upper;lower' with exactly one ';'")
    if any(c not in "NE" for part in parts for c in part):
        raise ParseError("paths may only use the letters N and E")
    value = (parts[0], parts[1])
    message = validate_polyomino(value)
    if message is not None:
        raise ValueError(message)
    return value


def serialize_polyomino(value: Polyomino) -> str:
    return f"{value[0]};{value[1]}"


def polyomino_size(value: Polyomino) -> int:
    """Semi-perimeter minus one, i.e. path length minus one."""
    return max(len(value[0]) - 1, 0)


def _heights_before_east(word: str) -> tuple[int, ...]:
    """Number of N steps seen before each E step."""
    heights = []
    seen = 0
    for letter in word:
        if letter == "E":
            heights.append(seen)
        else:
            seen += 1
    return tuple(heights)


def polyomino_to_tree(value: Polyomino) -> trees.Tree:
    """Column codec: heights and overlaps spell a balanced word.

    Column i spans h_i cells and shares s_i rows with column i+1; the
    word U^h_1 [D^(h_i-s_i+1) U^(h_{i+1}-s_i+1)]... D^h_w is balanced
    with one U per size unit, and its first-return tree is the result.
    """
    message = validate_polyomino(value)
    if message is not None:
        raise ValueError(message)
    if value == EMPTY_POLYOMINO:
        return trees.EMPTY
    tops = _heights_before_east(value[0])
    bottoms = _heights_before_east(value[1])
    heights = [t - b for t, b in zip(tops, bottoms)]
    overlaps = [tops[i] - bottoms[i + 1] for i in range(len(tops) - 1)]
    chunks = ["U" * heights[0]]
    for i, s in enumerate(overlaps):
        chunks.append("D" * (heights[i] - s + 1))
        chunks.append("U" * (heights[i + 1] - s + 1))
    chunks.append("D" * heights[-1])
    return trees.from_dyck_word("".join(chunks))


def _runs(word: str) -> tuple[list[int], list[int]]:
    """Lengths of the alternating maximal U-runs and D-runs."""
    u_runs: list[int] = []
    d_runs: list[int] = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        (u_runs if word[i] == "U" else d_runs).append(j - i)
        i = j
    return u_runs, d_runs


def tree_to_polyomino(t: trees.Tree) -> Polyomino:
    """Inverse of :func:`polyomino_to_tree`."""
    if t == trees.EMPTY:
        return EMPTY_POLYOMINO
    u_runs, d_runs = _runs(trees.to_dyck_word(t))
    heights = [u_runs[0]]
    for i in range(1, len(u_runs)):
        heights.append(heights[i - 1] - d_runs[i - 1] + u_runs[i])
    overlaps = [heights[i] - d_runs[i] + 1 for i in range(len(heights) - 1)]
    bottoms = [0]
    for i, s in enumerate(overlaps):
        bottoms.append(bottoms[i] + heights[i] - s)
    tops = [b + h for b, h in zip(bottoms, heights)]
    total = tops[-1]
    upper = "".join(
        "N" * (tops[i] - (tops[i - 1] if i else 0)) + "E"
        for i in range(len(tops))
    )
    bottoms.append(total)
    lower = "".join(
        "E" + "N" * (bottoms[i + 1] - bottoms[i]) for i in range(len(tops))
    )
    return (upper, lower)


@lru_cache(maxsize=None)
def enumerate_polyomino(n: int) -> tuple[Polyomino, ...]:
    return tuple(
        sorted(
            (tree_to_polyomino(t) for t in trees.all_trees(n)),
            key=serialize_polyomino,
        )
    )


def encode_polyomino(value: Polyomino) -> CatalanPair:
    message = validate_polyomino(value)
    if message is not None:
        raise ValueError(message)
    return grammar_pair(polyomino_to_tree(value))
