"""Binary trees as plain nested tuples.

A tree is either the empty tuple ``()`` or a pair ``(left, right)`` of trees.
The textual form writes the empty tree as ``e`` and an internal node as
``(left,right)`` with no whitespace, e.g. ``((e,e),e)`` for the two-node
tree whose root has a left child only.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import ParseError

Tree = tuple  # () or (Tree, Tree)

EMPTY: Tree = ()


def is_tree(value: object) -> bool:
    """True if *value* is a well-formed binary tree tuple."""
    if value == ():
        return True
    return (
        isinstance(value, tuple)
        and len(value) == 2
        and is_tree(value[0])
        and is_tree(value[1])
    )


def size(tree: Tree) -> int:
    """Number of internal nodes."""
    if tree == ():
        return 0
    return 1 + size(tree[0]) + size(tree[1])


def serialize(tree: Tree) -> str:
    if tree == ():
        return "e"
    return "(" + serialize(tree[0]) + "," + serialize(tree[1]) + ")"


def parse(text: str) -> Tree:
    """Inverse of :func:`serialize`.  Raises ParseError on malformed input."""
    s = text.strip()
    tree, pos = _parse_at(s, 0)
    if pos != len(s):
        raise ParseError(f"trailing characters at offset {pos}: {s[pos:]!r}")
    return tree


def _parse_at(s: str, pos: int) -> tuple[Tree, int]:
    if pos >= len(s):
        raise ParseError("unexpected end of input")
    if s[pos] == "e":
        return EMPTY, pos + 1
    if s[pos] != "(":
        raise ParseError(f"expected 'e' or '(' at offset {pos}, got {s[pos]!r}")
    left, pos = _parse_at(s, pos + 1)
    if pos >= len(s) or s[pos] != ",":
        raise ParseError(f"expected ',' at offset {pos}")
    right, pos = _parse_at(s, pos + 1)
    if pos >= len(s) or s[pos] != ")":
        raise ParseError(f"expected ')' at offset {pos}")
    return (left, right), pos + 1


@lru_cache(maxsize=None)
def all_trees(n: int) -> tuple[Tree, ...]:
    """All binary trees with *n* internal nodes, sorted by textual form."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    if n == 0:
        return (EMPTY,)
    out = []
    for k in range(n):
        for left in all_trees(k):
            for right in all_trees(n - 1 - k):
                out.append((left, right))
    return tuple(sorted(out, key=serialize))


def to_dyck_word(tree: Tree) -> str:
    """Balanced word over U/D: a node maps to U <left> D <right>."""
    if tree == ():
        return ""
    return "U" + to_dyck_word(tree[0]) + "D" + to_dyck_word(tree[1])


def from_dyck_word(word: str) -> Tree:
    """Inverse of :func:`to_dyck_word` (first-return factorisation)."""
    tree, pos = _tree_at(word, 0)
    if pos != len(word):
        raise ValueError(f"unbalanced word: unmatched 'D' at position {pos}")
    return tree


def _tree_at(word: str, pos: int) -> tuple[Tree, int]:
    if pos >= len(word) or word[pos] == "D":
        return EMPTY, pos
    if word[pos] != "U":
        raise ValueError(f"unexpected letter {word[pos]!r} at position {pos}")
    left, pos = _tree_at(word, pos + 1)
    if pos >= len(word) or word[pos] != "D":
        raise ValueError(f"unbalanced word: unmatched 'U'")
    right, pos = _tree_at(word, pos + 1)
    return (left, right), pos
