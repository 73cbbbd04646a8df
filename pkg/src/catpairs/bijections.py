"""Pair -> structure decoders and the any-to-any family converter.

Conversion has one route: encode the source value, canonicalize the
pair, decode into the target family.  Decoding either assembles a value
analytically by walking the pair's decomposition tree, or — for families
whose construction is one-way (321-avoiders, the second sequence family,
123-avoiders) — looks the canonical pair up in a memoized table built
from the family's own enumerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import grammar, structures, trees
from .encoders import (
    encode_dyck,
    encode_matching,
    encode_plane_tree,
    encode_seq1,
    encode_seq2,
    encode_staircase,
    pair_for_avoidance_class,
)
from .errors import InvariantViolation, SizeLimitError
from .grammar import pair_to_tree, tree_to_pair
from .relations import CatalanPair, canonicalize

__all__ = [
    "Family",
    "FAMILIES",
    "ALIASES",
    "family",
    "pair_to_tree",
    "tree_to_pair",
    "assemble_dyck",
    "assemble_matching",
    "assemble_plane_tree",
    "assemble_perm_312",
    "assemble_seq1",
    "assemble_staircase",
    "reference_decode",
    "decode_pair",
    "convert",
    "DEFAULT_TABLE_CAP",
]

DEFAULT_TABLE_CAP = 12


# ---------------------------------------------------------------------------
# Analytic assemblies: decomposition tree -> structure value.
# Each mirrors its encoder so that encode(assemble(t)) is isomorphic to
# tree_to_pair(t); the left subtree is the S-side block, the right the
# R-side block.


def assemble_dyck(t: trees.Tree) -> str:
    if t == trees.EMPTY:
        return ""
    return "U" + assemble_dyck(t[0]) + "D" + assemble_dyck(t[1])


def assemble_matching(t: trees.Tree) -> structures.Matching:
    """First arch spans the left part; the right part follows it."""
    if t == trees.EMPTY:
        return ()
    inner = assemble_matching(t[0])
    after = assemble_matching(t[1])
    shift = 2 * len(inner) + 2
    return (
        ((1, shift),)
        + tuple((l + 1, r + 1) for l, r in inner)
        + tuple((l + shift, r + shift) for l, r in after)
    )


def assemble_plane_tree(t: trees.Tree) -> structures.PlaneTree:
    """First child carries the left part; its siblings are the right part."""
    if t == trees.EMPTY:
        return ()
    return (assemble_plane_tree(t[0]),) + assemble_plane_tree(t[1])


def assemble_perm_312(t: trees.Tree) -> structures.Permutation:
    """The split value 1 sits between a low left block and a high right block."""
    if t == trees.EMPTY:
        return ()
    left = assemble_perm_312(t[0])
    right = assemble_perm_312(t[1])
    k = len(left)
    return (
        tuple(v + 1 for v in left) + (1,) + tuple(v + k + 1 for v in right)
    )


def assemble_seq1(t: trees.Tree) -> structures.Sequence:
    """a_1 names the left block's extent; the right block rides above it."""
    if t == trees.EMPTY:
        return ()
    left = assemble_seq1(t[0])
    right = assemble_seq1(t[1])
    k = len(left)
    return (k + 1,) + tuple(v + 1 for v in left) + tuple(v + k + 1 for v in right)


def assemble_staircase(t: trees.Tree) -> structures.Staircase:
    """The upper part is the S-side, so the tiling swaps the subtrees."""
    if t == trees.EMPTY:
        return trees.EMPTY
    return (assemble_staircase(t[1]), assemble_staircase(t[0]))


def _assemble_perm_class(pattern: str) -> Callable | None:
    steps, base = structures.pattern_transform(pattern)
    if base != "312":
        return None  # table-decoded
    back = tuple(reversed(steps))

    def assemble(t: trees.Tree) -> structures.Permutation:
        return structures.apply_steps(assemble_perm_312(t), back)

    return assemble


# ---------------------------------------------------------------------------
# Family registry


@dataclass(frozen=True)
class Family:
    """One Catalan structure family's full codec suite.

    ``assemble`` turns a decomposition tree into a value; families
    without one decode through the reference table instead.
    """

    tag: str
    parse: Callable[[str], object]
    serialize: Callable[[object], str]
    validate: Callable[[object], str | None]
    enumerate: Callable[[int], tuple]
    encode: Callable[[object], CatalanPair]
    assemble: Callable[[trees.Tree], object] | None


def _perm_family(pattern: str) -> Family:
    def parse(text: str) -> structures.Permutation:
        p = structures.parse_perm(text)
        if not structures.avoids(p, pattern):
            raise ValueError(f"permutation contains the pattern {pattern}")
        return p

    def validate(p: object) -> str | None:
        message = structures.validate_perm(p)
        if message is not None:
            return message
        if not structures.avoids(p, pattern):
            return f"permutation contains the pattern {pattern}"
        return None

    if pattern == "312":
        assemble = assemble_perm_312
    else:
        assemble = _assemble_perm_class(pattern)
    return Family(
        tag=f"perm-{pattern}",
        parse=parse,
        serialize=structures.serialize_perm,
        validate=validate,
        enumerate=lambda n: structures.enumerate_perm(n, pattern),
        encode=lambda p: pair_for_avoidance_class(p, pattern),
        assemble=assemble,
    )


def _families() -> dict[str, Family]:
    entries = [
        Family(
            "dyck",
            structures.parse_dyck,
            structures.serialize_dyck,
            structures.validate_dyck,
            structures.enumerate_dyck,
            encode_dyck,
            assemble_dyck,
        ),
        Family(
            "matching",
            structures.parse_matching,
            structures.serialize_matching,
            structures.validate_matching,
            structures.enumerate_matching,
            encode_matching,
            assemble_matching,
        ),
        Family(
            "plane-tree",
            structures.parse_plane_tree,
            structures.serialize_plane_tree,
            structures.validate_plane_tree,
            structures.enumerate_plane_tree,
            encode_plane_tree,
            assemble_plane_tree,
        ),
        _perm_family("312"),
        _perm_family("321"),
        _perm_family("231"),
        _perm_family("213"),
        _perm_family("132"),
        _perm_family("123"),
        Family(
            "seq1",
            structures.parse_seq1,
            structures.serialize_seq,
            structures.validate_seq1,
            structures.enumerate_seq1,
            encode_seq1,
            assemble_seq1,
        ),
        Family(
            "seq2",
            structures.parse_seq2,
            structures.serialize_seq,
            structures.validate_seq2,
            structures.enumerate_seq2,
            encode_seq2,
            None,
        ),
        Family(
            "staircase",
            structures.parse_staircase,
            structures.serialize_staircase,
            structures.validate_staircase,
            structures.enumerate_staircase,
            encode_staircase,
            assemble_staircase,
        ),
        Family(
            "binary-tree",
            trees.parse,
            trees.serialize,
            grammar.validate_grammar_tree,
            trees.all_trees,
            grammar.grammar_pair,
            lambda t: t,
        ),
        Family(
            "polyomino",
            grammar.parse_polyomino,
            grammar.serialize_polyomino,
            grammar.validate_polyomino,
            grammar.enumerate_polyomino,
            grammar.encode_polyomino,
            grammar.tree_to_polyomino,
        ),
    ]
    return {entry.tag: entry for entry in entries}


FAMILIES = _families()

ALIASES = {"grammar-tree": "binary-tree"}


def family(tag: str) -> Family:
    tag = ALIASES.get(tag, tag)
    if tag not in FAMILIES:
        raise ValueError(f"unknown family {tag!r}")
    return FAMILIES[tag]


# ---------------------------------------------------------------------------
# Decoding


@lru_cache(maxsize=None)
def _decode_table(tag: str, n: int) -> dict[tuple, object]:
    fam = FAMILIES[tag]
    table: dict[tuple, object] = {}
    for value in fam.enumerate(n):
        canon = canonicalize(fam.encode(value))
        key = (canon.S.rows, canon.R.rows)
        if key in table:
            raise InvariantViolation(
                f"{tag} encoder maps two size-{n} values to the same pair"
            )
        table[key] = value
    return table


def reference_decode(
    pair: CatalanPair, tag: str, max_size: int = DEFAULT_TABLE_CAP
) -> object:
    """Invert any family's encoder by exhaustive table lookup."""
    fam = family(tag)
    if pair.n > max_size:
        raise SizeLimitError(
            f"size {pair.n} exceeds the decode-table cap of {max_size}"
        )
    canon = canonicalize(pair)
    table = _decode_table(fam.tag, pair.n)
    key = (canon.S.rows, canon.R.rows)
    if key not in table:
        raise InvariantViolation(f"no {fam.tag} value of size {pair.n} encodes this pair")
    return table[key]


def decode_pair(
    pair: CatalanPair, tag: str, max_size: int = DEFAULT_TABLE_CAP
) -> object:
    """Turn a valid pair into the *tag* family's value for its class."""
    fam = family(tag)
    if fam.assemble is None:
        return reference_decode(pair, fam.tag, max_size)
    return fam.assemble(pair_to_tree(pair))


def convert(
    value: object, src: str, dst: str, max_size: int = DEFAULT_TABLE_CAP
) -> object:
    """Carry a value from one family to another through its canonical pair."""
    fsrc = family(src)
    fdst = family(dst)
    message = fsrc.validate(value)
    if message is not None:
        raise ValueError(message)
    canon = canonicalize(fsrc.encode(value))
    return decode_pair(canon.pair, fdst.tag, max_size)
