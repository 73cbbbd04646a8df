"""Strict order pairs on {0, ..., n-1} and their composition calculus.

The central object is a pair (S, R) of binary relations subject to four
axioms:

  (i)   S and R are strict orders (irreflexive and transitive);
  (ii)  any two distinct labels i, j are related somehow: at least one of
        i S j, i R j, j S i, j R i holds;
  (iii) at most one of those four holds (so with (ii): exactly one);
  (iv)  x S y and y R z together force x R z.

Valid pairs of every size compose and decompose like binary trees, which
is what the rest of the package exploits.

Relations are stored as bitset rows: bit j of ``rows[i]`` is set iff the
pair (i, j) belongs to the relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from .errors import InvariantViolation


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Relation:
    """An irreflexive binary relation on {0, ..., n-1}, one bitmask per row."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("size must be nonnegative")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows):
            if row < 0 or row >> self.n:
                raise ValueError(f"row {i} has bits outside 0..{self.n - 1}")
            if row >> i & 1:
                raise ValueError(f"diagonal entry ({i}, {i}) is not allowed")

    @classmethod
    def empty(cls, n: int) -> "Relation":
        return cls(n, (0,) * n)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        rows = [0] * n
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"pair ({i}, {j}) out of range for size {n}")
            if i == j:
                raise ValueError(f"diagonal pair ({i}, {i}) is not allowed")
            rows[i] |= 1 << j
        return cls(n, tuple(rows))

    @property
    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, j) for i in range(self.n) for j in bits(self.rows[i])
        )

    def __contains__(self, pair: tuple[int, int]) -> bool:
        i, j = pair
        return 0 <= i < self.n and 0 <= j < self.n and bool(self.rows[i] >> j & 1)

    def cols(self) -> tuple[int, ...]:
        """Column masks: bit i of cols()[j] is set iff (i, j) holds."""
        cols = [0] * self.n
        for i, row in enumerate(self.rows):
            for j in bits(row):
                cols[j] |= 1 << i
        return tuple(cols)

    def restrict(self, labels: Iterable[int]) -> "Relation":
        """Induced relation on *labels*, renumbered in increasing order."""
        kept = sorted(set(labels))
        index = {old: new for new, old in enumerate(kept)}
        rows = [0] * len(kept)
        for old in kept:
            for j in bits(self.rows[old]):
                if j in index:
                    rows[index[old]] |= 1 << index[j]
        return Relation(len(kept), tuple(rows))

    def relabel(self, image: Iterable[int]) -> "Relation":
        """Rename label i to image[i]; *image* must be a permutation."""
        image = tuple(image)
        if sorted(image) != list(range(self.n)):
            raise ValueError("relabelling must be a permutation of the labels")
        rows = [0] * self.n
        for i, row in enumerate(self.rows):
            for j in bits(row):
                rows[image[i]] |= 1 << image[j]
        return Relation(self.n, tuple(rows))


def transitivity_witness(rel: Relation) -> tuple[int, int] | None:
    """The smallest (x, z) with x->y->z but no x->z for some y, else None."""
    for x in range(rel.n):
        missing = 0
        for y in bits(rel.rows[x]):
            missing |= rel.rows[y] & ~rel.rows[x]
        if missing:
            return (x, (missing & -missing).bit_length() - 1)
    return None


def is_strict_order(rel: Relation) -> bool:
    """Irreflexivity is structural, so this just checks transitivity."""
    return transitivity_witness(rel) is None


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of checking the four pair axioms.

    ``violations`` holds at most one witness per axiom, keyed by the axiom
    id: "i:S", "i:R" (a missing transitive pair), "ii" (an unrelated pair),
    "iii" (a doubly related pair), "iv" (a triple x, y, z with x S y and
    y R z but no x R z).
    """

    valid: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...]


def check_axioms(S: Relation, R: Relation) -> AxiomReport:
    if S.n != R.n:
        raise ValueError("S and R must live on the same label set")
    n = S.n
    violations: list[tuple[str, tuple[int, ...]]] = []

    witness = transitivity_witness(S)
    if witness is not None:
        violations.append(("i:S", witness))
    witness = transitivity_witness(R)
    if witness is not None:
        violations.append(("i:R", witness))

    unrelated = doubled = None
    for i in range(n):
        for j in range(i + 1, n):
            count = (
                (S.rows[i] >> j & 1)
                + (S.rows[j] >> i & 1)
                + (R.rows[i] >> j & 1)
                + (R.rows[j] >> i & 1)
            )
            if count == 0 and unrelated is None:
                unrelated = (i, j)
            elif count > 1 and doubled is None:
                doubled = (i, j)
        if unrelated is not None and doubled is not None:
            break
    if unrelated is not None:
        violations.append(("ii", unrelated))
    if doubled is not None:
        violations.append(("iii", doubled))

    for x in range(n):
        found = False
        for y in bits(S.rows[x]):
            missing = R.rows[y] & ~R.rows[x]
            if missing:
                z = (missing & -missing).bit_length() - 1
                violations.append(("iv", (x, y, z)))
                found = True
                break
        if found:
            break

    return AxiomReport(valid=not violations, violations=tuple(violations))


@dataclass(frozen=True)
class CatalanPair:
    """A candidate (S, R) pair; validity is checked on demand, not on build."""

    S: Relation
    R: Relation

    def __post_init__(self) -> None:
        if self.S.n != self.R.n:
            raise ValueError("S and R must live on the same label set")

    @property
    def n(self) -> int:
        return self.S.n

    @classmethod
    def empty(cls, n: int) -> "CatalanPair":
        return cls(Relation.empty(n), Relation.empty(n))

    @classmethod
    def from_pairs(
        cls,
        n: int,
        s_pairs: Iterable[tuple[int, int]],
        r_pairs: Iterable[tuple[int, int]],
    ) -> "CatalanPair":
        return cls(Relation.from_pairs(n, s_pairs), Relation.from_pairs(n, r_pairs))

    def report(self) -> AxiomReport:
        return check_axioms(self.S, self.R)

    def is_valid(self) -> bool:
        return self.report().valid

    def relabel(self, image: Iterable[int]) -> "CatalanPair":
        image = tuple(image)
        return CatalanPair(self.S.relabel(image), self.R.relabel(image))


def _require_valid(pair: CatalanPair, context: str) -> None:
    report = pair.report()
    if not report.valid:
        axiom, witness = report.violations[0]
        raise InvariantViolation(
            f"{context}: axiom ({axiom}) fails at {witness}"
        )


def compose_pair(left: CatalanPair, right: CatalanPair) -> CatalanPair:
    """Join two valid pairs into one on k + m + 1 labels.

    The result lays out left's labels first (0..k-1), then a fresh label
    x = k, then right's labels shifted up by k + 1.  Every left label gets
    an S-arrow into x; x and every left label get R-arrows into every
    right label.
    """
    _require_valid(left, "compose: left operand")
    _require_valid(right, "compose: right operand")
    k, m = left.n, right.n
    n = k + m + 1
    x = k
    right_mask = ((1 << m) - 1) << (k + 1)

    s_rows = [left.S.rows[i] | (1 << x) for i in range(k)]
    s_rows.append(0)
    s_rows.extend(row << (k + 1) for row in right.S.rows)

    r_rows = [left.R.rows[i] | right_mask for i in range(k)]
    r_rows.append(right_mask)
    r_rows.extend(row << (k + 1) for row in right.R.rows)

    return CatalanPair(Relation(n, tuple(s_rows)), Relation(n, tuple(r_rows)))


def decompose_pair(pair: CatalanPair) -> tuple[int, CatalanPair, CatalanPair]:
    """Undo :func:`compose_pair` up to relabelling.

    Returns (x, left, right) where x is the unique label with no
    S-successor and no R-predecessor, the left factor is induced on
    {i : i S x} and the right factor on {j : x R j}.  A nonempty valid
    pair always has exactly one such x; anything else raises
    InvariantViolation.
    """
    if pair.n == 0:
        raise ValueError("cannot decompose an empty pair")
    _require_valid(pair, "decompose")
    s_cols = pair.S.cols()
    r_cols = pair.R.cols()
    candidates = [
        x for x in range(pair.n) if pair.S.rows[x] == 0 and r_cols[x] == 0
    ]
    if len(candidates) != 1:
        raise InvariantViolation(
            f"decompose: expected one split label, found {len(candidates)}"
            f" ({candidates})"
        )
    x = candidates[0]
    a_mask = s_cols[x]
    b_mask = pair.R.rows[x]
    if a_mask & b_mask or a_mask | b_mask | (1 << x) != (1 << pair.n) - 1:
        raise InvariantViolation(
            "decompose: split label does not separate the remaining labels"
        )
    left_labels = list(bits(a_mask))
    right_labels = list(bits(b_mask))
    left = CatalanPair(
        pair.S.restrict(left_labels), pair.R.restrict(left_labels)
    )
    right = CatalanPair(
        pair.S.restrict(right_labels), pair.R.restrict(right_labels)
    )
    return x, left, right


def total_order(pair: CatalanPair) -> tuple[int, ...]:
    """Labels sorted by the order L with i L j iff i R j or j S i.

    For a valid pair L is always a strict total order; this recomputes and
    verifies that instead of assuming it.
    """
    _require_valid(pair, "total order")
    s_cols = pair.S.cols()
    l_rows = [pair.R.rows[i] | s_cols[i] for i in range(pair.n)]
    order = sorted(range(pair.n), key=lambda i: -l_rows[i].bit_count())
    for a in range(pair.n):
        for b in range(a + 1, pair.n):
            i, j = order[a], order[b]
            if not (l_rows[i] >> j & 1) or (l_rows[j] >> i & 1):
                raise InvariantViolation(
                    f"derived order is not a strict total order at ({i}, {j})"
                )
    return tuple(order)


@dataclass(frozen=True)
class CanonicalPair:
    """A valid pair whose derived total order is 0 < 1 < ... < n-1.

    Two pairs are isomorphic exactly when their canonical forms are equal,
    so this is the normal form used for structure conversion.
    """

    pair: CatalanPair

    def __post_init__(self) -> None:
        if total_order(self.pair) != tuple(range(self.pair.n)):
            raise InvariantViolation(
                "pair is not canonical: derived order differs from 0..n-1"
            )

    @property
    def n(self) -> int:
        return self.pair.n

    @property
    def S(self) -> Relation:
        return self.pair.S

    @property
    def R(self) -> Relation:
        return self.pair.R


def canonicalize(pair: CatalanPair) -> CanonicalPair:
    """Relabel a valid pair so its derived total order becomes 0 < ... < n-1."""
    order = total_order(pair)
    image = [0] * pair.n
    for new, old in enumerate(order):
        image[old] = new
    return CanonicalPair(pair.relabel(image))


def is_isomorphic(first: CatalanPair, second: CatalanPair) -> bool:
    """True if some relabelling carries one valid pair onto the other."""
    if first.n != second.n:
        return False
    return canonicalize(first) == canonicalize(second)


_CATALAN = [1]


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("size must be nonnegative")
    while len(_CATALAN) <= n:
        m = len(_CATALAN)
        _CATALAN.append(
            sum(_CATALAN[k] * _CATALAN[m - 1 - k] for k in range(m))
        )
    return _CATALAN[n]


@lru_cache(maxsize=None)
def enumerate_pairs(n: int) -> tuple[CanonicalPair, ...]:
    """All canonical pairs of size *n*, built recursively by composition,
    sorted by their text serialization."""
    from .pairfile import serialize_pair

    if n < 0:
        raise ValueError("size must be nonnegative")
    if n == 0:
        return (CanonicalPair(CatalanPair.empty(0)),)
    seen: dict[str, CanonicalPair] = {}
    for k in range(n):
        for left, right in product(enumerate_pairs(k), enumerate_pairs(n - 1 - k)):
            canon = canonicalize(compose_pair(left.pair, right.pair))
            seen[serialize_pair(canon.pair)] = canon
    return tuple(seen[key] for key in sorted(seen))
