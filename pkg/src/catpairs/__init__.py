"""Catalan structures and the order-pair exchange format between them.

A pair of strict orders (S, R) on n labels, subject to four axioms,
carries exactly the information of a size-n Catalan structure.  This
package provides the pair calculus (axioms, composition, canonical
forms), encoders from eight classical families onto pairs, decoders
back, and a converter between any two families, plus a ``catpair``
command-line front end.
"""

from .bijections import (
    ALIASES,
    DEFAULT_TABLE_CAP,
    FAMILIES,
    Family,
    convert,
    decode_pair,
    family,
    pair_to_tree,
    reference_decode,
    tree_to_pair,
)
from .errors import InvariantViolation, ParseError, SizeLimitError
from .pairfile import parse_pair, serialize_pair
from .relations import (
    AxiomReport,
    CanonicalPair,
    CatalanPair,
    Relation,
    canonicalize,
    catalan,
    check_axioms,
    compose_pair,
    decompose_pair,
    enumerate_pairs,
    is_isomorphic,
    is_strict_order,
    total_order,
)

__all__ = [
    "ALIASES",
    "AxiomReport",
    "CanonicalPair",
    "CatalanPair",
    "DEFAULT_TABLE_CAP",
    "FAMILIES",
    "Family",
    "InvariantViolation",
    "ParseError",
    "Relation",
    "SizeLimitError",
    "canonicalize",
    "catalan",
    "check_axioms",
    "compose_pair",
    "convert",
    "decode_pair",
    "decompose_pair",
    "enumerate_pairs",
    "family",
    "is_isomorphic",
    "is_strict_order",
    "pair_to_tree",
    "parse_pair",
    "reference_decode",
    "serialize_pair",
    "total_order",
    "tree_to_pair",
]
