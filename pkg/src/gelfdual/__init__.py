"""Gelfand pairs of finite permutation groups, their character triples and
dual pairs."""

from .cyclo import CycNum
from .perm import GroupPair, PermGroup, Permutation, parse_pair_text
from .scheme import OrbitalScheme, build_scheme
from .spectral import CharacterTriple, build_triple, parse_triple
from .triples import dual_triple, find_isomorphism, integrality_test, self_duality

__version__ = "0.1.0"

__all__ = [
    "CycNum",
    "GroupPair",
    "PermGroup",
    "Permutation",
    "parse_pair_text",
    "OrbitalScheme",
    "build_scheme",
    "CharacterTriple",
    "build_triple",
    "parse_triple",
    "dual_triple",
    "find_isomorphism",
    "integrality_test",
    "self_duality",
]
