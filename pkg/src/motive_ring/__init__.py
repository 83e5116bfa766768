"""Exact Burnside / crossed Burnside ring computations for finite groups.

The package computes, over Z, Q, p-local and prime-field coefficients:
tables of marks, the rational and residual (Dress) idempotents of the
Burnside ring, the crossed Burnside ring with its integral primitive
idempotents, images in the center of the group algebra, block
idempotents over finite fields, and the span realization of the Mackey
algebra with its comparison maps.
"""

from .burnside import BurnsideElement, BurnsideRing, GhostVector, TableOfMarks
from .center import CenterAlgebra, CenterElement, augmentation, blocks_mod_p
from .crossed import (
    CrossedBurnsideRing,
    CrossedElement,
    CrossedGhostVector,
    CrossedPairClass,
)
from .groups import (
    CosetGeometry,
    FiniteGroup,
    GroupTooLarge,
    NotNormal,
    Permutation,
    Quotient,
    construct_group,
    coset_geometry,
    parse_cycles,
    quotient_group,
)
from .mackey import (
    HeckeAlgebra,
    MackeyAlgebra,
    SpanBasisElement,
    SpanElement,
    center_to_hecke,
    crossed_to_mackey_center,
)
from .scalars import QQ, ZZ, ScalarError, p_local, prime_field, ring_from_tag
from .subgroups import (
    SubgroupClass,
    SubgroupClassTable,
    residual,
    subgroup_classes,
)

__all__ = [
    "BurnsideElement",
    "BurnsideRing",
    "CenterAlgebra",
    "CenterElement",
    "CosetGeometry",
    "CrossedBurnsideRing",
    "CrossedElement",
    "CrossedGhostVector",
    "CrossedPairClass",
    "FiniteGroup",
    "GhostVector",
    "GroupTooLarge",
    "HeckeAlgebra",
    "MackeyAlgebra",
    "NotNormal",
    "Permutation",
    "QQ",
    "Quotient",
    "ScalarError",
    "SpanBasisElement",
    "SpanElement",
    "SubgroupClass",
    "SubgroupClassTable",
    "TableOfMarks",
    "ZZ",
    "augmentation",
    "blocks_mod_p",
    "center_to_hecke",
    "construct_group",
    "coset_geometry",
    "crossed_to_mackey_center",
    "parse_cycles",
    "p_local",
    "prime_field",
    "quotient_group",
    "residual",
    "ring_from_tag",
    "subgroup_classes",
]
