"""Quadratic monomial algebras: syzygies, stable homs, relation quivers and
singularity-category invariants, with an explicit linear-algebra oracle."""
from __future__ import annotations

from .algebra import MonomialAlgebra, MonomialPresentation, Path, neighbor_set, validate
from .dsl import parse_object, parse_spec, render
from .errors import AlgebraError
from .quiver import Arrow, Quiver
from .report import SingularityReport, classify_components, gorenstein, singularity_report, tn_hom
from .rsz import b_algebra, cross_check, relation_quiver, transport
from .stabilization import dsg_hom
from .stable import A, P, S, Generator, HomSpace, StableMorphism, StableObject, stable_hom, syzygy_object

__version__ = "0.1.0"

__all__ = [
    "A",
    "AlgebraError",
    "Arrow",
    "Generator",
    "HomSpace",
    "MonomialAlgebra",
    "MonomialPresentation",
    "P",
    "Path",
    "Quiver",
    "S",
    "SingularityReport",
    "StableMorphism",
    "StableObject",
    "b_algebra",
    "classify_components",
    "cross_check",
    "dsg_hom",
    "gorenstein",
    "neighbor_set",
    "parse_object",
    "parse_spec",
    "relation_quiver",
    "render",
    "singularity_report",
    "stable_hom",
    "syzygy_object",
    "tn_hom",
    "transport",
]
