"""Quadratic monomial algebras kQ/I with I generated by paths of length two.

Paths are stored in traversal order: ``Path("v", "v", ("y", "x"))`` is the
path that runs along ``y`` first and then ``x`` (written ``xy`` in the usual
right-to-left notation, and ``x.y`` by :func:`Path.__str__`).  A forbidden
pair ``(b, a)`` is the length-two path "a then b".
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from .errors import AlgebraError
from .quiver import Arrow, Quiver, find_cycle


class Path(NamedTuple):
    source: str
    target: str
    arrows: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def first(self) -> str | None:
        return self.arrows[0] if self.arrows else None

    @property
    def last(self) -> str | None:
        return self.arrows[-1] if self.arrows else None

    def __str__(self) -> str:
        if not self.arrows:
            return f"e_{self.source}"
        return ".".join(reversed(self.arrows))


def _path_key(p: Path):
    return (p.length, p.arrows, p.source)


@dataclass(frozen=True)
class MonomialPresentation:
    quiver: Quiver
    forbidden: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "forbidden", tuple(tuple(p) for p in self.forbidden))
        if len(set(self.forbidden)) != len(self.forbidden):
            raise AlgebraError("DUPLICATE_DECLARATION", "a relation is listed twice")
        names = set(self.quiver.arrow_names)
        for b, a in self.forbidden:
            for n in (a, b):
                if n not in names:
                    raise AlgebraError("UNKNOWN_ARROW", f"relation uses unknown arrow {n!r}")
            if self.quiver.arrow(a).target != self.quiver.arrow(b).source:
                raise AlgebraError(
                    "NON_COMPOSABLE_RELATION",
                    f"relation {b}.{a}: t({a}) != s({b})",
                    relation=f"{b}.{a}",
                )


@dataclass(frozen=True)
class MonomialAlgebra:
    presentation: MonomialPresentation
    nonzero_paths: tuple[Path, ...] = field(compare=False, repr=False)

    @property
    def quiver(self) -> Quiver:
        return self.presentation.quiver

    @property
    def dimension(self) -> int:
        return len(self.nonzero_paths)

    @cached_property
    def forbidden_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.presentation.forbidden)

    @cached_property
    def _arrows(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.quiver.arrows}

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrows[name]
        except KeyError:
            raise AlgebraError("UNKNOWN_ARROW", f"no arrow named {name!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_set

    @cached_property
    def _vertex_set(self) -> frozenset[str]:
        return frozenset(self.quiver.vertices)

    @cached_property
    def memo(self) -> dict:
        """Scratch cache for derived combinatorial data."""
        return {}

    @cached_property
    def _killers(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {a: [] for a in self._arrows}
        for b, a in self.presentation.forbidden:
            out[a].append(b)
        return {a: tuple(sorted(bs)) for a, bs in out.items()}

    def annihilating_arrows(self, alpha: str) -> tuple[str, ...]:
        """Sorted arrows b with (b, alpha) forbidden."""
        self.arrow(alpha)
        return self._killers[alpha]

    @cached_property
    def is_radical_square_zero(self) -> bool:
        return all(
            (b.name, a.name) in self.forbidden_set
            for a in self.quiver.arrows
            for b in self.quiver.arrows
            if a.target == b.source
        )

    @cached_property
    def paths_by_length(self) -> dict[int, tuple[Path, ...]]:
        grouped: dict[int, list[Path]] = defaultdict(list)
        for p in self.nonzero_paths:
            grouped[p.length].append(p)
        return {n: tuple(ps) for n, ps in sorted(grouped.items())}

    def multiply(self, p: Path, q: Path) -> Path | None:
        """The product ``p*q`` (q first, then p) or ``None`` when it vanishes."""
        if p.source != q.target:
            return None
        if p.arrows and q.arrows and (p.arrows[0], q.arrows[-1]) in self.forbidden_set:
            return None
        return Path(q.source, p.target, q.arrows + p.arrows)

    def arrow_path(self, name: str) -> Path:
        a = self.arrow(name)
        return Path(a.source, a.target, (name,))

    def trivial_path(self, v: str) -> Path:
        return Path(v, v, ())


def composability_graph(p: MonomialPresentation) -> Quiver:
    """Arrows of Q as vertices; an edge a => b whenever "a then b" is nonzero."""
    q = p.quiver
    forbidden = set(p.forbidden)
    edges = [
        Arrow(f"{a.name}=>{b.name}", a.name, b.name)
        for a in q.arrows
        for b in q.arrows
        if a.target == b.source and (b.name, a.name) not in forbidden
    ]
    return Quiver(q.arrow_names, tuple(edges))


def validate(p: MonomialPresentation) -> MonomialAlgebra:
    """Check admissibility and enumerate the nonzero-path basis."""
    graph = composability_graph(p)
    cycle = find_cycle(graph)
    if cycle is not None:
        shown = " then ".join(cycle)
        raise AlgebraError(
            "INFINITE_DIMENSIONAL",
            f"the nonzero path {shown} can be repeated forever",
            cycle=cycle,
        )
    q = p.quiver
    arrows = sorted(q.arrows, key=lambda a: a.name)
    successors = {
        a.name: sorted(e.target for e in graph.arrows if e.source == a.name)
        for a in q.arrows
    }
    level = [Path(v, v, ()) for v in sorted(q.vertices)]
    basis = list(level)
    level = [Path(a.source, a.target, (a.name,)) for a in arrows]
    while level:
        basis.extend(level)
        nxt = []
        for path in level:
            for b in successors[path.last]:
                nxt.append(Path(path.source, q.arrow(b).target, path.arrows + (b,)))
        level = sorted(nxt, key=_path_key)
    return MonomialAlgebra(p, tuple(basis))


def arrow_module_basis(a: MonomialAlgebra, alpha: str) -> list[Path]:
    """Basis of the left ideal A*alpha: nonzero paths whose first arrow is alpha."""
    a.arrow(alpha)
    return [p for p in a.nonzero_paths if p.first == alpha]


def projective_basis(a: MonomialAlgebra, v: str) -> list[Path]:
    """Basis of A*e_v: nonzero paths starting at v."""
    if not a.has_vertex(v):
        raise AlgebraError("UNKNOWN_VERTEX", f"no vertex named {v!r}")
    return [p for p in a.nonzero_paths if p.source == v]


def is_projective_arrow_module(a: MonomialAlgebra, alpha: str) -> bool:
    return not a.annihilating_arrows(alpha)


def neighbor_set(a: MonomialAlgebra, alpha: str) -> tuple[str, ...]:
    """N(alpha): arrows with the same target as alpha that every arrow
    killing alpha also kills.  Sorted; always contains alpha."""
    cached = a.memo.get(("N", alpha))
    if cached is not None:
        return cached
    killers = a.annihilating_arrows(alpha)
    if not killers:
        raise AlgebraError(
            "PROJECTIVE_ARROW_MODULE",
            f"A{alpha} is projective, so N({alpha}) is undefined",
        )
    t = a.arrow(alpha).target
    forbidden = a.forbidden_set
    result = tuple(
        sorted(
            other.name
            for other in a.quiver.arrows
            if other.target == t and all((b, other.name) in forbidden for b in killers)
        )
    )
    a.memo[("N", alpha)] = result
    return result


def right_ideal_basis(a: MonomialAlgebra, alpha: str) -> list[Path]:
    """Basis of Z(alpha), the right ideal generated by N(alpha)."""
    members = set(neighbor_set(a, alpha))
    return [p for p in a.nonzero_paths if p.last in members]
