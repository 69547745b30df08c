"""Finite quivers (directed multigraphs with loops) and the graph algorithms
used to classify relation quivers."""
from __future__ import annotations

import graphlib
from collections import deque
from dataclasses import dataclass

from .errors import AlgebraError


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    label: str | None = None


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("INVALID_QUIVER", "duplicate vertex identifier")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraError("INVALID_QUIVER", "duplicate arrow identifier")
        known = set(self.vertices)
        for a in self.arrows:
            if a.source not in known or a.target not in known:
                raise AlgebraError(
                    "INVALID_QUIVER",
                    f"arrow {a.name} has an endpoint outside the vertex set",
                )

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def arrow_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows)

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise AlgebraError("UNKNOWN_ARROW", f"no arrow named {name!r}")

    def out_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def full_subquiver(self, vertices) -> Quiver:
        keep = set(vertices)
        return Quiver(
            tuple(v for v in self.vertices if v in keep),
            tuple(a for a in self.arrows if a.source in keep and a.target in keep),
        )

    def is_subquiver_of(self, other: Quiver) -> bool:
        return set(self.vertices) <= set(other.vertices) and set(self.arrows) <= set(
            other.arrows
        )

    def same_shape(self, other: Quiver) -> bool:
        """Equality up to the order in which vertices and arrows are listed."""
        return set(self.vertices) == set(other.vertices) and set(self.arrows) == set(
            other.arrows
        )


def basic_cycle(n: int, prefix: str = "c") -> Quiver:
    """The basic n-cycle Z_n: vertices c0..c{n-1}, arrows c{i} -> c{i+1 mod n}."""
    if n < 1:
        raise AlgebraError("INVALID_QUIVER", "a basic cycle needs n >= 1")
    vs = tuple(f"{prefix}{i}" for i in range(n))
    return Quiver(vs, tuple(Arrow(f"{prefix}{i}_{(i + 1) % n}", vs[i], vs[(i + 1) % n]) for i in range(n)))


def linear_quiver(n: int, prefix: str = "") -> Quiver:
    vs = tuple(f"{prefix}{i}" for i in range(1, n + 1))
    return Quiver(vs, tuple(Arrow(f"{vs[i]}_{vs[i + 1]}", vs[i], vs[i + 1]) for i in range(n - 1)))


def connected_components(q: Quiver) -> list[Quiver]:
    """Full subquivers on the classes of undirected connectivity.

    Components are returned sorted by their smallest vertex name.
    """
    adjacent: dict[str, set[str]] = {v: set() for v in q.vertices}
    for a in q.arrows:
        adjacent[a.source].add(a.target)
        adjacent[a.target].add(a.source)
    seen: set[str] = set()
    classes = []
    for v in q.vertices:
        if v in seen:
            continue
        seen.add(v)
        cls, todo = {v}, deque([v])
        while todo:
            for w in adjacent[todo.popleft()]:
                if w not in seen:
                    seen.add(w)
                    cls.add(w)
                    todo.append(w)
        classes.append(cls)
    classes.sort(key=min)
    return [q.full_subquiver(c) for c in classes]


def is_connected(q: Quiver) -> bool:
    return len(connected_components(q)) == 1


def is_basic_cycle(q: Quiver) -> bool:
    if not q.vertices or not is_connected(q):
        return False
    return all(
        len(q.out_arrows(v)) == 1 and len(q.in_arrows(v)) == 1 for v in q.vertices
    )


def find_cycle(q: Quiver) -> list[str] | None:
    """Vertices of some oriented cycle, in traversal order with the first vertex
    repeated at the end; ``None`` if the quiver is acyclic."""
    preds: dict[str, set[str]] = {v: set() for v in q.vertices}
    for a in q.arrows:
        preds[a.target].add(a.source)
    try:
        graphlib.TopologicalSorter(preds).prepare()
    except graphlib.CycleError as exc:
        # graphlib reports the cycle along successor links, i.e. along arrows
        return list(exc.args[1])
    return None


def has_oriented_cycle(q: Quiver) -> bool:
    return find_cycle(q) is not None


def _eliminate(q: Quiver, degree) -> Quiver:
    current = q
    while True:
        doomed = [v for v in current.vertices if degree(current, v) == 0]
        if not doomed:
            return current
        current = current.full_subquiver(set(current.vertices) - set(doomed))


def eliminate_sources(q: Quiver) -> Quiver:
    """Repeatedly delete vertices with no incoming arrow."""
    return _eliminate(q, lambda g, v: len(g.in_arrows(v)))


def eliminate_sinks(q: Quiver) -> Quiver:
    """Repeatedly delete vertices with no outgoing arrow."""
    return _eliminate(q, lambda g, v: len(g.out_arrows(v)))


def union(quivers) -> Quiver:
    vs: list[str] = []
    arrows: list[Arrow] = []
    for q in quivers:
        vs.extend(q.vertices)
        arrows.extend(q.arrows)
    return Quiver(tuple(vs), tuple(arrows))
