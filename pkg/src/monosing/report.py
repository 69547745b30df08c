"""Component classification of the relation quiver and the resulting
description of the singularity category."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .algebra import MonomialAlgebra
from .errors import AlgebraError
from .quiver import (
    Quiver,
    connected_components,
    eliminate_sinks,
    eliminate_sources,
    has_oriented_cycle,
    is_basic_cycle,
    union,
)
from .rsz import relation_quiver

FIELD_NOTE = (
    "exact arithmetic over Q; all structure constants are 0 or 1, "
    "so every dimension reported is independent of the ground field"
)


class Kind(str, enum.Enum):
    PERFECT = "PERFECT"
    ACYCLIC = "ACYCLIC"
    DEFECT = "DEFECT"


@dataclass(frozen=True)
class Component:
    quiver: Quiver
    kind: Kind

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    @property
    def size(self) -> int:
        return len(self.quiver.vertices)


def classify_components(r: Quiver) -> list[Component]:
    out = []
    for c in connected_components(r):
        if is_basic_cycle(c):
            kind = Kind.PERFECT
        elif not has_oriented_cycle(c):
            kind = Kind.ACYCLIC
        else:
            kind = Kind.DEFECT
        out.append(Component(c, kind))
    return out


def gorenstein(a: MonomialAlgebra) -> bool:
    return all(c.kind != Kind.DEFECT for c in classify_components(relation_quiver(a)))


def cycle_order(c: Quiver) -> list[str]:
    """Vertices of a basic cycle in arrow order, starting from the smallest name."""
    if not is_basic_cycle(c):
        raise AlgebraError("INVALID_ARGUMENT", "quiver is not a basic cycle")
    succ = {a.source: a.target for a in c.arrows}
    order = [min(c.vertices)]
    while len(order) < len(c.vertices):
        order.append(succ[order[-1]])
    return order


def tn_hom(n: int, a, b, shift: int = 0) -> int:
    """dim Hom(a, sigma^shift b) in T_n = (k^n-mod, sigma*), objects given by
    their dimension vectors; sigma moves coordinate i+1 to position i."""
    a, b = list(a), list(b)
    if len(a) != n or len(b) != n:
        raise AlgebraError("LENGTH_MISMATCH", f"dimension vectors must have length {n}")
    if any(v < 0 for v in a + b):
        raise AlgebraError("INVALID_ARGUMENT", "dimension vectors must be nonnegative")
    return sum(a[i] * b[(i + shift) % n] for i in range(n))


class DescriptorKind(str, enum.Enum):
    GPROJ = "GPROJ"
    DDEF = "DDEF"
    DDEF_TN = "DDEF_TN"
    DSG = "DSG"


@dataclass(frozen=True)
class Descriptor:
    kind: DescriptorKind
    text: str

    def to_dict(self) -> dict[str, str]:
        return {"kind": self.kind.value, "text": self.text}


def _t_product(sizes) -> str:
    return " × ".join(f"T_{d}" for d in sizes)


def _leavitt(name: str) -> str:
    return f"(L({name})-grproj,(−1))"


def _qprime_name(qprime: Quiver, r: Quiver) -> str:
    comps = connected_components(qprime)
    if all(is_basic_cycle(c) for c in comps):
        return " ⊔ ".join(f"Z_{len(c)}" for c in comps)
    if qprime.same_shape(r):
        return "R_A"
    return "Q'"


def describe(perfect_sizes: list[int], qprime: Quiver, r: Quiver) -> list[Descriptor]:
    gproj = _t_product(perfect_sizes) if perfect_sizes else "0"
    out = [Descriptor(DescriptorKind.GPROJ, f"Gproj ≅ {gproj}")]
    if not qprime.vertices:
        out.append(Descriptor(DescriptorKind.DDEF, "D_def ≅ 0"))
        out.append(Descriptor(DescriptorKind.DSG, f"D_sg ≅ {gproj}"))
        return out
    ddef = _leavitt(_qprime_name(qprime, r))
    out.append(Descriptor(DescriptorKind.DDEF, f"D_def ≅ {ddef}"))
    comps = connected_components(qprime)
    cycle_sizes = [len(c) for c in comps] if all(is_basic_cycle(c) for c in comps) else None
    if cycle_sizes:
        out.append(Descriptor(DescriptorKind.DDEF_TN, f"D_def ≅ {_t_product(cycle_sizes)}"))
    if not perfect_sizes:
        out.append(Descriptor(DescriptorKind.DSG, f"D_sg ≅ D_def ≅ {ddef}"))
    elif cycle_sizes:
        out.append(Descriptor(DescriptorKind.DSG, f"D_sg ≅ {_t_product(perfect_sizes + cycle_sizes)}"))
    else:
        out.append(Descriptor(DescriptorKind.DSG, f"D_sg ≅ {gproj} × {ddef}"))
    return out


@dataclass
class SingularityReport:
    algebra: MonomialAlgebra
    relation_quiver: Quiver
    components: list[Component]
    defect_quiver: Quiver
    sink_eliminated: Quiver
    descriptors: list[Descriptor]
    notes: list[str] = field(default_factory=list)

    @property
    def perfect_sizes(self) -> list[int]:
        return [c.size for c in self.components if c.kind == Kind.PERFECT]

    @property
    def gorenstein(self) -> bool:
        return all(c.kind != Kind.DEFECT for c in self.components)

    @property
    def gorenstein_projective_generators(self) -> list[str]:
        """Arrows alpha whose module A*alpha is non-projective Gorenstein-projective."""
        return sorted(v for c in self.components if c.kind == Kind.PERFECT for v in c.vertices)

    @property
    def elimination_rules_differ(self) -> bool:
        return not self.defect_quiver.same_shape(self.sink_eliminated)

    def descriptor(self, kind: DescriptorKind) -> str | None:
        for d in self.descriptors:
            if d.kind == kind:
                return d.text
        return None

    def perfect_labeling(self) -> dict[str, tuple[int, int]]:
        """arrow -> (index of its T_d factor, coordinate in that factor)."""
        out = {}
        perfect = [c for c in self.components if c.kind == Kind.PERFECT]
        for k, c in enumerate(perfect):
            for i, v in enumerate(cycle_order(c.quiver)):
                out[v] = (k, i)
        return out

    def to_dict(self) -> dict[str, object]:
        a = self.algebra
        return {
            "algebra": {
                "vertices": list(a.quiver.vertices),
                "arrows": list(a.quiver.arrow_names),
                "relations": [f"{b}.{al}" for b, al in a.presentation.forbidden],
                "dimension": a.dimension,
                "field": FIELD_NOTE,
            },
            "relation_quiver": quiver_dict(self.relation_quiver),
            "components": [
                {"vertices": list(c.vertices), "kind": c.kind.value, "size": c.size}
                for c in self.components
            ],
            "perfect_sizes": self.perfect_sizes,
            "gorenstein": self.gorenstein,
            "gorenstein_projective_generators": [
                f"A({v})" for v in self.gorenstein_projective_generators
            ],
            "defect_quiver": quiver_dict(self.defect_quiver),
            "elimination": {
                "rule": "sources",
                "sink_rule_quiver": quiver_dict(self.sink_eliminated),
                "rules_differ": self.elimination_rules_differ,
            },
            "descriptors": [d.to_dict() for d in self.descriptors],
            "notes": list(self.notes),
        }


def quiver_dict(q: Quiver) -> dict[str, object]:
    return {
        "vertices": list(q.vertices),
        "arrows": [{"name": a.name, "source": a.source, "target": a.target} for a in q.arrows],
    }


def singularity_report(a: MonomialAlgebra) -> SingularityReport:
    r = relation_quiver(a)
    components = classify_components(r)
    defect = union(c.quiver for c in components if c.kind == Kind.DEFECT)
    qprime = eliminate_sources(defect)
    by_sinks = eliminate_sinks(defect)
    notes = []
    removed = [v for v in defect.vertices if v not in qprime.vertices]
    if removed:
        notes.append(
            "defect quiver obtained by removing vertices without incoming arrows: "
            + ", ".join(removed)
        )
    if not qprime.same_shape(by_sinks):
        notes.append(
            "removing vertices without outgoing arrows instead would give vertices "
            + (", ".join(by_sinks.vertices) or "(none)")
        )
    return SingularityReport(
        algebra=a,
        relation_quiver=r,
        components=components,
        defect_quiver=qprime,
        sink_eliminated=by_sinks,
        descriptors=describe([c.size for c in components if c.kind == Kind.PERFECT], qprime, r),
        notes=notes,
    )
