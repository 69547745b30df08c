"""Brute-force checks by explicit representations.

Modules are realized as matrices of the arrow actions on a path basis; hom
spaces come from solving the intertwining equations exactly, and stable hom
spaces from quotienting the maps that factor through the projective cover of
the target.  Nothing here consults the combinatorial stable calculus; it only
reads the generator lists of the objects it is asked to realize.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .algebra import MonomialAlgebra, Path
from .errors import AlgebraError
from .linalg import Echelon, SparseVector, nullspace, rank
from .stable import ARROW, PROJ, SIMPLE, Generator, StableMorphism, StableObject, raw_syzygy

Matrix = dict[tuple[int, int], Fraction]


@dataclass(frozen=True)
class ExplicitModule:
    algebra: MonomialAlgebra
    labels: tuple[str, ...]
    vertices: tuple[str, ...]
    action: dict[str, tuple[SparseVector, ...]]
    summands: tuple[Generator, ...] = ()
    offsets: tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.labels)

    def dimension_vector(self) -> dict[str, int]:
        counts = Counter(self.vertices)
        return {v: counts.get(v, 0) for v in self.algebra.quiver.vertices}


def _closure(a: MonomialAlgebra, start: Path) -> list[Path]:
    """All nonzero left multiples p*start."""
    seen = {start}
    todo = [start]
    arrows = [a.arrow_path(n) for n in a.quiver.arrow_names]
    while todo:
        q = todo.pop()
        for g in arrows:
            prod = a.multiply(g, q)
            if prod is not None and prod not in seen:
                seen.add(prod)
                todo.append(prod)
    return sorted(seen, key=lambda p: (p.length, p.arrows, p.source))


def _path_module(a: MonomialAlgebra, basis: list[Path]) -> ExplicitModule:
    index = {p: i for i, p in enumerate(basis)}
    action = {}
    for name in a.quiver.arrow_names:
        g = a.arrow_path(name)
        cols = []
        for p in basis:
            prod = a.multiply(g, p)
            cols.append({index[prod]: Fraction(1)} if prod is not None else {})
        action[name] = tuple(cols)
    return ExplicitModule(
        a, tuple(str(p) for p in basis), tuple(p.target for p in basis), action
    )


def _generator_module(a: MonomialAlgebra, g: Generator) -> ExplicitModule:
    if g.kind == ARROW:
        return _path_module(a, _closure(a, a.arrow_path(g.name)))
    if g.kind == PROJ:
        return _path_module(a, _closure(a, a.trivial_path(g.name)))
    zero = {name: ({},) for name in a.quiver.arrow_names}
    return ExplicitModule(a, (f"S_{g.name}",), (g.name,), zero)


def direct_sum(a: MonomialAlgebra, parts: list[ExplicitModule], summands=()) -> ExplicitModule:
    labels, vertices, offsets = [], [], []
    action: dict[str, list[SparseVector]] = {n: [] for n in a.quiver.arrow_names}
    for part in parts:
        off = len(labels)
        offsets.append(off)
        labels.extend(part.labels)
        vertices.extend(part.vertices)
        for n in action:
            action[n].extend({i + off: v for i, v in col.items()} for col in part.action[n])
    return ExplicitModule(
        a,
        tuple(labels),
        tuple(vertices),
        {n: tuple(cols) for n, cols in action.items()},
        tuple(summands),
        tuple(offsets),
    )


def realize(x: StableObject) -> ExplicitModule:
    """Direct sum of explicit realizations, one block per copy of each generator."""
    gens = x.generators
    return direct_sum(x.algebra, [_generator_module(x.algebra, g) for g in gens], gens)


def regular_module(a: MonomialAlgebra) -> ExplicitModule:
    gens = [Generator(PROJ, v) for v in sorted(a.quiver.vertices)]
    return direct_sum(a, [_generator_module(a, g) for g in gens], gens)


def _check_same(m: ExplicitModule, n: ExplicitModule) -> None:
    if m.algebra is not n.algebra and m.algebra != n.algebra:
        raise AlgebraError("ALGEBRA_MISMATCH", "modules live over different algebras")


def hom_basis(m: ExplicitModule, n: ExplicitModule) -> list[Matrix]:
    """Basis of Hom_A(m, n) as sparse n.dim x m.dim matrices."""
    _check_same(m, n)
    var: dict[tuple[int, int], int] = {}
    for r, vr in enumerate(n.vertices):
        for c, vc in enumerate(m.vertices):
            if vr == vc:
                var[(r, c)] = len(var)
    equations = []
    for name in m.algebra.quiver.arrow_names:
        arrow = m.algebra.arrow(name)
        n_rows: dict[int, dict[int, Fraction]] = {}
        for rp, col in enumerate(n.action[name]):
            for r, val in col.items():
                n_rows.setdefault(r, {})[rp] = val
        src_cols = [c for c, v in enumerate(m.vertices) if v == arrow.source]
        tgt_rows = [r for r, v in enumerate(n.vertices) if v == arrow.target]
        # (phi . m(arrow) - n(arrow) . phi)[r, c'] = 0
        for r in tgt_rows:
            for cp in src_cols:
                eq: SparseVector = {}
                for c, val in m.action[name][cp].items():
                    k = var[(r, c)]
                    eq[k] = eq.get(k, 0) + val
                for rp, val in n_rows.get(r, {}).items():
                    k = var[(rp, cp)]
                    eq[k] = eq.get(k, 0) - val
                eq = {k: v for k, v in eq.items() if v}
                if eq:
                    equations.append(eq)
    keys = list(var)
    return [{keys[k]: v for k, v in vec.items()} for vec in nullspace(equations, len(var))]


def hom_dim(m: ExplicitModule, n: ExplicitModule) -> int:
    return len(hom_basis(m, n))


def is_homomorphism(m: ExplicitModule, n: ExplicitModule, phi: Matrix) -> bool:
    for name in m.algebra.quiver.arrow_names:
        left = compose_maps(phi, _as_matrix(m.action[name]))
        right = compose_maps(_as_matrix(n.action[name]), phi)
        if left != right:
            return False
    return all(n.vertices[r] == m.vertices[c] for (r, c) in phi)


def _as_matrix(cols) -> Matrix:
    return {(r, c): v for c, col in enumerate(cols) for r, v in col.items()}


def compose_maps(g: Matrix, f: Matrix) -> Matrix:
    """g after f."""
    by_row: dict[int, list[tuple[int, Fraction]]] = {}
    for (mid, col), v in f.items():
        by_row.setdefault(mid, []).append((col, v))
    out: Matrix = {}
    for (row, mid), w in g.items():
        for col, v in by_row.get(mid, ()):
            out[(row, col)] = out.get((row, col), 0) + w * v
    return {k: v for k, v in out.items() if v}


def projective_cover(n: ExplicitModule) -> tuple[ExplicitModule, Matrix]:
    """Projective P with a surjection P -> n, built summand by summand."""
    a = n.algebra
    if len(n.summands) != len(n.offsets):
        raise AlgebraError("INVALID_OBJECT", "module was not produced by realize()")
    parts = []
    for g in n.summands:
        if g.kind == ARROW:
            top = a.arrow(g.name).target
        else:
            top = g.name
        parts.append(_generator_module(a, Generator(PROJ, top)))
    cover = direct_sum(a, parts, [Generator(PROJ, p.vertices[0]) for p in parts])
    surj: Matrix = {}
    ends = list(n.offsets[1:]) + [n.dim]
    for g, off_n, end_n, off_p, part in zip(n.summands, n.offsets, ends, cover.offsets, parts):
        n_labels = {n.labels[i]: i for i in range(off_n, end_n)}
        basis = _closure(a, a.trivial_path(part.vertices[0]))
        for j, p in enumerate(basis):
            if g.kind == ARROW:
                image = a.multiply(p, a.arrow_path(g.name))
                if image is not None:
                    surj[(n_labels[str(image)], off_p + j)] = Fraction(1)
            elif g.kind == SIMPLE:
                if p.is_trivial:
                    surj[(off_n, off_p + j)] = Fraction(1)
            else:
                surj[(n_labels[str(p)], off_p + j)] = Fraction(1)
    return cover, surj


def _flatten(phi: Matrix, ncols: int) -> SparseVector:
    return {r * ncols + c: v for (r, c), v in phi.items()}


def factoring_space(m: ExplicitModule, n: ExplicitModule) -> Echelon:
    """Span of the maps m -> n that factor through a projective module."""
    _check_same(m, n)
    cover, surj = projective_cover(n)
    e = Echelon()
    for phi in hom_basis(m, cover):
        e.add(_flatten(compose_maps(surj, phi), m.dim))
    return e


def factoring_space_via_regular(m: ExplicitModule, n: ExplicitModule) -> Echelon:
    """Same subspace, computed as the span of g.h with h: m -> A and g: A -> n."""
    reg = regular_module(m.algebra)
    into = hom_basis(m, reg)
    out = hom_basis(reg, n)
    e = Echelon()
    for g in out:
        for h in into:
            e.add(_flatten(compose_maps(g, h), m.dim))
    return e


def stable_hom_dim(m: ExplicitModule, n: ExplicitModule) -> int:
    return hom_dim(m, n) - len(factoring_space(m, n))


def is_stably_zero(m: ExplicitModule, n: ExplicitModule, phi: Matrix) -> bool:
    return factoring_space(m, n).contains(_flatten(phi, m.dim))


def syzygy_check(x: StableObject) -> tuple[bool, dict[str, object]]:
    """Compare the kernel of the explicit projective cover of x with the
    predicted syzygy, vertex by vertex."""
    m = realize(x)
    cover, surj = projective_cover(m)
    kernel: dict[str, int] = {}
    for v in x.algebra.quiver.vertices:
        cols = [j for j, w in enumerate(cover.vertices) if w == v]
        images = [{r: val for (r, c), val in surj.items() if c == j} for j in cols]
        kernel[v] = len(cols) - rank(images)
    predicted = realize(raw_syzygy(x)).dimension_vector()
    ok = kernel == predicted
    return ok, {"kernel": kernel, "predicted": predicted, "object": str(x)}


def _basis_map(a: MonomialAlgebra, g: Generator, h: Generator, src: ExplicitModule, tgt: ExplicitModule) -> Matrix:
    """The explicit map sending the top generator of g to that of h."""
    if g.kind == ARROW and h.kind == ARROW:
        index = {label: i for i, label in enumerate(tgt.labels)}
        out: Matrix = {}
        for j, label in enumerate(src.labels):
            path = _closure_lookup(a, g.name)[j]
            rest = path.arrows[1:]
            if rest and (rest[0], h.name) in a.forbidden_set:
                continue
            new = Path(a.arrow(h.name).source, path.target, (h.name,) + rest)
            out[(index[str(new)], j)] = Fraction(1)
        return out
    # remaining legal cases are one-dimensional modules (simples, or arrow
    # modules over a radical-square-zero algebra)
    if src.dim != 1 or tgt.dim != 1:
        raise AlgebraError("ILLEGAL_MORPHISM", f"no canonical map {g} -> {h}")
    return {(0, 0): Fraction(1)}


def _closure_lookup(a: MonomialAlgebra, alpha: str) -> list[Path]:
    key = ("oracle-closure", alpha)
    if key not in a.memo:
        a.memo[key] = _closure(a, a.arrow_path(alpha))
    return a.memo[key]


def realize_morphism(f: StableMorphism, m: ExplicitModule | None = None, n: ExplicitModule | None = None) -> Matrix:
    """Explicit matrix of a combinatorial stable morphism between realizations."""
    m = m or realize(f.source)
    n = n or realize(f.target)
    a = f.source.algebra
    src_gens, tgt_gens = f.source.generators, f.target.generators
    out: Matrix = {}
    for (row, col), coeff in f.entries.items():
        g, h = src_gens[col], tgt_gens[row]
        piece = _basis_map(a, g, h, _generator_module(a, g), _generator_module(a, h))
        for (r, c), v in piece.items():
            key = (n.offsets[row] + r, m.offsets[col] + c)
            out[key] = out.get(key, 0) + coeff * v
    return {k: v for k, v in out.items() if v}
