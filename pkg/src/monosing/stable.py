"""Combinatorial stable category on sums of arrow modules, simples and
indecomposable projectives.

An object is a sorted list of generators with multiplicities.  Copies of a
generator are numbered, so an object of total multiplicity n has flat
positions 0..n-1 (generator order, then copy number); morphism matrices use
these positions, rows for the target and columns for the source.
"""
from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator

from .algebra import MonomialAlgebra, is_projective_arrow_module, neighbor_set
from .errors import AlgebraError

ARROW, PROJ, SIMPLE = "A", "P", "S"


@dataclass(frozen=True, order=True)
class Generator:
    kind: str
    name: str

    def __str__(self) -> str:
        return f"{self.kind}({self.name})"


def A(name: str) -> Generator:
    return Generator(ARROW, name)


def S(name: str) -> Generator:
    return Generator(SIMPLE, name)


def P(name: str) -> Generator:
    return Generator(PROJ, name)


@dataclass(frozen=True)
class StableObject:
    algebra: MonomialAlgebra
    terms: tuple[tuple[Generator, int], ...] = ()

    def __post_init__(self) -> None:
        counts: Counter[Generator] = Counter()
        for g, m in self.terms:
            if m < 0:
                raise AlgebraError("INVALID_OBJECT", "negative multiplicity")
            counts[g] += m
        for g in counts:
            _check_generator(self.algebra, g)
        object.__setattr__(
            self, "terms", tuple((g, counts[g]) for g in sorted(counts) if counts[g])
        )

    @classmethod
    def of(cls, algebra: MonomialAlgebra, generators: Iterable[Generator]) -> StableObject:
        return cls(algebra, tuple((g, 1) for g in generators))

    def __add__(self, other: StableObject) -> StableObject:
        _same_algebra(self, other)
        return StableObject(self.algebra, self.terms + other.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(g) if m == 1 else f"{m}*{g}" for g, m in self.terms)

    @property
    def size(self) -> int:
        return sum(m for _, m in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_arrow_sum(self) -> bool:
        return all(g.kind == ARROW for g, _ in self.terms)

    def multiplicity(self, g: Generator) -> int:
        return dict(self.terms).get(g, 0)

    @property
    def generators(self) -> list[Generator]:
        """Flat list, one entry per copy."""
        return [g for g, m in self.terms for _ in range(m)]

    @cached_property
    def offsets(self) -> dict[Generator, int]:
        out, pos = {}, 0
        for g, m in self.terms:
            out[g] = pos
            pos += m
        return out

    @cached_property
    def _starts(self) -> list[int]:
        return list(self.offsets.values())

    def locate(self, position: int) -> tuple[Generator, int]:
        """(generator, copy number) at a flat position."""
        if not 0 <= position < self.size:
            raise IndexError(position)
        i = bisect_right(self._starts, position) - 1
        g = self.terms[i][0]
        return g, position - self._starts[i]


def _check_generator(a: MonomialAlgebra, g: Generator) -> None:
    if g.kind == ARROW:
        a.arrow(g.name)
    elif g.kind in (SIMPLE, PROJ):
        if not a.has_vertex(g.name):
            raise AlgebraError("UNKNOWN_VERTEX", f"no vertex named {g.name!r}")
    else:
        raise AlgebraError("INVALID_OBJECT", f"unknown generator kind {g.kind!r}")


def _same_algebra(x: StableObject, y: StableObject) -> None:
    if x.algebra is not y.algebra and x.algebra != y.algebra:
        raise AlgebraError("ALGEBRA_MISMATCH", "objects live over different algebras")


def is_projective_generator(a: MonomialAlgebra, g: Generator) -> bool:
    if g.kind == PROJ:
        return True
    if g.kind == ARROW:
        return is_projective_arrow_module(a, g.name)
    # S_v = A e_v exactly when no arrow starts at v
    return not a.quiver.out_arrows(g.name)


def normalize(x: StableObject) -> StableObject:
    """Drop every projective summand (zero in the stable category)."""
    a = x.algebra
    return StableObject(a, tuple((g, m) for g, m in x.terms if not is_projective_generator(a, g)))


def syzygy_generators(a: MonomialAlgebra, g: Generator) -> tuple[Generator, ...]:
    """Summands of the first syzygy of one generator, projectives included."""
    if g.kind == ARROW:
        return tuple(A(b) for b in a.annihilating_arrows(g.name))
    if g.kind == SIMPLE:
        return tuple(sorted(A(arr.name) for arr in a.quiver.out_arrows(g.name)))
    return ()


def _stable_block(a: MonomialAlgebra, g: Generator) -> tuple[Generator, ...]:
    return tuple(c for c in syzygy_generators(a, g) if not is_projective_generator(a, c))


def raw_syzygy(x: StableObject) -> StableObject:
    """Kernel of the projective cover, as a module (projective summands kept)."""
    a = x.algebra
    counts: Counter[Generator] = Counter()
    for g, m in x.terms:
        for c in syzygy_generators(a, g):
            counts[c] += m
    return StableObject(a, tuple(counts.items()))


def syzygy_object(x: StableObject) -> StableObject:
    return _Layout(normalize(x)).image


def iterated_syzygy(x: StableObject, n: int) -> StableObject:
    x = normalize(x)
    for _ in range(n):
        x = syzygy_object(x)
    return x


class _Layout:
    """Where each summand of Omega(copy s of g) sits inside Omega(x).

    Copies of a child generator c in Omega(x) are ordered by parent generator,
    then parent copy number; every parent copy contributes c at most once.
    """

    def __init__(self, x: StableObject) -> None:
        a = x.algebra
        self.source = x
        self.blocks = {g: _stable_block(a, g) for g, _ in x.terms}
        counts: Counter[Generator] = Counter()
        self.before: dict[tuple[Generator, Generator], int] = {}
        for g, m in x.terms:
            for c in self.blocks[g]:
                self.before[(g, c)] = counts[c]
                counts[c] += m
        self.image = StableObject(a, tuple(counts.items()))

    def child_position(self, g: Generator, copy: int, child: Generator) -> int:
        return self.image.offsets[child] + self.before[(g, child)] + copy


# ---------------------------------------------------------------------------
# hom spaces


def _simple_vertex(a: MonomialAlgebra, g: Generator) -> str:
    return g.name if g.kind == SIMPLE else a.arrow(g.name).target


def legal_pair(a: MonomialAlgebra, g: Generator, h: Generator) -> bool:
    """Whether stable Hom(g, h) is one-dimensional (both non-projective)."""
    if is_projective_generator(a, g) or is_projective_generator(a, h):
        return False
    if g.kind == ARROW and h.kind == ARROW:
        return h.name in neighbor_set(a, g.name)
    if g.kind == SIMPLE and h.kind == SIMPLE:
        return g.name == h.name
    if a.is_radical_square_zero:
        # over kQ/J^2 every arrow module A*a is the simple at t(a)
        return _simple_vertex(a, g) == _simple_vertex(a, h)
    raise AlgebraError(
        "UNSUPPORTED_HOM",
        f"stable Hom({g}, {h}) between a simple and an arrow module is only "
        "available over radical-square-zero algebras",
    )


@dataclass(frozen=True)
class HomBlock:
    source_gen: Generator
    target_gen: Generator
    source_mult: int
    target_mult: int
    offset: int

    @property
    def dim(self) -> int:
        return self.source_mult * self.target_mult


class HomSpace:
    """Basis of stable Hom(x, y): one element pi[g#s -> h#t] per copy pair of
    a legal generator pair (g, h).  Elements are numbered block by block,
    source copy major."""

    def __init__(self, source: StableObject, target: StableObject) -> None:
        _same_algebra(source, target)
        self.source = normalize(source)
        self.target = normalize(target)
        a = self.source.algebra
        blocks, pos = [], 0
        for g, m in self.source.terms:
            for h, n in self.target.terms:
                if legal_pair(a, g, h):
                    blocks.append(HomBlock(g, h, m, n, pos))
                    pos += m * n
        self.blocks: tuple[HomBlock, ...] = tuple(blocks)
        self.dim = pos
        self._by_pair = {(b.source_gen, b.target_gen): b for b in blocks}

    def __len__(self) -> int:
        return self.dim

    def index(self, col: int, row: int) -> int | None:
        """Basis number of the element from source position col to target
        position row, or None when that position is not legal."""
        g, s = self.source.locate(col)
        h, t = self.target.locate(row)
        b = self._by_pair.get((g, h))
        if b is None:
            return None
        return b.offset + s * b.target_mult + t

    def elements(self) -> Iterator[tuple[int, int]]:
        """(source position, target position) for each basis element in order."""
        for b in self.blocks:
            c0 = self.source.offsets[b.source_gen]
            r0 = self.target.offsets[b.target_gen]
            for s in range(b.source_mult):
                for t in range(b.target_mult):
                    yield c0 + s, r0 + t

    def labels(self) -> list[str]:
        out = []
        for col, row in self.elements():
            g, s = self.source.locate(col)
            h, t = self.target.locate(row)
            out.append(f"pi[{g}#{s} -> {h}#{t}]")
        return out

    def basis_morphism(self, i: int) -> StableMorphism:
        for k, (col, row) in enumerate(self.elements()):
            if k == i:
                return StableMorphism(self.source, self.target, {(row, col): 1})
        raise IndexError(i)


def stable_hom(x: StableObject, y: StableObject) -> HomSpace:
    return HomSpace(x, y)


# ---------------------------------------------------------------------------
# morphisms


class StableMorphism:
    """Sparse matrix over Q between normalized objects; entry (row, col) is a
    multiple of the basis map from source position col to target position row."""

    def __init__(self, source: StableObject, target: StableObject, entries=None) -> None:
        _same_algebra(source, target)
        if normalize(source) != source or normalize(target) != target:
            raise AlgebraError("ILLEGAL_MORPHISM", "source and target must be normalized")
        self.source, self.target = source, target
        clean: dict[tuple[int, int], Fraction] = {}
        a = source.algebra
        for (row, col), v in dict(entries or {}).items():
            v = Fraction(v)
            if not v:
                continue
            if not (0 <= row < target.size and 0 <= col < source.size):
                raise AlgebraError("SHAPE_MISMATCH", f"entry ({row}, {col}) out of range")
            g, _ = source.locate(col)
            h, _ = target.locate(row)
            if not legal_pair(a, g, h):
                raise AlgebraError(
                    "ILLEGAL_MORPHISM", f"no nonzero stable map {g} -> {h}"
                )
            clean[(row, col)] = v
        self.entries: dict[tuple[int, int], Fraction] = clean

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StableMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"StableMorphism({self.source} -> {self.target}, {self.matrix})"

    @property
    def is_zero(self) -> bool:
        return not self.entries

    @property
    def matrix(self) -> list[list[Fraction]]:
        m = [[Fraction(0)] * self.source.size for _ in range(self.target.size)]
        for (r, c), v in self.entries.items():
            m[r][c] = v
        return m

    def coordinates(self, hom: HomSpace) -> dict[int, Fraction]:
        out = {}
        for (row, col), v in self.entries.items():
            i = hom.index(col, row)
            if i is None:
                raise AlgebraError("ILLEGAL_MORPHISM", "entry outside the hom basis")
            out[i] = v
        return out


def identity(x: StableObject) -> StableMorphism:
    x = normalize(x)
    return StableMorphism(x, x, {(i, i): 1 for i in range(x.size)})


def zero_morphism(x: StableObject, y: StableObject) -> StableMorphism:
    return StableMorphism(normalize(x), normalize(y))


def compose(g: StableMorphism, f: StableMorphism) -> StableMorphism:
    """g after f.  Basis maps compose to basis maps; a product landing on an
    illegal position is stably zero."""
    if g.source != f.target:
        raise AlgebraError("SHAPE_MISMATCH", "target of f differs from source of g")
    by_row: dict[int, list[tuple[int, Fraction]]] = {}
    for (mid, col), v in f.entries.items():
        by_row.setdefault(mid, []).append((col, v))
    acc: dict[tuple[int, int], Fraction] = {}
    for (row, mid), w in g.entries.items():
        for col, v in by_row.get(mid, ()):
            acc[(row, col)] = acc.get((row, col), 0) + w * v
    a = f.source.algebra
    legal = {}
    for (row, col), v in acc.items():
        if v and legal_pair(a, f.source.locate(col)[0], g.target.locate(row)[0]):
            legal[(row, col)] = v
    return StableMorphism(f.source, g.target, legal)


def _syzygy_entries(src: _Layout, tgt: _Layout, entries) -> dict[tuple[int, int], Fraction]:
    out: dict[tuple[int, int], Fraction] = {}
    x, y = src.source, tgt.source
    for (row, col), v in entries:
        g, s = x.locate(col)
        h, t = y.locate(row)
        inner, outer = src.blocks[g], tgt.blocks[h]
        if not set(inner) <= set(outer):
            raise AlgebraError("ILLEGAL_MORPHISM", f"Omega({g}) does not include into Omega({h})")
        for c in inner:
            key = (tgt.child_position(h, t, c), src.child_position(g, s, c))
            out[key] = out.get(key, 0) + v
    return out


def syzygy_morphism(f: StableMorphism) -> StableMorphism:
    """Omega on morphisms: pi[g -> h] becomes the inclusion of the summands of
    Omega(g) into those of Omega(h), extended linearly."""
    src, tgt = _Layout(f.source), _Layout(f.target)
    return StableMorphism(src.image, tgt.image, _syzygy_entries(src, tgt, f.entries.items()))
