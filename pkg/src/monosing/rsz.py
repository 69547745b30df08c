"""Relation quiver, the radical-square-zero algebra it defines, and the
comparison of syzygy-shifted stable homs on both sides."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import MonomialAlgebra, MonomialPresentation, validate
from .errors import AlgebraError
from .quiver import Arrow, Quiver
from .stabilization import DEFAULT_CUTOFF, build_direct_system, dsg_hom
from .stable import ARROW, PROJ, SIMPLE, Generator, StableObject, _same_algebra, normalize


def relation_label(beta: str, alpha: str) -> str:
    return f"[{beta}.{alpha}]"


def label_pair(label: str) -> tuple[str, str]:
    """Inverse of :func:`relation_label`: ``"[b.a]"`` -> ``("b", "a")``."""
    beta, alpha = label[1:-1].split(".")
    return beta, alpha


def relation_quiver(a: MonomialAlgebra) -> Quiver:
    """One vertex per arrow of Q, one arrow alpha -> beta per forbidden beta.alpha."""
    pairs = sorted(a.presentation.forbidden, key=lambda p: (p[1], p[0]))
    return Quiver(
        a.quiver.arrow_names,
        tuple(Arrow(relation_label(b, al), al, b, relation_label(b, al)) for b, al in pairs),
    )


@lru_cache(maxsize=256)
def rsz_algebra(r: Quiver) -> MonomialAlgebra:
    """kR/J^2: every composable pair of arrows is forbidden."""
    forbidden = tuple(
        (b.name, a.name) for a in r.arrows for b in r.arrows if a.target == b.source
    )
    return validate(MonomialPresentation(r, forbidden))


def b_algebra(a: MonomialAlgebra) -> MonomialAlgebra:
    return rsz_algebra(relation_quiver(a))


def transport(x: StableObject, b: MonomialAlgebra | None = None) -> StableObject:
    """A*alpha |-> S_alpha, multiplicities kept."""
    if not x.is_arrow_sum:
        raise AlgebraError("NOT_ARROW_SUM", f"{x} is not a sum of arrow modules")
    b = b or b_algebra(x.algebra)
    return StableObject(b, tuple((Generator(SIMPLE, g.name), m) for g, m in x.terms))


def as_semisimple(y: StableObject) -> StableObject:
    """Rewrite an object over kR/J^2 with arrow modules replaced by the
    simples they are isomorphic to (A*a = S_t(a))."""
    b = y.algebra
    if not b.is_radical_square_zero:
        raise AlgebraError("INVALID_ARGUMENT", "algebra is not radical square zero")
    terms = []
    for g, m in y.terms:
        if g.kind == PROJ:
            raise AlgebraError("INVALID_ARGUMENT", "projective summand is not semisimple")
        name = b.arrow(g.name).target if g.kind == ARROW else g.name
        terms.append((Generator(SIMPLE, name), m))
    return StableObject(b, tuple(terms))


@dataclass
class CrossCheckReport:
    depth: int
    dims_a: list[int]
    dims_b: list[int]
    connecting_ranks_a: list[int]
    connecting_ranks_b: list[int]
    rank_table_a: list[list[int]]
    rank_table_b: list[list[int]]
    checks: dict[str, bool]
    colimit_a: int | None
    colimit_b: int | None

    @property
    def levelwise_identical(self) -> bool:
        return self.dims_a == self.dims_b and self.connecting_ranks_a == self.connecting_ranks_b

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict[str, object]:
        return {
            "status": self.status,
            "depth": self.depth,
            "dims": {"A": self.dims_a, "B": self.dims_b},
            "connecting_ranks": {"A": self.connecting_ranks_a, "B": self.connecting_ranks_b},
            "rank_tables": {"A": self.rank_table_a, "B": self.rank_table_b},
            "checks": dict(self.checks),
            "levelwise_identical": self.levelwise_identical,
            "colimit": {"A": self.colimit_a, "B": self.colimit_b},
        }


def _diagonal_dim(hom) -> int:
    return sum(blk.dim for blk in hom.blocks if blk.source_gen == blk.target_gen)


def cross_check(
    a: MonomialAlgebra, x: StableObject, y: StableObject, depth: int = DEFAULT_CUTOFF
) -> CrossCheckReport:
    """Compare the A-side direct system of (x, y) with the B-side one of
    their transports, B = kR_A/J^2.

    Checks performed (all must hold for PASS):

    * ``syzygy_commutes``: transporting Omega_A^i commutes with Omega_B^i;
    * ``faithful``: the B-side hom space at each level has the dimension of
      the part of the A-side one spanned by maps between equal generators;
    * ``image_in_transport``: every A-side connecting map lands in that part;
    * ``rank_interleaving``: rank_B(i->j) <= rank_A(i->j) <= rank_B(i+1->j);
    * ``colimits_agree``: both sides stabilize alike, with equal dimension
      when the orbits are periodic.
    """
    for obj in (x, y):
        if obj.algebra is not a and obj.algebra != a:
            raise AlgebraError("ALGEBRA_MISMATCH", "objects are not over the given algebra")
        if not obj.is_arrow_sum:
            raise AlgebraError("NOT_ARROW_SUM", f"{obj} is not a sum of arrow modules")
    _same_algebra(x, y)
    b = b_algebra(a)
    tx, ty = transport(x, b), transport(y, b)
    sys_a = build_direct_system(x, y, depth)
    sys_b = build_direct_system(tx, ty, depth)
    table_a, table_b = sys_a.rank_table(), sys_b.rank_table()

    commutes = all(
        as_semisimple(xb) == normalize(transport(xa, b))
        and as_semisimple(yb) == normalize(transport(ya, b))
        for xa, ya, xb, yb in zip(sys_a.xs, sys_a.ys, sys_b.xs, sys_b.ys)
    )
    diagonal = [_diagonal_dim(h) for h in sys_a.homs]
    faithful = all(
        db == dg <= da for db, dg, da in zip(sys_b.dims, diagonal, sys_a.dims)
    )
    image_ok = True
    if sys_a.maps is not None:
        for i, cols in enumerate(sys_a.maps):
            target = sys_a.homs[i + 1]
            allowed = set()
            for blk in target.blocks:
                if blk.source_gen == blk.target_gen:
                    allowed.update(range(blk.offset, blk.offset + blk.dim))
            if any(k not in allowed for col in cols for k in col):
                image_ok = False
    interleaved = True
    for i in range(depth + 1):
        for j in range(i + 1, depth + 1):
            ra, rb = table_a[i][j - i], table_b[i][j - i]
            upper = table_b[i + 1][j - i - 1]
            if not rb <= ra <= upper:
                interleaved = False
    col_a, col_b = dsg_hom(x, y, depth), dsg_hom(tx, ty, depth)
    colimits = col_a.status == col_b.status and col_a.dimension == col_b.dimension

    return CrossCheckReport(
        depth=depth,
        dims_a=sys_a.dims,
        dims_b=sys_b.dims,
        connecting_ranks_a=[row[1] for row in table_a[:-1]],
        connecting_ranks_b=[row[1] for row in table_b[:-1]],
        rank_table_a=table_a,
        rank_table_b=table_b,
        checks={
            "syzygy_commutes": commutes,
            "faithful": faithful,
            "image_in_transport": image_ok,
            "rank_interleaving": interleaved,
            "colimits_agree": colimits,
        },
        colimit_a=col_a.dimension,
        colimit_b=col_b.dimension,
    )
