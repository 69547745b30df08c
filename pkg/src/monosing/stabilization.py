"""Direct systems Hom(X, Y) -> Hom(Omega X, Omega Y) -> ... and their colimits.

The colimit of this system is the Hom space between X and Y in the
singularity category.  It is computed exactly when the syzygy orbits of X
and Y become periodic; otherwise only the finite rank table is reported.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .errors import AlgebraError
from .linalg import SparseVector, compose_columns, rank
from .stable import (
    Generator,
    HomSpace,
    StableObject,
    _Layout,
    _same_algebra,
    _stable_block,
    _syzygy_entries,
    normalize,
    syzygy_object,
)

DEFAULT_CUTOFF = 8
DEFAULT_BOUND = 32
# largest hom dimension for which connecting maps are materialized
EXPLICIT_LIMIT = 20000

EXACT, CUTOFF = "EXACT", "CUTOFF"


@dataclass
class DirectSystem:
    xs: tuple[StableObject, ...]
    ys: tuple[StableObject, ...]
    homs: tuple[HomSpace, ...]
    maps: tuple[list[SparseVector], ...] | None

    @property
    def cutoff(self) -> int:
        return len(self.xs) - 1

    @property
    def dims(self) -> list[int]:
        return [h.dim for h in self.homs]

    @property
    def rank_method(self) -> str:
        return "explicit" if self.maps is not None else "block"

    def rank_table(self) -> list[list[int]]:
        """row i lists rank(V_i -> V_j) for j = i, ..., cutoff."""
        if self.maps is None:
            return _block_rank_table(self)
        table = []
        for i in range(self.cutoff + 1):
            row = [self.homs[i].dim]
            current = None
            for j in range(i, self.cutoff):
                current = self.maps[j] if current is None else compose_columns(self.maps[j], current)
                row.append(rank(current))
            table.append(row)
        return table


def _connecting_map(hx: HomSpace, hy: HomSpace, lx: _Layout, ly: _Layout) -> list[SparseVector]:
    cols = []
    for col, row in hx.elements():
        image = _syzygy_entries(lx, ly, [((row, col), 1)])
        vec: SparseVector = {}
        for (r, c), v in image.items():
            k = hy.index(c, r)
            if k is None:
                raise AlgebraError("ILLEGAL_MORPHISM", "syzygy left the hom basis")
            vec[k] = vec.get(k, 0) + v
        cols.append({k: v for k, v in vec.items() if v})
    return cols


def build_direct_system(
    x: StableObject, y: StableObject, cutoff: int, explicit_limit: int = EXPLICIT_LIMIT
) -> DirectSystem:
    _same_algebra(x, y)
    if cutoff < 1:
        raise AlgebraError("INVALID_ARGUMENT", "cutoff must be at least 1")
    xs, ys = [normalize(x)], [normalize(y)]
    for _ in range(cutoff):
        xs.append(syzygy_object(xs[-1]))
        ys.append(syzygy_object(ys[-1]))
    homs = tuple(HomSpace(a, b) for a, b in zip(xs, ys))
    maps = None
    if max(h.dim for h in homs) <= explicit_limit:
        maps = tuple(
            _connecting_map(homs[i], homs[i + 1], _Layout(xs[i]), _Layout(ys[i]))
            for i in range(cutoff)
        )
    return DirectSystem(tuple(xs), tuple(ys), homs, maps)


def _survives(x: StableObject, g: Generator, steps: int, cache: dict) -> bool:
    """Whether Omega^steps of the single generator g is nonzero."""
    key = (g, steps)
    if key not in cache:
        if steps == 0:
            cache[key] = True
        else:
            cache[key] = any(
                _survives(x, c, steps - 1, cache) for c in _stable_block(x.algebra, g)
            )
    return cache[key]


def _block_rank_table(ds: DirectSystem) -> list[list[int]]:
    # Omega sends the basis element between copies of (g, h) to a sum of
    # basis elements with supports disjoint from every other element's image,
    # so a composite's rank counts the elements whose source generator
    # still has a nonzero syzygy at the far end.
    cache: dict = {}
    table = []
    for i, hom in enumerate(ds.homs):
        row = []
        for j in range(i, ds.cutoff + 1):
            row.append(
                sum(b.dim for b in hom.blocks if _survives(ds.xs[i], b.source_gen, j - i, cache))
            )
        table.append(row)
    return table


def _orbit_period(orbit_step, start, bound: int) -> tuple[int, int] | None:
    seen = {start: 0}
    current = start
    for n in range(1, 2 * bound + 1):
        current = orbit_step(current)
        if current in seen:
            p = seen[current]
            q = n - p
            return (p, q) if p <= bound and q <= bound else None
        seen[current] = n
    return None


def detect_periodicity(x: StableObject, bound: int = DEFAULT_BOUND) -> tuple[int, int] | None:
    """Smallest (p, q) with Omega^(p+q) x = Omega^p x as multisets."""
    return _orbit_period(syzygy_object, normalize(x), bound)


def detect_pair_periodicity(
    x: StableObject, y: StableObject, bound: int = DEFAULT_BOUND
) -> tuple[int, int] | None:
    """Common (p, q) for both orbits; q is the lcm of the two periods."""
    px, py = detect_periodicity(x, bound), detect_periodicity(y, bound)
    if px is None or py is None:
        return None
    return max(px[0], py[0]), lcm(px[1], py[1])


@dataclass
class StabilizationResult:
    status: str
    dims: list[int]
    rank_table: list[list[int]]
    rank_method: str
    dimension: int | None = None
    period: tuple[int, int] | None = None
    start_level: int = 0
    stable_ranks: list[int] = field(default_factory=list)
    nonincreasing: bool = True
    all_injective: bool = False

    def to_dict(self) -> dict[str, object]:
        return {
            "status": self.status,
            "dimension": self.dimension,
            "period": list(self.period) if self.period else None,
            "start_level": self.start_level,
            "dims": self.dims,
            "rank_table": self.rank_table,
            "stable_ranks": self.stable_ranks,
            "nonincreasing": self.nonincreasing,
            "all_injective": self.all_injective,
            "rank_method": self.rank_method,
        }


def _endomorphism_power_rank(t: list[SparseVector]) -> int:
    """rank(T^k) for k large, where T is an endomorphism of a space of dim len(t)."""
    current = t
    r = rank(current)
    for _ in range(len(t)):
        current = compose_columns(t, current)
        nxt = rank(current)
        if nxt == r:
            return r
        r = nxt
    return r


def colimit_rank(ds: DirectSystem, periodicity: tuple[int, int] | None = None) -> StabilizationResult:
    table = ds.rank_table()
    dims = ds.dims
    stable_ranks = [row[-1] for row in table]
    monotone = all(all(a >= b for a, b in zip(row, row[1:])) for row in table)
    injective = all(row[1] == row[0] for row in table[:-1]) if ds.cutoff else True
    result = StabilizationResult(
        status=CUTOFF,
        dims=dims,
        rank_table=table,
        rank_method=ds.rank_method,
        stable_ranks=stable_ranks,
        nonincreasing=monotone,
        all_injective=injective,
    )
    if periodicity is None:
        return result
    p, q = periodicity
    if p + q > ds.cutoff or ds.xs[p + q] != ds.xs[p] or ds.ys[p + q] != ds.ys[p]:
        raise AlgebraError("INVALID_ARGUMENT", "periodicity data does not match the system")
    if ds.maps is not None:
        t = ds.maps[p]
        for j in range(p + 1, p + q):
            t = compose_columns(ds.maps[j], t)
        dimension = _endomorphism_power_rank(t) if dims[p] else 0
    else:
        # a basis element survives forever iff its source generator does
        horizon = len(ds.xs[0].algebra.quiver.arrows) + 2
        cache: dict = {}
        dimension = sum(
            b.dim for b in ds.homs[p].blocks if _survives(ds.xs[p], b.source_gen, horizon, cache)
        )
    result.status = EXACT
    result.dimension = dimension
    result.period = (p, q)
    return result


def dsg_hom(
    x: StableObject,
    y: StableObject,
    cutoff: int = DEFAULT_CUTOFF,
    bound: int = DEFAULT_BOUND,
) -> StabilizationResult:
    """Hom in the singularity category as the colimit of syzygy-shifted stable homs."""
    _same_algebra(x, y)
    start = 0
    try:
        HomSpace(x, y)
    except AlgebraError as exc:
        if exc.code != "UNSUPPORTED_HOM":
            raise
        # dropping the first term leaves the colimit unchanged; after one
        # syzygy both objects are sums of arrow modules
        x, y, start = syzygy_object(x), syzygy_object(y), 1
    period = detect_pair_periodicity(x, y, bound)
    depth = max(cutoff, sum(period)) if period else cutoff
    ds = build_direct_system(x, y, depth)
    result = colimit_rank(ds, period)
    result.start_level = start
    return result
