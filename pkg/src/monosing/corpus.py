"""Seeded random admissible presentations, drawn by rejection sampling."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import MonomialAlgebra, MonomialPresentation, validate
from .errors import AlgebraError
from .quiver import Arrow, Quiver

DEFAULT_RELATION_PROBABILITY = 0.55
DEFAULT_MAX_ATTEMPTS = 200_000


@dataclass
class Corpus:
    algebras: list[MonomialAlgebra]
    attempts: int
    rejected: int
    seed: int

    @property
    def rejection_rate(self) -> float:
        return self.rejected / self.attempts if self.attempts else 0.0

    def __len__(self) -> int:
        return len(self.algebras)

    def __iter__(self):
        return iter(self.algebras)


def random_presentation(
    rng: random.Random,
    max_vertices: int,
    max_arrows: int,
    relation_probability: float = DEFAULT_RELATION_PROBABILITY,
) -> MonomialPresentation:
    n = rng.randint(1, max_vertices)
    m = rng.randint(1, max_arrows)
    vertices = tuple(f"v{i}" for i in range(n))
    arrows = tuple(
        Arrow(f"a{j}", rng.choice(vertices), rng.choice(vertices)) for j in range(m)
    )
    forbidden = tuple(
        (b.name, a.name)
        for a in arrows
        for b in arrows
        if a.target == b.source and rng.random() < relation_probability
    )
    return MonomialPresentation(Quiver(vertices, arrows), forbidden)


def generate(
    seed: int,
    count: int,
    max_vertices: int = 4,
    max_arrows: int = 6,
    relation_probability: float = DEFAULT_RELATION_PROBABILITY,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> Corpus:
    """``count`` admissible algebras; rejects infinite-dimensional draws.

    Raises CORPUS_EXHAUSTED when the attempt cap is hit first.
    """
    if count < 0 or max_vertices < 1 or max_arrows < 1:
        raise AlgebraError("INVALID_ARGUMENT", "count must be >= 0, sizes >= 1")
    rng = random.Random(seed)
    out: list[MonomialAlgebra] = []
    attempts = rejected = 0
    while len(out) < count:
        if attempts >= max_attempts:
            raise AlgebraError(
                "CORPUS_EXHAUSTED",
                f"only {len(out)} of {count} admissible instances after {attempts} attempts",
            )
        attempts += 1
        p = random_presentation(rng, max_vertices, max_arrows, relation_probability)
        try:
            out.append(validate(p))
        except AlgebraError as exc:
            if exc.code != "INFINITE_DIMENSIONAL":
                raise
            rejected += 1
    return Corpus(out, attempts, rejected, seed)
