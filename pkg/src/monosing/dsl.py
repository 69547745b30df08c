"""Text formats: algebra specification files and module expressions.

Specification files are line oriented::

    # k<x, y>/(x^2, y^2, yx)
    vertices: v
    arrow x: v -> v
    arrow y: v -> v
    relation x.x
    relation y.y
    relation y.x

``relation b.a`` is the path "a then b".  Names are ASCII words (letters, digits, underscore).
"""
from __future__ import annotations

import re

from .algebra import MonomialAlgebra, MonomialPresentation
from .errors import AlgebraError
from .quiver import Arrow, Quiver
from .stable import ARROW, PROJ, SIMPLE, Generator, StableObject

NAME = r"[A-Za-z0-9_]+"
_NAME_RE = re.compile(NAME)
_VERTICES_RE = re.compile(r"vertices\s*:(?P<rest>.*)")
_ARROW_RE = re.compile(
    rf"arrow\s+(?P<name>{NAME})\s*:\s*(?P<src>{NAME})\s*->\s*(?P<tgt>{NAME})\s*"
)
_RELATION_RE = re.compile(rf"relation\s+(?P<b>{NAME})\s*\.\s*(?P<a>{NAME})\s*")


def _parse_error(msg: str, line: int, col: int) -> AlgebraError:
    return AlgebraError("PARSE_ERROR", f"line {line}, column {col}: {msg}", line=line, column=col)


def parse_spec(text: str) -> MonomialPresentation:
    vertices: list[str] = []
    vertex_lines: dict[str, int] = {}
    arrows: list[tuple[str, str, str, int, int]] = []
    relations: list[tuple[str, str, int, int]] = []
    seen_arrows: set[str] = set()
    seen_relations: set[tuple[str, str]] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue
        col = len(line) - len(stripped) + 1
        if not stripped.isascii():
            bad = next(i for i, ch in enumerate(line) if not ch.isascii())
            raise _parse_error("non-ASCII character", lineno, bad + 1)
        if m := _VERTICES_RE.fullmatch(stripped):
            rest = m.group("rest")
            base = col + m.start("rest")
            if not rest.strip():
                raise _parse_error("expected at least one vertex name", lineno, base)
            for tok in re.finditer(r"\S+", rest):
                if not _NAME_RE.fullmatch(tok.group()):
                    raise _parse_error(f"invalid vertex name {tok.group()!r}", lineno, base + tok.start())
                name = tok.group()
                if name in vertex_lines:
                    raise AlgebraError(
                        "DUPLICATE_DECLARATION",
                        f"line {lineno}: vertex {name!r} already declared on line {vertex_lines[name]}",
                        line=lineno,
                    )
                vertex_lines[name] = lineno
                vertices.append(name)
        elif m := _ARROW_RE.fullmatch(stripped):
            name = m.group("name")
            if name in seen_arrows:
                raise AlgebraError(
                    "DUPLICATE_DECLARATION", f"line {lineno}: arrow {name!r} declared twice", line=lineno
                )
            seen_arrows.add(name)
            arrows.append((name, m.group("src"), m.group("tgt"), lineno, col))
        elif m := _RELATION_RE.fullmatch(stripped):
            pair = (m.group("b"), m.group("a"))
            if pair in seen_relations:
                raise AlgebraError(
                    "DUPLICATE_DECLARATION",
                    f"line {lineno}: relation {pair[0]}.{pair[1]} declared twice",
                    line=lineno,
                )
            seen_relations.add(pair)
            relations.append((pair[0], pair[1], lineno, col))
        else:
            keyword = stripped.split()[0].rstrip(":")
            if keyword in ("vertices", "arrow", "relation"):
                raise _parse_error(f"malformed {keyword} declaration", lineno, col)
            raise _parse_error(f"unknown declaration {keyword!r}", lineno, col)

    known = set(vertices)
    for name, src, tgt, lineno, _ in arrows:
        for v in (src, tgt):
            if v not in known:
                raise AlgebraError(
                    "UNDECLARED_NAME", f"line {lineno}: arrow {name} uses undeclared vertex {v!r}", line=lineno
                )
    quiver = Quiver(tuple(vertices), tuple(Arrow(n, s, t) for n, s, t, _, _ in arrows))
    ends = {n: (s, t) for n, s, t, _, _ in arrows}
    for b, a, lineno, _ in relations:
        for n in (a, b):
            if n not in ends:
                raise AlgebraError(
                    "UNDECLARED_NAME", f"line {lineno}: relation uses undeclared arrow {n!r}", line=lineno
                )
        if ends[a][1] != ends[b][0]:
            raise AlgebraError(
                "NON_COMPOSABLE_RELATION",
                f"line {lineno}: relation {b}.{a} needs t({a}) = s({b})",
                line=lineno,
                relation=f"{b}.{a}",
            )
    return MonomialPresentation(quiver, tuple((b, a) for b, a, _, _ in relations))


def render(p: MonomialPresentation) -> str:
    lines = [f"vertices: {' '.join(p.quiver.vertices)}"]
    lines += [f"arrow {a.name}: {a.source} -> {a.target}" for a in p.quiver.arrows]
    lines += [f"relation {b}.{a}" for b, a in p.forbidden]
    return "\n".join(lines) + "\n"


_KINDS = {"A": ARROW, "S": SIMPLE, "P": PROJ}
_TERM_RE = re.compile(rf"\s*(?P<kind>[ASP])\s*\(\s*(?P<name>{NAME})\s*\)\s*")


def parse_generators(expr: str) -> list[Generator]:
    """``"A(x) + S(v)"`` -> generators; names are not checked here."""
    if not expr.strip():
        raise _parse_error("empty module expression", 1, 1)
    out = []
    pos = 0
    for part in expr.split("+"):
        m = _TERM_RE.fullmatch(part)
        if m is None:
            offset = len(part) - len(part.lstrip())
            raise _parse_error(f"expected A(name), S(name) or P(name), got {part.strip()!r}", 1, pos + offset + 1)
        out.append(Generator(_KINDS[m.group("kind")], m.group("name")))
        pos += len(part) + 1
    return out


def parse_object(a: MonomialAlgebra, expr: str) -> StableObject:
    gens = parse_generators(expr)
    try:
        return StableObject.of(a, gens)
    except AlgebraError as exc:
        if exc.code in ("UNKNOWN_ARROW", "UNKNOWN_VERTEX"):
            raise AlgebraError("UNDECLARED_NAME", exc.message) from exc
        raise
