"""Command-line interface: ``monosing <command> FILE [options]``.

Exit codes: 0 success or PASS, 1 a check FAILed, 2 input error.
With ``--json`` every command prints one JSON document whose top level
always carries the keys ``command``, ``status``, ``dims``, ``bases``,
``components`` and ``descriptors`` (null when not applicable) plus a
command specific ``data`` object.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FilePath

from . import corpus as corpus_mod
from . import oracle
from .algebra import MonomialAlgebra, validate
from .dsl import parse_object, parse_spec, render
from .errors import AlgebraError
from .report import quiver_dict, singularity_report
from .rsz import cross_check, relation_quiver
from .stabilization import DEFAULT_BOUND, DEFAULT_CUTOFF, dsg_hom
from .stable import HomSpace, StableObject, normalize, syzygy_object

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Outcome:
    def __init__(self, command: str, status: str = "OK", **keys) -> None:
        self.command = command
        self.status = status
        self.keys = {k: keys.pop(k, None) for k in ("dims", "bases", "components", "descriptors")}
        self.data = keys.pop("data", {})
        self.lines: list[str] = []

    def to_dict(self) -> dict[str, object]:
        return {"command": self.command, "status": self.status, **self.keys, "data": self.data}

    @property
    def exit_code(self) -> int:
        return EXIT_FAIL if self.status == "FAIL" else EXIT_OK


def load_algebra(path: str) -> MonomialAlgebra:
    try:
        text = FilePath(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise AlgebraError("FILE_NOT_FOUND", f"cannot read {path}: {exc.strerror}") from exc
    return validate(parse_spec(text))


def _object_dim(x: StableObject) -> int:
    return oracle.realize(x).dim


def cmd_validate(args) -> Outcome:
    a = load_algebra(args.file)
    out = Outcome(
        "validate",
        data={
            "vertices": len(a.quiver.vertices),
            "arrows": len(a.quiver.arrows),
            "relations": len(a.presentation.forbidden),
            "dimension": a.dimension,
        },
    )
    out.lines.append(f"admissible: dimension {a.dimension} ({a.dimension} basis paths)")
    return out


def cmd_basis(args) -> Outcome:
    a = load_algebra(args.file)
    groups = {str(n): [str(p) for p in ps] for n, ps in sorted(a.paths_by_length.items())}
    out = Outcome("basis", bases=groups, dims=[len(v) for v in groups.values()])
    for n, paths in groups.items():
        out.lines.append(f"length {n}: {', '.join(paths)}")
    out.lines.append(f"total: {a.dimension}")
    return out


def cmd_relquiver(args) -> Outcome:
    a = load_algebra(args.file)
    r = relation_quiver(a)
    out = Outcome("relquiver", data=quiver_dict(r))
    out.lines.append(f"vertices: {' '.join(r.vertices)}")
    for arr in r.arrows:
        out.lines.append(f"{arr.label}: {arr.source} -> {arr.target}")
    if args.figures:
        from .plotting import draw_quiver

        draw_quiver(r, FilePath(args.figures) / "relation_quiver.png", title="relation quiver")
    return out


def _component_rows(rep) -> list[dict[str, object]]:
    return [
        {"vertices": list(c.vertices), "kind": c.kind.value, "size": c.size} for c in rep.components
    ]


def cmd_classify(args) -> Outcome:
    a = load_algebra(args.file)
    rep = singularity_report(a)
    out = Outcome(
        "classify",
        components=_component_rows(rep),
        data={"gorenstein": rep.gorenstein, "perfect_sizes": rep.perfect_sizes},
    )
    for c in rep.components:
        out.lines.append(f"{c.kind.value:8} size {c.size}: {' '.join(c.vertices)}")
    out.lines.append(f"gorenstein: {str(rep.gorenstein).lower()}")
    return out


def cmd_report(args) -> Outcome:
    a = load_algebra(args.file)
    rep = singularity_report(a)
    full = rep.to_dict()
    out = Outcome(
        "report",
        components=full.pop("components"),
        descriptors=[d["text"] for d in full["descriptors"]],
        data=full,
    )
    out.lines.append(f"dimension: {a.dimension}")
    out.lines.append("components:")
    for c in rep.components:
        out.lines.append(f"  {c.kind.value:8} size {c.size}: {' '.join(c.vertices)}")
    out.lines.append(f"perfect sizes: {rep.perfect_sizes}")
    out.lines.append(f"gorenstein: {str(rep.gorenstein).lower()}")
    gens = ", ".join(f"A({v})" for v in rep.gorenstein_projective_generators) or "(none)"
    out.lines.append(f"Gorenstein-projective generators: {gens}")
    dq = rep.defect_quiver
    out.lines.append(
        f"defect quiver: vertices {' '.join(dq.vertices) or '(empty)'}; "
        f"arrows {', '.join(x.name for x in dq.arrows) or '(none)'}"
    )
    out.lines.append(f"elimination rules differ: {str(rep.elimination_rules_differ).lower()}")
    out.lines.append("descriptors:")
    out.lines.extend(f"  {d.text}" for d in rep.descriptors)
    out.lines.extend(f"note: {n}" for n in rep.notes)
    if args.figures:
        from .plotting import draw_quiver

        kinds = {v: c.kind.value for c in rep.components for v in c.vertices}
        draw_quiver(rep.relation_quiver, FilePath(args.figures) / "relation_quiver.png", kinds, "relation quiver")
        if dq.vertices:
            draw_quiver(dq, FilePath(args.figures) / "defect_quiver.png", title="defect quiver")
    return out


def cmd_syzygy(args) -> Outcome:
    a = load_algebra(args.file)
    x = parse_object(a, args.object)
    if args.steps < 0:
        raise AlgebraError("INVALID_ARGUMENT", "--steps must be nonnegative")
    orbit = [normalize(x)]
    for _ in range(args.steps):
        orbit.append(syzygy_object(orbit[-1]))
    out = Outcome(
        "syzygy",
        dims=[_object_dim(o) for o in orbit],
        data={"orbit": [str(o) for o in orbit], "arrow_sum": [o.is_arrow_sum for o in orbit]},
    )
    for i, o in enumerate(orbit):
        out.lines.append(f"Omega^{i}: {o}")
    return out


def cmd_stable_hom(args) -> Outcome:
    a = load_algebra(args.file)
    x, y = parse_object(a, args.source), parse_object(a, args.target)
    hom = HomSpace(x, y)
    data: dict[str, object] = {"dimension": hom.dim}
    status = "OK"
    out_lines = [f"dim stable Hom({x}, {y}) = {hom.dim}"]
    out_lines += [f"  {label}" for label in hom.labels()]
    if args.oracle:
        od = oracle.stable_hom_dim(oracle.realize(x), oracle.realize(y))
        data["oracle_dimension"] = od
        status = "PASS" if od == hom.dim else "FAIL"
        out_lines.append(f"oracle: {od} ({status})")
    out = Outcome("stable-hom", status, dims=[hom.dim], bases={"stable_hom": hom.labels()}, data=data)
    out.lines = out_lines
    return out


def cmd_dsg_hom(args) -> Outcome:
    a = load_algebra(args.file)
    x, y = parse_object(a, args.source), parse_object(a, args.target)
    res = dsg_hom(x, y, args.cutoff, args.bound)
    out = Outcome("dsg-hom", res.status, dims=res.dims, data=res.to_dict())
    if res.status == "EXACT":
        out.lines.append(f"EXACT: dim = {res.dimension} (orbit period {res.period[1]} from level {res.period[0]})")
    else:
        out.lines.append(f"CUTOFF at depth {len(res.dims) - 1}: no exact value")
    out.lines.append(f"levels from {res.start_level}: dims {res.dims}")
    out.lines.append(f"ranks to last level: {res.stable_ranks}")
    if args.figures:
        from .plotting import plot_dimensions

        plot_dimensions({"stable Hom": res.dims}, FilePath(args.figures) / "dsg_hom_dims.png", "direct system")
    return out


def cmd_cross_check(args) -> Outcome:
    a = load_algebra(args.file)
    x, y = parse_object(a, args.source), parse_object(a, args.target)
    rep = cross_check(a, x, y, args.depth)
    data = rep.to_dict()
    out = Outcome("cross-check", rep.status, dims=data.pop("dims"), data=data)
    out.lines.append(f"A side dims: {rep.dims_a}")
    out.lines.append(f"B side dims: {rep.dims_b}")
    for name, ok in rep.checks.items():
        out.lines.append(f"  {name}: {'ok' if ok else 'FAILED'}")
    out.lines.append(f"levelwise identical: {str(rep.levelwise_identical).lower()}")
    out.lines.append(rep.status)
    if args.figures:
        from .plotting import plot_dimensions

        plot_dimensions(
            {"A": rep.dims_a, "B": rep.dims_b}, FilePath(args.figures) / "cross_check_dims.png", "A vs B"
        )
    return out


def cmd_corpus(args) -> Outcome:
    c = corpus_mod.generate(args.seed, args.count, args.max_vertices, args.max_arrows)
    texts = [render(a.presentation) for a in c]
    data = {
        "seed": args.seed,
        "attempts": c.attempts,
        "rejected": c.rejected,
        "rejection_rate": round(c.rejection_rate, 6),
    }
    out = Outcome("corpus", dims=[a.dimension for a in c], data=data)
    if args.out:
        directory = FilePath(args.out)
        directory.mkdir(parents=True, exist_ok=True)
        names = []
        for k, text in enumerate(texts):
            name = f"instance_{k:04d}.alg"
            (directory / name).write_text(text, encoding="utf-8")
            names.append(name)
        data["files"] = names
    else:
        data["instances"] = texts
        for k, text in enumerate(texts):
            out.lines.append(f"# instance {k}")
            out.lines.append(text.rstrip("\n"))
    out.lines.append(
        f"# {len(texts)} instances, {c.attempts} attempts, rejection rate {c.rejection_rate:.3f}"
    )
    return out


COMMANDS = {
    "validate": cmd_validate,
    "basis": cmd_basis,
    "relquiver": cmd_relquiver,
    "classify": cmd_classify,
    "report": cmd_report,
    "syzygy": cmd_syzygy,
    "stable-hom": cmd_stable_hom,
    "dsg-hom": cmd_dsg_hom,
    "cross-check": cmd_cross_check,
    "corpus": cmd_corpus,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monosing", description="Quadratic monomial algebras and their singularity categories."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit structured JSON")
    figs = argparse.ArgumentParser(add_help=False)
    figs.add_argument("--figures", metavar="DIR", help="also write PNG figures into DIR")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in [
        ("validate", "admissibility check"),
        ("basis", "nonzero paths grouped by length"),
        ("classify", "relation-quiver component table"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file")
    for name, helptext in [("relquiver", "relation quiver"), ("report", "singularity report")]:
        p = sub.add_parser(name, parents=[common, figs], help=helptext)
        p.add_argument("file")

    p = sub.add_parser("syzygy", parents=[common], help="syzygy orbit of a module")
    p.add_argument("file")
    p.add_argument("--object", required=True, help='module expression, e.g. "A(x) + S(v)"')
    p.add_argument("--steps", type=int, default=1)

    p = sub.add_parser("stable-hom", parents=[common], help="stable Hom basis")
    p.add_argument("file")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--oracle", action="store_true", help="compare with the linear-algebra oracle")

    p = sub.add_parser("dsg-hom", parents=[common, figs], help="Hom in the singularity category")
    p.add_argument("file")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="largest orbit period searched")

    p = sub.add_parser("cross-check", parents=[common, figs], help="A side against B side")
    p.add_argument("file")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--depth", type=int, default=DEFAULT_CUTOFF)

    p = sub.add_parser("corpus", parents=[common], help="random admissible spec files")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--max-vertices", type=int, default=4)
    p.add_argument("--max-arrows", type=int, default=6)
    p.add_argument("--out", metavar="DIR", help="write one .alg file per instance into DIR")
    return parser


def dumps(payload: dict[str, object]) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = COMMANDS[args.command](args)
    except AlgebraError as exc:
        if args.json:
            print(dumps({"command": args.command, "status": "ERROR", "error": exc.to_dict()}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(dumps(out.to_dict()))
    else:
        print("\n".join(out.lines))
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())
