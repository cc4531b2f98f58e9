"""Command-line front end.

Exit status: 0 on success, 1 when a computation rejects its input (an
invariant fails, the two determinant oracles disagree, or a scan flags a
contradiction), 2 for usage and parse errors.

Inputs are file paths, '-' for stdin, or ``builtin:NAME`` for bundled data
(see the ``fixtures`` verb).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus
from .bracket import DEFAULT_CROSSING_LIMIT, bracket_determinant
from .branched import (FIXTURES, SurgeryPresentation, handlebody, knot_determinant, load_presentation,
                       surgery_h1)
from .diagram import DiagramError, EdgeLabelError, PDSyntaxError, linking_number, parse_pd
from .intlinalg import AbelianGroup, cokernel_group, parse_matrix_text, smith_normal_form
from .tangle import (TANGLE_FIXTURES, ClosureSpecError, TangleError, close_tangle, closure_linking,
                     load_closure_spec, load_tangle, scan_closures)


class UsageError(Exception):
    pass


class Rejected(Exception):
    pass


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def _builtin(source: str) -> str | None:
    return source[len("builtin:"):] if source.startswith("builtin:") else None


def _load_matrix(source: str):
    name = _builtin(source)
    if name is not None:
        return _load_presentation(source).linking
    text = _read(source) if source == "-" or not _looks_inline(source) else source
    if text.lstrip().startswith("["):
        from .intlinalg import IntMatrix
        return IntMatrix.from_rows(json.loads(text))
    return parse_matrix_text(text)


def _looks_inline(source: str) -> bool:
    return all(ch in "0123456789-+ /;\t" for ch in source) and any(ch.isdigit() for ch in source)


def _load_presentation(source: str) -> SurgeryPresentation:
    name = _builtin(source)
    if name is None:
        return load_presentation(_read(source))
    if name.startswith("handlebody"):
        return handlebody(int(name[len("handlebody"):] or 2))
    if name not in FIXTURES:
        raise UsageError(f"unknown presentation fixture {name!r}")
    p = FIXTURES[name]()
    if p is None:
        raise Rejected(f"fixture {name} has no surgery data yet")
    return p


def _load_pd(source: str):
    name = _builtin(source)
    if name is None:
        return parse_pd(_read(source))
    try:
        return corpus.knot(name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def _load_tangle(source: str):
    name = _builtin(source)
    if name is None:
        return load_tangle(_read(source))
    if name not in TANGLE_FIXTURES:
        raise UsageError(f"unknown tangle fixture {name!r}")
    return TANGLE_FIXTURES[name]()


def _group_out(g: AbelianGroup, fmt: str) -> str:
    return json.dumps(g.to_json()) if fmt == "json" else str(g)


def cmd_snf(args) -> str:
    m = _load_matrix(args.matrix)
    r = smith_normal_form(m)
    if args.format == "json":
        return json.dumps({"d": list(r.d), "u": r.u.to_rows(), "v": r.v.to_rows()})
    return f"d: {' '.join(map(str, r.d))}\nu:\n{r.u}\nv:\n{r.v}"


def cmd_homology(args) -> str:
    src = args.presentation
    if _builtin(src) is not None:
        return _group_out(surgery_h1(_load_presentation(src)), args.format)
    text = _read(src)
    if text.lstrip().startswith("{"):
        g = surgery_h1(load_presentation(text))
    else:
        m = parse_matrix_text(text)
        g = cokernel_group(m, m.cols)
    return _group_out(g, args.format)


def cmd_det(args) -> str:
    d = _load_pd(args.pd)
    method = "both" if args.check_both else args.method
    out = {}
    if method in ("goeritz", "both"):
        out["goeritz"] = knot_determinant(d)
    if method in ("bracket", "both"):
        out["bracket"] = bracket_determinant(d, args.crossing_limit)
    values = set(out.values())
    if len(values) > 1:
        raise Rejected(f"determinant oracles disagree: {out}")
    if args.format == "json":
        return json.dumps({"determinant": values.pop(), **out})
    return str(values.pop())


def cmd_lk(args) -> str:
    d = _load_pd(args.pd)
    lk = linking_number(d, args.i, args.j)
    return json.dumps({"i": args.i, "j": args.j, "lk": lk}) if args.format == "json" else str(lk)


def cmd_close(args) -> str:
    t = _load_tangle(args.tangle)
    spec = load_closure_spec(_read(args.spec))
    k = close_tangle(t, spec)
    lk = closure_linking(t, spec)
    if args.format == "json":
        return json.dumps({**k.to_json(), "lk": lk, "parity": "odd" if lk % 2 else "even"})
    return k.to_pd_text()


def cmd_scan(args) -> str:
    t = _load_tangle(args.tangle)
    odd = AbelianGroup.from_invariants(0, args.odd_torsion) if args.odd_torsion else None
    report = scan_closures(t, args.max_passages, args.max_path, odd_torsion=odd,
                           crossing_limit=args.crossing_limit, max_closures=args.limit,
                           workers=args.workers)
    if args.format == "json":
        text = report.to_jsonl().rstrip("\n")
    else:
        s = report.summary()
        lines = [f"closures: {s['closures']} ({s['odd']} odd, {s['even']} even)",
                 f"odd determinants: {s['odd_dets']}",
                 f"even determinants: {s['even_dets']}",
                 f"oracle disagreements: {s['oracle_disagreements']}",
                 "CONTRADICTION" if s["contradiction"] else "no contradiction"]
        if report.truncated:
            lines.append(f"TRUNCATED: {report.truncation_reason}")
        text = "\n".join(lines)
    if report.disagreements or report.contradiction:
        print(text)
        raise Rejected("scan flagged a contradiction or an oracle disagreement")
    return text


def cmd_fixtures(args) -> str:
    items = []
    for name, make in FIXTURES.items():
        p = make()
        items.append({"name": name, "presentation": p.to_json() if p else None,
                      "homology": str(surgery_h1(p)) if p else None})
    if args.format == "json":
        return json.dumps({"presentations": items, "tangles": {n: f().to_json() for n, f in TANGLE_FIXTURES.items()},
                           "knots": sorted(corpus.DETERMINANTS)})
    lines = []
    for it in items:
        lines.append(f"{it['name']}: {it['homology'] or '(no surgery data)'}")
        if it["presentation"]:
            p = it["presentation"]
            lines.append(f"  generators: {', '.join([s['label'] for s in p['surgery']] + p['free'])}")
            lines += [f"  {' '.join(f'{x:3d}' for x in row)}" for row in p["linking"]]
    lines.append(f"tangles: {', '.join(TANGLE_FIXTURES)}")
    lines.append(f"knots: {', '.join(sorted(corpus.DETERMINANTS))}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tanglehom", description="Double branched cover homology and tangle closures.")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("snf", help="Smith normal form of an integer matrix")
    p.add_argument("matrix", help="matrix file, '-', inline rows like '1 2 / 3 4', or builtin:NAME")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("homology", help="abelian group presented by a surgery presentation or relation matrix")
    p.add_argument("presentation")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("det", help="knot determinant")
    p.add_argument("pd")
    p.add_argument("--method", choices=("goeritz", "bracket", "both"), default="goeritz")
    p.add_argument("--check-both", action="store_true", help="compute both and exit 1 if they differ")
    p.add_argument("--crossing-limit", type=int, default=DEFAULT_CROSSING_LIMIT)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("lk", help="linking number of two components")
    p.add_argument("pd")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(func=cmd_lk)

    p = sub.add_parser("close", help="PD code of a tangle closure")
    p.add_argument("tangle")
    p.add_argument("spec")
    p.set_defaults(func=cmd_close)

    p = sub.add_parser("scan", help="close a tangle every way within the bounds and check determinants")
    p.add_argument("tangle")
    p.add_argument("--max-passages", type=int, default=2)
    p.add_argument("--max-path", type=int, default=2)
    p.add_argument("--crossing-limit", type=int, default=DEFAULT_CROSSING_LIMIT)
    p.add_argument("--limit", type=int, default=None, help="stop after this many closures")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--odd-torsion", type=int, nargs="*", help="torsion orders of the odd cover (default: fixture)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("fixtures", help="list bundled presentations, tangles and knots")
    p.set_defaults(func=cmd_fixtures)
    return ap


PARSE_ERRORS = (UsageError, PDSyntaxError, EdgeLabelError, json.JSONDecodeError, ClosureSpecError, TangleError)


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except PARSE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (Rejected, DiagramError, ValueError, ArithmeticError) as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
