"""Command-line interface.

Exit codes: 0 success, 1 verification failure (or a negative answer),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import catalog as _catalog
from . import exact
from .cartan import DynkinDiagram, classify, is_connected
from .errors import KMRootError, ParseError, UnknownName, UnknownTarget
from .embed import prove_main
from .gcmio import gcm_to_json, read_gcm
from .lattice import RootLattice, fundamental_weights, real_roots_up_to_height
from .orth import (
    DEFAULT_BOUND,
    extend_direct_sum,
    find_orthogonal_real_roots,
    orthogonal_sublattice,
    weight_coordinates,
)
from .render import to_ascii, to_dot
from .verify import verify_paper

OK, FAIL, USAGE = 0, 1, 2


def _fmt_matrix(m) -> List[str]:
    width = max(len(str(v)) for row in m for v in row)
    return ["[" + " ".join(str(v).rjust(width) for v in row) + "]" for row in m]


def _diagram_from(source: str) -> DynkinDiagram:
    """A catalog name, or a path to a GCM file."""
    if source in _catalog.DEFAULT:
        return _catalog.get(source).diagram
    if os.path.exists(source):
        g, labels = read_gcm(source)
        return DynkinDiagram.from_gcm(g, labels)
    raise UnknownName(f"{source!r} is neither a catalog name nor a file")


def cmd_classify(args) -> int:
    g, _ = read_gcm(args.path)
    t = classify(g)
    print(f"type: {t}")
    print(f"det: {exact.det(g.entries)}")
    print(f"connected: {'yes' if is_connected(g) else 'no'}")
    print(f"symmetric: {'yes' if g.symmetric else 'no'}")
    return OK


def cmd_identify(args) -> int:
    d = _diagram_from(args.path)
    name = _catalog.identify(d)
    print(name if name else "not in catalog")
    return OK if name else FAIL


def cmd_enumerate(args) -> int:
    found = _catalog.enumerate_hyperbolic_simply_laced(args.rank)
    if args.emit == "json":
        print(json.dumps([gcm_to_json(d.gcm()) for d in found], indent=2))
    elif args.emit == "dot":
        for k, d in enumerate(found):
            name = _catalog.identify(d) or f"rank{args.rank}_{k}"
            sys.stdout.write(to_dot(d, name))
    else:
        print(f"{len(found)} simply laced hyperbolic diagrams of rank {args.rank}")
        for d in found:
            name = _catalog.identify(d) or "?"
            edges = ", ".join(f"{i}-{j}" + (f"x{m}" if m > 1 else "") for i, j, m in d.edges())
            print(f"  {name}: {edges}")
    return OK


def cmd_roots(args) -> int:
    host = RootLattice.from_diagram(_catalog.get(args.host).diagram)
    roots = sorted(real_roots_up_to_height(host, args.height),
                   key=lambda r: (r.height, r.coords))
    for r in roots:
        print(" ".join(map(str, r.coords)))
    return OK


def _print_embedding(e, host_labels) -> None:
    print("roots in E10 coordinates (simple roots " + " ".join(host_labels) + "):")
    width = max(len(lab) for lab in e.labels)
    for lab, r in zip(e.labels, e.roots):
        print(f"  {lab.rjust(width)}: " + " ".join(str(c).rjust(2) for c in r))
    print("gram:")
    for line in _fmt_matrix(e.gram):
        print("  " + line)


def cmd_embed(args) -> int:
    e = prove_main(args.target)
    if args.emit == "dot":
        sys.stdout.write(to_dot(e.diagram, e.target))
        return OK
    print(f"target: {e.target}")
    print("word: " + (" ; ".join(e.word) if e.word else "(identity)"))
    if args.trace:
        _print_embedding(e, e.host.labels)
    verdict = _catalog.identify(e.diagram)
    print(f"isomorphic to {e.target}: {'yes' if verdict else 'no'}")
    return OK if verdict else FAIL


def _weight_string(coords, labels) -> str:
    out = ""
    for c, lab in zip(coords, labels):
        if not c:
            continue
        mag = f"L{lab}" if abs(c) == 1 else f"{abs(c)}*L{lab}"
        if not out:
            out = mag if c > 0 else "-" + mag
        else:
            out += (" + " if c > 0 else " - ") + mag
    return out or "0"


def cmd_orthogonal(args) -> int:
    target = _catalog.get(args.target).name
    extras = {"HE_7(1)": "A1", "HE_6(1)": "A2"}
    if target not in extras:
        raise UnknownName(f"orthogonal extensions are provided for HE_7(1) and HE_6(1)")
    e = prove_main(target)
    sub = orthogonal_sublattice(e)
    labels = e.host.labels
    print(f"target: {target} ({e.k} roots in E10)")
    print(f"complement rank: {sub.rank}")
    for b in sub.basis:
        print("  basis: " + " ".join(map(str, b)))
    roots = find_orthogonal_real_roots(e, args.bound)
    print(f"orthogonal positive real roots: {len(roots)}")
    for r in roots:
        print(f"  {_weight_string(weight_coordinates(r), labels)} = "
              + " ".join(map(str, r.coords)))
    x = extend_direct_sum(e, extras[target], args.bound)
    print(f"extended: {target} + {extras[target]}, validated={x.validated}")
    for line in _fmt_matrix(x.gram):
        print("  " + line)
    return OK


def cmd_verify_paper(args) -> int:
    report = verify_paper()
    text = report.to_json(args.timings) if args.json else report.to_text(args.timings)
    sys.stdout.write(text)
    return OK if report.green else FAIL


def cmd_render(args) -> int:
    d = _diagram_from(args.name)
    if args.format == "dot":
        sys.stdout.write(to_dot(d, args.name))
    else:
        sys.stdout.write(to_ascii(d))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kmroot", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="classify a GCM file")
    s.add_argument("path")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("identify", help="name a diagram (catalog name or GCM file)")
    s.add_argument("path")
    s.set_defaults(func=cmd_identify)

    s = sub.add_parser("enumerate", help="enumerate simply laced hyperbolic diagrams")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--emit", choices=("text", "json", "dot"), default="text")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("roots", help="positive real roots up to a height")
    s.add_argument("--host", required=True)
    s.add_argument("--height", type=int, required=True)
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("embed", help="embed a hyperbolic diagram into E10")
    s.add_argument("--target", required=True)
    s.add_argument("--trace", action="store_true")
    s.add_argument("--emit", choices=("text", "dot"), default="text")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("orthogonal", help="orthogonal complement and direct-sum extension")
    s.add_argument("--target", required=True)
    s.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    s.set_defaults(func=cmd_orthogonal)

    s = sub.add_parser("verify-paper", help="run every reproduction check")
    s.add_argument("--json", action="store_true")
    s.add_argument("--timings", action="store_true", help="include wall times (not byte-stable)")
    s.set_defaults(func=cmd_verify_paper)

    s = sub.add_parser("render", help="draw a diagram")
    s.add_argument("name")
    s.add_argument("--format", choices=("dot", "ascii"), default="ascii")
    s.set_defaults(func=cmd_render)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE
    except (UnknownName, UnknownTarget, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except KMRootError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
