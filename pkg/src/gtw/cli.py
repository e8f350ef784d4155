"""Command line front end: ``gtw <command> [options]``, JSON on stdout.

Exit status: 0 success, 2 invalid input, 3 empty/infeasible result, 4 size
guard tripped, 1 internal inconsistency.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from math import lcm

from . import minors, polytope, semigroup, tableaux, witness
from .core import denominator, pattern_from_dict
from .errors import GTError, MalformedPattern, TooLarge, ValidationError

log = logging.getLogger("gtw")


class UsageError(ValidationError):
    code = "usage_error"


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedPattern(f"{path} is not valid JSON: {exc}") from exc


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# each handler returns (payload, csv_table or None)

def cmd_kostka(a):
    k = tableaux.kostka(_ints(a.shape), _ints(a.content))
    return {"kostka": k}, (["kostka"], [[k]])


def cmd_ssyt(a):
    ts = tableaux.enumerate_ssyt(_ints(a.shape), _ints(a.content))
    return {"count": len(ts), "tableaux": [t.to_dict() for t in ts]}, None


def cmd_phi(a):
    t = tableaux.tableau_from_dict(_load_json(a.tableau))
    return {"pattern": tableaux.phi(t).to_dict()}, None


def cmd_phi_inverse(a):
    p = pattern_from_dict(_load_json(a.pattern))
    return {"tableau": tableaux.phi_inverse(p).to_dict()}, None


def cmd_polytope_dim(a):
    P = polytope.build(_ints(a.shape), _ints(a.content))
    return {"dim": polytope.dimension(P)}, None


def cmd_lattice_points(a):
    P = polytope.build(_ints(a.shape), _ints(a.content))
    count = polytope.count_lattice_points(P, a.dilate)
    guard = semigroup.level_guard(a.guard)
    if count > guard:
        raise TooLarge(f"dilate {a.dilate} has {count} points, guard is {guard}")
    pts = polytope.lattice_points(P, a.dilate)
    return {"dilate": a.dilate, "count": count, "points": [p.to_dict() for p in pts]}, None


def cmd_vertices(a):
    P = polytope.build(_ints(a.shape), _ints(a.content))
    vs = polytope.vertices(P, a.vertex_guard)
    payload = {
        "count": len(vs),
        "period": lcm(*(q for _, q in vs)) if vs else 1,
        "vertices": [{"pattern": p.to_dict(), "denominator": q} for p, q in vs],
    }
    return payload, None


def cmd_ehrhart(a):
    P = polytope.build(_ints(a.shape), _ints(a.content))
    rep = polytope.ehrhart(P, a.max_dilate, a.vertex_guard)
    table = (["dilate", "count"], [[d, c] for d, c in enumerate(rep.counts)])
    return rep.to_dict(), table


def cmd_krull(a):
    lam, mu = _ints(a.shape), _ints(a.content)
    P = polytope.build(lam, mu)
    rep = polytope.ehrhart(P, a.max_dilate, a.vertex_guard)
    krull = polytope.krull_dimension(lam, mu)
    bound = krull + rep.a_invariant
    return {"krull_dimension": krull, "dim": rep.dim, "a_invariant": rep.a_invariant,
            "generation_bound": bound, "bound_below_krull": bound < krull}, None


def cmd_hilbert_basis(a):
    rep = semigroup.essential_generators(_ints(a.shape), _ints(a.content), a.max_degree, a.guard)
    d = rep.to_dict(full=a.full)
    table = (["degree", "level_size", "essential"],
             [[r["degree"], r["level_size"], r["essential"]] for r in d["degrees"]])
    return d, table


def cmd_multiply(a):
    t1 = tableaux.tableau_from_dict(_load_json(a.left))
    t2 = tableaux.tableau_from_dict(_load_json(a.right))
    return {"tableau": semigroup.multiply_degenerate(t1, t2).to_dict()}, None


def cmd_semistable(a):
    g = minors.matrix_from_dict(_load_json(a.matrix))
    ok, t = minors.is_semistable(g, _ints(a.shape), _ints(a.content))
    return {"semistable": ok, "witness": t.to_dict() if t else None}, None


def cmd_witness(a):
    p = witness.build_witness(a.k)
    spec = witness.WitnessSpec(a.k)
    payload = {"k": a.k, "n": spec.n, "N": spec.N, "pattern": p.to_dict(),
               "denominator": denominator(p)}
    if a.verify:
        rep = witness.verify_theorem2(a.k, guard=a.guard)
        rep.pop("witness")
        payload["verification"] = rep
    return payload, None


def cmd_verify_theorem2(a):
    return witness.verify_theorem2(a.k, guard=a.guard), None


COMMANDS = {
    "kostka": cmd_kostka,
    "ssyt": cmd_ssyt,
    "phi": cmd_phi,
    "phi-inverse": cmd_phi_inverse,
    "polytope-dim": cmd_polytope_dim,
    "lattice-points": cmd_lattice_points,
    "vertices": cmd_vertices,
    "ehrhart": cmd_ehrhart,
    "krull": cmd_krull,
    "hilbert-basis": cmd_hilbert_basis,
    "multiply": cmd_multiply,
    "semistable": cmd_semistable,
    "witness": cmd_witness,
    "verify-theorem2": cmd_verify_theorem2,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--guard", type=int, default=None,
                        help="max points per semigroup level (default 10^6, env GTW_GUARD)")
    common.add_argument("--vertex-guard", type=int, default=polytope.DEFAULT_VERTEX_GUARD,
                        help="largest n accepted by vertex enumeration")
    common.add_argument("--threads", type=int, default=1,
                        help="parallelism cap; computations are currently single-threaded")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="gtw", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, *, weights=False, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        if weights:
            p.add_argument("--shape", required=True, help="comma-separated partition, e.g. 2,1,0")
            p.add_argument("--content", required=True, help="comma-separated content, e.g. 1,1,1")
        return p

    add("kostka", weights=True, help="number of semistandard tableaux")
    add("ssyt", weights=True, help="list semistandard tableaux")
    add("phi", help="tableau to GT pattern").add_argument("--tableau", required=True)
    add("phi-inverse", help="integral GT pattern to tableau").add_argument("--pattern", required=True)
    add("polytope-dim", weights=True, help="dimension of GT(shape, content)")
    add("lattice-points", weights=True, help="integral points of a dilate").add_argument(
        "--dilate", type=int, default=1)
    add("vertices", weights=True, help="vertices with denominators")
    for name in ("ehrhart", "krull"):
        add(name, weights=True).add_argument("--max-dilate", type=int, default=None,
                                             help="largest dilate counted (default period*(dim+2))")
    p = add("hilbert-basis", weights=True, help="essential generators up to a degree")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--full", action="store_true", help="include the generator patterns")
    p = add("multiply", help="degenerate product of two tableaux")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    add("semistable", weights=True, help="degree-one semistability of a matrix").add_argument(
        "--matrix", required=True)
    p = add("witness", help="the exponential-denominator vertex")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    add("verify-theorem2", help="all checks for one k").add_argument("--k", type=int, required=True)
    return parser


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    start = time.perf_counter()
    try:
        payload, table = COMMANDS[args.command](args)
        if args.format == "csv":
            if table is None:
                raise UsageError(f"{args.command} has no tabular output; use --format json")
            stdout.write(_csv(*table))
            return 0
        result = {"status": "ok", "payload": payload}
        code = 0
    except GTError as exc:
        log.debug("command failed", exc_info=True)
        result = {"status": "error", "error": {"code": exc.code, "message": str(exc), **_plain(exc.details)}}
        code = exc.exit_code
    result["timing_ms"] = int((time.perf_counter() - start) * 1000)
    stdout.write(json.dumps(result, sort_keys=True) + "\n")
    return code


def _plain(details: dict) -> dict:
    return {k: v if isinstance(v, (int, str, bool)) or v is None else str(v) for k, v in details.items()}


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
