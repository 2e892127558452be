"""Command line surface: generate, decide, search thresholds, verify.

Exit codes: 0 when the queried relation holds or the certificate is
valid, 1 when it fails or the certificate is rejected, 2 for usage, file,
or parameter problems.  Standard output is one JSON document per
invocation (byte-identical across identical invocations); diagnostics go
to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations

from .arrows import ResourceCapExceeded, decide, ramsey_number
from .connectivity import Graph, kappa_connected_bruteforce, kappa_connected_fast, read_graph
from .core import (
    Coloring,
    FormatError,
    HcCertificate,
    Palette,
    RelationQuery,
    WcCertificate,
    certificate_from_json,
    certificate_to_json,
    read_coloring,
    write_coloring,
)
from .generators import constant_coloring, delta_coloring, hub_coloring, random_coloring
from .ordinals import coloring_from_csystem, ord_print, sample_universe
from .wellconn import is_wc_set


def verify_certificate(cert, coloring: Coloring) -> str | None:
    """Recheck a certificate from scratch against a coloring.

    Independent of the decision procedures: wc paths are rechecked edge
    by edge and hc connectivity goes through the brute-force removal
    enumerator, never the min-cut path.  Returns None when valid,
    otherwise a description of the first violation found.
    """
    if cert.n != coloring.n or cert.lam != coloring.lam:
        return (
            f"certificate is for n={cert.n} lambda={cert.lam}, "
            f"coloring has n={coloring.n} lambda={coloring.lam}"
        )
    for k, v in enumerate(cert.X):
        if not 0 <= v < cert.n:
            return f"vertex {v} of X out of range"
        if k and cert.X[k - 1] >= v:
            return "X is not strictly ascending"
    allowed = set(cert.palette.members)
    for x in allowed:
        if not 0 <= x < cert.lam:
            return f"palette color {x} out of range"
    if isinstance(cert, WcCertificate):
        want = set(combinations(cert.X, 2))
        have = set(cert.paths)
        missing = want - have
        if missing:
            return f"missing path for pair {min(missing)}"
        extra = have - want
        if extra:
            return f"unexpected path key {min(extra)} outside the pairs of X"
        for (a, b) in sorted(want):
            path = cert.paths[(a, b)]
            if len(path) < 2 or path[0] != a or path[-1] != b:
                return f"path for ({a}, {b}) does not run from {a} to {b}"
            if len(set(path)) != len(path):
                return f"path for ({a}, {b}) repeats a vertex"
            for v in path:
                if not 0 <= v < cert.n:
                    return f"path for ({a}, {b}) leaves the vertex range"
                if v < a:
                    return f"path for ({a}, {b}) dips below source: vertex {v} < {a}"
            for u, w in zip(path, path[1:]):
                col = coloring.color(u, w)
                if col not in allowed:
                    return f"path edge ({u}, {w}) colored {col} outside the palette"
        return None
    if isinstance(cert, HcCertificate):
        if cert.j < 1:
            return f"certified connectivity {cert.j} must be >= 1"
        xset = set(cert.X)
        for a, b in sorted(cert.E):
            if a >= b:
                return f"edge ({a}, {b}) must have a < b"
            if a not in xset or b not in xset:
                return f"edge ({a}, {b}) leaves X"
            col = coloring.color(a, b)
            if col not in allowed:
                return f"edge ({a}, {b}) colored {col} outside the palette"
        if not kappa_connected_bruteforce(Graph(cert.X, cert.E), cert.j):
            return f"(X, E) is not {cert.j}-connected"
        return None
    return f"unknown certificate type {type(cert).__name__}"


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError as exc:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from exc


def cmd_gen(args) -> int:
    meta: dict = {"kind": args.kind, "out": args.out}
    if args.kind == "delta":
        col = delta_coloring(args.len)
        meta["len"] = args.len
    elif args.kind == "constant":
        col = constant_coloring(args.n, args.color, args.colors)
        meta["color"] = args.color
    elif args.kind == "random":
        col = random_coloring(args.n, args.colors, args.seed)
        meta["seed"] = args.seed
    elif args.kind == "hub":
        col = hub_coloring(args.n0, args.n1)
        meta["n0"], meta["n1"] = args.n0, args.n1
    else:  # csystem
        universe = sample_universe(args.dim, args.coeff_max, args.size, args.seed)
        col = coloring_from_csystem(universe)
        meta["seed"] = args.seed
        meta["dim"] = args.dim
        meta["universe"] = [ord_print(x) for x in universe]
    _write_text(args.out, write_coloring(col))
    meta["n"] = col.n
    meta["lambda"] = col.lam
    _emit(meta)
    return 0


def cmd_decide(args) -> int:
    coloring = read_coloring(_read_text(args.coloring))
    query = RelationQuery(args.mode, args.m, args.palette_size, args.j if args.mode == "hc" else None)
    outcome = decide(coloring, query)
    if outcome.holds:
        sys.stdout.write(certificate_to_json(outcome.certificate))
        return 0
    _emit(
        {
            "verdict": "fails",
            "mode": args.mode,
            "m": args.m,
            "palette_size": args.palette_size,
            "exhausted_palettes": [list(p) for p in outcome.exhausted_palettes],
        }
    )
    return 1


def cmd_ramsey(args) -> int:
    result = ramsey_number(
        args.mode,
        args.m,
        args.colors,
        args.palette_size,
        args.max_n,
        j=args.j if args.mode == "hc" else None,
        time_limit=args.time_limit,
    )
    _emit({"threshold": result.threshold, "extremal": write_coloring(result.extremal)})
    return 0 if result.threshold is not None else 1


def cmd_verify(args) -> int:
    cert = certificate_from_json(_read_text(args.certificate))
    coloring = read_coloring(_read_text(args.coloring))
    violation = verify_certificate(cert, coloring)
    if violation is None:
        _emit({"valid": True})
        return 0
    _emit({"valid": False, "violation": violation})
    return 1


def cmd_check_conn(args) -> int:
    graph = read_graph(_read_text(args.graph))
    ok = kappa_connected_fast(graph, args.kappa)
    _emit({"n": len(graph.vertices), "kappa": args.kappa, "kappa_connected": ok})
    return 0 if ok else 1


def cmd_check_wc(args) -> int:
    coloring = read_coloring(_read_text(args.coloring))
    vertex_set = _int_list(args.set)
    palette = Palette(frozenset(_int_list(args.palette)))
    cert = is_wc_set(coloring, vertex_set, palette)
    if cert is not None:
        sys.stdout.write(certificate_to_json(cert))
        return 0
    _emit({"verdict": "fails", "set": sorted(set(vertex_set)), "palette": sorted(set(_int_list(args.palette)))})
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="connramsey",
        description="Decide and certify finite highly/well-connected partition relations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a coloring file")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    g_random = gen_sub.add_parser("random", help="seeded uniform coloring")
    g_random.add_argument("--n", type=int, required=True)
    g_random.add_argument("--colors", type=int, required=True)
    g_random.add_argument("--seed", type=int, default=0)
    g_constant = gen_sub.add_parser("constant", help="one color everywhere")
    g_constant.add_argument("--n", type=int, required=True)
    g_constant.add_argument("--color", type=int, required=True)
    g_constant.add_argument("--colors", type=int, required=True)
    g_delta = gen_sub.add_parser("delta", help="first-difference coloring on bit strings")
    g_delta.add_argument("--len", type=int, required=True)
    g_hub = gen_sub.add_parser("hub", help="two interleaved classes, crossing color 0")
    g_hub.add_argument("--n0", type=int, required=True)
    g_hub.add_argument("--n1", type=int, required=True)
    g_csystem = gen_sub.add_parser("csystem", help="derived coloring of sampled limit ordinals")
    g_csystem.add_argument("--dim", type=int, required=True, help="largest omega-exponent sampled")
    g_csystem.add_argument("--coeff-max", type=int, required=True)
    g_csystem.add_argument("--size", type=int, required=True)
    g_csystem.add_argument("--seed", type=int, default=0)
    for p in (g_random, g_constant, g_delta, g_hub, g_csystem):
        p.add_argument("--out", required=True, help="coloring file to write")
    gen.set_defaults(func=cmd_gen)

    dec = sub.add_parser("decide", help="decide a relation on a coloring file")
    dec.add_argument("coloring")
    dec.add_argument("--mode", choices=("classical", "hc", "wc"), required=True)
    dec.add_argument("--m", type=int, required=True)
    dec.add_argument("--palette-size", type=int, required=True)
    dec.add_argument("--j", type=int, default=None, help="hc connectivity demand, default m")
    dec.set_defaults(func=cmd_decide)

    ram = sub.add_parser("ramsey", help="least n making the relation hold for every coloring")
    ram.add_argument("--mode", choices=("classical", "hc", "wc"), required=True)
    ram.add_argument("--m", type=int, required=True)
    ram.add_argument("--colors", type=int, required=True)
    ram.add_argument("--palette-size", type=int, required=True)
    ram.add_argument("--j", type=int, default=None)
    ram.add_argument("--max-n", type=int, required=True)
    ram.add_argument("--time-limit", type=float, default=None, help="seconds before aborting")
    ram.set_defaults(func=cmd_ramsey)

    ver = sub.add_parser("verify", help="independently re-validate a certificate")
    ver.add_argument("certificate")
    ver.add_argument("coloring")
    ver.set_defaults(func=cmd_verify)

    conn = sub.add_parser("check-conn", help="kappa-connectedness of a graph file")
    conn.add_argument("graph")
    conn.add_argument("--kappa", type=int, required=True)
    conn.set_defaults(func=cmd_check_conn)

    cwc = sub.add_parser("check-wc", help="is a vertex set well-connected in a palette")
    cwc.add_argument("coloring")
    cwc.add_argument("--set", required=True, help="comma-separated vertices")
    cwc.add_argument("--palette", required=True, help="comma-separated colors")
    cwc.set_defaults(func=cmd_check_wc)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
