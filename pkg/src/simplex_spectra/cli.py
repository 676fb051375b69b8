"""Command-line interface: generation, spectra, verification, cohomology,
cospectral batch scans, and matrix export.

Graph arguments take one of three forms:

    gen:<family:args>   e.g. gen:triangular:7, gen:paley:29, gen:gq-w3:3
    g6:<string>         a literal graph6 string
    file:<path>[:k]     k-th graph (1-based) of a one-per-line graph6 file

Reports are JSON on stdout; identical inputs produce identical output
except for the timing field.  Exit codes: 0 success/match, 2 verification
mismatch, 3 input error, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
import time
from multiprocessing import Pool
from typing import Optional

from . import __version__, closed_forms, modular
from .cohomology import DEFAULT_CYCLE_CAP, cohomology_report
from .complexes import (CliqueComplex, FaceCountError, IntMatrix, clique_complex,
                        coboundary, write_matrix_market)
from .cohomology import CycleCapExceeded
from .graphs import (DEFAULT_MAX_VERTICES, Graph, Graph6Error, GraphSizeError,
                     complement, generate, gq_w3_geometry, parse_graph6,
                     read_graph6_file)
from .spectra import (SpectrumSummary, certified_spectrum, cospectral_fingerprint,
                      down_laplacian, total_laplacian, up_laplacian)

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_INPUT = 3
EXIT_RESOURCE = 4


class InputError(ValueError):
    pass


def resolve_graph(spec: str, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    kind, _, rest = spec.partition(":")
    if kind == "gen" and rest:
        return generate(rest, max_vertices=max_vertices)
    if kind == "g6" and rest:
        return parse_graph6(rest)
    if kind == "file" and rest:
        path, _, idx = rest.rpartition(":")
        if path and idx.isdigit():
            k = int(idx)
        else:
            path, k = rest, 1
        graphs = read_graph6_file(path)
        if not 1 <= k <= len(graphs):
            raise InputError(f"file {path} holds {len(graphs)} graphs, index {k} out of range")
        return graphs[k - 1]
    raise InputError(f"cannot parse graph spec {spec!r} (want gen:..., g6:... or file:...)")


def _laplacian(X: CliqueComplex, dim: int, which: str) -> IntMatrix:
    if which == "up":
        return up_laplacian(X, dim)
    if which == "down":
        return down_laplacian(X, dim)
    if which == "total":
        return total_laplacian(X, dim)
    raise InputError(f"unknown laplacian {which!r}")


def _report(args: argparse.Namespace, graph_desc: str, result: dict, started: float) -> dict:
    return {
        "command": " ".join(args.command_echo),
        "graph": graph_desc,
        "version": __version__,
        "primes": list(modular.default_primes()),
        "timing_s": round(time.perf_counter() - started, 6),
        "result": result,
    }


def _emit(report: dict):
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _factored_str(summary: SpectrumSummary) -> str:
    parts = []
    for v, m, _ in summary.integer_eigs:
        base = "x" if v == 0 else f"(x - {v})" if v > 0 else f"(x + {-v})"
        parts.append(base if m == 1 else f"{base}^{m}")
    if summary.residual_degree:
        parts.append(f"[residual degree {summary.residual_degree}]")
    return " ".join(parts) if parts else "1"


def cmd_spectrum(args) -> int:
    started = time.perf_counter()
    g = resolve_graph(args.graph, args.max_vertices)
    need = args.dim + 1 if args.laplacian in ("up", "total") else args.dim
    X = clique_complex(g, max_dim=max(need, args.dim), max_faces=args.max_faces)
    M = _laplacian(X, args.dim, args.laplacian)
    summary = certified_spectrum(M)
    if args.format == "array":
        print(summary.array_str())
        return EXIT_OK
    result = {"dim": args.dim, "laplacian": args.laplacian,
              "spectrum": summary.to_json_dict()}
    if args.charpoly:
        result["charpoly"] = _factored_str(summary)
    _emit(_report(args, args.graph, result, started))
    return EXIT_OK


def _verify_one(kind: str, instance: str, predicted, computed) -> dict:
    verdict = {
        "family": kind,
        "instance": instance,
        "predicted": sorted(predicted.as_multiset().items()),
        "computed": sorted(computed.eig_multiset().items()),
        "residual_degree": computed.residual_degree,
        "match": predicted.matches(computed),
    }
    if predicted.note:
        verdict["note"] = predicted.note
    return verdict


def cmd_verify(args) -> int:
    started = time.perf_counter()
    name, _, argstr = args.family.partition(":")
    params = [int(a) for a in argstr.split(",")] if argstr else []
    dims = [int(d) for d in args.dim.split(",")] if args.dim else None
    checks = []
    if name == "triangular":
        (n,) = params
        dims = dims or [1]
        X = clique_complex(generate(f"triangular:{n}", max_vertices=args.max_vertices),
                           max_dim=max(d + 1 for d in dims), max_faces=args.max_faces)
        for d in dims:
            if d == 1:
                pred = closed_forms.predict_triangular_edges(n)
            elif d == 2:
                pred = closed_forms.predict_triangular_triangles(n)
            else:
                pred = closed_forms.predict_triangular_up(n, d)
            checks.append((f"dim {d} up", pred, certified_spectrum(up_laplacian(X, d))))
    elif name == "triangular-down":
        (n,) = params
        dims = dims or [4]
        X = clique_complex(generate(f"triangular:{n}", max_vertices=args.max_vertices),
                           max_dim=max(dims), max_faces=args.max_faces)
        for d in dims:
            pred = closed_forms.predict_triangular_down(n, d)
            checks.append((f"dim {d} down", pred, certified_spectrum(down_laplacian(X, d))))
    elif name == "hamming":
        d, a = params
        X = clique_complex(generate(f"hamming:{d},{a}", max_vertices=args.max_vertices),
                           max_dim=2, max_faces=args.max_faces)
        checks.append(("dim 1 up", closed_forms.predict_hamming(d, a),
                       certified_spectrum(up_laplacian(X, 1))))
    elif name == "gq-w3":
        (q,) = params
        geom = gq_w3_geometry(q, max_vertices=args.max_vertices)
        dims = dims or [1]
        X = clique_complex(geom.graph, max_dim=None, max_faces=args.max_faces)
        for d in dims:
            pred = closed_forms.predict_quadrangle(q, q, d)
            checks.append((f"dim {d} up", pred, certified_spectrum(up_laplacian(X, d))))
    elif name == "kncomplex":
        n, k = params
        X = clique_complex(generate(f"complete:{n}", max_vertices=args.max_vertices),
                           max_dim=k, max_faces=args.max_faces)
        for i in dims or range(k + 1):
            pred = closed_forms.predict_complete_complex(n, k, i)
            checks.append((f"dim {i} up", pred, certified_spectrum(up_laplacian(X, i))))
    else:
        raise InputError(f"unknown verify family {name!r}")
    verdicts = [_verify_one(f"{name} ({tag})", args.family, pred, comp)
                for tag, pred, comp in checks]
    ok = all(v["match"] for v in verdicts)
    _emit(_report(args, args.family, {"checks": verdicts, "match": ok}, started))
    return EXIT_OK if ok else EXIT_MISMATCH


def _scan_fingerprint(payload: tuple[str, int]) -> tuple[int, tuple]:
    text, dim = payload
    g = parse_graph6(text)
    X = clique_complex(g, max_dim=dim + 1)
    fp = cospectral_fingerprint(up_laplacian(X, dim))
    return fp.degree, fp.evaluations


def _digest(fp: tuple[int, tuple]) -> str:
    return hashlib.sha256(repr(fp).encode()).hexdigest()[:16]


def cmd_cospectral_scan(args) -> int:
    started = time.perf_counter()
    with open(args.file) as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith(">")]
    payloads = [(ln, args.dim) for ln in lines]
    if args.jobs > 1:
        with Pool(args.jobs) as pool:
            prints = pool.map(_scan_fingerprint, payloads)
    else:
        prints = [_scan_fingerprint(p) for p in payloads]
    classes: dict[tuple, list[int]] = {}
    for k, fp in enumerate(prints):
        classes.setdefault(fp, []).append(k + 1)
    ordered = sorted(classes.items(), key=lambda kv: kv[1][0])
    out_classes = []
    for fp, members in ordered:
        entry = {"indices": members, "degree": fp[0], "digest": _digest(fp)}
        if args.with_complements:
            comp_prints = []
            for k in members:
                cg = complement(parse_graph6(lines[k - 1]))
                CX = clique_complex(cg, max_dim=args.dim + 1)
                cfp = cospectral_fingerprint(up_laplacian(CX, args.dim))
                comp_prints.append((k, (cfp.degree, cfp.evaluations)))
            sub: dict[tuple, list[int]] = {}
            for k, cfp in comp_prints:
                sub.setdefault(cfp, []).append(k)
            entry["complement_split"] = sorted(sub.values(), key=lambda v: v[0])
        out_classes.append(entry)
    result = {"n_graphs": len(lines), "dim": args.dim, "classes": out_classes}
    _emit(_report(args, args.file, result, started))
    return EXIT_OK


def cmd_cohomology(args) -> int:
    started = time.perf_counter()
    g = resolve_graph(args.graph, args.max_vertices)
    report = cohomology_report(g, max_cycle_len=args.max_cycle_len, cap=args.cap)
    _emit(_report(args, args.graph, report.to_json_dict(), started))
    return EXIT_OK


_MATRIX_RE = re.compile(r"^(?:d(?P<ddim>\d+)|L(?P<ldim>\d+)(?P<kind>up|down)?)$")


def cmd_export(args) -> int:
    started = time.perf_counter()
    g = resolve_graph(args.graph, args.max_vertices)
    m = _MATRIX_RE.match(args.matrix)
    if not m:
        raise InputError(f"unknown matrix name {args.matrix!r} (want dK, LKup, LKdown or LK)")
    if m.group("ddim") is not None:
        i = int(m.group("ddim"))
        X = clique_complex(g, max_dim=i + 1, max_faces=args.max_faces)
        mat = coboundary(X, i)
    else:
        i = int(m.group("ldim"))
        kind = m.group("kind") or "total"
        X = clique_complex(g, max_dim=i + 1 if kind in ("up", "total") else i,
                           max_faces=args.max_faces)
        mat = _laplacian(X, i, kind)
    write_matrix_market(mat, args.out, comment=f" {args.matrix} of {args.graph}")
    _emit(_report(args, args.graph,
                  {"matrix": args.matrix, "out": args.out,
                   "shape": list(mat.shape), "nnz": mat.nnz}, started))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="simplex-spectra", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES,
                    help="generator size cap (default %(default)s)")
    ap.add_argument("--max-faces", type=int, default=2_000_000,
                    help="clique enumeration cap (default %(default)s)")
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("spectrum", help="certified Laplacian spectrum of a graph")
    sp.add_argument("graph")
    sp.add_argument("--dim", type=int, default=1)
    sp.add_argument("--laplacian", choices=("up", "down", "total"), default="up")
    sp.add_argument("--format", choices=("json", "array"), default="json")
    sp.add_argument("--charpoly", action="store_true",
                    help="include the factored characteristic polynomial")
    sp.set_defaults(fn=cmd_spectrum)

    vp = sub.add_parser("verify", help="check a computed spectrum against its closed form")
    vp.add_argument("family", help="triangular:n, triangular-down:n, hamming:d,a, "
                                   "gq-w3:q, kncomplex:n,k")
    vp.add_argument("--dim", default="", help="comma-separated dimensions")
    vp.set_defaults(fn=cmd_verify)

    cp = sub.add_parser("cospectral-scan", help="group a graph6 file by spectral fingerprint")
    cp.add_argument("file")
    cp.add_argument("--dim", type=int, default=1)
    cp.add_argument("--with-complements", action="store_true")
    cp.add_argument("--jobs", type=int, default=1)
    cp.set_defaults(fn=cmd_cospectral_scan)

    hp = sub.add_parser("cohomology", help="exact dim H^1 and sufficient-condition checkers")
    hp.add_argument("graph")
    hp.add_argument("--max-cycle-len", type=int, default=None)
    hp.add_argument("--cap", type=int, default=DEFAULT_CYCLE_CAP)
    hp.set_defaults(fn=cmd_cohomology)

    ep = sub.add_parser("export", help="write a matrix in MatrixMarket coordinate form")
    ep.add_argument("graph")
    ep.add_argument("--matrix", required=True, help="d0, d1, ..., L1up, L1down, L1, ...")
    ep.add_argument("--out", required=True)
    ep.set_defaults(fn=cmd_export)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    args = ap.parse_args(argv)
    args.command_echo = ["simplex-spectra"] + argv
    try:
        return args.fn(args)
    except (FaceCountError, GraphSizeError, CycleCapExceeded) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InputError, Graph6Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
