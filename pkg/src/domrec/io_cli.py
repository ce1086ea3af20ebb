"""Graph formats, report serialization, and the `domrec` command line.

Formats:
  * graph6 - byte-exact to the published encoding (6-bit groups offset 63,
    upper-triangle column-major adjacency bits, short or 3-byte length
    header). One graph per line; streams compose with external generators.
  * edge list - one `u v` pair per line, 0-based ids, `#` comments,
    vertex count inferred as max id + 1.

All stdout is deterministic across reruns; timings and progress go to
stderr only. Exit codes: 0 ok, 2 usage, 3 parse/input, 4 budget,
5 assertion failure (cross-check disagreement or structure violation).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Optional, TextIO

from .graph_core import (
    MAX_VERTICES,
    BudgetError,
    DomrecError,
    Graph,
    InputError,
    UnsupportedGraphError,
    VertexSet,
    cartesian_product,
    mask_of,
    vertex_list,
)
from .domination import Budget, InvariantReport, enumerate_minimal_dominating, invariant_report
from .families import (
    StructureReport,
    complete_graph,
    cycle_graph,
    generate_gkr,
    generate_qkr,
    path_graph,
    star,
    verify_gkr_structure,
    verify_qkr_structure,
)
from .reconfig import (
    ConnectivityProfile,
    ReconfigGraph,
    build_dk,
    connectivity_profile,
    d0_direct,
    dk_diameter,
    reconfig_path,
)
from .separation import (
    D0SepEvidence,
    SepReport,
    check_sep_equals_d0,
    sep_bottleneck,
    sep_brute_force,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4
EXIT_ASSERT = 5

JOBS_ENV_VAR = "DOMREC_JOBS"

_GRAPH6_HEADER = ">>graph6<<"


class ParseError(InputError):
    """Malformed input bytes (graph6 or edge list)."""


class VerificationError(DomrecError):
    """A cross-check or structure check failed."""


# ---------------------------------------------------------------------------
# graph6


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    if line.startswith(_GRAPH6_HEADER):
        line = line[len(_GRAPH6_HEADER):]
    line = line.rstrip("\r\n")
    if not line:
        raise ParseError("empty graph6 line")
    data = [ord(c) - 63 for c in line]
    if any(not 0 <= b <= 63 for b in data):
        raise ParseError(f"graph6 line contains bytes outside '?'..'~': {line!r}")
    if data[0] < 63:
        n = data[0]
        pos = 1
    else:
        if len(data) >= 2 and data[1] == 63:
            raise ParseError("graph6 8-byte length header exceeds supported sizes")
        if len(data) < 4:
            raise ParseError("truncated graph6 length header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    if n == 0:
        raise UnsupportedGraphError("graph6 encodes an empty graph")
    if n > MAX_VERTICES:
        raise UnsupportedGraphError(
            f"graph6 encodes {n} vertices; supported maximum is {MAX_VERTICES}"
        )
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise ParseError(
            f"graph6 line for n={n} must carry {nbytes} data bytes,"
            f" found {len(data) - pos}"
        )
    edges = []
    bit_idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + bit_idx // 6]
            if (byte >> (5 - bit_idx % 6)) & 1:
                edges.append((i, j))
            bit_idx += 1
    # Padding bits beyond the triangle must be zero.
    for extra in range(nbits, nbytes * 6):
        byte = data[pos + extra // 6]
        if (byte >> (5 - extra % 6)) & 1:
            raise ParseError("graph6 padding bits are not zero")
    return Graph.from_edges(n, edges)


def export_graph6(g: Graph) -> str:
    """Encode a Graph as one graph6 line (no trailing newline)."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for p in range(0, len(bits), 6):
        val = 0
        for b in bits[p:p + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return "".join(chr(b) for b in head + body)


# ---------------------------------------------------------------------------
# edge list


def parse_edge_list(text: str) -> Graph:
    """Parse `u v` lines (0-based, `#` comments). n is max id + 1."""
    edges = []
    max_id = -1
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"edge list line {ln}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"edge list line {ln}: non-integer id in {raw!r}") from exc
        if u < 0 or v < 0:
            raise ParseError(f"edge list line {ln}: negative vertex id")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    if max_id < 0:
        raise ParseError("edge list contains no edges; cannot infer vertex count")
    return Graph.from_edges(max_id + 1, edges)


def export_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# input plumbing


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, "r", encoding="ascii") as fh:
        return fh.read()


def _looks_like_edge_list(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = line.split()[0]
        return head.lstrip("-").isdigit()
    return False


def read_graphs(source: str, fmt: str = "auto") -> list[tuple[str, Graph]]:
    """Read one or more graphs; graph6 sources may hold many, one per line."""
    text = _read_text(source)
    if fmt == "auto":
        fmt = "edgelist" if _looks_like_edge_list(text) else "graph6"
    if fmt == "edgelist":
        return [(f"{source}:1", parse_edge_list(text))]
    out = []
    ordinal = 0
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        ordinal += 1
        out.append((f"{source}:{ordinal}", parse_graph6(line)))
    if not out:
        raise ParseError(f"no graphs found in {source!r}")
    return out


def _parse_id_list(text: str) -> VertexSet:
    try:
        ids = [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise ParseError(f"vertex list must be comma-separated ids, got {text!r}") from exc
    if not ids:
        raise ParseError("vertex list is empty")
    return mask_of(ids)


# ---------------------------------------------------------------------------
# serialization


def _set_ids(mask: VertexSet) -> list[int]:
    return vertex_list(mask)


def invariant_report_json(rep: InvariantReport) -> dict:
    return {
        "gamma": rep.gamma,
        "Gamma": rep.Gamma,
        "alpha": rep.alpha,
        "ir": rep.ir,
        "num_minimal_dom_sets": rep.num_minimal_dom_sets,
        "well_covered": rep.well_covered,
        "well_dominated": rep.well_dominated,
    }


def sep_report_json(rep: SepReport) -> dict:
    return {
        "sep": rep.sep,
        "method": rep.method,
        "witness_partition": [list(rep.witness_partition[0]), list(rep.witness_partition[1])],
        "witness_pair": [_set_ids(rep.witness_pair[0]), _set_ids(rep.witness_pair[1])],
    }


def evidence_json(ev: D0SepEvidence) -> dict:
    return {"d0": ev.d0, "sep": ev.sep, "agree": ev.agree}


def reconfig_graph_json(rg: ReconfigGraph, diameter: Optional[int] = None,
                        with_diameter: bool = False) -> dict:
    out = {
        "k": rg.k,
        "base_n": rg.n,
        "order": rg.order(),
        "size": rg.size(),
        "component_count": rg.component_count,
        "verts": [_set_ids(m) for m in rg.verts],
        "edges": [list(e) for e in rg.edges],
    }
    if with_diameter:
        out["diameter"] = diameter
    return out


def profile_json(profile: ConnectivityProfile) -> dict:
    return {
        "gamma": profile.gamma,
        "n": profile.n,
        "profile": [
            {
                "k": e.k,
                "order": e.order,
                "size": e.size,
                "connected": e.connected,
                "component_count": e.component_count,
            }
            for e in profile.entries
        ],
    }


def structure_report_json(rep: StructureReport) -> dict:
    return {
        "construction": rep.construction,
        "k": rep.k,
        "r": rep.r,
        "family_size": rep.family_size,
        "gamma": rep.gamma,
        "Gamma": rep.Gamma,
        "ok": rep.ok,
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in rep.checks
        ],
    }


def export_json(payload: dict) -> str:
    return json.dumps(payload, separators=(",", ":"))


def export_dot(rg: ReconfigGraph) -> str:
    """DOT text for a reconfiguration graph; nodes labelled by their sets."""
    lines = ["graph dk {"]
    for idx, mask in enumerate(rg.verts):
        label = "{" + ",".join(str(v) for v in _set_ids(mask)) + "}"
        lines.append(f'  s{idx} [label="{label}"];')
    for a, b in rg.edges:
        lines.append(f"  s{a} -- s{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands


def _budget_from(args: argparse.Namespace) -> Budget:
    return Budget.resolve(getattr(args, "budget", None))


def _emit(out: TextIO, text: str) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def cmd_invariants(args: argparse.Namespace, out: TextIO) -> int:
    budget = _budget_from(args)
    for _gid, g in read_graphs(args.input, args.format):
        rep = invariant_report(g, budget, include_ir=True if args.ir else None)
        _emit(out, export_json(invariant_report_json(rep)))
    return EXIT_OK


def cmd_d0(args: argparse.Namespace, out: TextIO) -> int:
    budget = _budget_from(args)
    status = EXIT_OK
    for _gid, g in read_graphs(args.input, args.format):
        if args.method == "direct":
            _emit(out, export_json({"d0": d0_direct(g, budget)}))
        elif args.method == "sep":
            fam = enumerate_minimal_dominating(g, budget)
            _emit(out, export_json({"sep": sep_bottleneck(fam).sep}))
        else:
            ev = check_sep_equals_d0(g, budget)
            _emit(out, export_json(evidence_json(ev)))
            if not ev.agree:
                status = EXIT_ASSERT
    return status


def cmd_profile(args: argparse.Namespace, out: TextIO) -> int:
    budget = _budget_from(args)
    for _gid, g in read_graphs(args.input, args.format):
        _emit(out, export_json(profile_json(connectivity_profile(g, budget))))
    return EXIT_OK


def cmd_sep(args: argparse.Namespace, out: TextIO) -> int:
    budget = _budget_from(args)
    status = EXIT_OK
    for _gid, g in read_graphs(args.input, args.format):
        fam = enumerate_minimal_dominating(g, budget)
        rep = sep_bottleneck(fam)
        payload = sep_report_json(rep)
        payload["family_size"] = len(fam.sets)
        if args.oracle:
            oracle = sep_brute_force(fam)
            payload["oracle_sep"] = oracle.sep
            payload["oracle_agrees"] = oracle.sep == rep.sep
            if oracle.sep != rep.sep:
                status = EXIT_ASSERT
        _emit(out, export_json(payload))
    return status


def cmd_dk(args: argparse.Namespace, out: TextIO) -> int:
    budget = _budget_from(args)
    for _gid, g in read_graphs(args.input, args.format):
        rg = build_dk(g, args.k, budget)
        if args.export == "dot":
            out.write(export_dot(rg))
        else:
            diameter = None
            if args.diameter and rg.verts:
                diameter = dk_diameter(rg)
            _emit(out, export_json(
                reconfig_graph_json(rg, diameter, with_diameter=args.diameter)
            ))
    return EXIT_OK


def cmd_path(args: argparse.Namespace, out: TextIO) -> int:
    budget = _budget_from(args)
    a = _parse_id_list(args.from_ids)
    b = _parse_id_list(args.to_ids)
    for _gid, g in read_graphs(args.input, args.format):
        seq = reconfig_path(g, a, b, args.k, budget)
        if seq is None:
            _emit(out, export_json({"found": False}))
        else:
            _emit(out, export_json({
                "found": True,
                "length": len(seq) - 1,
                "path": [_set_ids(m) for m in seq],
            }))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    family = args.family
    if family in ("gkr", "qkr"):
        if args.k is None or args.r is None:
            raise InputError(f"gen {family} requires --k and --r")
        g = generate_gkr(args.k, args.r)[0] if family == "gkr" else generate_qkr(args.k, args.r)[0]
    elif family == "cartesian":
        # Factors are piped in: exactly two graph6 lines on stdin.
        lines = [ln.strip() for ln in sys.stdin.read().splitlines() if ln.strip()]
        if len(lines) != 2:
            raise InputError("gen cartesian reads exactly two graph6 lines from stdin")
        g = cartesian_product(parse_graph6(lines[0]), parse_graph6(lines[1]))
    else:
        if args.n is None:
            raise InputError(f"gen {family} requires --n")
        maker = {
            "star": star,
            "path": path_graph,
            "cycle": cycle_graph,
            "complete": complete_graph,
        }[family]
        g = maker(args.n)
    _emit(out, export_graph6(g))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    budget = _budget_from(args)
    if args.construction == "gkr":
        rep = verify_gkr_structure(args.k, args.r, budget)
    else:
        rep = verify_qkr_structure(args.k, args.r, budget)
    _emit(out, export_json(structure_report_json(rep)))
    return EXIT_OK if rep.ok else EXIT_ASSERT


# hunt -----------------------------------------------------------------------


@dataclass(frozen=True)
class _HuntItem:
    ordinal: int
    line: str
    max_n: int
    min_excess: int
    budget_max_n: int


def _hunt_worker(item: _HuntItem) -> tuple[int, str, str]:
    """Process one graph6 line; returns (ordinal, kind, payload)."""
    try:
        g = parse_graph6(item.line)
    except InputError as exc:
        return item.ordinal, "parse-error", str(exc)
    if g.n > item.max_n:
        return item.ordinal, "skip-size", ""
    if all(row == 0 for row in g.adj):
        return item.ordinal, "skip-edgeless", ""
    budget = Budget(max_n=item.budget_max_n)
    try:
        fam = enumerate_minimal_dominating(g, budget)
        d0 = d0_direct(g, budget)
    except BudgetError as exc:
        return item.ordinal, "budget-error", str(exc)
    excess = d0 - fam.Gamma
    if excess < item.min_excess:
        return item.ordinal, "miss", ""
    # Re-verify via the independent separation route before emitting.
    sep = sep_bottleneck(fam).sep
    payload = export_json({
        "id": item.ordinal,
        "graph6": item.line,
        "n": g.n,
        "gamma": fam.gamma,
        "Gamma": fam.Gamma,
        "d0": d0,
        "sep": sep,
        "excess": excess,
        "agree": sep == d0,
    })
    return item.ordinal, ("hit" if sep == d0 else "disagree"), payload


def cmd_hunt(args: argparse.Namespace, out: TextIO) -> int:
    budget = _budget_from(args)
    max_n = args.max_n if args.max_n is not None else budget.max_n
    jobs = args.jobs
    items = []
    ordinal = 0
    for raw in sys.stdin:
        line = raw.strip()
        if not line:
            continue
        ordinal += 1
        items.append(_HuntItem(ordinal, line, max_n, args.min_excess, budget.max_n))
    started = time.perf_counter()
    if jobs > 1:
        with Pool(processes=jobs) as pool:
            results: Iterable[tuple[int, str, str]] = pool.imap(_hunt_worker, items, chunksize=8)
            status = _drain_hunt(results, out)
    else:
        status = _drain_hunt(map(_hunt_worker, items), out)
    elapsed = time.perf_counter() - started
    print(f"hunt: {ordinal} graphs in {elapsed:.2f}s", file=sys.stderr)
    return status


def _drain_hunt(results: Iterable[tuple[int, str, str]], out: TextIO) -> int:
    status = EXIT_OK
    counts = {"hit": 0, "miss": 0, "skip-size": 0, "skip-edgeless": 0}
    for ordinal, kind, payload in results:
        if kind == "parse-error":
            print(f"hunt: graph {ordinal}: {payload}", file=sys.stderr)
            return EXIT_PARSE
        if kind == "budget-error":
            print(f"hunt: graph {ordinal}: {payload}", file=sys.stderr)
            return EXIT_BUDGET
        if kind == "disagree":
            _emit(out, payload)
            print(f"hunt: graph {ordinal}: d0/sep disagreement", file=sys.stderr)
            return EXIT_ASSERT
        if kind == "hit":
            _emit(out, payload)
        counts[kind] = counts.get(kind, 0) + 1
    print(
        "hunt: {hit} hits, {miss} below threshold, {s} skipped oversize,"
        " {e} skipped edgeless".format(
            hit=counts["hit"], miss=counts["miss"],
            s=counts["skip-size"], e=counts["skip-edgeless"],
        ),
        file=sys.stderr,
    )
    return status


# ---------------------------------------------------------------------------
# argument parsing


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="graph file, or '-' for standard input")
    p.add_argument(
        "--format", choices=["auto", "graph6", "edgelist"], default="auto",
        help="input format (default: auto-detect)",
    )


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=None,
                   help="max vertex count for enumeration (default 24, env DOMREC_BUDGET)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domrec",
        description="Exact domination-reconfiguration toolkit for small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="gamma/Gamma/alpha/IR and related flags")
    _add_input(p)
    p.add_argument("--ir", action="store_true", help="force the IR scan even on larger graphs")
    _add_budget(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("d0", help="connectivity threshold of the k-dominating graphs")
    _add_input(p)
    p.add_argument("--method", choices=["direct", "sep", "both"], default="direct")
    _add_budget(p)
    p.set_defaults(func=cmd_d0)

    p = sub.add_parser("profile", help="per-k order/size/connectivity of D_k")
    _add_input(p)
    _add_budget(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("sep", help="separation of the minimal dominating family")
    _add_input(p)
    p.add_argument("--oracle", action="store_true",
                   help="also run the brute-force partition scan and compare")
    _add_budget(p)
    p.set_defaults(func=cmd_sep)

    p = sub.add_parser("dk", help="build D_k explicitly")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--export", choices=["dot", "json"], default="json")
    p.add_argument("--diameter", action="store_true")
    _add_budget(p)
    p.set_defaults(func=cmd_dk)

    p = sub.add_parser("path", help="shortest reconfiguration sequence inside D_k")
    _add_input(p)
    p.add_argument("--from", dest="from_ids", required=True, metavar="ID-LIST")
    p.add_argument("--to", dest="to_ids", required=True, metavar="ID-LIST")
    p.add_argument("--k", type=int, required=True)
    _add_budget(p)
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("gen", help="emit a generated graph as graph6")
    p.add_argument("family",
                   choices=["gkr", "qkr", "star", "path", "cycle", "complete", "cartesian"])
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check the structural facts of a construction")
    p.add_argument("construction", choices=["gkr", "qkr"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_budget(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hunt", help="scan a graph6 stream for d0 - Gamma >= threshold")
    p.add_argument("--max-n", type=int, default=None,
                   help="skip graphs larger than this (default: enumeration budget)")
    p.add_argument("--min-excess", type=int, default=2)
    p.add_argument("--jobs", type=int,
                   default=int(os.environ.get(JOBS_ENV_VAR, "1")),
                   help="worker processes (env DOMREC_JOBS)")
    _add_budget(p)
    p.set_defaults(func=cmd_hunt)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except BudgetError as exc:
        print(f"domrec: budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InputError as exc:
        print(f"domrec: input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except VerificationError as exc:
        print(f"domrec: check failed: {exc}", file=sys.stderr)
        return EXIT_ASSERT
    except OSError as exc:
        print(f"domrec: io: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
