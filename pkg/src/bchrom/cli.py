"""Command-line surface: analyze, color, verify, generate.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 precondition/limit refusal.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .coloring import TraceEvent, b_coloring_with_good_set
from .density import density_profile
from .errors import InvariantViolation, OracleLimitError, ParseError, PreconditionError
from .goodset import find_good_set
from .graph import ACYCLIC, Graph, generate_girth_constrained, girth, parse_dimacs, parse_edge_list, to_edge_list
from .oracle import DEFAULT_ORACLE_LIMIT, check_b_coloring, exact_b_chromatic, find_b_coloring_exact

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_REFUSED = 3

_COLORING_HEADER = re.compile(r"#\s*k=(\d+)\s+basis=(\S*)\s*$")


@dataclass
class AnalysisRecord:
    """One graph's analysis: structure, good-set status, and (optionally) chi_b.

    chi_b_method is one of construction, oracle, nogoodset-theorem (exact
    value from the no-good-set case, witness coloring out of reach) or
    bounds-only (girth below 9 and the graph is too big for the oracle).
    """

    n: int
    edges: int
    girth: int | float
    m: int
    dense_count: int
    has_good_set: bool | None
    good_set: list[int] | None
    chi_b: int | None = None
    chi_b_method: str | None = None
    chi_b_upper: int | None = None

    def girth_text(self) -> str:
        return "acyclic" if self.girth == ACYCLIC else str(self.girth)

    def to_lines(self) -> list[str]:
        lines = [
            f"n {self.n}",
            f"edges {self.edges}",
            f"girth {self.girth_text()}",
            f"m {self.m}",
            f"dense-count {self.dense_count}",
            f"has-good-set {'unknown' if self.has_good_set is None else str(self.has_good_set).lower()}",
        ]
        if self.good_set is not None:
            lines.append("good-set " + " ".join(str(v) for v in self.good_set))
        if self.chi_b_method is not None:
            if self.chi_b is not None:
                lines.append(f"chi-b {self.chi_b}")
            if self.chi_b_upper is not None:
                lines.append(f"chi-b-upper {self.chi_b_upper}")
            lines.append(f"chi-b-method {self.chi_b_method}")
        return lines

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": self.edges,
            "girth": "acyclic" if self.girth == ACYCLIC else self.girth,
            "m": self.m,
            "dense_count": self.dense_count,
            "has_good_set": self.has_good_set,
            "good_set": self.good_set,
            "chi_b": self.chi_b,
            "chi_b_method": self.chi_b_method,
            "chi_b_upper": self.chi_b_upper,
        }


@dataclass
class PipelineOutcome:
    record: AnalysisRecord
    coloring: dict[int, int] | None = None
    basis: dict[int, int] | None = None
    trace: tuple[TraceEvent, ...] = ()


def run_pipeline(
    g: Graph,
    *,
    compute_chi_b: bool = False,
    oracle_limit: int = DEFAULT_ORACLE_LIMIT,
    force_oracle: bool = False,
    need_coloring: bool = False,
    girth_value: int | float | None = None,
) -> PipelineOutcome:
    """Analyze a graph and, on request, compute chi_b with a witness.

    Dispatch: girth >= 9 (or forest) with a good set -> chi_b = m(G) by
    construction; without one -> chi_b = m(G) - 1, witnessed by the oracle
    when the graph is small enough.  Below girth 9 the oracle decides when
    it fits, otherwise only the bound chi_b <= m(G) is reported.
    """
    profile = density_profile(g)
    gv = girth(g) if girth_value is None else girth_value
    high_girth = gv >= 9
    characterizable = gv >= 8
    good = find_good_set(g, profile, girth_value=gv) if characterizable else None
    record = AnalysisRecord(
        n=g.n,
        edges=g.edge_count,
        girth=gv,
        m=profile.m,
        dense_count=len(profile.dense),
        has_good_set=(good is not None) if characterizable else None,
        good_set=[g.labels[v] for v in good.members] if good is not None else None,
    )
    outcome = PipelineOutcome(record=record)
    if not (compute_chi_b or need_coloring):
        return outcome

    if not force_oracle and high_girth:
        if good is not None:
            built = b_coloring_with_good_set(g, good, profile=profile, girth_value=gv)
            record.chi_b = built.chi_b
            record.chi_b_method = "construction"
            outcome.coloring = built.coloring
            outcome.basis = built.basis
            outcome.trace = built.trace
        else:
            record.chi_b = profile.m - 1
            if g.n <= oracle_limit:
                witness = find_b_coloring_exact(g, record.chi_b, limit=oracle_limit)
                if witness is None:
                    raise InvariantViolation("an (m-1)-color b-coloring must exist when no good set does")
                record.chi_b_method = "oracle"
                outcome.coloring = witness
                outcome.basis = check_b_coloring(g, witness, record.chi_b).basis
            else:
                record.chi_b_method = "nogoodset-theorem"
                if need_coloring:
                    raise OracleLimitError(
                        f"chi_b = {record.chi_b} is exact, but a witness coloring needs the exact search "
                        f"(n = {g.n} exceeds the oracle limit {oracle_limit})"
                    )
        return outcome

    # oracle territory: forced, or the girth theory does not apply
    if g.n > oracle_limit:
        if force_oracle or need_coloring:
            raise OracleLimitError(f"n = {g.n} exceeds the oracle limit {oracle_limit}")
        record.chi_b_method = "bounds-only"
        record.chi_b_upper = profile.m
        return outcome
    record.chi_b = exact_b_chromatic(g, limit=oracle_limit)
    record.chi_b_method = "oracle"
    witness = find_b_coloring_exact(g, record.chi_b, limit=oracle_limit)
    outcome.coloring = witness
    outcome.basis = check_b_coloring(g, witness, record.chi_b).basis
    return outcome


def load_graph(path: str, fmt: str | None = None) -> Graph:
    """Read a graph file; the format is inferred from the extension unless forced."""
    text = Path(path).read_text()
    if fmt is None:
        fmt = "dimacs" if path.endswith(".col") else "edgelist"
    return parse_dimacs(text) if fmt == "dimacs" else parse_edge_list(text)


def format_coloring_file(g: Graph, coloring: dict[int, int], k: int, basis: dict[int, int]) -> str:
    basis_text = ",".join(f"{g.labels[v]}:{c}" for c, v in sorted(basis.items()))
    lines = [f"# k={k} basis={basis_text}"]
    lines.extend(f"{g.labels[u]} {coloring[u]}" for u in range(g.n))
    return "\n".join(lines) + "\n"


def parse_coloring_file(text: str, g: Graph) -> tuple[int, dict[int, int]]:
    """Read a coloring file back as (k, vertex-id -> color)."""
    k: int | None = None
    coloring: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            header = _COLORING_HEADER.match(line)
            if header:
                if k is not None:
                    raise ParseError("duplicate coloring header", lineno)
                k = int(header.group(1))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'vertex color', got {line!r}", lineno)
        try:
            label, color = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        vertex = g.id_of(label)
        if vertex in coloring:
            raise ParseError(f"vertex {label} colored twice", lineno)
        coloring[vertex] = color
    if k is None:
        raise ParseError("missing '# k=... basis=...' header")
    return k, coloring


def _write_output(content: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(content)
    else:
        Path(path).write_text(content)


def _print_record(record: AnalysisRecord, as_json: bool, extra: dict | None = None) -> None:
    if as_json:
        payload = record.to_json_dict()
        if extra:
            payload = {**extra, **payload}
        print(json.dumps(payload))
    else:
        if extra:
            for key, value in extra.items():
                print(f"{key} {value}")
        print("\n".join(record.to_lines()))


def cmd_analyze(args: argparse.Namespace) -> int:
    if args.batch is not None:
        failures = 0
        paths = sorted(p for p in Path(args.batch).iterdir() if p.is_file())
        for index, path in enumerate(paths):
            try:
                g = load_graph(str(path), args.format)
                outcome = run_pipeline(
                    g,
                    compute_chi_b=args.chi_b,
                    oracle_limit=args.oracle_limit,
                    force_oracle=args.oracle,
                )
                if not args.json and index:
                    print()
                _print_record(outcome.record, args.json, extra={"file": path.name})
            except (ParseError, ValueError, OracleLimitError) as exc:
                failures += 1
                if args.json:
                    print(json.dumps({"file": path.name, "error": str(exc)}))
                else:
                    if index:
                        print()
                    print(f"file {path.name}")
                    print(f"error {exc}")
        return EXIT_INPUT if failures else EXIT_OK
    g = load_graph(args.input, args.format)
    outcome = run_pipeline(g, compute_chi_b=args.chi_b, oracle_limit=args.oracle_limit, force_oracle=args.oracle)
    _print_record(outcome.record, args.json)
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    g = load_graph(args.input, args.format)
    gv = girth(g)
    if gv < 9 and not args.oracle:
        raise PreconditionError(
            f"girth {gv} is below 9, outside the constructive theory; pass --oracle for exhaustive search"
        )
    outcome = run_pipeline(
        g,
        compute_chi_b=True,
        need_coloring=True,
        oracle_limit=args.oracle_limit,
        force_oracle=args.oracle,
        girth_value=gv,
    )
    if outcome.coloring is None or outcome.basis is None:
        raise PreconditionError("no coloring method applies to this input")
    if args.trace:
        for event in outcome.trace:
            line = f"step={event.step} vertex={g.labels[event.vertex]} color={event.color}"
            if event.recolored_from is not None:
                line += f" recolored-from={event.recolored_from}"
            print(line)
    record = outcome.record
    _write_output(format_coloring_file(g, outcome.coloring, record.chi_b, outcome.basis), args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = load_graph(args.graph, args.format)
    k, coloring = parse_coloring_file(Path(args.coloring).read_text(), g)
    report = check_b_coloring(g, coloring, k)
    if args.json:
        payload = {
            "k": k,
            "proper": report.proper,
            "colors_used": report.colors_used,
            "valid": report.valid,
            "basis": {c: g.labels[v] for c, v in report.basis.items()} if report.basis else None,
            "violations": [
                {
                    "kind": violation.kind,
                    "witness": [g.labels[w] for w in violation.witness]
                    if isinstance(violation.witness, tuple)
                    else violation.witness,
                }
                for violation in report.violations
            ],
        }
        print(json.dumps(payload))
    else:
        print(f"k {k}")
        print(f"proper {str(report.proper).lower()}")
        print(f"colors-used {report.colors_used}")
        print(f"status {'valid' if report.valid else 'invalid'}")
        if report.basis:
            print("basis " + ",".join(f"{g.labels[v]}:{c}" for c, v in sorted(report.basis.items())))
        for violation in report.violations:
            if isinstance(violation.witness, tuple):
                witness = " ".join(str(g.labels[w]) for w in violation.witness)
            else:
                witness = str(violation.witness)
            print(f"violation {violation.kind} {witness}")
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_generate(args: argparse.Namespace) -> int:
    g = generate_girth_constrained(args.n, args.min_girth, args.edges, args.seed)
    _write_output(to_edge_list(g), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bchrom",
        description="Exact b-chromatic numbers and witness b-colorings for graphs of girth at least 9.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="report girth, m(G), good-set status, and optionally chi_b")
    analyze.add_argument("input", nargs="?", help="graph file (edge list or DIMACS .col)")
    analyze.add_argument("--batch", metavar="DIR", help="analyze every file in a directory instead")
    analyze.add_argument("--format", choices=["edgelist", "dimacs"])
    analyze.add_argument("--chi-b", action="store_true", dest="chi_b", help="also compute the b-chromatic number")
    analyze.add_argument("--oracle", action="store_true", help="force the exhaustive search even at girth >= 9")
    analyze.add_argument("--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT)
    analyze.add_argument("--json", action="store_true")
    analyze.set_defaults(func=cmd_analyze)

    color = sub.add_parser("color", help="write a witnessed b-coloring with chi_b colors")
    color.add_argument("input")
    color.add_argument("--output", "-o", help="destination file (default: stdout)")
    color.add_argument("--format", choices=["edgelist", "dimacs"])
    color.add_argument("--oracle", action="store_true", help="allow exhaustive search below girth 9")
    color.add_argument("--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT)
    color.add_argument("--trace", action="store_true", help="print one line per coloring decision")
    color.set_defaults(func=cmd_color)

    verify = sub.add_parser("verify", help="check a coloring file against its graph")
    verify.add_argument("graph")
    verify.add_argument("coloring")
    verify.add_argument("--format", choices=["edgelist", "dimacs"])
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=cmd_verify)

    generate = sub.add_parser("generate", help="write a random graph of prescribed minimum girth")
    generate.add_argument("n", type=int)
    generate.add_argument("--min-girth", type=int, default=9)
    generate.add_argument("--edges", type=int, required=True, help="edge budget (the output may have fewer)")
    generate.add_argument("--seed", type=int, default=0)
    generate.add_argument("--output", "-o", help="destination file (default: stdout)")
    generate.set_defaults(func=cmd_generate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PreconditionError, OracleLimitError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (FileNotFoundError, IsADirectoryError, PermissionError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
