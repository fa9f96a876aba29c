"""Command-line interface.

Subcommands: ftriangle | fvector | mtriangle | invariants | verify | sweep.
Output formats: json (default, stable envelope with a schema version), tex
(matrix layouts), csv.  Exit codes: 0 success/verified, 1 conjecture
mismatch, 2 usage error, 3 time budget exceeded.

Every command is deterministic: the same invocation produces byte-identical
output, warm or cold cache.  Timings are therefore only emitted under
--timings.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cache import SCHEMA_VERSION, load_or_build_lattice, load_or_build_triangle
from .cartan import invariants, parse_spec
from .conjecture import verify_conjecture
from .errors import ComputationTimeout, Deadline, SpecError
from .ftriangle import f_vector, h_vector, natural_f_vector, positive_f_vector
from .weyl import m_triangle

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3


@dataclass(frozen=True)
class OutputDocument:
    schema_version: int
    spec: str
    kind: str
    format: str
    payload: dict

    def to_json(self) -> str:
        doc = {
            "schema_version": self.schema_version,
            "spec": self.spec,
            "kind": self.kind,
            "format": self.format,
            "payload": self.payload,
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "OutputDocument":
        doc = json.loads(text)
        return cls(
            schema_version=doc["schema_version"],
            spec=doc["spec"],
            kind=doc["kind"],
            format=doc["format"],
            payload=doc["payload"],
        )


def _document(spec_str: str, kind: str, fmt: str, payload: dict) -> OutputDocument:
    return OutputDocument(SCHEMA_VERSION, spec_str, kind, fmt, payload)


# --------------------------------------------------------------------------
# renderers
# --------------------------------------------------------------------------

def _bmatrix(rows: list[list[int]]) -> str:
    body = "\\\\\n".join("&".join(str(c) for c in row) for row in rows)
    return "\\begin{bmatrix}\n" + body + "\n\\end{bmatrix}\n"


def _emit(doc: OutputDocument) -> str:
    if doc.format == "json":
        return doc.to_json()
    if doc.format == "tex":
        return _emit_tex(doc)
    if doc.format == "csv":
        return _emit_csv(doc)
    raise SpecError(f"unknown format {doc.format!r}")


def _emit_tex(doc: OutputDocument) -> str:
    p = doc.payload
    if doc.kind == "ftriangle":
        return _bmatrix(p["f"])
    if doc.kind == "mtriangle":
        return _bmatrix(p["m"])
    if doc.kind == "fvector":
        return _bmatrix([p["f"]])
    raise SpecError(f"tex output is not defined for {doc.kind!r}")


def _emit_csv(doc: OutputDocument) -> str:
    p = doc.payload
    kind = doc.kind
    if kind == "ftriangle":
        return "".join(",".join(str(c) for c in row) + "\n" for row in p["f"])
    if kind == "mtriangle":
        return "".join(",".join(str(c) for c in row) + "\n" for row in p["m"])
    if kind == "fvector":
        return "".join(
            key + "," + ",".join(str(c) for c in p[key]) + "\n"
            for key in ("f", "f_positive", "f_natural")
        )
    if kind == "invariants":
        lines = [
            "cardinality," + str(p["cardinality"]),
            "mobius," + str(p["mobius"]),
            "zeta," + " ".join(p["zeta"]),
            "h_vector," + " ".join(str(c) for c in p["h_vector"]),
        ]
        for comp in p["components"]:
            lines.append(
                f"component,{comp['type']},h={comp['h']},"
                + "exponents=" + " ".join(str(e) for e in comp["exponents"])
            )
        return "\n".join(lines) + "\n"
    if kind == "verify":
        lines = [f"verified,{str(p['verified']).lower()}"]
        if p.get("timeout"):
            lines.append("timeout,true")
        lines += [
            f"evidence,{k},{str(v).lower()}" for k, v in sorted(p.get("evidence", {}).items())
        ]
        lines += [f"mismatch,{k},{l},{a},{b}" for k, l, a, b in p.get("mismatches", ())]
        return "\n".join(lines) + "\n"
    if kind == "sweep":
        lines = [f"{r['spec']},{str(r['verified']).lower()}" for r in p["results"]]
        return "\n".join(lines) + "\n"
    raise SpecError(f"csv output is not defined for {kind!r}")


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def _triangle_rows(ft) -> list[list[int]]:
    return [[ft.data.coeff(k, l) for l in range(ft.n + 1 - k)] for k in range(ft.n + 1)]


def cmd_ftriangle(args) -> int:
    spec = parse_spec(args.spec)
    ft = load_or_build_triangle(spec, args.cache_dir)
    payload = {"n": ft.n, "f": _triangle_rows(ft)}
    print(_emit(_document(str(spec), "ftriangle", args.format, payload)), end="")
    return EXIT_OK


def cmd_fvector(args) -> int:
    spec = parse_spec(args.spec)
    ft = load_or_build_triangle(spec, args.cache_dir)
    payload = {
        "n": spec.rank,
        "f": list(f_vector(spec).coeffs),
        "f_positive": list(positive_f_vector(ft).coeffs),
        "f_natural": list(natural_f_vector(ft)),
    }
    print(_emit(_document(str(spec), "fvector", args.format, payload)), end="")
    return EXIT_OK


def cmd_mtriangle(args) -> int:
    spec = parse_spec(args.spec)
    order = _parse_order(args.coxeter_order, spec.rank)
    lat = load_or_build_lattice(spec, order, args.cache_dir)
    m = m_triangle(lat)
    payload = {
        "n": lat.n,
        "coxeter_order": list(lat.coxeter_order),
        "m": [[m.coeff(i, j) for j in range(lat.n + 1)] for i in range(lat.n + 1)],
    }
    print(_emit(_document(str(spec), "mtriangle", args.format, payload)), end="")
    return EXIT_OK


def cmd_invariants(args) -> int:
    from .weyl import invariant_formulas

    spec = parse_spec(args.spec)
    forms = invariant_formulas(spec)
    payload = {
        "n": spec.rank,
        "components": [
            {
                "type": str(t),
                "h": invariants(t).coxeter_number,
                "exponents": list(invariants(t).exponents),
            }
            for t in spec.components
        ],
        "cardinality": forms.cardinality,
        "mobius": forms.mobius_number,
        "zeta": [str(c) for c in forms.zeta],
        "h_vector": list(h_vector(spec)),
    }
    print(_emit(_document(str(spec), "invariants", args.format, payload)), end="")
    return EXIT_OK


def _verify_payload(spec_str, coxeter_order, max_seconds, cache_dir, with_timings):
    """Run one verification; returns (payload, exit_code)."""
    spec = parse_spec(spec_str)
    order = _parse_order(coxeter_order, spec.rank)
    deadline = Deadline(max_seconds)
    try:
        lat = load_or_build_lattice(spec, order, cache_dir, deadline=deadline)
        report = verify_conjecture(spec, order, deadline=deadline, lattice=lat)
    except ComputationTimeout:
        return {"timeout": True, "n": spec.rank, "verified": False}, EXIT_TIMEOUT
    payload = report.payload(with_timings=with_timings)
    payload["timeout"] = False
    code = EXIT_OK if report.verified and report.evidence.all_pass else EXIT_MISMATCH
    return payload, code


def cmd_verify(args) -> int:
    spec = parse_spec(args.spec)
    payload, code = _verify_payload(
        str(spec), args.coxeter_order, args.max_seconds, args.cache_dir, args.timings
    )
    print(_emit(_document(str(spec), "verify", args.format, payload)), end="")
    return code


def _sweep_worker(task):
    spec_str, max_seconds, cache_dir = task
    payload, code = _verify_payload(spec_str, None, max_seconds, cache_dir, False)
    return spec_str, payload, code


def cmd_sweep(args) -> int:
    specs = [str(parse_spec(s)) for s in args.specs]
    tasks = [(s, args.max_seconds, args.cache_dir) for s in specs]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_sweep_worker, tasks))
    else:
        results = [_sweep_worker(t) for t in tasks]
    entries = []
    codes = []
    for spec_str, payload, code in results:
        entries.append(
            {
                "spec": spec_str,
                "verified": bool(payload.get("verified")),
                "timeout": bool(payload.get("timeout")),
                "report": payload,
            }
        )
        codes.append(code)
    payload = {"results": entries, "all_verified": all(c == EXIT_OK for c in codes)}
    doc = _document(" ".join(specs), "sweep", args.format, payload)
    print(_emit(doc), end="")
    if any(c == EXIT_MISMATCH for c in codes):
        return EXIT_MISMATCH
    if any(c == EXIT_TIMEOUT for c in codes):
        return EXIT_TIMEOUT
    return EXIT_OK


def _parse_order(text, rank) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        order = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise SpecError(f"--coxeter-order {text!r} is not a comma-separated permutation")
    if sorted(order) != list(range(1, rank + 1)):
        raise SpecError(f"--coxeter-order {text!r} is not a permutation of 1..{rank}")
    return order


# --------------------------------------------------------------------------
# parser and entry point
# --------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fmtri",
        description="Exact F-triangles, M-triangles, and the change-of-variables check relating them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order_flag=False, seconds_flag=False):
        p.add_argument("--format", choices=("json", "tex", "csv"), default="json")
        p.add_argument("--cache-dir", default=None, help="directory for JSON caches")
        if order_flag:
            p.add_argument(
                "--coxeter-order",
                default=None,
                help="node order for the Coxeter element, e.g. '2,1,3' (default: 1,2,...,n)",
            )
        if seconds_flag:
            p.add_argument("--max-seconds", type=float, default=None, help="time budget")

    p = sub.add_parser("ftriangle", help="print the F-triangle of a spec")
    p.add_argument("spec")
    common(p)
    p.set_defaults(fn=cmd_ftriangle)

    p = sub.add_parser("fvector", help="print f, positive f, and natural f vectors")
    p.add_argument("spec")
    common(p)
    p.set_defaults(fn=cmd_fvector)

    p = sub.add_parser("mtriangle", help="print the M-triangle of the noncrossing partition lattice")
    p.add_argument("spec")
    common(p, order_flag=True)
    p.set_defaults(fn=cmd_mtriangle)

    p = sub.add_parser("invariants", help="print closed-form lattice invariants")
    p.add_argument("spec")
    common(p)
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("verify", help="check the F/M change-of-variables identity for one spec")
    p.add_argument("spec")
    common(p, order_flag=True, seconds_flag=True)
    p.add_argument("--timings", action="store_true", help="include timings (breaks byte-reproducibility)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("sweep", help="verify a list of specs; exit 0 only if all pass")
    p.add_argument("specs", nargs="+")
    common(p, seconds_flag=True)
    p.add_argument("--jobs", type=int, default=1, help="verify specs in parallel processes")
    p.set_defaults(fn=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; normalize other exits
        return EXIT_USAGE if exc.code not in (0,) else 0
    try:
        return args.fn(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ComputationTimeout:
        print("error: time budget exceeded", file=sys.stderr)
        return EXIT_TIMEOUT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
