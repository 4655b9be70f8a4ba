"""Command-line front end: validate models, lift them to H(D), render reports.

Exit codes: 0 every check passed, 1 a mathematical failure (axiom,
fibrancy), 2 an operational failure (I/O, schema, usage).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Sequence

from .companions import NotFibrant
from .core import verify_double_category
from .lifting import LIFTS, certify_fibrant, verify_monoidal_bicategory
from .models.rel import RelModel
from .models.span import SpanModel
from .models.table import TableError, load_table, table_monoidal
from .monoidal import monoidal_structure, verify_braided, verify_monoidal, verify_symmetric
from .report import AxiomResult, Report, SampleBudget

REPORT_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2
LEVELS = ("monoidal", "braided", "symmetric")


class OperationalError(Exception):
    pass


def _model(args) -> tuple[Any, Any, dict]:
    if args.table:
        try:
            m = load_table(args.table)
            T = table_monoidal(m)
        except (OSError, TableError) as e:
            raise OperationalError(str(e)) from e
        return m, T, {"kind": "table", "path": args.table, "name": m.name, "objects": len(m.objects()),
                      "braided": bool(T and T.braided), "symmetric": bool(T and T.symmetric),
                      "faults": list(m.faults)}
    n = args.max_size
    if args.builtin == "rel":
        m = RelModel(n)
        desc = {"kind": "builtin", "family": "rel", "max_size": n}
    else:
        apex = args.max_apex if args.max_apex is not None else n + 1
        m = SpanModel(n, apex)
        desc = {"kind": "builtin", "family": "span", "max_size": n, "max_apex": apex}
    T = monoidal_structure(m)
    desc.update(name=m.name, objects=len(m.objects()), braided=True, symmetric=True)
    return m, T, desc


def _structure_reports(m, T, budget: SampleBudget, level: str | None, table: bool) -> list[Report]:
    out = []
    if table:
        out.append(verify_double_category(m, budget))
    if T is not None:
        out.append(verify_monoidal(T, budget))
        if T.braided and level != "monoidal":
            out.append(verify_braided(T, budget))
        if T.symmetric and level not in ("monoidal", "braided"):
            out.append(verify_symmetric(T, budget))
    return out


def _fibrancy_report(err: NotFibrant) -> Report:
    rep = Report("fibrancy")
    rep.add(AxiomResult("every vertical 1-morphism has a companion and a conjoint",
                        "fibrant: every vertical 1-morphism has a companion and a conjoint",
                        len(err.missing), False, "exhaustive", str(err), "fibrancy",
                        "; ".join(map(str, err.missing))))
    return rep


def run(args) -> dict:
    """Execute ``validate`` or ``lift`` and return the run report."""
    budget = SampleBudget(limit=args.budget, seed=args.seed, samples=args.budget)
    out: dict[str, Any] = {
        "schema_version": REPORT_VERSION, "command": args.command, "seed": args.seed, "budget": args.budget,
        "certificate": None, "boundaries": {}, "reports": [], "error": None,
    }
    timings: dict[str, float] = {}
    clock = time.perf_counter()

    def lap(name):
        nonlocal clock
        now = time.perf_counter()
        timings[name] = round(now - clock, 3)
        clock = now

    m, T, out["model"] = _model(args)
    lap("load")
    level = getattr(args, "level", None)
    if level:
        out["level"], out["check_mode"], out["isofibrant"] = level, args.check_mode, args.isofibrant
        if T is not None and level != "monoidal" and not T.braided:
            raise OperationalError(f"level {level} needs a braiding")
        if T is not None and level == "symmetric" and not T.symmetric:
            raise OperationalError("level symmetric needs a symmetric braiding")
    reports = _structure_reports(m, T, budget, level, bool(args.table))
    out["reports"] = [r.to_dict() for r in reports]
    lap("structure")
    ok = all(r.ok for r in reports)
    if args.command == "lift" and ok:
        try:
            cert = certify_fibrant(m, isofibrant=args.isofibrant)
            out["certificate"] = cert.summary()
            lap("certificate")
            if T is None:
                raise OperationalError("the model has no tensor block")
            d = LIFTS[level](T, cert, budget, check=False, faults=getattr(m, "faults", ()))
        except NotFibrant as e:
            out["error"] = f"NotFibrant: {e}"
            out["reports"].append(_fibrancy_report(e).to_dict())
            ok = False
        else:
            out["boundaries"] = d.boundaries()
            rep = verify_monoidal_bicategory(d, budget, mode=args.check_mode)
            out["reports"].append(rep.to_dict())
            ok = rep.ok
            lap("lift")
    out["ok"] = ok
    out["exit_code"] = EXIT_OK if ok else EXIT_FAIL
    if args.timings:
        out["timings"] = timings
    return out


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def to_text(report: dict) -> str:
    """Readable rendering; each axiom is listed with its citation string."""
    lines = ["dblcoh report"]
    model = report.get("model")
    if model:
        lines.append("model: " + ", ".join(f"{k}={model[k]}" for k in sorted(model)))
    for key in ("command", "level", "check_mode", "seed", "budget"):
        if key in report and report[key] is not None:
            lines.append(f"{key}: {report[key]}")
    cert = report.get("certificate")
    if cert:
        lines.append("certificate: " + ", ".join(f"{k}={cert[k]}" for k in sorted(cert)))
    for kind, b in sorted(report.get("boundaries", {}).items()):
        lines.append(f"constraint {kind} at {b['at']}: {b['source']}  =>  {b['target']}")
    if report.get("error"):
        lines.append(f"error: {report['error']}")
    for rd in report.get("reports", []):
        rep = Report.from_dict(rd)
        lines.append("")
        lines.append(f"== {rep.title} ==")
        group = None
        for r in rep.results:
            if r.group != group:
                group = r.group
                lines.append(f"[{group}]")
            mark = "PASS" if r.passed else "FAIL"
            lines.append(f"  {mark} {r.name}: {r.instances} {r.coverage}")
            lines.append(f"       cite: {r.citation}")
            if r.counterexample:
                lines.append(f"       counterexample: {r.counterexample}")
            if r.instance:
                lines.append(f"       instance: {r.instance}")
    if "ok" in report:
        lines.append("")
        lines.append(f"result: {'PASS' if report['ok'] else 'FAIL'} (exit {report.get('exit_code')})")
    if report.get("timings"):
        lines.append("timings: " + ", ".join(f"{k}={v}s" for k, v in sorted(report["timings"].items())))
    return "\n".join(lines) + "\n"


def _emit(report: dict, fmt: str, output: str | None) -> None:
    text = to_json(report) if fmt == "json" else to_text(report)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _model_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", choices=("rel", "span"), help="built-in model family")
    src.add_argument("--table", metavar="PATH", help="JSON table model")
    p.add_argument("--max-size", type=int, default=2, help="largest set in a built-in model (default 2)")
    p.add_argument("--max-apex", type=int, default=None, help="largest span apex (default max-size + 1)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=20,
                   help="instances per axiom: exhaustive up to this many, else this many samples")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (not reproducible)")


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dblcoh", description="Lift fibrant monoidal double categories to bicategories.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("validate", help="check the double category and monoidal axioms")
    _model_args(v)
    lf = sub.add_parser("lift", help="certify fibrancy, lift, and verify the monoidal bicategory axioms")
    _model_args(lf)
    lf.add_argument("--level", choices=LEVELS, default="monoidal")
    lf.add_argument("--check-mode", choices=("brute", "theta"), default="brute")
    lf.add_argument("--isofibrant", action="store_true", help="only require companions of vertical isomorphisms")
    r = sub.add_parser("report", help="render a saved JSON report")
    r.add_argument("path")
    r.add_argument("--format", choices=("json", "text"), default="text")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = parser().parse_args(argv)
    try:
        if args.command == "report":
            try:
                with open(args.path, encoding="utf-8") as fh:
                    report = json.load(fh)
            except (OSError, json.JSONDecodeError) as e:
                raise OperationalError(f"cannot read report: {e}") from e
            if not isinstance(report, dict):
                raise OperationalError("a report must be a JSON object")
            _emit(report, args.format, None)
            return EXIT_OK
        report = run(args)
    except OperationalError as e:
        print(f"dblcoh: error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as e:  # anything unexpected is operational, never a silent pass
        print(f"dblcoh: internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_ERROR
    _emit(report, args.format, args.output)
    return report["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
