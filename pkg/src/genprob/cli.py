"""``genprob`` command line.

Exit codes: 0 success, 1 domain error (failed axiom, inference error),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from .algebra import check_laws
from .errors import GenProbError, LawViolation, ParseError
from .modelfile import Model, load_model
from .query import run_query

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


def exit_code(exc: BaseException) -> int:
    if isinstance(exc, ParseError):
        return EXIT_USAGE
    if isinstance(exc, GenProbError):
        return EXIT_DOMAIN
    raise exc


def error_line(exc: GenProbError) -> str:
    return f"error [{exc.module}] {exc.kind}: {exc}"


def _measure_axioms(model: Model) -> list[str]:
    """Re-check non-negativity, normalisation, empty set and additivity on events."""
    P, s = model.measure, model.structure
    events = list(model.algebra.events()) if len(model.algebra) <= 10 else list(model.algebra.atoms)
    problems = []
    if any(s.lt(P.prob(A), s.zero) for A in events):
        problems.append("ACPA1")
    if not s.eq(P.prob(model.space.full()), s.one):
        problems.append("ACPA2")
    if not s.eq(P.prob(model.space.empty()), s.zero):
        problems.append("ACPA3")
    for A in events:
        for B in events:
            if A.isdisjoint(B) and not s.eq(P.prob(A | B), s.add(P.prob(A), P.prob(B))):
                problems.append("ACPA4")
                break
        if "ACPA4" in problems:
            break
    return problems


def check_model(model: Model, seed: int = 0, samples: int = 500) -> tuple[list[str], int]:
    s = model.structure
    lines = [f"model: {model.source}", f"structure: {s.name}"]
    report = check_laws(s, samples=samples, seed=seed)
    violations = []
    for r in report.results:
        if r.passed:
            lines.append(f"law {r.axiom}: pass")
        else:
            shown = "(" + ", ".join(s.format(v) for v in r.counterexample) + ")"
            lines.append(f"law {r.axiom}: FAIL at {shown}")
            violations.append(LawViolation(r.axiom, r.counterexample, s.name, shown))
    problems = _measure_axioms(model)
    for ax in ("ACPA1", "ACPA2", "ACPA3", "ACPA4"):
        lines.append(f"measure {ax}: {'FAIL' if ax in problems else 'pass'}")
    ok = report.passed and not problems
    lines.extend(error_line(v) for v in violations)
    lines.append(f"result: {'pass' if ok else 'fail'}")
    return lines, EXIT_OK if ok else EXIT_DOMAIN


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genprob", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", required=True, help="path to a JSON model file")
    common.add_argument("--instance", help="structure id overriding the model's 'structure'")
    common.add_argument("--tolerance", type=float, help="comparison tolerance (float instances only)")
    common.add_argument("--seed", type=int, default=0, help="seed for law-check sampling")
    sub = parser.add_subparsers(dest="command", required=True)
    check = sub.add_parser("check", parents=[common], help="validate structure laws and measure axioms")
    check.add_argument("--samples", type=int, default=500)
    query = sub.add_parser("query", parents=[common], help="evaluate one or more queries")
    query.add_argument("queries", nargs="+", help="query strings, e.g. 'prob even'")
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = _parser().parse_args(argv)
    try:
        model = load_model(args.model, instance=args.instance, tolerance=args.tolerance)
    except GenProbError as exc:
        print(error_line(exc), file=stderr)
        return exit_code(exc)

    if args.command == "check":
        lines, code = check_model(model, seed=args.seed, samples=args.samples)
        print("\n".join(lines), file=stdout)
        return code

    for text in args.queries:
        try:
            result = run_query(model, text)
        except GenProbError as exc:
            print(f"> {text}", file=stdout)
            print(error_line(exc), file=stderr)
            return exit_code(exc)
        print("\n".join(result.lines()), file=stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
