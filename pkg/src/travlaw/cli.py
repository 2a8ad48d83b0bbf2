"""``lawcheck``: run law suites against registered instances or containers.

Exit status: 0 when every selected law matches expectation, 1 otherwise,
2 on usage errors, 3 when a container file cannot be read or parsed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from pathlib import Path

from .applicative_laws import check_applicative_laws
from .containers import ContainerTraversable, FiniteContainer
from .effects import BASE_BATTERY, pairwise_compositions
from .lawcheck import LAWS, REGISTRY, run_suite
from .reports import GenerationBudget, LawReport

CLI_LAWS = (*LAWS, "applicative")
EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CONTAINER = 0, 1, 2, 3


class ContainerParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_container_file(text: str, name: str = "container") -> FiniteContainer:
    """Parse ``<shape-id> <arity>`` lines; blanks and ``#`` comments are skipped."""
    shapes: list[tuple[str, int]] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ContainerParseError(lineno, f"expected '<shape-id> <arity>', got {raw.strip()!r}")
        shape, arity = parts
        if not arity.isdecimal():
            raise ContainerParseError(lineno, f"arity {arity!r} is not a non-negative integer")
        if shape in seen:
            raise ContainerParseError(lineno, f"duplicate shape {shape!r}")
        seen.add(shape)
        shapes.append((shape, int(arity)))
    return FiniteContainer(tuple(shapes), name)


def _parse_laws(value: str) -> list[str]:
    laws = [x.strip() for x in value.split(",") if x.strip()]
    for law in laws:
        if law != "all" and law not in CLI_LAWS:
            raise argparse.ArgumentTypeError(
                f"unknown law {law!r} (choose from {', '.join(CLI_LAWS)}, all)")
    return laws


def _parse_atoms(value: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in value.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"atoms must be comma-separated integers: {value!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lawcheck", description=__doc__.splitlines()[0])
    src = p.add_mutually_exclusive_group()
    src.add_argument("--instance", help=f"registered instance ({', '.join(REGISTRY)})")
    src.add_argument("--container", type=Path, help="container definition file")
    p.add_argument("--laws", type=_parse_laws, action="append",
                   help="comma-separated laws (default: all)")
    p.add_argument("--size", type=int, help="max structure size")
    p.add_argument("--atoms", type=_parse_atoms, help="atom domain, e.g. 0,1,2")
    p.add_argument("--width", type=int, help="max effect width")
    p.add_argument("--inner-width", type=int, help="width of the inner layer of composed effects")
    p.add_argument("--nesting", type=int, help="max effect nesting")
    p.add_argument("--cap", type=int, help="case cap per check (env LAWCHECK_BUDGET_CAP)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--expect-fail", action="store_true",
                   help="succeed only if every selected law fails somewhere")
    p.add_argument("--list", action="store_true", help="list registered instances and exit")
    return p


def budget_from_args(args: argparse.Namespace, environ=os.environ) -> GenerationBudget:
    budget = GenerationBudget()
    overrides = {}
    if environ.get("LAWCHECK_BUDGET_CAP"):
        overrides["case_cap"] = int(environ["LAWCHECK_BUDGET_CAP"])
    for flag, field in (("size", "max_structure_size"), ("atoms", "atom_domain"),
                        ("width", "max_effect_width"), ("inner_width", "inner_effect_width"),
                        ("nesting", "max_nesting"), ("cap", "case_cap")):
        value = getattr(args, flag)
        if value is not None:
            overrides[field] = value
    return replace(budget, **overrides)


def selected_laws(args: argparse.Namespace) -> list[str]:
    chosen = [law for group in (args.laws or [["all"]]) for law in group]
    if "all" in chosen:
        return list(CLI_LAWS)
    return [law for law in CLI_LAWS if law in chosen]


def applicative_reports(budget: GenerationBudget) -> list[LawReport]:
    apps = (*BASE_BATTERY, *pairwise_compositions())
    return [check_applicative_laws(f, budget) for f in apps]


def run(args: argparse.Namespace, budget: GenerationBudget, T) -> list[LawReport]:
    laws = selected_laws(args)
    reports = run_suite(T, budget, [law for law in laws if law in LAWS]) if T else []
    if "applicative" in laws:
        reports.extend(applicative_reports(budget))
    return reports


def exit_code(reports: list[LawReport], laws: list[str], expect_fail: bool) -> int:
    if not expect_fail:
        return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH
    failed = {r.law for r in reports if not r.passed}
    return EXIT_OK if set(laws) <= failed else EXIT_MISMATCH


def document(instance: str, budget: GenerationBudget, reports: list[LawReport]) -> dict:
    return {"instance": instance, "budget": budget.to_dict(),
            "reports": [r.to_dict() for r in reports]}


def render_text(instance: str, budget: GenerationBudget, reports: list[LawReport]) -> str:
    lines = [f"instance: {instance}",
             f"budget: size={budget.max_structure_size} atoms={list(budget.atom_domain)} "
             f"width={budget.max_effect_width} inner={budget.inner_effect_width} "
             f"nesting={budget.max_nesting} cap={budget.case_cap}"]
    lines += [r.line() for r in reports]
    n_fail = sum(not r.passed for r in reports)
    lines.append(f"{len(reports) - n_fail} passed, {n_fail} failed")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    if args.list:
        for name, T in REGISTRY.items():
            tag = f"  expected failures: {', '.join(sorted(T.expected_failures))}" \
                if T.expected_failures else ""
            print(f"{name}{tag}")
        return EXIT_OK

    try:
        budget = budget_from_args(args)
    except ValueError as exc:
        print(f"lawcheck: {exc}", file=sys.stderr)
        return EXIT_USAGE

    laws = selected_laws(args)
    if args.container is not None:
        try:
            text = args.container.read_text(encoding="utf-8")
            C = parse_container_file(text, args.container.stem)
        except (OSError, UnicodeDecodeError, ContainerParseError) as exc:
            print(f"lawcheck: {args.container}: {exc}", file=sys.stderr)
            return EXIT_CONTAINER
        T, instance = ContainerTraversable(C), f"container:{args.container}"
    elif args.instance is not None:
        if args.instance not in REGISTRY:
            print(f"lawcheck: unknown instance {args.instance!r}", file=sys.stderr)
            return EXIT_USAGE
        T, instance = REGISTRY[args.instance], args.instance
    elif laws == ["applicative"]:
        T, instance = None, "-"
    else:
        print("lawcheck: one of --instance or --container is required", file=sys.stderr)
        return EXIT_USAGE

    if T is None:
        laws = ["applicative"]
    reports = run(args, budget, T)
    if args.format == "json":
        print(json.dumps(document(instance, budget, reports), indent=2))
    else:
        print(render_text(instance, budget, reports))
    return exit_code(reports, laws, args.expect_fail)


if __name__ == "__main__":
    sys.exit(main())
