"""Bounded-exhaustive checks of the traversal laws.

Every check enumerates inputs in a fixed order (seed inputs first, then
structures by increasing size) and reports the first counterexample.
"""
from __future__ import annotations

import itertools
from dataclasses import replace
from typing import Iterable, Iterator, Sequence

from .applicative_laws import check_morphism
from .containers import (ContainerTraversable, bin_container, list_container,
                         reversed_order, single_shape)
from .effects import (BASE_BATTERY, CONST_FREE, IDENTITY, LIST, MORPHISM_BATTERY,
                      OPTION, Applicative, Comp, CompV, ConstV, IdV, Morphism,
                      flatten_morphism)
from .reports import GenerationBudget, LawReport, run_cases
from .rogue import ROGUES
from .traversable import BIN_T, ID_T, LIST_T, Traversable

LAWS = ("unitarity", "purity", "linearity", "naturality", "kleisli", "visit-once")
LINEARITY_BATTERY: tuple[Applicative, ...] = (IDENTITY, CONST_FREE, LIST, OPTION)
KLEISLI_MONADS: tuple[Applicative, ...] = (OPTION,)


class PreconditionError(ValueError):
    """A check was asked to run outside its hypotheses."""


def _with_seeds(T: Traversable, key: tuple, generated: Iterable) -> Iterator:
    yield from T.seeds.get(key, ())
    yield from generated


def check_unitarity(T: Traversable, budget: GenerationBudget | None = None) -> LawReport:
    budget = budget or GenerationBudget()
    cases = _with_seeds(T, ("unitarity",), T.structures(budget.atom_domain, budget))
    return run_cases("unitarity", T.name, (IDENTITY.name,), cases,
                     lambda t: (T.dist(IDENTITY, T.fmap(IdV, t)), IdV(t)), budget)


def check_purity(T: Traversable, F: Applicative,
                 budget: GenerationBudget | None = None) -> LawReport:
    budget = budget or GenerationBudget()
    cases = _with_seeds(T, ("purity", F.name), T.structures(budget.atom_domain, budget))
    return run_cases("purity", T.name, (F.name,), cases,
                     lambda t: (T.dist(F, T.fmap(F.unit, t)), F.unit(t)), budget)


def linearity_sides(T: Traversable, F: Applicative, G: Applicative, t):
    """Both sides of the linearity law at a structure of F(G x) effects."""
    lhs = T.dist(Comp(F, G), T.fmap(CompV, t))
    rhs = CompV(F.fmap(lambda s: T.dist(G, s), T.dist(F, t)))
    return lhs, rhs


def check_linearity(T: Traversable, F: Applicative, G: Applicative,
                    budget: GenerationBudget | None = None) -> LawReport:
    budget = budget or GenerationBudget()
    payloads = Comp(F, G).raw_effects(budget.atom_domain, budget)
    cases = _with_seeds(T, ("linearity", F.name, G.name), T.structures(payloads, budget))
    return run_cases("linearity", T.name, (F.name, G.name), cases,
                     lambda t: linearity_sides(T, F, G, t), budget)


def check_naturality(T: Traversable, alpha: Morphism,
                     budget: GenerationBudget | None = None) -> LawReport:
    budget = budget or GenerationBudget()
    src, tgt = alpha.source, alpha.target
    payloads = src.effects(budget.atom_domain, budget)
    cases = _with_seeds(T, ("naturality", alpha.name), T.structures(payloads, budget))
    return run_cases("naturality", T.name, (alpha.name,), cases,
                     lambda t: (alpha(T.dist(src, t)), T.dist(tgt, T.fmap(alpha, t))),
                     budget)


def kleisli_sides(T: Traversable, M: Applicative, t):
    """Sequencing twice then flattening, against flattening then sequencing."""
    lhs = M.flatten(M.fmap(lambda s: T.dist(M, s), T.dist(M, t)))
    rhs = T.dist(M, T.fmap(M.flatten, t))
    return lhs, rhs


def check_kleisli(T: Traversable, M: Applicative,
                  budget: GenerationBudget | None = None) -> LawReport:
    """Raises :class:`PreconditionError` unless ``M`` is a commutative monad
    whose ``flatten`` passes the morphism check."""
    budget = budget or GenerationBudget()
    if not hasattr(M, "flatten"):
        raise PreconditionError(f"{M.name} is not a monad")
    if not M.commutative:
        raise PreconditionError(f"{M.name} is not commutative")
    pre = check_morphism(flatten_morphism(M), budget)
    if not pre.passed:
        raise PreconditionError(f"flatten of {M.name} is not an applicative morphism")
    payloads = Comp(M, M).raw_effects(budget.atom_domain, budget)
    cases = _with_seeds(T, ("kleisli", M.name), T.structures(payloads, budget))
    return run_cases("kleisli", T.name, (M.name,), cases,
                     lambda t: kleisli_sides(T, M, t), budget)


def _visit(T: Traversable, t):
    labels: list = []
    T.fmap(labels.append, t)
    carrier = T.traverse(CONST_FREE, lambda tok: ConstV((tok,)), t).carrier
    return carrier, tuple(labels)


def check_visit_once(T: Traversable, budget: GenerationBudget | None = None) -> LawReport:
    """Label every position with a distinct token and traverse at the free
    monoid: the collected word must be a permutation of the labels."""
    budget = budget or GenerationBudget()
    shapes = _with_seeds(T, ("visit-once",), T.structures([()], budget))
    orders: list = []

    def check(t):
        carrier, labels = _visit(T, t)
        orders.append(carrier)
        if len(carrier) == len(labels) and sorted(carrier) == sorted(labels):
            return ConstV(carrier), ConstV(carrier)
        return ConstV(carrier), ConstV(labels)

    report = run_cases("visit-once", T.name, (CONST_FREE.name,),
                       (T.label(t) for t in shapes), check, budget)
    return replace(report, observations=tuple(orders))


def run_suite(T: Traversable, budget: GenerationBudget | None = None,
              laws: Sequence[str] = LAWS) -> list[LawReport]:
    budget = budget or GenerationBudget()
    unknown = set(laws) - set(LAWS)
    if unknown:
        raise ValueError(f"unknown laws: {sorted(unknown)}")
    reports: list[LawReport] = []
    for law in LAWS:
        if law not in laws:
            continue
        if law == "unitarity":
            reports.append(check_unitarity(T, budget))
        elif law == "purity":
            reports.extend(check_purity(T, F, budget) for F in BASE_BATTERY)
        elif law == "linearity":
            reports.extend(check_linearity(T, F, G, budget)
                           for F, G in itertools.product(LINEARITY_BATTERY, repeat=2))
        elif law == "naturality":
            reports.extend(check_naturality(T, a, budget) for a in MORPHISM_BATTERY)
        elif law == "kleisli":
            reports.extend(check_kleisli(T, M, budget) for M in KLEISLI_MONADS)
        elif law == "visit-once":
            reports.append(check_visit_once(T, budget))
    return reports


def replay(T: Traversable, report: LawReport):
    """Re-evaluate both sides of ``report``'s law at its witness input."""
    t = report.witness.input
    apps = {f.name: f for f in BASE_BATTERY}
    if report.law == "unitarity":
        return T.dist(IDENTITY, T.fmap(IdV, t)), IdV(t)
    if report.law == "purity":
        F = apps[report.applicatives[0]]
        return T.dist(F, T.fmap(F.unit, t)), F.unit(t)
    if report.law == "linearity":
        F, G = (apps[n] for n in report.applicatives)
        return linearity_sides(T, F, G, t)
    if report.law == "naturality":
        alpha = {a.name: a for a in MORPHISM_BATTERY}[report.applicatives[0]]
        return alpha(T.dist(alpha.source, t)), T.dist(alpha.target, T.fmap(alpha, t))
    if report.law == "kleisli":
        return kleisli_sides(T, apps[report.applicatives[0]], t)
    if report.law == "visit-once":
        carrier, labels = _visit(T, t)
        return ConstV(carrier), ConstV(labels)
    raise ValueError(f"cannot replay {report.law}")


def failing_laws(reports: Iterable[LawReport]) -> set[str]:
    return {r.law for r in reports if not r.passed}


# -- registry --------------------------------------------------------------

def _registry() -> dict[str, Traversable]:
    lawful: list[Traversable] = [
        LIST_T, BIN_T, ID_T,
        ContainerTraversable(list_container(3)),
        ContainerTraversable(bin_container(3)),
        *(ContainerTraversable(single_shape(k)) for k in range(4)),
        ContainerTraversable(list_container(3), reversed_order, "list-container-reversed"),
    ]
    return {T.name: T for T in (*lawful, *ROGUES)}


REGISTRY: dict[str, Traversable] = _registry()
