"""Law checks for applicatives and applicative morphisms."""
from __future__ import annotations

import itertools
from dataclasses import replace
from typing import Iterator

from .effects import Applicative, Morphism
from .reports import GenerationBudget, LawReport, run_cases
from .values import UNIT, Fn, curried, fst, identity, snd, swap


def function_domain(budget: GenerationBudget) -> list[Fn]:
    atoms = budget.atom_domain
    succ = {a: atoms[(i + 1) % len(atoms)] for i, a in enumerate(atoms)}
    fns = [Fn("id", identity), Fn("succ", lambda x: succ.get(x, x))]
    if atoms:
        fns.append(Fn(f"const{atoms[0]}", lambda x, c=atoms[0]: c))
    return fns


_COMPOSE = curried("compose", 3, lambda g, f, x: g(f(x)))


def _assoc(p: tuple) -> tuple:
    (a, b), c = p
    return (a, (b, c))


def _applicative_cases(f: Applicative, budget: GenerationBudget) -> Iterator:
    atoms = budget.atom_domain
    fns = function_domain(budget)
    xs = f.effects(atoms, budget)
    fs = f.effects(fns, budget)

    yield ("unit-is-nu", (), lambda: (f.nu(), f.unit(UNIT)))
    for u in xs:
        yield ("identity", (u,), lambda u=u: (f.ap(f.pure(Fn("id", identity)), u), u))
    for u, v, w in itertools.product(fs, fs, xs):
        yield ("composition", (u, v, w), lambda u=u, v=v, w=w: (
            f.ap(f.ap(f.ap(f.pure(_COMPOSE), u), v), w), f.ap(u, f.ap(v, w))))
    for g, x in itertools.product(fns, atoms):
        yield ("homomorphism", (g, x), lambda g=g, x=x: (
            f.ap(f.pure(g), f.pure(x)), f.pure(g(x))))
    for u, y in itertools.product(fs, atoms):
        at_y = Fn(f"$ {y}", lambda h, y=y: h(y))
        yield ("interchange", (u, y), lambda u=u, y=y, at_y=at_y: (
            f.ap(u, f.pure(y)), f.ap(f.pure(at_y), u)))
    for x, y in itertools.product(atoms, atoms):
        yield ("unit-coherence", (x, y), lambda x=x, y=y: (
            f.mult(f.unit(x), f.unit(y)), f.unit((x, y))))
    for u in xs:
        yield ("left-unit", (u,), lambda u=u: (f.fmap(snd, f.mult(f.nu(), u)), u))
        yield ("right-unit", (u,), lambda u=u: (f.fmap(fst, f.mult(u, f.nu())), u))
    for u, v, w in itertools.product(xs, xs, xs):
        yield ("associativity", (u, v, w), lambda u=u, v=v, w=w: (
            f.mult(u, f.mult(v, w)), f.fmap(_assoc, f.mult(f.mult(u, v), w))))
    if f.commutative:
        for u, v in itertools.product(xs, xs):
            yield ("commutativity", (u, v), lambda u=u, v=v: (
                f.mult(u, v), f.fmap(swap, f.mult(v, u))))


def _evaluate(case):
    law, _, thunk = case
    lhs, rhs = thunk()
    return lhs, rhs, law


def check_applicative_laws(f: Applicative, budget: GenerationBudget | None = None) -> LawReport:
    """Identity, composition, homomorphism and interchange for ``pure``/``ap``,
    plus unit/associativity coherence of ``unit``/``mult`` and, for
    applicatives flagged commutative, commutativity of ``mult``.
    """
    budget = budget or GenerationBudget()
    report = run_cases("applicative", "-", (f.name,),
                       _applicative_cases(f, budget), _evaluate, budget)
    return _strip_thunk(report)


def _morphism_cases(alpha: Morphism, budget: GenerationBudget) -> Iterator:
    src, tgt = alpha.source, alpha.target
    for x in budget.atom_domain:
        yield ("unit-square", (x,), lambda x=x: (alpha(src.unit(x)), tgt.unit(x)))
    xs = src.effects(budget.atom_domain, budget)
    for u, v in itertools.product(xs, xs):
        yield ("mult-square", (u, v), lambda u=u, v=v: (
            alpha(src.mult(u, v)), tgt.mult(alpha(u), alpha(v))))


def check_morphism(alpha: Morphism, budget: GenerationBudget | None = None) -> LawReport:
    budget = budget or GenerationBudget()
    report = run_cases("morphism", alpha.name, (alpha.source.name, alpha.target.name),
                       _morphism_cases(alpha, budget), _evaluate, budget)
    return _strip_thunk(report)


def _strip_thunk(report: LawReport) -> LawReport:
    """Replace the (law, inputs, thunk) case in a witness by its inputs."""
    w = report.witness
    if w is None:
        return report
    return replace(report, witness=replace(w, input=w.input[1]))
