"""Applicative functors in the monoidal presentation.

Each applicative is given by a unit ``unit(x)``, a multiplication
``mult(u, v)`` producing an effect over pairs, and ``fmap``.  ``pure`` and
``ap`` are derived.  Effects are immutable tagged values compared
structurally.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Any, Callable, Sequence

from .reports import BudgetError, GenerationBudget
from .values import UNIT, apply_pair, render


class MalformedEffectError(TypeError):
    pass


# -- effect values ---------------------------------------------------------

@dataclass(frozen=True)
class IdV:
    value: Any

    def __str__(self) -> str:
        # Id is a newtype; keep it out of the printed form.
        return render(self.value)


@dataclass(frozen=True)
class ConstV:
    carrier: Any

    def __str__(self) -> str:
        c = self.carrier
        if isinstance(c, tuple):
            return "K[" + ",".join(render(x) for x in c) + "]"
        return f"K({render(c)})"


@dataclass(frozen=True)
class ListV:
    items: tuple = ()

    def __post_init__(self) -> None:
        if type(self.items) is not tuple:
            object.__setattr__(self, "items", tuple(self.items))

    def __str__(self) -> str:
        return "[" + ",".join(render(x) for x in self.items) + "]"


@dataclass(frozen=True)
class OptV:
    value: Any = None
    present: bool = True

    def __str__(self) -> str:
        return f"Some({render(self.value)})" if self.present else "None"


NONE = OptV(None, False)


@dataclass(frozen=True)
class CompV:
    """Composite effect: an outer effect whose payloads are inner effects."""

    outer: Any

    def __str__(self) -> str:
        return render(self.outer)


# -- monoids ---------------------------------------------------------------

@dataclass(frozen=True)
class Monoid:
    name: str
    empty: Any
    combine: Callable[[Any, Any], Any]
    commutative: bool = False
    samples: Callable[[GenerationBudget], list] = lambda budget: []


def _words(budget: GenerationBudget) -> list:
    out = []
    for n in range(budget.max_effect_width + 1):
        out.extend(itertools.product(budget.atom_domain, repeat=n))
    return out


INT_SUM = Monoid("IntSum", 0, lambda a, b: a + b, commutative=True,
                 samples=lambda budget: [a for a in budget.atom_domain
                                         if isinstance(a, int)])
FREE_MONOID = Monoid("Free", (), lambda a, b: a + b, samples=_words)


# -- applicatives ----------------------------------------------------------

class Applicative:
    name: str = "?"
    commutative: bool = False
    depth: int = 1

    def unit(self, x: Any) -> Any:
        raise NotImplementedError

    def mult(self, u: Any, v: Any) -> Any:
        raise NotImplementedError

    def fmap(self, f: Callable[[Any], Any], u: Any) -> Any:
        raise NotImplementedError

    def effects(self, values: Sequence, budget: GenerationBudget,
                width: int | None = None) -> list:
        """All effects over ``values`` within the budget, in a fixed order."""
        raise NotImplementedError

    def eq(self, u: Any, v: Any) -> bool:
        return u == v

    def pure(self, x: Any) -> Any:
        return self.unit(x)

    def ap(self, ff: Any, fx: Any) -> Any:
        return self.fmap(apply_pair, self.mult(ff, fx))

    def nu(self) -> Any:
        """The nullary multiplication, an effect over the one-point value."""
        return self.unit(UNIT)

    def _expect(self, u: Any, cls: type) -> None:
        if type(u) is not cls and not isinstance(u, cls):
            raise MalformedEffectError(
                f"{self.name}: expected {cls.__name__}, got {render(u)}")

    def __repr__(self) -> str:
        return self.name


class Identity(Applicative):
    name = "Identity"
    commutative = True

    def unit(self, x):
        return IdV(x)

    def mult(self, u, v):
        self._expect(u, IdV)
        self._expect(v, IdV)
        return IdV((u.value, v.value))

    def fmap(self, f, u):
        self._expect(u, IdV)
        return IdV(f(u.value))

    def effects(self, values, budget, width=None):
        return [IdV(x) for x in values]


class Const(Applicative):
    """Constant applicative of a monoid; payloads are phantom."""

    def __init__(self, monoid: Monoid):
        self.monoid = monoid
        self.name = f"Const({monoid.name})"
        self.commutative = monoid.commutative

    def unit(self, x):
        return ConstV(self.monoid.empty)

    def mult(self, u, v):
        self._expect(u, ConstV)
        self._expect(v, ConstV)
        return ConstV(self.monoid.combine(u.carrier, v.carrier))

    def fmap(self, f, u):
        self._expect(u, ConstV)
        return u

    def effects(self, values, budget, width=None):
        if width is not None and width != budget.max_effect_width:
            budget = replace(budget, max_effect_width=width)
        return [ConstV(c) for c in self.monoid.samples(budget)]


class ListApp(Applicative):
    """The list-monad applicative; pairs enumerate the left factor outermost."""

    name = "List"

    def unit(self, x):
        return ListV((x,))

    def mult(self, u, v):
        self._expect(u, ListV)
        self._expect(v, ListV)
        ys = v.items
        return ListV(tuple([(a, b) for a in u.items for b in ys]))

    def fmap(self, f, u):
        self._expect(u, ListV)
        return ListV(tuple(map(f, u.items)))

    def flatten(self, u):
        self._expect(u, ListV)
        out = []
        for inner in u.items:
            self._expect(inner, ListV)
            out.extend(inner.items)
        return ListV(tuple(out))

    def effects(self, values, budget, width=None):
        width = budget.max_effect_width if width is None else width
        return [ListV(xs) for n in range(width + 1)
                for xs in itertools.product(values, repeat=n)]


class OptionApp(Applicative):
    name = "Option"
    commutative = True

    def unit(self, x):
        return OptV(x)

    def mult(self, u, v):
        self._expect(u, OptV)
        self._expect(v, OptV)
        if u.present and v.present:
            return OptV((u.value, v.value))
        return NONE

    def fmap(self, f, u):
        self._expect(u, OptV)
        return OptV(f(u.value)) if u.present else NONE

    def flatten(self, u):
        self._expect(u, OptV)
        if not u.present:
            return NONE
        self._expect(u.value, OptV)
        return u.value

    def effects(self, values, budget, width=None):
        return [NONE] + [OptV(x) for x in values]


class Comp(Applicative):
    def __init__(self, outer: Applicative, inner: Applicative):
        self.outer = outer
        self.inner = inner
        self.name = f"Comp({outer.name},{inner.name})"
        self.commutative = outer.commutative and inner.commutative
        self.depth = outer.depth + inner.depth

    def unit(self, x):
        return CompV(self.outer.unit(self.inner.unit(x)))

    def mult(self, u, v):
        self._expect(u, CompV)
        self._expect(v, CompV)
        inner = self.inner
        return CompV(self.outer.fmap(lambda p: inner.mult(p[0], p[1]),
                                     self.outer.mult(u.outer, v.outer)))

    def fmap(self, f, u):
        self._expect(u, CompV)
        inner = self.inner
        return CompV(self.outer.fmap(lambda g: inner.fmap(f, g), u.outer))

    def raw_effects(self, values, budget, width=None) -> list:
        """Outer effects holding inner effects, without the Comp tag."""
        if self.depth > budget.max_nesting:
            raise BudgetError(f"{self.name} exceeds nesting {budget.max_nesting}")
        inner = self.inner.effects(values, budget, budget.inner_effect_width)
        return self.outer.effects(inner, budget, width)

    def effects(self, values, budget, width=None):
        return [CompV(e) for e in self.raw_effects(values, budget, width)]


def compose_applicatives(f: Applicative, g: Applicative) -> Comp:
    return Comp(f, g)


def unit(f: Applicative, x: Any) -> Any:
    return f.unit(x)


def mult(f: Applicative, u: Any, v: Any) -> Any:
    return f.mult(u, v)


def pure(f: Applicative, x: Any) -> Any:
    return f.pure(x)


def ap(f: Applicative, ff: Any, fx: Any) -> Any:
    return f.ap(ff, fx)


IDENTITY = Identity()
CONST_SUM = Const(INT_SUM)
CONST_FREE = Const(FREE_MONOID)
LIST = ListApp()
OPTION = OptionApp()

BASE_BATTERY: tuple[Applicative, ...] = (IDENTITY, CONST_SUM, CONST_FREE, LIST, OPTION)


def pairwise_compositions(apps: Sequence[Applicative] = BASE_BATTERY) -> list[Comp]:
    return [Comp(f, g) for f in apps for g in apps]


# -- morphisms -------------------------------------------------------------

@dataclass(frozen=True)
class Morphism:
    name: str
    source: Applicative
    target: Applicative
    apply: Callable[[Any], Any]

    def __call__(self, u: Any) -> Any:
        return self.apply(u)


def eta_embedding(f: Applicative) -> Morphism:
    """The unique morphism out of the identity applicative."""
    return Morphism(f"eta[{f.name}]", IDENTITY, f, lambda u: f.unit(u.value))


def _safe_head(u: ListV) -> OptV:
    return OptV(u.items[0]) if u.items else NONE


def _safe_last(u: ListV) -> OptV:
    return OptV(u.items[-1]) if u.items else NONE


def _middle(u: ListV) -> OptV:
    return OptV(u.items[len(u.items) // 2]) if u.items else NONE


SAFE_HEAD = Morphism("safe-head", LIST, OPTION, _safe_head)
SAFE_LAST = Morphism("safe-last", LIST, OPTION, _safe_last)
REVERSE = Morphism("reverse", LIST, LIST, lambda u: ListV(u.items[::-1]))
LENGTH = Morphism("length", CONST_FREE, CONST_SUM, lambda u: ConstV(len(u.carrier)))


def flatten_morphism(m: ListApp | OptionApp) -> Morphism:
    """Monad multiplication viewed as a map ``Comp(M, M) -> M``."""
    return Morphism(f"flatten[{m.name}]", Comp(m, m), m, lambda u: m.flatten(u.outer))


OPTION_FLATTEN = flatten_morphism(OPTION)

MORPHISM_BATTERY: tuple[Morphism, ...] = (
    *(eta_embedding(f) for f in BASE_BATTERY),
    SAFE_HEAD, SAFE_LAST, REVERSE, LENGTH, OPTION_FLATTEN,
)

# Not applicative morphisms; kept so the checker has something to reject.
MIDDLE = Morphism("middle", LIST, OPTION, _middle)
REVERSE_FREE = Morphism("reverse-word", CONST_FREE, CONST_FREE,
                        lambda u: ConstV(u.carrier[::-1]))
LIST_FLATTEN = flatten_morphism(LIST)


class SwappedConst(Const):
    """Const over the free monoid with operands swapped, flagged commutative.

    Swapping alone gives Const of the opposite monoid, which is lawful; the
    commutative flag is the lie the checker catches.
    """

    def __init__(self) -> None:
        super().__init__(FREE_MONOID)
        self.name = "SwappedConst(Free)"
        self.commutative = True

    def mult(self, u, v):
        return super().mult(v, u)


def by_name(name: str) -> Applicative:
    for f in BASE_BATTERY:
        if f.name == name:
            return f
    raise KeyError(name)
