"""Traversable functors and the list, binary-tree and identity instances.

A :class:`Traversable` supplies ``fmap`` plus at least one of ``traverse``,
``dist`` or ``consume``; the others default to the usual interdefinitions::

    traverse f   = dist . fmap f
    dist         = consume id
    consume g    = fmap g . traverse id
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from types import MappingProxyType
from typing import Any, Callable, Iterator, Mapping, Sequence

from .effects import CONST_FREE, IDENTITY, Applicative, ConstV
from .reports import GenerationBudget
from .values import Token, curried, identity, render


# -- structures ------------------------------------------------------------

@dataclass(frozen=True)
class ListS:
    items: tuple = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "items", tuple(self.items))

    def __str__(self) -> str:
        return "[" + ",".join(render(x) for x in self.items) + "]"


@dataclass(frozen=True)
class Leaf:
    def __str__(self) -> str:
        return "Leaf"


LEAF = Leaf()


@dataclass(frozen=True)
class Node:
    left: Any
    value: Any
    right: Any

    def __str__(self) -> str:
        return f"Node({render(self.left)},{render(self.value)},{render(self.right)})"


@dataclass(frozen=True)
class IdS:
    value: Any

    def __str__(self) -> str:
        return render(self.value)


def bin_size(t: Leaf | Node) -> int:
    if isinstance(t, Leaf):
        return 0
    return bin_size(t.left) + 1 + bin_size(t.right)


def bin_skeletons(n: int) -> list:
    """All tree skeletons with exactly ``n`` nodes (payload ``()``)."""
    return _skeletons(n)


_SKELETON_CACHE: dict[int, list] = {}


def _skeletons(n: int) -> list:
    if n not in _SKELETON_CACHE:
        if n == 0:
            out = [LEAF]
        else:
            out = [Node(left, (), right)
                   for k in range(n)
                   for left in _skeletons(k)
                   for right in _skeletons(n - 1 - k)]
        _SKELETON_CACHE[n] = out
    return _SKELETON_CACHE[n]


# -- the interface ---------------------------------------------------------

_DIRECT = ("traverse", "dist", "consume")


class Traversable:
    name: str = "?"
    expected_failures: frozenset = frozenset()
    # (law, *applicative names) -> inputs tried before enumerated cases
    seeds: Mapping[tuple, tuple] = MappingProxyType({})

    def __init_subclass__(cls, **kwargs: Any) -> None:
        super().__init_subclass__(**kwargs)
        if not any(getattr(cls, m) is not getattr(Traversable, m) for m in _DIRECT):
            raise TypeError(f"{cls.__name__} must define one of {', '.join(_DIRECT)}")

    def fmap(self, f: Callable[[Any], Any], t: Any) -> Any:
        raise NotImplementedError

    def traverse(self, F: Applicative, f: Callable[[Any], Any], t: Any) -> Any:
        return self.dist(F, self.fmap(f, t))

    def dist(self, F: Applicative, t: Any) -> Any:
        return self.consume(F, identity, t)

    def consume(self, F: Applicative, g: Callable[[Any], Any], t: Any) -> Any:
        return F.fmap(g, self.traverse(F, identity, t))

    def structures(self, values: Sequence, budget: GenerationBudget) -> Iterator:
        """Every structure over ``values`` up to the size bound, smallest first."""
        raise NotImplementedError

    def skeleton(self, t: Any) -> Any:
        return self.fmap(lambda _: (), t)

    def label(self, t: Any) -> Any:
        """Replace payloads by distinct tokens #0, #1, ... in ``fmap`` order."""
        counter = itertools.count()
        return self.fmap(lambda _: Token(next(counter)), t)

    def to_list(self, t: Any) -> list:
        return list(self.traverse(CONST_FREE, lambda x: ConstV((x,)), t).carrier)

    def map_via_traverse(self, f: Callable[[Any], Any], t: Any) -> Any:
        return self.traverse(IDENTITY, lambda x: IDENTITY.unit(f(x)), t).value

    def __repr__(self) -> str:
        return self.name


def traverse(T: Traversable, F: Applicative, f, t):
    return T.traverse(F, f, t)


def dist(T: Traversable, F: Applicative, t):
    return T.dist(F, t)


def consume(T: Traversable, F: Applicative, g, t):
    return T.consume(F, g, t)


def to_list(T: Traversable, t) -> list:
    return T.to_list(t)


def map_via_traverse(T: Traversable, f, t):
    return T.map_via_traverse(f, t)


# Default derivations applied regardless of what an instance overrides.

def traverse_via_dist(T: Traversable, F: Applicative, f, t):
    return T.dist(F, T.fmap(f, t))


def dist_via_consume(T: Traversable, F: Applicative, t):
    return T.consume(F, identity, t)


def consume_via_traverse(T: Traversable, F: Applicative, g, t):
    return F.fmap(g, T.traverse(F, identity, t))


# -- instances -------------------------------------------------------------

CONS = curried("cons", 2, lambda x, xs: ListS((x,) + xs.items))


def _cons_pair(p: tuple) -> ListS:
    return ListS((p[0],) + p[1].items)


def _node_triple(p: tuple) -> Node:
    (left, x), right = p
    return Node(left, x, right)


def list_structures(values: Sequence, budget: GenerationBudget) -> Iterator[ListS]:
    for n in range(budget.max_structure_size + 1):
        for xs in itertools.product(values, repeat=n):
            yield ListS(xs)


class ListFunctor:
    """Functor structure and enumeration shared by every list instance."""

    def fmap(self, f, t):
        return ListS(tuple(f(x) for x in t.items))

    def structures(self, values, budget):
        return list_structures(values, budget)


class ListTraversable(ListFunctor, Traversable):
    name = "list"

    def traverse(self, F, f, t):
        # foldr: pure (:) <*> f x <*> rest, multiplied out
        acc = F.pure(ListS(()))
        for x in reversed(t.items):
            acc = F.fmap(_cons_pair, F.mult(f(x), acc))
        return acc


class BinTraversable(Traversable):
    name = "bin"

    def fmap(self, f, t):
        if isinstance(t, Leaf):
            return t
        left = self.fmap(f, t.left)
        x = f(t.value)
        return Node(left, x, self.fmap(f, t.right))

    def traverse(self, F, f, t):
        if isinstance(t, Leaf):
            return F.pure(LEAF)
        left = self.traverse(F, f, t.left)
        x = f(t.value)
        right = self.traverse(F, f, t.right)
        return F.fmap(_node_triple, F.mult(F.mult(left, x), right))

    def structures(self, values, budget):
        for n in range(budget.max_structure_size + 1):
            for shape in bin_skeletons(n):
                for xs in itertools.product(values, repeat=n):
                    yield fill_bin(shape, xs)


def fill_bin(shape: Leaf | Node, xs: Sequence) -> Leaf | Node:
    """Place ``xs`` into the skeleton in in-order position order."""
    it = iter(xs)
    return BIN_T.fmap(lambda _: next(it), shape)


class IdentityFunctor:
    def fmap(self, f, t):
        return IdS(f(t.value))

    def structures(self, values, budget):
        if budget.max_structure_size >= 1:
            for x in values:
                yield IdS(x)


class IdentityTraversable(IdentityFunctor, Traversable):
    name = "identity"

    def dist(self, F, t):
        return F.fmap(IdS, t.value)


LIST_T = ListTraversable()
BIN_T = BinTraversable()
ID_T = IdentityTraversable()
