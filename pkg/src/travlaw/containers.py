"""Finitary containers and their canonical traversal.

A container is a set of shapes with an arity for each; a value is a shape
with a payload vector of that arity.  The canonical ``dist`` multiplies
the payload effects together with the iterated multiplication ``mu_k``
and reattaches the shape.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Mapping, Sequence

from .effects import Applicative
from .reports import BudgetError, GenerationBudget
from .traversable import LEAF, Leaf, Node, Traversable, bin_size, bin_skeletons, fill_bin
from .values import render


class ArityError(ValueError):
    pass


@dataclass(frozen=True)
class ContainerValue:
    shape: Any
    payload: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "payload", tuple(self.payload))

    def __str__(self) -> str:
        return f"{render(self.shape)}:[" + ",".join(render(x) for x in self.payload) + "]"


@dataclass(frozen=True)
class FiniteContainer:
    """Shapes with arities, kept in declaration order."""

    shapes: tuple[tuple[Any, int], ...] = ()
    name: str = "container"

    def __post_init__(self) -> None:
        shapes = tuple((s, int(n)) for s, n in self.shapes)
        seen = set()
        for s, n in shapes:
            if s in seen:
                raise ValueError(f"duplicate shape {s!r}")
            if n < 0:
                raise ArityError(f"negative arity for shape {s!r}")
            seen.add(s)
        object.__setattr__(self, "shapes", shapes)

    @classmethod
    def from_mapping(cls, arity: Mapping[Any, int], name: str = "container") -> "FiniteContainer":
        return cls(tuple(arity.items()), name)

    @property
    def arity(self) -> dict:
        return dict(self.shapes)

    def ar(self, shape: Any) -> int:
        try:
            return self.arity[shape]
        except KeyError:
            raise ArityError(f"unknown shape {shape!r}") from None

    def value(self, shape: Any, payload: Iterable) -> ContainerValue:
        v = ContainerValue(shape, tuple(payload))
        self.validate(v)
        return v

    def validate(self, v: ContainerValue) -> None:
        n = self.ar(v.shape)
        if len(v.payload) != n:
            raise ArityError(f"shape {v.shape!r} has arity {n}, payload has {len(v.payload)}")


def mu_k(F: Applicative, k: int, effects: Sequence) -> Any:
    """Iterated multiplication: an F-effect over flat ``k``-tuples.

    ``mu_0 = nu``, ``mu_1`` wraps each payload in a 1-tuple and
    ``mu_{k+1}(u, *rest) = mu(u, mu_k(rest))`` re-associated to a flat tuple.
    """
    effects = tuple(effects)
    if len(effects) != k:
        raise ArityError(f"mu_k expected {k} effects, got {len(effects)}")
    if k == 0:
        return F.nu()
    if k == 1:
        return F.fmap(lambda x: (x,), effects[0])
    rest = mu_k(F, k - 1, effects[1:])
    return F.fmap(lambda p: (p[0],) + p[1], F.mult(effects[0], rest))


def canonical_dist(C: FiniteContainer, F: Applicative, v: ContainerValue,
                   order: Sequence[int] | None = None) -> Any:
    """Distribute F over a container value.

    ``order`` permutes the sequence in which payload positions are
    multiplied; the default is ascending index.
    """
    C.validate(v)
    k = len(v.payload)
    if order is None:
        return F.fmap(lambda xs: ContainerValue(v.shape, xs), mu_k(F, k, v.payload))
    order = tuple(order)
    if sorted(order) != list(range(k)):
        raise ArityError(f"{order} is not a permutation of {k} positions")

    def restore(xs: tuple) -> ContainerValue:
        out = [None] * k
        for pos, x in zip(order, xs):
            out[pos] = x
        return ContainerValue(v.shape, tuple(out))

    return F.fmap(restore, mu_k(F, k, [v.payload[i] for i in order]))


class ContainerTraversable(Traversable):
    """The traversable functor given by a finitary container.

    ``order(shape, arity)`` optionally chooses the position permutation used
    for each shape.
    """

    def __init__(self, container: FiniteContainer,
                 order: Callable[[Any, int], Sequence[int]] | None = None,
                 name: str | None = None):
        self.container = container
        self.order = order
        self.name = name or container.name

    def fmap(self, f, t):
        return ContainerValue(t.shape, tuple(f(x) for x in t.payload))

    def dist(self, F, t):
        order = None if self.order is None else self.order(t.shape, len(t.payload))
        return canonical_dist(self.container, F, t, order)

    def structures(self, values, budget):
        for s, n in self.container.shapes:
            if n > budget.max_structure_size:
                continue
            for xs in itertools.product(values, repeat=n):
                yield ContainerValue(s, xs)


def container_traversable(C: FiniteContainer, name: str | None = None) -> ContainerTraversable:
    return ContainerTraversable(C, name=name)


def reversed_order(shape: Any, n: int) -> list[int]:
    return list(range(n - 1, -1, -1))


# -- lists and trees as containers ----------------------------------------

def list_container(max_len: int = 3) -> FiniteContainer:
    return FiniteContainer(tuple((n, n) for n in range(max_len + 1)), "list-container")


def encode_list(xs: Sequence, max_len: int | None = None) -> ContainerValue:
    xs = tuple(getattr(xs, "items", xs))
    if max_len is not None and len(xs) > max_len:
        raise BudgetError(f"list of length {len(xs)} exceeds {max_len}")
    return ContainerValue(len(xs), xs)


def decode_list(v: ContainerValue) -> list:
    return list(v.payload)


def skeleton_id(t: Leaf | Node) -> str:
    if isinstance(t, Leaf):
        return "L"
    return f"N({skeleton_id(t.left)},{skeleton_id(t.right)})"


def parse_skeleton(text: str) -> Leaf | Node:
    def go(i: int) -> tuple[Leaf | Node, int]:
        if text[i] == "L":
            return LEAF, i + 1
        if text.startswith("N(", i):
            left, i = go(i + 2)
            if text[i] != ",":
                raise ValueError(f"bad skeleton {text!r}")
            right, i = go(i + 1)
            if text[i] != ")":
                raise ValueError(f"bad skeleton {text!r}")
            return Node(left, (), right), i + 1
        raise ValueError(f"bad skeleton {text!r}")

    try:
        tree, end = go(0)
    except IndexError:
        raise ValueError(f"bad skeleton {text!r}") from None
    if end != len(text):
        raise ValueError(f"bad skeleton {text!r}")
    return tree


def bin_container(max_nodes: int = 3) -> FiniteContainer:
    return FiniteContainer(tuple((skeleton_id(s), n)
                                 for n in range(max_nodes + 1)
                                 for s in bin_skeletons(n)), "bin-container")


def encode_bin(t: Leaf | Node, max_nodes: int | None = None) -> ContainerValue:
    payload = []

    def walk(u: Leaf | Node) -> None:
        if isinstance(u, Node):
            walk(u.left)
            payload.append(u.value)
            walk(u.right)

    walk(t)
    if max_nodes is not None and len(payload) > max_nodes:
        raise BudgetError(f"tree with {len(payload)} nodes exceeds {max_nodes}")
    return ContainerValue(skeleton_id(t), tuple(payload))


def decode_bin(v: ContainerValue) -> Leaf | Node:
    shape = parse_skeleton(v.shape)
    if bin_size(shape) != len(v.payload):
        raise ArityError(f"skeleton {v.shape} needs {bin_size(shape)} payloads")
    return fill_bin(shape, v.payload)


def single_shape(k: int, shape: str = "s") -> FiniteContainer:
    return FiniteContainer(((shape, k),), f"arity-{k}")
