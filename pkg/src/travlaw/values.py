"""Element values shared by effects and structures.

Atoms are plain ints, pairs are 2-tuples, the one-point value is ``()``.
Position labels are :class:`Token` and functions carried inside effects
are :class:`Fn`.  Everything else (effects, structures) renders itself
through ``__str__``; :func:`render` is the single entry point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

UNIT = ()


@dataclass(frozen=True, order=True)
class Token:
    """Opaque position label."""

    index: int

    def __str__(self) -> str:
        return f"#{self.index}"


@dataclass(frozen=True)
class Fn:
    """A named total function.  Equality is by name only."""

    name: str
    fn: Callable[[Any], Any] = field(compare=False, repr=False)

    def __call__(self, x: Any) -> Any:
        return self.fn(x)

    def __str__(self) -> str:
        return f"<{self.name}>"


def curried(name: str, arity: int, fn: Callable[..., Any]) -> Any:
    """Curry an ``arity``-argument function into nested :class:`Fn` values."""
    if arity == 0:
        return fn()

    def take(args: tuple) -> Any:
        if len(args) == arity:
            return fn(*args)
        # Partial applications share the base name; effects are only
        # compared once every function has been fully applied.
        return Fn(name, lambda x: take(args + (x,)))

    return take(())


def identity(x: Any) -> Any:
    return x


def fst(p: tuple) -> Any:
    return p[0]


def snd(p: tuple) -> Any:
    return p[1]


def swap(p: tuple) -> tuple:
    return (p[1], p[0])


def apply_pair(p: tuple) -> Any:
    f, x = p
    if not callable(f):
        raise NotAFunctionError(f"payload {render(f)} is not a function")
    return f(x)


class NotAFunctionError(TypeError):
    pass


def render(v: Any) -> str:
    """Canonical text form: nested brackets, tokens as ``#n``."""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, tuple):
        return "(" + ",".join(render(x) for x in v) + ")"
    if isinstance(v, str):
        return v
    return str(v)
