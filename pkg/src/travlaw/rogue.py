"""Distributive laws with the right type that are not traversals.

Each instance declares which laws it is expected to break, and may carry
seed inputs: known counterexamples that the checkers try before the
enumerated cases.
"""
from __future__ import annotations

from .effects import Applicative, ListV
from .traversable import CONS, IdentityFunctor, IdS, ListFunctor, ListS, Traversable
from .values import curried

_K = curried("const", 2, lambda x, y: x)


def dist_l(F: Applicative, t: ListS):
    """Ignores its input."""
    return F.pure(ListS(()))


def dist_l_prime(F: Applicative, t: ListS):
    """Sequences every effect except the last."""
    items = t.items
    if len(items) <= 1:
        return F.pure(ListS(()))
    return F.ap(F.ap(F.pure(CONS), items[0]), dist_l_prime(F, ListS(items[1:])))


def dist_l_double_prime(F: Applicative, t: ListS):
    """Runs each effect twice, keeping the data from the first run."""
    items = t.items
    if not items:
        return F.pure(ListS(()))
    x = items[0]
    twice = F.ap(F.ap(F.pure(_K), x), x)
    return F.ap(F.ap(F.pure(CONS), twice), dist_l_double_prime(F, ListS(items[1:])))


def diagonal_identity_dist(F: Applicative, t: IdS):
    u = t.value
    return F.fmap(lambda p: IdS(p[0]), F.mult(u, u))


class DistL(ListFunctor, Traversable):
    name = "distL"
    expected_failures = frozenset({"unitarity", "purity", "visit-once"})

    def dist(self, F, t):
        return dist_l(F, t)


class DistL1(ListFunctor, Traversable):
    name = "distL1"
    # Dropping the last position twice on the composite side also breaks
    # linearity, e.g. [0,0] at Identity.Identity gives [0] against [].
    expected_failures = frozenset({"unitarity", "purity", "visit-once",
                                   "linearity", "kleisli"})

    def dist(self, F, t):
        return dist_l_prime(F, t)


class DistL2(ListFunctor, Traversable):
    name = "distL2"
    expected_failures = frozenset({"linearity", "visit-once"})
    # [[[], [[1]]]]: one position holding List(List) effect [[], [[1]]]
    seeds = {("linearity", "List", "List"):
             (ListS((ListV((ListV(()), ListV((ListV((1,)),)))),)),)}

    def dist(self, F, t):
        return dist_l_double_prime(F, t)


class DiagonalIdentity(IdentityFunctor, Traversable):
    name = "diagId"
    expected_failures = frozenset({"linearity", "visit-once"})
    seeds = {("linearity", "List", "List"): (IdS(ListV((ListV(()), ListV((1,))))),)}

    def dist(self, F, t):
        return diagonal_identity_dist(F, t)


DIST_L = DistL()
DIST_L1 = DistL1()
DIST_L2 = DistL2()
DIAG_ID = DiagonalIdentity()

ROGUES: tuple[Traversable, ...] = (DIST_L, DIST_L1, DIST_L2, DIAG_ID)
