import itertools

import pytest
from hypothesis import given
import hypothesis.strategies as st

from travlaw.applicative_laws import check_applicative_laws, check_morphism
from travlaw.effects import (BASE_BATTERY, CONST_FREE, CONST_SUM, IDENTITY, LENGTH,
                             LIST, LIST_FLATTEN, MIDDLE, MORPHISM_BATTERY, NONE, OPTION,
                             OPTION_FLATTEN, REVERSE_FREE, SAFE_HEAD, SAFE_LAST, Comp,
                             CompV, ConstV, IdV, ListV, MalformedEffectError, OptV,
                             SwappedConst, ap, compose_applicatives, mult, pure, unit)
from travlaw.reports import GenerationBudget
from travlaw.values import Fn, NotAFunctionError, swap

from .strategies import effects_by_name


def test_unit_examples():
    assert unit(CONST_FREE, 5) == ConstV(())
    assert unit(IDENTITY, 1) == IdV(1)
    assert unit(Comp(LIST, OPTION), 2) == CompV(ListV((OptV(2),)))
    assert unit(OPTION, 0) == OptV(0)


def test_list_mult_is_left_outer():
    xs, ys = ListV((1, 2)), ListV((10,))
    # oracle: cartesian product, first factor varying slowest
    assert mult(LIST, xs, ys) == ListV(tuple(itertools.product(xs.items, ys.items)))
    assert mult(LIST, xs, ys) == ListV(((1, 10), (2, 10)))


def test_const_and_identity_mult():
    assert mult(CONST_FREE, ConstV(("a",)), ConstV(("b",))) == ConstV(("a", "b"))
    assert mult(IDENTITY, IdV(1), IdV(2)) == IdV((1, 2))
    assert mult(CONST_SUM, ConstV(1), ConstV(2)) == ConstV(3)


def test_mult_rejects_wrong_tags():
    with pytest.raises(MalformedEffectError):
        mult(LIST, IdV(1), ListV(()))
    with pytest.raises(MalformedEffectError):
        Comp(LIST, LIST).mult(ListV(()), ListV(()))


def test_ap_examples():
    inc1, inc2 = Fn("+1", lambda x: x + 1), Fn("+2", lambda x: x + 2)
    assert ap(LIST, ListV((inc1, inc2)), ListV((10,))) == ListV((11, 12))
    with pytest.raises(NotAFunctionError):
        ap(LIST, ListV((3,)), ListV((10,)))


@pytest.mark.parametrize("F", BASE_BATTERY, ids=lambda f: f.name)
def test_ap_on_pure(F):
    g = Fn("succ", lambda x: x + 1)
    for x in range(3):
        assert ap(F, pure(F, g), pure(F, x)) == pure(F, g(x))


def test_compose_identity_outer_is_tagging():
    G = Comp(IDENTITY, LIST)
    assert G.unit(1) == CompV(IdV(LIST.unit(1)))
    assert compose_applicatives(IDENTITY, LIST).name == "Comp(Identity,List)"


def test_compose_list_list_mult():
    u = CompV(ListV((ListV(()), ListV((1,)))))
    # oracle: outer pairs left-outer, then inner cartesian products
    expected = [list(itertools.product(a.items, b.items))
                for a, b in itertools.product(u.outer.items, u.outer.items)]
    got = Comp(LIST, LIST).mult(u, u)
    assert [list(x.items) for x in got.outer.items] == expected
    assert got == CompV(ListV((ListV(()), ListV(()), ListV(()), ListV(((1, 1),)))))


def test_compose_const_const_combines_outer_carrier():
    F = Comp(CONST_FREE, CONST_SUM)
    assert F.mult(CompV(ConstV((1,))), CompV(ConstV((2,)))) == CompV(ConstV((1, 2)))


@pytest.mark.parametrize("F", [*BASE_BATTERY, Comp(LIST, LIST), Comp(OPTION, CONST_FREE)],
                         ids=lambda f: f.name)
def test_applicative_laws_hold(F):
    report = check_applicative_laws(F)
    assert report.passed, report.line()
    assert report.cases_run > 0


def test_swapped_commutative_claim_is_caught():
    report = check_applicative_laws(SwappedConst())
    assert not report.passed
    assert report.witness.note == "commutativity"
    lhs, rhs = report.witness.lhs, report.witness.rhs
    assert lhs.carrier == rhs.carrier[::-1] and lhs != rhs


@pytest.mark.parametrize("F", BASE_BATTERY, ids=lambda f: f.name)
def test_unit_at_one_point_is_nu(F):
    assert F.unit(()) == F.nu()


@pytest.mark.parametrize("F", [f for f in BASE_BATTERY if f.commutative], ids=lambda f: f.name)
def test_commutative_flag_sound(F):
    xs = F.effects((0, 1, 2), GenerationBudget())
    for u, v in itertools.product(xs, xs):
        assert F.mult(u, v) == F.fmap(swap, F.mult(v, u))


@given(st.lists(st.integers(0, 2), max_size=3), st.lists(st.integers(0, 2), max_size=3))
def test_const_ignores_payload_functions(a, b):
    u, v = ConstV(tuple(a)), ConstV(tuple(b))
    f1, f2 = Fn("f", lambda x: x), Fn("g", lambda x: 0)
    assert CONST_FREE.ap(CONST_FREE.fmap(lambda _: f1, u), v) == \
        CONST_FREE.ap(CONST_FREE.fmap(lambda _: f2, u), v)


@pytest.mark.parametrize("name", list(effects_by_name))
@given(data=st.data())
def test_mult_associative_random(name, data):
    from travlaw.effects import by_name
    F = by_name(name)
    u, v, w = (data.draw(effects_by_name[name]) for _ in range(3))
    left = F.fmap(lambda p: (p[0][0], (p[0][1], p[1])), F.mult(F.mult(u, v), w))
    assert F.mult(u, F.mult(v, w)) == left


def test_composition_associative_up_to_retagging():
    budget = GenerationBudget(atom_domain=(0, 1), max_effect_width=1, max_nesting=3)
    for F, G, H in itertools.product((LIST, OPTION, CONST_FREE), repeat=3):
        left = check_applicative_laws(Comp(Comp(F, G), H), budget)
        right = check_applicative_laws(Comp(F, Comp(G, H)), budget)
        assert left.passed == right.passed

    def reassoc(u):
        # Comp(Comp(F,G),H) value -> Comp(F,Comp(G,H)) value
        return CompV(LIST.fmap(lambda g: CompV(g), u.outer.outer))

    A, B = Comp(Comp(LIST, LIST), LIST), Comp(LIST, Comp(LIST, LIST))
    xs = A.effects((0, 1), budget)
    for u, v in itertools.product(xs[:20], xs[:20]):
        assert reassoc(A.mult(u, v)) == B.mult(reassoc(u), reassoc(v))


def test_nesting_budget_enforced():
    from travlaw.reports import BudgetError
    with pytest.raises(BudgetError):
        Comp(Comp(LIST, LIST), LIST).effects((0,), GenerationBudget())


@pytest.mark.parametrize("alpha", MORPHISM_BATTERY, ids=lambda a: a.name)
def test_morphism_battery_is_lawful(alpha):
    assert check_morphism(alpha).passed


def test_safe_last_is_a_morphism():
    # last of a left-outer product is (last xs, last ys)
    assert check_morphism(SAFE_LAST).passed


@pytest.mark.parametrize("alpha", [MIDDLE, REVERSE_FREE, LIST_FLATTEN], ids=lambda a: a.name)
def test_broken_morphisms_rejected(alpha):
    # inner lists need two elements before concatenation can reorder pairs
    report = check_morphism(alpha, GenerationBudget(inner_effect_width=2))
    assert not report.passed
    assert report.witness.lhs != report.witness.rhs


def test_list_flatten_witness_reorders():
    report = check_morphism(LIST_FLATTEN, GenerationBudget(inner_effect_width=2))
    assert sorted(report.witness.lhs.items) == sorted(report.witness.rhs.items)


def test_flatten_option_examples():
    assert OPTION.flatten(OptV(OptV(1))) == OptV(1)
    assert OPTION.flatten(OptV(NONE)) == NONE
    assert OPTION_FLATTEN(CompV(NONE)) == NONE
    assert SAFE_HEAD(ListV((2, 1))) == OptV(2)
    assert LENGTH(ConstV((0, 0, 1))) == ConstV(3)
