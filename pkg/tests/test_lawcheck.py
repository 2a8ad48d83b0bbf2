import pytest

from travlaw.containers import ContainerTraversable, list_container
from travlaw.effects import (CONST_FREE, IDENTITY, LIST, OPTION, SAFE_HEAD, ConstV,
                             eta_embedding)
from travlaw.lawcheck import (LAWS, REGISTRY, PreconditionError, check_kleisli,
                              check_linearity, check_naturality, check_purity,
                              check_unitarity, check_visit_once, failing_laws, replay,
                              run_suite)
from travlaw.reports import GenerationBudget
from travlaw.rogue import DIAG_ID, DIST_L, DIST_L1, DIST_L2, ROGUES
from travlaw.traversable import BIN_T, ID_T, LIST_T
from travlaw.values import Token

SMALL = GenerationBudget(max_structure_size=2, atom_domain=(0, 1))


def test_unitarity_examples():
    assert check_unitarity(LIST_T).passed
    report = check_unitarity(DIST_L)
    assert not report.passed


def test_purity_examples():
    assert check_purity(LIST_T, CONST_FREE).passed
    assert check_purity(DIAG_ID, LIST).passed
    report = check_purity(DIST_L, LIST)
    assert str(report.witness.input) == "[0]"
    assert str(report.witness.lhs) == "[[]]" and str(report.witness.rhs) == "[[0]]"


def test_linearity_list_instance_all_pairs():
    for F in (IDENTITY, CONST_FREE, LIST, OPTION):
        for G in (IDENTITY, CONST_FREE, LIST, OPTION):
            assert check_linearity(LIST_T, F, G, SMALL).passed


def test_naturality_examples():
    assert check_naturality(LIST_T, SAFE_HEAD).passed
    assert check_naturality(LIST_T, eta_embedding(LIST)).passed


@pytest.mark.parametrize("T", [LIST_T, BIN_T, ID_T], ids=str)
def test_kleisli_option(T):
    assert check_kleisli(T, OPTION, SMALL).passed


def test_kleisli_refuses_list_monad():
    with pytest.raises(PreconditionError):
        check_kleisli(LIST_T, LIST)
    with pytest.raises(PreconditionError):
        check_kleisli(LIST_T, CONST_FREE)


def test_visit_once_examples():
    report = check_visit_once(LIST_T)
    assert report.passed
    assert report.observations[-1] == (Token(0), Token(1), Token(2))

    report = check_visit_once(DIAG_ID)
    assert report.witness.lhs == ConstV((Token(0), Token(0)))

    report = check_visit_once(DIST_L1)
    assert report.witness.lhs == ConstV(())
    assert report.witness.rhs == ConstV((Token(0),))

    report = check_visit_once(DIST_L2)
    assert report.witness.lhs == ConstV((Token(0), Token(0)))


@pytest.mark.parametrize("T", [LIST_T, BIN_T, ID_T], ids=str)
def test_visit_order_is_to_list_order(T):
    report = check_visit_once(T)
    shapes = list(T.structures([()], GenerationBudget()))
    assert [tuple(T.to_list(T.label(s))) for s in shapes] == list(report.observations)


@pytest.mark.parametrize("T", ROGUES, ids=str)
def test_witnesses_replay(T):
    for report in run_suite(T, SMALL):
        if not report.passed:
            lhs, rhs = replay(T, report)
            assert lhs == report.witness.lhs and rhs == report.witness.rhs
            assert lhs != rhs


def test_deterministic():
    a = [r.to_dict() for r in run_suite(DIST_L2, SMALL)]
    b = [r.to_dict() for r in run_suite(DIST_L2, SMALL)]
    assert a == b


def test_case_cap_truncates():
    report = check_unitarity(LIST_T, GenerationBudget(case_cap=5))
    assert report.passed and report.truncated and report.cases_run == 5
    assert not check_unitarity(LIST_T, GenerationBudget(case_cap=40)).truncated


def test_run_suite_order_and_selection():
    reports = run_suite(LIST_T, SMALL, ["visit-once", "unitarity"])
    assert [r.law for r in reports] == ["unitarity", "visit-once"]
    with pytest.raises(ValueError):
        run_suite(LIST_T, SMALL, ["bogus"])


def test_run_suite_distl2_pattern():
    assert failing_laws(run_suite(DIST_L2, SMALL)) == {"linearity", "visit-once"}


def test_purity_iff_unitarity_small():
    from travlaw.effects import BASE_BATTERY
    for T in REGISTRY.values():
        unitary = check_unitarity(T, SMALL).passed
        pure = all(check_purity(T, F, SMALL).passed for F in BASE_BATTERY)
        assert unitary == pure, T.name


def test_registry_names():
    for name in ("list", "bin", "identity", "distL", "distL1", "distL2", "diagId"):
        assert name in REGISTRY
    assert set(LAWS) == {"unitarity", "purity", "linearity", "naturality", "kleisli",
                         "visit-once"}


def test_container_suite_small():
    T = ContainerTraversable(list_container(2))
    assert all(r.passed for r in run_suite(T, SMALL))
