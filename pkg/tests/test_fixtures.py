import pytest

from utils.check_manager import relative_error
from utils.fixtures import REGISTRY, FixtureRegistry, FixtureRow, build_registry
from utils.function_manager import FunctionManager
from utils.schemas import Family, FixtureStatus, FunctionId

FUNCTIONS = FunctionManager()

VERIFIED = [row for suite in ("tables", "laplace") for row in REGISTRY.suite(suite)]
UNVERIFIED = [row for suite in ("tables", "laplace") for row in REGISTRY.suite(suite, include_unverified=True)
              if not row.verified]


@pytest.mark.parametrize("row", VERIFIED, ids=lambda row: row.id)
def test_verified_rows_match_library(row):
    worst = max(relative_error(FUNCTIONS.evaluate(row.fn, x).value, row.closed_form(x)) for x in row.xs)
    assert worst <= row.tol


@pytest.mark.parametrize("row", UNVERIFIED, ids=lambda row: row.id)
def test_printed_forms_disagree_with_library(row):
    worst = max(relative_error(FUNCTIONS.evaluate(row.fn, x).value, row.closed_form(x)) for x in row.xs)
    assert worst > row.tol
    assert row.note


def test_registry_is_deterministic():
    again = build_registry()
    assert [r.id for r in again.suite("tables", True)] == [r.id for r in REGISTRY.suite("tables", True)]
    assert len(again) == len(REGISTRY)


def test_unverified_rows_are_skipped_by_default(caplog):
    rows = REGISTRY.suite("tables")
    assert all(r.status is FixtureStatus.VERIFIED for r in rows)
    assert "unverified" in caplog.text
    assert len(REGISTRY.suite("tables", include_unverified=True)) > len(rows)


def test_ids_are_unique_per_suite():
    for suite in ("tables", "laplace"):
        ids = [r.id for r in REGISTRY.suite(suite, include_unverified=True)]
        assert len(ids) == len(set(ids))


def test_duplicate_id_rejected():
    registry = FixtureRegistry()
    row = FixtureRow("iml(1,1)", FunctionId(Family.IML, {'alpha': 1.0, 'beta': 1.0}), "", lambda x: 0.0, (1.0,))
    registry.register("tables", row)
    with pytest.raises(ValueError):
        registry.register("tables", row)


def test_get():
    assert REGISTRY.get("lt_iml(1,1)").fn.family is Family.LT_IML
    with pytest.raises(KeyError):
        REGISTRY.get("nope")


def test_unknown_suite_is_empty():
    assert REGISTRY.suite("identities") == []
