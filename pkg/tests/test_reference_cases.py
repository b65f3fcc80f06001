"""Every bundled reference case must pass from a fresh build."""

import pytest

from pairgraph.reference_cases import CASES, get_case, run_all
from pairgraph.errors import ValidationError


@pytest.mark.parametrize("case", CASES, ids=[c.case_id for c in CASES])
def test_reference_case(case):
    for name, ok, detail in case.run():
        assert ok, f"{case.case_id}: {name} {detail}"


def test_run_all_aggregates():
    ok, results = run_all()
    assert ok
    assert len(results) == len(CASES)


def test_unknown_case_rejected():
    with pytest.raises(ValidationError):
        get_case("not-a-case")
