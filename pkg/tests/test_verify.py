import pytest

from bingdouble.milnor import milnor_reduced
from bingdouble.verify import (
    CHECKS,
    REFERENCE_TABLES,
    corollary_doubled_product,
    corollary_odd_doubled_product,
    run_suite,
)

REGISTRY = [name for name, _ in CHECKS]


def test_registry_names():
    assert REGISTRY == [
        "tables",
        "proof_constants",
        "divisibility_targets",
        "symmetry_support",
        "value_at_one",
        "milnor_closed_form",
        "hopf_pairing",
        "casson_congruence_sweep",
        "c_series",
        "conjecture_scan",
    ]
    assert sorted(REFERENCE_TABLES) == [1, 2, 3, 4, 5]


def test_fast_suite_passes():
    result = run_suite(level="fast")
    assert result["level"] == "fast"
    assert result["pass"] is True
    assert len(result["reports"]) == len(REGISTRY)
    for report in result["reports"]:
        assert set(report) == {"name", "parameters", "pass", "witness"}
        assert report["pass"] is True


def test_suite_name_selection():
    result = run_suite(level="fast", names=["c_series"])
    assert len(result["reports"]) == 1
    assert result["reports"][0]["name"] == "c_series"


def test_suite_rejects_bad_input():
    with pytest.raises(ValueError):
        run_suite(level="exhaustive")
    with pytest.raises(ValueError):
        run_suite(names=["tables", "nonsense"])


def test_suite_workers_deterministic():
    names = ["tables", "value_at_one", "c_series"]
    serial = run_suite(level="fast", names=names)
    threaded = run_suite(level="fast", workers=4, names=names)
    assert serial == threaded


def test_doubling_products_match_direct():
    # a: 1, 2, 4 doubled-color chain; b: 3, 5, 9 odd chain
    assert corollary_doubled_product(1, 5) == milnor_reduced([1, 1, 2, 4, 4])
    assert corollary_odd_doubled_product(3, 5) == milnor_reduced([3, 3, 5, 9, 9])
