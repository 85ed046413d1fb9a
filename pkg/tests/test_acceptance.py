"""End-to-end acceptance gate.

One test per criterion, each driving the corresponding full-level check
and recording a single pass/fail line (with elapsed time against the
intended budget) in the terminal summary. Budgets are informational;
the asserted content is exact.
"""

import time

from bingdouble.verify import (
    check_casson,
    check_conjectures,
    check_c_series,
    check_divisibility,
    check_hopf,
    check_milnor,
    check_proof_constants,
    check_symmetry_support,
    check_tables,
    check_value_at_one,
)

from conftest import ACCEPTANCE_LINES


def run(tag, budget, check, detail):
    start = time.perf_counter()
    report = check("full")
    elapsed = time.perf_counter() - start
    status = "PASS" if report["pass"] else "FAIL"
    ACCEPTANCE_LINES.append(
        f"{tag} {status} {elapsed:6.2f}s (budget {budget:.0f}s) "
        f"{report['name']}: {detail(report)}"
    )
    return report


def test_c01_table_reproduction():
    report = run(
        "C01", 30, check_tables,
        lambda r: f"{r['witness']['cells_checked']} printed cells, "
        f"{len(r['witness']['mismatches'])} mismatches",
    )
    assert report["parameters"]["tables"] == [1, 2, 3, 4, 5]
    assert report["witness"]["mismatches"] == []
    assert report["pass"]


def test_c02_proof_constants():
    report = run(
        "C02", 5, check_proof_constants,
        lambda r: f"{r['witness']['identities_checked']} exact identities",
    )
    assert report["witness"]["identities_checked"] >= 18
    assert report["pass"]


def test_c03_divisibility_targets():
    report = run(
        "C03", 10, check_divisibility,
        lambda r: f"{len(r['witness']['checks'])} divisibility targets, tail to l=12",
    )
    assert report["parameters"]["tail"] == 12
    assert report["pass"]


def test_c04_symmetry_and_support():
    report = run(
        "C04", 30, check_symmetry_support,
        lambda r: f"exhaustive to m,n <= {r['parameters']['bound']}",
    )
    assert report["parameters"]["bound"] == 15
    assert report["witness"]["failures"] == []
    assert report["pass"]


def test_c05_value_at_one():
    report = run(
        "C05", 10, check_value_at_one,
        lambda r: f"law to m <= {r['parameters']['bound']}, "
        f"certificate to m <= {r['parameters']['certificate_bound']}",
    )
    assert report["parameters"]["bound"] == 12
    assert report["parameters"]["certificate_bound"] == 10
    assert report["pass"]


def test_c06_milnor_closed_form():
    report = run(
        "C06", 10, check_milnor,
        lambda r: f"all-ones to n={r['parameters']['n_max']}, "
        f"doubling {r['parameters']['doubling']}",
    )
    assert report["parameters"]["n_max"] == 10
    assert report["parameters"]["doubling"] == [2, 6]
    assert report["pass"]


def test_c07_hopf_pairing():
    report = run(
        "C07", 20, check_hopf,
        lambda r: f"pairing grid to m,n <= {r['parameters']['bound']}",
    )
    assert report["parameters"]["bound"] == 10
    assert report["pass"]


def test_c08_casson_congruence():
    report = run(
        "C08", 60, check_casson,
        lambda r: f"{r['witness']['triples_checked']} triples, "
        f"tail to l={r['parameters']['tail']}",
    )
    assert report["witness"]["triples_checked"] == 125
    assert report["parameters"]["tail"] == 8
    assert report["pass"]


def test_c09_c_series():
    report = run(
        "C09", 1, check_c_series,
        lambda r: f"head {r['witness']['head']}, product is one: "
        f"{r['witness']['product_is_one']}",
    )
    assert report["witness"]["head"] == ["1/24", "-1/8", "59/288", "-17/72"]
    assert report["parameters"]["order"] == 10
    assert report["pass"]


def test_c10_conjecture_scan():
    report = run(
        "C10", 60, check_conjectures,
        lambda r: f"{r['witness']['cells_checked']} cells, "
        f"{len(r['witness']['periodicity_violations'])} periodicity / "
        f"{len(r['witness']['prime_range_violations'])} range violations",
    )
    assert report["witness"]["cells_checked"] > 0
    # violations would be reported as data, never as a build failure
    assert report["pass"]
