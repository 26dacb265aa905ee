"""Acceptance suite: every headline identity, exhaustively at desk scale.

Each test prints one pass/fail line; run with ``pytest -s`` to see them all.
All equalities are exact integers; there are no tolerances anywhere.
"""

import itertools
import time
from contextlib import contextmanager

import pytest

from wedgematch import (
    Matching,
    WedgePath,
    all_matchings,
    all_paths,
    big_phi,
    big_phi_inv,
    distribution,
    double_factorial,
    phi,
    phi_inv,
    psi,
    verify_all,
)

SIZES = range(1, 7)  # exhaustive range for the theorem criteria
EXPECTED_COUNTS = [1, 3, 15, 105, 945, 10395, 135135]  # (2n-1)!!, n = 1..7
NESTING_ROW_3 = {0: 5, 1: 6, 2: 3, 3: 1}
EXAMPLE_IMAGE = [(1, 4), (2, 14), (3, 12), (5, 8), (6, 9), (7, 11), (10, 13)]


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print(f"criterion {number:2d}: FAIL - {description}")
        raise
    print(f"criterion {number:2d}: PASS - {description}")


@pytest.fixture(scope="module")
def reports():
    """One exhaustive verification report per size 1..6."""
    return {n: verify_all(n) for n in SIZES}


def claim(reports, n, label):
    results = {c.label: c for c in reports[n].claims}
    return results[label]


def assert_claim_exhaustive(reports, label):
    for n in SIZES:
        result = claim(reports, n, label)
        assert result.failed == 0, (
            f"{label} failed at n={n}: {result.counterexamples}"
        )
        assert result.tested == double_factorial(n)


def raw_nestings(pairs):
    """Independent oracle: brute-force pair scan over the raw pair list."""
    return sum(
        1
        for (a, b), (c, d) in itertools.combinations(sorted(pairs), 2)
        if a < c < d < b
    )


def test_criterion_1_cardinalities_and_runtime():
    with criterion(1, "both families have (2n-1)!! members for n=1..7, fast"):
        t0 = time.perf_counter()
        for n in range(1, 7):
            assert sum(1 for _ in all_paths(n)) == EXPECTED_COUNTS[n - 1]
            assert sum(1 for _ in all_matchings(n)) == EXPECTED_COUNTS[n - 1]
        small = time.perf_counter() - t0
        t0 = time.perf_counter()
        assert sum(1 for _ in all_paths(7)) == 135135
        assert sum(1 for _ in all_matchings(7)) == 135135
        large = time.perf_counter() - t0
        assert small < 10.0, f"sizes 1..6 took {small:.1f}s"
        assert large < 120.0, f"size 7 took {large:.1f}s"


def test_criterion_2_north_steps_equal_nestings(reports):
    with criterion(2, "north steps map to nestings, with equal distributions"):
        assert_claim_exhaustive(reports, "theorem1")
        for n in SIZES:
            assert claim(reports, n, "distribution_north_nestings").failed == 0
        paths_row = distribution(3, "north_steps").counts
        matchings_row = distribution(3, "nestings").counts
        assert paths_row == matchings_row == NESTING_ROW_3


def test_criterion_3_stacking_formula(reports):
    with criterion(3, "north steps equal the insertion image's stacking "
                      "statistic, indexwise per the code-difference formula"):
        assert_claim_exhaustive(reports, "lemma1")


def test_criterion_4_rearrangement_contract(reports):
    with criterion(4, "the rearrangement sends stacking to nestings, keeps "
                      "the first edge, and inverts exactly"):
        assert_claim_exhaustive(reports, "theorem2")
        assert_claim_exhaustive(reports, "round_trip_phi")


def test_criterion_5_published_image_vector():
    with criterion(5, "the published image matching pulls back to a valid "
                      "7-step path with 8 north steps and south run 3"):
        image = Matching.from_pairs(EXAMPLE_IMAGE)
        nestings = raw_nestings(EXAMPLE_IMAGE)
        assert nestings == 8
        path = big_phi_inv(image)
        assert isinstance(path, WedgePath) and path.n == 7
        assert big_phi(path) == image
        assert path.north_steps() == 8 == nestings
        assert image.partner_of(1) == 4
        assert path.final_south_run() == 3


def test_criterion_6_first_edge_tracks_south_run(reports):
    with criterion(6, "the final south run is k exactly when vertex 1 pairs "
                      "with k+1 in the image"):
        assert_claim_exhaustive(reports, "proposition_a")


def test_criterion_7_components_reverse(reports):
    with criterion(7, "path components reversed match image components, and "
                      "the rearrangement acts componentwise"):
        assert_claim_exhaustive(reports, "proposition_b")


def test_criterion_8_dyck_paths(reports):
    with criterion(8, "north-free paths map to nesting-free matchings read "
                      "off the reversed steps, fixed by the rearrangement"):
        assert_claim_exhaustive(reports, "dyck_proposition")


def test_criterion_9_round_trip_suite(reports):
    with criterion(9, "all maps invert exactly and all parsers round-trip "
                      "printers over the full corpus"):
        for label in (
            "round_trip_psi",
            "round_trip_psi_inv",
            "round_trip_phi",
            "round_trip_phi_inv",
            "round_trip_big_phi",
        ):
            assert_claim_exhaustive(reports, label)
        for n in SIZES:
            for p in all_paths(n):
                assert WedgePath.parse_steps(p.to_steps()) == p
                assert WedgePath.from_height_text(p.to_height_text()) == p
                assert WedgePath.from_json_value(p.to_json_value()) == p
            for m in all_matchings(n):
                assert Matching.from_text(m.to_text()) == m
                assert Matching.from_json_value(m.to_json_value()) == m


def test_criterion_10_reference_diagram_statistics():
    with criterion(10, "the five-edge reference diagram has crossings 3, "
                       "nestings 1, alignments 6"):
        m = Matching.from_text("(1,3),(2,7),(4,6),(5,8),(9,10)")
        assert m.crossings() == 3
        assert m.nestings() == 1
        assert m.alignments() == 6
