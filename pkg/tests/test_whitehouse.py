from fractions import Fraction
from itertools import permutations

import pytest

from markedgc.partitions import cycle_types
from markedgc.reptheory import decompose
from markedgc.whitehouse import (
    config_restriction_character,
    stirling_cycle_count,
    whitehouse_checks,
)


def brute_cycle_count(n, k):
    """Oracle: count permutations of n letters with exactly k cycles."""
    total = 0
    for perm in permutations(range(n)):
        seen = [False] * n
        cycles = 0
        for start in range(n):
            if seen[start]:
                continue
            cycles += 1
            x = start
            while not seen[x]:
                seen[x] = True
                x = perm[x]
        if cycles == k:
            total += 1
    return total


@pytest.mark.parametrize("n", range(0, 8))
def test_stirling_against_brute_force(n):
    for k in range(n + 2):
        assert stirling_cycle_count(n, k) == brute_cycle_count(n, k)


def test_stirling_examples():
    assert stirling_cycle_count(3, 2) == 3
    assert stirling_cycle_count(4, 2) == 11
    assert all(stirling_cycle_count(n, n) == 1 for n in range(6))


def test_stirling_rejects_negative():
    with pytest.raises(ValueError):
        stirling_cycle_count(-1, 0)


# ---------------------------------------------------------------------------
# restriction character


def test_smallest_restriction_is_trivial():
    chi = config_restriction_character(3, 2)
    assert chi.n == 2
    assert all(v == Fraction(1) for v in (chi(mu) for mu in cycle_types(2)))


@pytest.mark.parametrize(
    "n,r", [(4, 2), (4, 3), (5, 2), (5, 3), (5, 4), (6, 3), (6, 5)]
)
def test_restriction_dimension_is_stirling(n, r):
    chi = config_restriction_character(n, r)
    assert chi.dim == stirling_cycle_count(n - 1, r - 1)
    # the character must be an honest (integral, nonnegative) character
    dec = decompose(chi)
    assert dec.dim == chi.dim
    assert all(m > 0 for _, m in dec.items())


def test_restriction_out_of_regime():
    with pytest.raises(ValueError):
        config_restriction_character(3, 3)
    with pytest.raises(ValueError):
        config_restriction_character(10, 2)


def test_known_decomposition_4_3():
    # classes of S_3 with 2 cycles: type (2,1) only
    dec = decompose(config_restriction_character(4, 3))
    assert dict(dec.items()) == {(3,): 1, (2, 1): 1}


# ---------------------------------------------------------------------------
# full genus-1 verification


def test_whitehouse_checks_window():
    report = whitehouse_checks(5)
    assert report.ok, report.violations
    entries = {(e["n"], e["r"]): e for e in report.checks if "n" in e}
    assert entries[(4, 3)]["dim"] == 3
    assert entries[(5, 3)]["dim"] == 11
    assert entries[(4, 3)]["restriction_matches"] is True
    recursions = [e for e in report.checks if "recursion" in e]
    assert recursions and all(e["holds"] for e in recursions)
    payload = report.to_json()
    assert payload["ok"] is True and payload["violations"] == []
