import pytest

from markedgc.complexes import build_complex, chain_character
from markedgc.homology import homology_decomposition
from markedgc.partitions import enumerate_partitions, size
from markedgc.reptheory import decompose
from markedgc.stability import (
    check_consistent_sequence,
    core_decomposition,
    core_module,
    enumerate_core_graphs,
    excess,
    lambda_set,
    predicted_sharp_bound,
    rho_of_core,
    stab_module,
    stable_multiplicity,
    theta_classes,
    verify_core_bounds,
    verify_edge_cut_rows,
    verify_vanishing,
)


# ---------------------------------------------------------------------------
# bounds


def test_excess_and_predicted_bound():
    assert excess(2, 0) == 3
    assert excess(1, 1) == 2
    assert predicted_sharp_bound(2, 0) == 5
    assert predicted_sharp_bound(1, 1) == 3
    assert predicted_sharp_bound(1, 0) == 0
    with pytest.raises(ValueError):
        predicted_sharp_bound(0, 0)


# ---------------------------------------------------------------------------
# core graphs


def test_theta_rho_statistics():
    # m + rho for the sharpness witnesses
    th30 = theta_classes(3, 0)
    assert sorted(th30) == [0, 2]
    assert excess(3, 0) + rho_of_core(th30[0]) == 9
    th20 = theta_classes(2, 0)
    assert sorted(th20) == [1]
    assert excess(2, 0) + rho_of_core(th20[1]) == 5


def test_theta_core_module_decomposition():
    # the p=0 extremal core at (3, 0) induces the doubles of partitions
    # of 3: (6) + (4,2) + (2,2,2)
    module = core_module(theta_classes(3, 0)[0])
    assert dict(module.items()) == {(6,): 1, (4, 2): 1, (2, 2, 2): 1}


def test_core_counts_at_excess():
    # at n = m the only cores are the extremal family
    for g, ell in [(2, 0), (2, 1), (3, 0)]:
        m = excess(g, ell)
        cores = enumerate_core_graphs(g, m, m - ell)
        assert {cls.key for cls in cores} == {
            cls.key for cls in theta_classes(g, ell).values()
        }


@pytest.mark.parametrize("g", [1, 2])
def test_core_bounds_exhaustive(g):
    assert verify_core_bounds(g, ell_max=2) == []


def test_edge_cut_row_monotonicity_small():
    assert verify_edge_cut_rows(2, ell_max=1) == []


def test_core_decomposition_matches_chain_character():
    g, n, r = 2, 3, 3
    c = build_complex(g, n, r)
    for i in c.degrees():
        summands = core_decomposition(g, n, r, i)
        total = sum(dim for _, dim, _ in summands)
        assert total == c.dim(i)
        chain = decompose(chain_character(c, i))
        combined = {}
        for _, _, widehat in summands:
            for lam, mult in widehat.items():
                combined[lam] = combined.get(lam, 0) + mult
        assert combined == dict(chain.items())


# ---------------------------------------------------------------------------
# sharp-point detection


def test_sharp_point_trivial_sequence():
    report = check_consistent_sequence(1, 0, 2)
    assert report.detected == 0 == report.predicted


def test_sharp_point_genus_one_marked():
    report = check_consistent_sequence(1, 1, 4)
    assert report.predicted == 3
    assert report.detected == 3
    # sharpness: the multiplicity condition fails one below the bound
    assert report.conditions[2][2] is False
    payload = report.to_json()
    assert payload["detected_sharp_point"] == 3


# ---------------------------------------------------------------------------
# the stable module


def test_lambda_set_members_shape():
    for y, p in [(0, 1), (1, 0), (1, 1), (2, 0), (0, 3), (2, 3)]:
        m = 2 * y + p
        members = lambda_set(y, p)
        assert members
        for lam, mult in members.items():
            assert mult >= 1
            assert size(lam) == (3 * m + 1) // 2
            assert len(lam) == (m + 1) // 2


def test_lambda_set_excess_three():
    # the excess-3 stable module at g=2 comes from p=1 alone
    assert lambda_set(0, 3) == {(4, 1): 1}
    assert lambda_set(1, 1) == {(4, 1): 1, (3, 2): 1}
    assert lambda_set(2, 0) == {(5, 1): 1, (3, 3): 1}


def test_stab_module_excess_three():
    # paper table: Stab(2, n, n) = (4,1,1^{n-5}) + (3,2,1^{n-5})
    stab = stab_module(2, 5, 0)
    assert dict(stab.items()) == {(4, 1): 1, (3, 2): 1}
    stab6 = stab_module(2, 6, 0)
    assert dict(stab6.items()) == {(4, 1, 1): 1, (3, 2, 1): 1}
    with pytest.raises(ValueError):
        stab_module(2, 4, 0)


def test_stable_multiplicity_paper_values():
    # excess 3: multiplicities stabilize to 1 for (4,1) and (3,2)
    assert stable_multiplicity((4, 1), 2) == 1
    assert stable_multiplicity((3, 2), 2) == 1
    # excess 4 at g=3: 2(5,1) + (4,2) + 2(3,3)
    assert stable_multiplicity((5, 1), 3) == 2
    assert stable_multiplicity((4, 2), 3) == 1
    assert stable_multiplicity((3, 3), 3) == 2
    # excess 4 at g=5: 3(5,1)
    assert stable_multiplicity((5, 1), 5) == 3
    # excess 7 head of the table at g in {6, 7}; one more copy enters at 8
    assert stable_multiplicity((8, 1, 1, 1), 6) == 3
    assert stable_multiplicity((8, 1, 1, 1), 7) == 3
    assert stable_multiplicity((8, 1, 1, 1), 8) == 4
    assert stable_multiplicity((3, 3, 3, 2), 6) == 1


def test_stable_multiplicity_rejects_bad_shapes():
    with pytest.raises(ValueError):
        stable_multiplicity((2, 1), 3)  # |lam|=3 is not ceil(3m/2) shape/rows


@pytest.mark.parametrize("m", range(0, 7))
def test_lambda_multiset_equals_lr_formula(m):
    """The two independent constructions of the stable multiplicity must
    agree: counting Lambda members vs the Littlewood-Richardson sum."""
    bound = (3 * m + 1) // 2
    rows = (m + 1) // 2
    for g in range(1, 7):
        counted = {}
        for p in range(m % 2, min(g - 1, m) + 1, 2):
            for lam, mult in lambda_set((m - p) // 2, p).items():
                counted[lam] = counted.get(lam, 0) + mult
        for lam in enumerate_partitions(bound):
            if len(lam) != rows:
                continue
            assert counted.get(lam, 0) == stable_multiplicity(lam, g)


# ---------------------------------------------------------------------------
# vanishing


@pytest.mark.parametrize("key", [(2, 5, 5), (1, 4, 2), (2, 4, 4)])
def test_vanishing_assertions_hold(key):
    profile = homology_decomposition(build_complex(*key))
    assert verify_vanishing(profile) == []
