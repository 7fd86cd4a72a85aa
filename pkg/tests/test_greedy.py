from fractions import Fraction

import pytest

from rank2greedy import cluster
from rank2greedy.greedy import (
    PointedElement,
    d_stat,
    greedy_dyck,
    greedy_linear_recurrence,
    greedy_max_recurrence,
    satisfies_coefficient_inequality,
    support_region,
)
from rank2greedy.laurent import LaurentPoly

PARAM_SET = [(1, 1), (2, 2), (3, 2), (2, 3), (3, 3), (4, 1)]


# -- golden grids -----------------------------------------------------

def test_x33_golden_grid():
    e = greedy_max_recurrence(3, 2, 3, 3)
    assert e.grid == {
        (0, 0): 1, (0, 1): 3, (0, 2): 3, (0, 3): 1,
        (1, 0): 3, (2, 0): 3, (3, 0): 1, (1, 1): 3,
    }
    x1, x2 = LaurentPoly.var(1), LaurentPoly.var(2)
    closed = LaurentPoly.monomial(-3, -3) * (
        (x2**2 + 1) ** 3 + ((x1**3 + 1) ** 3 - 1) + 3 * x1**3 * x2**2
    )
    assert e.to_laurent() == closed


def test_small_hand_grids():
    assert greedy_max_recurrence(2, 2, 1, 1).grid == \
        {(0, 0): 1, (1, 0): 1, (0, 1): 1}
    assert greedy_linear_recurrence(2, 2, 2, 2).grid == \
        {(0, 0): 1, (1, 0): 2, (0, 1): 2, (2, 0): 1, (0, 2): 1}
    assert greedy_linear_recurrence(1, 1, 1, 1).grid == \
        {(0, 0): 1, (1, 0): 1, (0, 1): 1}


def test_negative_pointing_is_monomial():
    for b, c in PARAM_SET:
        e = greedy_max_recurrence(b, c, -2, -3)
        assert e.grid == {(0, 0): 1}
        assert e.to_laurent() == LaurentPoly.monomial(2, 3)


def test_quarter_plane_closed_forms():
    # a1 <= 0 <= a2: x1^{-a1} x2^{-a2} (x1^b + 1)^{a2}, and the mirror
    for b, c in [(2, 2), (3, 2), (1, 3)]:
        for a1 in range(-3, 1):
            for a2 in range(0, 4):
                e = greedy_max_recurrence(b, c, a1, a2)
                want = LaurentPoly.monomial(-a1, -a2) * \
                    (LaurentPoly.var(1) ** b + 1) ** a2
                assert e.to_laurent() == want, (b, c, a1, a2)
                e = greedy_max_recurrence(b, c, a2, a1)
                want = LaurentPoly.monomial(-a2, -a1) * \
                    (LaurentPoly.var(2) ** c + 1) ** a2
                assert e.to_laurent() == want, (b, c, a2, a1)


def test_x_minus1_1_example():
    e = greedy_max_recurrence(2, 2, -1, 1)
    assert e.to_laurent() == LaurentPoly({(1, -1): 1, (3, -1): 1})


# -- three-way equivalence --------------------------------------------

@pytest.mark.parametrize("b,c", PARAM_SET)
def test_methods_agree(b, c):
    for a1 in range(-3, 6):
        for a2 in range(-3, 6):
            rec = greedy_max_recurrence(b, c, a1, a2)
            dyc = greedy_dyck(b, c, a1, a2)
            assert rec.grid == dyc.grid, (b, c, a1, a2)
            if a1 > 0 and a2 > 0:
                lin = greedy_linear_recurrence(b, c, a1, a2)
                assert lin.grid == rec.grid, (b, c, a1, a2)


def test_linear_recurrence_requires_positive():
    with pytest.raises(ValueError):
        greedy_linear_recurrence(2, 2, 0, 3)
    with pytest.raises(ValueError):
        greedy_linear_recurrence(2, 2, 3, -1)


def test_grid_entries_nonnegative():
    for b, c in PARAM_SET:
        for a1 in range(-2, 6):
            for a2 in range(-2, 6):
                e = greedy_max_recurrence(b, c, a1, a2)
                assert all(v > 0 for v in e.grid.values())


# -- pointed element basics -------------------------------------------

def test_pointed_element_requires_unit():
    with pytest.raises(ValueError):
        PointedElement(2, 2, 1, 1, {(1, 0): 1})


def test_to_laurent_pointing():
    e = greedy_max_recurrence(3, 2, 4, 2)
    lp = e.to_laurent()
    assert lp.coeff(-4, -2) == 1
    assert min(lp.terms) == (-4, -2)


# -- support regions --------------------------------------------------

def test_support_region_cases():
    assert support_region(2, 2, -1, -2).case == 1
    assert support_region(2, 2, -1, 1).case == 2
    assert support_region(2, 2, 1, -1).case == 3
    assert support_region(1, 1, 5, 2).case == 4
    assert support_region(1, 1, 2, 5).case == 5
    assert support_region(2, 2, 1, 1).case == 6


def test_support_region_golden_vertices():
    r = support_region(1, 1, 5, 2)
    assert r.vertices == ((Fraction(0), Fraction(0)), (Fraction(2), Fraction(0)),
                          (Fraction(2), Fraction(3)), (Fraction(0), Fraction(5)))
    r = support_region(2, 2, -1, 1)
    assert r.vertices == ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)))
    r = support_region(2, 2, 1, 1)
    assert (Fraction(1, 2), Fraction(1, 2)) in r.vertices
    assert r.lattice_points() == [(0, 0), (0, 1), (1, 0)]


def test_supports_inside_regions():
    for b, c in PARAM_SET:
        for a1 in range(-3, 6):
            for a2 in range(-3, 6):
                e = greedy_max_recurrence(b, c, a1, a2)
                region = support_region(b, c, a1, a2)
                for p, q in e.grid:
                    assert region.contains(p, q), (b, c, a1, a2, p, q)


def test_support_avoids_positive_quadrant():
    for b, c in PARAM_SET:
        for a1 in range(-3, 6):
            for a2 in range(-3, 6):
                if max(a1, a2) <= 0:
                    continue
                lp = greedy_max_recurrence(b, c, a1, a2).to_laurent()
                assert not any(d1 >= 0 and d2 >= 0 for d1, d2 in lp.terms), \
                    (b, c, a1, a2)


# -- coefficient inequality and d statistic ---------------------------

def test_greedy_satisfies_inequality():
    for b, c in [(2, 2), (3, 2), (3, 3)]:
        for a1 in range(-2, 6):
            for a2 in range(-2, 6):
                assert satisfies_coefficient_inequality(
                    greedy_max_recurrence(b, c, a1, a2)), (b, c, a1, a2)


def test_inequality_detects_violations():
    # the non-greedy pointed element with c(1,0) too small fails
    e = PointedElement(2, 2, 1, 1, {(0, 0): 1})
    assert not satisfies_coefficient_inequality(e)


def test_d_stat_precondition():
    e = greedy_max_recurrence(2, 2, 3, 3)
    with pytest.raises(ValueError):
        d_stat(e, 2, 0)  # b*p = 4 >= 3


def test_d_stat_q0():
    e = greedy_max_recurrence(3, 2, 3, 3)
    assert d_stat(e, 0, 0) == e.coeff(0, 0)


def test_d_stat_nonnegative_for_greedy():
    e = greedy_max_recurrence(3, 2, 3, 3)
    for q in range(0, 4):
        assert d_stat(e, 0, q) >= 0


def test_d_stat_matches_adjacent_cluster_expansion():
    # d(p,q) is a coefficient of the expansion at the next cluster over
    for b, c, a1, a2 in [(2, 2, 3, 2), (3, 2, 4, 3), (3, 3, 3, 3), (2, 3, 5, 2)]:
        e = greedy_max_recurrence(b, c, a1, a2)
        ex = cluster.expand_at_cluster(e.to_laurent(), b, c, 2)
        for p in range(0, a2 + 1):
            if b * p >= a1:
                continue
            for q in range(0, a1 + 1):
                assert d_stat(e, p, q) == ex.coeff(-a2 + c * q, a1 - b * p), \
                    (b, c, a1, a2, p, q)
