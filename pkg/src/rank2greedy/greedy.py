"""Greedy elements of the rank-2 cluster algebra A(b,c).

A pointed element at (a1, a2) is

    x1^(-a1) x2^(-a2) * sum_{p,q >= 0} c(p,q) x1^(b p) x2^(c q),

with c(0,0) = 1.  The greedy element x[a1, a2] is the pointed element
whose coefficient grid satisfies the max-form recurrence; this module
computes it three independent ways (max-form recurrence, branch-selected
linear recurrence, compatible-pair counting on the maximal Dyck path)
and provides the support-region bounds that make the grids finite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .arith import binom, plus_part
from .laurent import LaurentPoly
from . import kernel

Grid = Dict[Tuple[int, int], int]


@dataclass(frozen=True)
class PointedElement:
    """A pointed element: parameters, pointing vector and coefficient grid.

    The grid stores only nonzero coefficients; (0,0) -> 1 is always
    present.
    """
    b: int
    c: int
    a1: int
    a2: int
    grid: Grid = field(compare=True)

    def __post_init__(self):
        if self.grid.get((0, 0)) != 1:
            raise ValueError("pointed element needs c(0,0) = 1")

    def coeff(self, p: int, q: int) -> int:
        return self.grid.get((p, q), 0)

    def to_laurent(self) -> LaurentPoly:
        terms = {}
        for (p, q), coeff in self.grid.items():
            terms[(-self.a1 + self.b * p, -self.a2 + self.c * q)] = coeff
        return LaurentPoly(terms)


def _recurrence_sums(grid: Grid, b: int, c: int, a1: int, a2: int,
                     p: int, q: int) -> Tuple[int, int]:
    """The two alternating binomial sums feeding the recurrences at (p,q)."""
    s1 = 0
    for k in range(1, p + 1):
        coeff = grid.get((p - k, q), 0)
        if coeff:
            s1 += (-1) ** (k - 1) * coeff * binom(a2 - c * q + k - 1, k)
    s2 = 0
    for k in range(1, q + 1):
        coeff = grid.get((p, q - k), 0)
        if coeff:
            s2 += (-1) ** (k - 1) * coeff * binom(a1 - b * p + k - 1, k)
    return s1, s2


def _signed_binom_row(n: int, length: int) -> List[int]:
    """row[k] = (-1)^(k-1) * binom(n + k - 1, k) for k = 0..length.

    For n <= 0 every entry is zero, matching the binomial convention."""
    row = [0] * (length + 1)
    if n > 0:
        val = 1
        sign = 1
        for k in range(1, length + 1):
            val = val * (n + k - 1) // k
            row[k] = sign * val
            sign = -sign
    return row


def _grid_cells(pmax: int, qmax: int):
    """Cells in increasing (p+q, p) order, the order both recurrences need."""
    for total in range(pmax + qmax + 1):
        for p in range(max(0, total - qmax), min(pmax, total) + 1):
            yield p, total - p


def greedy_max_recurrence(b: int, c: int, a1: int, a2: int) -> PointedElement:
    """Greedy element via the max of the two alternating sums.

    The grid is evaluated on the bounding rectangle
    [0, max(a2,0)] x [0, max(a1,0)] plus a guard ring; the support bound
    guarantees the ring is zero, which is asserted rather than assumed.
    """
    pmax, qmax = plus_part(a2), plus_part(a1)
    grid: Grid = {}
    # the binomial factors depend only on the row (resp. column), so each
    # signed row is materialized once instead of recomputed per cell
    rows1: Dict[int, List[int]] = {}
    rows2: Dict[int, List[int]] = {}
    for p, q in _grid_cells(pmax + 1, qmax + 1):
        if (p, q) == (0, 0):
            grid[(0, 0)] = 1
            continue
        s1 = 0
        if p and a2 - c * q > 0:
            row = rows1.get(q)
            if row is None:
                row = rows1[q] = _signed_binom_row(a2 - c * q, pmax + 1)
            for k in range(1, p + 1):
                coeff = grid.get((p - k, q))
                if coeff:
                    s1 += coeff * row[k]
        s2 = 0
        if q and a1 - b * p > 0:
            row = rows2.get(p)
            if row is None:
                row = rows2[p] = _signed_binom_row(a1 - b * p, qmax + 1)
            for k in range(1, q + 1):
                coeff = grid.get((p, q - k))
                if coeff:
                    s2 += coeff * row[k]
        value = max(s1, s2)
        if value:
            if p > pmax or q > qmax:
                raise AssertionError(
                    f"nonzero coefficient outside support rectangle at {(p, q)}"
                )
            grid[(p, q)] = value
    return PointedElement(b, c, a1, a2, grid)


def greedy_linear_recurrence(b: int, c: int, a1: int, a2: int) -> PointedElement:
    """Greedy element via the branch-selected linear recurrence; only
    defined for a1, a2 > 0.  On the tie line c*a1*q == b*a2*p both
    branches are evaluated and must agree."""
    if a1 <= 0 or a2 <= 0:
        raise ValueError("linear recurrence needs a1 > 0 and a2 > 0")
    pmax, qmax = a2, a1
    grid: Grid = {}
    for p, q in _grid_cells(pmax + 1, qmax + 1):
        if (p, q) == (0, 0):
            grid[(0, 0)] = 1
            continue
        lhs, rhs = c * a1 * q, b * a2 * p
        s1, s2 = _recurrence_sums(grid, b, c, a1, a2, p, q)
        if lhs < rhs:
            value = s1
        elif lhs > rhs:
            value = s2
        else:
            if s1 != s2:
                raise AssertionError(f"branch mismatch on tie at {(p, q)}: {s1} != {s2}")
            value = s1
        if value:
            if p > pmax or q > qmax:
                raise AssertionError(
                    f"nonzero coefficient outside support rectangle at {(p, q)}"
                )
            grid[(p, q)] = value
    return PointedElement(b, c, a1, a2, grid)


def greedy_dyck(b: int, c: int, a1: int, a2: int) -> PointedElement:
    """Greedy element by counting compatible pairs on the maximal Dyck
    path of size max(a1,0) x max(a2,0)."""
    grid = kernel.count_grid(plus_part(a1), plus_part(a2), b, c)
    return PointedElement(b, c, a1, a2, dict(grid))


def to_laurent(e: PointedElement) -> LaurentPoly:
    return e.to_laurent()


def d_stat(e: PointedElement, p: int, q: int) -> int:
    """Alternating partial sum measuring slack of the linear recurrence;
    equals a coefficient of the expansion one cluster over.  Needs
    b*p < a1."""
    if e.b * p >= e.a1:
        raise ValueError("precondition bp < a1 violated")
    total = 0
    for k in range(q + 1):
        coeff = e.coeff(p, q - k)
        if coeff:
            total += (-1) ** k * coeff * binom(e.a1 - e.b * p + k - 1, k)
    return total


# ---------------------------------------------------------------------
# support regions
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class SupportRegion:
    """Bounding region for the coefficient grid of x[a1,a2], one of six
    shapes in the (p, q) plane.  Vertices may be rational.  In the
    broken-line case the two axis segments are included and the rest of
    the boundary is excluded; all other cases are closed."""
    case: int
    b: int
    c: int
    a1: int
    a2: int
    vertices: Tuple[Tuple[Fraction, Fraction], ...]

    def contains(self, p: int, q: int) -> bool:
        a1, a2, b, c = self.a1, self.a2, self.b, self.c
        if p < 0 or q < 0:
            return False
        if self.case == 1:
            return (p, q) == (0, 0)
        if self.case == 2:
            return q == 0 and p <= a2
        if self.case == 3:
            return p == 0 and q <= a1
        if self.case == 4:
            return p <= a2 and q <= a1 - b * p
        if self.case == 5:
            return q <= a1 and p <= a2 - c * q
        # case 6: axis segments included, rest of boundary excluded
        if q == 0:
            return p <= a2
        if p == 0:
            return q <= a1
        # the two slanted segments meet at (a1/b, a2/c) and together form
        # the graph of a decreasing piecewise-linear function of p, so the
        # active segment is picked by comparing p with the corner abscissa
        # (the corner may be reflex, so intersecting both half-planes
        # would be wrong)
        if b * p <= a1:
            return c * a1 * q < c * a1 * a1 - b * c * a1 * p + b * a2 * p
        return b * a2 * p < b * a2 * a2 - b * c * a2 * q + c * a1 * q

    def lattice_points(self) -> List[Tuple[int, int]]:
        pbound = plus_part(self.a2)
        qbound = plus_part(self.a1)
        return [
            (p, q)
            for p in range(pbound + 1)
            for q in range(qbound + 1)
            if self.contains(p, q)
        ]


def support_region(b: int, c: int, a1: int, a2: int) -> SupportRegion:
    """The support bound for x[a1,a2]: six mutually covering cases keyed
    by the signs of a1, a2 and their position relative to the lines
    a1 = b*a2 and a2 = c*a1."""
    F = Fraction
    if a1 <= 0 and a2 <= 0:
        return SupportRegion(1, b, c, a1, a2, ((F(0), F(0)),))
    if a1 <= 0 < a2:
        return SupportRegion(2, b, c, a1, a2, ((F(0), F(0)), (F(a2), F(0))))
    if a2 <= 0 < a1:
        return SupportRegion(3, b, c, a1, a2, ((F(0), F(0)), (F(0), F(a1))))
    if a1 >= b * a2:
        verts = ((F(0), F(0)), (F(a2), F(0)), (F(a2), F(a1 - b * a2)), (F(0), F(a1)))
        return SupportRegion(4, b, c, a1, a2, verts)
    if a2 >= c * a1:
        verts = ((F(0), F(0)), (F(a2), F(0)), (F(a2 - c * a1), F(a1)), (F(0), F(a1)))
        return SupportRegion(5, b, c, a1, a2, verts)
    verts = ((F(0), F(0)), (F(a2), F(0)), (F(a1, b), F(a2, c)), (F(0), F(a1)))
    return SupportRegion(6, b, c, a1, a2, verts)


# ---------------------------------------------------------------------
# pointwise inequality (positivity/indecomposability witness)
# ---------------------------------------------------------------------

def satisfies_coefficient_inequality(e: PointedElement) -> bool:
    """Every grid coefficient dominates both alternating sums, with
    equality to their max away from (0,0).  Greedy elements satisfy this
    by construction; for a general pointed element it is the pointwise
    test that positivity at three consecutive clusters forces."""
    pmax = plus_part(e.a2) + 1
    qmax = plus_part(e.a1) + 1
    for p, q in _grid_cells(pmax, qmax):
        if (p, q) == (0, 0):
            continue
        s1, s2 = _recurrence_sums(e.grid, e.b, e.c, e.a1, e.a2, p, q)
        value = e.coeff(p, q)
        if value < s1 or value < s2:
            return False
    return True
