"""Standard monomials and expansion of algebra elements in pointed bases.

The standard monomials z[a1,a2] = x0^{[a2]_+} x1^{[-a1]_+} x2^{[-a2]_+}
x3^{[a1]_+} form a Z-basis of A(b,c), and so do the greedy elements.
Both families are pointed, and the pointed monomial x1^{-a1} x2^{-a2} is
the unique lex-minimal monomial of its element; expansion therefore
works by repeated lex-min elimination, certifying membership a
posteriori by a zero remainder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .arith import plus_part
from .greedy import greedy_max_recurrence
from .laurent import LaurentPoly


@dataclass(frozen=True)
class BasisExpansion:
    """Finite integer combination of basis elements, keyed by their
    denominator vectors."""
    kind: str  # "standard" or "greedy"
    coeffs: Dict[Tuple[int, int], int]


def standard_monomial(b: int, c: int, a1: int, a2: int) -> LaurentPoly:
    """The standard monomial z[a1,a2], expanded in {x1, x2}.

    Built from x0 = (x1^b+1)/x2 and x3 = (x2^c+1)/x1; each factor is a
    Laurent polynomial, so no division is ever performed."""
    x0 = LaurentPoly({(0, -1): 1}) * (LaurentPoly.var(1) ** b + 1)
    x3 = LaurentPoly({(-1, 0): 1}) * (LaurentPoly.var(2) ** c + 1)
    middle = LaurentPoly.monomial(plus_part(-a1), plus_part(-a2))
    return x0 ** plus_part(a2) * middle * x3 ** plus_part(a1)


def _basis_element(b: int, c: int, kind: str, b1: int, b2: int,
                   memo: Dict) -> LaurentPoly:
    key = (kind, b1, b2)
    if key not in memo:
        if kind == "standard":
            memo[key] = standard_monomial(b, c, b1, b2)
        else:
            memo[key] = greedy_max_recurrence(b, c, b1, b2).to_laurent()
    return memo[key]


def expand_pointed_basis(x: LaurentPoly, b: int, c: int, kind: str,
                         cap: int = 10**6) -> BasisExpansion:
    """Expand x over the standard or greedy basis.

    Repeatedly takes the lex-minimal monomial x1^d1 x2^d2 of the running
    remainder; the only basis element that can supply it is the one
    pointed at (-d1, -d2), so its coefficient is forced.  Terminates
    when the remainder vanishes; the cap bounds the number of
    eliminations (exceeding it signals x outside the integer span)."""
    if kind not in ("standard", "greedy"):
        raise ValueError("basis kind must be 'standard' or 'greedy'")
    if not x:
        raise ValueError("cannot expand the zero element")
    if cap < 1:
        raise ValueError("cap must be positive")
    memo: Dict = {}
    coeffs: Dict[Tuple[int, int], int] = {}
    rem = x
    for _ in range(cap):
        if not rem:
            return BasisExpansion(kind, coeffs)
        d1, d2 = min(rem.terms)
        u = rem.terms[(d1, d2)]
        b1, b2 = -d1, -d2
        coeffs[(b1, b2)] = u
        rem = rem - u * _basis_element(b, c, kind, b1, b2, memo)
    raise RuntimeError("iteration cap exceeded")


def reconstruct(e: BasisExpansion, b: int, c: int) -> LaurentPoly:
    """Sum the expansion back into a Laurent polynomial."""
    memo: Dict = {}
    out = LaurentPoly.zero()
    for (b1, b2), u in sorted(e.coeffs.items()):
        out = out + u * _basis_element(b, c, e.kind, b1, b2, memo)
    return out


def verify_triangular(e: BasisExpansion, a1: int, a2: int) -> bool:
    """Triangularity of the standard-basis expansion of a greedy element
    with a1, a2 > 0: leading coefficient u(a1,a2) = 1 and every other
    term of strictly smaller weight [b1]_+ + [b2]_+."""
    if a1 <= 0 or a2 <= 0:
        raise ValueError("triangularity check needs a1 > 0 and a2 > 0")
    if e.coeffs.get((a1, a2)) != 1:
        return False
    weight = plus_part(a1) + plus_part(a2)
    for (b1, b2) in e.coeffs:
        if (b1, b2) == (a1, a2):
            continue
        if plus_part(b1) + plus_part(b2) >= weight:
            return False
    return True
