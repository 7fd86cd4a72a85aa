import json

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from rank2greedy.laurent import LaurentPoly, NotDivisibleError, lp_sum

exponents = st.tuples(st.integers(-4, 4), st.integers(-4, 4))
polys = st.dictionaries(exponents, st.integers(-9, 9), max_size=6).map(LaurentPoly)


def _to_sympy(p):
    x1, x2 = sympy.symbols("x1 x2")
    return sum(c * x1**d1 * x2**d2 for (d1, d2), c in p.terms.items())


# -- construction and normalization -----------------------------------

def test_zero_coefficients_are_dropped():
    p = LaurentPoly({(1, 0): 0, (0, 1): 2})
    assert p.terms == {(0, 1): 2}
    assert not LaurentPoly({(3, 3): 0})


def test_immutability():
    p = LaurentPoly.one()
    with pytest.raises(AttributeError):
        p.terms = {}


def test_var_and_monomial():
    assert LaurentPoly.var(1) == LaurentPoly.monomial(1, 0)
    assert LaurentPoly.var(2) == LaurentPoly.monomial(0, 1)
    with pytest.raises(ValueError):
        LaurentPoly.var(3)


# -- ring axioms ------------------------------------------------------

@given(polys, polys, polys)
@settings(max_examples=60)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + LaurentPoly.zero() == p
    assert p * LaurentPoly.one() == p
    assert p - p == LaurentPoly.zero()


@given(polys, st.integers(0, 4))
@settings(max_examples=40)
def test_pow_is_repeated_multiplication(p, n):
    expected = LaurentPoly.one()
    for _ in range(n):
        expected = expected * p
    assert p**n == expected


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        LaurentPoly.one() ** -1


def test_integer_coercion():
    p = LaurentPoly.var(1)
    assert p + 1 == LaurentPoly({(1, 0): 1, (0, 0): 1})
    assert 2 * p == LaurentPoly({(1, 0): 2})
    assert 1 - p == LaurentPoly({(0, 0): 1, (1, 0): -1})


# -- exact division ---------------------------------------------------

@given(polys, polys)
@settings(max_examples=60)
def test_exact_div_roundtrip(p, q):
    if not q:
        return
    assert (p * q).exact_div(q) == p


def test_exact_div_not_divisible():
    x1, x2 = LaurentPoly.var(1), LaurentPoly.var(2)
    with pytest.raises(NotDivisibleError):
        (x1 + 1).exact_div(x2 + 1)


def test_exact_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        LaurentPoly.one().exact_div(LaurentPoly.zero())


def test_exact_div_monomial():
    p = LaurentPoly({(2, -1): 4, (0, 3): -2})
    m = LaurentPoly.monomial(1, -1, 2)
    assert p.exact_div(m) == LaurentPoly({(1, 0): 2, (-1, 4): -1})


# -- substitution -----------------------------------------------------

def test_substitute_inverse_basics():
    x1, x2 = LaurentPoly.var(1), LaurentPoly.var(2)
    g = x2**2 + 1
    # x1 -> g / x1
    assert x1.substitute_inverse(1, g) == g * LaurentPoly.monomial(-1, 0)
    # the untouched variable is fixed
    assert (x2**5).substitute_inverse(1, g) == x2**5


def test_substitute_inverse_involution():
    x1, x2 = LaurentPoly.var(1), LaurentPoly.var(2)
    g = x2**2 + 1
    p = LaurentPoly.monomial(-1, -1) * (1 + x1**2 + x2**2)
    assert p.substitute_inverse(1, g).substitute_inverse(1, g) == p


def test_substitute_inverse_sympy_oracle():
    # independent check by rational-function simplification
    x1s, x2s = sympy.symbols("x1 x2")
    p = LaurentPoly.monomial(-1, -1) * (1 + LaurentPoly.var(1) ** 2 + LaurentPoly.var(2) ** 2)
    g = LaurentPoly.var(2) ** 2 + 1
    got = p.substitute_inverse(1, g)
    expected = sympy.cancel(_to_sympy(p).subs(x1s, (x2s**2 + 1) / x1s))
    assert sympy.simplify(_to_sympy(got) - expected) == 0


def test_substitute_inverse_non_laurent():
    x1 = LaurentPoly.var(1)
    # x1 + x1^{-1} x2^{-1} is not Laurent after x1 -> (x2^2+1)/x1
    p = x1 + LaurentPoly.monomial(-1, -1)
    with pytest.raises(NotDivisibleError):
        p.substitute_inverse(1, LaurentPoly.var(2) ** 2 + 1)


nonneg_x1_polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(-4, 4)),
    st.integers(-9, 9), max_size=6,
).map(LaurentPoly)


@given(nonneg_x1_polys)
@settings(max_examples=40)
def test_substitute_inverse_is_additive(p):
    # nonnegative x1-exponents keep every image Laurent
    g = LaurentPoly.var(2) ** 2 + 1
    q = LaurentPoly({(1, 1): 3, (2, 0): 1})
    assert (p + q).substitute_inverse(1, g) == \
        p.substitute_inverse(1, g) + q.substitute_inverse(1, g)


# -- serialization and rendering --------------------------------------

def test_json_roundtrip_and_canonical_order():
    p = LaurentPoly({(1, -1): 1, (-1, -1): 1, (-1, 1): 1})
    s = p.to_json()
    assert s == '{"terms":[{"e":[-1,-1],"c":"1"},{"e":[-1,1],"c":"1"},{"e":[1,-1],"c":"1"}]}'
    assert LaurentPoly.from_json(s) == p


def test_json_big_coefficients_survive():
    big = 10**40 + 7
    p = LaurentPoly({(0, 0): big})
    obj = json.loads(p.to_json())
    assert obj["terms"][0]["c"] == str(big)
    assert LaurentPoly.from_json(p.to_json()) == p


def test_str_rendering():
    p = LaurentPoly({(0, 0): 1, (3, -2): -4})
    assert str(p) == "1 - 4*x1^3*x2^-2"
    assert str(LaurentPoly.zero()) == "0"


def test_latex_rendering():
    p = LaurentPoly({(-3, 0): 1, (0, 1): 2})
    assert p.to_latex() == "x_1^{-3} + 2 x_2"


def test_lp_sum():
    ps = [LaurentPoly.monomial(i, 0) for i in range(3)]
    assert lp_sum(ps) == LaurentPoly({(0, 0): 1, (1, 0): 1, (2, 0): 1})
