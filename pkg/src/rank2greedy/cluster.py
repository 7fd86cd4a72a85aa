"""Cluster dynamics of A(b,c): cluster variables, expansion of algebra
elements at arbitrary clusters, the sigma automorphisms, Chebyshev
denominator vectors and finite-window positivity probes.

The exchange relations are x_{m-1} x_{m+1} = x_m^b + 1 for m odd and
x_m^c + 1 for m even.  A Laurent polynomial in two slots is always read
relative to a cluster {x_m, x_{m+1}}; slot 1 holds x_m and slot 2 holds
x_{m+1}, so the initial cluster is m = 1.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Tuple

from .laurent import LaurentPoly, NotDivisibleError


def _check_params(b: int, c: int) -> None:
    if b < 1 or c < 1:
        raise ValueError("exchange parameters must be positive")


def _exchange_exponent(b: int, c: int, m: int) -> int:
    """Exponent in the exchange relation through x_m: b for odd m."""
    return b if m % 2 else c


def _swap(x: LaurentPoly) -> LaurentPoly:
    return LaurentPoly({(d2, d1): coeff for (d1, d2), coeff in x.terms.items()})


def cluster_variable(b: int, c: int, m: int) -> LaurentPoly:
    """The cluster variable x_m expanded in the initial cluster {x1, x2}.

    Computed by iterating the exchange relation from the initial cluster;
    every division is exact by the Laurent phenomenon, so a division
    failure here is an internal error, not bad input.
    """
    _check_params(b, c)
    lo, hi = LaurentPoly.var(1), LaurentPoly.var(2)
    k = 1  # invariant: lo = x_k, hi = x_{k+1}
    while k + 1 < m:
        e = _exchange_exponent(b, c, k + 1)
        lo, hi = hi, (hi**e + 1).exact_div(lo)
        k += 1
    while k > m:
        e = _exchange_exponent(b, c, k)
        lo, hi = (lo**e + 1).exact_div(hi), lo
        k -= 1
    return lo if k == m else hi


def expand_at_cluster(x: LaurentPoly, b: int, c: int, m: int) -> LaurentPoly:
    """Rewrite x, given in the initial cluster, as a Laurent polynomial
    in {x_m, x_{m+1}} (relabeled to slots 1 and 2).

    One cluster step at a time: moving from {x_k, x_{k+1}} up to
    {x_{k+1}, x_{k+2}} expresses the disappearing variable through the
    exchange binomial and clears it by exact division.  A failed
    division means x is not in the algebra at cluster m.
    """
    _check_params(b, c)
    k = 1
    try:
        while k < m:
            # x_k = (x_{k+1}^e + 1) / x_{k+2} with e by parity of k+1
            e = _exchange_exponent(b, c, k + 1)
            x = _swap(x).substitute_inverse(2, LaurentPoly.var(1) ** e + 1)
            k += 1
        while k > m:
            # x_{k+1} = (x_k^e + 1) / x_{k-1} with e by parity of k
            e = _exchange_exponent(b, c, k)
            x = _swap(x).substitute_inverse(1, LaurentPoly.var(2) ** e + 1)
            k -= 1
    except NotDivisibleError:
        raise NotDivisibleError(f"not in the algebra at cluster {m}") from None
    return x


def sigma(which: int, x: LaurentPoly, b: int, c: int) -> LaurentPoly:
    """The automorphism sigma_1 (x2 -> (x1^b+1)/x2, x1 fixed) or
    sigma_2 (x1 -> (x2^c+1)/x1, x2 fixed)."""
    _check_params(b, c)
    if which == 1:
        return x.substitute_inverse(2, LaurentPoly.var(1) ** b + 1)
    if which == 2:
        return x.substitute_inverse(1, LaurentPoly.var(2) ** c + 1)
    raise ValueError("sigma index must be 1 or 2")


# ---------------------------------------------------------------------
# Chebyshev denominators
# ---------------------------------------------------------------------

def chebyshev(p: int) -> List[int]:
    """Coefficient vector (ascending powers of t) of the normalized
    second-kind Chebyshev polynomial S_p; S_{-1} = 0, S_0 = 1."""
    if p < -1:
        raise ValueError("index must be at least -1")
    prev, cur = [], [1]  # S_{-1}, S_0
    for _ in range(p + 1 if p < 0 else p):
        nxt = [0] + cur  # t * cur
        for i, coeff in enumerate(prev):
            nxt[i] -= coeff
        prev, cur = cur, nxt
    return prev if p == -1 else cur


def chebyshev_eval(p: int, t: int) -> int:
    if p < -1:
        raise ValueError("index must be at least -1")
    prev, cur = 0, 1
    for _ in range(p):
        prev, cur = cur, t * cur - prev
    return prev if p == -1 else cur


def denominator_vector_of(b: int, c: int, m: int) -> Tuple[int, int]:
    """Denominator vector of the cluster variable x_m, m not in {1, 2}.

    For bc >= 4 this is the four-case Chebyshev formula at t = bc - 2;
    for bc <= 3 only the directly adjacent m in {0, 3} are covered."""
    _check_params(b, c)
    if m in (1, 2):
        raise ValueError("initial variables have denominator vectors (-1,0),(0,-1)")
    if b * c <= 3 and m not in (0, 3):
        raise ValueError("out of formula domain")
    t = b * c - 2
    if m >= 3 and m % 2:  # m = 2p+3
        p = (m - 3) // 2
        return (chebyshev_eval(p, t) + chebyshev_eval(p - 1, t),
                c * chebyshev_eval(p - 1, t))
    if m >= 4:  # m = 2p+4
        p = (m - 4) // 2
        return (b * chebyshev_eval(p, t),
                chebyshev_eval(p, t) + chebyshev_eval(p - 1, t))
    if m % 2 == 0:  # m = -2p <= 0
        p = -m // 2
        return (b * chebyshev_eval(p - 1, t),
                chebyshev_eval(p, t) + chebyshev_eval(p - 1, t))
    # m = -2p-1 < 0
    p = (-m - 1) // 2
    return (chebyshev_eval(p, t) + chebyshev_eval(p - 1, t),
            c * chebyshev_eval(p, t))


# ---------------------------------------------------------------------
# positivity probes
# ---------------------------------------------------------------------

def _num_workers() -> int:
    env = os.environ.get("GREEDY_THREADS")
    if env:
        n = int(env)
        if n < 1:
            raise ValueError("GREEDY_THREADS must be positive")
        return n
    return 1


def expansions_over_window(x: LaurentPoly, b: int, c: int,
                           m_range: Iterable[int]) -> Dict[int, LaurentPoly]:
    """Expansion of x at every cluster of the window, keyed by m.

    Walks outward from m = 1 so consecutive clusters share the rewriting
    prefix instead of restarting from the initial cluster each time.
    """
    ms = sorted(set(m_range))
    if not ms:
        return {}
    out: Dict[int, LaurentPoly] = {}
    up = [m for m in ms if m >= 1]
    down = [m for m in ms if m < 1]

    def walk(targets):
        local = {}
        cur, k = x, 1
        for m in targets:
            cur = _walk_to(cur, b, c, k, m)
            k = m
            local[m] = cur
        return local

    if _num_workers() > 1 and up and down:
        with ThreadPoolExecutor(max_workers=2) as pool:
            f1 = pool.submit(walk, up)
            f2 = pool.submit(walk, sorted(down, reverse=True))
            out.update(f1.result())
            out.update(f2.result())
    else:
        out.update(walk(up))
        out.update(walk(sorted(down, reverse=True)))
    return out


def _walk_to(x: LaurentPoly, b: int, c: int, k: int, m: int) -> LaurentPoly:
    """Rewrite x from cluster k to cluster m, one step at a time."""
    try:
        while k < m:
            e = _exchange_exponent(b, c, k + 1)
            x = _swap(x).substitute_inverse(2, LaurentPoly.var(1) ** e + 1)
            k += 1
        while k > m:
            e = _exchange_exponent(b, c, k)
            x = _swap(x).substitute_inverse(1, LaurentPoly.var(2) ** e + 1)
            k -= 1
    except NotDivisibleError:
        raise NotDivisibleError(f"not in the algebra at cluster {m}") from None
    return x


def is_positive_at(x: LaurentPoly, b: int, c: int,
                   m_range: Iterable[int]) -> bool:
    """Whether x is nonzero and every coefficient of its expansion at
    every cluster in the window is nonnegative.

    This is a finite probe: a true result is evidence, not a positivity
    certificate (elements positive on any finite cluster set but not
    globally are known to exist).
    """
    if not x:
        return False
    for exp in expansions_over_window(x, b, c, m_range).values():
        if any(coeff < 0 for coeff in exp.terms.values()):
            return False
    return True


def probe_minima(x: LaurentPoly, b: int, c: int,
                 m_range: Iterable[int]) -> Dict[int, int]:
    """Per-cluster minimum coefficient of the expansion of x, keyed by
    m in ascending order.  Evidence only; see is_positive_at."""
    out = {}
    exps = expansions_over_window(x, b, c, m_range)
    for m in sorted(exps):
        terms = exps[m].terms
        out[m] = min(terms.values()) if terms else 0
    return out
