"""Sparse bivariate Laurent polynomials over the integers.

A polynomial is a finite map from exponent pairs ``(d1, d2)`` to nonzero
integer coefficients.  The zero polynomial is the empty map.  The
canonical iteration and serialization order is lexicographic ascending
on ``(d1, d2)``; with that order fixed, equal elements serialize to
identical bytes, which the golden-file tests depend on.
"""

from __future__ import annotations

import heapq
import json
from typing import Iterable, Iterator, Mapping, Tuple

Exponent = Tuple[int, int]


class NotDivisibleError(ArithmeticError):
    """Raised when an exact Laurent quotient does not exist."""


class LaurentPoly:
    """Immutable sparse Laurent polynomial in two variables x1, x2."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean = {}
        if terms:
            for (d1, d2), c in terms.items():
                if c:
                    clean[(int(d1), int(d2))] = int(c)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, d1: int, d2: int, coeff: int = 1) -> "LaurentPoly":
        return cls({(d1, d2): coeff})

    @classmethod
    def var(cls, which: int) -> "LaurentPoly":
        """The generator x1 (which=1) or x2 (which=2)."""
        if which == 1:
            return cls({(1, 0): 1})
        if which == 2:
            return cls({(0, 1): 1})
        raise ValueError("variable index must be 1 or 2")

    # -- basic structure ----------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({(0, 0): other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> Iterator[Tuple[Exponent, int]]:
        """Terms in canonical (lex ascending) order."""
        for e in sorted(self.terms):
            yield e, self.terms[e]

    def support(self) -> frozenset:
        """The set of exponent pairs carrying a nonzero coefficient."""
        return frozenset(self.terms)

    def coeff(self, d1: int, d2: int) -> int:
        return self.terms.get((d1, d2), 0)

    def min_exponent(self, var: int) -> int:
        """Smallest exponent of x1 (var=1) or x2 (var=2); 0 if zero poly."""
        if not self.terms:
            return 0
        i = var - 1
        return min(e[i] for e in self.terms)

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly({(0, 0): x})
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return LaurentPoly.zero()
        big = _kronecker_mul(self.terms, other.terms)
        if big is not None:
            return LaurentPoly(big)
        out: dict = {}
        for (a1, a2), ca in self.terms.items():
            for (b1, b2), cb in other.terms.items():
                e = (a1 + b1, a2 + b2)
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative exponent")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- exact division -----------------------------------------------

    def exact_div(self, den: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient q with q * den == self.

        Works by leading-term elimination in lex order: the divisor's
        lex-minimal term is the pivot, so every elimination step strictly
        raises the lex-minimal term of the remainder.  Exponents of a
        true quotient are confined to a box determined by the extremal
        exponents of numerator and divisor, which gives a clean
        non-divisibility test.
        """
        if not den:
            raise ZeroDivisionError("division by zero")
        if not self:
            return LaurentPoly.zero()

        piv = min(den.terms)
        piv_c = den.terms[piv]
        # exponent box of any exact quotient, coordinatewise
        lo1 = self.min_exponent(1) - den.min_exponent(1)
        lo2 = self.min_exponent(2) - den.min_exponent(2)
        hi1 = max(e[0] for e in self.terms) - max(e[0] for e in den.terms)
        hi2 = max(e[1] for e in self.terms) - max(e[1] for e in den.terms)

        rem = dict(self.terms)
        heap = list(rem)
        heapq.heapify(heap)
        quo: dict = {}
        while rem:
            m = heapq.heappop(heap)
            if m not in rem:
                continue  # stale heap entry
            c = rem.pop(m)
            e = (m[0] - piv[0], m[1] - piv[1])
            if c % piv_c or not (lo1 <= e[0] <= hi1 and lo2 <= e[1] <= hi2):
                raise NotDivisibleError("not divisible")
            u = c // piv_c
            quo[e] = u
            for f, cf in den.terms.items():
                if f == piv:
                    continue
                g = (e[0] + f[0], e[1] + f[1])
                if g in rem:
                    s = rem[g] - u * cf
                    if s:
                        rem[g] = s
                    else:
                        del rem[g]
                else:
                    rem[g] = -u * cf
                    heapq.heappush(heap, g)
        return LaurentPoly(quo)

    def substitute_inverse(self, var: int, g: "LaurentPoly") -> "LaurentPoly":
        """Image under the substitution x_var -> g / x_var.

        The common power of g is cleared first, so only a single exact
        division is needed; if that division fails the image is not a
        Laurent polynomial.
        """
        if var not in (1, 2):
            raise ValueError("variable index must be 1 or 2")
        if not g:
            raise ZeroDivisionError("substitution by zero")
        if not self:
            return LaurentPoly.zero()

        i = var - 1
        k = min(e[i] for e in self.terms)
        top = max(e[i] for e in self.terms)
        # slices[d] collects the terms with x_var-exponent d
        slices: dict = {}
        for e, c in self.terms.items():
            slices.setdefault(e[i], {})[e[1 - i]] = c

        # accumulate sum_d slice_d * g^(d-k) * x_var^(-d) into a raw dict
        gpow = LaurentPoly.one()
        out: dict = {}
        for d in range(k, top + 1):
            sl = slices.get(d)
            if sl:
                for other_exp, c in sl.items():
                    for (f1, f2), cf in gpow.terms.items():
                        if var == 1:
                            e = (f1 - d, f2 + other_exp)
                        else:
                            e = (f1 + other_exp, f2 - d)
                        s = out.get(e, 0) + c * cf
                        if s:
                            out[e] = s
                        else:
                            del out[e]
            if d < top:
                gpow = gpow * g
        acc = LaurentPoly(out)

        if k >= 0:
            return acc * g**k
        try:
            # divide by g one factor at a time: cheaper than building
            # g^(-k), and each step has a small divisor
            for _ in range(-k):
                acc = acc.exact_div(g)
            return acc
        except NotDivisibleError:
            raise NotDivisibleError("not Laurent after substitution") from None

    # -- serialization ------------------------------------------------

    def to_json_obj(self) -> dict:
        """Canonical JSON object; coefficients as decimal strings."""
        return {
            "terms": [
                {"e": [d1, d2], "c": str(c)} for (d1, d2), c in self.sorted_terms()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "LaurentPoly":
        terms = {}
        for t in obj["terms"]:
            d1, d2 = t["e"]
            terms[(int(d1), int(d2))] = int(t["c"])
        return cls(terms)

    @classmethod
    def from_json(cls, s: str) -> "LaurentPoly":
        return cls.from_json_obj(json.loads(s))

    # -- rendering ----------------------------------------------------

    def _render(self, v1: str, v2: str, expo) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (d1, d2), c in self.sorted_terms():
            factors = []
            if d1:
                factors.append(v1 + expo(d1))
            if d2:
                factors.append(v2 + expo(d2))
            mono = "*".join(factors) if expo is _plain_expo else " ".join(factors)
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if expo is _plain_expo else ' '}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self._render("x1", "x2", _plain_expo)

    def to_latex(self) -> str:
        return self._render("x_1", "x_2", _latex_expo)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms!r})"


_KRONECKER_MIN_OPS = 1_000_000
_KRONECKER_MAX_BYTES = 1 << 30

try:
    # GMP multiplies the packed integers far faster than the
    # interpreter's builtin for operands this large
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - depends on the environment
    def _mpz(x):
        return x


def _kronecker_mul(ta: Mapping[Exponent, int], tb: Mapping[Exponent, int]):
    """Large-product path: pack each factor into one big integer (one
    fixed-width digit per lattice cell of the exponent box) and let the
    interpreter's subquadratic integer multiplication do the convolution.

    Negative coefficients are handled by splitting each factor into its
    positive and negative parts.  Returns a raw term dict, or None when
    the product is small or the boxes too sparse for packing to pay off.
    """
    if len(ta) * len(tb) < _KRONECKER_MIN_OPS:
        return None
    a1lo = min(e[0] for e in ta)
    a1hi = max(e[0] for e in ta)
    a2lo = min(e[1] for e in ta)
    a2hi = max(e[1] for e in ta)
    b1lo = min(e[0] for e in tb)
    b1hi = max(e[0] for e in tb)
    b2lo = min(e[1] for e in tb)
    b2hi = max(e[1] for e in tb)
    w2 = (a2hi - a2lo) + (b2hi - b2lo) + 1
    w1 = (a1hi - a1lo) + (b1hi - b1lo) + 1
    bound = (max(abs(c) for c in ta.values())
             * max(abs(c) for c in tb.values())
             * min(len(ta), len(tb)))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    if w1 * w2 * nbytes > _KRONECKER_MAX_BYTES:
        return None

    def pack(terms, lo1, lo2, width2, sign):
        buf = bytearray(((max(e[0] for e in terms) - lo1) * width2
                         + (a2hi if terms is ta else b2hi) - lo2 + 1) * nbytes)
        for (d1, d2), coeff in terms.items():
            if sign * coeff > 0:
                off = ((d1 - lo1) * width2 + (d2 - lo2)) * nbytes
                buf[off:off + nbytes] = (sign * coeff).to_bytes(nbytes, "little")
        return int.from_bytes(buf, "little")

    ap = _mpz(pack(ta, a1lo, a2lo, w2, 1))
    an = _mpz(pack(ta, a1lo, a2lo, w2, -1))
    bp = _mpz(pack(tb, b1lo, b2lo, w2, 1))
    bn = _mpz(pack(tb, b1lo, b2lo, w2, -1))
    pos = int(ap * bp + an * bn)
    neg = int(ap * bn + an * bp)

    out: dict = {}
    base1, base2 = a1lo + b1lo, a2lo + b2lo
    for product, sgn in ((pos, 1), (neg, -1)):
        if not product:
            continue
        data = product.to_bytes(w1 * w2 * nbytes, "little")
        for cell in range(w1 * w2):
            chunk = data[cell * nbytes:(cell + 1) * nbytes]
            if chunk.count(0) == nbytes:
                continue
            coeff = sgn * int.from_bytes(chunk, "little")
            e = (base1 + cell // w2, base2 + cell % w2)
            s = out.get(e, 0) + coeff
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def _plain_expo(d: int) -> str:
    return f"^{d}" if d != 1 else ""


def _latex_expo(d: int) -> str:
    if d == 1:
        return ""
    return f"^{{{d}}}" if (d < 0 or d > 9) else f"^{d}"


def lp_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out = LaurentPoly.zero()
    for p in polys:
        out = out + p
    return out
