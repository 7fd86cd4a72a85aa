"""Exact computations with greedy elements of rank-2 cluster algebras
A(b,c): Laurent arithmetic, Dyck-path combinatorics, greedy recurrences,
cluster dynamics and pointed-basis expansions."""

from .kernel import HAVE_NATIVE
from .laurent import LaurentPoly, NotDivisibleError

__version__ = "0.1.0"

__all__ = ["LaurentPoly", "NotDivisibleError", "HAVE_NATIVE", "__version__"]
