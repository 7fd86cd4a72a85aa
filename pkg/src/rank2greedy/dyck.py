"""Maximal Dyck paths, compatible edge-subset pairs, shadows and the
order-preserving remote-shadow bijection.

Conventions.  The path D of size a1 x a2 runs from (0,0) to (a1,a2) and
stays weakly below the main diagonal, as close to it as possible: the
upper endpoint of the j-th vertical edge sits at (ceil(j*a1/a2), j).
Horizontal edges are u_1..u_{a1} left to right, vertical edges
v_1..v_{a2} bottom to top; edge subsets are represented by frozensets of
these 1-based indices.  Subpaths between two lattice points wrap through
the corner, with (0,0) and (a1,a2) identified, and the subpath from a
point to itself is the full loop, not the empty path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Tuple

from .arith import binom

Point = Tuple[int, int]


class DyckPath:
    """The maximal Dyck path in an a1 x a2 rectangle."""

    __slots__ = ("a1", "a2", "edges", "vertices", "h_pos", "v_pos",
                 "h_height", "height_edges")

    def __init__(self, a1: int, a2: int):
        if a1 < 0 or a2 < 0:
            raise ValueError("path dimensions must be nonnegative")
        self.a1 = a1
        self.a2 = a2
        # edge sequence: ('h', i) or ('v', j), path order
        edges = []
        vertices = [(0, 0)]
        x = y = 0
        hi = vi = 0
        if a2 == 0:
            for _ in range(a1):
                hi += 1
                x += 1
                edges.append(("h", hi))
                vertices.append((x, y))
        else:
            for j in range(1, a2 + 1):
                top_x = -(-j * a1 // a2)  # ceil(j*a1/a2)
                while x < top_x:
                    hi += 1
                    x += 1
                    edges.append(("h", hi))
                    vertices.append((x, y))
                vi += 1
                y += 1
                edges.append(("v", vi))
                vertices.append((x, y))
        self.edges = edges
        self.vertices = vertices
        # h_pos[i] / v_pos[j]: index of the edge in path order (0-based)
        self.h_pos = {}
        self.v_pos = {}
        self.h_height = {}
        for t, (kind, idx) in enumerate(edges):
            if kind == "h":
                self.h_pos[idx] = t
                self.h_height[idx] = vertices[t][1]
            else:
                self.v_pos[idx] = t
        self.height_edges = {}
        for i, h in self.h_height.items():
            self.height_edges.setdefault(h, set()).add(i)

    @property
    def n_edges(self) -> int:
        return self.a1 + self.a2

    def horizontal_indices(self) -> range:
        return range(1, self.a1 + 1)

    def vertical_indices(self) -> range:
        return range(1, self.a2 + 1)

    def upper_endpoint(self, j: int) -> Point:
        """Upper endpoint F_j of the vertical edge v_j; F_0 is the origin."""
        if j == 0:
            return (0, 0)
        return self.vertices[self.v_pos[j] + 1]

    def left_endpoint(self, i: int) -> Point:
        """Left endpoint E of the horizontal edge u_i."""
        return self.vertices[self.h_pos[i]]

    def vertex_index(self, pt: Point) -> int:
        """Position of a lattice point along the path, modulo the corner
        identification: (a1,a2) and (0,0) are both index 0."""
        try:
            t = self.vertices.index(pt)
        except ValueError:
            raise ValueError(f"{pt} is not on the path") from None
        return t % self.n_edges if self.n_edges else 0


def max_dyck_path(a1: int, a2: int) -> DyckPath:
    return DyckPath(a1, a2)


def subpath(path: DyckPath, a: Point, b: Point) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Edge sets (horizontal, vertical) of the subpath from a to b.

    Runs Northeast from a; if (a1,a2) is reached first it continues from
    (0,0).  The subpath from a point to itself is the full loop.
    """
    i, j = a
    i2, j2 = b
    if a != b and i <= i2 and j <= j2:
        hs = frozenset(range(i + 1, i2 + 1))
        vs = frozenset(range(j + 1, j2 + 1))
    else:
        hs = frozenset(k for k in path.horizontal_indices() if not (i2 < k <= i))
        vs = frozenset(k for k in path.vertical_indices() if not (j2 < k <= j))
    return hs, vs


def _pair_ok(path: DyckPath, s1: FrozenSet[int], s2: FrozenSet[int],
             b: int, c: int, u: int, v: int) -> bool:
    """The defining condition for one horizontal edge u in S1 and one
    vertical edge v in S2: some interior lattice point A of the subpath
    EF satisfies |(AF)_1| = b|(AF)_2 cap S2| or |(EA)_2| = c|(EA)_1 cap S1|.
    """
    n = path.n_edges
    te = path.h_pos[u]  # E = left endpoint of u = vertex te
    tf = (path.v_pos[v] + 1) % n  # F = upper endpoint of v
    length = (tf - te) % n
    if length == 0:
        length = n  # E == F: the full loop
    # totals over the whole subpath EF
    tot1 = 0
    tot2s = 0
    for s in range(length):
        kind, idx = path.edges[(te + s) % n]
        if kind == "h":
            tot1 += 1
        elif idx in s2:
            tot2s += 1
    # walk the interior points A, one edge at a time
    ea1 = ea2 = ea1s = ea2s = 0
    for s in range(1, length):
        kind, idx = path.edges[(te + s - 1) % n]
        if kind == "h":
            ea1 += 1
            if idx in s1:
                ea1s += 1
        else:
            ea2 += 1
            if idx in s2:
                ea2s += 1
        if (tot1 - ea1) == b * (tot2s - ea2s) or ea2 == c * ea1s:
            return True
    return False


def is_compatible(path: DyckPath, s1: Iterable[int], s2: Iterable[int],
                  b: int, c: int) -> bool:
    """Whether the pair of edge subsets (S1, S2) is compatible."""
    s1 = frozenset(s1)
    s2 = frozenset(s2)
    for u in s1:
        if not 1 <= u <= path.a1:
            raise ValueError(f"horizontal index {u} out of range")
    for v in s2:
        if not 1 <= v <= path.a2:
            raise ValueError(f"vertical index {v} out of range")
    return all(_pair_ok(path, s1, s2, b, c, u, v) for u in s1 for v in s2)


# ---------------------------------------------------------------------
# shadows
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class ShadowReport:
    """Shadow data of a vertical edge subset S2.

    local maps each v in S2 to its local shadow (horizontal indices);
    sh is their union, rsh the remote shadow, and pieces the partition
    of rsh into maximal runs keyed by (height, vertical index).
    """
    sh: FrozenSet[int]
    rsh: FrozenSet[int]
    local: Dict[int, FrozenSet[int]]
    pieces: Dict[Tuple[int, int], Tuple[int, ...]]


def _local_shadow(path: DyckPath, s2: FrozenSet[int], b: int, j: int) -> FrozenSet[int]:
    """Horizontal edges of the shortest subpath AF_j with
    |(AF_j)_1| = b |(AF_j)_2 cap S2|; the whole bottom row if none exists."""
    n = path.n_edges
    tf = (path.v_pos[j] + 1) % n
    f = 0
    hs = []
    for s in range(1, n):
        kind, idx = path.edges[(tf - s) % n]
        if kind == "h":
            f -= 1
            hs.append(idx)
        elif idx in s2:
            f += b
        if f == 0:
            return frozenset(hs)
    return frozenset(path.horizontal_indices())


def shadow(path: DyckPath, s2: Iterable[int], b: int) -> ShadowReport:
    """Shadow, remote shadow and remote-shadow pieces of S2."""
    if path.a1 == 0 or path.a2 == 0:
        raise ValueError("shadows need a nondegenerate path")
    s2 = frozenset(s2)
    local = {j: _local_shadow(path, s2, b, j) for j in s2}
    sh = frozenset().union(*local.values()) if local else frozenset()
    rsh = set(sh)
    for j in s2:
        rsh -= path.height_edges.get(j - 1, set())
    pieces: Dict[Tuple[int, int], list] = {}
    n = path.n_edges
    for i in sorted(rsh):
        h = path.h_height[i]
        # first vertical edge after u_i whose local shadow contains u_i
        t0 = path.h_pos[i]
        best = None
        for s in range(1, n + 1):
            kind, idx = path.edges[(t0 + s) % n]
            if kind == "v" and idx in s2 and i in local[idx]:
                best = idx
                break
        assert best is not None, "remote-shadow edge outside every local shadow"
        pieces.setdefault((h, best), []).append(i)
    return ShadowReport(
        sh=sh,
        rsh=frozenset(rsh),
        local=local,
        pieces={k: tuple(v) for k, v in pieces.items()},
    )


def reflected_s2(a2: int, s2: Iterable[int]) -> FrozenSet[int]:
    """The complementary reflection {j : v_{a2+1-j} not in S2} used by the
    shadow bijection."""
    s2 = frozenset(s2)
    return frozenset(j for j in range(1, a2 + 1) if (a2 + 1 - j) not in s2)


def theta(a1: int, a2: int, b: int, c: int, s2: Iterable[int]) -> Tuple[int, FrozenSet[int], Dict[int, int]]:
    """The piecewise order-preserving bijection rsh(S2) -> rsh(S2').

    Defined when 0 < a1 < b*a2.  Returns (a1', S2', mapping) where the
    companion path is the maximal path of size a1' x a2 with
    a1' = b*a2 - a1, and mapping sends each remote-shadow edge index on
    the original path to one on the companion.  The map is independent
    of c; c enters only through the compatibility checks it preserves.
    """
    if not 0 < a1 < b * a2:
        raise ValueError("precondition violated: need 0 < a1 < b*a2")
    s2 = frozenset(s2)
    a1p = b * a2 - a1
    s2p = reflected_s2(a2, s2)
    d = DyckPath(a1, a2)
    dp = DyckPath(a1p, a2)
    pieces = shadow(d, s2, b).pieces
    pieces_p = shadow(dp, s2p, b).pieces
    mapping: Dict[int, int] = {}
    for (h, j), run in pieces.items():
        target = pieces_p.get((a2 - j, a2 - h), ())
        if len(run) != len(target):
            raise AssertionError(
                f"piece ({h},{j}) has size {len(run)} but its mirror has {len(target)}"
            )
        for src, dst in zip(run, target):
            mapping[src] = dst
    if sum(len(r) for r in pieces_p.values()) != len(mapping):
        raise AssertionError("mirror pieces not exhausted by the bijection")
    return a1p, s2p, mapping


def f_stat(path: DyckPath, s2: Iterable[int], b: int, h: int, j: int) -> int:
    """b |(F_h F_j)_2 cap S2| - |(F_h F_j)_1| for 0 <= h < j <= a2."""
    if not 0 <= h < j <= path.a2:
        raise ValueError("index out of range: need 0 <= h < j <= a2")
    s2 = frozenset(s2)
    a1, a2 = path.a1, path.a2
    horiz = -(-j * a1 // a2) - (-(-h * a1 // a2))
    vert_in_s2 = sum(1 for l in range(h + 1, j + 1) if l in s2)
    return b * vert_in_s2 - horiz


# ---------------------------------------------------------------------
# compatible-pair counting (pure-Python reference)
# ---------------------------------------------------------------------

def _subsets(items: Tuple[int, ...]):
    n = len(items)
    for mask in range(1 << n):
        yield frozenset(items[k] for k in range(n) if mask >> k & 1)


def count_compatible_naive(path: DyckPath, b: int, c: int) -> Dict[Tuple[int, int], int]:
    """Grid (|S2|, |S1|) -> number of compatible pairs, by enumerating
    every pair of edge subsets.  Exponential; cross-check oracle only."""
    grid: Dict[Tuple[int, int], int] = {}
    hs = tuple(path.horizontal_indices())
    vs = tuple(path.vertical_indices())
    for s2 in _subsets(vs):
        for s1 in _subsets(hs):
            if is_compatible(path, s1, s2, b, c):
                key = (len(s2), len(s1))
                grid[key] = grid.get(key, 0) + 1
    return grid


def count_compatible_pruned(path: DyckPath, b: int, c: int) -> Dict[Tuple[int, int], int]:
    """Compatible-pair grid using the shadow structure to prune S1.

    For each S2 the compatible S1 are exactly: an arbitrary subset of the
    edges outside the shadow, together with a subset of the remote shadow
    that is itself compatible with S2 (edges in sh - rsh are forbidden).
    When a1 >= b*a2 the remote shadow is empty and only the binomial
    count over the complement of the shadow survives.
    """
    a1, a2 = path.a1, path.a2
    grid: Dict[Tuple[int, int], int] = {}

    def bump(p: int, q: int, amount: int) -> None:
        if amount:
            key = (p, q)
            grid[key] = grid.get(key, 0) + amount

    if a1 == 0 or a2 == 0:
        # one edge family is empty: every pair is vacuously compatible
        for q in range(a1 + 1):
            bump(0, q, binom(a1, q))
        for p in range(1, a2 + 1):
            bump(p, 0, binom(a2, p))
        return grid

    for s2 in _subsets(tuple(path.vertical_indices())):
        p = len(s2)
        if p == 0:
            for q in range(a1 + 1):
                bump(0, q, binom(a1, q))
        elif a1 >= b * a2:
            # consecutive verticals are >= b apart: the shadow is the b
            # edges preceding each chosen vertical, and compatibility is
            # exactly avoiding it
            free = a1 - b * p
            for q in range(free + 1):
                bump(p, q, binom(free, q))
        else:
            rep = shadow(path, s2, b)
            free = a1 - len(rep.sh)
            rsh = tuple(sorted(rep.rsh))
            for t in _subsets(rsh):
                if is_compatible(path, t, s2, b, c):
                    base = len(t)
                    for extra in range(free + 1):
                        bump(p, base + extra, binom(free, extra))
    return grid


# production entry point; the compiled kernel (when built) shadows this
# through rank2greedy.kernel
count_compatible = count_compatible_pruned
