"""Greedy elements from compatible-pair counts, and the broken-line region
that carries their pointed support.

Region membership runs on exact rationals; the boundary convention
(bottom and left sides in, the rest out) decides lattice points on the
nose, so nothing here may round.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dyck import (
    CoeffGrid,
    DEFAULT_EDGE_CAP,
    DyckPath,
    TooLargeError,
    enumerate_compatible_pairs,
)
from .laurent import LaurentPoly2
from . import roots


class NegativeIndexError(ValueError):
    """Greedy elements at negative indices are outside this library's scope."""


class NotImaginaryRootError(ValueError):
    """The operation is only meaningful at a positive imaginary root."""


@dataclass(frozen=True)
class GreedyElement:
    """A greedy element: its compatible-pair grid and pointed Laurent form."""

    b: int
    c: int
    a1: int
    a2: int
    grid: CoeffGrid
    laurent: LaurentPoly2

    def support(self) -> set[tuple[int, int]]:
        return self.grid.support()


_cache: dict[tuple[int, int, int, int], GreedyElement] = {}


def greedy_element(b: int, c: int, a1: int, a2: int, *,
                   cap: int = DEFAULT_EDGE_CAP, threads: int = 1) -> GreedyElement:
    """The greedy element x[a1, a2] of A(b, c), as an exact Laurent polynomial

        x1^-a1 x2^-a2 * sum over compatible pairs of x1^(b|S2|) x2^(c|S1|).

    Results are memoized per (b, c, a1, a2); grids do not depend on threads.
    """
    if b < 1 or c < 1:
        raise ValueError("Cartan parameters must be positive")
    if a1 < 0 or a2 < 0:
        raise NegativeIndexError(f"greedy index ({a1}, {a2}) has a negative coordinate")
    if a1 + a2 > cap:
        # enforced before the cache so that cap behavior is call-order independent
        raise TooLargeError(a1 + a2, cap)
    key = (b, c, a1, a2)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    grid = enumerate_compatible_pairs(DyckPath(a1, a2), b, c, cap=cap, threads=threads)
    terms = {}
    for p in range(a2 + 1):
        for q in range(a1 + 1):
            count = grid.entry(p, q)
            if count:
                terms[(-a1 + b * p, -a2 + c * q)] = count
    element = GreedyElement(b, c, a1, a2, grid, LaurentPoly2(terms))
    _cache[key] = element
    return element


def clear_cache() -> None:
    _cache.clear()


def pointed_support(element: GreedyElement) -> set[tuple[int, int]]:
    """Grid positions (p, q) with a nonzero compatible-pair count."""
    return element.support()


class RegionP:
    """Region bounded by the broken line (0,0), (a2,0), (a1/b, a2/c), (0,a1).

    The sides [(0,0),(a2,0)] and [(0,a1),(0,0)] belong to the region; the two
    segments through the middle vertex do not (their endpoints on the axes do,
    through the included sides).
    """

    def __init__(self, b: int, c: int, a1: int, a2: int):
        if b < 1 or c < 1:
            raise ValueError("Cartan parameters must be positive")
        if a1 < 0 or a2 < 0:
            raise ValueError("region needs nonnegative a1, a2")
        self.b = b
        self.c = c
        self.a1 = a1
        self.a2 = a2
        self.vertex = (Fraction(a1, b), Fraction(a2, c))

    def contains(self, p, q) -> bool:
        x = Fraction(p)
        y = Fraction(q)
        if x < 0 or y < 0:
            return False
        if y == 0:
            return x <= self.a2
        if x == 0:
            return y <= self.a1
        k = (Fraction(self.a2), Fraction(0))
        m = (Fraction(0), Fraction(self.a1))
        if _on_segment(k, self.vertex, (x, y)) or _on_segment(self.vertex, m, (x, y)):
            return False
        return _strictly_inside((x, y), [(Fraction(0), Fraction(0)), k, self.vertex, m])

    def lattice_points(self) -> set[tuple[int, int]]:
        x_hi = max(Fraction(self.a2), self.vertex[0])
        y_hi = max(Fraction(self.a1), self.vertex[1])
        out = set()
        for p in range(int(x_hi) + 1):
            for q in range(int(y_hi) + 1):
                if self.contains(p, q):
                    out.add((p, q))
        return out


def _on_segment(a, b, pt) -> bool:
    (ax, ay), (bx, by), (px, py) = a, b, pt
    if ax == bx and ay == by:
        return px == ax and py == ay
    cross = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
    if cross != 0:
        return False
    dot = (px - ax) * (bx - ax) + (py - ay) * (by - ay)
    if dot < 0:
        return False
    return dot <= (bx - ax) ** 2 + (by - ay) ** 2


def _strictly_inside(pt, polygon) -> bool:
    """Ray casting (+x direction) with exact rationals.  The point must not
    lie on the boundary; zero-length and horizontal edges are skipped, and
    each edge counts its lower endpoint only."""
    px, py = pt
    crossings = 0
    nverts = len(polygon)
    for i in range(nverts):
        ax, ay = polygon[i]
        bx, by = polygon[(i + 1) % nverts]
        if ay == by:
            continue
        if ay > by:
            ax, ay, bx, by = bx, by, ax, ay
        if not ay <= py < by:
            continue
        x_cross = ax + (py - ay) * (bx - ax) / (by - ay)
        if x_cross > px:
            crossings += 1
    return crossings % 2 == 1


def region_lattice_points(region: RegionP) -> set[tuple[int, int]]:
    return region.lattice_points()


def support_equals_region(b: int, c: int, a1: int, a2: int, *,
                          cap: int = DEFAULT_EDGE_CAP, threads: int = 1) -> bool:
    """Whether the pointed support of x[a1, a2] is exactly the lattice-point
    set of the region.  Only stated (and only checked) at positive imaginary
    roots."""
    if not roots.is_imaginary(b, c, (a1, a2)):
        raise NotImaginaryRootError(f"({a1}, {a2}) is not a positive imaginary root of A({b}, {c})")
    element = greedy_element(b, c, a1, a2, cap=cap, threads=threads)
    return element.support() == RegionP(b, c, a1, a2).lattice_points()


def imaginary_triangle_check(b: int, c: int, a1: int, a2: int) -> bool:
    """Whether the middle vertex (a1/b, a2/c) lies inside or on the triangle
    with corners (0,0), (a2,0), (0,a1); equivalent to (a1, a2) being a
    positive imaginary root."""
    if a1 <= 0 or a2 <= 0:
        raise ValueError("triangle test needs positive a1, a2")
    x = Fraction(a1, b)
    y = Fraction(a2, c)
    return x >= 0 and y >= 0 and a1 * x + a2 * y <= a1 * a2
