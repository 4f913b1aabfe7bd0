"""Maximal Dyck paths, cyclic subpaths, compatibility, and pair enumeration.

The compatibility test for a single subset pair walks the path with prefix
sums.  Full enumeration over all 2^(a1+a2) candidate pairs is the expensive
step; it runs through a bitmask kernel vectorized over the larger subset
space (numpy), optionally split over worker processes.  Both routes implement
the same separation condition and are cross-checked in the tests.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

DEFAULT_EDGE_CAP = 26

_CHUNK_BITS = 14  # vectorized axis is processed in chunks of 2^14 masks


class TooLargeError(ValueError):
    """Enumeration refused: a1 + a2 exceeds the configured cap."""

    def __init__(self, edges: int, cap: int):
        super().__init__(f"path has {edges} edges, enumeration cap is {cap}")
        self.edges = edges
        self.cap = cap


class PointNotOnPathError(ValueError):
    """A lattice point handed to a subpath query is not on the path."""


class OutOfRangeError(ValueError):
    """Edge index or extremal-pair size outside the path dimensions."""


class PrecedenceViolatedError(ValueError):
    """The fast extremal check needs a1*p + a2*q < a1*a2 + a1 + a2."""


class DyckPath:
    """The maximal Dyck path of type a1 x a2.

    Horizontal edges u_1..u_a1 are indexed left to right, vertical edges
    v_1..v_a2 bottom to top (1-based, as are all public edge indices).
    The horizontal edge u_q sits at height floor((q-1)*a2/a1); everything
    else is derived from that profile.  (0,0) and (a1,a2) are one point.
    """

    __slots__ = ("a1", "a2", "steps", "points", "h_pos", "v_pos", "_point_index",
                 "_cum_h", "_cum_v")

    def __init__(self, a1: int, a2: int):
        if a1 < 0 or a2 < 0:
            raise OutOfRangeError("path dimensions must be nonnegative")
        self.a1 = a1
        self.a2 = a2
        steps: list[str] = []
        if a1 == 0:
            steps = ["V"] * a2
        else:
            for q in range(1, a1 + 1):
                steps.append("H")
                reach = a2 if q == a1 else (q * a2) // a1
                steps.extend("V" * (reach - ((q - 1) * a2) // a1))
        self.steps = "".join(steps)

        points = [(0, 0)]
        x = y = 0
        for s in self.steps:
            if s == "H":
                x += 1
            else:
                y += 1
            points.append((x, y))
        self.points = tuple(points)

        self.h_pos = tuple(i for i, s in enumerate(self.steps) if s == "H")
        self.v_pos = tuple(i for i, s in enumerate(self.steps) if s == "V")

        n = a1 + a2
        index = {pt: i for i, pt in enumerate(points[:n])} if n else {(0, 0): 0}
        if n:
            index[(a1, a2)] = 0  # endpoint identification
        self._point_index = index

        # doubled prefix sums of H / V steps for O(1) cyclic interval counts
        cum_h = [0]
        cum_v = [0]
        for s in self.steps * 2:
            cum_h.append(cum_h[-1] + (s == "H"))
            cum_v.append(cum_v[-1] + (s == "V"))
        self._cum_h = tuple(cum_h)
        self._cum_v = tuple(cum_v)

    @property
    def length(self) -> int:
        return self.a1 + self.a2

    def point_position(self, point: tuple[int, int]) -> int:
        """Cyclic position (0..n-1) of a lattice point on the path."""
        try:
            return self._point_index[point]
        except KeyError:
            raise PointNotOnPathError(f"{point} is not on D^{{{self.a1}x{self.a2}}}") from None

    def on_path(self, point: tuple[int, int]) -> bool:
        return point in self._point_index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DyckPath):
            return NotImplemented
        return (self.a1, self.a2) == (other.a1, other.a2)

    def __repr__(self) -> str:
        return f"DyckPath({self.a1}, {self.a2}, {self.steps!r})"


def max_dyck_path(a1: int, a2: int) -> DyckPath:
    """The unique maximal Dyck path of type a1 x a2 (empty path for (0,0))."""
    return DyckPath(a1, a2)


@dataclass(frozen=True)
class EdgeSet:
    """A set of path edges split into horizontal and vertical indices (1-based)."""

    horizontals: frozenset[int]
    verticals: frozenset[int]

    def __len__(self) -> int:
        return len(self.horizontals) + len(self.verticals)


@dataclass(frozen=True)
class SubsetPair:
    """Candidate pair (S1 subset of horizontals, S2 subset of verticals) as bitmasks.

    Bit i-1 of a mask stands for edge index i.
    """

    s1: int
    s2: int

    @classmethod
    def from_indices(cls, s1: Sequence[int], s2: Sequence[int], a1: int, a2: int) -> "SubsetPair":
        m1 = m2 = 0
        for i in s1:
            if not 1 <= i <= a1:
                raise OutOfRangeError(f"horizontal edge u_{i} outside 1..{a1}")
            m1 |= 1 << (i - 1)
        for j in s2:
            if not 1 <= j <= a2:
                raise OutOfRangeError(f"vertical edge v_{j} outside 1..{a2}")
            m2 |= 1 << (j - 1)
        return cls(m1, m2)

    def s1_indices(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.s1.bit_length()) if self.s1 >> i & 1)

    def s2_indices(self) -> tuple[int, ...]:
        return tuple(j + 1 for j in range(self.s2.bit_length()) if self.s2 >> j & 1)

    @property
    def size(self) -> tuple[int, int]:
        return (self.s1.bit_count(), self.s2.bit_count())


class CoeffGrid:
    """Counts of compatible pairs: entry (p, q) = #pairs with |S2| = p, |S1| = q."""

    __slots__ = ("a1", "a2", "counts")

    def __init__(self, a1: int, a2: int, counts: Sequence[Sequence[int]]):
        self.a1 = a1
        self.a2 = a2
        self.counts = tuple(tuple(int(x) for x in row) for row in counts)
        if len(self.counts) != a2 + 1 or any(len(r) != a1 + 1 for r in self.counts):
            raise ValueError("grid shape must be (a2+1) x (a1+1)")

    def entry(self, p: int, q: int) -> int:
        if 0 <= p <= self.a2 and 0 <= q <= self.a1:
            return self.counts[p][q]
        return 0

    def support(self) -> set[tuple[int, int]]:
        return {(p, q) for p in range(self.a2 + 1) for q in range(self.a1 + 1)
                if self.counts[p][q]}

    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.counts]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoeffGrid):
            return NotImplemented
        return (self.a1, self.a2, self.counts) == (other.a1, other.a2, other.counts)

    def __repr__(self) -> str:
        return f"CoeffGrid({self.a1}, {self.a2}, {self.to_lists()!r})"


# ---------------------------------------------------------------------------
# subpaths
# ---------------------------------------------------------------------------

def subpath_edges(path: DyckPath, a_pt: tuple[int, int], b_pt: tuple[int, int]) -> EdgeSet:
    """Edge set of the subpath from A to B, continuing from (0,0) after (a1,a2).

    For A = B the subpath is the whole loop: it leaves A, passes (a1,a2),
    and comes back to A.
    """
    i, j = a_pt
    ip, jp = b_pt
    if not path.on_path(a_pt):
        raise PointNotOnPathError(f"{a_pt} is not on the path")
    if not path.on_path(b_pt):
        raise PointNotOnPathError(f"{b_pt} is not on the path")
    full_h = frozenset(range(1, path.a1 + 1))
    full_v = frozenset(range(1, path.a2 + 1))
    if path.point_position(a_pt) == path.point_position(b_pt):
        return EdgeSet(full_h, full_v)
    if i <= ip and j <= jp:  # B to the Northeast of A
        return EdgeSet(frozenset(range(i + 1, ip + 1)), frozenset(range(j + 1, jp + 1)))
    return EdgeSet(full_h - frozenset(range(ip + 1, i + 1)),
                   full_v - frozenset(range(jp + 1, j + 1)))


def _span(path: DyckPath, e: int, f_raw: int) -> int:
    """Forward cyclic endpoint: smallest f > e with f = f_raw (mod n); f = e+n
    when the endpoints coincide (full loop)."""
    n = path.length
    f = f_raw % n
    return f + n if f <= e else f


# ---------------------------------------------------------------------------
# compatibility of a single pair
# ---------------------------------------------------------------------------

def is_compatible(path: DyckPath, pair: SubsetPair, b: int, c: int) -> bool:
    """Separation test for every u in S1, v in S2.

    With E the left endpoint of u and F the upper endpoint of v, the pair
    (u, v) is separated when some lattice point A strictly between E and F
    (cyclically; the corner counts as one point) satisfies

        |(AF)_1| = b * |(AF)_2 & S2|   or   |(EA)_2| = c * |(EA)_1 & S1|.

    Aborts at the first unseparated (u, v).
    """
    if b < 1 or c < 1:
        raise ValueError("compatibility needs b, c >= 1")
    m1, m2 = pair.s1, pair.s2
    if m1 >> path.a1 or m2 >> path.a2:
        raise OutOfRangeError("subset mask has bits beyond the path dimensions")
    if not m1 or not m2:
        return True

    n = path.length
    cum_h, cum_v = path._cum_h, path._cum_v
    # doubled prefix sums of selected edges
    in_s1 = [False] * n
    for i in range(path.a1):
        if m1 >> i & 1:
            in_s1[path.h_pos[i]] = True
    in_s2 = [False] * n
    for j in range(path.a2):
        if m2 >> j & 1:
            in_s2[path.v_pos[j]] = True
    cum_s1 = [0]
    cum_s2 = [0]
    for pos in range(2 * n):
        cum_s1.append(cum_s1[-1] + in_s1[pos % n])
        cum_s2.append(cum_s2[-1] + in_s2[pos % n])

    for i in range(path.a1):
        if not (m1 >> i & 1):
            continue
        e = path.h_pos[i]
        for j in range(path.a2):
            if not (m2 >> j & 1):
                continue
            f = _span(path, e, path.v_pos[j] + 1)
            for a in range(e + 1, f):
                if cum_h[f] - cum_h[a] == b * (cum_s2[f] - cum_s2[a]):
                    break
                if cum_v[a] - cum_v[e] == c * (cum_s1[a] - cum_s1[e]):
                    break
            else:
                return False
    return True


def iter_compatible_pairs(path: DyckPath, b: int, c: int) -> Iterator[SubsetPair]:
    """All compatible pairs by direct scan.  Only sensible for small paths."""
    for m1 in range(1 << path.a1):
        for m2 in range(1 << path.a2):
            pair = SubsetPair(m1, m2)
            if is_compatible(path, pair, b, c):
                yield pair


# ---------------------------------------------------------------------------
# extremal pairs and precedence
# ---------------------------------------------------------------------------

def extremal_pair(path: DyckPath, s1: int, s2: int) -> SubsetPair:
    """First s1 horizontal edges and last s2 vertical edges."""
    if not 0 <= s1 <= path.a1 or not 0 <= s2 <= path.a2:
        raise OutOfRangeError(f"extremal size ({s1}; {s2}) outside "
                              f"({path.a1}; {path.a2})")
    m1 = (1 << s1) - 1
    m2 = ((1 << s2) - 1) << (path.a2 - s2)
    return SubsetPair(m1, m2)


def precedes(a1: int, a2: int, p: int, q: int) -> bool:
    """Whether a1*p + a2*q < a1*a2 + a1 + a2; equivalently, every horizontal
    edge of the size-(q; p) extremal pair precedes every vertical one."""
    return a1 * p + a2 * q < a1 * a2 + a1 + a2


def extremal_fast_check(b: int, c: int, a1: int, a2: int, p: int, q: int) -> bool:
    """Sufficient inequality test for compatibility of the size-(q; p)
    extremal pair.  True implies compatible; False decides nothing."""
    if p < 1 or q < 1:
        raise PrecedenceViolatedError("p and q must be positive")
    if not precedes(a1, a2, p, q):
        raise PrecedenceViolatedError(
            f"a1*p + a2*q = {a1 * p + a2 * q} is not < {a1 * a2 + a1 + a2}")
    rhs1 = (b * p - a1) * a2
    rhs2 = (c * q - a2) * a1
    for pp in range(1, p + 1):
        for qq in range(1, q + 1):
            if (b * a2 - a1) * (pp - 1) - a2 * (qq - 1) > rhs1:
                continue
            if (c * a1 - a2) * (qq - 1) - a1 * (pp - 1) > rhs2:
                continue
            return False
    return True


# ---------------------------------------------------------------------------
# full enumeration
# ---------------------------------------------------------------------------

def enumerate_compatible_pairs(path: DyckPath, b: int, c: int, *,
                               cap: int = DEFAULT_EDGE_CAP,
                               threads: int = 1) -> CoeffGrid:
    """Exact counts c(p, q) of compatible pairs by size.

    Work is partitioned over subsets of the smaller edge class; results from
    any partition merge by integer addition, so grids are bit-identical for
    every thread count.
    """
    if b < 1 or c < 1:
        raise ValueError("enumeration needs b, c >= 1")
    n = path.length
    if n > cap:
        raise TooLargeError(n, cap)
    a1, a2 = path.a1, path.a2
    if a1 == 0 or a2 == 0:
        # no (u, v) constraints: every subset pair is compatible
        counts = [[0] * (a1 + 1) for _ in range(a2 + 1)]
        for p in range(a2 + 1):
            for q in range(a1 + 1):
                counts[p][q] = math.comb(a2, p) * math.comb(a1, q)
        return CoeffGrid(a1, a2, counts)

    tasks = _partition_tasks(a1, a2, max(1, threads))
    if len(tasks) == 1:
        grids = [_enumerate_task(a1, a2, b, c, *tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=max(1, threads)) as pool:
            grids = list(pool.map(_enumerate_partial, [
                (a1, a2, b, c, *task) for task in tasks]))

    counts = [[0] * (a1 + 1) for _ in range(a2 + 1)]
    for grid in grids:
        for p in range(a2 + 1):
            row = counts[p]
            gp = grid[p]
            for q in range(a1 + 1):
                row[q] += int(gp[q])
    return CoeffGrid(a1, a2, counts)


def _partition_tasks(a1: int, a2: int, threads: int) -> list[tuple[int, int, int, int]]:
    """Split work into (outer_lo, outer_hi, chunk_lo, chunk_hi) task tuples."""
    outer_bits = min(a1, a2)
    vec_bits = max(a1, a2)
    n_outer = 1 << outer_bits
    n_chunks = (1 << vec_bits) + ((1 << _CHUNK_BITS) - 1) >> _CHUNK_BITS
    if threads <= 1:
        return [(0, n_outer, 0, n_chunks)]
    if n_chunks >= threads:
        bounds = [round(i * n_chunks / threads) for i in range(threads + 1)]
        return [(0, n_outer, lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
    bounds = [round(i * n_outer / threads) for i in range(threads + 1)]
    return [(lo, hi, 0, n_chunks) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]


def _enumerate_partial(args: tuple) -> list[list[int]]:
    a1, a2, b, c, outer_lo, outer_hi, chunk_lo, chunk_hi = args
    return _enumerate_task(a1, a2, b, c, outer_lo, outer_hi, chunk_lo, chunk_hi)


def _interval_stats(path: DyckPath) -> tuple:
    """Per-edge-pair tables driving both separation conditions.

    For a vertical edge v and point position A: W2[v][A] = bitmask of vertical
    indices in the cyclic edge interval [A, F_v) and len1[v][A] = number of
    horizontal edges there.  Dually W1/len2 for horizontal edges from E_u to A.
    Entries where the interval would be empty (A at the excluded endpoint)
    stay at the never-separates sentinel (-1 target).
    """
    n = path.length
    a1, a2 = path.a1, path.a2
    h_of_pos = [-1] * n
    v_of_pos = [-1] * n
    for i, pos in enumerate(path.h_pos):
        h_of_pos[pos] = i
    for j, pos in enumerate(path.v_pos):
        v_of_pos[pos] = j

    w2 = [[0] * n for _ in range(a2)]
    len1 = [[-1] * n for _ in range(a2)]
    for j in range(a2):
        f = (path.v_pos[j] + 1) % n
        mask = 0
        count_h = 0
        pos = f
        # walk backwards from F so interval [A, F) grows one edge at a time
        for _ in range(n - 1):
            pos = (pos - 1) % n
            if path.steps[pos] == "H":
                count_h += 1
            else:
                mask |= 1 << v_of_pos[pos]
            w2[j][pos] = mask
            len1[j][pos] = count_h

    w1 = [[0] * n for _ in range(a1)]
    len2 = [[-1] * n for _ in range(a1)]
    for i in range(a1):
        e = path.h_pos[i]
        mask = 0
        count_v = 0
        pos = e
        for _ in range(n - 1):
            if path.steps[pos] == "H":
                mask |= 1 << h_of_pos[pos]
            else:
                count_v += 1
            pos = (pos + 1) % n
            w1[i][pos] = mask
            len2[i][pos] = count_v

    interior = [[0] * a2 for _ in range(a1)]
    for i in range(a1):
        e = path.h_pos[i]
        for j in range(a2):
            f = _span(path, e, path.v_pos[j] + 1)
            mask = 0
            for a in range(e + 1, f):
                mask |= 1 << (a % n)
            interior[i][j] = mask
    return w1, len2, w2, len1, interior


def _cond_table(masks: list[list[int]], lengths: list[list[int]], factor: int,
                sel: np.ndarray, popcnt_sel) -> list[np.ndarray]:
    """okay[edge][mask] = bitmask of positions A where the separation equality
    holds, vectorized over the subset masks in `sel`."""
    n = len(masks[0]) if masks else 0
    out = []
    for edge_masks, edge_lens in zip(masks, lengths):
        acc = np.zeros(sel.shape, dtype=np.int64)
        for a in range(n):
            length = edge_lens[a]
            if length < 0 or length % factor:
                continue
            target = length // factor
            hit = popcnt_sel(sel & edge_masks[a]) == target
            acc |= hit.astype(np.int64) << np.int64(a)
        out.append(acc)
    return out


def _enumerate_task(a1: int, a2: int, b: int, c: int,
                    outer_lo: int, outer_hi: int,
                    chunk_lo: int, chunk_hi: int) -> list[list[int]]:
    """Count compatible pairs for outer masks in [outer_lo, outer_hi) against
    vectorized masks in chunks [chunk_lo, chunk_hi).  Returns a plain grid."""
    path = DyckPath(a1, a2)
    w1, len2, w2, len1, interior = _interval_stats(path)

    horizontal_outer = a1 <= a2
    if horizontal_outer:
        outer_bits, vec_bits = a1, a2
        outer_masks_tbl, outer_lens, outer_factor = w1, len2, c
        vec_masks_tbl, vec_lens, vec_factor = w2, len1, b
    else:
        outer_bits, vec_bits = a2, a1
        outer_masks_tbl, outer_lens, outer_factor = w2, len1, b
        vec_masks_tbl, vec_lens, vec_factor = w1, len2, c

    def popcnt(arr: np.ndarray) -> np.ndarray:
        return np.bitwise_count(arr).astype(np.int64)

    # outer-side table once, as plain ints for scalar lookups
    outer_sel = np.arange(1 << outer_bits, dtype=np.int64)
    ok_outer = [col.tolist() for col in
                _cond_table(outer_masks_tbl, outer_lens, outer_factor, outer_sel, popcnt)]
    outer_pc = [m.bit_count() for m in range(1 << outer_bits)]
    outer_bit_lists = [[e for e in range(outer_bits) if m >> e & 1]
                       for m in range(1 << outer_bits)]

    grid = np.zeros((a2 + 1, a1 + 1), dtype=np.int64)
    chunk = 1 << _CHUNK_BITS
    for ci in range(chunk_lo, chunk_hi):
        lo = ci * chunk
        hi = min(lo + chunk, 1 << vec_bits)
        if lo >= hi:
            continue
        sel = np.arange(lo, hi, dtype=np.int64)
        pc_vec = popcnt(sel)
        ok_vec = _cond_table(vec_masks_tbl, vec_lens, vec_factor, sel, popcnt)

        vec_range = range(vec_bits)
        for m_out in range(outer_lo, outer_hi):
            edges = outer_bit_lists[m_out]
            if not edges:
                cnt = np.bincount(pc_vec, minlength=vec_bits + 1)
            else:
                bad = np.zeros(sel.shape, dtype=np.int64)
                for eo in edges:
                    oko = ok_outer[eo][m_out]
                    for ev in vec_range:
                        ef = (interior[eo][ev] if horizontal_outer
                              else interior[ev][eo])
                        fail = ((ok_vec[ev] | oko) & ef) == 0
                        bad |= fail.astype(np.int64) << np.int64(ev)
                good = (bad & sel) == 0
                cnt = np.bincount(pc_vec[good], minlength=vec_bits + 1)
            if horizontal_outer:
                grid[: vec_bits + 1, outer_pc[m_out]] += cnt
            else:
                grid[outer_pc[m_out], : vec_bits + 1] += cnt
    return grid.tolist()
