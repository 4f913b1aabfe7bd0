"""Cartan data A(b, c): quadratic form, imaginary roots, simple reflections,
alternating Weyl words, and the three integer sequences that index the
positivity witnesses, together with their identity suite.

Sequence values grow geometrically; everything stays in Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class NotWildError(ValueError):
    """The operation needs the wild case bc > 4."""


class IdentityViolatedError(AssertionError):
    """One of the sequence identities failed; this signals an implementation bug."""

    def __init__(self, k: int, which: str):
        super().__init__(f"identity {which} failed at k = {k}")
        self.k = k
        self.which = which


@dataclass(frozen=True)
class CartanParams:
    b: int
    c: int

    def __post_init__(self):
        if self.b < 1 or self.c < 1:
            raise ValueError("Cartan parameters must be positive")

    @property
    def kind(self) -> str:
        bc = self.b * self.c
        if bc < 4:
            return "finite"
        if bc == 4:
            return "affine"
        return "wild"


def quadratic_form(b: int, c: int, v: tuple[int, int]) -> int:
    """c*a1^2 - b*c*a1*a2 + b*a2^2, invariant under both reflections."""
    a1, a2 = v
    return c * a1 * a1 - b * c * a1 * a2 + b * a2 * a2


def is_imaginary(b: int, c: int, v: tuple[int, int]) -> bool:
    """Positive imaginary root: both coordinates positive and Q <= 0."""
    a1, a2 = v
    return a1 > 0 and a2 > 0 and quadratic_form(b, c, v) <= 0


def reflect(b: int, c: int, i: int, v: tuple[int, int]) -> tuple[int, int]:
    """Simple reflections: s1(a1,a2) = (a1, c*a1 - a2), s2(a1,a2) = (b*a2 - a1, a2)."""
    a1, a2 = v
    if i == 1:
        return (a1, c * a1 - a2)
    if i == 2:
        return (b * a2 - a1, a2)
    raise ValueError("reflection index must be 1 or 2")


def _reflection_matrix(b: int, c: int, i: int):
    # acting on column vectors (a1, a2)
    return ((1, 0), (c, -1)) if i == 1 else ((-1, b), (0, 1))


def _mat_mul(m, n):
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


@dataclass(frozen=True)
class WeylWord:
    """Alternating word in s1, s2 of a given length, ending in s_branch on the right."""

    branch: int
    length: int
    matrix: tuple[tuple[int, int], tuple[int, int]]

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        a1, a2 = v
        m = self.matrix
        return (m[0][0] * a1 + m[0][1] * a2, m[1][0] * a1 + m[1][1] * a2)

    @property
    def det(self) -> int:
        m = self.matrix
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def weyl_word(b: int, c: int, i: int, k: int) -> WeylWord:
    """w(i; k): k alternating reflection factors with s_i rightmost."""
    if i not in (1, 2):
        raise ValueError("branch must be 1 or 2")
    if k < 0:
        raise ValueError("word length must be nonnegative")
    matrix = ((1, 0), (0, 1))
    which = i
    for _ in range(k):
        matrix = _mat_mul(_reflection_matrix(b, c, which), matrix)
        which = 3 - which
    return WeylWord(i, k, matrix)


def r_value(b: int, c: int, k: int) -> int:
    """The alternating multiplier: b for odd k, c for even k (any sign of k)."""
    return b if k % 2 else c


def recurrence_sequence(b: int, c: int, a0: int, a_minus1: int):
    """Lazy two-sided sequence with a(k) = r(k-1)*a(k-1) - a(k-2),
    seeded by a(0), a(-1)."""
    values = {0: a0, -1: a_minus1}

    def value(k: int) -> int:
        if k in values:
            return values[k]
        if k > 0:
            for j in range(max(values) + 1, k + 1):
                values[j] = r_value(b, c, j - 1) * values[j - 1] - values[j - 2]
        else:
            for j in range(min(values) - 1, k - 1, -1):
                values[j] = r_value(b, c, j + 1) * values[j + 1] - values[j + 2]
        return values[k]

    return value


@dataclass
class Sequences:
    """The three sequences of index pairs, for min(b, c) = c.

    Initial rows:
        min(b, c) > 1:  alpha (1, 1),   beta ((c-1)b+1, c+1),  gamma (b+1, (b-1)c+1)
        c = 1:          alpha (2, 1),   beta (b+2, 3),         gamma (b+2, b-1)

    Values for any k (negative included) extend by the two-sided recurrence.
    """

    b: int
    c: int
    case: str = field(init=False)

    def __post_init__(self):
        if self.c > self.b:
            raise ValueError("sequences assume min(b, c) = c; mirror the input first")
        if self.c == 1:
            self.case = "c1"
            alpha0, alpham1 = 2, 1
            beta0, betam1 = self.b + 2, 3
            gamma0, gammam1 = self.b + 2, self.b - 1
        else:
            self.case = "general"
            alpha0, alpham1 = 1, 1
            beta0, betam1 = (self.c - 1) * self.b + 1, self.c + 1
            gamma0, gammam1 = self.b + 1, (self.b - 1) * self.c + 1
        self.alpha = recurrence_sequence(self.b, self.c, alpha0, alpham1)
        self.beta = recurrence_sequence(self.b, self.c, beta0, betam1)
        self.gamma = recurrence_sequence(self.b, self.c, gamma0, gammam1)

    def r(self, k: int) -> int:
        return r_value(self.b, self.c, k)


def sequences(b: int, c: int) -> Sequences:
    return Sequences(b, c)


def delta(b: int, c: int) -> int:
    """The common determinant value of the sequence identities."""
    if b * c <= 4:
        raise NotWildError(f"A({b}, {c}) is not wild")
    if min(b, c) != c:
        raise ValueError("delta assumes min(b, c) = c; mirror the input first")
    return b * c - b - c if c > 1 else b - 4


_IDENTITY_NAMES = (
    "2a(k-2)+a(k)=B(k-2)",
    "a(k-1)+r(k)a(k)=B(k-1)",
    "2r(k)a(k)-a(k-1)=G(k+1)",
    "a(k)+r(k-1)a(k-1)=G(k)",
    "determinant=delta",
    "a(k)<B(k) for k>=0",
)


def check_identities(b: int, c: int, k_min: int, k_max: int) -> list[dict]:
    """Verify the sequence identity suite over a window of k.

    Uses gamma(k) = alpha(k) + r(k-1) alpha(k-1); the companion identity
    2 r(k) alpha(k) - alpha(k-1) = gamma(k+1) pins the parity, and both are
    cross-checked against delta below.  Raises IdentityViolatedError at the
    first failure; a full report comes back otherwise.
    """
    seq = sequences(b, c)
    d = delta(b, c)
    report: list[dict] = []

    def record(k: int, which: str, ok: bool):
        report.append({"k": k, "identity": which, "pass": bool(ok)})
        if not ok:
            raise IdentityViolatedError(k, which)

    a, bb, g, r = seq.alpha, seq.beta, seq.gamma, seq.r
    for k in range(k_min, k_max + 1):
        record(k, _IDENTITY_NAMES[0], 2 * a(k - 2) + a(k) == bb(k - 2))
        record(k, _IDENTITY_NAMES[1], a(k - 1) + r(k) * a(k) == bb(k - 1))
        record(k, _IDENTITY_NAMES[2], 2 * r(k) * a(k) - a(k - 1) == g(k + 1))
        record(k, _IDENTITY_NAMES[3], a(k) + r(k - 1) * a(k - 1) == g(k))
        d1 = a(k - 1) * bb(k) - a(k) * bb(k - 1)
        d2 = a(k) * g(k - 1) - a(k - 1) * g(k)
        d3 = r(k - 1) * a(k - 1) * a(k + 1) - r(k) * a(k) ** 2
        d4 = (b * c * a(k - 1) * a(k)
              - r(k - 1) * a(k - 1) ** 2 - r(k) * a(k) ** 2)
        record(k, _IDENTITY_NAMES[4], d1 == d2 == d3 == d4 == d and d > 0)
        if k >= 0:
            record(k, _IDENTITY_NAMES[5], a(k) < bb(k))
    return report
