"""Theorem-level checks: the explicit positive element p, its Weyl orbit
p_k, the decomposition checks, the subset-pair injection, and the two
geometric comparison lemmas.

Inputs with b < c are mirrored (swap parameters and index coordinates)
before the sequence machinery runs; verdicts are invariant under the
mirror and the mirrored branch of the Weyl orbit is covered exactly this
way.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import roots
from .dyck import (
    DEFAULT_EDGE_CAP,
    DyckPath,
    SubsetPair,
    TooLargeError,
    is_compatible,
    iter_compatible_pairs,
    max_dyck_path,
)
from .greedy import RegionP, greedy_element
from .laurent import LaurentPoly2


class RangeViolatedError(ValueError):
    """k is below the range in which the same-shape statement holds."""


@dataclass(frozen=True)
class PSpec:
    """The three signed greedy indices of the explicit positive element p."""

    b: int
    c: int
    case: str
    plus_indices: tuple[tuple[int, int], tuple[int, int]]
    minus_index: tuple[int, int]


def build_p(b: int, c: int) -> PSpec:
    """Indices of p = x[i] + x[j] - x[k] for wild A(b, c)."""
    if b * c <= 4:
        raise roots.NotWildError(f"A({b}, {c}) is not wild")
    if min(b, c) > 1:
        return PSpec(b, c, "general",
                     ((b * c - b + 1, c + 1), (b + 1, b * c - c + 1)), (1, 1))
    if c == 1:
        return PSpec(b, c, "c1", ((b + 2, 3), (b + 2, b - 1)), (2, 1))
    return PSpec(b, c, "b1", ((3, c + 2), (c - 1, c + 2)), (1, 2))


@dataclass(frozen=True)
class PkIndices:
    """Everything needed to evaluate p_k: the working algebra (r_{k-1}, r_k)
    and the three greedy index pairs, already mirrored when b < c."""

    b: int
    c: int
    k: int
    algebra: tuple[int, int]
    beta: tuple[int, int]
    gamma: tuple[int, int]
    alpha: tuple[int, int]
    mirrored: bool = False


def pk_indices(b: int, c: int, k: int) -> PkIndices:
    if b * c <= 4:
        raise roots.NotWildError(f"A({b}, {c}) is not wild")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if b < c:
        base = pk_indices(c, b, k)
        return PkIndices(b, c, k,
                         (base.algebra[1], base.algebra[0]),
                         (base.beta[1], base.beta[0]),
                         (base.gamma[1], base.gamma[0]),
                         (base.alpha[1], base.alpha[0]),
                         mirrored=True)
    seq = roots.sequences(b, c)
    algebra = (seq.r(k - 1), seq.r(k))
    return PkIndices(b, c, k, algebra,
                     (seq.beta(k), seq.beta(k - 1)),
                     (seq.gamma(k), seq.gamma(k - 1)),
                     (seq.alpha(k), seq.alpha(k - 1)))


@dataclass
class PkReport:
    indices: PkIndices
    min_coeff: int | None = None
    support_size: int = 0
    positive: bool = False
    skipped: bool = False
    millis: int = 0

    def to_record(self, *, timings: bool = True) -> dict:
        return {
            "check": "p-positivity",
            "b": self.indices.b,
            "c": self.indices.c,
            "k": self.indices.k,
            "algebra": list(self.indices.algebra),
            "beta": list(self.indices.beta),
            "gamma": list(self.indices.gamma),
            "alpha": list(self.indices.alpha),
            "pass": bool(self.positive),
            "min_coeff": None if self.min_coeff is None else str(self.min_coeff),
            "support_size": self.support_size,
            "skipped": self.skipped,
            "millis": self.millis if timings else 0,
        }


def pk_polynomial(b: int, c: int, k: int, *, cap: int = DEFAULT_EDGE_CAP,
                  threads: int = 1) -> tuple[PkIndices, LaurentPoly2]:
    idx = pk_indices(b, c, k)
    ab, ac = idx.algebra
    beta_el = greedy_element(ab, ac, *idx.beta, cap=cap, threads=threads)
    gamma_el = greedy_element(ab, ac, *idx.gamma, cap=cap, threads=threads)
    alpha_el = greedy_element(ab, ac, *idx.alpha, cap=cap, threads=threads)
    return idx, beta_el.laurent + gamma_el.laurent - alpha_el.laurent


def check_pk_positive(b: int, c: int, k: int, *, cap: int = DEFAULT_EDGE_CAP,
                      threads: int = 1) -> PkReport:
    """Evaluate p_k exactly and report its minimum coefficient.

    Positivity here means no negative coefficient and a nonempty support;
    zero coefficients at absent monomials are not failures.
    """
    start = time.monotonic()
    try:
        idx, poly = pk_polynomial(b, c, k, cap=cap, threads=threads)
    except TooLargeError:
        report = PkReport(pk_indices(b, c, k), skipped=True)
        report.millis = int((time.monotonic() - start) * 1000)
        return report
    min_coeff = poly.min_coefficient() if not poly.is_zero else None
    report = PkReport(idx,
                      min_coeff=min_coeff,
                      support_size=len(poly),
                      positive=min_coeff is not None and min_coeff >= 0)
    report.millis = int((time.monotonic() - start) * 1000)
    return report


def _canonical(b: int, c: int) -> tuple[int, int]:
    return (c, b) if b < c else (b, c)


def _eq_monomial(seq: roots.Sequences, k: int) -> LaurentPoly2:
    return LaurentPoly2.monomial(seq.alpha(k - 2), -seq.alpha(k - 1))


def check_eq2(b: int, c: int, k: int, *, cap: int = DEFAULT_EDGE_CAP,
              threads: int = 1) -> bool:
    """The gamma component dominates the witness monomial: the coefficient of
    x1^alpha(k-2) x2^-alpha(k-1) in the gamma greedy element is at least 1."""
    b, c = _canonical(b, c)
    idx = pk_indices(b, c, k)
    seq = roots.sequences(b, c)
    ab, ac = idx.algebra
    gamma_el = greedy_element(ab, ac, *idx.gamma, cap=cap, threads=threads)
    # grid coordinates of the monomial, by inverting the pointed exponent map
    num_p = seq.alpha(k - 2) + idx.gamma[0]
    num_q = idx.gamma[1] - seq.alpha(k - 1)
    if num_p % ab or num_q % ac:
        return False
    p, q = num_p // ab, num_q // ac
    if (p, q) != (2 * seq.alpha(k - 1), seq.alpha(k - 2)):
        raise AssertionError("grid coordinate cross-check failed")
    return gamma_el.grid.entry(p, q) >= 1


def check_eq1(b: int, c: int, k: int, *, cap: int = DEFAULT_EDGE_CAP,
              threads: int = 1) -> bool:
    """beta greedy + witness monomial - alpha greedy has no negative coefficient."""
    b, c = _canonical(b, c)
    idx = pk_indices(b, c, k)
    seq = roots.sequences(b, c)
    ab, ac = idx.algebra
    beta_el = greedy_element(ab, ac, *idx.beta, cap=cap, threads=threads)
    alpha_el = greedy_element(ab, ac, *idx.alpha, cap=cap, threads=threads)
    combo = beta_el.laurent + _eq_monomial(seq, k) - alpha_el.laurent
    return combo.is_zero or combo.min_coefficient() >= 0


@dataclass
class MuReport:
    b: int
    c: int
    k: int
    algebra: tuple[int, int]
    domain_size: int = 0
    image_incompatible: int = 0
    injectivity_collisions: int = 0
    size_violations: int = 0
    millis: int = 0

    @property
    def passed(self) -> bool:
        return (self.image_incompatible == 0 and self.injectivity_collisions == 0
                and self.size_violations == 0)

    def to_record(self, *, timings: bool = True) -> dict:
        return {
            "check": "mu-injection",
            "b": self.b, "c": self.c, "k": self.k,
            "algebra": list(self.algebra),
            "domain_size": self.domain_size,
            "image_incompatible": self.image_incompatible,
            "injectivity_collisions": self.injectivity_collisions,
            "size_violations": self.size_violations,
            "pass": self.passed,
            "min_coeff": None,
            "skipped": False,
            "millis": self.millis if timings else 0,
        }


def mu_map(b: int, c: int, k: int, *, cap: int = DEFAULT_EDGE_CAP) -> MuReport:
    """Check the shift-and-pad injection, pair by pair.

    Domain: compatible pairs on the alpha path minus the single excluded pair
    (empty S1, all vertical edges).  A pair (S1, S2) maps to:
        S1' = first alpha(k) horizontals + S1 shifted right by alpha(k),
        S2' = S2 shifted up by alpha(k-1) + verticals above 2*alpha(k-1).
    The image must be compatible on the beta path, the map injective, and
    the sizes must grow by exactly alpha(k) and alpha(k+1).
    """
    start = time.monotonic()
    b, c = _canonical(b, c)
    idx = pk_indices(b, c, k)
    seq = roots.sequences(b, c)
    ab, ac = idx.algebra
    alpha_k, alpha_km1 = idx.alpha
    beta_k, beta_km1 = idx.beta
    alpha_kp1 = seq.alpha(k + 1)

    domain_path = DyckPath(alpha_k, alpha_km1)
    if domain_path.length > cap:
        raise TooLargeError(domain_path.length, cap)
    image_path = DyckPath(beta_k, beta_km1)

    excluded = SubsetPair(0, (1 << alpha_km1) - 1)
    report = MuReport(b, c, k, (ab, ac))
    seen: set[tuple[int, int]] = set()
    prefix1 = (1 << alpha_k) - 1
    tail2 = ((1 << (beta_km1 - 2 * alpha_km1)) - 1) << (2 * alpha_km1)
    for pair in iter_compatible_pairs(domain_path, ab, ac):
        if pair == excluded:
            continue
        report.domain_size += 1
        image = SubsetPair(prefix1 | (pair.s1 << alpha_k),
                           (pair.s2 << alpha_km1) | tail2)
        key = (image.s1, image.s2)
        if key in seen:
            report.injectivity_collisions += 1
        seen.add(key)
        s1, s2 = pair.size
        im1, im2 = image.size
        if im1 != s1 + alpha_k or im2 != s2 + alpha_kp1:
            report.size_violations += 1
        if not is_compatible(image_path, image, ab, ac):
            report.image_incompatible += 1
    report.millis = int((time.monotonic() - start) * 1000)
    return report


def check_support_comparison(b: int, c: int, k: int) -> bool:
    """Pointed support of the alpha element, minus its bottom-right corner,
    sits inside the translated support of the beta element.

    Both supports come from the region lattice points, which the support
    theorem makes exact at imaginary roots; no enumeration is needed.
    """
    b, c = _canonical(b, c)
    idx = pk_indices(b, c, k)
    seq = roots.sequences(b, c)
    ab, ac = idx.algebra
    alpha_support = RegionP(ab, ac, *idx.alpha).lattice_points()
    beta_support = RegionP(ab, ac, *idx.beta).lattice_points()
    shift = (seq.alpha(k + 1), seq.alpha(k))
    translated = {(p - shift[0], q - shift[1]) for (p, q) in beta_support}
    corner = (seq.alpha(k - 1), 0)
    return (alpha_support - {corner}) <= translated


def check_same_shape(b: int, c: int, k: int) -> bool:
    """The corner detour of the beta path reproduces the alpha path.

    Valid for k >= 1 when min(b, c) > 1 and k >= 2 when c = 1; below that
    range the statement is not made and RangeViolatedError is raised.
    Also asserts the stated positions of the marker points relative to the
    main diagonal of the beta rectangle.
    """
    b, c = _canonical(b, c)
    idx = pk_indices(b, c, k)
    seq = roots.sequences(b, c)
    k_lo = 1 if seq.case == "general" else 2
    if k < k_lo:
        raise RangeViolatedError(f"same-shape statement needs k >= {k_lo} for this case")

    alpha_k, alpha_km1 = idx.alpha
    beta_k, beta_km1 = idx.beta
    path = DyckPath(beta_k, beta_km1)

    def above(pt: tuple[int, int]) -> bool:
        return pt[1] * beta_k > pt[0] * beta_km1

    def below(pt: tuple[int, int]) -> bool:
        return pt[1] * beta_k < pt[0] * beta_km1

    point_b = (alpha_k, alpha_km1)
    point_c = (2 * alpha_k, 2 * alpha_km1)
    g_prime = (alpha_k + 1, alpha_km1)
    h_prime = (2 * alpha_k, 2 * alpha_km1 - 1)
    b_prime = path.points[path.h_pos[alpha_k]]  # left endpoint of u'_{alpha(k)+1}

    if not (above(point_b) and above(point_c)):
        return False
    if b_prime != (alpha_k, alpha_km1 - 1) or not below(b_prime):
        return False
    if not (below(g_prime) and below(h_prime)):
        return False
    if not (path.on_path(g_prime) and path.on_path(h_prime)):
        return False

    start = path.points.index(g_prime)
    stop = path.points.index(h_prime)
    if stop < start:
        return False
    detour = "H" + path.steps[start:stop] + "V"
    return detour == max_dyck_path(alpha_k, alpha_km1).steps
