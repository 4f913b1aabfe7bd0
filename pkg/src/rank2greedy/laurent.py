"""Sparse two-variable Laurent polynomials over arbitrary-precision integers.

Values are immutable after construction and safe to share between threads.
Coefficients are Python ints throughout; nothing here ever rounds.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Optional


class NotDivisibleError(ArithmeticError):
    """Exact division failed: the divisor does not divide the dividend."""


class EmptyPolynomialError(ValueError):
    """An operation that needs at least one term was given the zero polynomial."""


ExponentPair = tuple[int, int]


class LaurentPoly2:
    """A Laurent polynomial in x1, x2 stored as {(e1, e2): coefficient}.

    Canonical sparse form: no zero coefficients are stored and each exponent
    pair appears once.  Exponents may be negative.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ExponentPair, int] | Iterable[tuple[ExponentPair, int]] = ()):
        cleaned: dict[ExponentPair, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (e1, e2), coeff in items:
            if coeff == 0:
                continue
            key = (int(e1), int(e2))
            new = cleaned.get(key, 0) + int(coeff)
            if new:
                cleaned[key] = new
            else:
                cleaned.pop(key, None)
        self._terms = cleaned

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, e1: int, e2: int, coeff: int = 1) -> "LaurentPoly2":
        return cls({(e1, e2): coeff})

    # -- basic structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> Iterator[tuple[ExponentPair, int]]:
        """Terms in canonical order: lexicographic by (e1, e2)."""
        return iter(sorted(self._terms.items()))

    def coefficient(self, e1: int, e2: int) -> int:
        return self._terms.get((e1, e2), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            new = out.get(key, 0) + coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        result = LaurentPoly2.__new__(LaurentPoly2)
        result._terms = out
        return result

    def __neg__(self) -> "LaurentPoly2":
        result = LaurentPoly2.__new__(LaurentPoly2)
        result._terms = {key: -coeff for key, coeff in self._terms.items()}
        return result

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        if len(self._terms) > len(other._terms):
            self, other = other, self
        out: dict[ExponentPair, int] = {}
        for (a1, a2), ca in self._terms.items():
            for (b1, b2), cb in other._terms.items():
                key = (a1 + b1, a2 + b2)
                new = out.get(key, 0) + ca * cb
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        result = LaurentPoly2.__new__(LaurentPoly2)
        result._terms = out
        return result

    def __pow__(self, n: int) -> "LaurentPoly2":
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly2.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shifted(self, d1: int, d2: int) -> "LaurentPoly2":
        """Multiply by the monomial x1^d1 x2^d2."""
        result = LaurentPoly2.__new__(LaurentPoly2)
        result._terms = {(e1 + d1, e2 + d2): c for (e1, e2), c in self._terms.items()}
        return result

    def exact_div(self, divisor: "LaurentPoly2") -> "LaurentPoly2":
        """Return q with q * divisor == self, exactly, over Z[x1^, x2^].

        Monomials are units of the Laurent ring, so the only obstructions are
        the non-monomial content of the divisor and integer coefficient
        divisibility.  The division runs column-by-column in x1 (leading
        column first); each column quotient is a univariate exact division
        over Z[x2^].  Degree bounds in x1 and x2 are exact because the
        coefficient rings are integral domains, which both guarantees
        termination and detects non-divisibility.

        Raises NotDivisibleError when no Laurent quotient exists.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly2.zero()

        f_cols = _columns(self._terms)
        g_cols = _columns(divisor._terms)
        g_hi = max(g_cols)
        g_lead = g_cols[g_hi]
        q_lo_bound = min(f_cols) - min(g_cols)

        rem = {e1: dict(col) for e1, col in f_cols.items()}
        quotient: dict[ExponentPair, int] = {}
        while rem:
            r_hi = max(rem)
            q_e1 = r_hi - g_hi
            if q_e1 < q_lo_bound:
                raise NotDivisibleError("quotient degree bound violated in x1")
            q_col = _exact_div_univariate(rem[r_hi], g_lead)
            for e2, coeff in q_col.items():
                quotient[(q_e1, e2)] = coeff
            for g_e1, g_col in g_cols.items():
                target = rem.setdefault(q_e1 + g_e1, {})
                for g_e2, gc in g_col.items():
                    for q_e2, qc in q_col.items():
                        e2 = g_e2 + q_e2
                        new = target.get(e2, 0) - gc * qc
                        if new:
                            target[e2] = new
                        else:
                            target.pop(e2, None)
                if not target:
                    del rem[q_e1 + g_e1]
        return LaurentPoly2(quotient)

    # -- predicates --------------------------------------------------------

    def min_coefficient(self) -> int:
        """Minimum stored coefficient.  Absent monomials do not count as zeros."""
        if not self._terms:
            raise EmptyPolynomialError("zero polynomial has no coefficients")
        return min(self._terms.values())

    def pointed_at(self, b: int, c: int) -> Optional[ExponentPair]:
        """Return (a1, a2) if self = x1^-a1 x2^-a2 (1 + sum c(p,q) x1^(bp) x2^(cq))
        with p, q >= 0, else None."""
        if not self._terms:
            return None
        if b < 1 or c < 1:
            raise ValueError("pointedness needs b, c >= 1")
        a1 = -min(e1 for e1, _ in self._terms)
        a2 = -min(e2 for _, e2 in self._terms)
        if self._terms.get((-a1, -a2)) != 1:
            return None
        for e1, e2 in self._terms:
            if (e1 + a1) % b or (e2 + a2) % c:
                return None
        return (a1, a2)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        """Canonical JSON form; coefficients as decimal strings to survive
        64-bit JSON consumers."""
        return {
            "terms": [
                {"e1": e1, "e2": e2, "coeff": str(coeff)}
                for (e1, e2), coeff in self.terms()
            ]
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "LaurentPoly2":
        return cls({(int(t["e1"]), int(t["e2"])): int(t["coeff"]) for t in data["terms"]})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (e1, e2), coeff in self.terms():
            factors = []
            if e1:
                factors.append(f"x1^{e1}" if e1 != 1 else "x1")
            if e2:
                factors.append(f"x2^{e2}" if e2 != 1 else "x2")
            mag = abs(coeff)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            term = "*".join(factors)
            if not parts:
                parts.append(term if coeff > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if coeff > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly2({dict(sorted(self._terms.items()))!r})"


def _columns(terms: Mapping[ExponentPair, int]) -> dict[int, dict[int, int]]:
    """Group terms by x1-exponent: e1 -> {e2: coeff}."""
    cols: dict[int, dict[int, int]] = {}
    for (e1, e2), coeff in terms.items():
        cols.setdefault(e1, {})[e2] = coeff
    return cols


def _exact_div_univariate(f: dict[int, int], g: dict[int, int]) -> dict[int, int]:
    """Exact division of univariate Laurent polynomials over Z (dicts e -> coeff)."""
    g_hi = max(g)
    g_top = g[g_hi]
    lo_bound = min(f) - min(g)
    rem = dict(f)
    out: dict[int, int] = {}
    while rem:
        r_hi = max(rem)
        q_e = r_hi - g_hi
        if q_e < lo_bound:
            raise NotDivisibleError("quotient degree bound violated in x2")
        if rem[r_hi] % g_top:
            raise NotDivisibleError("leading coefficient does not divide")
        qc = rem[r_hi] // g_top
        out[q_e] = qc
        for g_e, gc in g.items():
            e = q_e + g_e
            new = rem.get(e, 0) - qc * gc
            if new:
                rem[e] = new
            else:
                rem.pop(e, None)
    return out


X1 = LaurentPoly2.monomial(1, 0)
X2 = LaurentPoly2.monomial(0, 1)
ONE = LaurentPoly2.one()
