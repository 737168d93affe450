"""Exact arithmetic in SL(2, Z): orders, trace classes, m-th roots and
conjugacy labels of torsion elements.

Twist convention: tau_a -> [[1,1],[0,1]], tau_b -> [[1,0],[-1,1]] acting on
H_1 of the torus with <a, b> = +1. The torsion representatives below are
products of these two matrices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable

from .polynomial import IntPolynomial
from .sentinels import INFINITE


@dataclass(frozen=True, order=True)
class Sl2Matrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise TypeError(f"entry {name} must be an int")
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self.rows()} is not 1")

    @classmethod
    def from_rows(cls, rows) -> "Sl2Matrix":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    @classmethod
    def identity(cls) -> "Sl2Matrix":
        return cls(1, 0, 0, 1)

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    @property
    def trace(self) -> int:
        return self.a + self.d

    def max_entry(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def __matmul__(self, other: "Sl2Matrix") -> "Sl2Matrix":
        return Sl2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "Sl2Matrix":
        return Sl2Matrix(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "Sl2Matrix":
        return Sl2Matrix(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "Sl2Matrix":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = Sl2Matrix.identity()
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def conjugate_by(self, p: "Sl2Matrix") -> "Sl2Matrix":
        """Return p * self * p^-1."""
        return p @ self @ p.inverse()

    def is_central(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def __repr__(self):
        return f"Sl2Matrix({self.rows()})"


IDENTITY = Sl2Matrix(1, 0, 0, 1)
MINUS_IDENTITY = Sl2Matrix(-1, 0, 0, -1)
TAU_A = Sl2Matrix(1, 1, 0, 1)
TAU_B = Sl2Matrix(1, 0, -1, 1)


# -- orders and trace classes -------------------------------------------------

def element_order(m: Sl2Matrix):
    """Smallest k >= 1 with m**k == I, or INFINITE.

    Finite orders in SL(2, Z) are bounded by 6, so six multiplications
    settle the question.
    """
    power = m
    for k in range(1, 7):
        if power == IDENTITY:
            return k
        power = power @ m
    return INFINITE


@dataclass(frozen=True)
class TraceClass:
    tag: str
    sign: int | None = None

    def __str__(self):
        if self.tag == "Central":
            return f"Central({'+' if self.sign > 0 else '-'})"
        return self.tag


CENTRAL_PLUS = TraceClass("Central", 1)
CENTRAL_MINUS = TraceClass("Central", -1)
ELLIPTIC = TraceClass("Elliptic")
PARABOLIC = TraceClass("Parabolic")
HYPERBOLIC = TraceClass("Hyperbolic")


def trace_classify(m: Sl2Matrix) -> TraceClass:
    if m == IDENTITY:
        return CENTRAL_PLUS
    if m == MINUS_IDENTITY:
        return CENTRAL_MINUS
    t = abs(m.trace)
    if t <= 1:
        return ELLIPTIC
    if t == 2:
        return PARABOLIC
    return HYPERBOLIC


# -- trace polynomials ---------------------------------------------------------

@lru_cache(maxsize=None)
def _trace_poly(k: int) -> IntPolynomial:
    if k == 0:
        return IntPolynomial()
    if k == 1:
        return IntPolynomial((1,))
    return IntPolynomial.x() * _trace_poly(k - 1) - _trace_poly(k - 2)


def trace_polynomials(m: int):
    """Return (p_{m-1}, p_m) with R**m = p_m(t) R - p_{m-1}(t) I, t = tr R."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return _trace_poly(m - 1), _trace_poly(m)


def power_trace_polynomial(m: int) -> IntPolynomial:
    """q_m(t) = t p_m(t) - 2 p_{m-1}(t), the trace of R**m as a function of tr R."""
    pm1, pm = trace_polynomials(m)
    return IntPolynomial.x() * pm - 2 * pm1


def cauchy_bound(poly: IntPolynomial) -> int:
    """1 + max |c_i| over non-leading coefficients of a monic polynomial."""
    if poly.leading() != 1:
        raise ValueError("Cauchy bound is taken on a monic polynomial")
    rest = poly.coeffs[:-1]
    return 1 + max((abs(c) for c in rest), default=0)


def integer_roots_of_trace_equation(m: int, target: int) -> list[int]:
    """All integers t with q_m(t) = target.

    The search interval is [-B, B] with B the Cauchy bound of the monic
    polynomial q_m - target. Inside it, |t| <= 1 is checked directly and
    |t| >= 2 by bisection: there q_m(t) = lam**m + lam**-m with
    lam = (t + sqrt(t^2-4))/2 for t >= 2, which is strictly increasing, and
    q_m(-t) = (-1)**m q_m(t).
    """
    q = power_trace_polynomial(m)
    shifted = q - target
    bound = cauchy_bound(shifted)
    roots = [t for t in (-1, 0, 1) if q(t) == target]

    def search_positive(goal):
        lo, hi = 2, bound
        if lo > hi:
            return None
        while lo < hi:
            mid = (lo + hi) // 2
            if q(mid) < goal:
                lo = mid + 1
            else:
                hi = mid
        return lo if q(lo) == goal else None

    t_pos = search_positive(target)
    if t_pos is not None:
        roots.append(t_pos)
    # q_m(-t) = target  <=>  q_m(t) = (-1)^m target
    t_neg = search_positive(target if m % 2 == 0 else -target)
    if t_neg is not None:
        roots.append(-t_neg)
    return sorted(set(roots))


# -- torsion labels -------------------------------------------------------------

_ALPHA = TAU_A @ TAU_B
_BETA = TAU_A @ TAU_B @ TAU_A


class TorsionLabel(enum.Enum):
    Id = "Id"
    Delta = "Delta"
    Alpha = "Alpha"
    AlphaInv = "AlphaInv"
    AlphaSq = "AlphaSq"
    AlphaSqInv = "AlphaSqInv"
    Beta = "Beta"
    BetaInv = "BetaInv"

    @property
    def representative(self) -> Sl2Matrix:
        return TORSION_REPRESENTATIVES[self]

    @property
    def order(self) -> int:
        return element_order(self.representative)


TORSION_REPRESENTATIVES = {
    TorsionLabel.Id: IDENTITY,
    TorsionLabel.Delta: _ALPHA ** 3,
    TorsionLabel.Alpha: _ALPHA,
    TorsionLabel.AlphaInv: _ALPHA ** -1,
    TorsionLabel.AlphaSq: _ALPHA ** 2,
    TorsionLabel.AlphaSqInv: _ALPHA ** -2,
    TorsionLabel.Beta: _BETA,
    TorsionLabel.BetaInv: _BETA ** -1,
}


def quadratic_form(m: Sl2Matrix):
    """Coefficients (A, B, C) of Q_M(x, y) = c x^2 + (d - a) x y - b y^2.

    Q_M(v) = det[v | M v], so conjugating M by P replaces Q_M by Q_M o P^-1.
    """
    return m.c, m.d - m.a, -m.b


def form_sign(m: Sl2Matrix) -> int:
    """Definiteness sign of Q_M for elliptic M (0 for the zero form)."""
    A, B, C = quadratic_form(m)
    if A == B == C == 0:
        return 0
    if B * B - 4 * A * C >= 0:
        raise ValueError("form is not definite")
    return 1 if A > 0 else -1


def _torsion_key(m: Sl2Matrix):
    return element_order(m), m.trace, form_sign(m)


_LABEL_BY_KEY = {_torsion_key(rep): label for label, rep in TORSION_REPRESENTATIVES.items()}
assert len(_LABEL_BY_KEY) == 8


def torsion_class(m: Sl2Matrix) -> TorsionLabel:
    if element_order(m) is INFINITE:
        raise ValueError(f"{m!r} has infinite order")
    return _LABEL_BY_KEY[_torsion_key(m)]


# -- roots ------------------------------------------------------------------------

@dataclass(frozen=True)
class RootSet:
    """Either a finite verified list of roots or, for central targets,
    representatives of the torsion classes whose m-th power is the target."""

    kind: str
    roots: tuple = ()
    labels: tuple = ()

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def to_json(self):
        if self.is_finite:
            return {"kind": "finite", "roots": [r.rows() for r in self.roots]}
        return {"kind": "torsion_family", "labels": [label.value for label in self.labels],
                "representatives": [label.representative.rows() for label in self.labels]}


def mth_roots(m_target: Sl2Matrix, m: int) -> RootSet:
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return RootSet("finite", (m_target,))
    if m_target.is_central():
        labels = tuple(label for label in TorsionLabel
                       if label.representative ** m == m_target)
        return RootSet("torsion_family", labels=labels)

    pm1_poly, pm_poly = trace_polynomials(m)
    found = []
    for t in integer_roots_of_trace_equation(m, m_target.trace):
        pm, pm1 = pm_poly(t), pm1_poly(t)
        if pm == 0:
            continue
        num = (m_target.a + pm1, m_target.b, m_target.c, m_target.d + pm1)
        if any(x % pm for x in num):
            continue
        a, b, c, d = (x // pm for x in num)
        if a * d - b * c != 1:
            continue
        r = Sl2Matrix(a, b, c, d)
        if r.trace == t and r ** m == m_target:
            found.append(r)
    found = sorted(set(found))
    if len(found) > 2:
        raise AssertionError("more than two roots of a non-central element")
    return RootSet("finite", tuple(found))


def _box(bound: int) -> Iterable[int]:
    return range(-bound, bound + 1)


def brute_force_roots(m_target: Sl2Matrix, m: int, bound: int) -> list[Sl2Matrix]:
    """Every R with max |entry| <= bound and R**m == m_target.

    Central targets are searched over the whole box (d is forced by the
    determinant whenever a != 0). For non-central targets the box is cut down
    to the commutant of the target, which every root lies in since it
    commutes with its own power: R - d I must be an integer multiple of the
    primitive vector of (p - s, q, r) where the target is [[p, q], [r, s]].
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if m < 1:
        raise ValueError("m must be >= 1")
    out = []
    if m_target.is_central():
        for a in _box(bound):
            for b in _box(bound):
                for c in _box(bound):
                    if a != 0:
                        num = 1 + b * c
                        if num % a:
                            continue
                        ds = [num // a]
                    elif b * c == -1:
                        ds = list(_box(bound))
                    else:
                        continue
                    for d in ds:
                        if abs(d) > bound:
                            continue
                        r = Sl2Matrix(a, b, c, d)
                        if r ** m == m_target:
                            out.append(r)
        return sorted(out)

    p, q, r_, s = m_target.a, m_target.b, m_target.c, m_target.d
    g = gcd(gcd(p - s, q), r_)
    u, v, w = (p - s) // g, q // g, r_ // g
    # |b|, |c| <= bound and |a - d| <= 2 * bound
    limits = [bound // abs(x) for x in (v, w) if x]
    if u:
        limits.append(2 * bound // abs(u))
    ymax = min(limits)
    for y in range(-ymax, ymax + 1):
        b, c, diff = y * v, y * w, y * u  # diff = a - d
        if abs(b) > bound or abs(c) > bound:
            continue
        # (d + diff) d - b c = 1
        disc = diff * diff + 4 * (1 + b * c)
        if disc < 0:
            continue
        root = isqrt(disc)
        if root * root != disc:
            continue
        for num in {-diff + root, -diff - root}:
            if num % 2:
                continue
            d = num // 2
            a = d + diff
            if abs(a) > bound or abs(d) > bound:
                continue
            cand = Sl2Matrix(a, b, c, d)
            if cand ** m == m_target:
                out.append(cand)
    return sorted(set(out))
