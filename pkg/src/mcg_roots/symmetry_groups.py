"""Dihedral groups and their products with a central C2.

An element ``(k, s, t)`` stands for ``R^k S^s T^t`` where ``S R S = R^-1``
and ``T`` is central. Everything is computed by enumerating the group.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .sentinels import INFINITE


@dataclass(frozen=True, order=True)
class SymElement:
    k: int
    s: int = 0
    t: int = 0

    def __str__(self):
        parts = []
        if self.k:
            parts.append("R" if self.k == 1 else f"R^{self.k}")
        if self.s:
            parts.append("S")
        if self.t:
            parts.append("T")
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class SymGroup:
    kind: str  # "D2n" or "D2nxC2"
    n: int

    def __post_init__(self):
        if self.kind not in ("D2n", "D2nxC2"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")

    @property
    def has_t(self) -> bool:
        return self.kind == "D2nxC2"

    @property
    def order(self) -> int:
        return 4 * self.n if self.has_t else 2 * self.n

    def elements(self):
        ts = (0, 1) if self.has_t else (0,)
        return [SymElement(k, s, t) for t in ts for s in (0, 1) for k in range(self.n)]

    def element(self, k=0, s=0, t=0) -> SymElement:
        return _check(self, SymElement(k % self.n, s, t))

    @property
    def identity(self) -> SymElement:
        return SymElement(0, 0, 0)

    @property
    def R(self) -> SymElement:
        return self.element(1)

    @property
    def S(self) -> SymElement:
        return self.element(0, 1)

    @property
    def T(self) -> SymElement:
        if not self.has_t:
            raise ValueError("this group has no T")
        return self.element(0, 0, 1)

    def __str__(self):
        return f"{self.kind}:{self.n}"


def dihedral(n: int) -> SymGroup:
    return SymGroup("D2n", n)


def dihedral_times_c2(n: int) -> SymGroup:
    return SymGroup("D2nxC2", n)


def parse_group(text: str) -> SymGroup:
    kind, _, n = text.partition(":")
    if kind not in ("D2n", "D2nxC2") or not n.isdigit():
        raise ValueError(f"group must look like D2n:<n> or D2nxC2:<n>, got {text!r}")
    return SymGroup(kind, int(n))


_ELEMENT_RE = re.compile(r"^(?:R(?:\^(-?\d+))?)?(\*?S)?(\*?T)?$")


def parse_element(G: SymGroup, text: str) -> SymElement:
    """Parse strings such as ``1``, ``R``, ``R^3``, ``R^2*S``, ``R*S*T``, ``S``, ``T``."""
    text = text.replace(" ", "")
    if text in ("1", "e", "id"):
        return G.identity
    m = _ELEMENT_RE.match(text)
    if not m or not text:
        raise ValueError(f"cannot parse group element {text!r}")
    has_r = text.startswith("R")
    k = int(m.group(1)) if m.group(1) is not None else (1 if has_r else 0)
    s = 1 if m.group(2) else 0
    t = 1 if m.group(3) else 0
    if (m.group(2) or "").startswith("*") and not has_r:
        raise ValueError(f"cannot parse group element {text!r}")
    if t and not G.has_t:
        raise ValueError(f"{G} has no T factor")
    return G.element(k, s, t)


def _check(G: SymGroup, x: SymElement) -> SymElement:
    if not (0 <= x.k < G.n) or x.s not in (0, 1) or x.t not in (0, 1):
        raise ValueError(f"malformed element {x!r} for {G}")
    if x.t and not G.has_t:
        raise ValueError(f"{G} has no T factor")
    return x


def multiply(G: SymGroup, x: SymElement, y: SymElement) -> SymElement:
    _check(G, x)
    _check(G, y)
    k = (x.k + (-y.k if x.s else y.k)) % G.n
    return SymElement(k, x.s ^ y.s, x.t ^ y.t)


def inverse(G: SymGroup, x: SymElement) -> SymElement:
    _check(G, x)
    k = x.k if x.s else (-x.k) % G.n
    return SymElement(k, x.s, x.t)


def power(G: SymGroup, x: SymElement, e: int) -> SymElement:
    base = x if e >= 0 else inverse(G, x)
    out = G.identity
    for _ in range(abs(e)):
        out = multiply(G, out, base)
    return out


def elem_order(G: SymGroup, x: SymElement) -> int:
    _check(G, x)
    y, k = x, 1
    while y != G.identity:
        y, k = multiply(G, y, x), k + 1
    return k


def elements_of_order(G: SymGroup, d: int) -> list[SymElement]:
    return [x for x in G.elements() if elem_order(G, x) == d]


def commutes(G: SymGroup, x: SymElement, y: SymElement) -> bool:
    return multiply(G, x, y) == multiply(G, y, x)


def centralizer(G: SymGroup, x: SymElement) -> list[SymElement]:
    return [g for g in G.elements() if commutes(G, g, x)]


def conjugate(G: SymGroup, x: SymElement, g: SymElement) -> SymElement:
    return multiply(G, multiply(G, g, x), inverse(G, g))


def conjugate_exists(G: SymGroup, x: SymElement, y: SymElement) -> bool:
    return any(conjugate(G, x, g) == y for g in G.elements())


# -- fixed points --------------------------------------------------------------

@dataclass(frozen=True)
class FixedPointRule:
    construction: str  # "Thm521" or "Thm522"
    rho: int

    def __post_init__(self):
        if self.construction == "Thm522":
            if self.rho < 4 or self.rho % 4:
                raise ValueError("the genus-rho half-turn model needs rho = 0 mod 4")
        elif self.construction == "Thm521":
            if self.rho < 2:
                raise ValueError("rho must be >= 2")
        else:
            raise ValueError(f"unknown construction {self.construction!r}")

    @property
    def group(self) -> SymGroup:
        if self.construction == "Thm522":
            return dihedral(self.rho)
        return dihedral_times_c2(self.rho + 1)


def fixed_points(rule: FixedPointRule, x: SymElement):
    """Number of fixed points on the surface, or INFINITE for the identity.

    Thm522 (genus rho, group D_{2 rho}): R^k S fixes 6 points for k even and
    2 for k odd; a nontrivial rotation fixes 2.
    Thm521 (group D_{2(rho+1)} x C2): only the counts that follow from the
    cell structure are available: a nontrivial rotation R^k fixes the four
    polygon centres and T fixes the 2(rho+1) vertices. Other elements raise.
    """
    G = rule.group
    _check(G, x)
    if x == G.identity:
        return INFINITE
    if rule.construction == "Thm522":
        if x.s:
            return 6 if x.k % 2 == 0 else 2
        return 2
    if x.s == 0 and x.t == 0:
        return 4
    if x == SymElement(0, 0, 1):
        return 2 * (rule.rho + 1)
    raise ValueError(f"fixed-point count of {x} is not determined for this construction")


# -- proof checks -----------------------------------------------------------------

def bullet_order_elements(rho: int) -> set:
    """The three-bullet description of the order-(rho+1) elements."""
    n = rho + 1
    out = {SymElement(k) for k in range(n) if gcd(k, n) == 1}
    if n % 2 == 0:
        out |= {SymElement(k, 0, 1) for k in range(n) if gcd(k, n) == 1}
    if n % 4 == 2:
        out |= {SymElement(k, 0, 1) for k in range(n) if gcd(k, n // 2) == 1}
    return out


def verify_thm_5_2_1(rho: int) -> dict:
    if rho < 2:
        raise ValueError("rho must be >= 2")
    G = dihedral_times_c2(rho + 1)
    R, S = G.R, G.S
    enumerated = set(elements_of_order(G, rho + 1))
    bullets = bullet_order_elements(rho)
    commuting = sorted(str(x) for x in enumerated if commutes(G, x, S))
    checks = {
        "orders_differ": elem_order(G, R) != elem_order(G, S),
        "order_elements_match_bullets": enumerated == bullets,
        "none_commute_with_S": not commuting,
    }
    return {
        "rho": rho,
        "group": str(G),
        "order_R": elem_order(G, R),
        "order_S": elem_order(G, S),
        "order_rho_plus_1_elements": sorted(str(x) for x in enumerated),
        "commuting_with_S": commuting,
        "checks": checks,
        "passed": all(checks.values()),
    }


def minus_two_centralizer_set(rho: int) -> set:
    """{RS, R^((rho-2)/2) S, R^(rho/2)}; kept to show it is not the centralizer."""
    return {SymElement(1, 1), SymElement(((rho - 2) // 2) % rho, 1), SymElement(rho // 2)}


def corrected_centralizer_set(rho: int) -> set:
    """{RS, R^((rho+2)/2) S, R^(rho/2)}: RS together with R^(rho/2) RS and R^(rho/2)."""
    return {SymElement(1, 1), SymElement(((rho + 2) // 2) % rho, 1), SymElement(rho // 2)}


def verify_thm_5_2_2(rho: int) -> dict:
    rule = FixedPointRule("Thm522", rho)
    G = rule.group
    S, RS = G.S, G.element(1, 1)
    order_two = [x for x in centralizer(G, RS) if elem_order(G, x) == 2]
    cent = set(order_two)
    invariant = all(
        fixed_points(rule, conjugate(G, x, g)) == fixed_points(rule, x)
        for x in G.elements() if x != G.identity for g in G.elements()
    )
    checks = {
        "S_has_6": fixed_points(rule, S) == 6,
        "RS_has_2": fixed_points(rule, RS) == 2,
        "centralizer_all_have_2": all(fixed_points(rule, x) == 2 for x in order_two),
        "no_6_point_element_commutes_with_RS": not any(
            fixed_points(rule, x) == 6 for x in order_two),
        "centralizer_matches_corrected_set": cent == corrected_centralizer_set(rho),
        "fixed_points_conjugation_invariant": invariant,
    }
    return {
        "rho": rho,
        "group": str(G),
        "order_two_centralizer_of_RS": sorted(str(x) for x in order_two),
        "minus_two_set": sorted(str(x) for x in minus_two_centralizer_set(rho)),
        "minus_two_set_matches": cent == minus_two_centralizer_set(rho),
        "checks": checks,
        "passed": all(checks.values()),
    }
