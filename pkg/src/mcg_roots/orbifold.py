"""Euler characteristic bookkeeping for foliations and ramified coverings.

All identities with halves are checked after doubling, so everything stays
in the integers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations

from .free_group import FreeEndo
from .sentinels import NOT_FOUND

G_MAX = 4


class SearchSaturated(RuntimeError):
    """A bounded search reached its boundary without settling the question."""


@dataclass(frozen=True)
class SingularityDatum:
    point: str
    prongs: int
    is_puncture: bool = False

    def __post_init__(self):
        if self.prongs < 1:
            raise ValueError("prong count must be >= 1")


@dataclass(frozen=True)
class CoverDatum:
    m: int
    chi_total: int
    chi_quotient: int
    branch: tuple  # of (o, r)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        branch = tuple((int(o), int(r)) for o, r in self.branch)
        for o, r in branch:
            if r < 2 or o * r != self.m:
                raise ValueError(f"branch point (o={o}, r={r}) violates o*r = m, r >= 2")
        object.__setattr__(self, "branch", branch)

    def to_json(self):
        return {"m": self.m, "chi_total": self.chi_total, "chi_quotient": self.chi_quotient,
                "branch": [{"o": o, "r": r} for o, r in self.branch]}

    @classmethod
    def from_json(cls, data) -> "CoverDatum":
        return cls(int(data["m"]), int(data["chi_total"]), int(data["chi_quotient"]),
                   tuple((b["o"], b["r"]) for b in data.get("branch", [])))


def euler_char(genus: int, boundary: int) -> int:
    if genus < 0 or boundary < 0:
        raise ValueError("genus and boundary must be non-negative")
    return 2 - 2 * genus - boundary


def check_prong_formula(chi: int, singularities) -> bool:
    """2 chi == sum(2 - prongs)."""
    return 2 * chi == sum(2 - s.prongs for s in singularities)


def check_riemann_hurwitz(c: CoverDatum) -> bool:
    """chi + sum(m - o) == m * chi_quotient."""
    return c.chi_total + sum(c.m - o for o, _r in c.branch) == c.m * c.chi_quotient


def lift_index(ind_down: int, r: int) -> int:
    if ind_down < 1 or r < 1:
        raise ValueError("inputs must be >= 1")
    return ind_down * r


def is_pivot(points, candidate: int) -> bool:
    """``points`` is a list of (ind_down, r); ``candidate`` indexes into it."""
    if not 0 <= candidate < len(points):
        raise IndexError("candidate not in the list")
    ind0, r0 = points[candidate]
    if ind0 != 1:
        return False
    return all(ind * r != r0 for i, (ind, r) in enumerate(points) if i != candidate)


# -- admissible orders ------------------------------------------------------------

def _residual_contributions(m: int):
    """Values m - o for the possible extra branch points (o = m / r, r | m, r >= 2)."""
    return sorted({m - m // r for r in range(2, m + 1) if m % r == 0})


def _representable(total: int, parts) -> bool:
    if total < 0:
        return False
    reach = [False] * (total + 1)
    reach[0] = True
    for s in range(1, total + 1):
        reach[s] = any(p <= s and reach[s - p] for p in parts)
    return reach[total]


def order_is_admissible(genus: int, q_fixed: int, m: int) -> bool:
    """Is there branch data for a cyclic action of order m on a closed genus
    ``genus`` surface with at least ``q_fixed`` fixed points?

    Riemann-Hurwitz: chi + q (m - 1) + residual = m chi0, where chi0 ranges
    over even values in [2 - 2 G_MAX, 2] and the residual is a sum of
    branch contributions m - o.
    """
    if m == 1:
        return True
    chi = 2 - 2 * genus
    parts = _residual_contributions(m)
    for g0 in range(0, G_MAX + 1):
        residual = m * (2 - 2 * g0) - chi - q_fixed * (m - 1)
        if residual < 0:
            return False  # residual only shrinks as g0 grows
        if _representable(residual, parts):
            return True
    raise SearchSaturated(
        f"quotient genus bound {G_MAX} reached for genus={genus}, q={q_fixed}, m={m}")


def order_search_bound(genus: int, q_fixed: int) -> int | None:
    """Upper bound on admissible m >= 2, from chi + q (m - 1) <= 2 m."""
    if q_fixed <= 2:
        return None
    return (2 * genus - 2 + q_fixed) // (q_fixed - 2)


def admissible_orders(genus: int, q_fixed: int, max_order: int = 64) -> frozenset:
    """Orders m with feasible branch data and at least ``q_fixed`` fixed
    points. For q_fixed >= 3 the search is complete; for q_fixed <= 2 the set
    can be infinite and orders above ``max_order`` are not examined."""
    if genus < 0 or q_fixed < 1:
        raise ValueError("genus >= 0 and q_fixed >= 1 required")
    bound = order_search_bound(genus, q_fixed)
    top = max_order if bound is None else max(bound, 1)
    return frozenset(m for m in range(1, top + 1) if order_is_admissible(genus, q_fixed, m))


def max_fixed_points_sphere(m: int) -> int:
    """Largest q with m admissible on the sphere with q fixed points."""
    if m < 2:
        raise ValueError("m must be >= 2")
    # 2 + q (m - 1) <= 2 m  forces q <= 2 m / (m - 1) < 5
    q_limit = (2 * m) // (m - 1) + 1
    best = 0
    for q in range(1, q_limit + 1):
        if order_is_admissible(0, q, m):
            best = q
    return best


# -- permutation representations ----------------------------------------------------

@dataclass(frozen=True)
class PermRep:
    degree: int
    perms: tuple  # one tuple per generator, 0-based images

    def __post_init__(self):
        perms = tuple(tuple(int(v) for v in p) for p in self.perms)
        for p in perms:
            if sorted(p) != list(range(self.degree)):
                raise ValueError(f"{p} is not a permutation of 0..{self.degree - 1}")
        object.__setattr__(self, "perms", perms)

    @property
    def rank(self) -> int:
        return len(self.perms)

    def is_transitive(self) -> bool:
        seen, stack = {0}, [0]
        while stack:
            v = stack.pop()
            for p in self.perms:
                for w in (p[v], p.index(v)):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return len(seen) == self.degree

    def to_json(self):
        return {"degree": self.degree, "perms": [[v + 1 for v in p] for p in self.perms]}

    @classmethod
    def from_json(cls, data) -> "PermRep":
        degree = int(data["degree"])
        perms = []
        for p in data["perms"]:
            perms.append(parse_permutation(p, degree) if isinstance(p, str)
                         else tuple(int(v) - 1 for v in p))
        return cls(degree, tuple(perms))


def parse_permutation(text: str, degree: int) -> tuple:
    """Cycle notation on 1..degree, e.g. ``(1 2 3)(4 5)`` or ``()``."""
    img = list(range(degree))
    body = re.sub(r"\)\s*\(", ")(", text.replace(",", " ").strip())
    if body in ("", "()", "id"):
        return tuple(img)
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"bad cycle notation {text!r}")
    for chunk in body[1:-1].split(")("):
        cycle = [int(v) - 1 for v in chunk.split()]
        if any(not 0 <= v < degree for v in cycle) or len(set(cycle)) != len(cycle):
            raise ValueError(f"bad cycle {chunk!r}")
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            img[a] = b
    if sorted(img) != list(range(degree)):
        raise ValueError(f"cycles in {text!r} overlap")
    return tuple(img)


def _compose_perm(p, q):
    """Apply p then q (left-to-right action)."""
    return tuple(q[p[v]] for v in range(len(p)))


def _inverse_perm(p):
    inv = [0] * len(p)
    for v, w in enumerate(p):
        inv[w] = v
    return tuple(inv)


def evaluate_word(rep: PermRep, word) -> tuple:
    """Right action: the permutation of the word x_1 x_2 ... acts as x_1 then x_2."""
    out = tuple(range(rep.degree))
    for x in word:
        p = rep.perms[abs(x) - 1]
        out = _compose_perm(out, p if x > 0 else _inverse_perm(p))
    return out


def pull_back(rep: PermRep, phi: FreeEndo) -> PermRep:
    """rep o phi."""
    if phi.rank != rep.rank:
        raise ValueError(f"rank mismatch: endomorphism {phi.rank}, representation {rep.rank}")
    return PermRep(rep.degree, tuple(evaluate_word(rep, img) for img in phi.images))


def equivalent_exhaustive(r1: PermRep, r2: PermRep) -> bool:
    if r1.degree != r2.degree or r1.rank != r2.rank:
        return False
    n = r1.degree
    for sigma in permutations(range(n)):
        # sigma^-1 p1 sigma == p2 as maps: p2[sigma[v]] == sigma[p1[v]]
        if all(p2[sigma[v]] == sigma[p1[v]] for p1, p2 in zip(r1.perms, r2.perms) for v in range(n)):
            return True
    return False


def _orbit_form(rep: PermRep, start: int):
    """Relabel vertices in BFS order from ``start``; return the relabelled
    tables restricted to the orbit."""
    label = {start: 0}
    order = [start]
    for v in order:
        for p in rep.perms:
            for w in (p[v], _inverse_perm(p)[v]):
                if w not in label:
                    label[w] = len(order)
                    order.append(w)
    return tuple(tuple(label[p[v]] for v in order) for p in rep.perms)


def canonical_form(rep: PermRep):
    """Complete invariant of a permutation representation up to relabelling:
    the sorted list of per-orbit minimal BFS forms."""
    seen = set()
    forms = []
    for v in range(rep.degree):
        if v in seen:
            continue
        orbit_forms = []
        orbit = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for p in rep.perms:
                for w in (p[u], _inverse_perm(p)[u]):
                    if w not in orbit:
                        orbit.add(w)
                        stack.append(w)
        seen |= orbit
        for u in orbit:
            orbit_forms.append(_orbit_form(rep, u))
        forms.append((len(orbit), min(orbit_forms)))
    return tuple(sorted(forms))


def equivalent(r1: PermRep, r2: PermRep) -> bool:
    if r1.degree != r2.degree or r1.rank != r2.rank:
        return False
    if r1.degree <= 8:
        return equivalent_exhaustive(r1, r2)
    return canonical_form(r1) == canonical_form(r2)


def lift_exponent(rep: PermRep, phi: FreeEndo, cap: int = 64):
    """Least k <= cap with rep o phi^k equivalent to rep, else NOT_FOUND."""
    if phi.rank != rep.rank:
        raise ValueError(f"rank mismatch: endomorphism {phi.rank}, representation {rep.rank}")
    current = rep
    for k in range(1, cap + 1):
        # rep o phi^k = (rep o phi^(k-1)) o phi
        current = pull_back(current, phi)
        if equivalent(current, rep):
            return k
    return NOT_FOUND


def cyclic_orbit_factorizations(n: int):
    if n < 1:
        raise ValueError("n must be >= 1")
    return [(k, n // k) for k in range(2, n) if n % k == 0 and n // k >= 2]


# -- families used by the symmetry constructions ---------------------------------------

def thm521_cover(rho: int) -> CoverDatum:
    m = 4 * (rho + 1)
    return CoverDatum(m, 2 - 2 * rho, 2,
                      ((4, rho + 1),) + ((2 * (rho + 1), 2),) * 3)


def thm522_cover(rho: int) -> CoverDatum:
    m = 2 * rho
    return CoverDatum(m, 2 - 2 * rho, 2, ((2, rho),) + ((rho, 2),) * 4)


def thm521_pivot_data(rho: int):
    """Candidate first, then the other three branch points and a regular point."""
    return [(1, rho + 1), (1, 2), (1, 2), (1, 2), (2, 1)]


def thm522_pivot_data(rho: int):
    return [(1, rho), (1, 2), (1, 2), (1, 2), (1, 2), (3, 1)]


def thm522_lifted_singularities(rho: int):
    """Upstairs singular points: 2 of index rho over the pivot and 2 rho of
    index 3 over the unramified 3-prong point."""
    out = [SingularityDatum(f"P0_{i}", lift_index(1, rho)) for i in range(2)]
    out += [SingularityDatum(f"P5_{i}", lift_index(3, 1)) for i in range(2 * rho)]
    return out
