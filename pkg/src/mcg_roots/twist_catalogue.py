"""Catalogued genus-1 surfaces with explicit Dehn twist automorphisms.

Model of ``genus1_q<q>``: cut the surface along ``a1`` to get a planar
region whose outer boundary is ``c1`` and whose holes, left to right, are
the two sides of the cut (``alpha``, ``beta``) with ``c2 .. cq`` between
them. The basepoint sits on top of ``c1``. Each other boundary ``ck`` also
gets a point ``*_k`` on top, and the free group is the fundamental group of
the surface with all these points identified. Generators:

* ``x``   loop around ``alpha`` (anticlockwise), parallel to ``a1``;
* ``y``   runs into ``alpha``, comes out of ``beta`` and back;
* ``e_k`` arc straight down from the basepoint to ``*_k``;
* ``d_k`` the boundary ``ck`` read from ``*_k`` (anticlockwise).

With the extra arcs the mapping class group acts faithfully, so boundary
twists are genuine non-inner automorphisms. The loops
``x, y, w_k = e_k d_k e_k^-1`` generate the fundamental group of the
surface itself and give the H_1 basis.

Curves: ``aj`` (j >= 2) encircles ``cj .. cq`` and ``beta``; ``b`` leaves
``alpha`` at the bottom, passes under every hole and enters ``beta``. All
twists are right-handed; twist images were derived with the "turn right at
the curve" rule and are enforced by :func:`certify_model`.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import free_group as fg
from .free_group import CertifiedAuto, FreeEndo
from .sl2z import TAU_A, TAU_B, Sl2Matrix

MODEL_NAMES = ("torus_closed_h1only", "genus1_q1", "genus1_q2", "genus1_q3", "genus1_q4")

MAX_WORD_LENGTH = 64
MAX_EXPONENT = 16


@dataclass(frozen=True)
class CurveDatum:
    name: str
    twist: CertifiedAuto | None
    is_boundary: bool
    h1_twist: Sl2Matrix | None = None  # closed-torus model only


@dataclass(frozen=True)
class SurfaceModel:
    name: str
    genus: int
    boundary_count: int
    pi1_rank: int | None
    free_rank: int
    curves: dict
    boundary_words: tuple
    intersection: dict
    homology_class: dict
    intersection_form: tuple
    h1_basis_loops: tuple = ()
    h1_only: bool = False
    labels: dict = field(default_factory=dict)

    def curve_names(self):
        return tuple(self.curves)

    def geometric_intersection(self, c1: str, c2: str) -> int:
        if c1 == c2:
            return 0
        return self.intersection.get(frozenset((c1, c2)), 0)

    def is_boundary(self, name: str) -> bool:
        return self.curves[name].is_boundary


# -- word helpers for the bordered models ---------------------------------------

class _Letters:
    """Generator indices for the model with q boundary components."""

    def __init__(self, q: int):
        self.q = q
        self.x, self.y = 1, 2
        self.rank = 2 * q

    def e(self, k):
        return 2 * k - 1

    def d(self, k):
        return 2 * k

    def w(self, k):
        return (self.e(k), self.d(k), -self.e(k))

    def u_beta(self):
        return (-self.y, -self.x, self.y)

    def enclosed(self, j):
        """Anticlockwise loop around c_j .. c_q and beta."""
        word = []
        for k in range(j, self.q + 1):
            word.extend(self.w(k))
        word.extend(self.u_beta())
        return fg.reduce(word)

    def outer(self):
        """The boundary c1 read from the basepoint (anticlockwise)."""
        word = [self.x]
        for k in range(2, self.q + 1):
            word.extend(self.w(k))
        word.extend(self.u_beta())
        return fg.reduce(word)

    def middle(self):
        word = []
        for k in range(2, self.q + 1):
            word.extend(self.w(k))
        return fg.reduce(word)


def _endo(rank, updates):
    images = [(i,) for i in range(1, rank + 1)]
    for gen, img in updates.items():
        images[gen - 1] = fg.reduce(img)
    return FreeEndo(rank, tuple(images))


def _twist_a1(L: _Letters) -> CertifiedAuto:
    fwd = _endo(L.rank, {L.y: (L.x, L.y)})
    bwd = _endo(L.rank, {L.y: (-L.x, L.y)})
    return CertifiedAuto(fwd, bwd)


def _twist_aj(L: _Letters, j: int) -> CertifiedAuto:
    A = L.enclosed(j)
    inv_A = fg.inverse(A)

    def build(loop, loop_inv):
        upd = {L.y: (L.y,) + loop_inv}
        for k in range(j, L.q + 1):
            upd[L.e(k)] = loop + (L.e(k),)
        return _endo(L.rank, upd)

    return CertifiedAuto(build(A, inv_A), build(inv_A, A))


def _twist_b(L: _Letters) -> CertifiedAuto:
    W = L.middle()
    fwd = _endo(L.rank, {L.x: (L.x,) + W + (-L.y,)})
    bwd = _endo(L.rank, {L.x: (L.x, L.y) + fg.inverse(W)})
    return CertifiedAuto(fwd, bwd)


def _twist_c1(L: _Letters) -> CertifiedAuto:
    X = L.outer()
    inv_X = fg.inverse(X)

    def build(loop, loop_inv):
        upd = {L.x: loop + (L.x,) + loop_inv, L.y: loop + (L.y,) + loop_inv}
        for k in range(2, L.q + 1):
            upd[L.e(k)] = loop + (L.e(k),)
        return _endo(L.rank, upd)

    return CertifiedAuto(build(X, inv_X), build(inv_X, X))


def _twist_cj(L: _Letters, j: int) -> CertifiedAuto:
    fwd = _endo(L.rank, {L.e(j): (L.e(j), L.d(j))})
    bwd = _endo(L.rank, {L.e(j): (L.e(j), -L.d(j))})
    return CertifiedAuto(fwd, bwd)


def _bordered_model(q: int) -> SurfaceModel:
    L = _Letters(q)
    n_h1 = q + 1  # basis x, y, w_2 .. w_q

    def unit(i):
        v = [0] * n_h1
        v[i] = 1
        return v

    def w_class(k):
        return unit(k)  # w_k sits at index k (x=0, y=1, w_2=2, ...)

    a_names = ["a"] if q == 1 else [f"a{j}" for j in range(1, q + 1)]
    curves = {}
    homology = {}
    curves[a_names[0]] = CurveDatum(a_names[0], _twist_a1(L), False)
    homology[a_names[0]] = unit(0)
    for j in range(2, q + 1):
        name = f"a{j}"
        curves[name] = CurveDatum(name, _twist_aj(L, j), False)
        v = unit(0)
        for k in range(j, q + 1):
            v[k] -= 1
        homology[name] = v
    curves["b"] = CurveDatum("b", _twist_b(L), False)
    vb = unit(1)
    for k in range(2, q + 1):
        vb[k] -= 1
    homology["b"] = vb
    curves["c1"] = CurveDatum("c1", _twist_c1(L), True)
    v1 = [0] * n_h1
    for k in range(2, q + 1):
        v1[k] += 1
    homology["c1"] = v1
    for j in range(2, q + 1):
        curves[f"c{j}"] = CurveDatum(f"c{j}", _twist_cj(L, j), True)
        homology[f"c{j}"] = w_class(j)

    intersection = {frozenset((a, "b")): 1 for a in a_names}
    form = [[0] * n_h1 for _ in range(n_h1)]
    form[0][1], form[1][0] = 1, -1

    boundary_words = (L.outer(),) + tuple((L.d(k),) for k in range(2, q + 1))
    loops = ((L.x,), (L.y,)) + tuple(L.w(k) for k in range(2, q + 1))
    labels = {"x": L.x, "y": L.y}
    for k in range(2, q + 1):
        labels[f"e{k}"] = L.e(k)
        labels[f"d{k}"] = L.d(k)
    return SurfaceModel(
        name=f"genus1_q{q}",
        genus=1,
        boundary_count=q,
        pi1_rank=2 + q - 1,
        free_rank=L.rank,
        curves=curves,
        boundary_words=boundary_words,
        intersection=intersection,
        homology_class={k: tuple(v) for k, v in homology.items()},
        intersection_form=tuple(tuple(r) for r in form),
        h1_basis_loops=loops,
        labels=labels,
    )


def _closed_torus() -> SurfaceModel:
    curves = {
        "a": CurveDatum("a", None, False, TAU_A),
        "b": CurveDatum("b", None, False, TAU_B),
    }
    return SurfaceModel(
        name="torus_closed_h1only",
        genus=1,
        boundary_count=0,
        pi1_rank=None,
        free_rank=0,
        curves=curves,
        boundary_words=(),
        intersection={frozenset(("a", "b")): 1},
        homology_class={"a": (1, 0), "b": (0, 1)},
        intersection_form=((0, 1), (-1, 0)),
        h1_only=True,
    )


_CACHE: dict = {}


def model(name: str) -> SurfaceModel:
    if name not in MODEL_NAMES:
        raise KeyError(f"unknown model {name!r}; expected one of {', '.join(MODEL_NAMES)}")
    if name not in _CACHE:
        m = _closed_torus() if name == "torus_closed_h1only" else _bordered_model(int(name[-1]))
        if not m.h1_only:
            certify_model(m).raise_if_failed()
        _CACHE[name] = m
    return _CACHE[name]


def with_twist(m: SurfaceModel, curve: str, twist: CertifiedAuto) -> SurfaceModel:
    """Copy of ``m`` with one twist replaced (used by mutation tests)."""
    curves = dict(m.curves)
    curves[curve] = replace(curves[curve], twist=twist)
    return replace(m, curves=curves)


# -- evaluation -------------------------------------------------------------------

def parse_word(w):
    """Accept [["a1", 1], ...] or [("a1", 1), ...]; return tuple of pairs."""
    out = []
    for item in w:
        name, exp = item
        exp = int(exp)
        if exp == 0:
            raise ValueError("exponents must be nonzero")
        out.append((str(name), exp))
    return tuple(out)


def _check_word(m: SurfaceModel, w):
    w = parse_word(w)
    if len(w) > MAX_WORD_LENGTH:
        raise ValueError(f"word longer than {MAX_WORD_LENGTH}")
    for name, exp in w:
        if name not in m.curves:
            raise KeyError(f"unknown curve {name!r} in model {m.name}")
        if abs(exp) > MAX_EXPONENT:
            raise ValueError(f"exponent {exp} exceeds cap {MAX_EXPONENT}")
    return w


def evaluate_auto(m: SurfaceModel, w) -> CertifiedAuto:
    if m.h1_only:
        raise ValueError(f"model {m.name} carries only H_1 data")
    w = _check_word(m, w)
    result = CertifiedAuto.identity(m.free_rank)
    for name, exp in w:
        result = result @ m.curves[name].twist.power(exp)
    return result


def evaluate(m: SurfaceModel, w) -> FreeEndo:
    """Composite automorphism; the leftmost factor is applied last."""
    return evaluate_auto(m, w).forward


def verify_relation(m: SurfaceModel, lhs, rhs) -> bool:
    if m.h1_only:
        return h1_matrix(m, lhs) == h1_matrix(m, rhs)
    return fg.equal(evaluate(m, lhs), evaluate(m, rhs))


# -- homology -------------------------------------------------------------------------

def _matmul(A, B):
    n, k, p = len(A), len(B), len(B[0])
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(p)] for i in range(n)]


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def h1_of_endo(m: SurfaceModel, e: FreeEndo):
    """Matrix of ``e`` on H_1 in the basis (x, y, w_2, .., w_q); columns are images."""
    L = _Letters(m.boundary_count)
    cols = []
    for loop in m.h1_basis_loops:
        sums = fg.exponent_sums(fg.apply(e, loop), m.free_rank)
        for k in range(2, m.boundary_count + 1):
            if sums[L.e(k) - 1] != 0:
                raise AssertionError("image of a loop is not a loop")
        cols.append([sums[0], sums[1]] + [sums[L.d(k) - 1] for k in range(2, m.boundary_count + 1)])
    n = len(cols)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def h1_matrix(m: SurfaceModel, w):
    w = _check_word(m, w)
    if m.h1_only:
        result = Sl2Matrix.identity()
        for name, exp in w:
            result = result @ (m.curves[name].h1_twist ** exp)
        return result.rows()
    return h1_of_endo(m, evaluate(m, w))


def pairing(m: SurfaceModel, u, v) -> int:
    J = m.intersection_form
    return sum(u[i] * J[i][j] * v[j] for i in range(len(u)) for j in range(len(v)))


def transvection(m: SurfaceModel, curve: str):
    """Matrix of v -> v + <[c], v> [c]."""
    c = m.homology_class[curve]
    n = len(c)
    cols = []
    for j in range(n):
        v = [int(i == j) for i in range(n)]
        s = pairing(m, c, v)
        cols.append([v[i] + s * c[i] for i in range(n)])
    return [[cols[j][i] for j in range(n)] for i in range(n)]


# -- certification -------------------------------------------------------------------

CLAUSES = {
    "i": "disjoint curves give commuting twists",
    "ii": "curves meeting once satisfy the braid relation",
    "iii": "boundary twists are central",
    "iv": "every twist fixes every boundary word",
    "v": "H_1 action is the transvection",
    "vi": "certified inverses are two-sided",
}


@dataclass
class CertificationReport:
    model: str
    failures: dict = field(default_factory=lambda: {k: [] for k in CLAUSES})
    checks: dict = field(default_factory=lambda: {k: 0 for k in CLAUSES})

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())

    def clause_passed(self, clause: str) -> bool:
        return not self.failures[clause]

    def raise_if_failed(self):
        if not self.passed:
            bad = [f"({k}) {CLAUSES[k]}: {v[:3]}" for k, v in self.failures.items() if v]
            raise AssertionError(f"model {self.model} failed certification: " + "; ".join(bad))

    def to_json(self):
        return {
            "model": self.model,
            "passed": self.passed,
            "clauses": {k: {"description": CLAUSES[k], "checks": self.checks[k],
                            "failures": [str(x) for x in self.failures[k]]} for k in CLAUSES},
        }


def certify_model(m: SurfaceModel) -> CertificationReport:
    report = CertificationReport(m.name)
    if m.h1_only:
        return report
    names = m.curve_names()
    tw = {n: m.curves[n].twist for n in names}

    def fwd(n):
        return tw[n].forward

    for i, c1 in enumerate(names):
        for c2 in names[i + 1:]:
            inter = m.geometric_intersection(c1, c2)
            if inter == 0:
                report.checks["i"] += 1
                if not fg.equal(fwd(c1) @ fwd(c2), fwd(c2) @ fwd(c1)):
                    report.failures["i"].append((c1, c2))
            elif inter == 1:
                report.checks["ii"] += 1
                lhs = fwd(c1) @ fwd(c2) @ fwd(c1)
                rhs = fwd(c2) @ fwd(c1) @ fwd(c2)
                if not fg.equal(lhs, rhs):
                    report.failures["ii"].append((c1, c2))

    for c in names:
        if not m.is_boundary(c):
            continue
        for other in names:
            report.checks["iii"] += 1
            if not fg.equal(fwd(c) @ fwd(other), fwd(other) @ fwd(c)):
                report.failures["iii"].append((c, other))

    for c in names:
        for k, word in enumerate(m.boundary_words, start=1):
            report.checks["iv"] += 1
            if fg.apply(fwd(c), word) != word:
                report.failures["iv"].append((c, f"c{k}"))

    for c in names:
        report.checks["v"] += 1
        try:
            ok = h1_of_endo(m, fwd(c)) == transvection(m, c)
        except AssertionError:
            ok = False
        if not ok:
            report.failures["v"].append(c)

    ident = FreeEndo.identity(m.free_rank)
    for c in names:
        report.checks["vi"] += 1
        t = tw[c]
        if not (fg.equal(t.forward @ t.backward, ident) and fg.equal(t.backward @ t.forward, ident)):
            report.failures["vi"].append(c)
    return report


# -- named relations -------------------------------------------------------------------

def boundary_product(q: int):
    return tuple((f"c{j}", 1) for j in range(1, q + 1))


def word_power(w, n: int):
    return tuple(w) * n


F0_Q3 = (("a1", 1), ("b", 1), ("a2", 1), ("b", 1), ("a3", 1), ("b", 1))
G0_Q3 = (("a1", 1), ("a2", 1), ("a3", 1), ("b", 1))
F0_Q4 = (("a1", 1), ("a3", 1), ("b", 1), ("a2", 1), ("a4", 1), ("b", 1))


@dataclass(frozen=True)
class Relation:
    id: str
    model: str
    lhs: tuple
    rhs: tuple
    description: str


RELATIONS = {
    "lemma7.9.star": Relation(
        "lemma7.9.star", "genus1_q3", word_power(G0_Q3, 3), boundary_product(3),
        "(t_a1 t_a2 t_a3 t_b)^3 = t_c1 t_c2 t_c3"),
    "lemma7.9.chain": Relation(
        "lemma7.9.chain", "genus1_q3", word_power(F0_Q3, 2), boundary_product(3),
        "(t_a1 t_b t_a2 t_b t_a3 t_b)^2 = t_c1 t_c2 t_c3"),
    "lemma7.10": Relation(
        "lemma7.10", "genus1_q4", word_power(F0_Q4, 2), boundary_product(4),
        "(t_a1 t_a3 t_b t_a2 t_a4 t_b)^2 = t_c1 t_c2 t_c3 t_c4"),
}


def relation_report(rel_id: str) -> dict:
    """Check a named relation, H_1 first (necessary), then on the free group."""
    if rel_id not in RELATIONS:
        raise KeyError(f"unknown relation {rel_id!r}")
    rel = RELATIONS[rel_id]
    m = model(rel.model)
    h1_ok = h1_matrix(m, rel.lhs) == h1_matrix(m, rel.rhs)
    pi1_ok = h1_ok and verify_relation(m, rel.lhs, rel.rhs)
    return {"id": rel.id, "model": rel.model, "relation": rel.description,
            "h1": h1_ok, "pi1": pi1_ok, "verified": bool(h1_ok and pi1_ok)}


def central_power_exponents(o: int, xs, k: int):
    """Exponents (k x_i + k/o) of the boundary twists in f**k."""
    if o < 1 or k < 1:
        raise ValueError("o and k must be positive")
    if k % o:
        raise ValueError(f"{o} does not divide {k}")
    return tuple(k * x + k // o for x in xs)
