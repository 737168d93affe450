"""Surfaces obtained by gluing arcs of the outer circle of an annulus, and
the action of a rotation on their first homology.

Arc ``i`` runs anticlockwise from point ``p_i`` to ``p_{i+1}``. Gluing arc
``i`` to arc ``j`` reverses orientation, so ``p_i ~ p_{j+1}`` and
``p_{i+1} ~ p_j``. The glued surface retracts onto the quotient graph of the
outer circle: one vertex per point class, one edge per pair of arcs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .polynomial import IntPolynomial


@dataclass(frozen=True)
class GluingPattern:
    n_arcs: int
    pairing: tuple
    rotation_shift: int

    def __post_init__(self):
        object.__setattr__(self, "pairing", tuple(int(j) for j in self.pairing))
        object.__setattr__(self, "rotation_shift", int(self.rotation_shift) % self.n_arcs)

    def pairs(self):
        return sorted({(min(i, j), max(i, j)) for i, j in enumerate(self.pairing)})

    def to_json(self):
        return {"n_arcs": self.n_arcs, "pairing": list(self.pairing),
                "rotation_shift": self.rotation_shift}

    @classmethod
    def from_json(cls, data) -> "GluingPattern":
        return cls(int(data["n_arcs"]), tuple(data["pairing"]), int(data.get("rotation_shift", 0)))


def pattern_problems(p: GluingPattern) -> list[str]:
    """Empty when the pattern is valid and the rotation descends."""
    problems = []
    n = p.n_arcs
    if n <= 0 or n % 2:
        problems.append("n_arcs must be even and positive")
        return problems
    if len(p.pairing) != n:
        problems.append("pairing has wrong length")
        return problems
    for i, j in enumerate(p.pairing):
        if not 0 <= j < n:
            problems.append(f"arc {i} paired with out-of-range {j}")
        elif j == i:
            problems.append(f"arc {i} paired with itself")
        elif p.pairing[j] != i:
            problems.append(f"pairing is not an involution at {i}")
    if problems:
        return problems
    s = p.rotation_shift
    for i, j in enumerate(p.pairing):
        if p.pairing[(i + s) % n] != (j + s) % n:
            problems.append(f"rotation by {s} does not preserve the pair {{{i},{j}}}")
            break
    return problems


def _require_valid(p: GluingPattern):
    problems = pattern_problems(p)
    if problems:
        raise ValueError("; ".join(problems))


def f_pattern(rho: int) -> GluingPattern:
    """Opposite arcs glued: arc i with arc i + 2 rho; rotation by a half turn."""
    if rho < 2:
        raise ValueError("rho must be >= 2")
    n = 4 * rho
    return GluingPattern(n, tuple((i + 2 * rho) % n for i in range(n)), 2 * rho)


def g_pattern(rho: int) -> GluingPattern:
    """Arcs 0 .. 2rho-5 glued to the opposite side; the four arcs before
    each of the two half-turn marks are glued crosswise, b_j = {2j rho - 4,
    2j rho - 2} and c_j = {2j rho - 3, 2j rho - 1}."""
    if rho < 2:
        raise ValueError("rho must be >= 2")
    n = 4 * rho
    pairing = [None] * n

    def glue(i, j):
        pairing[i], pairing[j] = j, i

    for i in range(2 * rho - 4):
        glue(i, i + 2 * rho)
    for j in (1, 2):
        glue(2 * j * rho - 4, 2 * j * rho - 2)
        glue(2 * j * rho - 3, 2 * j * rho - 1)
    assert None not in pairing
    return GluingPattern(n, tuple(pairing), 2 * rho)


def pattern_from_id(text: str) -> GluingPattern:
    """Parse ``f:<rho>`` or ``g:<rho>``."""
    kind, _, rho = text.partition(":")
    if kind not in ("f", "g") or not rho.strip().lstrip("-").isdigit():
        raise ValueError(f"pattern id must look like f:3 or g:3, got {text!r}")
    return (f_pattern if kind == "f" else g_pattern)(int(rho))


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _point_classes(p: GluingPattern):
    n = p.n_arcs
    uf = _UnionFind(n)
    for i, j in enumerate(p.pairing):
        uf.union(i, (j + 1) % n)
        uf.union((i + 1) % n, j)
    roots = sorted({uf.find(i) for i in range(n)})
    index = {r: k for k, r in enumerate(roots)}
    return [index[uf.find(i)] for i in range(n)], len(roots)


@dataclass(frozen=True)
class QuotientSurfaceReport:
    vertex_classes: int
    edges: int
    genus: int
    boundary_count: int
    h1_rank: int

    def to_json(self):
        return dict(self.__dict__)


def analyze(p: GluingPattern) -> QuotientSurfaceReport:
    _require_valid(p)
    _cls, v = _point_classes(p)
    e = p.n_arcs // 2
    h1 = e - v + 1
    # 2 - 2g - 1 = v - e
    if h1 % 2:
        raise ValueError("gluing does not give an orientable surface")
    return QuotientSurfaceReport(v, e, h1 // 2, 1, h1)


def _graph(p: GluingPattern):
    """Edges as (tail, head), one per pair, oriented along its lower arc."""
    cls, v = _point_classes(p)
    n = p.n_arcs
    pairs = p.pairs()
    edge_of_arc = {}
    edges = []
    for k, (i, j) in enumerate(pairs):
        edges.append((cls[i], cls[(i + 1) % n]))
        edge_of_arc[i] = (k, 1)
        edge_of_arc[j] = (k, -1)
    return v, edges, edge_of_arc


def _chain_map(p: GluingPattern):
    """Signed image of each edge under the rotation."""
    v, edges, edge_of_arc = _graph(p)
    n, s = p.n_arcs, p.rotation_shift
    images = []
    for i, _j in p.pairs():
        images.append(edge_of_arc[(i + s) % n])
    return v, edges, images


def _cycle_basis(v, edges):
    """Spanning tree by BFS; return (tree edge set, fundamental cycles) where
    each cycle is a dict edge -> coefficient keyed by its non-tree edge."""
    adj = {k: [] for k in range(v)}
    for idx, (a, b) in enumerate(edges):
        adj[a].append((idx, b, 1))
        adj[b].append((idx, a, -1))
    parent = {0: None}  # vertex -> (edge, sign, parent vertex); sign +1 if edge points parent->vertex
    order = [0]
    for u in order:
        for idx, w, sign in adj[u]:
            if w not in parent:
                parent[w] = (idx, sign, u)
                order.append(w)
    if len(parent) != v:
        raise ValueError("quotient graph is disconnected")
    tree = {entry[0] for entry in parent.values() if entry is not None}

    def path_from_root(x):
        chain = {}
        while parent[x] is not None:
            idx, sign, u = parent[x]
            chain[idx] = chain.get(idx, 0) + sign
            x = u
        return chain

    cycles = []
    for idx, (a, b) in enumerate(edges):
        if idx in tree:
            continue
        # edge a->b, then back along the tree from b to a
        cyc = {idx: 1}
        for e, c in path_from_root(a).items():
            cyc[e] = cyc.get(e, 0) + c
        for e, c in path_from_root(b).items():
            cyc[e] = cyc.get(e, 0) - c
        cycles.append((idx, {e: c for e, c in cyc.items() if c}))
    return tree, cycles


def induced_h1(p: GluingPattern):
    """Matrix of the rotation on H_1 of the quotient graph (cycle-space basis)."""
    _require_valid(p)
    v, edges, images = _chain_map(p)
    _tree, cycles = _cycle_basis(v, edges)
    position = {idx: k for k, (idx, _c) in enumerate(cycles)}
    size = len(cycles)
    M = [[0] * size for _ in range(size)]
    for col, (_idx, cyc) in enumerate(cycles):
        image = {}
        for e, c in cyc.items():
            target, sign = images[e]
            image[target] = image.get(target, 0) + c * sign
        for e, c in image.items():
            if c and e in position:
                M[position[e]][col] = c
    return M


def char_poly(M) -> IntPolynomial:
    """det(xI - M) by the Faddeev-LeVerrier recurrence; every division is exact."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n == 0:
        return IntPolynomial((1,))
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    Mk = [[0] * n for _ in range(n)]
    c_prev = 1
    for k in range(1, n + 1):
        # Mk = M * (M_{k-1} + c_{n-k+1} I)
        base = [[Mk[i][j] + c_prev * ident[i][j] for j in range(n)] for i in range(n)]
        Mk = [[sum(M[i][t] * base[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(Mk[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("non-exact division in characteristic polynomial")
        c_prev = -tr // k
        coeffs[n - k] = c_prev
    return IntPolynomial(coeffs)


def conjugacy_obstruction(p1: IntPolynomial, p2: IntPolynomial) -> bool:
    """True when the polynomials differ, which rules out conjugacy."""
    return p1 != p2


def random_pattern(n_arcs: int, rng: random.Random) -> GluingPattern:
    """A random fixed-point-free involution with a rotation that descends
    (the identity rotation if no nonzero shift does)."""
    arcs = list(range(n_arcs))
    rng.shuffle(arcs)
    pairing = [0] * n_arcs
    for a, b in zip(arcs[::2], arcs[1::2]):
        pairing[a], pairing[b] = b, a
    shifts = [s for s in range(n_arcs)
              if not pattern_problems(GluingPattern(n_arcs, tuple(pairing), s))]
    return GluingPattern(n_arcs, tuple(pairing), rng.choice(shifts))
