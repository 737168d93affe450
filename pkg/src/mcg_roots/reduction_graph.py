"""Dual graphs of curve-system decompositions of a genus-1 surface with
boundary, their four-way case split, and automorphisms fixing the boundary
leaves.

Vertices are either components (genus 0 or 1) or boundary leaves. Edges are
unordered pairs of vertices; a self-loop is allowed and counts twice
toward valence.
"""

from __future__ import annotations

import enum
import itertools
import random
from collections import Counter
from dataclasses import dataclass, field

DEFAULT_BUDGET = 12


class BudgetExceeded(ValueError):
    pass


class CaseLabel(enum.Enum):
    Case1 = "Case1"  # tree with a genus-1 component
    Case2 = "Case2"  # cycle of length 1
    Case3 = "Case3"  # cycle of length 2
    Case4 = "Case4"  # cycle of length >= 3

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class DecompositionGraph:
    components: tuple  # ((id, genus), ...)
    leaves: tuple  # (id, ...)
    edges: tuple  # ((id, (u, v)), ...)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple((c, int(g)) for c, g in self.components))
        object.__setattr__(self, "leaves", tuple(self.leaves))
        object.__setattr__(self, "edges", tuple((e, tuple(ends)) for e, ends in self.edges))

    @property
    def genus_of(self) -> dict:
        return dict(self.components)

    @property
    def vertices(self) -> list:
        return [c for c, _ in self.components] + list(self.leaves)

    def valence(self) -> Counter:
        val = Counter({v: 0 for v in self.vertices})
        for _e, (u, v) in self.edges:
            val[u] += 1
            val[v] += 1
        return val

    def to_json(self):
        return {
            "components": [{"id": c, "genus": g} for c, g in self.components],
            "leaves": list(self.leaves),
            "edges": [{"id": e, "ends": list(ends)} for e, ends in self.edges],
        }

    @classmethod
    def from_json(cls, data) -> "DecompositionGraph":
        try:
            comps = tuple((c["id"], c["genus"]) for c in data["components"])
            leaves = tuple(data.get("leaves", ()))
            edges = tuple((e["id"], tuple(e["ends"])) for e in data["edges"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed graph JSON: {exc}") from None
        return cls(comps, leaves, edges)


@dataclass(frozen=True)
class Validation:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def _raw_rank(g: DecompositionGraph) -> int:
    return len(g.edges) - len(g.vertices) + 1


def _connected(g: DecompositionGraph) -> bool:
    verts = g.vertices
    if not verts:
        return False
    adj = {v: set() for v in verts}
    for _e, (u, v) in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def validate(g: DecompositionGraph) -> Validation:
    if not g.components:
        return Validation(False, "no component vertices")
    verts = g.vertices
    if len(set(verts)) != len(verts):
        return Validation(False, "duplicate vertex id")
    ids = [e for e, _ in g.edges]
    if len(set(ids)) != len(ids):
        return Validation(False, "duplicate edge id")
    for c, genus in g.components:
        if genus not in (0, 1):
            return Validation(False, f"component {c!r} has genus {genus}, expected 0 or 1")
    known = set(verts)
    for e, ends in g.edges:
        if len(ends) != 2:
            return Validation(False, f"edge {e!r} must have two ends")
        for v in ends:
            if v not in known:
                return Validation(False, f"edge {e!r} touches unknown vertex {v!r}")
    if not _connected(g):
        return Validation(False, "graph is disconnected")
    val = g.valence()
    for leaf in g.leaves:
        if val[leaf] != 1:
            return Validation(False, f"leaf {leaf!r} has valence {val[leaf]}, expected 1")
    for c, genus in g.components:
        if genus == 0 and val[c] < 3:
            return Validation(False, f"genus-0 component {c!r} has valence {val[c]} < 3")
    total = sum(genus for _c, genus in g.components) + _raw_rank(g)
    if total != 1:
        return Validation(False, f"genera plus cycle rank is {total}, expected 1")
    return Validation(True)


def _require_valid(g: DecompositionGraph):
    check = validate(g)
    if not check:
        raise ValueError(f"invalid graph: {check.reason}")


def cycle_rank(g: DecompositionGraph) -> int:
    _require_valid(g)
    return _raw_rank(g)


def _core_edges(g: DecompositionGraph) -> list:
    """Edges left after repeatedly pruning valence-1 vertices."""
    edges = dict(g.edges)
    val = g.valence()
    queue = [v for v in g.vertices if val[v] == 1]
    removed = set()
    while queue:
        v = queue.pop()
        if v in removed or val[v] != 1:
            continue
        removed.add(v)
        for e, (a, b) in list(edges.items()):
            if v in (a, b):
                del edges[e]
                other = b if a == v else a
                val[v] -= 1
                val[other] -= 1
                if val[other] == 1:
                    queue.append(other)
    return list(edges)


def classify_case(g: DecompositionGraph) -> CaseLabel:
    rank = cycle_rank(g)
    if any(genus == 1 for _c, genus in g.components):
        if rank != 0:
            raise ValueError("a genus-1 component forces a tree")
        return CaseLabel.Case1
    if rank != 1:
        raise ValueError(f"cycle rank {rank} is impossible for a genus-1 surface")
    length = len(_core_edges(g))
    if length == 1:
        return CaseLabel.Case2
    if length == 2:
        return CaseLabel.Case3
    return CaseLabel.Case4


# -- automorphisms -------------------------------------------------------------------

@dataclass(frozen=True)
class GraphAutomorphism:
    vertex_map: tuple  # sorted ((v, image), ...)
    edge_map: tuple  # sorted ((e, image), ...)
    flipped_loops: frozenset = field(default_factory=frozenset)

    @property
    def vmap(self) -> dict:
        return dict(self.vertex_map)

    @property
    def emap(self) -> dict:
        return dict(self.edge_map)

    def is_identity(self) -> bool:
        return (all(a == b for a, b in self.vertex_map)
                and all(a == b for a, b in self.edge_map)
                and not self.flipped_loops)

    def vertex_identity(self) -> bool:
        return all(a == b for a, b in self.vertex_map)

    def to_json(self):
        return {
            "vertices": {str(a): b for a, b in self.vertex_map},
            "edges": {str(a): b for a, b in self.edge_map},
            "flipped_loops": sorted(self.flipped_loops, key=str),
        }


def _auto(vmap: dict, emap: dict, flips) -> GraphAutomorphism:
    return GraphAutomorphism(tuple(sorted(vmap.items(), key=str)),
                             tuple(sorted(emap.items(), key=str)),
                             frozenset(flips))


def compose(a: GraphAutomorphism, b: GraphAutomorphism) -> GraphAutomorphism:
    """a after b. A loop is reversed when exactly one of the two steps reverses it."""
    av, ae, bv, be = a.vmap, a.emap, b.vmap, b.emap
    vmap = {v: av[bv[v]] for v in bv}
    emap = {e: ae[be[e]] for e in be}
    flips = {e for e in be if (e in b.flipped_loops) != (be[e] in a.flipped_loops)}
    return _auto(vmap, emap, flips)


def inverse(a: GraphAutomorphism) -> GraphAutomorphism:
    vmap = {w: v for v, w in a.vertex_map}
    emap = {f: e for e, f in a.edge_map}
    flips = {a.emap[e] for e in a.flipped_loops}
    return _auto(vmap, emap, flips)


def identity_automorphism(g: DecompositionGraph) -> GraphAutomorphism:
    return _auto({v: v for v in g.vertices}, {e: e for e, _ in g.edges}, ())


def _key(u, v):
    return (u, v) if str(u) <= str(v) else (v, u)


def _vertex_maps(g: DecompositionGraph):
    """Genus-preserving vertex bijections fixing leaves and preserving edge
    multiplicities, by backtracking."""
    mult = Counter(_key(u, v) for _e, (u, v) in g.edges)
    genus = g.genus_of
    comps = [c for c, _ in g.components]
    fixed = {leaf: leaf for leaf in g.leaves}

    def consistent(vmap, v):
        w = vmap[v]
        for x, y in vmap.items():
            if mult.get(_key(v, x), 0) != mult.get(_key(w, y), 0):
                return False
        return True

    def extend(i, vmap, used):
        if i == len(comps):
            yield dict(vmap)
            return
        v = comps[i]
        for w in comps:
            if w in used or genus[w] != genus[v]:
                continue
            vmap[v] = w
            if consistent(vmap, v):
                used.add(w)
                yield from extend(i + 1, vmap, used)
                used.discard(w)
            del vmap[v]

    yield from extend(0, dict(fixed), set())


def leaf_fixing_automorphisms(g: DecompositionGraph, budget: int = DEFAULT_BUDGET) -> list:
    _require_valid(g)
    if len(g.vertices) > budget:
        raise BudgetExceeded(f"{len(g.vertices)} vertices exceeds the search budget {budget}")
    classes: dict = {}
    for e, (u, v) in g.edges:
        classes.setdefault(_key(u, v), []).append(e)
    loops = [e for e, (u, v) in g.edges if u == v]
    out = []
    for vmap in _vertex_maps(g):
        choices = []
        for key, members in classes.items():
            target = classes[_key(vmap[key[0]], vmap[key[1]])]
            choices.append([dict(zip(members, perm)) for perm in itertools.permutations(target)])
        for parts in itertools.product(*choices):
            emap = {}
            for part in parts:
                emap.update(part)
            for r in range(len(loops) + 1):
                for flips in itertools.combinations(loops, r):
                    out.append(_auto(vmap, emap, flips))
    out.sort(key=lambda a: (not a.is_identity(), str(a)))
    return out


def is_group(autos) -> bool:
    pool = set(autos)
    if not pool:
        return False
    return all(compose(a, b) in pool for a in pool for b in pool) and all(
        inverse(a) in pool for a in pool)


# -- constructions -----------------------------------------------------------------

def case1_star(q: int) -> DecompositionGraph:
    """A single genus-1 component carrying all q leaves."""
    leaves = tuple(f"L{i}" for i in range(1, q + 1))
    edges = tuple((f"e{i}", ("T", leaf)) for i, leaf in enumerate(leaves, 1))
    return DecompositionGraph((("T", 1),), leaves, edges)


def case1_tree(q: int) -> DecompositionGraph:
    """Genus-1 component hanging off a genus-0 component that holds the leaves."""
    if q < 2:
        raise ValueError("need q >= 2")
    leaves = tuple(f"L{i}" for i in range(1, q + 1))
    edges = [("d0", ("T", "P"))] + [(f"e{i}", ("P", leaf)) for i, leaf in enumerate(leaves, 1)]
    return DecompositionGraph((("T", 1), ("P", 0)), leaves, tuple(edges))


def case2_loop(q: int) -> DecompositionGraph:
    """A genus-0 component with a self-loop and q >= 1 leaves."""
    if q < 1:
        raise ValueError("need q >= 1")
    leaves = tuple(f"L{i}" for i in range(1, q + 1))
    edges = [("e0", ("P", "P"))] + [(f"e{i}", ("P", leaf)) for i, leaf in enumerate(leaves, 1)]
    return DecompositionGraph((("P", 0),), leaves, tuple(edges))


def cycle_graph(length: int, leaves_per_vertex: int = 1) -> DecompositionGraph:
    """A cycle of genus-0 components, each with its own leaves."""
    if length < 1 or leaves_per_vertex < 1:
        raise ValueError("need length >= 1 and at least one leaf per vertex")
    if length == 1:
        return case2_loop(leaves_per_vertex)
    comps = tuple((f"P{i}", 0) for i in range(length))
    edges = [(f"d{i}", (f"P{i}", f"P{(i + 1) % length}")) for i in range(length)]
    leaves = []
    for i in range(length):
        for j in range(leaves_per_vertex):
            leaf = f"L{i}_{j}"
            leaves.append(leaf)
            edges.append((f"e{i}_{j}", (f"P{i}", leaf)))
    return DecompositionGraph(comps, tuple(leaves), tuple(edges))


def random_valid_graph(rng: random.Random, max_components: int = 5,
                       max_vertices: int = DEFAULT_BUDGET) -> DecompositionGraph:
    """A random valid graph of any of the four cases. Optional extra leaves
    stop at ``max_vertices``; required leaves may still exceed it."""
    n = rng.randint(1, max_components)
    has_torus = rng.random() < 0.3
    comps = [(f"P{i}", 0) for i in range(n)]
    edges = []
    eid = itertools.count()
    if has_torus:
        comps.append(("T", 1))
        order = [c for c, _ in comps]
        rng.shuffle(order)
        for i in range(1, len(order)):
            edges.append((f"e{next(eid)}", (order[i], rng.choice(order[:i]))))
    else:
        length = rng.randint(1, n)
        cyc = [f"P{i}" for i in range(length)]
        if length == 1:
            edges.append((f"e{next(eid)}", (cyc[0], cyc[0])))
        else:
            for i in range(length):
                edges.append((f"e{next(eid)}", (cyc[i], cyc[(i + 1) % length])))
        placed = list(cyc)
        for i in range(length, n):
            v = f"P{i}"
            edges.append((f"e{next(eid)}", (v, rng.choice(placed))))
            placed.append(v)
    val = Counter()
    for _e, (u, v) in edges:
        val[u] += 1
        val[v] += 1
    leaves = []
    for c, genus in comps:
        need = max(0, 3 - val[c]) if genus == 0 else 0
        room = len(comps) + len(leaves) + need < max_vertices
        for _ in range(need + (rng.randint(0, 1) if room else 0)):
            leaf = f"L{len(leaves)}"
            leaves.append(leaf)
            edges.append((f"e{next(eid)}", (c, leaf)))
    if not leaves:
        leaf = "L0"
        leaves.append(leaf)
        edges.append((f"e{next(eid)}", (rng.choice([c for c, _ in comps]), leaf)))
    return DecompositionGraph(tuple(comps), tuple(leaves), tuple(edges))
