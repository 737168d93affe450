"""Bi-invariant orders on Z^q and on central extensions by Z^q.

In a bi-ordered group, f < g implies f^m < g^m, so m-th roots are unique.
``LexExtension`` orders a central extension lexicographically: first by the
image in the quotient, then by the kernel element separating the two.
"""

from __future__ import annotations

import enum
import random


class Ordering(enum.Enum):
    Less = -1
    Equal = 0
    Greater = 1

    def __str__(self):
        return self.name


def _sign(x: int) -> Ordering:
    return Ordering.Less if x < 0 else Ordering.Greater if x > 0 else Ordering.Equal


class OrderedGroup:
    """Interface: identity, multiply, inverse, compare, random_element."""

    def identity(self):
        raise NotImplementedError

    def multiply(self, x, y):
        raise NotImplementedError

    def inverse(self, x):
        raise NotImplementedError

    def compare(self, x, y) -> Ordering:
        raise NotImplementedError

    def random_element(self, rng: random.Random, size: int = 5):
        raise NotImplementedError

    def power(self, x, m: int):
        base = x if m >= 0 else self.inverse(x)
        out = self.identity()
        m = abs(m)
        while m:
            if m & 1:
                out = self.multiply(out, base)
            base = self.multiply(base, base)
            m >>= 1
        return out

    def is_positive(self, x) -> bool:
        return self.compare(x, self.identity()) is Ordering.Greater

    def less(self, x, y) -> bool:
        return self.compare(x, y) is Ordering.Less


class LexZq(OrderedGroup):
    """Z^q with the lexicographic order."""

    def __init__(self, q: int):
        if q < 1:
            raise ValueError("q must be >= 1")
        self.q = q

    def __repr__(self):
        return f"LexZq({self.q})"

    def _check(self, x):
        if len(x) != self.q:
            raise ValueError(f"expected a vector of length {self.q}, got {x!r}")
        return tuple(int(v) for v in x)

    def identity(self):
        return (0,) * self.q

    def multiply(self, x, y):
        return tuple(a + b for a, b in zip(self._check(x), self._check(y)))

    def inverse(self, x):
        return tuple(-a for a in self._check(x))

    def power(self, x, m: int):
        return tuple(m * a for a in self._check(x))

    def compare(self, x, y) -> Ordering:
        for a, b in zip(self._check(x), self._check(y)):
            if a != b:
                return _sign(a - b)
        return Ordering.Equal

    def random_element(self, rng: random.Random, size: int = 5):
        return tuple(rng.randint(-size, size) for _ in range(self.q))


class LexExtension(OrderedGroup):
    """Central extension 1 -> Z^k -> E -> Q -> 1 given by a normalized
    2-cocycle ``cocycle(a, b) -> tuple of k ints``.

    Elements are pairs (quotient part, kernel part) with
    (a, x)(b, y) = (ab, x + y + cocycle(a, b)).
    """

    def __init__(self, quotient: OrderedGroup, kernel_rank: int, cocycle, name: str = ""):
        self.quotient = quotient
        self.kernel = LexZq(kernel_rank)
        self.cocycle = cocycle
        self.name = name or f"LexExtension({quotient!r}, {kernel_rank})"

    def __repr__(self):
        return self.name

    def identity(self):
        return (self.quotient.identity(), self.kernel.identity())

    def multiply(self, x, y):
        (a, u), (b, v) = x, y
        k = self.kernel
        return (self.quotient.multiply(a, b), k.multiply(k.multiply(u, v), self.cocycle(a, b)))

    def inverse(self, x):
        a, u = x
        a_inv = self.quotient.inverse(a)
        k = self.kernel
        return (a_inv, k.inverse(k.multiply(u, self.cocycle(a, a_inv))))

    def project(self, x):
        return x[0]

    def compare(self, x, y) -> Ordering:
        first = self.quotient.compare(self.project(x), self.project(y))
        if first is not Ordering.Equal:
            return first
        # x y^-1 lies in the kernel
        diff = self.multiply(x, self.inverse(y))
        return self.kernel.compare(diff[1], self.kernel.identity())

    def random_element(self, rng: random.Random, size: int = 5):
        return (self.quotient.random_element(rng, size), self.kernel.random_element(rng, size))


def heisenberg() -> LexExtension:
    """Integer Heisenberg group as Z over Z^2 with cocycle x1*y2."""
    return LexExtension(LexZq(2), 1, lambda a, b: (a[0] * b[1],), name="heisenberg")


def iterated_heisenberg() -> LexExtension:
    """Z^2 central over the Heisenberg group, via a bilinear form on its
    abelianization; checks that the combinator nests."""
    def cocycle(a, b):
        (x1, y1), _ = a
        (x2, y2), _ = b
        return (x1 * y2, y1 * x2 - x1 * x2)

    return LexExtension(heisenberg(), 2, cocycle, name="iterated_heisenberg")


def compare(G: OrderedGroup, x, y) -> Ordering:
    return G.compare(x, y)


def unique_root_check(G: OrderedGroup, f, g, m: int) -> bool:
    """(f^m == g^m) implies (f == g), evaluated on the given elements."""
    if m < 1:
        raise ValueError("m must be >= 1")
    same_power = G.compare(G.power(f, m), G.power(g, m)) is Ordering.Equal
    return (not same_power) or G.compare(f, g) is Ordering.Equal


def bi_invariance_counterexamples(G: OrderedGroup, rng: random.Random, samples: int,
                                  size: int = 5) -> list:
    """Samples (f, g, h1, h2) with f < g but not h1 f h2 < h1 g h2."""
    bad = []
    for _ in range(samples):
        f, g = G.random_element(rng, size), G.random_element(rng, size)
        if G.compare(f, g) is Ordering.Equal:
            continue
        if G.compare(f, g) is Ordering.Greater:
            f, g = g, f
        h1, h2 = G.random_element(rng, size), G.random_element(rng, size)
        left = G.multiply(G.multiply(h1, f), h2)
        right = G.multiply(G.multiply(h1, g), h2)
        if not G.less(left, right):
            bad.append((f, g, h1, h2))
    return bad


def root_uniqueness_counterexamples(G: OrderedGroup, rng: random.Random, samples: int,
                                    max_m: int = 10, size: int = 3) -> list:
    """Samples where f^m = g^m with f != g, or f < g without f^m < g^m.

    Half of the pairs are forced to share a quotient image so that the
    kernel tiebreak is exercised.
    """
    bad = []
    for i in range(samples):
        f = G.random_element(rng, size)
        g = G.random_element(rng, size)
        if i % 2 and isinstance(G, LexExtension):
            g = (f[0], g[1])
        m = rng.randint(1, max_m)
        if not unique_root_check(G, f, g, m):
            bad.append((f, g, m))
            continue
        order = G.compare(f, g)
        if order is not Ordering.Equal:
            lo, hi = (f, g) if order is Ordering.Less else (g, f)
            if not G.less(G.power(lo, m), G.power(hi, m)):
                bad.append((f, g, m))
    return bad


INSTANCES = {
    "Z1": lambda: LexZq(1),
    "Z2": lambda: LexZq(2),
    "Z3": lambda: LexZq(3),
    "Z5": lambda: LexZq(5),
    "heisenberg": heisenberg,
    "iterated_heisenberg": iterated_heisenberg,
}


def instance(name: str) -> OrderedGroup:
    if name.startswith("Z") and name[1:].isdigit():
        return LexZq(int(name[1:]))
    try:
        return INSTANCES[name]()
    except KeyError:
        raise ValueError(f"unknown ordered group {name!r}; known: {sorted(INSTANCES)}") from None
