"""Reduced words and endomorphisms of finitely generated free groups.

A word is a tuple of nonzero ints: ``i`` is generator ``i`` (1-based) and
``-i`` its inverse. Composition ``compose(e1, e2)`` applies ``e2`` first.
"""

from __future__ import annotations

from dataclasses import dataclass


def reduce(letters, rank: int | None = None) -> tuple[int, ...]:
    """Freely reduce a letter sequence. Raises on 0 or out-of-range letters."""
    out: list[int] = []
    for x in letters:
        x = int(x)
        if x == 0:
            raise ValueError("letter 0 is not a generator")
        if rank is not None and abs(x) > rank:
            raise ValueError(f"letter {x} out of range for rank {rank}")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(word) -> tuple[int, ...]:
    return tuple(-x for x in reversed(word))


def multiply(*words) -> tuple[int, ...]:
    joined: list[int] = []
    for w in words:
        joined.extend(w)
    return reduce(joined)


def power(word, n: int) -> tuple[int, ...]:
    base = word if n >= 0 else inverse(word)
    return reduce(tuple(base) * abs(n))


def conjugate(word, by) -> tuple[int, ...]:
    """by * word * by^-1"""
    return multiply(by, word, inverse(by))


@dataclass(frozen=True)
class FreeEndo:
    rank: int
    images: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise ValueError(f"expected {self.rank} images, got {len(self.images)}")
        reduced = tuple(reduce(img, self.rank) for img in self.images)
        object.__setattr__(self, "images", reduced)

    @classmethod
    def identity(cls, rank: int) -> "FreeEndo":
        return cls(rank, tuple((i,) for i in range(1, rank + 1)))

    @classmethod
    def from_images(cls, images) -> "FreeEndo":
        images = tuple(tuple(img) for img in images)
        return cls(len(images), images)

    def __call__(self, word) -> tuple[int, ...]:
        return apply(self, word)

    def __matmul__(self, other: "FreeEndo") -> "FreeEndo":
        return compose(self, other)

    def to_json(self):
        return {"rank": self.rank, "images": [list(w) for w in self.images]}

    @classmethod
    def from_json(cls, data) -> "FreeEndo":
        return cls(int(data["rank"]), tuple(tuple(int(x) for x in w) for w in data["images"]))


def _check_rank(e: FreeEndo, rank: int):
    if e.rank != rank:
        raise ValueError(f"rank mismatch: {e.rank} vs {rank}")


def apply(e: FreeEndo, word) -> tuple[int, ...]:
    out: list[int] = []
    for x in word:
        if x == 0 or abs(x) > e.rank:
            raise ValueError(f"letter {x} out of range for rank {e.rank}")
        img = e.images[x - 1] if x > 0 else inverse(e.images[-x - 1])
        for y in img:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def compose(e1: FreeEndo, e2: FreeEndo) -> FreeEndo:
    """e1 o e2: generator g goes to e1(e2(g))."""
    _check_rank(e1, e2.rank)
    return FreeEndo(e1.rank, tuple(apply(e1, img) for img in e2.images))


def equal(e1: FreeEndo, e2: FreeEndo) -> bool:
    _check_rank(e1, e2.rank)
    return e1.images == e2.images


def endo_power(e: FreeEndo, n: int) -> FreeEndo:
    if n < 0:
        raise ValueError("use CertifiedAuto for negative powers")
    result = FreeEndo.identity(e.rank)
    base = e
    while n:
        if n & 1:
            result = compose(result, base)
        base = compose(base, base)
        n >>= 1
    return result


def exponent_sums(word, rank: int) -> list[int]:
    v = [0] * rank
    for x in word:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


def abelianization(e: FreeEndo) -> list[list[int]]:
    """Integer matrix whose column j is the exponent-sum vector of e(x_j)."""
    cols = [exponent_sums(img, e.rank) for img in e.images]
    return [[cols[j][i] for j in range(e.rank)] for i in range(e.rank)]


@dataclass(frozen=True)
class CertifiedAuto:
    """An automorphism together with an inverse that has been checked."""

    forward: FreeEndo
    backward: FreeEndo

    def __post_init__(self):
        ident = FreeEndo.identity(self.forward.rank)
        if not (equal(compose(self.forward, self.backward), ident)
                and equal(compose(self.backward, self.forward), ident)):
            raise ValueError("backward is not a two-sided inverse of forward")

    @property
    def rank(self) -> int:
        return self.forward.rank

    def inverse(self) -> "CertifiedAuto":
        return CertifiedAuto(self.backward, self.forward)

    def __matmul__(self, other: "CertifiedAuto") -> "CertifiedAuto":
        return CertifiedAuto(compose(self.forward, other.forward),
                             compose(other.backward, self.backward))

    def power(self, n: int) -> "CertifiedAuto":
        base = self if n >= 0 else self.inverse()
        return CertifiedAuto(endo_power(base.forward, abs(n)), endo_power(base.backward, abs(n)))

    @classmethod
    def identity(cls, rank: int) -> "CertifiedAuto":
        ident = FreeEndo.identity(rank)
        return cls(ident, ident)
