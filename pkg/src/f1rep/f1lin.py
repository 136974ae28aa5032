"""
Linear algebra over F1.

An F1-vector space of dimension n is the pointed set {0, 1, ..., n} with
basepoint 0.  A morphism is a pointed map that is injective away from the
preimage of 0, i.e. a partial injection.  Maps are stored as a tuple
``image`` where ``image[k-1]`` is the image of the nonzero element k.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, factorial


@dataclass(frozen=True, order=True)
class F1Map:
    src: int
    tgt: int
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        if self.src < 0 or self.tgt < 0:
            raise ValueError("dimensions must be non-negative")
        if len(image) != self.src:
            raise ValueError(f"image has length {len(image)}, expected {self.src}")
        seen = set()
        for j in image:
            if not 0 <= j <= self.tgt:
                raise ValueError(f"image entry {j} outside [0, {self.tgt}]")
            if j:
                if j in seen:
                    raise ValueError(f"not injective away from the kernel: {image}")
                seen.add(j)

    def __call__(self, k: int) -> int:
        return self.image[k - 1] if k else 0

    def __repr__(self):
        body = ", ".join(f"{k}->{j}" for k, j in enumerate(self.image, 1))
        return f"F1Map[{self.src}->{self.tgt}]({body})"

    @property
    def kernel(self) -> frozenset[int]:
        """Nonzero elements sent to 0 (the basepoint is always in the kernel)."""
        return frozenset(k for k, j in enumerate(self.image, 1) if j == 0)

    @property
    def image_set(self) -> frozenset[int]:
        return frozenset(j for j in self.image if j)

    @property
    def rank(self) -> int:
        return len(self.image_set)

    def is_zero(self) -> bool:
        return not any(self.image)

    def is_injective(self) -> bool:
        return all(self.image)

    def is_surjective(self) -> bool:
        return self.rank == self.tgt

    def is_iso(self) -> bool:
        return self.src == self.tgt and self.is_injective()

    def to_json(self) -> dict:
        return {"src": self.src, "tgt": self.tgt, "image": list(self.image)}

    @classmethod
    def from_json(cls, data: dict) -> "F1Map":
        return cls(int(data["src"]), int(data["tgt"]), tuple(data["image"]))


def identity(n: int) -> F1Map:
    return F1Map(n, n, tuple(range(1, n + 1)))


def zero_map(a: int, b: int) -> F1Map:
    return F1Map(a, b, (0,) * a)


def from_dict(src: int, tgt: int, assignment: dict[int, int]) -> F1Map:
    """Build a map from ``{k: image}``; unlisted elements go to 0."""
    return F1Map(src, tgt, tuple(assignment.get(k, 0) for k in range(1, src + 1)))


def compose(g: F1Map, f: F1Map) -> F1Map:
    """Return g o f (apply f first)."""
    if f.tgt != g.src:
        raise ValueError(f"cannot compose: f lands in [{f.tgt}], g starts at [{g.src}]")
    return F1Map(f.src, g.tgt, tuple(g(j) for j in f.image))


def direct_sum(f: F1Map, g: F1Map) -> F1Map:
    """Block map on [f.src + g.src] -> [f.tgt + g.tgt]."""
    shifted = tuple(j + f.tgt if j else 0 for j in g.image)
    return F1Map(f.src + g.src, f.tgt + g.tgt, f.image + shifted)


def power(f: F1Map, k: int) -> F1Map:
    if f.src != f.tgt:
        raise ValueError("power of a non-endomorphism")
    out = identity(f.src)
    for _ in range(k):
        out = compose(f, out)
    return out


def is_nilpotent(f: F1Map) -> bool:
    """True iff no nonzero element lies on a cycle of f."""
    if f.src != f.tgt:
        raise ValueError("nilpotency is defined for endomorphisms only")
    # a partial injection is nilpotent iff every orbit reaches 0 within src steps
    for k in range(1, f.src + 1):
        x = k
        for _ in range(f.src):
            x = f(x)
            if x == 0:
                break
        else:
            return False
    return True


def inverse(f: F1Map) -> F1Map:
    if not f.is_iso():
        raise ValueError("only automorphisms are invertible")
    inv = [0] * f.src
    for k, j in enumerate(f.image, 1):
        inv[j - 1] = k
    return F1Map(f.tgt, f.src, tuple(inv))


def count_maps(a: int, b: int) -> int:
    """Closed form for the number of partial injections [a] -> [b]."""
    return sum(comb(a, k) * comb(b, k) * factorial(k) for k in range(min(a, b) + 1))


def enumerate_maps(a: int, b: int) -> list[F1Map]:
    """All partial injections [a] -> [b], lexicographic on the image tuple."""
    out = []

    def rec(prefix: list[int], used: set[int]):
        if len(prefix) == a:
            out.append(F1Map(a, b, tuple(prefix)))
            return
        for j in range(b + 1):
            if j and j in used:
                continue
            prefix.append(j)
            if j:
                used.add(j)
            rec(prefix, used)
            prefix.pop()
            used.discard(j)

    rec([], set())
    return out


def enumerate_injections(a: int, b: int) -> list[F1Map]:
    """Total injections [a] -> [b] (no nonzero element in the kernel)."""
    return [F1Map(a, b, p) for p in permutations(range(1, b + 1), a)]


def enumerate_automorphisms(n: int) -> list[F1Map]:
    return enumerate_injections(n, n)


def subsets(n: int):
    """All subsets of {1..n}, by size then lexicographically."""
    for k in range(n + 1):
        yield from combinations(range(1, n + 1), k)
