"""SplitMix64 and the seeded relation generators built on it.

The generator is specified bit-exactly so that other implementations can
reproduce the same instances:

* state update: ``state = (state + 0x9E3779B97F4A7C15) mod 2**64``
* output: ``mix64(state)`` where ``mix64(z)`` is
  ``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
  z *= 0x94D049BB133111EB; z ^= z >> 31`` (all mod 2**64)
* uniform double: ``(next() >> 11) * 2**-53``
* stream ``i`` of master seed ``s`` is seeded with
  ``mix64((s + (i + 1) * 0x9E3779B97F4A7C15) mod 2**64)``, i.e. the
  ``(i+1)``-th output of a generator seeded with ``s``.
"""
from __future__ import annotations

from .relation import ElementSet, Relation, transitive_closure

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return mix64(self.state)

    def random(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next()
            if x < limit:
                return x % bound

    @classmethod
    def stream(cls, seed: int, index: int) -> "SplitMix64":
        return cls(mix64((seed + (index + 1) * GAMMA) & MASK64))


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(n))


def random_relation(n: int, density: float, rng: SplitMix64, self_loops: bool = True) -> Relation:
    """Each pair ``(u, v)`` kept independently with probability ``density``.

    Pairs are visited row-major (u outer, v inner), one draw per visited
    pair; with ``self_loops=False`` the diagonal is skipped without a draw.
    """
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rows = []
    for u in range(n):
        row = 0
        for v in range(n):
            if u == v and not self_loops:
                continue
            if rng.random() < density:
                row |= 1 << v
        rows.append(row)
    return Relation(ElementSet(default_labels(n)), tuple(rows), "random")


def random_partial_order(n: int, density: float, rng: SplitMix64) -> Relation:
    """Reflexive-transitive closure of a random DAG.

    A uniformly shuffled ranking (Fisher-Yates from the top) orients each
    drawn pair from higher to lower rank, so every element can end up on
    top.
    """
    order = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        order[i], order[j] = order[j], order[i]
    rows = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                rows[order[a]] |= 1 << order[b]
    dag = Relation(ElementSet(default_labels(n)), tuple(rows))
    closed = transitive_closure(dag)
    return Relation(dag.universe, tuple(row | 1 << i for i, row in enumerate(closed.rows)), "random partial order")
