"""Finite binary relations stored as packed adjacency rows.

Row ``u`` of a :class:`Relation` is an int whose bit ``v`` is set iff
``(u, v)`` is in the relation.  A pair ``(u, v)`` is read "u weakly
dominates v".  Every derived relation shares the universe of its source.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional

DENSE_CAP = 4096


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class ElementSet:
    """An ordered ground set of distinct text labels.

    Label order fixes the element indices ``0..n-1`` and every downstream
    tie-break.
    """

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(set(labels)) != len(labels):
            seen = set()
            dup = next(x for x in labels if x in seen or seen.add(x))
            raise ValueError(f"duplicate label {dup!r}")

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown label {label!r}") from None

    def names(self, indices: Iterable[int]) -> list[str]:
        return [self.labels[i] for i in sorted(indices)]


@dataclass(frozen=True)
class Relation:
    """A set of ordered pairs over an :class:`ElementSet`."""

    universe: ElementSet
    rows: tuple[int, ...]
    note: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        n = self.universe.n
        if n > DENSE_CAP:
            raise ValueError(f"universe of {n} elements exceeds DENSE_CAP={DENSE_CAP}")
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        limit = 1 << n
        for u, row in enumerate(rows):
            if row < 0 or row >= limit:
                raise ValueError(f"row {u} references an index outside 0..{n - 1}")

    # construction

    @classmethod
    def from_index_pairs(
        cls, universe: ElementSet | Iterable[str], pairs: Iterable[tuple[int, int]], note: str = ""
    ) -> "Relation":
        if not isinstance(universe, ElementSet):
            universe = ElementSet(tuple(universe))
        n = universe.n
        rows = [0] * n
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"pair ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
        return cls(universe, tuple(rows), note)

    @classmethod
    def from_pairs(
        cls, labels: Iterable[str], pairs: Iterable[tuple[str, str]], note: str = ""
    ) -> "Relation":
        """Build from label pairs; every label must appear in ``labels``."""
        universe = ElementSet(tuple(labels))
        idx = [(universe.index(a), universe.index(b)) for a, b in pairs]
        return cls.from_index_pairs(universe, idx, note)

    @classmethod
    def empty(cls, labels: Iterable[str]) -> "Relation":
        universe = ElementSet(tuple(labels))
        return cls(universe, (0,) * universe.n)

    @classmethod
    def diagonal(cls, universe: ElementSet) -> "Relation":
        return cls(universe, tuple(1 << i for i in range(universe.n)), "diagonal")

    # views

    @property
    def n(self) -> int:
        return self.universe.n

    @property
    def labels(self) -> tuple[str, ...]:
        return self.universe.labels

    @cached_property
    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, row in enumerate(self.rows) for v in bits(row))

    @cached_property
    def columns(self) -> tuple[int, ...]:
        """Transposed rows: bit ``u`` of ``columns[v]`` is set iff ``(u, v)`` in R."""
        cols = [0] * self.n
        for u, row in enumerate(self.rows):
            for v in bits(row):
                cols[v] |= 1 << u
        return tuple(cols)

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)

    def label_pairs(self) -> list[tuple[str, str]]:
        lab = self.labels
        return [(lab[u], lab[v]) for u, v in self.sorted_pairs()]

    def has(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def __contains__(self, pair: tuple[int, int]) -> bool:
        u, v = pair
        return 0 <= u < self.n and 0 <= v < self.n and self.has(u, v)

    def __len__(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def issubset(self, other: "Relation") -> bool:
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def union(self, other: "Relation") -> "Relation":
        if other.universe != self.universe:
            raise ValueError("relations live on different universes")
        return Relation(self.universe, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def with_note(self, note: str) -> "Relation":
        return Relation(self.universe, self.rows, note)


@dataclass(frozen=True)
class PropertyReport:
    reflexive: bool
    transitive: bool
    antisymmetric: bool
    total: bool
    witness: dict[str, tuple] = field(default_factory=dict)

    @property
    def is_partial_order(self) -> bool:
        return self.reflexive and self.transitive and self.antisymmetric

    @property
    def is_total_order(self) -> bool:
        return self.is_partial_order and self.total

    def as_dict(self) -> dict:
        return {
            "reflexive": self.reflexive,
            "transitive": self.transitive,
            "antisymmetric": self.antisymmetric,
            "total": self.total,
            "is_partial_order": self.is_partial_order,
            "is_total_order": self.is_total_order,
            "witness": dict(self.witness),
        }


def asymmetric_part(r: Relation) -> Relation:
    """Pairs of ``r`` whose reverse is absent (strict dominance)."""
    cols = r.columns
    return Relation(r.universe, tuple(row & ~col for row, col in zip(r.rows, cols)), "asymmetric part")


def transitive_closure(r: Relation) -> Relation:
    """Pairs joined by a path of one or more steps.

    Row-OR sweep over pivots (Warshall).  No reflexive padding: ``(x, x)``
    appears only when ``x`` sits on a cycle or carries a self-loop.
    """
    rows = list(r.rows)
    n = len(rows)
    for k in range(n):
        bit = 1 << k
        rk = rows[k]
        if not rk:
            continue
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rk
    return Relation(r.universe, tuple(rows), "transitive closure")


def strict_closure_order(r: Relation) -> Relation:
    """``P(closure(r))`` plus the diagonal; always a partial order."""
    strict = asymmetric_part(transitive_closure(r))
    return Relation(
        r.universe,
        tuple(row | (1 << i) for i, row in enumerate(strict.rows)),
        "strict closure order",
    )


def classify(r: Relation) -> PropertyReport:
    """Check reflexivity, transitivity, antisymmetry and totality.

    Each failed property gets the first counterexample in index order:
    ``reflexive -> (x,)``, ``transitive -> ((x,z), (z,y), (x,y))``,
    ``antisymmetric -> (x, y)``, ``total -> (x, y)``.  Totality compares
    distinct elements only.
    """
    n = r.n
    rows = r.rows
    cols = r.columns
    witness: dict[str, tuple] = {}

    reflexive = True
    for x in range(n):
        if not rows[x] >> x & 1:
            reflexive = False
            witness["reflexive"] = (x,)
            break

    transitive = True
    for x in range(n):
        for z in bits(rows[x]):
            missing = rows[z] & ~rows[x]
            if missing:
                y = (missing & -missing).bit_length() - 1
                transitive = False
                witness["transitive"] = ((x, z), (z, y), (x, y))
                break
        if not transitive:
            break

    antisymmetric = True
    for x in range(n):
        both = rows[x] & cols[x] & ~(1 << x)
        if both:
            y = (both & -both).bit_length() - 1
            antisymmetric = False
            witness["antisymmetric"] = (x, y)
            break

    total = True
    everything = full_mask(n)
    for x in range(n):
        gap = everything & ~(rows[x] | cols[x]) & ~(1 << x)
        if gap:
            y = (gap & -gap).bit_length() - 1
            total = False
            witness["total"] = (x, y)
            break

    return PropertyReport(reflexive, transitive, antisymmetric, total, witness)


def restrict(r: Relation, subset: Iterable[int]) -> Relation:
    """The pairs of ``r`` inside ``subset x subset``, reindexed in index order."""
    keep = sorted(set(subset))
    for i in keep:
        if not 0 <= i < r.n:
            raise ValueError(f"index {i} out of range for n={r.n}")
    pos = {old: new for new, old in enumerate(keep)}
    mask = to_mask(keep)
    rows = []
    for old in keep:
        row = 0
        for v in bits(r.rows[old] & mask):
            row |= 1 << pos[v]
        rows.append(row)
    universe = ElementSet(tuple(r.labels[i] for i in keep))
    return Relation(universe, tuple(rows), "restriction")


def undominated_mask(r: Relation, mask: int) -> Optional[tuple[int, int]]:
    """First ``(y, x)`` with ``x`` in ``mask``, ``y`` outside and ``y R x``; None if none."""
    outside = full_mask(r.n) & ~mask
    cols = r.columns
    for x in bits(mask):
        hit = cols[x] & outside
        if hit:
            return ((hit & -hit).bit_length() - 1, x)
    return None
