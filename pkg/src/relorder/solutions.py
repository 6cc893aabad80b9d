"""Chains, bounds, undominated sets, top cycles and Schwartz choice sets.

Convention: ``(u, v)`` in R means u dominates v.  A set is undominated when
no outside element dominates a member, so the minimal undominated sets are
exactly the source components of the condensation.  A top cycle is an
undominated cycle; a singleton counts as a (trivial) cycle even without a
self-loop.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Literal, NamedTuple, Optional

from .quotient import equivalence_classes
from .relation import (
    Relation,
    asymmetric_part,
    bits,
    full_mask,
    restrict,
    to_mask,
    transitive_closure,
    undominated_mask,
)

Variant = Literal["gocha", "strict"]


class NotAChainError(ValueError):
    pass


class Verdict(NamedTuple):
    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.holds


def _mask_in_range(r: Relation, subset: Iterable[int]) -> int:
    mask = 0
    for i in subset:
        if not 0 <= i < r.n:
            raise ValueError(f"index {i} out of range for n={r.n}")
        mask |= 1 << i
    return mask


def _sorted_sets(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    return sorted(sets, key=sorted)


@dataclass(frozen=True)
class Chain:
    """A pairwise comparable set plus, per member pair, the direction that holds."""

    members: frozenset[int]
    order_witness: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)

    @classmethod
    def of(cls, r: Relation, subset: Iterable[int]) -> "Chain":
        members = sorted(set(subset))
        verdict = is_chain(r, members)
        if not verdict:
            raise NotAChainError(f"{verdict.witness} are not comparable")
        witness = {}
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                witness[(x, y)] = (x, y) if r.has(x, y) else (y, x)
        return cls(frozenset(members), witness)


def is_chain(r: Relation, subset: Iterable[int]) -> Verdict:
    """Every two distinct members are related one way or the other."""
    mask = _mask_in_range(r, subset)
    rows, cols = r.rows, r.columns
    for x in bits(mask):
        gap = mask & ~(rows[x] | cols[x]) & ~(1 << x)
        if gap:
            y = (gap & -gap).bit_length() - 1
            return Verdict(False, (min(x, y), max(x, y)))
    return Verdict(True)


def upper_bounds_mask(r: Relation, mask: int, strict: bool = False) -> int:
    rel = asymmetric_part(r) if strict else r
    cols = rel.columns
    out = full_mask(r.n)
    for y in bits(mask):
        out &= cols[y]
        if not out:
            break
    return out


def upper_bounds(r: Relation, chain: Iterable[int], strict: bool = False) -> frozenset[int]:
    """Elements ``x`` with ``x R y`` (``x P(R) y`` if strict) for every chain member ``y``.

    ``x`` may belong to the chain.  The empty chain is bounded by everything.
    """
    members = list(chain)
    verdict = is_chain(r, members)
    if not verdict:
        raise NotAChainError(f"{verdict.witness} are not comparable")
    return frozenset(bits(upper_bounds_mask(r, to_mask(members), strict)))


def maximal_elements(r: Relation) -> frozenset[int]:
    """Elements nobody strictly dominates."""
    strict = asymmetric_part(r)
    return frozenset(x for x, col in enumerate(strict.columns) if not col)


def is_undominated(r: Relation, subset: Iterable[int]) -> Verdict:
    """True iff no outside ``y`` and member ``x`` have ``y R x``; else witness ``(y, x)``."""
    mask = _mask_in_range(r, subset)
    if not mask:
        raise ValueError("undominatedness is defined for nonempty sets")
    hit = undominated_mask(r, mask)
    return Verdict(True) if hit is None else Verdict(False, hit)


def _source_components(r: Relation) -> list[frozenset[int]]:
    part = equivalence_classes(r)
    out = []
    for members, mask in zip(part.classes, part.masks):
        if undominated_mask(r, mask) is None:
            out.append(members)
    return out


def minimal_undominated_sets(r: Relation) -> list[frozenset[int]]:
    """Source components of the condensation, in lexicographic order."""
    if r.n == 0:
        raise ValueError("empty universe")
    return _sorted_sets(_source_components(r))


@dataclass(frozen=True)
class CycleWitness:
    """An undominated cycle with lazily built path certificates.

    ``closure_cert[(x, y)]`` is an R-path from x to y of length at least one
    for every ordered member pair; it is empty for trivial singletons.
    """

    members: frozenset[int]
    trivial: bool
    relation: Relation = field(repr=False, compare=False)

    @cached_property
    def closure_cert(self) -> dict[tuple[int, int], tuple[int, ...]]:
        if self.trivial:
            return {}
        mask = to_mask(self.members)
        rows = self.relation.rows
        cert = {}
        for x in sorted(self.members):
            # BFS from x's successors so that (x, x) gets a proper cycle
            parent: dict[int, int] = {}
            queue = deque()
            for v in bits(rows[x] & mask):
                parent[v] = x
                queue.append(v)
            while queue:
                u = queue.popleft()
                for v in bits(rows[u] & mask):
                    if v not in parent:
                        parent[v] = u
                        queue.append(v)
            for y in sorted(self.members):
                path = [y]
                node = parent[y]
                while node != x:
                    path.append(node)
                    node = parent[node]
                path.append(x)
                cert[(x, y)] = tuple(reversed(path))
        return cert

    def sorted_members(self) -> list[int]:
        return sorted(self.members)


def top_cycles(r: Relation) -> list[CycleWitness]:
    if r.n == 0:
        raise ValueError("empty universe")
    out = []
    for members in minimal_undominated_sets(r):
        trivial = len(members) == 1 and not r.has(next(iter(members)), next(iter(members)))
        out.append(CycleWitness(members, trivial, r))
    return out


def strong_top_cycles(r: Relation) -> list[CycleWitness]:
    """Top cycles of the strict part."""
    return top_cycles(asymmetric_part(r))


def schwartz(r: Relation, variant: Variant = "gocha") -> frozenset[int]:
    """Union of the minimal undominated sets of R (gocha) or of P(R) (strict)."""
    if variant == "gocha":
        base = r
    elif variant == "strict":
        base = asymmetric_part(r)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    out: frozenset[int] = frozenset()
    for s in minimal_undominated_sets(base):
        out |= s
    return out


def gocha_choice(r: Relation, subset: Iterable[int]) -> frozenset[int]:
    """Schwartz set of R restricted to ``subset``, in original indices.

    Dominators are looked for inside the subset only.
    """
    keep = sorted(set(subset))
    if not keep:
        raise ValueError("choice on the empty set")
    local = schwartz(restrict(r, keep), "gocha")
    return frozenset(keep[i] for i in local)


@dataclass(frozen=True)
class DebEntry:
    members: frozenset[int]
    kind: str  # "element", "cycle" or "violation"
    witness: Optional[tuple] = None


@dataclass(frozen=True)
class DebReport:
    strict: tuple[DebEntry, ...]
    literal: tuple[DebEntry, ...]

    @property
    def strict_violations(self) -> list[DebEntry]:
        return [e for e in self.strict if e.kind == "violation"]

    @property
    def literal_violations(self) -> list[DebEntry]:
        return [e for e in self.literal if e.kind == "violation"]


def _mutual_gap(closure_rows: tuple[int, ...], members: frozenset[int]) -> Optional[tuple[int, int]]:
    mask = to_mask(members)
    for x in sorted(members):
        gap = mask & ~closure_rows[x]
        if gap:
            gap = gap & ~(1 << x) or gap
            return (x, (gap & -gap).bit_length() - 1)
    return None


def deb_decompose(r: Relation) -> DebReport:
    """Split each minimal undominated set into an undominated element or a top cycle.

    Strict variant: minimal P(R)-undominated sets, each a singleton or a
    non-trivial top P(R)-cycle.  Literal variant: minimal R-undominated
    sets checked against the same two shapes (singleton, or a strong top
    cycle); failures carry a member pair ``(x, y)`` where y is not
    P(R)-reachable from x.
    """
    if r.n == 0:
        raise ValueError("empty universe")
    strict_rel = asymmetric_part(r)
    strict_reach = transitive_closure(strict_rel).rows

    def shape(members: frozenset[int]) -> DebEntry:
        if len(members) == 1:
            return DebEntry(members, "element")
        gap = _mutual_gap(strict_reach, members)
        if gap is None and undominated_mask(strict_rel, to_mask(members)) is None:
            return DebEntry(members, "cycle")
        return DebEntry(members, "violation", gap)

    strict = tuple(shape(m) for m in minimal_undominated_sets(strict_rel))
    literal = tuple(shape(m) for m in minimal_undominated_sets(r))
    return DebReport(strict, literal)


@dataclass(frozen=True)
class SolutionReport:
    maximal: frozenset[int]
    minimal_undominated: tuple[frozenset[int], ...]
    top_cycles: tuple[CycleWitness, ...]
    strong_top_cycles: tuple[CycleWitness, ...]
    schwartz_gocha: frozenset[int]
    schwartz_strict: frozenset[int]
    deb: DebReport


def solve(r: Relation) -> SolutionReport:
    mins = minimal_undominated_sets(r)
    gocha: frozenset[int] = frozenset().union(*mins)
    return SolutionReport(
        maximal=maximal_elements(r),
        minimal_undominated=tuple(mins),
        top_cycles=tuple(top_cycles(r)),
        strong_top_cycles=tuple(strong_top_cycles(r)),
        schwartz_gocha=gocha,
        schwartz_strict=schwartz(r, "strict"),
        deb=deb_decompose(r),
    )
