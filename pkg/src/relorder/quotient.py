"""Mutual-reachability classes, the induced order on them, and choice functions."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Mapping, Optional

from .relation import ElementSet, Relation, bits, to_mask, transitive_closure


class ChoiceContractError(ValueError):
    """A selector returned something outside its argument."""


def strongly_connected_components(rows: tuple[int, ...]) -> list[list[int]]:
    """Tarjan's algorithm with an explicit stack.

    ``rows`` are successor bitmasks.  Components come out in the usual
    Tarjan order (sinks of the condensation first).
    """
    n = len(rows)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, bits(rows[root]))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, bits(rows[w])))
                    advanced = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


@dataclass(frozen=True)
class Partition:
    """Classes of mutual reachability.

    Class ids are ranks by smallest member, so class 0 holds element 0.
    """

    class_of: tuple[int, ...]
    classes: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        seen = 0
        for cid, members in enumerate(self.classes):
            if not members:
                raise ValueError(f"class {cid} is empty")
            mask = to_mask(members)
            if mask & seen:
                raise ValueError("classes overlap")
            seen |= mask
            for x in members:
                if self.class_of[x] != cid:
                    raise ValueError(f"class_of[{x}] disagrees with class {cid}")
        if seen != (1 << len(self.class_of)) - 1:
            raise ValueError("classes do not cover the universe")

    def __len__(self) -> int:
        return len(self.classes)

    def project(self, subset: Iterable[int]) -> frozenset[int]:
        """Canonical projection of a set of elements to its set of class ids."""
        return frozenset(self.class_of[x] for x in subset)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(to_mask(c) for c in self.classes)


@dataclass(frozen=True)
class QuotientRelation:
    """The induced order on classes; ``rows[c]`` is a bitmask of class ids."""

    partition: Partition
    rows: tuple[int, ...]
    labels: tuple[str, ...]

    @cached_property
    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset((c, d) for c, row in enumerate(self.rows) for d in bits(row))

    def as_relation(self) -> Relation:
        """The order as a :class:`Relation` whose elements are the class ids."""
        universe = ElementSet(tuple(str(c) for c in range(len(self.rows))))
        return Relation(universe, self.rows, "quotient order")

    def class_label(self, cid: int) -> str:
        return ",".join(self.labels[x] for x in sorted(self.partition.classes[cid]))

    def covering_pairs(self) -> list[tuple[int, int]]:
        """Non-diagonal pairs with nothing strictly in between."""
        out = []
        for c, row in enumerate(self.rows):
            strict = row & ~(1 << c)
            for d in bits(strict):
                between = strict & ~(1 << d)
                if not any(self.rows[e] >> d & 1 for e in bits(between)):
                    out.append((c, d))
        return out


def _partition_from_components(n: int, comps: Iterable[Iterable[int]]) -> Partition:
    ordered = sorted((sorted(c) for c in comps), key=lambda c: c[0])
    class_of = [0] * n
    for cid, members in enumerate(ordered):
        for x in members:
            class_of[x] = cid
    return Partition(tuple(class_of), tuple(frozenset(c) for c in ordered))


def equivalence_classes(r: Relation) -> Partition:
    """Classes of ``x ~ y`` iff ``x == y`` or each reaches the other."""
    if r.n == 0:
        raise ValueError("empty universe")
    return _partition_from_components(r.n, strongly_connected_components(r.rows))


def quotient_relation(r: Relation, closure: Optional[Relation] = None) -> QuotientRelation:
    """Class ``C`` relates to ``D`` iff ``C == D`` or some member of ``C`` reaches one of ``D``."""
    if r.n == 0:
        raise ValueError("empty universe")
    part = equivalence_classes(r)
    closure = transitive_closure(r) if closure is None else closure
    class_of = part.class_of
    rows = []
    for cid, members in enumerate(part.classes):
        reach = 0
        for x in members:
            reach |= closure.rows[x]
        row = 1 << cid
        for y in bits(reach):
            row |= 1 << class_of[y]
        rows.append(row)
    return QuotientRelation(part, tuple(rows), r.labels)


def representative(partition: Partition, cid: int, within: Optional[Iterable[int]] = None) -> int:
    """Smallest member of class ``cid``, optionally restricted to ``within``."""
    if not 0 <= cid < len(partition.classes):
        raise ValueError(f"no class with id {cid}")
    members = partition.classes[cid]
    if within is not None:
        members = members & frozenset(within)
        if not members:
            raise ValueError(f"class {cid} does not meet the given subset")
    return min(members)


class ChoiceFunction:
    """Selector with ``f(A) in A`` for every nonempty ``A``.

    Wraps any callable from a frozenset to one of its members and checks
    the contract on every call.
    """

    TABLE_LIMIT = 16

    def __init__(self, rule: Callable[[frozenset[int]], int], name: str = "rule"):
        self._rule = rule
        self.name = name

    def __call__(self, subset: Iterable[int]) -> int:
        subset = frozenset(subset)
        if not subset:
            raise ValueError("choice on the empty set")
        x = self._rule(subset)
        if x not in subset:
            raise ChoiceContractError(f"{self.name} picked {x!r} outside {sorted(subset)}")
        return x

    select = __call__

    def __repr__(self) -> str:
        return f"ChoiceFunction({self.name})"

    @classmethod
    def from_table(cls, table: Mapping[frozenset[int], int]) -> "ChoiceFunction":
        """Extensional selector; intended for test scaffolding on small universes."""
        universe = frozenset().union(*table) if table else frozenset()
        if len(universe) > cls.TABLE_LIMIT:
            raise ValueError(f"choice tables are limited to {cls.TABLE_LIMIT} elements")
        frozen = {frozenset(k): v for k, v in table.items()}

        def lookup(subset: frozenset[int]) -> int:
            try:
                return frozen[subset]
            except KeyError:
                raise ValueError(f"table has no entry for {sorted(subset)}") from None

        return cls(lookup, "table")


min_index = ChoiceFunction(min, "min-index")


def pullback_choice(fq: ChoiceFunction, partition: Partition) -> ChoiceFunction:
    """Lift a choice on class ids to elements: project, choose a class, pick its
    smallest member inside the argument."""

    def rule(subset: frozenset[int]) -> int:
        return representative(partition, fq(partition.project(subset)), within=subset)

    return ChoiceFunction(rule, f"pullback({getattr(fq, 'name', 'fq')})")


def maximal_classes(q: QuotientRelation, cids: Iterable[int]) -> list[int]:
    """Classes in ``cids`` not strictly above-ranked by another class of ``cids``."""
    mask = to_mask(cids)
    out = []
    for c in bits(mask):
        others = mask & ~(1 << c)
        if not any(q.rows[d] >> c & 1 for d in bits(others)):
            out.append(c)
    return out


def derive_choice(r: Relation) -> ChoiceFunction:
    """Choose the smallest-id maximal class among the projected set, then pull back."""
    q = quotient_relation(r)
    fq = ChoiceFunction(lambda cids: maximal_classes(q, cids)[0], "min maximal class")
    return pullback_choice(fq, q.partition)
