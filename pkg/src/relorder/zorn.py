"""Finite, constructive versions of the chain-extension arguments.

On a finite universe every tower collapses to plain iteration of an
expansive step that adds at most one element, so each construction here
is a loop run to its fixed point with the side conditions checked at
every step.  Ties are always broken by smallest index.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .quotient import ChoiceFunction, min_index
from .relation import (
    Relation,
    bits,
    classify,
    full_mask,
    strict_closure_order,
    to_mask,
    transitive_closure,
    undominated_mask,
)
from .solutions import Verdict, is_chain, top_cycles, upper_bounds_mask

HYPOTHESIS_GUARD = 20


class TowerError(RuntimeError):
    """A step function broke the expansive / one-element-increment rules."""


class GuardExceeded(ValueError):
    pass


@dataclass(frozen=True)
class TowerStep:
    current: frozenset[int]
    added: Optional[int]
    candidate_set: frozenset[int]

    def as_dict(self) -> dict:
        return {
            "current": sorted(self.current),
            "added": self.added,
            "candidates": sorted(self.candidate_set),
        }


@dataclass(frozen=True)
class ZornRun:
    steps: tuple[TowerStep, ...]
    terminal_chain: frozenset[int]
    pivot: Optional[int] = None
    extracted: frozenset[int] = frozenset()

    def as_dict(self, labels=None) -> dict:
        name = (lambda i: labels[i]) if labels else (lambda i: i)
        return {
            "steps": [
                {
                    "current": [name(i) for i in sorted(s.current)],
                    "added": None if s.added is None else name(s.added),
                    "candidates": [name(i) for i in sorted(s.candidate_set)],
                }
                for s in self.steps
            ],
            "terminal_chain": [name(i) for i in sorted(self.terminal_chain)],
            "pivot": None if self.pivot is None else name(self.pivot),
            "extracted": [name(i) for i in sorted(self.extracted)],
        }


def rudin_fixed_point(
    g: Callable[[frozenset[int]], frozenset[int]],
    start: frozenset[int] = frozenset(),
    cap: int = 1 << 16,
) -> frozenset[int]:
    """Iterate ``g`` from ``start`` until ``g(D) == D``.

    ``g`` must satisfy ``D <= g(D)`` and ``len(g(D) - D) <= 1``; both are
    checked each step, and more than ``cap`` steps raises.
    """
    current = frozenset(start)
    for _ in range(cap + 1):
        nxt = frozenset(g(current))
        if not current <= nxt:
            raise TowerError(f"step dropped {sorted(current - nxt)}")
        grown = nxt - current
        if not grown:
            return current
        if len(grown) > 1:
            raise TowerError(f"step added {len(grown)} elements {sorted(grown)}")
        current = nxt
    raise TowerError(f"no fixed point within {cap} steps")


def _chain_candidates(r: Relation, current: frozenset[int]) -> int:
    mask = to_mask(current)
    return upper_bounds_mask(r, mask) & ~mask


def chain_step(r: Relation, f: ChoiceFunction = min_index) -> Callable[[frozenset[int]], frozenset[int]]:
    """``D -> D | {f(D*)}`` where D* are the upper bounds of D outside D."""

    def g(current: frozenset[int]) -> frozenset[int]:
        cand = _chain_candidates(r, current)
        if not cand:
            return current
        return current | {f(frozenset(bits(cand)))}

    return g


def extend_chain(r: Relation, f: ChoiceFunction = min_index) -> ZornRun:
    """Grow a chain from the empty set by adding ``f`` of its outside upper bounds.

    Stops when no element outside the chain bounds it; at most ``n`` steps.
    """
    steps = []
    current: frozenset[int] = frozenset()
    for _ in range(r.n + 1):
        cand = frozenset(bits(_chain_candidates(r, current)))
        if not cand:
            steps.append(TowerStep(current, None, cand))
            return ZornRun(tuple(steps), current)
        x = f(cand)
        if x not in cand:
            raise TowerError(f"choice {x} is not an outside upper bound")
        steps.append(TowerStep(current, x, cand))
        current = current | {x}
    raise TowerError("chain extension did not stop within n steps")


@dataclass(frozen=True)
class ConformingChain:
    """Members in increasing order; ``below[x]`` holds the members strictly under x."""

    sequence: tuple[int, ...]
    below: dict[int, frozenset[int]] = field(default_factory=dict)

    def replay(self, f: Callable[[frozenset[int]], Optional[int]]) -> bool:
        """Each member is what ``f`` picks from the members below it."""
        return all(f(self.below[x]) == x for x in self.sequence)


def strict_upper_bound_mask(po: Relation, members: frozenset[int]) -> int:
    """Elements strictly above every member of ``members`` in ``po``."""
    cols = po.columns
    rows = po.rows
    out = full_mask(po.n)
    for y in members:
        # x over y strictly: (x, y) in po and (y, x) not in po
        out &= cols[y] & ~rows[y]
    return out


def least_strict_upper_bound(po: Relation) -> Callable[[frozenset[int]], Optional[int]]:
    """Selector returning a minimal strict upper bound (smallest index on ties), or None."""

    def f(chain: frozenset[int]) -> Optional[int]:
        cand = strict_upper_bound_mask(po, chain)
        for x in bits(cand):
            # minimal: no other candidate strictly below x
            below = po.rows[x] & ~po.columns[x] & cand
            if not below:
                return x
        return None

    return f


def min_strict_upper_bound(po: Relation) -> Callable[[frozenset[int]], Optional[int]]:
    def f(chain: frozenset[int]) -> Optional[int]:
        cand = strict_upper_bound_mask(po, chain)
        return (cand & -cand).bit_length() - 1 if cand else None

    return f


def conforming_chain(
    po: Relation, f: Optional[Callable[[frozenset[int]], Optional[int]]] = None
) -> ConformingChain:
    """Build A0 = {}, A(k+1) = A(k) | {f(A(k))} while ``f`` is defined.

    ``f`` maps a chain to one of its strict upper bounds, or None when it
    has none.  The last member of the result is maximal in ``po``.
    """
    report = classify(po)
    if not report.is_partial_order:
        raise ValueError(f"not a partial order: {report.witness}")
    f = least_strict_upper_bound(po) if f is None else f
    sequence: list[int] = []
    below: dict[int, frozenset[int]] = {}
    current: frozenset[int] = frozenset()
    for _ in range(po.n + 1):
        x = f(current)
        if x is None:
            return ConformingChain(tuple(sequence), below)
        if not strict_upper_bound_mask(po, current) >> x & 1:
            raise TowerError(f"{x} is not a strict upper bound of {sorted(current)}")
        sequence.append(x)
        below[x] = current
        current = current | {x}
    raise TowerError("conforming chain did not stop within n steps")


def check_hypothesis(r: Relation, guard: int = HYPOTHESIS_GUARD) -> Verdict:
    """Whether every chain, the empty one included, has an upper bound.

    Chains are enumerated depth-first in lexicographic order, extending
    only by larger indices comparable with every current member.  The
    witness is the first chain without an upper bound.
    """
    if r.n > guard:
        raise GuardExceeded(f"n={r.n} exceeds the chain-enumeration guard {guard}")
    n = r.n
    comparable = [r.rows[x] | r.columns[x] for x in range(n)]
    cols = r.columns
    everything = full_mask(n)
    # (chain mask, bounds mask, extension candidates)
    stack = [(0, everything, everything)]
    while stack:
        chain, bounds, ext = stack.pop()
        if not bounds:
            return Verdict(False, tuple(bits(chain)))
        children = []
        for x in bits(ext):
            higher = ext & ~((1 << (x + 1)) - 1)
            children.append((chain | 1 << x, bounds & cols[x], higher & comparable[x]))
        stack.extend(reversed(children))
    return Verdict(True)


def find_top_cycle_run(r: Relation) -> ZornRun:
    """Pick a maximal element of ``P(closure) | diagonal`` and grow it to a top cycle."""
    if r.n == 0:
        raise ValueError("empty universe")
    po = strict_closure_order(r)
    cols = po.columns
    pivot = next(x for x in range(r.n) if cols[x] == 1 << x)
    if undominated_mask(r, 1 << pivot) is None:
        extracted = frozenset({pivot})
    else:
        closure = transitive_closure(r)
        mutual = closure.rows[pivot] & closure.columns[pivot]
        extracted = frozenset(bits(mutual | 1 << pivot))
    return ZornRun((), frozenset({pivot}), pivot, extracted)


def find_top_cycle(r: Relation) -> frozenset[int]:
    return find_top_cycle_run(r).extracted


def _peel_to_minimal(r: Relation, chain: frozenset[int]) -> Optional[frozenset[int]]:
    """Strip a maximal strictly-ordered prefix off an undominated chain.

    Grows G inside ``chain`` one element at a time, keeping G a chain of
    ``P(closure)`` and ``chain - G`` undominated, then returns
    ``chain - G``.  None when ``chain`` itself is not undominated.
    """
    if not chain or undominated_mask(r, to_mask(chain)) is not None:
        return None
    strict = strict_closure_order(r)
    chain_mask = to_mask(chain)

    def admissible(g: frozenset[int]) -> bool:
        rest = chain_mask & ~to_mask(g)
        return bool(rest) and undominated_mask(r, rest) is None and is_chain(strict, g).holds

    def h(g: frozenset[int]) -> frozenset[int]:
        for x in sorted(chain - g):
            if admissible(g | {x}):
                return g | {x}
        return g

    peeled = rudin_fixed_point(h, frozenset(), cap=len(chain))
    return chain - peeled


@dataclass(frozen=True)
class TheoremReport:
    hypothesis: bool
    hypothesis_witness: Optional[tuple]
    top_cycles: tuple[frozenset[int], ...]
    cycle: frozenset[int]
    cycle_is_top: bool
    chain_run: ZornRun
    peeled: Optional[frozenset[int]]

    @property
    def conclusion(self) -> bool:
        return bool(self.top_cycles)

    @property
    def ok(self) -> bool:
        return self.cycle_is_top and (self.conclusion or not self.hypothesis)

    def as_dict(self, labels=None) -> dict:
        name = (lambda i: labels[i]) if labels else (lambda i: i)
        names = lambda s: [name(i) for i in sorted(s)]  # noqa: E731
        return {
            "hypothesis": self.hypothesis,
            "hypothesis_witness": None if self.hypothesis_witness is None else names(self.hypothesis_witness),
            "conclusion": self.conclusion,
            "top_cycles": [names(c) for c in self.top_cycles],
            "cycle": names(self.cycle),
            "cycle_is_top": self.cycle_is_top,
            "ok": self.ok,
            "chain_run": self.chain_run.as_dict(labels),
            "peeled": None if self.peeled is None else names(self.peeled),
        }


def verify_theorem(r: Relation, guard: int = HYPOTHESIS_GUARD) -> TheoremReport:
    """Check hypothesis and conclusion of the top-cycle existence statement on ``r``."""
    verdict = check_hypothesis(r, guard)
    cycles = tuple(c.members for c in top_cycles(r))
    cycle = find_top_cycle(r)
    run = extend_chain(r)
    return TheoremReport(
        hypothesis=verdict.holds,
        hypothesis_witness=verdict.witness,
        top_cycles=cycles,
        cycle=cycle,
        cycle_is_top=cycle in cycles,
        chain_run=run,
        peeled=_peel_to_minimal(r, run.terminal_chain),
    )
