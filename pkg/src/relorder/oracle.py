"""Naive reference implementations.

Everything here works from the raw pair set of a relation with plain
loops over subsets and explicit path lists.  Nothing in this module calls
the bit-row algorithms in :mod:`relorder.relation`, :mod:`relorder.quotient`
or :mod:`relorder.solutions`; that independence is what makes the sweep
comparisons meaningful.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .relation import Relation


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 12
    chain_max_n: int = 6

    def check(self, r: Relation, limit: int | None = None) -> None:
        limit = self.max_n if limit is None else limit
        if r.n > limit:
            raise BudgetExceeded(f"n={r.n} exceeds oracle budget {limit}")


DEFAULT_BUDGET = OracleBudget()


def _subsets(n: int, include_empty: bool = False):
    start = 0 if include_empty else 1
    for size in range(start, n + 1):
        for combo in combinations(range(n), size):
            yield combo


def _reach_pairs(pairs: frozenset, n: int) -> set:
    succ: dict[int, list[int]] = {x: [] for x in range(n)}
    for x, y in pairs:
        succ[x].append(y)
    result = set(pairs)
    level = set(pairs)
    for _ in range(2, n + 1):
        level = {(x, z) for (x, y) in level for z in succ[y]}
        if not level:
            break
        result |= level
    return result


def brute_closure(r: Relation, budget: OracleBudget = DEFAULT_BUDGET) -> Relation:
    """Union of the k-step path relations for k = 1..n."""
    budget.check(r)
    return Relation.from_index_pairs(r.universe, _reach_pairs(r.pairs, r.n), "oracle closure")


def brute_asymmetric(r: Relation) -> Relation:
    pairs = r.pairs
    keep = [(x, y) for (x, y) in pairs if (y, x) not in pairs]
    return Relation.from_index_pairs(r.universe, keep, "oracle asymmetric part")


def _undominated(pairs: frozenset, n: int, members: tuple) -> bool:
    inside = set(members)
    for x in members:
        for y in range(n):
            if y not in inside and (y, x) in pairs:
                return False
    return True


def brute_minimal_undominated(r: Relation, budget: OracleBudget = DEFAULT_BUDGET) -> list[frozenset]:
    """Inclusion-minimal nonempty undominated subsets, by subset enumeration."""
    budget.check(r)
    pairs = r.pairs
    undominated = [frozenset(s) for s in _subsets(r.n) if _undominated(pairs, r.n, s)]
    minimal = [s for s in undominated if not any(t < s for t in undominated)]
    return sorted(minimal, key=sorted)


def brute_chains(r: Relation, budget: OracleBudget = DEFAULT_BUDGET) -> list[frozenset]:
    """All pairwise comparable subsets, the empty set included."""
    budget.check(r)
    pairs = r.pairs
    out = []
    for s in _subsets(r.n, include_empty=True):
        if all((x, y) in pairs or (y, x) in pairs for x, y in combinations(s, 2)):
            out.append(frozenset(s))
    return out


def brute_top_cycles(r: Relation, budget: OracleBudget = DEFAULT_BUDGET) -> list[frozenset]:
    """Undominated subsets that are cycles (singletons admitted), kept if inclusion-minimal."""
    budget.check(r)
    pairs = r.pairs
    reach = _reach_pairs(pairs, r.n)
    found = []
    for s in _subsets(r.n):
        if not _undominated(pairs, r.n, s):
            continue
        if len(s) == 1 or all((x, y) in reach for x in s for y in s):
            found.append(frozenset(s))
    minimal = [s for s in found if not any(t < s for t in found)]
    return sorted(minimal, key=sorted)


def brute_maximal(r: Relation) -> frozenset:
    pairs = r.pairs
    return frozenset(
        x for x in range(r.n)
        if not any((y, x) in pairs and (x, y) not in pairs for y in range(r.n))
    )


def brute_schwartz(r: Relation, variant: str, budget: OracleBudget = DEFAULT_BUDGET) -> frozenset:
    if variant == "gocha":
        base = r
    elif variant == "strict":
        base = brute_asymmetric(r)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    out: set[int] = set()
    for s in brute_minimal_undominated(base, budget):
        out |= s
    return frozenset(out)


def brute_classes(r: Relation) -> list[frozenset]:
    """Mutual-reachability classes from one depth-first search per element."""
    succ: dict[int, list[int]] = {x: [] for x in range(r.n)}
    for x, y in r.pairs:
        succ[x].append(y)
    reach = []
    for x in range(r.n):
        seen = {x}
        stack = [x]
        while stack:
            u = stack.pop()
            for v in succ[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        reach.append(seen)
    classes = {frozenset(y for y in range(r.n) if y in reach[x] and x in reach[y]) for x in range(r.n)}
    return sorted(classes, key=min)


def brute_quotient_pairs(r: Relation) -> set[tuple[frozenset, frozenset]]:
    """Class pairs straight from the definition: equal, or some member pair in the closure."""
    reach = _reach_pairs(r.pairs, r.n)
    classes = brute_classes(r)
    out = set()
    for c in classes:
        for d in classes:
            if c == d or any((x, y) in reach for x in c for y in d):
                out.add((c, d))
    return out


def brute_hypothesis(r: Relation, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Every chain (empty included) has some x with xRy for all its members."""
    budget.check(r, budget.chain_max_n)
    pairs = r.pairs
    for chain in brute_chains(r, budget):
        if not any(all((x, y) in pairs for y in chain) for x in range(r.n)):
            return False
    return True
