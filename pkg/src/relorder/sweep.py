"""Fast path versus oracle sweep over exhaustive and seeded random relations.

Instances: every relation on ``n`` elements for ``n <= min(nmax, 3)``,
then ``count`` random relations for each ``n`` in ``4..nmax``.  Random
instance ``i`` at size ``n`` draws from ``SplitMix64.stream(seed, (n << 32) | i)``:
first a density ``p = random()``, then the pairs in row-major order.
"""
from __future__ import annotations

import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from . import oracle
from .quotient import ChoiceContractError, derive_choice, equivalence_classes, quotient_relation
from .relation import ElementSet, Relation, classify, transitive_closure
from .rng import SplitMix64, default_labels, random_relation
from .solutions import (
    deb_decompose,
    is_chain,
    maximal_elements,
    minimal_undominated_sets,
    schwartz,
    strong_top_cycles,
    top_cycles,
)
from .zorn import (
    chain_step,
    check_hypothesis,
    extend_chain,
    find_top_cycle,
    rudin_fixed_point,
)

log = logging.getLogger(__name__)

EXHAUSTIVE_MAX_N = 3
THEOREM_MAX_N = 6
CHOICE_EXHAUSTIVE_MAX_N = 4

CHECKS = (
    "closure",
    "minimal_undominated",
    "top_cycles",
    "schwartz_gocha",
    "schwartz_strict",
    "quotient_order",
    "quotient_classes",
    "theorem",
    "top_cycle_pivot",
    "deb_strict",
    "strict_equivalence",
    "choice",
    "chain_extension",
    "nonempty",
)


@dataclass(frozen=True)
class Violation:
    check: str
    n: int
    instance: str
    detail: str


@dataclass
class SweepResult:
    instances: int = 0
    per_size: Counter = field(default_factory=Counter)
    checked: Counter = field(default_factory=Counter)
    violations: list[Violation] = field(default_factory=list)
    seconds: float = 0.0

    def failed(self, check: str) -> list[Violation]:
        return [v for v in self.violations if v.check == check]

    def summary(self) -> str:
        return f"{self.instances} instances, {len(self.violations)} violations ({self.seconds:.1f}s)"


def exhaustive_relations(n: int) -> Iterator[Relation]:
    universe = ElementSet(default_labels(n))
    full = 1 << n
    for code in range(1 << (n * n)):
        rows = tuple((code >> (u * n)) & (full - 1) for u in range(n))
        yield Relation(universe, rows, f"exhaustive n={n} #{code}")


def random_instances(n: int, count: int, seed: int) -> Iterator[Relation]:
    for i in range(count):
        rng = SplitMix64.stream(seed, (n << 32) | i)
        p = rng.random()
        yield random_relation(n, p, rng).with_note(f"random n={n} seed={seed} #{i} p={p:.3f}")


def instances(nmax: int, count: int, seed: int) -> Iterator[Relation]:
    for n in range(1, min(nmax, EXHAUSTIVE_MAX_N) + 1):
        yield from exhaustive_relations(n)
    for n in range(EXHAUSTIVE_MAX_N + 1, nmax + 1):
        yield from random_instances(n, count, seed)


def _sets(xs) -> list[list[int]]:
    return sorted(sorted(s) for s in xs)


def check_instance(r: Relation, checks: frozenset[str] = frozenset(CHECKS), choice_samples: int = 8) -> list[tuple[str, str]]:
    """Run the selected checks on one relation; returns ``(check, detail)`` failures."""
    bad: list[tuple[str, str]] = []
    n = r.n
    closure = transitive_closure(r)
    mins = minimal_undominated_sets(r)
    cycles = top_cycles(r)
    cycle_sets = [c.members for c in cycles]
    gocha = schwartz(r, "gocha")
    strict = schwartz(r, "strict")

    if "closure" in checks:
        expected = oracle.brute_closure(r)
        if closure.rows != expected.rows:
            bad.append(("closure", f"{closure.sorted_pairs()} != {expected.sorted_pairs()}"))
    if "minimal_undominated" in checks:
        expected = oracle.brute_minimal_undominated(r)
        if _sets(mins) != _sets(expected):
            bad.append(("minimal_undominated", f"{_sets(mins)} != {_sets(expected)}"))
    if "top_cycles" in checks:
        expected = oracle.brute_top_cycles(r)
        if _sets(cycle_sets) != _sets(expected):
            bad.append(("top_cycles", f"{_sets(cycle_sets)} != {_sets(expected)}"))
        for c in cycles:
            if not c.trivial and any(len(p) < 2 for p in c.closure_cert.values()):
                bad.append(("top_cycles", f"missing certificate in {sorted(c.members)}"))
    if "schwartz_gocha" in checks:
        expected = oracle.brute_schwartz(r, "gocha")
        if gocha != expected:
            bad.append(("schwartz_gocha", f"{sorted(gocha)} != {sorted(expected)}"))
    if "schwartz_strict" in checks:
        expected = oracle.brute_schwartz(r, "strict")
        if strict != expected:
            bad.append(("schwartz_strict", f"{sorted(strict)} != {sorted(expected)}"))
    if "quotient_order" in checks:
        q = quotient_relation(r, closure)
        report = classify(q.as_relation())
        if not report.is_partial_order:
            bad.append(("quotient_order", f"not a partial order: {report.witness}"))
        classes = q.partition.classes
        expected_pairs = oracle.brute_quotient_pairs(r)
        got_pairs = {(classes[c], classes[d]) for c, d in q.pairs}
        if got_pairs != expected_pairs:
            bad.append(("quotient_order", "class pairs differ from the definition"))
    if "quotient_classes" in checks:
        got = list(equivalence_classes(r).classes)
        expected = oracle.brute_classes(r)
        if got != expected:
            bad.append(("quotient_classes", f"{_sets(got)} != {_sets(expected)}"))
    if "top_cycle_pivot" in checks:
        found = find_top_cycle(r)
        if found not in cycle_sets:
            bad.append(("top_cycle_pivot", f"{sorted(found)} not among {_sets(cycle_sets)}"))
    if "theorem" in checks and n <= THEOREM_MAX_N:
        verdict = check_hypothesis(r)
        if verdict.holds != oracle.brute_hypothesis(r):
            bad.append(("theorem", f"hypothesis check disagrees with oracle ({verdict})"))
        if verdict.holds and (not cycles or find_top_cycle(r) not in cycle_sets):
            bad.append(("theorem", "hypothesis holds but no top cycle was located"))
    if "deb_strict" in checks:
        deb = deb_decompose(r)
        if deb.strict_violations:
            bad.append(("deb_strict", f"{[sorted(e.members) for e in deb.strict_violations]}"))
    if "strict_equivalence" in checks:
        union = maximal_elements(r).union(*(c.members for c in strong_top_cycles(r)))
        if union != strict:
            bad.append(("strict_equivalence", f"{sorted(union)} != {sorted(strict)}"))
    if "choice" in checks:
        f = derive_choice(r)
        if n <= CHOICE_EXHAUSTIVE_MAX_N:
            subsets = [s for k in range(1, n + 1) for s in combinations(range(n), k)]
        else:
            rng = SplitMix64(hash(r.rows) & 0xFFFF_FFFF)
            subsets = []
            for _ in range(choice_samples):
                s = tuple(x for x in range(n) if rng.random() < 0.5) or (rng.below(n),)
                subsets.append(s)
        for s in subsets:
            try:
                f(s)
            except ChoiceContractError as exc:
                bad.append(("choice", str(exc)))
                break
    if "chain_extension" in checks:
        run = extend_chain(r)
        added = sum(1 for s in run.steps if s.added is not None)
        if added > n:
            bad.append(("chain_extension", f"{added} steps for n={n}"))
        if run.steps[-1].candidate_set:
            bad.append(("chain_extension", "terminal chain still has outside upper bounds"))
        if not is_chain(r, run.terminal_chain):
            bad.append(("chain_extension", "terminal set is not a chain"))
        if rudin_fixed_point(chain_step(r), frozenset(), cap=n) != run.terminal_chain:
            bad.append(("chain_extension", "fixed-point combinator disagrees"))
    if "nonempty" in checks and n >= 1:
        if not gocha or not strict:
            bad.append(("nonempty", f"gocha={sorted(gocha)} strict={sorted(strict)}"))
    return bad


def run_sweep(
    nmax: int,
    count: int,
    seed: int = 0,
    checks: frozenset[str] | set[str] = frozenset(CHECKS),
) -> SweepResult:
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}")
    checks = frozenset(checks)
    result = SweepResult()
    start = time.perf_counter()
    for r in instances(nmax, count, seed):
        result.instances += 1
        result.per_size[r.n] += 1
        for check in checks:
            if check != "theorem" or r.n <= THEOREM_MAX_N:
                result.checked[check] += 1
        try:
            failures = check_instance(r, checks)
        except Exception as exc:  # a crash on one instance is a finding, not a stop
            failures = [("error", f"{type(exc).__name__}: {exc}")]
        for check, detail in failures:
            log.warning("%s violated on %s: %s", check, r.note, detail)
            result.violations.append(Violation(check, r.n, r.note, detail))
    result.seconds = time.perf_counter() - start
    return result
