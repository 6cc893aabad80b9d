import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import F_CYC3, F_EMPTY2, F_MIX, F_PO, F_SYM2, ix, rel, relations
from relorder import oracle
from relorder.relation import Relation, classify, strict_closure_order
from relorder.solutions import (
    Chain,
    NotAChainError,
    deb_decompose,
    gocha_choice,
    is_chain,
    is_undominated,
    maximal_elements,
    minimal_undominated_sets,
    schwartz,
    solve,
    strong_top_cycles,
    top_cycles,
    upper_bounds,
)


def members(cycles):
    return [c.members for c in cycles]


class TestChains:
    def test_trivial_chains(self):
        assert is_chain(F_PO, [])
        assert is_chain(F_PO, [2])

    def test_cycle_pair(self):
        assert is_chain(F_CYC3, [0, 1])
        assert Chain.of(F_CYC3, [0, 1]).order_witness == {(0, 1): (0, 1)}

    def test_incomparable(self):
        v = is_chain(rel("abc", ["ab"]), [0, 2])
        assert not v and v.witness == (0, 2)
        with pytest.raises(NotAChainError):
            Chain.of(rel("abc", ["ab"]), [0, 2])

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            is_chain(F_PO, [7])

    @given(relations(max_n=6))
    def test_matches_oracle(self, r):
        chains = set(oracle.brute_chains(r))
        for code in range(1 << r.n):
            s = frozenset(i for i in range(r.n) if code >> i & 1)
            assert bool(is_chain(r, s)) == (s in chains)


class TestUpperBounds:
    def test_empty_chain_bounded_by_everything(self):
        assert upper_bounds(F_MIX, []) == {0, 1, 2}

    def test_cycle(self):
        assert upper_bounds(F_CYC3, [1]) == {0}

    def test_strict(self):
        assert upper_bounds(F_SYM2, [1]) == {0}
        assert upper_bounds(F_SYM2, [1], strict=True) == frozenset()

    def test_requires_chain(self):
        with pytest.raises(NotAChainError):
            upper_bounds(F_EMPTY2, [0, 1])


class TestMaximal:
    def test_examples(self):
        assert maximal_elements(F_PO) == {0}
        assert maximal_elements(F_SYM2) == {0, 1}
        assert maximal_elements(F_CYC3) == frozenset()

    @given(relations(max_n=7))
    def test_matches_oracle(self, r):
        assert maximal_elements(r) == oracle.brute_maximal(r)


class TestUndominated:
    def test_universe(self):
        assert is_undominated(F_MIX, [0, 1, 2])

    def test_mix_a(self):
        v = is_undominated(F_MIX, [0])
        assert not v and v.witness == (1, 0)

    def test_mix_c(self):
        assert is_undominated(F_MIX, [2])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            is_undominated(F_MIX, [])


class TestMinimalUndominated:
    def test_examples(self):
        assert minimal_undominated_sets(F_CYC3) == [{0, 1, 2}]
        assert minimal_undominated_sets(F_EMPTY2) == [{0}, {1}]
        assert minimal_undominated_sets(F_MIX) == [{2}]

    @given(relations(max_n=7))
    def test_matches_subset_enumeration(self, r):
        assert minimal_undominated_sets(r) == oracle.brute_minimal_undominated(r)

    @given(relations(max_n=6))
    def test_minimality(self, r):
        for s in minimal_undominated_sets(r):
            assert is_undominated(r, s)
            for x in s:
                rest = s - {x}
                assert not rest or not is_undominated(r, rest)


class TestTopCycles:
    def test_cycle(self):
        (c,) = top_cycles(F_CYC3)
        assert c.members == {0, 1, 2} and not c.trivial
        assert c.closure_cert[(0, 0)] == (0, 1, 2, 0)
        assert c.closure_cert[(2, 1)] == (2, 0, 1)

    def test_po(self):
        (c,) = top_cycles(F_PO)
        assert c.members == {0} and c.trivial and c.closure_cert == {}

    def test_sym(self):
        (c,) = top_cycles(F_SYM2)
        assert c.members == {0, 1} and not c.trivial

    def test_self_loop_singleton_is_not_trivial(self):
        (c,) = top_cycles(rel("a", ["aa"]))
        assert not c.trivial and c.closure_cert == {(0, 0): (0, 0)}

    @given(relations(max_n=6))
    def test_certificates_are_paths(self, r):
        for c in top_cycles(r):
            for (x, y), path in c.closure_cert.items():
                assert path[0] == x and path[-1] == y and len(path) >= 2
                assert all(r.has(u, v) for u, v in zip(path, path[1:]))

    @given(relations(max_n=7))
    def test_matches_oracle(self, r):
        assert members(top_cycles(r)) == oracle.brute_top_cycles(r)


class TestStrongTopCycles:
    def test_examples(self):
        assert members(strong_top_cycles(F_CYC3)) == [{0, 1, 2}]
        sym = strong_top_cycles(F_SYM2)
        assert members(sym) == [{0}, {1}] and all(c.trivial for c in sym)
        assert members(strong_top_cycles(F_MIX)) == [{0}, {2}]


class TestSchwartz:
    def test_cycle(self):
        assert schwartz(F_CYC3, "gocha") == schwartz(F_CYC3, "strict") == {0, 1, 2}

    def test_mix_discrepancy(self):
        assert schwartz(F_MIX, "gocha") == ix(F_MIX, "c")
        assert schwartz(F_MIX, "strict") == ix(F_MIX, "ac")

    def test_po(self):
        assert schwartz(F_PO, "gocha") == schwartz(F_PO, "strict") == maximal_elements(F_PO) == {0}

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            schwartz(F_PO, "uncovered")

    @given(relations(max_n=7))
    def test_nonempty_and_oracle(self, r):
        for variant in ("gocha", "strict"):
            s = schwartz(r, variant)
            assert s and s == oracle.brute_schwartz(r, variant)

    @given(relations(max_n=7))
    def test_strict_equals_maximal_plus_strong_cycles(self, r):
        union = maximal_elements(r).union(*members(strong_top_cycles(r)))
        assert schwartz(r, "strict") == union

    @given(relations(max_n=6))
    def test_partial_order_degenerates(self, r):
        po = strict_closure_order(r)
        assert classify(po).is_partial_order
        best = maximal_elements(po)
        assert schwartz(po, "gocha") == schwartz(po, "strict") == best
        assert all(len(c.members) == 1 for c in top_cycles(po))


class TestGochaChoice:
    def test_singleton(self):
        assert gocha_choice(F_CYC3, [1]) == {1}

    def test_cycle_subset(self):
        assert gocha_choice(F_CYC3, [0, 1]) == {0}

    def test_mix_whole(self):
        assert gocha_choice(F_MIX, [0, 1, 2]) == {2}

    def test_empty(self):
        with pytest.raises(ValueError):
            gocha_choice(F_MIX, [])

    @given(relations(max_n=6), st.data())
    def test_nonempty_subset_of_argument(self, r, data):
        s = data.draw(st.sets(st.integers(0, r.n - 1), min_size=1))
        chosen = gocha_choice(r, s)
        assert chosen and chosen <= s


class TestDeb:
    def test_cycle(self):
        rep = deb_decompose(F_CYC3)
        assert [(e.members, e.kind) for e in rep.strict] == [({0, 1, 2}, "cycle")]
        assert not rep.literal_violations

    def test_sym_literal_violation(self):
        rep = deb_decompose(F_SYM2)
        assert [(e.members, e.kind) for e in rep.strict] == [({0}, "element"), ({1}, "element")]
        (bad,) = rep.literal_violations
        assert bad.members == {0, 1} and bad.witness == (0, 1)

    def test_po(self):
        rep = deb_decompose(F_PO)
        assert [(e.members, e.kind) for e in rep.strict] == [({0}, "element")]
        assert not rep.literal_violations

    @given(relations(max_n=7))
    def test_strict_never_violates(self, r):
        assert not deb_decompose(r).strict_violations


def test_solve_mix():
    rep = solve(F_MIX)
    assert rep.schwartz_gocha == {2} and rep.schwartz_strict == {0, 2}
    assert rep.maximal == {0, 2}
    assert list(rep.minimal_undominated) == [{2}]


def test_empty_universe_rejected():
    with pytest.raises(ValueError):
        minimal_undominated_sets(Relation.empty(()))
