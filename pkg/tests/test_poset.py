import pytest
from hypothesis import given

from tameorders import (
    CycleDetected,
    DuplicateElement,
    SizeLimitExceeded,
    UnknownElement,
    build_poset,
    cu_set,
    down_set,
    is_isomorphic,
    pattern_r22,
    pattern_s_n2,
    r_lambda,
    restrict,
    up_set,
    well_founded_rank,
)

from conftest import antichain, chain, oracle_longest_chain, posets


class TestBuildPoset:
    def test_closure_of_three_chain(self):
        p = build_poset(["a", "b", "c"], [("a", "b"), ("b", "c")])
        assert set(p.pairs()) == {("a", "b"), ("b", "c"), ("a", "c")}

    def test_two_cycle_rejected(self):
        with pytest.raises(CycleDetected):
            build_poset(["a", "b"], [("a", "b"), ("b", "a")])

    def test_long_cycle_rejected(self):
        with pytest.raises(CycleDetected):
            build_poset(list("abc"), [("a", "b"), ("b", "c"), ("c", "a")])

    def test_r22_from_pairs(self):
        p = build_poset(["x0", "x1", "y0", "y1"], [("x0", "y0"), ("x1", "y1")])
        assert p == pattern_r22()

    def test_unknown_element(self):
        with pytest.raises(UnknownElement):
            build_poset(["a"], [("a", "b")])

    def test_duplicate_element(self):
        with pytest.raises(DuplicateElement):
            build_poset(["a", "a"], [])

    def test_empty(self):
        p = build_poset([], [])
        assert len(p) == 0
        assert well_founded_rank(p) == 0

    def test_input_need_not_be_closed(self):
        p = build_poset(list("abcd"), [("a", "b"), ("b", "c"), ("c", "d")])
        assert p.less("a", "d")
        p.validate()


class TestSetQueries:
    def test_down_set_chain(self):
        p = chain(3)
        assert down_set(p, "c2") == {"c0", "c1"}

    def test_down_set_r22(self):
        assert down_set(pattern_r22(), "y0") == {"x0"}

    def test_down_set_antichain(self):
        p = antichain(3)
        assert all(down_set(p, x) == frozenset() for x in p)

    def test_up_set_chain(self):
        p = chain(3)
        assert up_set(p, "c0") == {"c1", "c2"}

    def test_up_set_r22(self):
        assert up_set(pattern_r22(), "x1") == {"y1"}

    def test_up_set_s22_truncation(self):
        assert up_set(pattern_s_n2(2), "x1") == {"y0", "y1"}

    def test_cu_set_chain_top(self):
        p = chain(3)
        assert cu_set(p, "c2") == {"c0", "c1", "c2"}

    def test_cu_set_s22(self):
        assert cu_set(pattern_s_n2(2), "x1") == {"x0", "x1"}

    def test_cu_set_singleton(self):
        p = build_poset(["x"], [])
        assert cu_set(p, "x") == {"x"}

    def test_unknown_element(self):
        with pytest.raises(UnknownElement):
            down_set(chain(2), "zz")

    @given(posets())
    def test_duality_and_partition(self, p):
        for x in p:
            for y in p:
                assert (y in down_set(p, x)) == (x in up_set(p, y))
        full = frozenset(p.elements)
        for x in p:
            assert cu_set(p, x) | up_set(p, x) == full
            assert not cu_set(p, x) & up_set(p, x)


class TestRestrict:
    def test_r22_to_two_chain(self):
        sub = restrict(pattern_r22(), {"x0", "y0"})
        assert is_isomorphic(sub, chain(2))

    def test_empty_restriction(self):
        assert len(restrict(chain(3), set())) == 0

    def test_r3_triple(self):
        sub = restrict(r_lambda(3), {"0,0", "0,1", "1,1"})
        assert sub.pairs() == [("0,0", "1,1")]

    def test_unknown_element(self):
        with pytest.raises(UnknownElement):
            restrict(chain(2), {"nope"})

    @given(posets())
    def test_full_restriction_is_identity(self, p):
        assert restrict(p, p.elements) == p

    @given(posets(max_size=6))
    def test_induced_relations_exact(self, p):
        keep = p.elements[::2]
        sub = restrict(p, keep)
        for x in keep:
            for y in keep:
                if x != y:
                    assert sub.less(x, y) == p.less(x, y)

    @given(posets(max_size=6))
    def test_rank_monotone(self, p):
        sub = restrict(p, p.elements[1:])
        assert well_founded_rank(sub) <= well_founded_rank(p)


class TestRank:
    def test_chain(self):
        assert well_founded_rank(chain(3)) == 3

    def test_antichain(self):
        assert well_founded_rank(antichain(5)) == 1

    def test_s22(self):
        assert well_founded_rank(pattern_s_n2(2)) == 2

    @given(posets())
    def test_matches_longest_chain_oracle(self, p):
        assert well_founded_rank(p) == oracle_longest_chain(p)


class TestIsomorphism:
    def test_relabeled_chains(self):
        p = build_poset(list("abc"), [("a", "b"), ("b", "c")])
        q = build_poset(list("xyz"), [("x", "y"), ("y", "z")])
        assert is_isomorphic(p, q)

    def test_chain_vs_antichain(self):
        assert not is_isomorphic(chain(2), antichain(2))

    def test_r22_vs_s22(self):
        assert not is_isomorphic(pattern_r22(), pattern_s_n2(2))

    def test_size_limit(self):
        with pytest.raises(SizeLimitExceeded):
            is_isomorphic(r_lambda(8), r_lambda(8))

    def test_equivalence_relation_on_enumerated_family(self):
        from tameorders import all_labeled_posets

        family = list(all_labeled_posets(3))
        iso = [
            [is_isomorphic(p, q) for q in family] for p in family
        ]
        for i, p in enumerate(family):
            assert iso[i][i]
            for j in range(len(family)):
                assert iso[i][j] == iso[j][i]
                for k in range(len(family)):
                    if iso[i][j] and iso[j][k]:
                        assert iso[i][k]

    def test_same_invariants_different_structure(self):
        # 2+2 vs 3+1 as unions of chains: equal sizes, different relations
        p = build_poset(list("abcd"), [("a", "b"), ("c", "d")])
        q = build_poset(list("wxyz"), [("w", "x"), ("x", "y")])
        assert not is_isomorphic(p, q)


class TestValidate:
    @given(posets())
    def test_generated_posets_validate(self, p):
        p.validate()
