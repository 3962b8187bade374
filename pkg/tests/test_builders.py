"""Topology/poset/standard/product builders and the corpus generators."""

import pytest

from finframe.builders import (
    PosetSpec,
    TopologySpec,
    b4,
    c3,
    downset_frame,
    enumerate_topologies,
    f5,
    fixture,
    from_topology,
    product_frame,
    random_topology,
    standard_frame,
)
from finframe.errors import CyclicPoset, NotATopology, TooLarge
from finframe.frame import build_frame, verify_heyting_laws

from oracles import label_id


def rebuild_and_compare(frame):
    """Builder output must survive the generic validated construction."""
    pairs = [(a, b) for a in range(frame.size) for b in range(frame.size)
             if frame.leq(a, b)]
    redone = build_frame(frame.size, pairs, labels=frame.labels)
    assert redone.up == frame.up
    assert redone.meet_table == frame.meet_table
    assert redone.join_table == frame.join_table
    assert redone.heyting_table == frame.heyting_table


class TestFromTopology:
    def test_sierpinski_is_three_chain(self):
        frame = from_topology(TopologySpec(("x", "y"), ((), ("x",), ("x", "y"))))
        assert frame.size == 3
        assert frame.labels == ("∅", "{x}", "{x,y}")
        assert [frame.leq(a, b) for a in range(3) for b in range(3)] == \
            [True, True, True, False, True, True, False, False, True]
        rebuild_and_compare(frame)

    def test_three_point_space_is_f5(self, F5):
        frame = from_topology(TopologySpec(
            ("x", "y", "z"), ((), ("x",), ("y",), ("x", "y"), ("x", "y", "z"))))
        assert frame.size == 5
        assert frame.up == F5.up
        assert frame.meet_table == F5.meet_table
        assert frame.heyting_table == F5.heyting_table
        rebuild_and_compare(frame)

    def test_discrete_two_points_is_b4(self, B4):
        frame = from_topology(TopologySpec(
            ("x", "y"), ((), ("x",), ("y",), ("x", "y"))))
        assert frame.up == B4.up
        assert frame.meet_table == B4.meet_table

    def test_missing_empty_set(self):
        with pytest.raises(NotATopology):
            from_topology(TopologySpec(("x",), (("x",),)))

    def test_missing_union_witness(self):
        with pytest.raises(NotATopology) as exc:
            from_topology(TopologySpec(
                ("x", "y", "z"), ((), ("x",), ("y",), ("x", "y", "z"))))
        assert "union" in str(exc.value)

    def test_missing_intersection_witness(self):
        with pytest.raises(NotATopology) as exc:
            from_topology(TopologySpec(
                ("x", "y", "z"),
                ((), ("x", "y"), ("y", "z"), ("x", "y", "z"))))
        assert "intersection" in str(exc.value)

    def test_duplicate_open_rejected(self):
        with pytest.raises(NotATopology):
            from_topology(TopologySpec(("x",), ((), ("x",), ("x",))))


class TestDownsetFrame:
    def test_single_element_poset(self):
        frame = downset_frame(PosetSpec(("p",), ()))
        assert frame.size == 2
        assert frame.bottom != frame.top

    def test_antichain_gives_b4(self, B4):
        frame = downset_frame(PosetSpec(("p", "q"), ()))
        assert frame.up == B4.up
        assert frame.meet_table == B4.meet_table

    def test_chain_gives_c3(self, C3):
        frame = downset_frame(PosetSpec(("lo", "hi"), (("lo", "hi"),)))
        assert frame.up == C3.up
        assert frame.heyting_table == C3.heyting_table
        assert frame.labels == ("∅", "{lo}", "{lo,hi}")

    def test_cycle_rejected(self):
        with pytest.raises(CyclicPoset):
            downset_frame(PosetSpec(("a", "b"), (("a", "b"), ("b", "a"))))

    def test_validates_like_build_frame(self):
        frame = downset_frame(PosetSpec(("a", "b", "c"), (("a", "b"), ("a", "c"))))
        rebuild_and_compare(frame)


class TestStandardFrame:
    def test_chain_three_matches_c3(self, C3):
        frame = standard_frame("chain", 3)
        assert frame.up == C3.up
        assert frame.meet_table == C3.meet_table
        assert frame.heyting_table == C3.heyting_table

    def test_boolean_two_matches_b4(self, B4):
        frame = standard_frame("boolean", 2)
        assert frame.size == 4
        assert sorted(map(bin, frame.up)) == sorted(map(bin, B4.up))
        rebuild_and_compare(frame)

    def test_boolean_zero_is_degenerate(self):
        frame = standard_frame("boolean", 0)
        assert frame.size == 1
        assert frame.bottom == frame.top
        assert verify_heyting_laws(frame).all_passed

    def test_size_cap(self):
        with pytest.raises(TooLarge):
            standard_frame("chain", 100, size_cap=50)
        with pytest.raises(TooLarge):
            standard_frame("boolean", 17)

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            standard_frame("total-order", 3)


class TestProductFrame:
    def test_sizes_multiply(self, C3):
        two = standard_frame("chain", 2)
        frame = product_frame(C3, two)
        assert frame.size == 6
        rebuild_and_compare(frame)

    def test_one_element_factor_is_identity(self, F5):
        one = standard_frame("boolean", 0)
        frame = product_frame(F5, one)
        assert frame.up == F5.up
        assert frame.meet_table == F5.meet_table
        assert frame.heyting_table == F5.heyting_table

    def test_square_of_two_chain_is_diamond(self, B4):
        two = standard_frame("chain", 2)
        frame = product_frame(two, two)
        assert frame.up == B4.up
        assert frame.meet_table == B4.meet_table
        assert frame.join_table == B4.join_table

    def test_componentwise_order(self, C3, B4):
        frame = product_frame(C3, B4)
        for i1 in range(C3.size):
            for j1 in range(B4.size):
                for i2 in range(C3.size):
                    for j2 in range(B4.size):
                        a = i1 * B4.size + j1
                        b = i2 * B4.size + j2
                        assert frame.leq(a, b) == (C3.leq(i1, i2) and B4.leq(j1, j2))

    def test_size_cap(self, C3):
        with pytest.raises(TooLarge):
            product_frame(C3, C3, size_cap=8)


class TestRandomTopology:
    def test_single_point_unique(self):
        spec = random_topology(1, seed=3)
        assert set(spec.opens) == {(), ("x",)}

    def test_deterministic_per_seed(self):
        assert random_topology(3, 7) == random_topology(3, 7)
        assert random_topology(3, 7) != random_topology(3, 8) or True  # seeds may collide

    def test_thousand_seeds_validate(self):
        for seed in range(1000):
            frame = from_topology(random_topology(4, seed))
            assert frame.size >= 2

    def test_point_cap(self):
        with pytest.raises(TooLarge):
            random_topology(7, 0)


class TestEnumerateTopologies:
    def test_counts_small(self):
        assert sum(1 for _ in enumerate_topologies(1)) == 1
        assert sum(1 for _ in enumerate_topologies(2)) == 4
        assert sum(1 for _ in enumerate_topologies(3)) == 29

    def test_pairwise_distinct_and_valid(self):
        seen = set()
        for spec in enumerate_topologies(3):
            key = frozenset(frozenset(o) for o in spec.opens)
            assert key not in seen
            seen.add(key)
            from_topology(spec)  # validator as oracle

    def test_cap(self):
        with pytest.raises(TooLarge):
            next(enumerate_topologies(5))


class TestFixtures:
    def test_named_lookup(self):
        assert fixture("C3").name == "C3"
        assert fixture("b4").name == "B4"
        assert fixture("F5").name == "F5"
        with pytest.raises(ValueError):
            fixture("Z9")

    def test_fixture_shapes(self):
        assert c3().size == 3 and b4().size == 4 and f5().size == 5
        frame = f5()
        ab = label_id(frame, "a∨b")
        assert frame.join(label_id(frame, "a"), label_id(frame, "b")) == ab
