import pytest
from hypothesis import given

from brylawski import oracle
from brylawski.partition_core import (
    ColumnShape,
    Partition,
    ShapeKind,
    Transition,
    add_grain,
    classify_at,
    dominance_leq,
    height_diff,
    is_partition,
    leading_plateau,
    make_partition,
    moves,
    parse_partition,
    remove_grain,
    render_ferrers,
    transitions,
)

from conftest import partition_pairs, partitions


class TestConstruction:
    def test_zero_stripping(self):
        s = make_partition((3, 1, 0, 0))
        assert s == (3, 1) and s.weight == 4

    def test_empty(self):
        assert make_partition(()).weight == 0
        assert str(Partition()) == "0"

    def test_rejects_increase(self):
        with pytest.raises(ValueError, match="nonincreasing"):
            make_partition((2, 3, 1))

    def test_rejects_negative_and_interior_zero(self):
        with pytest.raises(ValueError):
            make_partition((2, -1))
        with pytest.raises(ValueError):
            make_partition((2, 0, 1))

    @pytest.mark.parametrize("text, want", [("4,2,1", (4, 2, 1)), ("0", ()), ("", ()), (" 3, 1 ", (3, 1))])
    def test_parse(self, text, want):
        assert parse_partition(text) == want

    def test_parse_garbage(self):
        with pytest.raises(ValueError):
            parse_partition("3,x")

    def test_part_reads_past_end_as_zero(self):
        s = Partition((3, 1))
        assert (s.part(1), s.part(2), s.part(3), s.part(9)) == (3, 1, 0, 0)


class TestHeightDiff:
    @pytest.mark.parametrize("i, want", [(1, 2), (2, 1), (5, 0)])
    def test_examples(self, i, want):
        assert height_diff((3, 1), i) == want


class TestShapes:
    def test_leading_plateau(self):
        assert leading_plateau((1,)) == ColumnShape(ShapeKind.SLIPPERY_PLATEAU, 1)
        assert leading_plateau((1, 1)) == ColumnShape(ShapeKind.SLIPPERY_PLATEAU, 2)
        assert leading_plateau((2, 2)) == ColumnShape(ShapeKind.NON_SLIPPERY_PLATEAU, 2)

    def test_cliff(self):
        assert classify_at((3, 1), 1).kind is ShapeKind.CLIFF

    def test_slippery_step(self):
        assert classify_at((2, 1), 1) == ColumnShape(ShapeKind.SLIPPERY_STEP, 2)

    def test_column_with_drop_two_is_a_cliff(self):
        # (4,1) drops by 3 at column 1, so a grain falls there
        assert classify_at((4, 1), 1).kind is ShapeKind.CLIFF

    def test_non_slippery_step(self):
        # removing a grain gives (3,3,1): a run of two ending in a cliff
        assert classify_at((4, 3, 1), 1) == ColumnShape(ShapeKind.NON_SLIPPERY_STEP, 2)


class TestMoves:
    def test_single_cliff(self):
        assert transitions(Partition((4,))) == {Transition(Partition((4,)), 1, Partition((3, 1)))}

    def test_both_rules(self):
        got = {(t.label, t.target) for t in transitions(Partition((4, 2, 1)))}
        assert got == {(1, (3, 3, 1)), (2, (4, 1, 1, 1))}

    def test_minimum_has_no_moves(self):
        assert moves((1, 1, 1)) == []

    def test_grain_bookkeeping(self):
        assert add_grain((2, 1), 1) == (3, 1)
        assert add_grain((2, 1), 3) == (2, 1, 1)
        assert not is_partition(add_grain((1, 1), 2))
        assert remove_grain((2, 1, 1), 3) == (2, 1)
        with pytest.raises(IndexError):
            add_grain((2, 1), 5)

    @given(partitions())
    def test_moves_preserve_weight_and_descend(self, s):
        for label, t in moves(s):
            t = Partition(t)
            assert t.weight == s.weight
            assert dominance_leq(t, s) and t != s
            assert t.part(label) == s.part(label) - 1

    @pytest.mark.parametrize("n", range(0, 11))
    def test_moves_are_exactly_the_covers(self, n):
        got = {(s, Partition(t)) for s in oracle.enumerate_partitions(n) for _, t in moves(s)}
        assert got == oracle.covers_bruteforce(n)


class TestDominance:
    def test_examples(self):
        assert dominance_leq((3, 3, 1), (4, 2, 1))
        assert dominance_leq((2, 2), (2, 2))
        assert dominance_leq((2, 1, 1), (3, 1))
        assert not dominance_leq((3, 1), (2, 1, 1))

    def test_weight_mismatch(self):
        with pytest.raises(ValueError):
            dominance_leq((3,), (2,))

    @given(partition_pairs())
    def test_matches_oracle(self, pair):
        s, t = pair
        assert dominance_leq(s, t) == oracle.dominates(t, s)


class TestRender:
    def test_two_columns(self):
        assert render_ferrers((2, 1)) == "#\n##"

    def test_empty(self):
        assert render_ferrers(()) == ""

    def test_three_columns(self):
        assert render_ferrers((3, 3, 1)).splitlines() == ["##", "##", "###"]
