import pytest

from goldens import (
    EX2,
    EX2_CELLS,
    EX2_CLOSERS,
    EX2_OPENERS,
    EX2_SHAPE,
    EX2_UPPER,
    THETA_VALUES,
)

from crossnest import (
    Arc,
    PatternKind,
    PatternOccurrence,
    SignedPermutation,
    UpperDiagram,
    YoungFilling,
    anti_to_identity_step,
    count_avoiders,
    cro_star,
    degree_sequence,
    enumerate_bn,
    find_max_pattern,
    identity,
    identity_to_anti_step,
    interchange_patterns,
    max_chain_involution,
    max_chain_sizes,
    neg,
    nes_star,
    parse_permutation,
    upper_diagram,
    xi,
    xi_inverse,
    young_shape,
)
from crossnest.errors import (
    InfeasibleSums,
    InvalidOccurrence,
    MissingDiagramLists,
    RowColumnSumViolation,
)
from crossnest.fillings import filling_to_text, max_pattern_size, parse_filling_text

J = PatternKind.ANTI_IDENTITY
I = PatternKind.IDENTITY


class TestYoungShape:
    def test_example_two(self):
        shape, openers, closers = young_shape(UpperDiagram(6, EX2_UPPER))
        assert shape == EX2_SHAPE
        assert openers == EX2_OPENERS
        assert closers == EX2_CLOSERS

    def test_rank_one_loop(self):
        shape, openers, closers = young_shape(upper_diagram(identity(1)))
        assert shape == (1,)
        assert openers == (1,) and closers == (1,)

    def test_rectangular_case(self):
        d = upper_diagram(SignedPermutation((-2, -1)))
        assert young_shape(d).shape == (2, 2)

    def test_negative_transient_gets_no_extra_column(self):
        # the in/out vertex -1 must not widen its own closer row, or a
        # phantom crossing pattern appears
        d = upper_diagram(SignedPermutation((-2, 1)))
        assert young_shape(d).shape == (2, 1)


class TestXi:
    def test_example_two_cells(self):
        f = xi(UpperDiagram(6, EX2_UPPER))
        assert f.ones == EX2_CELLS
        assert f.shape == EX2_SHAPE

    def test_rank_one(self):
        assert xi(upper_diagram(identity(1))).ones == {(1, 1)}

    def test_two_crossing_is_antiidentity(self):
        f = xi(upper_diagram(SignedPermutation((-2, -1))))
        assert f.ones == {(1, 2), (2, 1)}

    def test_round_trip_exhaustive(self):
        for n in range(1, 6):
            for p in enumerate_bn(n):
                d = upper_diagram(p)
                assert xi_inverse(xi(d)) == d

    def test_inverse_needs_lists(self):
        f = YoungFilling((2, 2), frozenset({(1, 1), (2, 2)}))
        with pytest.raises(MissingDiagramLists):
            xi_inverse(f)

    def test_filling_validation(self):
        with pytest.raises(RowColumnSumViolation):
            YoungFilling((2, 2), frozenset({(1, 1), (1, 2)}))


class TestPatternSearch:
    def test_example_two_antiidentity(self):
        f = xi(UpperDiagram(6, EX2_UPPER))
        occ = find_max_pattern(f, J)
        assert occ.k == 4
        # the rectangle condition rules the (5,1) cell out of any
        # 4-pattern: rows 1..5 never reach column 6
        assert occ.cells == ((4, 2), (3, 4), (2, 5), (1, 6))

    def test_example_two_identity(self):
        f = xi(UpperDiagram(6, EX2_UPPER))
        assert find_max_pattern(f, I).k == 2

    def test_single_cell(self):
        f = xi(upper_diagram(identity(1)))
        assert find_max_pattern(f, I).k == 1
        assert find_max_pattern(f, J).k == 1

    def test_sizes_match_chain_statistics(self):
        for n in range(1, 5):
            for p in enumerate_bn(n):
                f = xi(upper_diagram(p))
                assert find_max_pattern(f, J).k == cro_star(p)
                assert find_max_pattern(f, I).k == nes_star(p)

    def test_negative_shared_vertex_not_a_pattern(self):
        f = xi(upper_diagram(SignedPermutation((-2, 1))))
        assert find_max_pattern(f, J).k == 1


class TestSteps:
    def test_anti_to_identity_k2(self):
        f = YoungFilling((2, 2), frozenset({(2, 1), (1, 2)}))
        occ = PatternOccurrence(J, ((2, 1), (1, 2)))
        assert anti_to_identity_step(f, occ).ones == {(1, 1), (2, 2)}

    def test_identity_to_anti_k2(self):
        f = YoungFilling((2, 2), frozenset({(1, 1), (2, 2)}))
        occ = PatternOccurrence(I, ((1, 1), (2, 2)))
        assert identity_to_anti_step(f, occ).ones == {(2, 1), (1, 2)}

    def test_anti_step_exposes_smaller_block(self):
        f = YoungFilling((3, 3, 3), frozenset({(3, 1), (2, 2), (1, 3)}))
        occ = PatternOccurrence(J, ((3, 1), (2, 2), (1, 3)))
        stepped = anti_to_identity_step(f, occ)
        # anti-identity of size 2 in the first columns, settled 1 at (3,3)
        assert stepped.ones == {(2, 1), (1, 2), (3, 3)}

    def test_identity_step_swaps_top_corner(self):
        f = YoungFilling((3, 3, 3), frozenset({(1, 1), (2, 2), (3, 3)}))
        occ = PatternOccurrence(I, ((1, 1), (2, 2), (3, 3)))
        stepped = identity_to_anti_step(f, occ)
        assert stepped.ones == {(2, 1), (1, 2), (3, 3)}

    def test_k1_is_noop(self):
        f = YoungFilling((1,), frozenset({(1, 1)}))
        occ = PatternOccurrence(J, ((1, 1),))
        assert anti_to_identity_step(f, occ) is f

    def test_stale_occurrence_rejected(self):
        f = YoungFilling((2, 2), frozenset({(1, 1), (2, 2)}))
        with pytest.raises(InvalidOccurrence):
            anti_to_identity_step(f, PatternOccurrence(J, ((2, 1), (1, 2))))

    def test_moves_preserve_sums(self):
        f = xi(UpperDiagram(6, EX2_UPPER))
        occ = find_max_pattern(f, J)
        stepped = anti_to_identity_step(f, occ)
        assert {r for r, _ in stepped.ones} == {r for r, _ in f.ones}
        assert {c for _, c in stepped.ones} == {c for _, c in f.ones}


class TestInterchange:
    def test_balanced_filling_unchanged(self):
        f = xi(upper_diagram(identity(3)))
        g, trace = interchange_patterns(f)
        assert g == f and trace == ()

    def test_two_by_two(self):
        f = YoungFilling((2, 2), frozenset({(2, 1), (1, 2)}))
        g, trace = interchange_patterns(f)
        assert g.ones == {(1, 1), (2, 2)}
        assert len(trace) == 1

    def test_example_two_swaps_chain_sizes(self):
        f = xi(UpperDiagram(6, EX2_UPPER))
        g, _ = interchange_patterns(f)
        d = xi_inverse(g)
        assert max_chain_sizes(d) == (2, 4)

    def test_composite_on_example_two(self):
        p = parse_permutation(EX2)
        image = max_chain_involution(p)
        assert max_chain_sizes(image) == (2, 4)
        assert str(degree_sequence(image)) == str(degree_sequence(p))
        assert neg(image) == 2

    def test_swapped_companion_shares_class(self):
        # the diagram-level swap partner found by exhaustive search
        p = parse_permutation(EX2)
        q = SignedPermutation(THETA_VALUES)
        assert str(degree_sequence(q)) == str(degree_sequence(p))
        assert max_chain_sizes(q) == (2, 4) and neg(q) == 2

    def test_exhaustive_involution_small_rank(self):
        for n in range(1, 4):
            for p in enumerate_bn(n):
                image = max_chain_involution(p)
                assert max_chain_sizes(image) == max_chain_sizes(p)[::-1]
                assert str(degree_sequence(image)) == str(degree_sequence(p))
                assert neg(image) == neg(p)
                assert max_chain_involution(image) == p


class TestFillingText:
    def test_round_trip(self):
        f = xi(UpperDiagram(6, EX2_UPPER))
        parsed = parse_filling_text(filling_to_text(f))
        assert parsed.shape == f.shape and parsed.ones == f.ones

    def test_format_layout(self):
        f = YoungFilling((2, 1), frozenset({(1, 2), (2, 1)}))
        assert filling_to_text(f) == "2,1\n1,2\n2,1\n"


class TestCountAvoiders:
    def test_two_by_two_unit_sums(self):
        kwargs = dict(shape=(2, 2), row_sums=(1, 1), col_sums=(1, 1), k=2)
        assert count_avoiders(kind=I, **kwargs) == 1
        assert count_avoiders(kind=J, **kwargs) == 1

    def test_k1_with_any_one_is_zero(self):
        for kind in (I, J):
            assert count_avoiders((2, 2), (1, 0), (0, 1), 1, kind) == 0

    def test_empty_filling_avoids_everything(self):
        for kind in (I, J):
            assert count_avoiders((2, 2), (0, 0), (0, 0), 1, kind) == 1

    def test_three_by_three_matches_pattern_bounds(self):
        # 0/1 matrices of a 3x3 square with unit sums avoiding a full
        # diagonal: all but one of the 6 placements
        ident = count_avoiders((3, 3, 3), (1, 1, 1), (1, 1, 1), 3, I)
        anti = count_avoiders((3, 3, 3), (1, 1, 1), (1, 1, 1), 3, J)
        assert ident == anti == 5

    def test_infeasible_sums(self):
        with pytest.raises(InfeasibleSums):
            count_avoiders((2, 2), (1, 1), (1, 0), 2, I)
        with pytest.raises(InfeasibleSums):
            count_avoiders((2, 1), (0, 2), (1, 1), 2, I)

    def test_staircase_sweep_small(self):
        # identity- and anti-identity-avoiders agree on every shape
        # inside a 3x3 box for unit-capped sums
        from crossnest import verify_avoider_symmetry

        report = verify_avoider_symmetry(max_rows=3, max_cols=3, ks=(2,))
        assert report.passed, report.counterexamples[:3]


class TestMaxPatternSize:
    def test_rectangle_condition_blocks_deep_cells(self):
        shape = (3, 1, 1)
        cells = [(3, 1), (1, 3)]
        assert max_pattern_size(cells, shape, J) == 1
        assert max_pattern_size(cells, shape, I) == 1

    def test_identity_needs_no_corner(self):
        shape = (3, 3, 3)
        cells = [(1, 1), (2, 2), (3, 3)]
        assert max_pattern_size(cells, shape, I) == 3
