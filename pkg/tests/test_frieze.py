"""Frieze construction, validation, rendering, and quiddity extraction."""

import pytest

from plabic.cluster import validate_cluster
from plabic.combinat import KSubset
from plabic.errors import FriezeBuildError, InvalidInputError
from plabic.frieze import (
    SL2,
    SL3,
    Frieze,
    build_sl2_from_quiddity,
    build_sl3_from_cluster,
    extract_quiddity,
    frieze_from_json,
    frieze_to_json,
    render,
    sl2_from_table,
    sl3_from_table,
    validate_sl2,
    validate_sl3,
)
from plabic.geometry import arc_quiddity, cc_quiddity_from_triangulation, quadrilateral_cluster
from plabic.oracle import (
    cluster_from_triangulation,
    fan_cluster,
    polygon_triangulations,
)
from plabic.pluecker import solve_from_cluster

from conftest import ks


def rotations(seq):
    return [tuple(seq[i:]) + tuple(seq[:i]) for i in range(len(seq))]


def parse_render(text):
    return [[int(tok) for tok in line.split()] for line in text.strip().splitlines()]


@pytest.fixture(scope="module")
def quad37_frieze():
    return build_sl3_from_cluster(quadrilateral_cluster(7))


class TestBuildSl2:
    def test_printed_friezes_rebuild(self, sl2_printed):
        for fixture in sl2_printed:
            built = build_sl2_from_quiddity(fixture.rows[1])
            assert built == fixture
            assert validate_sl2(built).ok

    def test_quoted_first_rows(self, sl2_printed):
        quoted = [(3, 1, 2, 2, 1), (3, 1, 3, 1, 3, 1), (4, 1, 2, 2, 2, 1)]
        for fixture, row in zip(sl2_printed, quoted):
            assert fixture.rows[1] in rotations(row)

    def test_pentagon_rows(self):
        f = build_sl2_from_quiddity((3, 1, 2, 2, 1))
        assert f.width == 2
        assert f.rows[2] in rotations((2, 2, 1, 3, 1))

    def test_alternating_row_gives_constant_middle(self):
        f = build_sl2_from_quiddity((3, 1, 3, 1, 3, 1))
        assert f.rows[2] == (2,) * 6

    def test_all_ones_rejected(self):
        with pytest.raises(FriezeBuildError):
            build_sl2_from_quiddity((1, 1, 1, 1))

    def test_too_short_rejected(self):
        with pytest.raises(InvalidInputError):
            build_sl2_from_quiddity((1, 2, 1))


class TestValidateSl2:
    def test_printed_fixtures_clean(self, sl2_printed):
        for fixture in sl2_printed:
            report = validate_sl2(fixture)
            assert report.ok and report.checked == fixture.n * (fixture.n - 1)

    def test_corruption_detected(self, sl2_printed):
        fixture = sl2_printed[0]
        rows = dict(fixture.rows)
        rows[1] = (3,) + rows[1][1:]
        assert not validate_sl2(Frieze(SL2, fixture.n, rows)).ok

    def test_all_ones_interior_fails(self):
        rows = {r: (1,) * 5 for r in range(-1, 5)}
        rows[-1] = rows[4] = (0,) * 5
        report = validate_sl2(Frieze(SL2, 5, rows))
        assert any(v[0] == "diamond" for v in report.violations)


class TestValidateSl3:
    def test_printed_fixtures_clean(self, sl3_printed):
        for fixture in sl3_printed:
            report = validate_sl3(fixture)
            assert report.ok and report.checked == fixture.n * (fixture.n - 4)

    def test_corruption_detected(self, sl3_printed):
        fixture = sl3_printed[0]
        rows = dict(fixture.rows)
        row = list(rows[1])
        row[row.index(4)] = 5
        rows[1] = tuple(row)
        assert not validate_sl3(Frieze(SL3, fixture.n, rows)).ok

    def test_every_small_cluster_gives_valid_frieze(self, enum_cache):
        for k, n in [(3, 6), (3, 7)]:
            for c in enum_cache(k, n).clusters:
                f = build_sl3_from_cluster(c)
                assert validate_sl3(f).ok

    def test_hexagon_quadrilateral_matches_first_printed(self, sl3_printed):
        built = build_sl3_from_cluster(quadrilateral_cluster(6))
        column_pairs = {
            (built.rows[1][i], built.rows[2][i]) for i in range(6)
        }
        fixture = sl3_printed[0]
        assert column_pairs == {
            (fixture.rows[1][i], fixture.rows[2][i]) for i in range(6)
        }


class TestBuildSl3:
    def test_width_and_borders(self, quad37_frieze):
        f = quad37_frieze
        assert f.width == 3
        assert f.rows[0] == (1,) * 7 and f.rows[-1] == (0,) * 7
        assert f.rows[4] == (1,) * 7 and f.rows[5] == (0,) * 7

    def test_entries_are_table_values(self, quad37_frieze):
        t = solve_from_cluster(quadrilateral_cluster(7))
        assert quad37_frieze.entry(1, 1) == t.get((1, 2, 4))
        assert quad37_frieze.entry(3, 2) == t.get((2, 3, 7))

    def test_non_k3_rejected(self, fig1):
        with pytest.raises(InvalidInputError):
            build_sl3_from_cluster(fig1)


class TestExtractQuiddity:
    def test_heptagon_reverse(self, quad37_frieze):
        assert extract_quiddity(quad37_frieze, "reverse") == (2, 5, 2, 1, 4, 4, 1)

    def test_heptagon_forwards(self, quad37_frieze):
        assert extract_quiddity(quad37_frieze, "forwards") == (1, 4, 4, 1, 2, 5, 2)

    def test_quid_equalities_small_range(self):
        for n in range(6, 11):
            c = quadrilateral_cluster(n)
            f = build_sl3_from_cluster(c)
            assert extract_quiddity(f, "reverse") == arc_quiddity(c, "lower")
            assert extract_quiddity(f, "forwards") == arc_quiddity(c, "upper")

    def test_width_one_rows_coincide(self):
        # a (3,5) cluster: complements of the pentagon fan
        fan = fan_cluster(5)
        c = validate_cluster(3, 5, [s.complement() for s in fan.members])
        f = sl3_from_table(solve_from_cluster(c))
        rev = extract_quiddity(f, "reverse")
        fwd = extract_quiddity(f, "forwards")
        assert rev in rotations(fwd)

    def test_bad_kind_rejected(self, quad37_frieze):
        with pytest.raises(InvalidInputError):
            extract_quiddity(quad37_frieze, "sideways")


class TestGr2Equivalence:
    @pytest.mark.parametrize("n", range(5, 9))
    def test_built_equals_solved(self, n):
        for arcs in polygon_triangulations(n):
            q = cc_quiddity_from_triangulation(arcs, n)
            built = build_sl2_from_quiddity(q)
            solved = sl2_from_table(
                solve_from_cluster(cluster_from_triangulation(n, arcs))
            )
            assert built == solved

    @pytest.mark.parametrize("n", range(4, 10))
    def test_glide_symmetry(self, n):
        for arcs in polygon_triangulations(n):
            f = build_sl2_from_quiddity(cc_quiddity_from_triangulation(arcs, n))
            for r in range(0, n - 1):
                for i in range(1, n + 1):
                    assert f.entry(r, i) == f.entry(n - 2 - r, i + r + 1)

    def test_entry_anchor(self):
        arcs = {(1, 3), (1, 4)}
        t = solve_from_cluster(cluster_from_triangulation(5, arcs))
        f = sl2_from_table(t)
        for r in range(1, 3):
            for i in range(1, 6):
                lo = (i - 2) % 5 + 1
                hi = (i + r - 1) % 5 + 1
                assert f.entry(r, i) == t.get((lo, hi))


class TestRenderAndJson:
    def test_round_trip_parse(self, sl2_printed, quad37_frieze):
        for f in list(sl2_printed) + [quad37_frieze]:
            rows = parse_render(render(f))
            shown = [list(f.rows[r]) for r in range(0, len(rows))]
            assert rows == shown

    def test_sl3_hexagon_renders_four_rows(self, sl3_printed):
        assert len(render(sl3_printed[0]).strip().splitlines()) == 4

    def test_ones_border_rows_shown(self, sl2_printed):
        lines = render(sl2_printed[0]).strip().splitlines()
        assert lines[0].split() == ["1"] * 5
        assert lines[-1].split() == ["1"] * 5

    def test_rows_shift_right(self, sl2_printed):
        lines = render(sl2_printed[0]).splitlines()
        indent = [len(line) - len(line.lstrip()) for line in lines]
        assert indent == sorted(indent) and len(set(indent)) == len(indent)

    def test_json_round_trip(self, sl2_printed, sl3_printed):
        for f in list(sl2_printed) + list(sl3_printed):
            assert frieze_from_json(frieze_to_json(f)) == f

    def test_malformed_json_rejected(self):
        with pytest.raises(InvalidInputError):
            frieze_from_json('{"variant": "SL4", "n": 6, "rows": []}')
        with pytest.raises(InvalidInputError):
            frieze_from_json('{"variant": "SL3", "n": 6, "rows": [[1, 2, 3]]}')


class TestPeriodicityEntryAccess:
    def test_entries_wrap(self, quad37_frieze):
        f = quad37_frieze
        for r in range(-1, 6):
            for i in range(1, 8):
                assert f.entry(r, i) == f.entry(r, i + 7) == f.entry(r, i - 7)
