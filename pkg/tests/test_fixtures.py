"""Built-in worked examples: matrices, signature functions, lookup tables.

The three fixtures form a spliced family: the two-component (2,4)-torus
link, the cored (4,2)-cable over the unknot, and the three-component
(3,6)-torus link obtained by splicing the first two.  Expected values come
from the piecewise tables shipped alongside the matrices; full-grid sweeps
against those tables live in the acceptance suite, module tests here spot
check and exercise the plumbing.
"""

from fractions import Fraction
from itertools import product

import pytest

from splicesig.cyclotomic import LaurentMatrix
from splicesig.fixtures import (PiecewiseTable, cable42_matrix, cable42_sig,
                                fixture_matrix, fixture_names, fixture_sig,
                                fixture_table, torus24_matrix, torus24_sig,
                                torus36_matrix, torus36_sig)
from splicesig.torus import UNIT, Angle


def ang(num, den):
    return Angle(Fraction(num, den))


def eighth(k):
    return ang(k % 8, 8)


class TestSpotValues:
    def test_torus24(self):
        f = torus24_sig()
        assert f((eighth(1), eighth(1))) == 1
        assert f((eighth(1), eighth(3))) == 0   # wall s = 1/2
        assert f((eighth(3), eighth(3))) == -1
        assert f((eighth(7), eighth(7))) == 1

    def test_cable42(self):
        f = cable42_sig()
        assert f((eighth(1), eighth(1), eighth(1))) == 2
        assert f((eighth(4), eighth(2), eighth(2))) == 0   # s = 3/2
        assert f((eighth(7), eighth(7), eighth(7))) == 2   # s = 35/8, past last wall
        assert f((eighth(4), eighth(4), eighth(4))) == -2  # s = 5/2

    def test_torus36(self):
        f = torus36_sig()
        assert f((eighth(1), eighth(1), eighth(1))) == 4
        assert f((eighth(2), eighth(1), eighth(1))) == 2   # wall s = 1/2
        assert f((eighth(4), eighth(3), eighth(3))) == -2
        assert f((eighth(7), eighth(7), eighth(7))) == 4

    def test_torus24_full_grid(self):
        f = torus24_sig()
        table = fixture_table("torus(2,4)")
        for a, b in product(range(1, 8), repeat=2):
            om = (eighth(a), eighth(b))
            assert f(om) == table.value(om), (a, b)

    def test_bigger_fixtures_sampled_rows(self):
        f2, f3 = cable42_sig(), torus36_sig()
        t2, t3 = fixture_table("cable(4,2)+core"), fixture_table("torus(3,6)")
        for a, b in product(range(1, 8), repeat=2):
            om = (eighth(a), eighth(b), eighth(1))
            assert f2(om) == t2.value(om), (a, b)
            assert f3(om) == t3.value(om), (a, b)


class TestBoundary:
    def test_cable_core_deletion_gives_torus24(self):
        f2, f1 = cable42_sig(), torus24_sig()
        for a, b in product(range(1, 8), repeat=2):
            assert f2((UNIT, eighth(a), eighth(b))) == f1((eighth(a), eighth(b)))

    def test_cable_copy_deletion_gives_hopf(self):
        f2 = cable42_sig()
        for a, b in product(range(1, 8), repeat=2):
            assert f2((eighth(a), UNIT, eighth(b))) == 0
            assert f2((eighth(a), eighth(b), UNIT)) == 0

    def test_torus36_single_deletion_gives_torus24(self):
        f3, f1 = torus36_sig(), torus24_sig()
        for a, b in product(range(1, 8), repeat=2):
            om1 = (eighth(a), eighth(b))
            assert f3((UNIT,) + om1) == f1(om1)
            assert f3((eighth(a), UNIT, eighth(b))) == f1(om1)
            assert f3(om1 + (UNIT,)) == f1(om1)

    def test_double_deletion_unknots(self):
        assert torus36_sig()((UNIT, UNIT, eighth(3))) == 0
        assert torus24_sig()((UNIT, eighth(5))) == 0
        assert cable42_sig()((eighth(5), UNIT, UNIT)) == 0

    def test_all_units_empty(self):
        assert torus24_sig()((UNIT, UNIT)) == 0
        assert torus36_sig()((UNIT, UNIT, UNIT)) == 0


class TestRegistry:
    def test_names_listed(self):
        names = fixture_names()
        assert "torus(2,4)" in names
        assert "cable(4,2)+core" in names
        assert "torus(3,6)" in names

    def test_aliases(self):
        assert fixture_sig("torus-2-4").label == torus24_sig().label
        assert fixture_sig("referee-kl1").label == torus24_sig().label
        assert fixture_sig("referee-k'l'").label == torus24_sig().label
        assert fixture_sig("referee-K''L''").label == cable42_sig().label
        assert fixture_sig("referee-L").label == torus36_sig().label
        assert fixture_sig("TORUS-3-6").label == torus36_sig().label

    def test_unicode_primes(self):
        assert fixture_sig("referee-K′L′").label == torus24_sig().label
        assert fixture_sig("referee-K″L″").label == cable42_sig().label

    def test_unknown_name_lists_known(self):
        with pytest.raises(KeyError) as info:
            fixture_sig("torus(9,9)")
        assert "torus(2,4)" in str(info.value)

    def test_tables_share_names(self):
        for name in fixture_names():
            assert fixture_table(name).values


class TestMatrices:
    def test_shapes_and_variables(self):
        m1, m2, m3 = torus24_matrix(), cable42_matrix(), torus36_matrix()
        assert len(m1.entries) == 1 and m1.variables == ("t0", "t1")
        assert len(m2.entries) == 2 and m2.variables == ("t0", "t1", "t2")
        assert len(m3.entries) == 4 and m3.variables == ("t0", "t1", "t2")

    def test_json_round_trip(self):
        for name in fixture_names():
            m = fixture_matrix(name)
            again = LaurentMatrix.loads(m.dumps())
            assert again.dumps() == m.dumps()
            om = (ang(1, 8),) * len(m.variables)
            a = m.evaluate(om, 8).signature_nullity()
            b = again.evaluate(om, 8).signature_nullity()
            assert a == b

    def test_hermitian_everywhere_sampled(self):
        m = cable42_matrix()
        for a, b, c in [(1, 1, 1), (3, 5, 7), (2, 6, 4), (7, 1, 3)]:
            h = m.evaluate((eighth(a), eighth(b), eighth(c)), 8)
            s, n = h.signature_nullity()
            assert s + n <= 2

    def test_fixture_matrix_lookup_matches(self):
        assert fixture_matrix("referee-L").dumps() == torus36_matrix().dumps()


class TestPiecewiseTable:
    def test_regions_and_walls(self):
        t = PiecewiseTable(weights=(1,), walls=(Fraction(1, 2),), values=(5, 0, -5))
        assert t.value((ang(1, 4),)) == 5
        assert t.value((ang(1, 2),)) == 0
        assert t.value((ang(3, 4),)) == -5

    def test_weighted_sum(self):
        t = PiecewiseTable(weights=(1, 2), walls=(Fraction(1, 1),), values=(7, 1, -7))
        assert t.value((ang(1, 2), ang(1, 4))) == 1    # s = 1/2 + 1/2 = 1
        assert t.value((ang(1, 4), ang(1, 4))) == 7    # s = 3/4
        assert t.value((ang(3, 4), ang(1, 2))) == -7   # s = 7/4

    def test_shipped_table_walls(self):
        t1 = fixture_table("torus(2,4)")
        assert t1.value((ang(1, 4), ang(1, 4))) == 0   # s = 1/2 wall
        t3 = fixture_table("torus(3,6)")
        assert t3.value((ang(1, 3), ang(1, 3), ang(1, 3))) == -1  # s = 1 wall
