"""Torus-link bases, the cabling step, and the univariate reduction.

The lattice count is validated against an independent oracle: the exact
signature of the symmetrized Seifert matrix of the trefoil, evaluated through
the cyclotomic machinery.  The cabling step is validated by reconstructing a
worked fixture table, and the reduction formula by the Hopf identity.
"""

from fractions import Fraction
from itertools import product

import pytest

from splicesig.cables import (CableParams, UnivariateReductionInput, cable_step,
                              default_torus_base, hirzebruch, tilde_from_multi,
                              univariate_reduction, weighted_linking)
from splicesig.cyclotomic import CyclotomicNumber, HermitianMatrix
from splicesig.errors import GuardViolated, InvalidParams, MissingBaseEvaluator
from splicesig.hopf import hopf_sig_fn, sigma_k
from splicesig.splice import DistinguishedSigFn, zero_fn
from splicesig.torus import UNIT, Angle


def ang(num, den):
    return Angle(Fraction(num, den))


def seifert_lt_signature(v_matrix, *, omega, level):
    """Oracle: exact signature of (1-wbar)V + (1-w)V^T at a root of unity."""
    g = len(v_matrix)
    w = CyclotomicNumber.from_angle(omega, level)
    one = CyclotomicNumber.from_rational(1, level)
    a, b = one - w.conjugate(), one - w
    rows = [[a * CyclotomicNumber.from_rational(v_matrix[i][j], level)
             + b * CyclotomicNumber.from_rational(v_matrix[j][i], level)
             for j in range(g)] for i in range(g)]
    s, _ = HermitianMatrix(rows).signature_nullity()
    return s


class TestHirzebruch:
    def test_hand_counts(self):
        assert hirzebruch(2, 3, ang(1, 2)) == -2
        assert hirzebruch(2, 3, ang(1, 12)) == 0
        assert hirzebruch(1, 9, ang(1, 3)) == 0  # empty lattice

    def test_against_trefoil_oracle(self):
        trefoil_v = [[-1, 1], [0, -1]]
        for k in range(1, 12):
            want = seifert_lt_signature(trefoil_v, omega=ang(k, 12), level=12)
            assert hirzebruch(2, 3, ang(k, 12)) == want, k

    def test_against_cinquefoil_oracle(self):
        # (2,5)-torus knot, Seifert matrix of the standard genus-2 surface
        v = [[-1, 1, 0, 0], [0, -1, 1, 0], [0, 0, -1, 1], [0, 0, 0, -1]]
        for k in range(1, 10):
            want = seifert_lt_signature(v, omega=ang(k, 10), level=10)
            assert hirzebruch(2, 5, ang(k, 10)) == want, k

    def test_symmetries(self):
        for p, q in [(2, 3), (3, 4), (2, 5), (3, 5), (4, 7)]:
            for num in range(1, 16):
                z = ang(num, 16)
                assert hirzebruch(p, q, z) == hirzebruch(q, p, z)
                assert hirzebruch(p, q, z) == hirzebruch(p, q, z.conjugate())

    def test_tie_angles_counted_neither_side(self):
        # theta = 5/6 hits i/p + j/q = 1/2 + 1/3 exactly on conjugation to 1/6:
        # the pair (1,1) joins the nullity, leaving one lattice point on each side
        assert hirzebruch(2, 3, ang(1, 6)) == -1

    def test_invalid_params(self):
        with pytest.raises(InvalidParams):
            hirzebruch(2, 4, ang(1, 3))
        with pytest.raises(InvalidParams):
            hirzebruch(0, 3, ang(1, 3))
        with pytest.raises(InvalidParams):
            hirzebruch(2, 3, UNIT)


class TestCableParams:
    def test_coprimality_enforced(self):
        with pytest.raises(InvalidParams):
            CableParams.make(2, 4, 1)
        with pytest.raises(InvalidParams):
            CableParams.make(0, 0, 1)
        with pytest.raises(InvalidParams):
            CableParams.make(0, 2, 1)  # p = 0 forces q = +-1

    def test_degenerate_ok(self):
        assert CableParams.make(0, -1, 3).q == -1
        assert CableParams.make(1, 0, 2).core_kept is False

    def test_copies_positive(self):
        with pytest.raises(InvalidParams):
            CableParams.make(1, 2, 0)


class TestCableStep:
    def test_trivial_params_reduce_to_operand(self):
        f = hopf_sig_fn(1, 2, distinguished=True)
        g = cable_step(f, CableParams.make(1, 0, 1))
        for a, b, c in product(range(4), repeat=3):
            om = (ang(a, 4), ang(b, 4), ang(c, 4))
            try:
                got = g(om)
            except GuardViolated:
                continue
            assert got == f((om[2],) + om[:2])

    def test_guard(self):
        f = hopf_sig_fn(1, 2, distinguished=True)
        g = cable_step(f, CableParams.make(1, 0, 1))
        with pytest.raises(GuardViolated):
            g((ang(1, 3), ang(2, 3), UNIT))

    def test_missing_base(self):
        f = hopf_sig_fn(1, 2, distinguished=True)
        with pytest.raises(MissingBaseEvaluator):
            cable_step(f, CableParams.make(2, 3, 2))

    def test_base_arity_checked(self):
        f = hopf_sig_fn(1, 2, distinguished=True)
        with pytest.raises(MissingBaseEvaluator):
            cable_step(f, CableParams.make(2, 3, 2), zero_fn(2))

    def test_builtin_d1_base(self):
        base = default_torus_base(CableParams.make(2, 3, 1))
        assert base((UNIT, ang(1, 2))) == -2
        assert base((UNIT, UNIT)) == 0
        with pytest.raises(MissingBaseEvaluator):
            base((ang(1, 2), ang(1, 2)))

    def test_builtin_d1_base_mirrors(self):
        base = default_torus_base(CableParams.make(-2, 3, 1))
        assert base((UNIT, ang(1, 2))) == 2

    def test_builtin_hopf_bases_vanish(self):
        # every p*q = 0 pattern has one component on a side of the Hopf
        # pairing, and a one-sided defect factor vanishes identically
        for params in [CableParams.make(0, 1, 2), CableParams.make(0, -1, 2, True),
                       CableParams.make(1, 0, 3), CableParams.make(-1, 0, 2, True)]:
            base = default_torus_base(params)
            want_arity = 1 + params.d + (1 if params.core_kept else 0)
            assert base.arity == want_arity
            for om in product((ang(1, 3), ang(2, 3)), repeat=base.arity):
                assert base(om) == 0

    def test_unknot_cable_reproduces_fixture_table(self):
        # the 2-colored (2,4)-torus link is the d=2, (p,q)=(1,2) cable over
        # the unknot; the base link axis+strands is the cored (4,2)-cable
        # fixture read with its core as the axis
        from splicesig.fixtures import cable42_sig, fixture_table
        unknot = DistinguishedSigFn(1, lambda om: 0, linking=(), label="unknot")
        g = cable_step(unknot, CableParams.make(1, 2, 2), cable42_sig())
        table = fixture_table("torus(2,4)")
        for a, b in product(range(1, 8), repeat=2):
            om = (ang(a, 8), ang(b, 8))
            if ((a + b) % 8) == 0:
                with pytest.raises(GuardViolated):
                    g(om)
                continue
            assert g(om) == table.value(om), (a, b)

    def test_core_kept_wires_extra_color(self):
        f = hopf_sig_fn(1, 2, distinguished=True)
        g = cable_step(f, CableParams.make(0, 1, 2, core_kept=True))
        assert g.arity == 2 + 3  # two surviving colors + core + two copies


class TestTildeFromMulti:
    def test_identity_when_d1(self):
        assert tilde_from_multi(5, 1, 7, -3) == 5

    def test_subtracts_internal_linking(self):
        assert tilde_from_multi(0, 2, 3, 3) == -9
        assert tilde_from_multi(4, 3, 1, 2) == 4 - 6

    def test_hopf_pattern_unchanged(self):
        assert tilde_from_multi(2, 4, 1, 0) == 2


class TestReductionInput:
    def test_validation(self):
        good = UnivariateReductionInput.make(6, (2, 3), (0, 0), [[0, 1], [1, 0]])
        assert good.mu == 2
        with pytest.raises(InvalidParams):
            UnivariateReductionInput.make(6, (0, 3), (0, 0), [[0, 1], [1, 0]])
        with pytest.raises(InvalidParams):
            UnivariateReductionInput.make(6, (2, 6), (0, 0), [[0, 1], [1, 0]])
        with pytest.raises(InvalidParams):
            UnivariateReductionInput.make(6, (2, 3), (0,), [[0, 1], [1, 0]])
        with pytest.raises(InvalidParams):
            UnivariateReductionInput.make(6, (2, 3), (0, 0), [[1, 1], [1, 0]])
        with pytest.raises(InvalidParams):
            UnivariateReductionInput.make(6, (2, 3), (0, 0), [[0, 2], [1, 0]])

    def test_character(self):
        inp = UnivariateReductionInput.make(6, (2, 3), (0, 0), [[0, 1], [1, 0]])
        assert inp.omega() == (ang(1, 3), ang(1, 2))
        assert inp.xi() == ang(1, 6)


class TestWeightedLinking:
    def test_zero_matrix(self):
        inp = UnivariateReductionInput.make(4, (1, 2), (0, 0), [[0, 0], [0, 0]])
        assert weighted_linking(inp, 0) == 0

    def test_hopf_example(self):
        inp = UnivariateReductionInput.make(6, (2, 3), (0, 0), [[0, 1], [1, 0]])
        assert weighted_linking(inp, 0) == 3
        assert weighted_linking(inp, 1) == 2

    def test_general_row(self):
        inp = UnivariateReductionInput.make(
            9, (2, 3, 4), (0, 0, 0),
            [[0, 1, -2], [1, 0, 3], [-2, 3, 0]])
        assert weighted_linking(inp, 0) == 3 * 1 + 4 * (-2)
        assert weighted_linking(inp, 2) == 2 * (-2) + 3 * 3


class TestUnivariateReduction:
    def test_hopf_identity_spot(self):
        hopf = hopf_sig_fn(1, 1)
        for n, n1, n2 in [(3, 1, 2), (5, 2, 3), (6, 4, 1)]:
            xi = ang(1, n)
            slbar = sigma_k(n1, xi) * sigma_k(n2, xi) - n1 * n2
            inp = UnivariateReductionInput.make(n, (n1, n2), (0, 0), [[0, 1], [1, 0]])
            assert univariate_reduction(inp, slbar) == hopf(inp.omega()) == 0

    def test_mu1_passthrough(self):
        inp = UnivariateReductionInput.make(5, (2,), (0,), [[0]])
        assert univariate_reduction(inp, -4) == -4

    def test_mu2_small_linking_shortcut(self):
        # with p = 0 and |lk| <= 1 the correction is (n1 + n2 - 1) * lk
        for n, n1, n2, lk in [(5, 2, 3, 1), (7, 4, 2, -1), (4, 1, 3, 0)]:
            inp = UnivariateReductionInput.make(n, (n1, n2), (0, 0),
                                                [[0, lk], [lk, 0]])
            assert univariate_reduction(inp, 10) == 10 + (n1 + n2 - 1) * lk

    def test_torus_term_requires_evaluator(self):
        inp = UnivariateReductionInput.make(5, (2, 3), (1, 0), [[0, 1], [1, 0]])
        with pytest.raises(MissingBaseEvaluator):
            univariate_reduction(inp, 0)

    def test_torus_term_plumbing(self):
        # the evaluator for color i receives (xi^{lw_i}, xi) and its value is
        # subtracted
        inp = UnivariateReductionInput.make(5, (2, 3), (1, 0), [[0, 1], [1, 0]])
        seen = []

        def fake(upsilon, xi):
            seen.append((upsilon, xi))
            return 11

        base = univariate_reduction(
            UnivariateReductionInput.make(5, (2, 3), (0, 0), [[0, 1], [1, 0]]), 0)
        got = univariate_reduction(inp, 0, {0: fake})
        assert seen == [(ang(3, 5), ang(1, 5))]
        assert got == base - 11
