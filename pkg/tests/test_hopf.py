"""Generalized Hopf links: closed forms against the explicit Seifert family.

The family of the standard C-complex (one generator per pair of copies,
redundant by design) is the oracle for every closed form: signature,
nullity and spectrum.  Module tests run small grids; the wide grids run in
the acceptance suite.
"""

import math
from fractions import Fraction
from itertools import permutations, product

import numpy as np
import pytest

from splicesig.ccomplex import assemble, signature
from splicesig.errors import BoundaryCharacter
from splicesig.hopf import (HopfSpec, hopf_nullity, hopf_seifert_family,
                            hopf_sig_fn, hopf_signature, hopf_spectrum,
                            sigma_k, unlink_family)
from splicesig.torus import Angle, conjugate_character


def ang(num, den):
    return Angle(Fraction(num, den))


class TestClosedForm:
    def test_one_sided_links_vanish(self):
        for m, n in [(1, 1), (3, 1), (5, 0), (1, 4)]:
            spec = HopfSpec.make(m, n)
            for k in range(1, 5):
                v = tuple(ang(k, 5) for _ in range(m))
                u = tuple(ang(3, 7) for _ in range(n))
                if min(m, n) <= 1:
                    assert hopf_signature(spec, v, u) == 0

    def test_hand_values(self):
        spec = HopfSpec.make(2, 2)
        half = (ang(1, 2), ang(1, 2))
        third = (ang(1, 3), ang(1, 3))
        assert hopf_signature(spec, half, half) == 0
        assert hopf_signature(spec, third, third) == 1

    def test_arity_mismatch(self):
        spec = HopfSpec.make(2, 2)
        with pytest.raises(ValueError):
            hopf_signature(spec, (ang(1, 3),), (ang(1, 3), ang(1, 3)))

    def test_permutation_invariance(self):
        spec = HopfSpec.make(3, 2)
        v = (ang(1, 5), ang(2, 5), ang(4, 5))
        u = (ang(1, 3), ang(2, 3))
        base = hopf_signature(spec, v, u)
        for pv in permutations(v):
            for pu in permutations(u):
                assert hopf_signature(spec, pv, pu) == base

    def test_orientation_flip_is_conjugation(self):
        # reversing copy i flips its nu entry; evaluating the all-positive
        # form at the conjugated slot gives the same number
        flipped = HopfSpec.make(2, 1, nu=(1, -1))
        plain = HopfSpec.make(2, 1)
        for a, b, c in product(range(1, 5), repeat=3):
            v = (ang(a, 5), ang(b, 5))
            u = (ang(c, 5),)
            v_conj = (v[0], v[1].conjugate())
            assert hopf_signature(flipped, v, u) == hopf_signature(plain, v_conj, u)

    def test_against_seifert_oracle_small(self):
        for m, n in [(2, 2), (2, 3), (3, 3)]:
            fam = hopf_seifert_family(m, n)
            for a, b in product(range(1, 6), repeat=2):
                eta, zeta = ang(a, 6), ang(b, 6)
                assert signature(fam, (eta, zeta)) == sigma_k(m, eta) * sigma_k(n, zeta)


class TestSigmaK:
    def test_values(self):
        assert sigma_k(2, ang(1, 2)) == 0
        assert sigma_k(3, ang(1, 3)) == -1
        assert sigma_k(0, ang(1, 5)) == 0

    def test_matches_defect_on_diagonal(self):
        from splicesig.torus import defect
        for k in range(1, 5):
            for num in range(1, 8):
                x = ang(num, 8)
                assert sigma_k(k, x) == defect((1,) * k, (x,) * k)


class TestNullity:
    def test_four_cases(self):
        half2 = (ang(1, 2), ang(1, 2))
        third2 = (ang(1, 3), ang(1, 3))
        assert hopf_nullity(2, 2, half2, half2) == 1      # both sums integral
        assert hopf_nullity(2, 2, third2, third2) == 0    # neither
        assert hopf_nullity(2, 2, half2, third2) == 1     # n-1 with eta integral
        assert hopf_nullity(2, 2, third2, half2) == 1     # m-1
        assert hopf_nullity(3, 2, (ang(1, 3),) * 3, half2) == 2  # m+n-3

    def test_generic_character_zero(self):
        eta = (ang(1, 7), ang(2, 7), ang(3, 7))
        zeta = (ang(1, 5),)
        assert hopf_nullity(3, 1, eta, zeta) == 0

    def test_boundary_rejected(self):
        with pytest.raises(BoundaryCharacter):
            hopf_nullity(2, 1, (Angle(0), ang(1, 3)), (ang(1, 3),))

    def test_against_family_kernel(self):
        # the redundant family has m+n-1 dependent generators: its kernel
        # exceeds the true nullity by exactly that much
        for m, n in [(1, 1), (2, 2), (3, 2)]:
            fam = hopf_seifert_family(m, n)
            for a, b in product(range(1, 4), repeat=2):
                eta, zeta = (ang(a, 4),) * m, (ang(b, 4),) * n
                _, _, kernel = fam.raw_inertia((ang(a, 4), ang(b, 4)))
                want = hopf_nullity(m, n, eta, zeta) + (m + n - 1)
                assert kernel == want, (m, n, a, b)


class TestSeifertFamily:
    def test_smallest_family_is_zero_form(self):
        fam = hopf_seifert_family(1, 1)
        for eps in product((1, -1), repeat=2):
            assert fam.forms[eps] == ((0,),)

    def test_22_plus_plus_matrix(self):
        # generators ordered a_00, a_01, a_10, a_11; the four relations of
        # the construction, indices cyclic mod 2, summed on collision
        fam = hopf_seifert_family(2, 2)
        assert fam.forms[1, 1] == ((-1, 1, 1, -1),
                                   (1, -1, -1, 1),
                                   (1, -1, -1, 1),
                                   (-1, 1, 1, -1))

    def test_duality(self):
        for m, n in [(1, 2), (2, 2), (3, 2), (2, 4)]:
            fam = hopf_seifert_family(m, n)
            assert fam.validate() == []
            tpp = fam.forms[1, 1]
            tmm = fam.forms[-1, -1]
            g = len(tpp)
            assert all(tpp[i][j] == tmm[j][i] for i in range(g) for j in range(g))

    def test_boundary_data_is_unlinks(self):
        fam = hopf_seifert_family(2, 3)
        assert fam.boundary[(0,)].generators == 0
        f = fam.sig_fn()
        assert f((Angle(0), ang(1, 5))) == 0

    def test_linking_metadata(self):
        fam = hopf_seifert_family(3, 4)
        assert fam.linking == ((0, 12), (12, 0))

    def test_unlink_family(self):
        fam = unlink_family(4)
        assert fam.validate() == []
        assert fam.generators == 0


class TestSpectrum:
    def test_smallest_case_is_zero(self):
        assert hopf_spectrum(1, 1, ang(1, 3), ang(1, 5)) == [0.0]

    def test_boundary_rejected(self):
        with pytest.raises(BoundaryCharacter):
            hopf_spectrum(2, 2, Angle(0), ang(1, 3))

    def test_matches_numeric_eigenvalues(self):
        # the closed form lists all mn eigenvalues of the assembled family,
        # including the m+n-1 structural zeros of the redundant generators
        for m, n in [(1, 2), (2, 2), (2, 3)]:
            fam = hopf_seifert_family(m, n)
            for a, b in product(range(1, 6), repeat=2):
                eta, zeta = ang(a, 6), ang(b, 6)
                want = sorted(hopf_spectrum(m, n, eta, zeta))
                got = sorted(assemble(fam, (eta, zeta)).eigen_multiset_numeric())
                assert len(want) == len(got) == m * n
                assert all(math.isclose(x, y, rel_tol=0, abs_tol=1e-9)
                           for x, y in zip(want, got))

    def test_sign_counts_give_signature(self):
        for a, b in product(range(1, 6), repeat=2):
            eta, zeta = ang(a, 6), ang(b, 6)
            spec = hopf_spectrum(2, 2, eta, zeta)
            s = sum(1 for x in spec if x > 1e-12) - sum(1 for x in spec if x < -1e-12)
            assert s == sigma_k(2, eta) * sigma_k(2, zeta)


class TestSigFnMetadata:
    def test_distinguished_linking(self):
        f = hopf_sig_fn(3, 2, distinguished=True)
        assert f.linking == (0, 0, 1, 1)

    def test_plain_arity(self):
        assert hopf_sig_fn(2, 3).arity == 5
