"""Generalized Hopf links: closed forms and the explicit Seifert oracle.

H_{m,n} consists of m parallel disk-framed copies of one Hopf-link component
and n of the other: copies on the same side are pairwise unlinked, each
cross pair links once.  With every component its own color, the signature has
the closed form

    sigma_{H_{m,n}}(v, u) = defect(v) * defect(u)

on the full character torus (orientation-reversed components contribute
weight -1 in the defect instead of +1).  The nullity on the open torus
depends only on whether the angle sums are integers.

The module also builds the explicit bicolored Seifert family of the standard
C-complex (m disks clasping n disks), whose mn generators are cyclically
indexed and linearly dependent: the assembled form computes the signature of
H_{m,n} by brute force, which is the oracle pinning every sign convention in
the splice calculus.  Its kernel overshoots the nullity by the excess
m + n - 1 of the generating family, so it carries basis=False.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .ccomplex import SeifertFamily
from .errors import BoundaryCharacter
from .splice import FULL_TORUS, DistinguishedSigFn, SigFn
from .torus import Angle, Character, defect, ind, is_open, log_sum


class HopfSpec(NamedTuple):
    """m and n parallel copies, with per-copy orientations (+1/-1)."""

    m: int
    n: int
    nu: Tuple[int, ...] = ()
    lam: Tuple[int, ...] = ()

    @classmethod
    def make(cls, m: int, n: int,
             nu: Optional[Sequence[int]] = None,
             lam: Optional[Sequence[int]] = None) -> "HopfSpec":
        if m < 0 or n < 0:
            raise ValueError("component counts must be non-negative")
        nu = tuple(nu) if nu is not None else (1,) * m
        lam = tuple(lam) if lam is not None else (1,) * n
        if len(nu) != m or len(lam) != n:
            raise ValueError("orientation vectors must match the copy counts")
        if any(x not in (1, -1) for x in nu + lam):
            raise ValueError("orientations are +1 or -1")
        return cls(m, n, nu, lam)


def hopf_signature(spec: HopfSpec, v: Character, u: Character) -> int:
    """sigma_{H_{m,n}}(v, u) = defect_nu(v) * defect_lam(u), on the full torus."""
    if len(v) != spec.m or len(u) != spec.n:
        raise ValueError(
            f"characters of lengths {len(v)},{len(u)} do not match H_{{{spec.m},{spec.n}}}")
    return defect(spec.nu, v) * defect(spec.lam, u)


def hopf_nullity(m: int, n: int, eta: Character, zeta: Character) -> int:
    """Nullity of H_{m,n} on the open torus: a function of the angle sums only."""
    if m < 1 or n < 1:
        raise ValueError("need at least one copy on each side")
    if len(eta) != m or len(zeta) != n:
        raise ValueError("character lengths do not match the copy counts")
    if not (is_open(eta) and is_open(zeta)):
        raise BoundaryCharacter("nullity closed form holds on the open torus only")
    a = log_sum(eta).denominator == 1
    b = log_sum(zeta).denominator == 1
    if a and b:
        return m + n - 3
    if b:
        return m - 1
    if a:
        return n - 1
    return 0


def sigma_k(k: int, x: Angle) -> int:
    """ind(k * Log x) - k: the per-copy factor of the Hopf signature."""
    return ind(k * x.value) - k


def hopf_sig_fn(m: int, n: int, *, distinguished: bool = False) -> SigFn:
    """The closed form as an evaluator of arity m+n, total on the torus.

    With distinguished=True the first copy of the m-side is marked
    distinguished: it is unlinked from the other m-1 parallel copies and
    links each of the n opposite copies once, so the linking vector is
    (0, ..., 0, 1, ..., 1).
    """
    spec = HopfSpec.make(m, n)
    label = f"hopf({m},{n})"

    def fn(omega: Character) -> int:
        return hopf_signature(spec, omega[:m], omega[m:])

    if distinguished:
        if m < 1:
            raise ValueError("no component to distinguish")
        linking = (0,) * (m - 1) + (1,) * n
        return DistinguishedSigFn(m + n, fn, linking=linking,
                                  domain=FULL_TORUS, label=label)
    return SigFn(m + n, fn, domain=FULL_TORUS, label=label)


# ---------------------------------------------------------------------------
# the Seifert oracle
# ---------------------------------------------------------------------------

def unlink_family(components: int) -> SeifertFamily:
    """n disjoint disks: no homology, signature identically zero.

    The complex is disconnected for n > 1, so the (empty) form's kernel does
    not compute the link's nullity; basis stays False.
    """
    return SeifertFamily(1, {(1,): [], (-1,): []}, basis=False,
                         label=f"unlink({components})")


def hopf_seifert_family(m: int, n: int) -> SeifertFamily:
    """The bicolored Seifert family of the standard C-complex of H_{m,n}.

    Generators alpha_{ij} are indexed by Z/m x Z/n (one per clasp); for a
    shift direction (eps, dlt) the form takes the value -eps*dlt on
    (alpha_ij, alpha_ij) and on (alpha_ij, alpha_{i-eps,j+dlt}), and +eps*dlt
    on (alpha_ij, alpha_{i-eps,j}) and (alpha_ij, alpha_{i,j+dlt}).  For
    m or n in {1, 2} the cyclic indices collide and the contributions add up;
    at m = n = 1 everything cancels to the zero 1x1 form.
    """
    if m < 1 or n < 1:
        raise ValueError("need at least one copy on each side")
    g = m * n

    def index(i: int, j: int) -> int:
        return (i % m) * n + (j % n)

    forms = {}
    for eps in (1, -1):
        for dlt in (1, -1):
            mat = [[0] * g for _ in range(g)]
            for i in range(m):
                for j in range(n):
                    row = mat[index(i, j)]
                    row[index(i, j)] += -eps * dlt
                    row[index(i - eps, j)] += eps * dlt
                    row[index(i, j + dlt)] += eps * dlt
                    row[index(i - eps, j + dlt)] += -eps * dlt
            forms[(eps, dlt)] = mat
    return SeifertFamily(
        2, forms, basis=False,
        boundary={(0,): unlink_family(m), (1,): unlink_family(n)},
        linking=[[0, m * n], [m * n, 0]],
        label=f"hopf_family({m},{n})")


def _lambda_factor(x: Angle, y: Angle) -> float:
    """lambda(x, y) = i(1 - conj x)(1 - conj y)(1 - xy); real for |x|=|y|=1."""
    zx, zy = x.to_complex(), y.to_complex()
    return (1j * (1 - zx.conjugate()) * (1 - zy.conjugate()) * (1 - zx * zy)).real


def hopf_spectrum(m: int, n: int, eta: Angle, zeta: Angle) -> List[float]:
    """Eigenvalues of the assembled bicolored form at (eta, ..., zeta, ...).

    The mn eigenvalues are the products lambda(eta, xi_m^i) *
    lambda(zeta, conj(xi_n^j)) over i in Z/m, j in Z/n, with xi_k the
    primitive k-th root of unity.  Returned ascending.
    """
    if eta.is_unit() or zeta.is_unit():
        raise BoundaryCharacter("spectrum closed form holds on the open torus only")
    vals = []
    for i in range(m):
        for j in range(n):
            vals.append(_lambda_factor(eta, Angle(Fraction(i, m)))
                        * _lambda_factor(zeta, Angle(Fraction(-j, n))))
    vals.sort()
    return vals
