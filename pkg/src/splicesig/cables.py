"""Torus-link base signatures, the cabling step, and the univariate reduction.

Cabling a component (replace it by d parallel (p,q)-curves on the boundary of
its tube) is a splice with the link V u dU(p,q): the d curves together with
the axis V of the complementary solid torus.  The splice calculus then gives

    sigma_L(w', w'') = f'(u'', w') + storus(u', w'') + defect_l'(w') * defect_l''(w'')

with l'' = (p, ..., p).  The catch is storus: no closed form is known for the
signature of V u dU(p,q) at an arbitrary multivariate character, so the base
evaluator is an explicit argument.  Built-in bases cover the degenerate
patterns (p*q = 0, where the link is a generalized Hopf link or an unlink)
and the d = 1 evaluation at axis character 1, where the classical lattice
point count of Hirzebruch applies.  Everything else must be supplied, e.g.
as a SeifertFamily fixture.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Mapping, NamedTuple, Optional, Sequence, Tuple

from .errors import GuardViolated, InvalidParams, MissingBaseEvaluator
from .hopf import HopfSpec, hopf_signature
from .splice import FULL_TORUS, DistinguishedSigFn, SigFn, splice
from .torus import Angle, Character, ind

TildeEvaluator = Callable[[Angle, Angle], int]


class CableParams(NamedTuple):
    """A (dp, dq)-cabling: d parallel (p,q)-curves, core removed or retained."""

    p: int
    q: int
    d: int
    core_kept: bool = False

    @classmethod
    def make(cls, p: int, q: int, d: int, core_kept: bool = False) -> "CableParams":
        p, q, d = int(p), int(q), int(d)
        if d < 1:
            raise InvalidParams(f"need at least one cable copy, got d={d}")
        if math.gcd(p, q) != 1:
            # covers (0, 0) and also forces |p| = 1 or |q| = 1 when the other is 0
            raise InvalidParams(f"(p, q) = ({p}, {q}) are not coprime")
        return cls(p, q, d, bool(core_kept))


def hirzebruch(p: int, q: int, zeta: Angle) -> int:
    """Levine-Tristram signature of the (p,q)-torus link U(p,q), p, q > 0 coprime.

    Lattice point count: over M = {1..p-1} x {1..q-1}, with theta = Log(zeta),

        a = #{(i,j) : theta < i/p + j/q < theta + 1},
        b = #{(i,j) : i/p + j/q outside [theta, theta+1]},

    and the signature is b - a.  Sums hitting theta or theta + 1 exactly
    count toward neither (they contribute to the nullity instead).  The count
    is stated for theta in (0, 1/2]; for theta in (1/2, 1) the value at the
    conjugate angle is the same, so we reflect.  All comparisons are exact
    rational arithmetic.
    """
    if p < 1 or q < 1 or math.gcd(p, q) != 1:
        raise InvalidParams(f"need coprime positive (p, q), got ({p}, {q})")
    if zeta.is_unit():
        raise InvalidParams("torus-link signature count needs zeta != 1")
    theta = zeta.value
    if theta > Fraction(1, 2):
        theta = 1 - theta
    a = b = 0
    for i in range(1, p):
        for j in range(1, q):
            s = Fraction(i, p) + Fraction(j, q)
            if s == theta or s == theta + 1:
                continue  # tie: neither side
            if theta < s < theta + 1:
                a += 1
            else:
                b += 1
    return b - a


# ---------------------------------------------------------------------------
# built-in base evaluators for V u dU(p,q)
# ---------------------------------------------------------------------------

def _hopf_base(params: CableParams) -> SigFn:
    """Base evaluator when p*q = 0: the cable pattern degenerates.

    With q = 0 the copies are longitudes, with p = 0 they are meridians; in
    both cases every pair of components either bounds disjointly or forms a
    Hopf pair, so V u [U u] dU(p,q) is a generalized Hopf link (or an unlink)
    and the closed form applies.  Component order of the evaluator: axis V,
    then the retained core if any, then the d copies.
    """
    p, q, d, kept = params
    if p == 0:
        # copies are meridians of the core: lk(V, copy) = 0, lk(copy, copy') = 0
        if not kept:
            # V and d meridians are pairwise unlinked
            return SigFn(1 + d, lambda omega: 0, domain=FULL_TORUS,
                         label=f"unlink(1+{d})")
        # V and the copies each form a Hopf pair with the core U
        spec = HopfSpec.make(1 + d, 1, nu=(1,) + (q,) * d)

        def fn_meridians(omega: Character) -> int:
            side = (omega[0],) + omega[2:]
            return hopf_signature(spec, side, (omega[1],))

        return SigFn(2 + d, fn_meridians, domain=FULL_TORUS,
                     label=f"hopf_base(1+{d},1)")
    # q = 0: copies are longitudes; they and the retained core (if any) are
    # pairwise unlinked and each forms a Hopf pair with the axis V
    side = d + (1 if kept else 0)
    spec = HopfSpec.make(side, 1, nu=((1,) if kept else ()) + (p,) * d)

    def fn_longitudes(omega: Character) -> int:
        return hopf_signature(spec, omega[1:], (omega[0],))

    return SigFn(1 + side, fn_longitudes, domain=FULL_TORUS,
                 label=f"hopf_base({side},1)")


def _hirzebruch_base(params: CableParams) -> SigFn:
    """Base evaluator for d = 1, valid only at axis character 1.

    At axis character 1 the axis color drops and what is left is the
    Levine-Tristram signature of the (p,q)-torus knot, given by the lattice
    count.  Negative p or q mirrors the knot and flips the sign; evaluation
    at any other axis character raises MissingBaseEvaluator.
    """
    p, q = params.p, params.q

    def fn(omega: Character) -> int:
        axis, u = omega
        if not axis.is_unit():
            raise MissingBaseEvaluator(
                f"built-in d=1 torus base for ({p},{q}) covers axis character 1 "
                "only; supply a SeifertFamily evaluator for other characters")
        if u.is_unit():
            return 0
        sign = 1 if p * q > 0 else -1
        return sign * hirzebruch(abs(p), abs(q), u)

    return SigFn(2, fn, domain="axis character 1 only", label=f"torus({p},{q})")


def default_torus_base(params: CableParams) -> SigFn:
    """Pick a built-in base evaluator for V u [U u] dU(p,q), if one exists."""
    if params.p == 0 or params.q == 0:
        return _hopf_base(params)
    if params.d == 1 and not params.core_kept:
        return _hirzebruch_base(params)
    raise MissingBaseEvaluator(
        f"no built-in signature for the cable pattern d={params.d}, "
        f"(p,q)=({params.p},{params.q}), core_kept={params.core_kept}; "
        "supply a base evaluator (e.g. from a SeifertFamily)")


def cable_step(f: DistinguishedSigFn, params: CableParams,
               storus: Optional[SigFn] = None) -> SigFn:
    """Replace the distinguished component of f by a (dp, dq)-cable.

    Splices f with the base link V u dU(p,q) (axis first, then the copies);
    with core_kept the retained core sits between them and the base link is
    V u U u dU(p,q).  The resulting evaluator takes (w', w'') where w' are
    the surviving colors of f and w'' the new colors, and raises
    GuardViolated when both raised characters equal 1.  linking vector of
    the base: lk(V, copy) = p, and lk(V, U) = 1 when the core is kept.
    """
    if not isinstance(f, DistinguishedSigFn):
        raise TypeError("cable_step needs a distinguished component to cable")
    params = CableParams.make(*params)
    if storus is None:
        storus = default_torus_base(params)
    lam2 = ((1,) + (params.p,) * params.d) if params.core_kept \
        else (params.p,) * params.d
    if storus.arity != 1 + len(lam2):
        raise MissingBaseEvaluator(
            f"base evaluator has arity {storus.arity}, cable pattern needs "
            f"{1 + len(lam2)} (axis + {len(lam2)} colors)")
    base = DistinguishedSigFn(storus.arity, storus.fn, linking=lam2,
                              domain=storus.domain,
                              label=storus.label or "torus base")
    out = splice(f, base)
    out.label = (f"cable({f.label or '?'}, {params.d}x({params.p},{params.q})"
                 f"{', core kept' if params.core_kept else ''})")
    return out


def tilde_from_multi(sigma_multi: int, d: int, p: int, q: int) -> int:
    """Reduced torus signature from the multivariate value at (v, u, ..., u).

    The d cable colors of V u dU(p,q) merged to one color subtract the total
    linking among the copies: d(d-1)/2 pairs of lk = pq each.
    """
    return sigma_multi - d * (d - 1) * p * q // 2


# ---------------------------------------------------------------------------
# multivariate -> univariate reduction
# ---------------------------------------------------------------------------

class UnivariateReductionInput(NamedTuple):
    """Data for evaluating a multivariate signature through a monochrome link.

    The character is w_i = xi^{n_i} with xi = exp(2*pi*i/n); the auxiliary
    monochrome link is built by (n_i, n_i*p_i)-cabling each component.
    linking is the full linking matrix of the colored link, zero diagonal.
    """

    n: int
    ni: Tuple[int, ...]
    p: Tuple[int, ...]
    linking: Tuple[Tuple[int, ...], ...]

    @classmethod
    def make(cls, n: int, ni: Sequence[int], p: Sequence[int],
             linking: Sequence[Sequence[int]]) -> "UnivariateReductionInput":
        n = int(n)
        ni = tuple(int(x) for x in ni)
        p = tuple(int(x) for x in p)
        lam = tuple(tuple(int(x) for x in row) for row in linking)
        if n < 1:
            raise InvalidParams(f"root order must be positive, got {n}")
        mu = len(ni)
        if any(not 0 < x < n for x in ni):
            raise InvalidParams(f"exponents must satisfy 0 < n_i < n, got {ni}")
        if len(p) != mu:
            raise InvalidParams(f"p has length {len(p)}, expected {mu}")
        if len(lam) != mu or any(len(row) != mu for row in lam):
            raise InvalidParams(f"linking matrix must be {mu}x{mu}")
        for i in range(mu):
            if lam[i][i] != 0:
                raise InvalidParams("linking matrix must have zero diagonal")
            for j in range(mu):
                if lam[i][j] != lam[j][i]:
                    raise InvalidParams("linking matrix must be symmetric")
        return cls(n, ni, p, lam)

    @property
    def mu(self) -> int:
        return len(self.ni)

    def xi(self) -> Angle:
        return Angle(Fraction(1, self.n))

    def omega(self) -> Character:
        """The multivariate character (xi^{n_1}, ..., xi^{n_mu})."""
        return tuple(Angle(Fraction(k, self.n)) for k in self.ni)


def weighted_linking(inp: UnivariateReductionInput, i: int) -> int:
    """Weighted linking number of color i: sum_j n_j * lambda_{ij}."""
    row = inp.linking[i]
    return sum(nj * lij for nj, lij in zip(inp.ni, row))


def univariate_reduction(inp: UnivariateReductionInput, sigma_lbar: int,
                         tilde: Optional[Mapping[int, TildeEvaluator]] = None) -> int:
    """Multivariate signature at omega from the monochrome signature at xi.

        sigma_L(w) = sigma_Lbar(xi) - sum_i tilde_storus_{n_i, n_i p_i}(u_i, xi)
                     + sum_i (n_i - 1) ind(lw_i / n) + sum_{i<j} lambda_{ij}

    with lw_i the weighted linking numbers and u_i = xi^{lw_i}.  The torus
    correction for color i is only needed when p_i != 0 (otherwise the cable
    pattern is a generalized Hopf link with vanishing signature), so with
    p = 0 no tilde evaluators are required at all.  tilde maps a color index
    to a callable (u_i, xi) -> int.
    """
    mu = inp.mu
    n = inp.n
    xi = inp.xi()
    total = int(sigma_lbar)
    for i in range(mu):
        lw = weighted_linking(inp, i)
        if inp.p[i] != 0:
            evaluator = None if tilde is None else tilde.get(i)
            if evaluator is None:
                raise MissingBaseEvaluator(
                    f"color {i} has p_i = {inp.p[i]} != 0; a reduced torus "
                    f"signature evaluator for ({inp.ni[i]}, {inp.ni[i] * inp.p[i]}) "
                    "is required")
            upsilon = Angle(Fraction(lw, n))
            total -= evaluator(upsilon, xi)
        total += (inp.ni[i] - 1) * ind(Fraction(lw, n))
    total += sum(inp.linking[i][j] for i in range(mu) for j in range(i + 1, mu))
    return total
