"""Local invariants of a singular point.

The local model at [1:0:0] is the pair f = Q(1,y,z) - y P(1,y,z),
g = R(1,y,z) - z P(1,y,z).  The two invariants computed here are the
multiplicity (order of the lowest nonzero forms) and the Milnor number,
i.e. the intersection multiplicity I_0(f, g) of the two curve germs at
the origin.

I_0 is computed by the classical axiomatic reduction: strip off factors
of z when a restriction to z = 0 vanishes, otherwise cancel leading
coefficients of the restrictions against each other.  Termination is by
strict decrease of the restricted degree; the infinite case (common
factor through the origin) is detected up-front with an exact gcd.

A small Buchberger engine doubles as an independent oracle: the local
multiplicity equals the number of standard monomials of the ideal
(f, g) + m^N for N past the local socle degree, which cuts away every
component of V(f, g) not through the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import NotIsolatedError, NotSingularError, OracleBudgetError
from .foliation import (ProjPoint, VectorField, dual_form, frame_to_point,
                        is_singular_at, local_representation,
                        move_point_to_origin_chart)
from .poly import (MINUS_INFINITY, MPoly, divide_exact, gcd_bivariate,
                   gcd_multivariate, order_of_vanishing)


class _Infinite:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinite"


INFINITE = _Infinite()


@dataclass(frozen=True)
class LocalPair:
    """Pair (f, g) of 2-variable polynomials in (y, z); not both zero."""

    f: MPoly
    g: MPoly

    def __post_init__(self):
        if self.f.nvars != 2 or self.g.nvars != 2:
            raise ValueError("local pair lives in two variables")
        if self.f.is_zero() and self.g.is_zero():
            raise ValueError("local pair must not be identically zero")


@dataclass(frozen=True)
class SingularityReport:
    point: ProjPoint
    multiplicity: int
    milnor: object  # int or INFINITE
    unique: bool
    degree: int


# ---------------------------------------------------------------------------
# multiplicity and intersection index
# ---------------------------------------------------------------------------


def multiplicity_at_origin(pair: LocalPair) -> int:
    """min of the total vanishing orders of f and g at the origin."""
    orders = []
    for c in (pair.f, pair.g):
        o = order_of_vanishing(c)
        if o is not MINUS_INFINITY:
            if o == 0:
                raise NotSingularError("the local pair does not vanish at the origin")
            orders.append(o)
    return min(orders)


def _restrict_z0(p: MPoly) -> Dict[int, Fraction]:
    """Coefficients of p(y, 0) keyed by y-exponent."""
    return {e[0]: c for e, c in p.terms.items() if e[1] == 0}


def _primitive(p: MPoly) -> MPoly:
    """Scale to coprime integer coefficients (controls growth in the
    reduction loops; scaling by a nonzero constant never changes I_0)."""
    if p.is_zero():
        return p
    from math import gcd, lcm

    den = lcm(*(c.denominator for c in p.terms.values())) \
        if len(p.terms) > 1 else next(iter(p.terms.values())).denominator
    num = 0
    for c in p.terms.values():
        num = gcd(num, abs(c.numerator * (den // c.denominator)))
    return p * Fraction(den, num)


def intersection_index_origin(pair: LocalPair):
    """Local intersection multiplicity I_0(f, g); INFINITE when the curves
    share a branch through the origin, 0 when one misses the origin."""
    f, g = pair.f, pair.g
    if f.coefficient((0, 0)) != 0 or g.coefficient((0, 0)) != 0:
        return 0
    if f.is_zero() or g.is_zero():
        return INFINITE
    d = gcd_bivariate(f, g)
    if d.coefficient((0, 0)) == 0:
        return INFINITE
    return _fulton(f, g)


def _fulton(f: MPoly, g: MPoly) -> int:
    """Recursive reduction; the gcd of the arguments never vanishes at 0."""
    z = MPoly.variable(2, 1)
    y = MPoly.variable(2, 0)
    total = 0
    f = _primitive(f)
    g = _primitive(g)
    while True:
        if f.coefficient((0, 0)) != 0 or g.coefficient((0, 0)) != 0:
            return total
        fy = _restrict_z0(f)
        gy = _restrict_z0(g)
        r = max(fy) if fy else None
        s = max(gy) if gy else None
        if s is None or (r is not None and r > s):
            f, g = g, f
            fy, gy, r, s = gy, fy, s, r
        if r is None:
            # z divides f; I(z, g) is the y-order of g(y, 0)
            total += min(gy)
            f = _primitive(divide_exact(f, z))
            continue
        a = gy[s] / fy[r]
        g = _primitive(g - f * (y ** (s - r)) * a)


def milnor_at_point(x: VectorField, p: ProjPoint):
    """Milnor number at a singular point, by moving it to [1:0:0]."""
    if not is_singular_at(x, p):
        raise NotSingularError(f"{p} is not a singular point")
    _, moved = move_point_to_origin_chart(x, p)
    return intersection_index_origin(local_representation(moved))


def multiplicity_at_point(x: VectorField, p: ProjPoint) -> int:
    if not is_singular_at(x, p):
        raise NotSingularError(f"{p} is not a singular point")
    _, moved = move_point_to_origin_chart(x, p)
    return multiplicity_at_origin(local_representation(moved))


def has_isolated_singularities(x: VectorField) -> bool:
    """True when the dual-form components share no factor.

    A common homogeneous factor either is a power of x, visible on the
    x-exponents directly, or survives dehomogenization into the chart
    x = 1, where a fast bivariate gcd decides.
    """
    from .poly import MINUS_INFINITY as MI
    from .poly import dehomogenize, order_of_vanishing

    comps = [q for q in dual_form(x) if not q.is_zero()]
    if not comps:
        return False
    if all(order_of_vanishing(q, 0) >= 1 for q in comps):
        return False  # x divides every component
    charts = [dehomogenize(q, 0) for q in comps]
    g = charts[0]
    for q in charts[1:]:
        g = gcd_bivariate(g, q)
        if g.degree == 0:
            return True
    return g.degree == 0


def unique_singularity_certificate(x: VectorField, p: ProjPoint) -> bool:
    """True exactly when the Milnor number at p accounts for the whole
    budget d^2 + d + 1, which forces Sing(X) = {p}."""
    if not has_isolated_singularities(x):
        raise NotIsolatedError("the singular locus is not isolated")
    mu = milnor_at_point(x, p)
    d = x.degree
    return mu is not INFINITE and mu == d * d + d + 1


def singularity_report(x: VectorField, p: ProjPoint) -> SingularityReport:
    if not has_isolated_singularities(x):
        raise NotIsolatedError("the singular locus is not isolated")
    if not is_singular_at(x, p):
        raise NotSingularError(f"{p} is not a singular point")
    _, moved = move_point_to_origin_chart(x, p)
    pair = local_representation(moved)
    mu = intersection_index_origin(pair)
    m = multiplicity_at_origin(pair)
    d = x.degree
    unique = mu is not INFINITE and mu == d * d + d + 1
    return SingularityReport(point=p, multiplicity=m, milnor=mu,
                             unique=unique, degree=d)


# ---------------------------------------------------------------------------
# Buchberger oracle (test oracle, not a public Groebner API)
# ---------------------------------------------------------------------------
#
# Plain lex Buchberger over Q, small scale.  Monomials compare by their
# exponent tuples (first variable largest), which is lex order.


def _lm(p: MPoly) -> Tuple[int, ...]:
    return max(p.terms)


def _normal_form(p: MPoly, basis: Sequence[MPoly], steps: List[int],
                 budget: int) -> MPoly:
    rem = MPoly.zero(p.nvars)
    while not p.is_zero():
        steps[0] += 1
        if steps[0] > budget:
            raise OracleBudgetError("groebner reduction budget exhausted")
        e = _lm(p)
        c = p.terms[e]
        for b in basis:
            be = _lm(b)
            if all(a >= k for a, k in zip(e, be)):
                q = tuple(a - k for a, k in zip(e, be))
                p = p - b * MPoly.monomial(p.nvars, q, c / b.terms[be])
                break
        else:
            t = MPoly.monomial(p.nvars, e, c)
            rem = rem + t
            p = p - t
    return rem


def _s_poly(f: MPoly, g: MPoly) -> MPoly:
    fe, ge = _lm(f), _lm(g)
    lcm = tuple(max(a, b) for a, b in zip(fe, ge))
    tf = MPoly.monomial(f.nvars, tuple(a - b for a, b in zip(lcm, fe)),
                        1 / f.terms[fe])
    tg = MPoly.monomial(g.nvars, tuple(a - b for a, b in zip(lcm, ge)),
                        1 / g.terms[ge])
    return f * tf - g * tg


def groebner_basis(gens: Sequence[MPoly], budget: int = 200000) -> List[MPoly]:
    """Reduced monic lex Groebner basis of the ideal generated by gens."""
    basis = [p for p in gens if not p.is_zero()]
    if not basis:
        return []
    steps = [0]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop(0)
        fe, ge = _lm(basis[i]), _lm(basis[j])
        if all(a == 0 or b == 0 for a, b in zip(fe, ge)):
            continue  # coprime leading monomials reduce to zero
        s = _normal_form(_s_poly(basis[i], basis[j]), basis, steps, budget)
        if not s.is_zero():
            basis.append(s)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    # minimalize: drop elements whose lead is divisible by another lead
    minimal: List[MPoly] = []
    for p in sorted(basis, key=_lm):
        e = _lm(p)
        if not any(all(a >= k for a, k in zip(e, _lm(q))) for q in minimal):
            minimal.append(p)
    # inter-reduce and normalize to monic
    reduced: List[MPoly] = []
    for idx, p in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        q = _normal_form(p, others, steps, budget)
        reduced.append(q / q.terms[_lm(q)])
    reduced.sort(key=_lm)
    return reduced


def oracle_groebner_basis(pair: LocalPair, budget: int = 200000) -> List[MPoly]:
    return groebner_basis([pair.f, pair.g], budget)


def buchberger_oracle(pair: LocalPair, budget: int = 400000):
    """Independent computation of I_0(f, g).

    Works with the ideal (f, g) + m^N for N one past the product of the
    degrees: every component of V(f, g) away from the origin becomes the
    unit ideal there, and m^N is already inside the origin component, so
    the count of standard monomials is exactly the local multiplicity.
    """
    f, g = pair.f, pair.g
    if f.coefficient((0, 0)) != 0 or g.coefficient((0, 0)) != 0:
        return 0
    if f.is_zero() or g.is_zero():
        return INFINITE
    d = gcd_bivariate(f, g)
    if d.coefficient((0, 0)) == 0:
        return INFINITE
    n = f.degree * g.degree + 1
    gens = [f, g]
    gens.extend(MPoly.monomial(2, (n - k, k)) for k in range(n + 1))
    basis = groebner_basis(gens, budget)
    leads = [_lm(p) for p in basis]
    count = 0
    for a in range(n + 1):
        for b in range(n + 1 - a):
            if not any(a >= e[0] and b >= e[1] for e in leads):
                count += 1
    return count
