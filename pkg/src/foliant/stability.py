"""Torus weights, convex-hull tests and the stability classifier.

Coordinates of a z-reduced degree-d field are indexed by monomial
fields x^a y^b z^c d/dx_i; the diagonal torus acts on each with
character e_i - a e_0 - b e_1 - c e_2, taken modulo the diagonal.  A
one-parameter subgroup diag(t^r0, t^r1, t^r2), r0 + r1 + r2 = 0, drives
a coordinate to zero as t -> 0 exactly when the pairing of its weight
with r is positive, so a frame witnesses instability when all support
weights pair strictly positively with one r.  In the plane obtained by
projecting classes through (w0 - w2, w1 - w2), that is: the origin lies
strictly outside the convex hull of the support.

The converse quantifies over every frame and is not decidable here;
Stable and StrictlySemistable verdicts are only ever issued by the
normal-form matchers, and Unknown is an honest outcome.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import families, linalg
from .errors import (NotIsolatedError, NotSingularError,
                     UnsupportedDegreeError)
from .foliation import (E0, E1, E2, Foliation, Frame, ProjPoint, VectorField,
                        act, frame_to_point, is_singular_at,
                        local_representation, move_point_to_origin_chart,
                        z_reduce)
from .localgeom import (INFINITE, has_isolated_singularities, milnor_at_point,
                        multiplicity_at_origin, singularity_report)
from .poly import MINUS_INFINITY, MPoly, divide_exact, format_poly

# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class WeightVector:
    """Torus character modulo the diagonal; stored with min entry 0."""

    w: Tuple[int, int, int]

    def __post_init__(self):
        lo = min(self.w)
        object.__setattr__(self, "w", tuple(int(v - lo) for v in self.w))

    def projection(self) -> Tuple[int, int]:
        return (self.w[0] - self.w[2], self.w[1] - self.w[2])

    def is_zero(self) -> bool:
        return self.w == (0, 0, 0)


@dataclass(frozen=True)
class OneParamSubgroup:
    """diag(t^r0, t^r1, t^r2) with r0 + r1 + r2 = 0, entries coprime."""

    r: Tuple[int, int, int]

    def __post_init__(self):
        r = tuple(int(v) for v in self.r)
        if sum(r) != 0:
            raise ValueError("one-parameter subgroup entries must sum to zero")
        if r == (0, 0, 0):
            raise ValueError("trivial one-parameter subgroup")
        g = gcd(gcd(abs(r[0]), abs(r[1])), abs(r[2]))
        object.__setattr__(self, "r", tuple(v // g for v in r))

    def pairing(self, w: WeightVector) -> int:
        return sum(a * b for a, b in zip(w.w, self.r))


def _mono_label(exps: Tuple[int, int, int], comp: int) -> str:
    names = ("x", "y", "z")
    factors = []
    for n, k in zip(names, exps):
        if k == 1:
            factors.append(n)
        elif k > 1:
            factors.append(f"{n}^{k}")
    body = "*".join(factors) if factors else "1"
    return f"{body} d/d{'xyz'[comp]}"


def weight_of_monomial(exps: Sequence[int], comp: int) -> WeightVector:
    """Weight of x^a y^b z^c d/dx_comp: e_comp - a e_0 - b e_1 - c e_2."""
    w = [-int(k) for k in exps]
    w[comp] += 1
    return WeightVector(tuple(w))


@dataclass(frozen=True)
class WeightSupport:
    """Weight classes of the nonzero z-reduced coordinates, with the
    monomials carrying each class (for dumps and diagrams)."""

    entries: Tuple[Tuple[WeightVector, Tuple[str, ...]], ...]

    @property
    def classes(self) -> Tuple[WeightVector, ...]:
        return tuple(w for w, _ in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def weight_support(fol: Foliation) -> WeightSupport:
    by_class: Dict[WeightVector, List[str]] = {}
    for exps, comp, _ in fol.coordinates():
        w = weight_of_monomial(exps, comp)
        by_class.setdefault(w, []).append(_mono_label(exps, comp))
    entries = tuple(sorted((w, tuple(sorted(ms))) for w, ms in by_class.items()))
    return WeightSupport(entries)


def mu_pairing(support: WeightSupport, lam: OneParamSubgroup) -> int:
    """min over support weights of the pairing with lam; a frame is
    destabilized by lam exactly when this is > 0."""
    if not support.entries:
        raise ValueError("empty weight support")
    return min(lam.pairing(w) for w in support.classes)


# ---------------------------------------------------------------------------
# exact 2-D hull position
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HullPosition:
    kind: str  # "outside", "boundary", "interior"
    separating: Optional[OneParamSubgroup] = None


def _functional_from_plane(n: Tuple[int, int]) -> OneParamSubgroup:
    return OneParamSubgroup((n[0], n[1], -n[0] - n[1]))


def hull_position(support: WeightSupport) -> HullPosition:
    """Exact position of the origin relative to the convex hull of the
    projected support.

    A strict separating functional exists iff the origin is outside; it
    is found among the point vectors themselves and the normals of point
    pairs (the nearest-point argument), all integer-exact.
    """
    pts = sorted({w.projection() for w in support.classes})
    if not pts:
        raise ValueError("empty weight support")
    if pts == [(0, 0)]:
        return HullPosition("boundary")
    cands: List[Tuple[int, int]] = []
    seen = set()

    def add(n: Tuple[int, int]):
        if n != (0, 0) and n not in seen:
            seen.add(n)
            cands.append(n)

    for p in pts:
        add(p)
    for i, u in enumerate(pts):
        for v in pts[i + 1:]:
            d = (v[0] - u[0], v[1] - u[1])
            add((-d[1], d[0]))
            add((d[1], -d[0]))
    cands.sort()
    for n in cands:
        if all(n[0] * p[0] + n[1] * p[1] > 0 for p in pts):
            return HullPosition("outside", _functional_from_plane(n))
    for n in cands:
        if all(n[0] * p[0] + n[1] * p[1] >= 0 for p in pts):
            return HullPosition("boundary")
    return HullPosition("interior")


# ---------------------------------------------------------------------------
# the three unstable coordinate subspaces in degree 3
# ---------------------------------------------------------------------------

_V1 = (
    ((1, 2, 0), 0), ((1, 1, 1), 0), ((1, 0, 2), 0), ((0, 3, 0), 0),
    ((0, 2, 1), 0), ((0, 1, 2), 0), ((0, 0, 3), 0),
    ((1, 0, 2), 1), ((0, 3, 0), 1), ((0, 2, 1), 1), ((0, 1, 2), 1),
    ((0, 0, 3), 1),
    ((0, 3, 0), 2),
)
_V2 = (
    ((2, 0, 1), 0), ((1, 1, 1), 0), ((1, 0, 2), 0), ((0, 2, 1), 0),
    ((0, 1, 2), 0), ((0, 0, 3), 0),
    ((2, 0, 1), 1), ((1, 0, 2), 1), ((1, 1, 1), 1), ((0, 2, 1), 1),
    ((0, 1, 2), 1), ((0, 0, 3), 1),
)
_V3 = (
    ((2, 0, 1), 0), ((1, 1, 1), 0), ((1, 0, 2), 0), ((0, 3, 0), 0),
    ((0, 2, 1), 0), ((0, 1, 2), 0), ((0, 0, 3), 0),
    ((1, 0, 2), 1), ((1, 1, 1), 1), ((0, 2, 1), 1), ((0, 1, 2), 1),
    ((0, 0, 3), 1),
)

V_SPANS: Dict[str, Tuple[Tuple[Tuple[int, int, int], int], ...]] = {
    "V1": _V1, "V2": _V2, "V3": _V3,
}


def v_membership(fol: Foliation) -> Optional[str]:
    """First of V1, V2, V3 whose monomial span contains every nonzero
    coordinate of the representative, or None."""
    if fol.degree != 3:
        raise UnsupportedDegreeError("the V components are defined in degree 3")
    coords = {(e, i) for e, i, _ in fol.coordinates()}
    for name in ("V1", "V2", "V3"):
        if coords <= set(V_SPANS[name]):
            return name
    return None


def v_span_support(name: str) -> WeightSupport:
    by_class: Dict[WeightVector, List[str]] = {}
    for exps, comp in V_SPANS[name]:
        w = weight_of_monomial(exps, comp)
        by_class.setdefault(w, []).append(_mono_label(exps, comp))
    return WeightSupport(tuple(sorted((w, tuple(sorted(ms)))
                                      for w, ms in by_class.items())))


# ---------------------------------------------------------------------------
# destabilizing frame search
# ---------------------------------------------------------------------------

_PERMS = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))


def _rational_roots(coeffs: List[Fraction]) -> List[Fraction]:
    """Rational roots of sum coeffs[k] u^k, each listed once."""
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return []
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    shift = 0
    while ints[shift] == 0:
        shift += 1
    ints = ints[shift:]
    roots = [Fraction(0)] if shift else []
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(n: int) -> List[int]:
        out = [d for d in range(1, abs(n) + 1) if n % d == 0]
        return out

    for p in divisors(a0):
        for q in divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                if sum(c * cand ** k for k, c in enumerate(ints)) == 0:
                    roots.append(cand)
    return roots


def rational_linear_factors(form: MPoly) -> List[Tuple[Fraction, Fraction]]:
    """Rational lines (alpha, beta) with alpha*y + beta*z dividing the
    homogeneous binary form, each listed once."""
    if form.nvars != 2 or form.is_zero():
        return []
    n = form.degree
    lines: List[Tuple[Fraction, Fraction]] = []
    if form.coefficient((n, 0)) == 0:
        lines.append((Fraction(0), Fraction(1)))  # z divides
    if form.coefficient((0, n)) == 0:
        lines.append((Fraction(1), Fraction(0)))  # y divides
    # remaining lines vanish at points [1 : r]; r runs over the rational
    # roots of form(1, u)
    coeffs = [form.coefficient((n - k, k)) for k in range(n + 1)]
    for r in _rational_roots(coeffs):
        lines.append((-r, Fraction(1)))
    dedup: List[Tuple[Fraction, Fraction]] = []
    for a, b in lines:
        lead = a if a != 0 else b
        key = (a / lead, b / lead)
        if key not in dedup:
            dedup.append(key)
    return dedup


def _line_to_z_frame(alpha: Fraction, beta: Fraction) -> Frame:
    """Frame fixing [1:0:0] and sending the plane line
    {alpha y + beta z = 0} to {z = 0}."""
    v = (Fraction(0), beta, -alpha)       # a point spanning the line with e0
    u = (Fraction(0), alpha, beta)        # independent completion
    m = linalg.from_columns([
        (Fraction(1), Fraction(0), Fraction(0)), v, u])
    return Frame(linalg.inverse(m))


def _structured_frames(x: VectorField, points: Sequence[ProjPoint]) -> List[Frame]:
    """Deterministic trial list: identity, singular-point moves,
    permutations, then flag alignments built from the rational lines of
    the lowest local forms at each known singular point."""
    frames: List[Frame] = [Frame.identity()]
    moves: List[Frame] = []
    for p in points:
        base = frame_to_point(p).inverse()
        for target in range(3):
            if target == 0:
                moves.append(base)
            else:
                perm = [0, 1, 2]
                perm[0], perm[target] = perm[target], perm[0]
                moves.append(Frame.permutation(perm).compose(base))
    frames.extend(moves)
    frames.extend(Frame.permutation(p) for p in _PERMS[1:])
    for p in points:
        base = frame_to_point(p).inverse()
        moved = act(base, x)
        pair = local_representation(moved)
        lines: List[Tuple[Fraction, Fraction]] = []
        for h in (pair.f, pair.g):
            o = None if h.is_zero() else min(sum(e) for e in h.terms)
            if o is None:
                continue
            lowest = h.homogeneous_part(o)
            for line in rational_linear_factors(lowest):
                if line not in lines:
                    lines.append(line)
        for a, b in ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))):
            if (a, b) not in lines:
                lines.append((a, b))
        for a, b in lines:
            k = _line_to_z_frame(a, b).compose(base)
            for perm in _PERMS:
                frames.append(Frame.permutation(perm).compose(k))
    return frames


_UNIPOTENT_POOL = (Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(1, 2),
                   Fraction(1), Fraction(2))


def _random_frame(rng: random.Random, points: Sequence[ProjPoint]) -> Frame:
    a, b, c = (rng.choice(_UNIPOTENT_POOL) for _ in range(3))
    if rng.random() < 0.5:
        m = linalg.mat([[1, a, b], [0, 1, c], [0, 0, 1]])
    else:
        m = linalg.mat([[1, 0, 0], [a, 1, 0], [b, c, 1]])
    f = Frame(m).compose(Frame.permutation(rng.choice(_PERMS)))
    if points and rng.random() < 0.5:
        f = f.compose(frame_to_point(rng.choice(list(points))).inverse())
    return f


@dataclass
class SearchStats:
    frames_tested: int = 0
    boundary: int = 0
    interior: int = 0


def _search(x: VectorField, budget: int, seed: int,
            points: Optional[Sequence[ProjPoint]]):
    if points is None:
        points = [p for p in (E0, E1, E2) if is_singular_at(x, p)]
    stats = SearchStats()

    def trial(frame: Frame):
        stats.frames_tested += 1
        fol = z_reduce(act(frame, x))
        pos = hull_position(weight_support(fol))
        if pos.kind == "outside":
            return frame, pos.separating
        if pos.kind == "boundary":
            stats.boundary += 1
        else:
            stats.interior += 1
        return None

    for frame in _structured_frames(x, points):
        if stats.frames_tested >= budget:
            return None, stats
        hit = trial(frame)
        if hit:
            return hit, stats
    rng = random.Random(seed)
    while stats.frames_tested < budget:
        hit = trial(_random_frame(rng, points))
        if hit:
            return hit, stats
    return None, stats


def search_destabilizing_frame(x: VectorField, budget: int = 300,
                               seed: int = 0,
                               points: Optional[Sequence[ProjPoint]] = None):
    """First destabilizing (frame, one-parameter subgroup) pair found in
    the deterministic trial order, or None when the budget is exhausted.

    Trials run sequentially; the contract is the first witness in trial
    order, so any parallel evaluation must preserve that order.
    """
    hit, _ = _search(x, budget, seed, points)
    return hit


# ---------------------------------------------------------------------------
# verdicts and certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DestabilizingPair:
    frame: Frame
    lam: OneParamSubgroup


@dataclass(frozen=True)
class SubspaceMembership:
    component: str
    frame: Frame
    lam: OneParamSubgroup


@dataclass(frozen=True)
class NormalFormMatch:
    rule: str
    params: Tuple[Tuple[str, Fraction], ...]
    frame: Frame
    conditions: Tuple[str, ...]


@dataclass(frozen=True)
class HullEvidence:
    frames_tested: int
    boundary: int
    interior: int


@dataclass(frozen=True)
class StabilityVerdict:
    verdict: str  # Stable | StrictlySemistable | Unstable | Unknown
    certificate: object
    notes: str = ""


def check_destabilizing_certificate(x: VectorField, frame: Frame,
                                    lam: OneParamSubgroup) -> bool:
    """Independent re-check: every support weight of the framed field
    pairs strictly positively with lam."""
    fol = z_reduce(act(frame, x))
    return mu_pairing(weight_support(fol), lam) > 0


# ---------------------------------------------------------------------------
# multiplicity-2 normalization (degree 3)
# ---------------------------------------------------------------------------
#
# The matchers recognize fixed coordinate shapes; these helpers search a
# short list of rational frames that bring a frame-image of one of the
# multiplicity-two normal forms back into its shape.  Each step only
# uses covariant data: the order-2 part (f2, g2) of the local pair, its
# factor lines, and scale consistency; every produced candidate is
# re-verified by the matcher, so a wrong candidate costs nothing.

_SMALL_SHEARS = (
    ((1, 0), (0, 1)),
    ((1, 0), (1, 1)),
    ((1, 1), (0, 1)),
    ((1, -1), (1, 1)),
)


def _block_frame(s2: Sequence[Sequence[Fraction]]) -> Frame:
    return Frame(linalg.mat([[1, 0, 0],
                             [0, s2[0][0], s2[0][1]],
                             [0, s2[1][0], s2[1][1]]]))


def _germ2(x: VectorField) -> Tuple[MPoly, MPoly]:
    pair = local_representation(x)
    return pair.f.homogeneous_part(2), pair.g.homogeneous_part(2)


def _sqrt_fraction(c: Fraction) -> Optional[Fraction]:
    from .poly import rational_root

    return rational_root(c, 2)


def m2_normal_candidates(x: VectorField, p: ProjPoint) -> List[Tuple[Frame, VectorField]]:
    """Framed copies of x likely to sit in a multiplicity-two normal form.

    Returns (frame, z-reduced field) pairs with act(frame, x) equal to
    the field; candidates are heuristic, matchers verify them.
    """
    y2 = MPoly.variable(2, 0)
    z2 = MPoly.variable(2, 1)
    base = frame_to_point(p).inverse()
    out: List[Tuple[Frame, VectorField]] = []

    def emit(frame: Frame):
        try:
            fol = z_reduce(act(frame, x))
        except Exception:
            return
        out.append((frame, fol.rep))

    emit(base)
    y0 = z_reduce(act(base, x)).rep
    f2, g2 = _germ2(y0)
    if f2.is_zero() and g2.is_zero():
        return out

    if f2 * z2 == g2 * y2:
        # radial order-2 part: the stable-family shape is automatic up to
        # scaling; pick a shear giving the line both coordinates, then
        # rescale z to pin the quartic identity.
        for s2 in _SMALL_SHEARS:
            frame = _block_frame(s2).compose(base)
            yy = z_reduce(act(frame, x)).rep
            a10 = yy.P.coefficient((2, 1, 0))
            a01 = yy.P.coefficient((2, 0, 1))
            c30 = yy.R.coefficient((0, 3, 0))
            if a10 == 0 or a01 == 0 or c30 == 0:
                continue
            w = a10 ** 4 / c30
            scaled = Frame.diagonal(1, 1, w).compose(frame)
            emit(scaled)
            break
        return out

    # linearly dependent order-2 pair: rotate the germ direction onto
    # d/dy, split the quadratic into rational lines, move one line onto
    # {z = 0}, and normalize the three marked coefficients to 1.
    dep = (f2.is_zero() or g2.is_zero()
           or all(f2.coefficient(e) * g2.coefficient(ee)
                  == f2.coefficient(ee) * g2.coefficient(e)
                  for e in f2.terms for ee in g2.terms))
    if not dep:
        return out
    if f2.is_zero():
        dir_frame = _block_frame(((0, 1), (1, 0)))
    elif g2.is_zero():
        dir_frame = _block_frame(((1, 0), (0, 1)))
    else:
        e_lead = max(f2.terms)
        lam = f2.terms[e_lead]
        mu = g2.coefficient(e_lead)
        dir_frame = _block_frame(((1, 0), (-mu / lam, 1)))
    f1 = dir_frame.compose(base)
    y1 = z_reduce(act(f1, x)).rep
    h, g2b = _germ2(y1)
    if not g2b.is_zero() or h.is_zero():
        return out
    lines = rational_linear_factors(h)
    if len(lines) < 2:
        return out
    for a, b in lines:
        frame2 = _line_to_z_frame(a, b).compose(f1)
        y2f = z_reduce(act(frame2, x)).rep
        c1 = y2f.Q.coefficient((1, 1, 1))
        c2 = y2f.P.coefficient((1, 2, 0))
        c3 = y2f.Q.coefficient((0, 3, 0))
        if c1 == 0 or c2 == 0 or c2 != c3:
            continue
        s = _sqrt_fraction(c2)
        if s is None:
            continue
        scaled = Frame.diagonal(1, s, c1).compose(frame2)
        emit(scaled)
        # residual gauge: x -> x - n2 z shifts Q[z^3] by -n2 * Q[xz^2]
        # while preserving every pinned coefficient; solve it so that
        # Q[z^3] = -Q[xz^2] * (coefficient of z in P_2 / q).  When
        # Q[xz^2] = 0 a y-z shear first makes it nonzero.
        rep = z_reduce(act(scaled, x)).rep
        if rep.Q.coefficient((1, 0, 2)) == 0:
            shear = Frame(linalg.mat([[1, 0, 0], [0, 1, -1], [0, 0, 1]]))
            scaled = shear.compose(scaled)
            rep = z_reduce(act(scaled, x)).rep
        b02 = rep.Q.coefficient((1, 0, 2))
        if b02 == 0:
            continue
        c12 = -rep.P.coefficient((1, 1, 1))
        bm = -(b02 + c12)
        n2 = rep.Q.coefficient((0, 0, 3)) / b02 + bm
        if n2 != 0:
            gauge = Frame(linalg.mat([[1, 0, n2], [0, 1, 0], [0, 0, 1]]))
            emit(gauge.compose(scaled))
    return out


# ---------------------------------------------------------------------------
# degree-1 classification
# ---------------------------------------------------------------------------


def linear_part_matrix(x: VectorField) -> linalg.Matrix:
    if x.degree != 1:
        raise UnsupportedDegreeError("linear matrix extraction needs degree 1")
    basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    return tuple(
        tuple(c.coefficient(e) for e in basis) for c in x.components
    )


def traceless_part(a: linalg.Matrix) -> linalg.Matrix:
    tr = a[0][0] + a[1][1] + a[2][2]
    third = tr / 3
    return tuple(
        tuple(a[i][j] - (third if i == j else 0) for j in range(3))
        for i in range(3)
    )


def is_nilpotent_linear_part(x: VectorField) -> bool:
    b = traceless_part(linear_part_matrix(x))
    b2 = linalg.matmul(b, b)
    b3 = linalg.matmul(b2, b)
    return all(v == 0 for row in b3 for v in row)


def _nilpotent_flag_frame(b: linalg.Matrix) -> Frame:
    """Columns (B^2 v, B v, v) or (B v, w, v) make B strictly upper
    triangular; over the rationals the chain is rational."""
    basis = ((Fraction(1), Fraction(0), Fraction(0)),
             (Fraction(0), Fraction(1), Fraction(0)),
             (Fraction(0), Fraction(0), Fraction(1)))
    b2 = linalg.matmul(b, b)
    for v in basis:
        if any(c != 0 for c in linalg.matvec(b2, v)):
            cols = [linalg.matvec(b2, v), linalg.matvec(b, v), v]
            return Frame(linalg.inverse(linalg.from_columns(cols)))
    # b^2 = 0 but b != 0: image inside kernel, complete with a kernel vector
    ker = _nullspace(b)
    for v in basis:
        bv = linalg.matvec(b, v)
        if all(c == 0 for c in bv):
            continue
        for w in ker:
            m = linalg.from_columns([bv, w, v])
            if linalg.det(m) != 0:
                return Frame(linalg.inverse(m))
    raise ValueError("matrix is zero")


def _nullspace(a: linalg.Matrix) -> List[Tuple[Fraction, ...]]:
    rows = [list(r) for r in a]
    n = 3
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [v - f * rows[r][j] for j, v in enumerate(rows[i])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    out = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        out.append(tuple(v))
    return out


def _classify_degree1(x: VectorField, budget: int, seed: int) -> StabilityVerdict:
    b = traceless_part(linear_part_matrix(x))
    if is_nilpotent_linear_part(x):
        frame = _nilpotent_flag_frame(b)
        fol = z_reduce(act(frame, x))
        pos = hull_position(weight_support(fol))
        if pos.kind != "outside":  # pragma: no cover - flag frame always works
            raise AssertionError("nilpotent flag frame failed to separate")
        return StabilityVerdict(
            "Unstable", DestabilizingPair(frame, pos.separating),
            notes="linear part nilpotent modulo the radial direction")
    hit, stats = _search(x, budget, seed, None)
    if hit:  # unreachable for non-nilpotent linear parts, kept for safety
        frame, lam = hit
        return StabilityVerdict("Unstable", DestabilizingPair(frame, lam))
    return StabilityVerdict(
        "Unknown",
        HullEvidence(stats.frames_tested, stats.boundary, stats.interior),
        notes="linear part not nilpotent: semistable at least; stable vs "
              "strictly semistable is not certified at degree 1")


# ---------------------------------------------------------------------------
# the classifier
# ---------------------------------------------------------------------------


def _params_tuple(params: Dict[str, Fraction]) -> Tuple[Tuple[str, Fraction], ...]:
    return tuple(sorted(params.items()))


def classify(x: VectorField, point: Optional[ProjPoint] = None,
             budget: int = 300, seed: int = 0) -> StabilityVerdict:
    """Full pipeline: certify Unstable with an explicit witness, Stable
    or StrictlySemistable through a theorem-backed normal-form match,
    and Unknown otherwise."""
    z_reduce(x)  # raises NullFoliationError on radial multiples
    if not has_isolated_singularities(x):
        raise NotIsolatedError("the singular locus is not isolated")
    if point is not None and not is_singular_at(x, point):
        raise NotSingularError(f"{point} is not a singular point")
    d = x.degree
    if d == 1:
        return _classify_degree1(x, budget, seed)

    known: List[ProjPoint] = (
        [point] if point is not None
        else [p for p in (E0, E1, E2) if is_singular_at(x, p)])

    if known:
        p0 = known[0]
        mu = milnor_at_point(x, p0)
        unique = mu is not INFINITE and mu == d * d + d + 1
        if unique:
            _, moved = move_point_to_origin_chart(x, p0)
            m = multiplicity_at_origin(local_representation(moved))
            if m == 1 and d == 3:
                return StabilityVerdict(
                    "Stable",
                    NormalFormMatch(
                        "deg3-mult1", (), frame_to_point(p0).inverse(),
                        ("unique singular point", "milnor 13",
                         "multiplicity 1")),
                    notes="degree-3, multiplicity-one unique singularity")
            if m == 1 and d == 2:
                return StabilityVerdict(
                    "Stable",
                    NormalFormMatch(
                        "deg2-mult1", (), frame_to_point(p0).inverse(),
                        ("unique singular point", "milnor 7",
                         "multiplicity 1")),
                    notes="degree-2, multiplicity-one unique singularity")
            if d == 3 and m == 3:
                frame = frame_to_point(p0).inverse()
                fol = z_reduce(act(frame, x))
                comp = v_membership(fol)
                if comp is not None:
                    pos = hull_position(weight_support(fol))
                    if pos.kind == "outside":
                        return StabilityVerdict(
                            "Unstable",
                            SubspaceMembership(comp, frame, pos.separating),
                            notes="multiplicity forces the coordinate span")
            if d == 3 and m == 2:
                candidates: List[Tuple[Frame, VectorField]] = [
                    (Frame.identity(), z_reduce(x).rep)]
                candidates.extend(m2_normal_candidates(x, p0))
                for frame, rep in candidates:
                    hit = families.match_normal_form(rep)
                    if hit is None:
                        continue
                    rule, params = hit
                    if rule == "stable-m2":
                        return StabilityVerdict(
                            "Stable",
                            NormalFormMatch(rule, _params_tuple(params), frame,
                                            families.RULE_CONDITIONS[rule]))
                    if rule == "ss-normal-form":
                        return StabilityVerdict(
                            "StrictlySemistable",
                            NormalFormMatch(rule, _params_tuple(params), frame,
                                            families.RULE_CONDITIONS[rule]))

    if d == 3:
        fol = z_reduce(x)
        comp = v_membership(fol)
        if comp is not None:
            pos = hull_position(weight_support(fol))
            if pos.kind == "outside":
                return StabilityVerdict(
                    "Unstable",
                    SubspaceMembership(comp, Frame.identity(), pos.separating))

    hit, stats = _search(x, budget, seed, known)
    if hit:
        frame, lam = hit
        return StabilityVerdict("Unstable", DestabilizingPair(frame, lam))
    return StabilityVerdict(
        "Unknown",
        HullEvidence(stats.frames_tested, stats.boundary, stats.interior),
        notes="no destabilizing frame found and no normal form matched")
