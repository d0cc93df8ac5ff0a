"""Degree-d vector fields on the projective plane and their foliations.

A foliation is an equivalence class of homogeneous fields (P, Q, R)
modulo adding G * E, where E = x d/dx + y d/dy + z d/dz is the radial
field and G is any form of degree d - 1.  The canonical representative
used everywhere is the z-reduced one: the d/dz component contains no
monomial divisible by z.  Coordinate changes act by
g . X = Dg X(g^{-1}), and scalar matrices act trivially on classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .errors import (MixedDegreeError, NullFoliationError,
                     PolynomialSyntaxError)
from .poly import (MINUS_INFINITY, MPoly, dehomogenize, divide_exact,
                   format_poly, parse_poly, partial_derivative,
                   substitute_linear)

_COMPONENT_NAMES = ("d/dx", "d/dy", "d/dz")


@dataclass(frozen=True)
class VectorField:
    """Homogeneous polynomial vector field P d/dx + Q d/dy + R d/dz."""

    degree: int
    P: MPoly
    Q: MPoly
    R: MPoly

    def __post_init__(self):
        comps = self.components
        if all(c.is_zero() for c in comps):
            raise NullFoliationError("all components are zero")
        for c in comps:
            if c.nvars != 3:
                raise ValueError("components must be 3-variable polynomials")
            if not c.is_zero():
                if not c.is_homogeneous():
                    raise MixedDegreeError(f"component {format_poly(c)} is not homogeneous")
                if c.degree != self.degree:
                    raise MixedDegreeError(
                        f"component of degree {c.degree}, expected {self.degree}")
        if self.degree < 1:
            raise ValueError("degree must be positive")

    @property
    def components(self) -> Tuple[MPoly, MPoly, MPoly]:
        return (self.P, self.Q, self.R)

    @staticmethod
    def from_components(P: MPoly, Q: MPoly, R: MPoly) -> "VectorField":
        degree = None
        for c in (P, Q, R):
            if not c.is_zero():
                degree = c.degree
                break
        if degree is None:
            raise NullFoliationError("all components are zero")
        return VectorField(degree, P, Q, R)

    def scaled(self, s) -> "VectorField":
        return VectorField(self.degree, self.P * s, self.Q * s, self.R * s)

    def evaluate(self, point: Sequence[Fraction]) -> Tuple[Fraction, Fraction, Fraction]:
        return tuple(c.evaluate(point) for c in self.components)

    def __str__(self) -> str:
        return format_vector_field(self)


@dataclass(frozen=True)
class ProjPoint:
    """Point of the projective plane; equality is up to a nonzero scalar.

    The stored coordinates are canonical: the first nonzero one is 1.
    """

    coords: Tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coords)
        if all(c == 0 for c in cs):
            raise ValueError("projective point needs a nonzero coordinate")
        lead = next(c for c in cs if c != 0)
        object.__setattr__(self, "coords", tuple(c / lead for c in cs))

    @staticmethod
    def of(a, b, c) -> "ProjPoint":
        return ProjPoint((Fraction(a), Fraction(b), Fraction(c)))

    def __str__(self) -> str:
        return "[" + " : ".join(str(c) for c in self.coords) + "]"


E0 = ProjPoint.of(1, 0, 0)
E1 = ProjPoint.of(0, 1, 0)
E2 = ProjPoint.of(0, 0, 1)


@dataclass(frozen=True)
class Frame:
    """Invertible rational change of coordinates of the plane."""

    matrix: linalg.Matrix

    def __post_init__(self):
        m = linalg.mat(self.matrix)
        if linalg.det(m) == 0:
            raise ValueError("frame matrix is singular")
        object.__setattr__(self, "matrix", m)

    @staticmethod
    def identity() -> "Frame":
        return Frame(linalg.identity(3))

    @staticmethod
    def diagonal(a, b, c) -> "Frame":
        return Frame(linalg.mat([[a, 0, 0], [0, b, 0], [0, 0, c]]))

    @staticmethod
    def permutation(perm: Sequence[int]) -> "Frame":
        return Frame(linalg.permutation_matrix(perm))

    def inverse(self) -> "Frame":
        return Frame(linalg.inverse(self.matrix))

    def compose(self, other: "Frame") -> "Frame":
        """Frame acting as self after other (matrix product self * other)."""
        return Frame(linalg.matmul(self.matrix, other.matrix))

    def apply_point(self, p: ProjPoint) -> ProjPoint:
        return ProjPoint(linalg.matvec(self.matrix, p.coords))

    @property
    def det(self) -> Fraction:
        return linalg.det(self.matrix)


@dataclass(frozen=True)
class Foliation:
    """A field in z-reduced form: R contains no monomial divisible by z."""

    rep: VectorField

    def __post_init__(self):
        bad = [e for e in self.rep.R.terms if e[2] > 0]
        if bad:
            raise ValueError("representative is not z-reduced")

    @property
    def degree(self) -> int:
        return self.rep.degree

    def coordinates(self) -> List[Tuple[Tuple[int, int, int], int, Fraction]]:
        """Nonzero coordinates as (exponents, component index, coefficient)."""
        out = []
        for i, c in enumerate(self.rep.components):
            for e, v in sorted(c.terms.items()):
                out.append((e, i, v))
        return out


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def divergence(x: VectorField) -> MPoly:
    return (partial_derivative(x.P, 0) + partial_derivative(x.Q, 1)
            + partial_derivative(x.R, 2))


def z_reduce(x: VectorField) -> Foliation:
    """Canonical representative modulo the radial field.

    With G = (R - R|_{z=0}) / z the field X - G*E has d/dz component free
    of z.  A zero result means X was a multiple of the radial field.
    """
    z = MPoly.variable(3, 2)
    r0 = MPoly(3, {e: c for e, c in x.R.terms.items() if e[2] == 0})
    rz = x.R - r0
    g = divide_exact(rz, z) if not rz.is_zero() else MPoly.zero(3)
    xv = MPoly.variable(3, 0)
    yv = MPoly.variable(3, 1)
    p = x.P - xv * g
    q = x.Q - yv * g
    if p.is_zero() and q.is_zero() and r0.is_zero():
        raise NullFoliationError("the field is a multiple of the radial field")
    return Foliation(VectorField(x.degree, p, q, r0))


def radial_field(degree: int = 1) -> VectorField:
    if degree != 1:
        raise ValueError("the radial field has degree 1")
    return VectorField(1, MPoly.variable(3, 0), MPoly.variable(3, 1),
                       MPoly.variable(3, 2))


def act(g: Frame, x: VectorField) -> VectorField:
    """Coordinate change g . X = Dg X(g^{-1} .); degree is preserved."""
    inv = linalg.inverse(g.matrix)
    subs = [substitute_linear(c, inv) for c in x.components]
    m = g.matrix
    comps = [
        subs[0] * m[i][0] + subs[1] * m[i][1] + subs[2] * m[i][2]
        for i in range(3)
    ]
    return VectorField(x.degree, comps[0], comps[1], comps[2])


def is_singular_at(x: VectorField, p: ProjPoint) -> bool:
    """True when X(p) is proportional to p (all 2x2 minors vanish)."""
    v = x.evaluate(p.coords)
    w = p.coords
    return (v[0] * w[1] - v[1] * w[0] == 0
            and v[0] * w[2] - v[2] * w[0] == 0
            and v[1] * w[2] - v[2] * w[1] == 0)


def frame_to_point(p: ProjPoint) -> Frame:
    """Deterministic invertible frame sending [1:0:0] to p.

    First column is p; the remaining columns are the first standard basis
    vectors that keep the matrix invertible.
    """
    cols: List[Tuple[Fraction, ...]] = [p.coords]
    for i in range(3):
        if len(cols) == 3:
            break
        e = tuple(Fraction(1) if j == i else Fraction(0) for j in range(3))
        candidate = cols + [e]
        if len(candidate) < 3:
            # rank check for two columns: some 2x2 minor nonzero
            a, b = candidate
            minors = [a[i1] * b[j1] - a[j1] * b[i1]
                      for i1 in range(3) for j1 in range(i1 + 1, 3)]
            if any(m != 0 for m in minors):
                cols = candidate
        else:
            m = linalg.from_columns(candidate)
            if linalg.det(m) != 0:
                cols = candidate
    return Frame(linalg.from_columns(cols))


def move_point_to_origin_chart(x: VectorField, p: ProjPoint) -> Tuple[Frame, VectorField]:
    """Frame g with g.[1:0:0] = p together with act(g^{-1}, X)."""
    g = frame_to_point(p)
    return g, act(g.inverse(), x)


def local_representation(x: VectorField):
    """Local pair (f, g) at [1:0:0]:  f = Q(1,y,z) - y P(1,y,z) and
    g = R(1,y,z) - z P(1,y,z).  Invariant under radial shifts."""
    from .localgeom import LocalPair

    p1 = dehomogenize(x.P, 0)
    q1 = dehomogenize(x.Q, 0)
    r1 = dehomogenize(x.R, 0)
    y = MPoly.variable(2, 0)
    z = MPoly.variable(2, 1)
    return LocalPair(q1 - y * p1, r1 - z * p1)


def dual_form(x: VectorField) -> Tuple[MPoly, MPoly, MPoly]:
    """Coefficients (A, B, C) of the dual 1-form A dx + B dy + C dz,
    A = zQ - yR, B = xR - zP, C = yP - xQ.

    This kills the radial ambiguity: equivalent fields share the same
    form.  The components have no common factor exactly when the
    singularities are isolated.
    """
    xv = MPoly.variable(3, 0)
    yv = MPoly.variable(3, 1)
    zv = MPoly.variable(3, 2)
    return (zv * x.Q - yv * x.R,
            xv * x.R - zv * x.P,
            yv * x.P - xv * x.Q)


def gamma_basis(d: int) -> List[VectorField]:
    """Monomial basis of z-reduced degree-d fields.

    All x^k y^i z^j d/dx and d/dy with k+i+j = d, plus x^k y^i d/dz with
    k+i = d; the count is d^2 + 4d + 3.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    zero = MPoly.zero(3)
    out: List[VectorField] = []
    monos = [(k, i, d - k - i) for k in range(d, -1, -1)
             for i in range(d - k, -1, -1)]
    for e in monos:
        out.append(VectorField(d, MPoly.monomial(3, e), zero, zero))
    for e in monos:
        out.append(VectorField(d, zero, MPoly.monomial(3, e), zero))
    for k in range(d, -1, -1):
        out.append(VectorField(d, zero, zero, MPoly.monomial(3, (k, d - k, 0))))
    return out


def foliations_equal(a: VectorField, b: VectorField) -> bool:
    """Equality as foliations: z-reduced forms agree up to a global scalar."""
    try:
        fa = z_reduce(a).rep
        fb = z_reduce(b).rep
    except NullFoliationError:
        return False
    if fa.degree != fb.degree:
        return False
    ratio = None
    for ca, cb in zip(fa.components, fb.components):
        if ca.is_zero() != cb.is_zero():
            return False
        if ca.is_zero():
            continue
        if set(ca.terms) != set(cb.terms):
            return False
        for e, v in ca.terms.items():
            r = v / cb.terms[e]
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
    return True


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def format_vector_field(x: VectorField) -> str:
    parts = []
    for c, name in zip(x.components, _COMPONENT_NAMES):
        if not c.is_zero():
            parts.append(f"({format_poly(c)}) {name}")
    return " + ".join(parts)


def parse_vector_field(text: str) -> VectorField:
    """Parse the field grammar: '(' poly ')' followed by d/dx, d/dy or
    d/dz, terms joined with '+'.  Omitted components are zero; lines
    starting with '#' are comments."""
    stripped_lines = []
    for line in text.splitlines():
        hash_pos = line.find("#")
        if hash_pos >= 0:
            line = line[:hash_pos]
        stripped_lines.append(line)
    src = "\n".join(stripped_lines)

    comps = {0: MPoly.zero(3), 1: MPoly.zero(3), 2: MPoly.zero(3)}
    pos = 0
    n = len(src)

    def skip_ws(i: int) -> int:
        while i < n and src[i] in " \t\n\r":
            i += 1
        return i

    first = True
    while True:
        pos = skip_ws(pos)
        if pos >= n:
            if first:
                raise PolynomialSyntaxError("empty vector field", 0)
            break
        if not first:
            if src[pos] != "+":
                raise PolynomialSyntaxError("expected '+' between field terms", pos)
            pos = skip_ws(pos + 1)
        first = False
        if pos >= n or src[pos] != "(":
            raise PolynomialSyntaxError("expected '(' opening a component", pos)
        depth, start = 1, pos + 1
        i = start
        while i < n and depth:
            if src[i] == "(":
                depth += 1
            elif src[i] == ")":
                depth -= 1
            i += 1
        if depth:
            raise PolynomialSyntaxError("unbalanced parenthesis", pos)
        body = src[start:i - 1]
        pos = skip_ws(i)
        matched = None
        for idx, name in enumerate(_COMPONENT_NAMES):
            if src.startswith(name, pos):
                matched = idx
                break
        if matched is None:
            raise PolynomialSyntaxError("expected d/dx, d/dy or d/dz", pos)
        pos += len(_COMPONENT_NAMES[matched])
        comps[matched] = comps[matched] + parse_poly(body, 3, offset=start)

    degree = None
    for c in comps.values():
        if not c.is_zero():
            if not c.is_homogeneous():
                raise MixedDegreeError(
                    f"component {format_poly(c)} is not homogeneous")
            if degree is None:
                degree = c.degree
            elif c.degree != degree:
                raise MixedDegreeError(
                    f"components of degrees {degree} and {c.degree}")
    if degree is None:
        raise NullFoliationError("all components are zero")
    return VectorField(degree, comps[0], comps[1], comps[2])
