"""Explicit families of fields with one singular point, as constructors
and recognizers.

Degree 3 with a unique singular point of multiplicity two splits into
three named coordinate shapes:

* ``ss-normal-form``     - strictly semistable; the cubic coefficients of
  the first component are rational expressions in the four free
  parameters (b02, b21, b12, c12), with a30 = b21 - 2 c12 - 5 b02
  required nonzero.
* ``stable-m2``          - stable; the second and third components are
  pinned by -zQ + yR = (a10 y + a01 z)^4, with two resultant conditions
  on the remaining cubic coefficients.
* ``unstable-m2``        - unstable; the first component is the cube of a
  line, b11 b02 != 0, plus a nonvanishing resultant.

Constructors post-validate multiplicity 2 and Milnor number 13 at
[1:0:0]: some parameter choices degenerate (extra singular points), and
only certified members are ever returned.  Recognizers work on the
presented z-reduced coordinates only; frame search is the classifier's
job.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import FamilyConditionError
from .foliation import (E0, ProjPoint, VectorField, local_representation,
                        parse_vector_field, z_reduce)
from .localgeom import (INFINITE, intersection_index_origin,
                        multiplicity_at_origin)
from .poly import MPoly, rational_root, resultant_binary_forms

F = Fraction


def _p3(terms: Dict[Tuple[int, int, int], Fraction]) -> MPoly:
    return MPoly(3, terms)


def _post_validate(x: VectorField, expect_multiplicity: int) -> None:
    pair = local_representation(x)
    mu = intersection_index_origin(pair)
    if mu is INFINITE or mu != 13:
        raise FamilyConditionError(
            "milnor 13", f"degenerate parameters: Milnor number {mu} != 13")
    m = multiplicity_at_origin(pair)
    if m != expect_multiplicity:
        raise FamilyConditionError(
            f"multiplicity {expect_multiplicity}",
            f"degenerate parameters: multiplicity {m}")


# ---------------------------------------------------------------------------
# strictly semistable normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SSParams:
    b02: Fraction
    b21: Fraction
    b12: Fraction
    c12: Fraction

    def __post_init__(self):
        for name in ("b02", "b21", "b12", "c12"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a30 == 0:
            raise FamilyConditionError(
                "a30 != 0", "b21 - 2*c12 - 5*b02 must be nonzero")

    @property
    def a30(self) -> Fraction:
        return self.b21 - 2 * self.c12 - 5 * self.b02


def ss_family(p: SSParams) -> VectorField:
    """Strictly semistable multiplicity-2 normal form."""
    b02, b21, b12, c12 = p.b02, p.b21, p.b12, p.c12
    a30 = p.a30
    a21 = -b21 * c12 + c12 ** 2 - b21 * b02 - 7 * b02 ** 2 + b12
    a12 = (c12 ** 2 * b02 + 2 * c12 * b02 ** 2 - 3 * b02 ** 3
           - b12 * c12 - b12 * b02 + c12 * b02 + b02 ** 2)
    a03 = -b02 ** 4 - c12 ** 2 * b02 - 2 * c12 * b02 ** 2 - b02 ** 3
    pc = _p3({
        (1, 2, 0): F(1),
        (1, 1, 1): -c12,
        (1, 0, 2): -b02 * (b02 + c12),
        (0, 3, 0): a30,
        (0, 2, 1): a21,
        (0, 1, 2): a12,
        (0, 0, 3): a03,
    })
    qc = _p3({
        (1, 1, 1): F(1),
        (1, 0, 2): b02,
        (0, 3, 0): F(1),
        (0, 2, 1): b21 - c12,
        (0, 1, 2): -b02 ** 2 - b02 * c12 + b12,
        (0, 0, 3): b02 * (b02 + c12),
    })
    x = VectorField(3, pc, qc, MPoly.zero(3))
    _post_validate(x, 2)
    return x


# ---------------------------------------------------------------------------
# stable multiplicity-2 family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StableParams:
    a10: Fraction
    a01: Fraction
    a20: Fraction
    a11: Fraction
    a02: Fraction
    a30: Fraction
    a21: Fraction
    a12: Fraction
    a03: Fraction

    def __post_init__(self):
        for name in self.__dataclass_fields__:
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a10 * self.a01 == 0:
            raise FamilyConditionError("a10*a01 != 0")


def _stable_pqr(p: StableParams) -> Tuple[MPoly, MPoly, MPoly]:
    a10, a01 = p.a10, p.a01
    pc = _p3({
        (2, 1, 0): a10, (2, 0, 1): a01,
        (1, 2, 0): p.a20, (1, 1, 1): p.a11, (1, 0, 2): p.a02,
        (0, 3, 0): p.a30, (0, 2, 1): p.a21, (0, 1, 2): p.a12,
        (0, 0, 3): p.a03,
    })
    qc = _p3({
        (0, 3, 0): -4 * a10 ** 3 * a01,
        (0, 2, 1): -6 * a10 ** 2 * a01 ** 2,
        (0, 1, 2): -4 * a10 * a01 ** 3,
        (0, 0, 3): -a01 ** 4,
    })
    rc = _p3({(0, 3, 0): a10 ** 4})
    return pc, qc, rc


def _stable_resultant_conditions(p: StableParams) -> Tuple[Fraction, Fraction]:
    y = MPoly.variable(2, 0)
    z = MPoly.variable(2, 1)
    line = p.a10 * y + p.a01 * z
    q_local = (-4 * p.a10 ** 3 * p.a01 * y ** 3
               - 6 * p.a10 ** 2 * p.a01 ** 2 * y ** 2 * z
               - 4 * p.a10 * p.a01 ** 3 * y * z ** 2
               - p.a01 ** 4 * z ** 3)
    mid = p.a20 * y ** 2 + p.a11 * y * z + p.a02 * z ** 2
    cubic = p.a30 * y ** 3 + p.a21 * y ** 2 * z + p.a12 * y * z ** 2 + p.a03 * z ** 3
    res6 = resultant_binary_forms(line, q_local - y * mid)
    res7 = resultant_binary_forms(line, cubic)
    return res6, res7


def stable_family(p: StableParams) -> VectorField:
    """Stable multiplicity-2 family; -zQ + yR = (a10 y + a01 z)^4 by
    construction, conditions on the resultants are checked here."""
    res6, res7 = _stable_resultant_conditions(p)
    if res6 != 0:
        raise FamilyConditionError(
            "condition (6)", "the line must divide Q - y*(middle quadratic)")
    if res7 == 0:
        raise FamilyConditionError(
            "condition (7)", "the line must not divide the pure cubic part")
    x = VectorField(3, *_stable_pqr(p))
    _post_validate(x, 2)
    return x


# ---------------------------------------------------------------------------
# unstable multiplicity-2 family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UnstableM2Params:
    b11: Fraction
    b02: Fraction
    b21: Fraction
    b12: Fraction
    b03: Fraction

    def __post_init__(self):
        for name in self.__dataclass_fields__:
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.b11 * self.b02 == 0:
            raise FamilyConditionError("b11*b02 != 0")
        y = MPoly.variable(2, 0)
        z = MPoly.variable(2, 1)
        quad = self.b21 * y ** 2 + self.b12 * y * z + self.b03 * z ** 2
        if quad.is_zero() or resultant_binary_forms(
                self.b11 * y + self.b02 * z, quad) == 0:
            raise FamilyConditionError(
                "resultant != 0",
                "the line must not divide the quadratic b21*y^2+b12*y*z+b03*z^2")


def unstable_m2_family(p: UnstableM2Params) -> VectorField:
    b11, b02 = p.b11, p.b02
    pc = _p3({
        (0, 3, 0): b11 ** 3,
        (0, 2, 1): 3 * b11 ** 2 * b02,
        (0, 1, 2): 3 * b11 * b02 ** 2,
        (0, 0, 3): b02 ** 3,
    })
    qc = _p3({
        (1, 1, 1): b11, (1, 0, 2): b02,
        (0, 2, 1): p.b21, (0, 1, 2): p.b12, (0, 0, 3): p.b03,
    })
    x = VectorField(3, pc, qc, MPoly.zero(3))
    _post_validate(x, 2)
    return x


# ---------------------------------------------------------------------------
# multiplicity-3 shape
# ---------------------------------------------------------------------------


def mult3_family(a_coeffs: Dict[str, Fraction], b_coeffs: Dict[str, Fraction],
                 c30: Fraction) -> VectorField:
    """Multiplicity-3 shape at [1:0:0]: P = x*(quadratic in y,z) + cubic,
    Q a pure (y,z)-cubic, R = c30 y^3.  No conditions are imposed; the
    caller validates uniqueness separately."""
    a = {k: Fraction(v) for k, v in a_coeffs.items()}
    b = {k: Fraction(v) for k, v in b_coeffs.items()}
    pc = _p3({
        (1, 2, 0): a.get("a20", F(0)), (1, 1, 1): a.get("a11", F(0)),
        (1, 0, 2): a.get("a02", F(0)),
        (0, 3, 0): a.get("a30", F(0)), (0, 2, 1): a.get("a21", F(0)),
        (0, 1, 2): a.get("a12", F(0)), (0, 0, 3): a.get("a03", F(0)),
    })
    qc = _p3({
        (0, 3, 0): b.get("b30", F(0)), (0, 2, 1): b.get("b21", F(0)),
        (0, 1, 2): b.get("b12", F(0)), (0, 0, 3): b.get("b03", F(0)),
    })
    rc = _p3({(0, 3, 0): Fraction(c30)})
    return VectorField(3, pc, qc, rc)


# ---------------------------------------------------------------------------
# recognizers
# ---------------------------------------------------------------------------

RULE_CONDITIONS: Dict[str, Tuple[str, ...]] = {
    "ss-normal-form": (
        "shape: P,Q supported on the normal-form monomials, R = 0",
        "P[xy^2] = Q[xyz] = Q[y^3] = 1",
        "a30 = b21 - 2*c12 - 5*b02 != 0",
        "cubic coefficients of P match the parameter relations",
        "Q[xz^2] = b02, Q[z^3] = -P[xz^2] = b02*(b02+c12)",
        "multiplicity 2 and Milnor number 13 at [1:0:0]",
    ),
    "stable-m2": (
        "shape: Q, R pure cubics, P without x^3",
        "a10 != 0, a01 != 0",
        "-zQ + yR = (a10*y + a01*z)^4",
        "Res(a10*y + a01*z, Q(1,y,z) - y*(middle quadratic)) = 0",
        "Res(a10*y + a01*z, pure cubic part of P) != 0",
        "multiplicity 2 and Milnor number 13 at [1:0:0]",
    ),
    "unstable-m2": (
        "shape: P = (b11*y + b02*z)^3, Q = x*z*(b11*y+b02*z) + z*(quadratic), R = 0",
        "b11*b02 != 0",
        "Res(b11*y + b02*z, b21*y^2 + b12*y*z + b03*z^2) != 0",
        "multiplicity 2 and Milnor number 13 at [1:0:0]",
    ),
    "mult3": (
        "shape: P = x*(quadratic) + cubic, Q pure cubic, R = c30*y^3",
    ),
    "deg1-nilpotent": (
        "linear coefficient matrix nilpotent modulo the radial direction",
    ),
}


def _supported_on(p: MPoly, allowed: Sequence[Tuple[int, int, int]]) -> bool:
    return all(e in allowed for e in p.terms)


def _mult2_certified(x: VectorField) -> bool:
    pair = local_representation(x)
    if pair.f.coefficient((0, 0)) != 0 or pair.g.coefficient((0, 0)) != 0:
        return False
    mu = intersection_index_origin(pair)
    return (mu is not INFINITE and mu == 13
            and multiplicity_at_origin(pair) == 2)


def _match_ss(x: VectorField) -> Optional[Dict[str, Fraction]]:
    P, Q, R = x.components
    if not R.is_zero():
        return None
    p_allowed = ((1, 2, 0), (1, 1, 1), (1, 0, 2), (0, 3, 0), (0, 2, 1),
                 (0, 1, 2), (0, 0, 3))
    q_allowed = ((1, 1, 1), (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2),
                 (0, 0, 3))
    if not (_supported_on(P, p_allowed) and _supported_on(Q, q_allowed)):
        return None
    if P.coefficient((1, 2, 0)) != 1 or Q.coefficient((1, 1, 1)) != 1 \
            or Q.coefficient((0, 3, 0)) != 1:
        return None
    b02 = Q.coefficient((1, 0, 2))
    c12 = -P.coefficient((1, 1, 1))
    b21 = Q.coefficient((0, 2, 1)) + c12
    b12 = Q.coefficient((0, 1, 2)) + b02 ** 2 + b02 * c12
    a30 = b21 - 2 * c12 - 5 * b02
    if a30 == 0:
        return None
    a21 = -b21 * c12 + c12 ** 2 - b21 * b02 - 7 * b02 ** 2 + b12
    a12 = (c12 ** 2 * b02 + 2 * c12 * b02 ** 2 - 3 * b02 ** 3
           - b12 * c12 - b12 * b02 + c12 * b02 + b02 ** 2)
    a03 = -b02 ** 4 - c12 ** 2 * b02 - 2 * c12 * b02 ** 2 - b02 ** 3
    checks = (
        P.coefficient((1, 0, 2)) == -b02 * (b02 + c12),
        Q.coefficient((0, 0, 3)) == b02 * (b02 + c12),
        P.coefficient((0, 3, 0)) == a30,
        P.coefficient((0, 2, 1)) == a21,
        P.coefficient((0, 1, 2)) == a12,
        P.coefficient((0, 0, 3)) == a03,
    )
    if not all(checks):
        return None
    if not _mult2_certified(x):
        return None
    return {"b02": b02, "b21": b21, "b12": b12, "c12": c12}


def _match_stable_m2(x: VectorField) -> Optional[Dict[str, Fraction]]:
    P, Q, R = x.components
    p_allowed = ((2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1), (1, 0, 2),
                 (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3))
    q_allowed = ((0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3))
    r_allowed = ((0, 3, 0),)
    if not (_supported_on(P, p_allowed) and _supported_on(Q, q_allowed)
            and _supported_on(R, r_allowed)):
        return None
    a10 = P.coefficient((2, 1, 0))
    a01 = P.coefficient((2, 0, 1))
    if a10 == 0 or a01 == 0:
        return None
    params = StableParams(
        a10=a10, a01=a01,
        a20=P.coefficient((1, 2, 0)), a11=P.coefficient((1, 1, 1)),
        a02=P.coefficient((1, 0, 2)),
        a30=P.coefficient((0, 3, 0)), a21=P.coefficient((0, 2, 1)),
        a12=P.coefficient((0, 1, 2)), a03=P.coefficient((0, 0, 3)))
    expected_q, expected_r = _stable_pqr(params)[1:]
    if Q != expected_q or R != expected_r:
        return None
    res6, res7 = _stable_resultant_conditions(params)
    if res6 != 0 or res7 == 0:
        return None
    if not _mult2_certified(x):
        return None
    return {k: getattr(params, k) for k in params.__dataclass_fields__}


def _match_unstable_m2(x: VectorField) -> Optional[Dict[str, Fraction]]:
    P, Q, R = x.components
    if not R.is_zero():
        return None
    p_allowed = ((0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3))
    q_allowed = ((1, 1, 1), (1, 0, 2), (0, 2, 1), (0, 1, 2), (0, 0, 3))
    if not (_supported_on(P, p_allowed) and _supported_on(Q, q_allowed)):
        return None
    b11 = rational_root(P.coefficient((0, 3, 0)), 3)
    if b11 is None or b11 == 0:
        return None
    if b11 != Q.coefficient((1, 1, 1)):
        return None
    b02 = Q.coefficient((1, 0, 2))
    if b02 == 0:
        return None
    y = MPoly.variable(2, 0)
    z = MPoly.variable(2, 1)
    cube = (b11 * y + b02 * z) ** 3
    p_local = MPoly(2, {(e[1], e[2]): c for e, c in P.terms.items()})
    if p_local != cube:
        return None
    try:
        params = UnstableM2Params(
            b11=b11, b02=b02,
            b21=Q.coefficient((0, 2, 1)), b12=Q.coefficient((0, 1, 2)),
            b03=Q.coefficient((0, 0, 3)))
    except FamilyConditionError:
        return None
    if not _mult2_certified(x):
        return None
    return {k: getattr(params, k) for k in params.__dataclass_fields__}


def _match_mult3(x: VectorField) -> Optional[Dict[str, Fraction]]:
    P, Q, R = x.components
    p_allowed = ((1, 2, 0), (1, 1, 1), (1, 0, 2), (0, 3, 0), (0, 2, 1),
                 (0, 1, 2), (0, 0, 3))
    q_allowed = ((0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3))
    r_allowed = ((0, 3, 0),)
    if not (_supported_on(P, p_allowed) and _supported_on(Q, q_allowed)
            and _supported_on(R, r_allowed)):
        return None
    names = {
        "a20": (0, (1, 2, 0)), "a11": (0, (1, 1, 1)), "a02": (0, (1, 0, 2)),
        "a30": (0, (0, 3, 0)), "a21": (0, (0, 2, 1)), "a12": (0, (0, 1, 2)),
        "a03": (0, (0, 0, 3)),
        "b30": (1, (0, 3, 0)), "b21": (1, (0, 2, 1)), "b12": (1, (0, 1, 2)),
        "b03": (1, (0, 0, 3)),
        "c30": (2, (0, 3, 0)),
    }
    comps = x.components
    return {k: comps[i].coefficient(e) for k, (i, e) in names.items()}


def match_normal_form(x: VectorField):
    """Recognize the z-reduced coordinates of x against the known
    family shapes; returns (rule-id, parameter dict) or None.

    Matching is purely syntactic on the presented coordinates plus the
    families' own exact conditions; no frames are searched here.
    """
    rep = z_reduce(x).rep
    if rep.degree == 1:
        from .stability import is_nilpotent_linear_part

        if is_nilpotent_linear_part(rep):
            return ("deg1-nilpotent", {})
        return None
    if rep.degree != 3:
        return None
    for rule, matcher in (("ss-normal-form", _match_ss),
                          ("stable-m2", _match_stable_m2),
                          ("unstable-m2", _match_unstable_m2)):
        params = matcher(rep)
        if params is not None:
            return (rule, params)
    params = _match_mult3(rep)
    if params is not None:
        pair = local_representation(rep)
        if (pair.f.coefficient((0, 0)) == 0 and pair.g.coefficient((0, 0)) == 0
                and multiplicity_at_origin(pair) >= 3):
            return ("mult3", params)
    return None


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    field: VectorField
    point: ProjPoint
    multiplicity: int
    milnor: int
    verdict: str


def _ss_example() -> VectorField:
    return ss_family(SSParams(b02=F(1), b21=F(4), b12=F(3), c12=F(2)))


def _stable_example() -> VectorField:
    return stable_family(StableParams(
        a10=F(1), a01=F(2), a20=F(-8), a11=F(-16), a02=F(-8),
        a30=F(1), a21=F(1), a12=F(1), a03=F(1)))


def _unstable_example() -> VectorField:
    return unstable_m2_family(UnstableM2Params(
        b11=F(1), b02=F(1), b21=F(1), b12=F(0), b03=F(1)))


def catalog() -> List[CatalogEntry]:
    """Named examples with certified invariants and expected verdicts."""
    entries = [
        CatalogEntry(
            "deg1-nilpotent",
            parse_vector_field("(y) d/dx + (z) d/dy"),
            E0, 1, 3, "Unstable"),
        CatalogEntry(
            "deg2-x1",
            parse_vector_field("(y^2) d/dx + (z^2) d/dy"),
            E0, 2, 7, "Unstable"),
        CatalogEntry(
            "deg2-x2",
            parse_vector_field("(-y^2) d/dx + (y*z - z^2) d/dy + (z^2) d/dz"),
            E0, 2, 7, "Unstable"),
        CatalogEntry(
            "deg2-x3",
            parse_vector_field("(y^2 + z^2) d/dx + (y*z) d/dy"),
            E0, 2, 7, "Unstable"),
        CatalogEntry(
            "deg2-x4",
            parse_vector_field("(-y*z) d/dx + (x*y + z^2) d/dy + (y^2) d/dz"),
            E0, 1, 7, "Stable"),
        CatalogEntry(
            "deg3-mult1",
            parse_vector_field(
                "(5*x*y*z - y^3 + 2*z^3) d/dx"
                " + (-3/2*x^2*y - 3/2*x*z^2 + 9/2*y^2*z) d/dy"
                " + (-3*x*y^2) d/dz"),
            E0, 1, 13, "Stable"),
        CatalogEntry(
            "deg3-mult3",
            parse_vector_field("(y^3 + y^2*z - y*z^2 + z^3) d/dx + (z^3) d/dy"),
            E0, 3, 13, "Unstable"),
        CatalogEntry("deg3-ss", _ss_example(), E0, 2, 13, "StrictlySemistable"),
        CatalogEntry("deg3-stable-m2", _stable_example(), E0, 2, 13, "Stable"),
        CatalogEntry("deg3-unstable-m2", _unstable_example(), E0, 2, 13,
                     "Unstable"),
    ]
    return entries


def catalog_entry(name: str) -> CatalogEntry:
    for entry in catalog():
        if entry.name == name:
            return entry
    raise KeyError(f"unknown catalog entry {name!r}")
