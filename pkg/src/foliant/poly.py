"""Exact sparse polynomial arithmetic over the rationals.

A polynomial is a map from exponent tuples to nonzero ``Fraction``
coefficients; the zero polynomial is the empty map.  Two variable
counts are used throughout the package: three variables (x, y, z) for
homogeneous data on the plane and two variables (y, z) for local data
in the chart x = 1.  Everything here is exact; no floats ever enter.

Term order is graded lexicographic with x > y > z, fixed once so that
printing and leading-coefficient extraction are deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import DegenerateResultantError, PolynomialSyntaxError

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]

_NAMES = {2: ("y", "z"), 3: ("x", "y", "z")}


class _MinusInfinity:
    """Degree of the zero polynomial.  A flag, not a number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "MinusInfinity"


MINUS_INFINITY = _MinusInfinity()


def _grlex_key(e: Exponent) -> Tuple[int, Exponent]:
    return (sum(e), e)


class MPoly:
    """Immutable sparse multivariate polynomial with rational coefficients."""

    __slots__ = ("nvars", "terms", "names")

    def __init__(self, nvars: int, terms: Dict[Exponent, Fraction],
                 names: Optional[Tuple[str, ...]] = None):
        if nvars not in (2, 3):
            raise ValueError("only 2- and 3-variable polynomials are supported")
        clean: Dict[Exponent, Fraction] = {}
        for e, c in terms.items():
            e = tuple(int(k) for k in e)
            if len(e) != nvars or any(k < 0 for k in e):
                raise ValueError(f"bad exponent vector {e} for nvars={nvars}")
            c = Fraction(c)
            if c != 0:
                clean[e] = clean.get(e, Fraction(0)) + c
                if clean[e] == 0:
                    del clean[e]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "names", names or _NAMES[nvars])

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("MPoly is immutable")

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Exponent, Fraction],
             names: Tuple[str, ...]) -> "MPoly":
        """Internal constructor: terms already normalized (no zeros,
        valid exponent tuples)."""
        self = object.__new__(cls)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "names", names)
        return self

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "MPoly":
        return MPoly(nvars, {})

    @staticmethod
    def const(nvars: int, c: Scalar) -> "MPoly":
        return MPoly(nvars, {(0,) * nvars: Fraction(c)})

    @staticmethod
    def variable(nvars: int, index: int) -> "MPoly":
        e = [0] * nvars
        e[index] = 1
        return MPoly(nvars, {tuple(e): Fraction(1)})

    @staticmethod
    def monomial(nvars: int, exps: Sequence[int], coeff: Scalar = 1) -> "MPoly":
        return MPoly(nvars, {tuple(exps): Fraction(coeff)})

    # -- predicates and views ----------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    @property
    def degree(self):
        """Total degree, or MINUS_INFINITY for the zero polynomial."""
        if not self.terms:
            return MINUS_INFINITY
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: int):
        if not self.terms:
            return MINUS_INFINITY
        return max(e[var] for e in self.terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        """Leading (exponent, coefficient) under graded lex, x > y > z."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, k: int) -> "MPoly":
        return MPoly(self.nvars,
                     {e: c for e, c in self.terms.items() if sum(e) == k},
                     self.names)

    # -- ring operations ---------------------------------------------

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts in polynomial arithmetic")
            return other
        return MPoly.const(self.nvars, other)

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MPoly._raw(self.nvars, out, self.names)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw(self.nvars,
                          {e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other) -> "MPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            c = Fraction(other)
            if c == 0:
                return MPoly._raw(self.nvars, {}, self.names)
            return MPoly._raw(self.nvars,
                              {e: c * v for e, v in self.terms.items()},
                              self.names)
        other = self._coerce(other)
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return MPoly._raw(self.nvars,
                          {e: c for e, c in out.items() if c}, self.names)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "MPoly":
        c = Fraction(other)
        return MPoly._raw(self.nvars,
                          {e: v / c for e, v in self.terms.items()}, self.names)

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = MPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- evaluation and substitution ---------------------------------

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point dimension mismatch")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for base, k in zip(pt, e):
                if k:
                    v *= base ** k
            total += v
        return total

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MPoly({format_poly(self)!r})"


# ---------------------------------------------------------------------------
# derived operations
# ---------------------------------------------------------------------------


def partial_derivative(p: MPoly, var: int) -> MPoly:
    """Formal partial derivative with respect to variable ``var``."""
    if var >= p.nvars:
        raise ValueError(f"variable index {var} out of range")
    out: Dict[Exponent, Fraction] = {}
    for e, c in p.terms.items():
        if e[var] == 0:
            continue
        f = list(e)
        f[var] -= 1
        out[tuple(f)] = out.get(tuple(f), Fraction(0)) + c * e[var]
    return MPoly(p.nvars, out, p.names)


def substitute_linear(p: MPoly, m) -> MPoly:
    """Compose a 3-variable polynomial with the linear map v -> M v.

    Each variable x_i is replaced by the linear form given by row i of
    M.  Singular matrices are allowed.
    """
    if p.nvars != 3:
        raise ValueError("substitute_linear expects a 3-variable polynomial")
    rows = [MPoly(3, {(1, 0, 0): Fraction(m[i][0]),
                      (0, 1, 0): Fraction(m[i][1]),
                      (0, 0, 1): Fraction(m[i][2])}) for i in range(3)]
    # cache powers of each row form; exponents stay small (<= degree)
    pows: List[Dict[int, MPoly]] = [{0: MPoly.const(3, 1)} for _ in range(3)]

    def power(i: int, k: int) -> MPoly:
        if k not in pows[i]:
            pows[i][k] = power(i, k - 1) * rows[i]
        return pows[i][k]

    total = MPoly.zero(3)
    for e, c in p.terms.items():
        term = MPoly.const(3, c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        total = total + term
    return total


def dehomogenize(p: MPoly, chart: int) -> MPoly:
    """Set the chart variable to 1; the result lives in the remaining two."""
    if p.nvars != 3:
        raise ValueError("dehomogenize expects a 3-variable polynomial")
    if chart not in (0, 1, 2):
        raise ValueError("chart must be 0, 1 or 2")
    keep = [i for i in range(3) if i != chart]
    out: Dict[Exponent, Fraction] = {}
    for e, c in p.terms.items():
        f = (e[keep[0]], e[keep[1]])
        out[f] = out.get(f, Fraction(0)) + c
    names = tuple(p.names[i] for i in keep)
    return MPoly(2, out, names)


def homogeneous_decomposition(p: MPoly) -> List[MPoly]:
    """Nonzero homogeneous components, ascending by degree."""
    if not p.terms:
        return []
    degs = sorted({sum(e) for e in p.terms})
    return [p.homogeneous_part(d) for d in degs]


def order_of_vanishing(p: MPoly, var: Optional[int] = None):
    """Total order (degree of lowest nonzero form), or the largest k with
    var^k dividing p when ``var`` is given.  Zero gives MINUS_INFINITY."""
    if not p.terms:
        return MINUS_INFINITY
    if var is None:
        return min(sum(e) for e in p.terms)
    return min(e[var] for e in p.terms)


def divide_exact(p: MPoly, d: MPoly) -> MPoly:
    """Exact division p / d; raises ValueError if d does not divide p."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if len(d.terms) == 1:
        (de, dc), = d.terms.items()
        out: Dict[Exponent, Fraction] = {}
        for e, c in p.terms.items():
            qe = tuple(a - b for a, b in zip(e, de))
            if any(k < 0 for k in qe):
                raise ValueError("inexact polynomial division")
            out[qe] = c / dc
        return MPoly._raw(p.nvars, out, p.names)
    q = MPoly.zero(p.nvars)
    r = p
    de, dc = d.leading_term()
    while not r.is_zero():
        re, rc = r.leading_term()
        qe = tuple(a - b for a, b in zip(re, de))
        if any(k < 0 for k in qe):
            raise ValueError("inexact polynomial division")
        t = MPoly.monomial(p.nvars, qe, rc / dc)
        q = q + t
        r = r - t * d
    return q


# ---------------------------------------------------------------------------
# gcd
# ---------------------------------------------------------------------------
#
# Recursive content/primitive-part Euclid: view the polynomial in its last
# variable with coefficients in the smaller ring, take contents via the
# recursion, run a pseudo-remainder sequence on primitive parts.  Sizes in
# this package are tiny, so no subresultant coefficient control is needed
# beyond re-priming each step.


def _nonzero_vars(terms: Dict[Exponent, Fraction], nvars: int) -> List[int]:
    used = [False] * nvars
    for e in terms:
        for i, k in enumerate(e):
            if k:
                used[i] = True
    return [i for i, u in enumerate(used) if u]


def _as_univariate(p: MPoly, var: int) -> List[MPoly]:
    """Dense coefficient list in ``var`` (ascending), coefficients with the
    same variable count but zero exponent in ``var``."""
    deg = p.degree_in(var)
    d = 0 if deg is MINUS_INFINITY else deg
    coeffs: List[Dict[Exponent, Fraction]] = [dict() for _ in range(d + 1)]
    for e, c in p.terms.items():
        f = list(e)
        k = f[var]
        f[var] = 0
        coeffs[k][tuple(f)] = c
    return [MPoly(p.nvars, t, p.names) for t in coeffs]


def _from_univariate(coeffs: Sequence[MPoly], var: int, nvars: int) -> MPoly:
    out: Dict[Exponent, Fraction] = {}
    for k, c in enumerate(coeffs):
        for e, v in c.terms.items():
            f = list(e)
            f[var] += k
            f = tuple(f)
            out[f] = out.get(f, Fraction(0)) + v
    return MPoly(nvars, out)


def primitive_scale(p: MPoly) -> MPoly:
    """Scale by a positive rational to coprime integer coefficients.

    Keeps coefficient growth in remainder sequences under control; the
    result generates the same ideal as the input.
    """
    if p.is_zero():
        return p
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // _int_gcd(den, c.denominator)
    num = 0
    for c in p.terms.values():
        num = _int_gcd(num, abs(c.numerator) * (den // c.denominator))
    scale = Fraction(den, num)
    if scale == 1:
        return p
    return p * scale


def _content(p: MPoly, var: int) -> MPoly:
    cs = [c for c in _as_univariate(p, var) if not c.is_zero()]
    g = cs[0]
    for c in cs[1:]:
        g = _gcd_rec(g, c)
        if g.degree == 0:
            break
    return g


def _monic(p: MPoly) -> MPoly:
    if p.is_zero():
        return p
    _, lc = p.leading_term()
    return p / lc


def _pseudo_rem_list(r: List[MPoly], g: List[MPoly]) -> List[MPoly]:
    """Remainder-like reduction on dense coefficient lists (ascending in
    the main variable); the result is a constant multiple of the true
    pseudo-remainder, which is all the primitive sequence needs."""
    gd = len(g) - 1
    lc_g = g[-1]
    r = list(r)
    while len(r) - 1 >= gd:
        r_lc = r[-1]
        shift = len(r) - 1 - gd
        new = [c * lc_g for c in r[:-1]]
        for i in range(gd):
            new[shift + i] = new[shift + i] - g[i] * r_lc
        while new and new[-1].is_zero():
            new.pop()
        r = _scale_list(new)  # keep the integers small at every step
        if not r:
            break
    return r


def _scale_list(cs: List[MPoly]) -> List[MPoly]:
    """Scale a coefficient list jointly to coprime integer coefficients."""
    den = 1
    num = 0
    for c in cs:
        for v in c.terms.values():
            den = den * v.denominator // _int_gcd(den, v.denominator)
    for c in cs:
        for v in c.terms.values():
            num = _int_gcd(num, abs(v.numerator) * (den // v.denominator))
    if num == 0:
        return cs
    scale = Fraction(den, num)
    if scale == 1:
        return cs
    return [c * scale for c in cs]


def _gcd_rec(a: MPoly, b: MPoly) -> MPoly:
    if a.is_zero():
        return _monic(b)
    if b.is_zero():
        return _monic(a)
    a = primitive_scale(a)
    b = primitive_scale(b)
    vars_used = sorted(set(_nonzero_vars(a.terms, a.nvars))
                       | set(_nonzero_vars(b.terms, b.nvars)))
    if not vars_used:
        return MPoly.const(a.nvars, 1)
    var = vars_used[-1]
    au, bu = _as_univariate(a, var), _as_univariate(b, var)
    if len(au) == 1 or len(bu) == 1:
        # one input is free of the main variable: gcd of its content with
        # the other's content
        ca, cb = _content(a, var), _content(b, var)
        return _monic(_gcd_rec(ca, cb))
    ca, cb = _content(a, var), _content(b, var)
    cont = _gcd_rec(ca, cb)
    f = _scale_list([q for q in _as_univariate(divide_exact(a, ca), var)])
    g = _scale_list([q for q in _as_univariate(divide_exact(b, cb), var)])
    if len(f) < len(g):
        f, g = g, f
    while True:
        r = _scale_list(_pseudo_rem_list(f, g))
        if not r:
            gp = _from_univariate(g, var, a.nvars)
            gp = divide_exact(gp, _content(gp, var))
            return _monic(cont * gp)
        rp = _from_univariate(r, var, a.nvars)
        rp = divide_exact(rp, _content(rp, var))
        f, g = g, _as_univariate(rp, var)


def gcd_bivariate(a: MPoly, b: MPoly) -> MPoly:
    """Gcd in Q[y, z], primitive, leading graded-lex coefficient 1."""
    if a.nvars != 2 or b.nvars != 2:
        raise ValueError("gcd_bivariate expects 2-variable polynomials")
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    return _gcd_rec(a, b)


def gcd_multivariate(a: MPoly, b: MPoly) -> MPoly:
    """Gcd of polynomials with the same variable count (2 or 3)."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    return _gcd_rec(a, b)


# ---------------------------------------------------------------------------
# resultants
# ---------------------------------------------------------------------------
#
# Pinned convention: the Sylvester matrix lists coefficients by ascending
# power of the eliminated variable, rows of the first argument first.
# Binary forms are read as polynomials in z with formal degrees equal to
# their homogeneous degrees, which makes the scalar resultant vanish
# exactly when the forms share a projective root (including [1 : 0]).


def _sylvester(fc: List[MPoly], gc: List[MPoly], m: int, n: int,
               nvars: int) -> List[List[MPoly]]:
    size = m + n
    zero = MPoly.zero(nvars)

    def row(coeffs: List[MPoly], shift: int) -> List[MPoly]:
        r = [zero] * size
        for k, c in enumerate(coeffs):
            r[shift + k] = c
        return r

    rows = [row(fc, s) for s in range(n)]
    rows += [row(gc, s) for s in range(m)]
    return rows


def _det_bareiss(rows: List[List[MPoly]], nvars: int) -> MPoly:
    """Fraction-free determinant; divisions are exact in the polynomial ring."""
    n = len(rows)
    m = [r[:] for r in rows]
    sign = 1
    prev = MPoly.const(nvars, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if pivot_row is None:
                return MPoly.zero(nvars)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = divide_exact(num, prev)
            m[i][k] = MPoly.zero(nvars)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def resultant_in_variable(f: MPoly, g: MPoly, var: int) -> MPoly:
    """Sylvester resultant with respect to one variable.

    The result is a polynomial in the remaining variables (returned with
    the same variable count, the eliminated variable absent).
    """
    if f.nvars != g.nvars:
        raise ValueError("mixed variable counts")
    df, dg = f.degree_in(var), g.degree_in(var)
    if df is MINUS_INFINITY or dg is MINUS_INFINITY or df < 1 or dg < 1:
        raise DegenerateResultantError(
            f"both inputs must have positive degree in variable {var}")
    fc = _as_univariate(f, var)
    gc = _as_univariate(g, var)
    return _det_bareiss(_sylvester(fc, gc, df, dg, f.nvars), f.nvars)


def resultant_binary_forms(f: MPoly, g: MPoly) -> Fraction:
    """Scalar resultant of two homogeneous 2-variable forms.

    Zero exactly when the forms share a projective root.
    """
    if f.nvars != 2 or g.nvars != 2:
        raise ValueError("binary resultant expects 2-variable forms")
    if f.is_zero() or g.is_zero():
        raise ValueError("binary resultant of the zero form is undefined")
    if not f.is_homogeneous() or not g.is_homogeneous():
        raise ValueError("binary resultant expects homogeneous forms")
    m, n = f.degree, g.degree
    if m == 0:
        return f.coefficient((0, 0)) ** n
    if n == 0:
        return g.coefficient((0, 0)) ** m
    # ascending z-coefficients with formal length from the homogeneous degree
    fc = [MPoly.const(2, f.coefficient((m - k, k))) for k in range(m + 1)]
    gc = [MPoly.const(2, g.coefficient((n - k, k))) for k in range(n + 1)]
    d = _det_bareiss(_sylvester(fc, gc, m, n, 2), 2)
    return d.coefficient((0, 0))


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def format_poly(p: MPoly) -> str:
    """Canonical text form: graded-lex descending terms, explicit '*'."""
    if not p.terms:
        return "0"
    parts: List[str] = []
    for e in sorted(p.terms, key=_grlex_key, reverse=True):
        c = p.terms[e]
        factors = []
        for name, k in zip(p.names, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\n\r":
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise PolynomialSyntaxError("expected an integer", start)
        return int(self.text[start:self.pos])


def parse_poly(text: str, nvars: int, offset: int = 0) -> MPoly:
    """Parse the flat polynomial syntax: rational coefficients written as
    ``a`` or ``a/b``, variables x, y, z (or y, z for two variables),
    ``^`` for powers, ``*`` optional between factors, terms joined by
    ``+`` and ``-``.
    """
    names = _NAMES[nvars]
    var_index = {n: i for i, n in enumerate(names)}
    tz = _Tokenizer(text)
    total = MPoly.zero(nvars)
    first = True
    while True:
        ch = tz.peek()
        if ch == "":
            if first:
                raise PolynomialSyntaxError("empty polynomial", offset + tz.pos)
            break
        sign = 1
        if ch in "+-":
            if ch == "-":
                sign = -1
            tz.pos += 1
            ch = tz.peek()
        elif not first:
            raise PolynomialSyntaxError(f"expected '+' or '-', found {ch!r}",
                                        offset + tz.pos)
        first = False
        coeff = Fraction(sign)
        exps = [0] * nvars
        saw_factor = False
        while True:
            ch = tz.peek()
            if ch.isdigit():
                num = tz.take_int()
                if tz.peek() == "/":
                    tz.pos += 1
                    den = tz.take_int()
                    if den == 0:
                        raise PolynomialSyntaxError("zero denominator", offset + tz.pos)
                    coeff *= Fraction(num, den)
                else:
                    coeff *= num
                saw_factor = True
            elif ch in var_index:
                tz.pos += 1
                k = 1
                if tz.peek() == "^":
                    tz.pos += 1
                    k = tz.take_int()
                exps[var_index[ch]] += k
                saw_factor = True
            elif ch.isalpha():
                raise PolynomialSyntaxError(
                    f"unknown variable {ch!r} (expected one of {', '.join(names)})",
                    offset + tz.pos)
            else:
                break
            if tz.peek() == "*":
                tz.pos += 1
                if tz.peek() in ("", "+", "-"):
                    raise PolynomialSyntaxError("dangling '*'", offset + tz.pos)
        if not saw_factor:
            raise PolynomialSyntaxError("expected a term", offset + tz.pos)
        total = total + MPoly.monomial(nvars, exps, coeff)
    return total


def rational_root(c: Fraction, n: int) -> Optional[Fraction]:
    """Exact rational n-th root of c, or None when no such root exists."""
    if n <= 0:
        raise ValueError("root order must be positive")
    if c == 0:
        return Fraction(0)
    if c < 0 and n % 2 == 0:
        return None
    sign = -1 if c < 0 else 1
    num, den = abs(c.numerator), c.denominator

    def iroot(v: int) -> Optional[int]:
        if v == 0:
            return 0
        r = round(v ** (1.0 / n))
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand ** n == v:
                return cand
        return None

    rn, rd = iroot(num), iroot(den)
    if rn is None or rd is None:
        return None
    return Fraction(sign * rn, rd)
