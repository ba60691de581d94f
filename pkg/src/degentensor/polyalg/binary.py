"""Binary forms: resultants, discriminants, GCDs and root multiplicities.

A binary form ``f(x1, x2)`` of degree ``d`` is handled through its
coefficient list ``c_0..c_d`` (``c_i`` multiplies ``x1^(d-i) x2^i``). Its
projective roots split into the point ``(1:0)``, whose multiplicity is the
power of ``x2`` dividing ``f``, and the roots ``(t:1)`` of the
dehomogenization ``f(t, 1)``. No root is ever extracted except rational ones.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm
from typing import Sequence

from ..errors import DimensionError
from . import linalg
from .mpoly import MPoly

# univariate polynomials below are ascending coefficient lists over Fraction


def _trim(p: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        f = r[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            r[shift + i] -= f * c
        r = _trim(r)
    return _trim(q), r


def _monic(p: list[Fraction]) -> list[Fraction]:
    p = _trim(p)
    return [c / p[-1] for c in p] if p else p


def _ugcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def _deriv(p: list[Fraction]) -> list[Fraction]:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _uexact_div(a, b):
    q, r = _divmod(a, b)
    assert not r, "inexact polynomial division"
    return q


def _yun(p: list[Fraction]) -> list[list[Fraction]]:
    """Squarefree decomposition: ``p = lc * prod(out[i] ** (i+1))``."""
    p = _monic(p)
    if len(p) <= 1:
        return []
    dp = _deriv(p)
    a = _ugcd(p, dp)
    b = _uexact_div(p, a)
    c = _uexact_div(dp, a)
    d = [x - y for x, y in _pad(c, _deriv(b))]
    out = []
    while len(_trim(b)) > 1:
        a = _ugcd(b, d)
        out.append(a)
        b = _uexact_div(b, a)
        c = _uexact_div(d, a)
        d = [x - y for x, y in _pad(c, _deriv(b))]
    return out


def _pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return zip(a, b)


# -- conversion -------------------------------------------------------------


def _check_binary(f: MPoly) -> None:
    if f.nvars != 2:
        raise DimensionError(f"binary form expected, got {f.nvars} variables")
    if not f.is_homogeneous():
        raise ValueError(f"{f} is not homogeneous")


def binary_coefficients(f: MPoly, degree: int | None = None) -> list[Fraction]:
    """``[c_0, ..., c_d]`` with ``c_i`` the coefficient of ``x1^(d-i) x2^i``."""
    _check_binary(f)
    d = f.degree() if degree is None else degree
    if d < 0:
        return []
    return [f.coefficient((d - i, i)) for i in range(d + 1)]


def _split(f: MPoly) -> tuple[int, list[Fraction]]:
    """``f = x2^e * F(x1, x2)`` with ``F(t, 1)`` returned ascending in ``t``."""
    c = binary_coefficients(f)
    d = len(c) - 1
    e = next(i for i, x in enumerate(c) if x)
    # F(t,1) = sum_{i>=e} c_i t^(d-i)
    uni = [c[d - k] for k in range(d - e + 1)]
    return e, _trim(uni)


def _from_split(variables, e: int, uni: list[Fraction]) -> MPoly:
    deg = len(uni) - 1
    terms = {(k, deg - k + e): c for k, c in enumerate(uni)}
    return MPoly(variables, terms)


# -- public operations ------------------------------------------------------


def sylvester_matrix(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[list[Fraction]]:
    """Sylvester matrix of two coefficient lists (highest power of x1 first)."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + list(a) + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + list(b) + [Fraction(0)] * (size - n - 1 - i))
    return rows


def _resultant_coeffs(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) + len(b) == 2:
        return Fraction(1)
    return linalg.det(sylvester_matrix(a, b))


def resultant_binary(f: MPoly, g: MPoly) -> Fraction:
    """Resultant of two nonzero binary forms via the Sylvester matrix."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero form")
    if f.variables != g.variables:
        raise DimensionError("forms live over different variables")
    return _resultant_coeffs(binary_coefficients(f), binary_coefficients(g))


def discriminant_binary(f: MPoly) -> Fraction:
    """Discriminant of a binary form of degree ``d >= 2``.

    Degree 2 gives ``b^2 - 4ac``. In general the value is
    ``(-1)^(d(d-1)/2) d^(2-d) Res(df/dx1, df/dx2)``, which equals the classical
    discriminant ``(-1)^(d(d-1)/2) Res(f~, f~')/lc(f~)`` of the
    dehomogenization and stays valid when ``(1:0)`` is a root.
    """
    if f.is_zero():
        raise ValueError("discriminant of the zero form")
    _check_binary(f)
    d = f.degree()
    if d < 2:
        raise ValueError(f"discriminant needs degree >= 2, got {d}")
    if d == 2:
        a, b, c = binary_coefficients(f)
        return b * b - 4 * a * c
    fx = binary_coefficients(f.partial(0), d - 1) if f.partial(0) else [Fraction(0)] * d
    fy = binary_coefficients(f.partial(1), d - 1) if f.partial(1) else [Fraction(0)] * d
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * _resultant_coeffs(fx, fy) / Fraction(d) ** (d - 2)


def gcd_binary(forms: Sequence[MPoly]) -> MPoly:
    """Monic GCD of binary forms; the zero form when every input is zero."""
    forms = list(forms)
    if not forms:
        raise ValueError("gcd of an empty family")
    variables = forms[0].variables
    for f in forms:
        _check_binary(f)
        if f.variables != variables:
            raise DimensionError("forms live over different variables")
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        return MPoly.zero(variables)
    e_min = None
    g: list[Fraction] = []
    for f in nonzero:
        e, uni = _split(f)
        e_min = e if e_min is None else min(e_min, e)
        g = _ugcd(g, uni) if g else _monic(uni)
    return _from_split(variables, e_min, g)


def squarefree_structure(f: MPoly) -> tuple[int, ...]:
    """Multiplicities of the projective roots of ``f`` over C, descending."""
    if f.is_zero():
        raise ValueError("root structure of the zero form")
    e, uni = _split(f)
    mults = [e] if e else []
    for i, block in enumerate(_yun(uni), start=1):
        mults.extend([i] * (len(block) - 1))
    return tuple(sorted(mults, reverse=True))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
    return small + large[::-1]


def rational_roots(p: list[Fraction]) -> list[Fraction]:
    """Distinct rational roots of a nonzero univariate polynomial."""
    p = _trim(p)
    if not p:
        raise ValueError("roots of the zero polynomial")
    roots = []
    while p and not p[0]:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        p = p[1:]
    if len(p) <= 1:
        return roots
    den = lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    cands = set()
    for num in _divisors(ints[0]):
        for d in _divisors(ints[-1]):
            cands.add(Fraction(num, d))
            cands.add(Fraction(-num, d))
    for x in sorted(cands):
        val = Fraction(0)
        for c in reversed(p):
            val = val * x + c
        if not val:
            roots.append(x)
    return roots


def root_structure(f: MPoly) -> tuple[list[tuple[tuple[Fraction, Fraction], int]], list[tuple[int, int]]]:
    """Rational projective roots with multiplicities, plus irrational blocks.

    Returns ``(points, blocks)``: ``points`` lists ``((a, b), m)`` for the root
    ``(a:b)`` of multiplicity ``m``; ``blocks`` lists ``(k, m)`` meaning ``k``
    distinct non-rational roots each of multiplicity ``m``.
    """
    if f.is_zero():
        raise ValueError("root structure of the zero form")
    e, uni = _split(f)
    points = []
    blocks = []
    if e:
        points.append(((Fraction(1), Fraction(0)), e))
    for mult, block in enumerate(_yun(uni), start=1):
        deg = len(block) - 1
        if deg <= 0:
            continue
        rts = rational_roots(block)
        for t in rts:
            points.append(((t, Fraction(1)), mult))
        if deg > len(rts):
            blocks.append((deg - len(rts), mult))
    return points, blocks
