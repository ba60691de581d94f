"""Independent oracles (sympy) and random generators shared by the tests."""

from __future__ import annotations

import random
from fractions import Fraction

import sympy as sp

from degentensor.polyalg import MPoly, polynomial_ring, variable_names
from degentensor.tensor_core import Axis, Tensor3, assoc_matrix, combine_slices


def to_sympy(f: MPoly):
    syms = sp.symbols(list(f.variables))
    expr = sp.Integer(0)
    for mono, c in f.terms.items():
        term = sp.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, mono):
            term *= s**e
        expr += term
    return sp.expand(expr)


def from_sympy(expr, variables) -> MPoly:
    syms = sp.symbols(list(variables))
    poly = sp.Poly(sp.expand(expr), *syms)
    return MPoly(variables, {m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms() if c != 0})


def parse_poly(text: str, variables) -> MPoly:
    """Read a polynomial written in the usual notation (``^`` allowed)."""
    syms = {v: sp.Symbol(v) for v in variables}
    return from_sympy(sp.sympify(text.replace("^", "**"), locals=syms), variables)


def sympy_matrix_det(rows):
    m = sp.Matrix([[sp.Rational(v.numerator, v.denominator) if isinstance(v, Fraction) else v
                    for v in row] for row in rows])
    return m.det()


def coefficient_rank(polys, variables) -> int:
    """Rank of the coefficient vectors of ``polys`` (sympy)."""
    monos = sorted({m for f in polys for m in f.terms})
    if not monos:
        return 0
    rows = [[sp.Rational(f.coefficient(m).numerator, f.coefficient(m).denominator) for m in monos]
            for f in polys]
    return sp.Matrix(rows).rank()


def random_tensor(rng: random.Random, shape, lo=-3, hi=3) -> Tensor3:
    p, q, r = shape
    while True:
        a = Tensor3([[[rng.randint(lo, hi) for _ in range(r)] for _ in range(q)] for _ in range(p)])
        if not a.is_zero():
            return a


def random_invertible(rng: random.Random, n: int, lo=-2, hi=2):
    while True:
        e = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
        if sp.Matrix(e).det() != 0:
            return e


def random_gl_change(rng: random.Random, a: Tensor3) -> Tensor3:
    """Apply random invertible changes of coordinates along all three axes."""
    for axis in Axis:
        a = combine_slices(a, axis, random_invertible(rng, a.shape[axis]))
    return a


def same_span(polys_a, polys_b) -> bool:
    """Equal Q-linear spans of two lists of forms (coefficient ranks via sympy)."""
    variables = (polys_a or polys_b)[0].variables
    ra = coefficient_rank(polys_a, variables)
    return ra == coefficient_rank(polys_b, variables) == coefficient_rank(polys_a + polys_b, variables)


def rename(f: MPoly, variables) -> MPoly:
    return MPoly(tuple(variables), dict(f.terms))


def _embed(f: MPoly, names, offset):
    terms = {}
    for mono, c in f.terms.items():
        full = [0] * len(names)
        full[offset:offset + len(mono)] = mono
        terms[tuple(full)] = c
    return MPoly(names, terms)


def matricial_identities_hold(a: Tensor3) -> bool:
    """Check tY L = tX M, tX N = t(L Z) and M Z = N Y symbolically."""
    p, q, r = a.shape
    names = variable_names("x", p) + variable_names("y", q) + variable_names("z", r)
    gens = polynomial_ring(names)
    xs, ys, zs = gens[:p], gens[p:p + q], gens[p + q:]
    lm = [[_embed(e, names, 0) for e in row] for row in assoc_matrix(a, Axis.X).rows]
    mm = [[_embed(e, names, p) for e in row] for row in assoc_matrix(a, Axis.Y).rows]
    nm = [[_embed(e, names, p + q) for e in row] for row in assoc_matrix(a, Axis.Z).rows]
    zero = MPoly.zero(names)

    def dot(u, v):
        return sum((s * t for s, t in zip(u, v)), zero)

    col = lambda m, k: [row[k] for row in m]  # noqa: E731
    ok = all(dot(ys, col(lm, k)) == dot(xs, col(mm, k)) for k in range(r))
    ok &= all(dot(xs, col(nm, j)) == dot(lm[j], zs) for j in range(q))
    ok &= all(dot(mm[i], zs) == dot(nm[i], ys) for i in range(p))
    return ok
