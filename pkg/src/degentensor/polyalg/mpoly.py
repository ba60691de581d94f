"""Sparse multivariate polynomials with exact rational coefficients.

An :class:`MPoly` lives over a fixed, ordered tuple of variable names and
stores a mapping ``exponent tuple -> Fraction`` with no zero coefficients.
Terms are printed in graded lexicographic order (first variable largest),
which keeps textual output stable.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from ..errors import DimensionError


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def grlex_key(mono: tuple[int, ...]):
    return (sum(mono), mono)


class MPoly:
    """Immutable sparse polynomial over ``variables``."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping | None = None):
        self.variables = tuple(variables)
        nvars = len(self.variables)
        clean: dict[tuple[int, ...], Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise DimensionError(
                    f"monomial {mono} has {len(mono)} exponents, expected {nvars}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = as_fraction(coeff)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], value) -> "MPoly":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def gen(cls, variables: Sequence[str], index: int) -> "MPoly":
        mono = [0] * len(variables)
        mono[index] = 1
        return cls(variables, {tuple(mono): 1})

    @classmethod
    def linear_form(cls, variables: Sequence[str], coeffs: Sequence) -> "MPoly":
        if len(coeffs) != len(variables):
            raise DimensionError("one coefficient per variable required")
        n = len(variables)
        terms = {}
        for i, c in enumerate(coeffs):
            mono = [0] * n
            mono[i] = 1
            terms[tuple(mono)] = c
        return cls(variables, terms)

    # -- basic queries ----------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(m) for m in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.nvars)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in decreasing graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.sorted_terms()[0][1]

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.variables != self.variables:
                raise DimensionError(
                    f"variable sets differ: {self.variables} vs {other.variables}")
            return other
        return MPoly.constant(self.variables, as_fraction(other))

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return MPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            try:
                c = as_fraction(other)
            except TypeError:
                return NotImplemented
            return MPoly(self.variables, {m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return MPoly(self.variables, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = as_fraction(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (1 / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MPoly.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.variables == other.variables and self.terms == other.terms
        try:
            c = as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.terms == ({(0,) * self.nvars: c} if c else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and evaluation -------------------------------------------

    def __call__(self, point: Sequence) -> Fraction:
        return evaluate(self, point)

    def partial(self, index: int) -> "MPoly":
        return partial(self, index)

    def subs_linear(self, images: Sequence["MPoly"]) -> "MPoly":
        """Substitute ``variables[i] -> images[i]`` (any polynomials)."""
        return substitute(self, images)

    # -- printing ---------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.variables, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MPoly({self.variables!r}, {str(self)!r})"


def polynomial_ring(names: Iterable[str]) -> tuple[MPoly, ...]:
    """Return the generators of the polynomial ring over ``names``."""
    names = tuple(names)
    return tuple(MPoly.gen(names, i) for i in range(len(names)))


def variable_names(prefix: str, count: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, count + 1))


def evaluate(f: MPoly, point: Sequence) -> Fraction:
    """Exact value of ``f`` at ``point``."""
    if len(point) != f.nvars:
        raise DimensionError(
            f"point has {len(point)} coordinates, polynomial has {f.nvars} variables")
    vals = [as_fraction(v) for v in point]
    total = Fraction(0)
    for mono, c in f.terms.items():
        term = c
        for v, e in zip(vals, mono):
            if e:
                term *= v ** e
        total += term
    return total


def partial(f: MPoly, index: int) -> MPoly:
    """Formal partial derivative with respect to ``variables[index]``."""
    if not 0 <= index < f.nvars:
        raise DimensionError(f"variable index {index} out of range")
    terms = {}
    for mono, c in f.terms.items():
        e = mono[index]
        if e:
            m = list(mono)
            m[index] = e - 1
            terms[tuple(m)] = c * e
    return MPoly(f.variables, terms)


def substitute(f: MPoly, images: Sequence[MPoly]) -> MPoly:
    if len(images) != f.nvars:
        raise DimensionError("one image per variable required")
    if not images:
        return f
    target = images[0].variables
    result = MPoly.zero(target)
    for mono, c in f.terms.items():
        term = MPoly.constant(target, c)
        for img, e in zip(images, mono):
            if e:
                term = term * img ** e
        result = result + term
    return result


def coefficient_vector(f: MPoly, monomials: Sequence[tuple[int, ...]]) -> list[Fraction]:
    return [f.coefficient(m) for m in monomials]


def monomials_of_degree(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, decreasing grlex."""
    out = []
    # stars and bars over positions of nvars-1 separators
    for bars in combinations(range(degree + nvars - 1), nvars - 1):
        prev = -1
        mono = []
        for b in bars:
            mono.append(b - prev - 1)
            prev = b
        mono.append(degree + nvars - 1 - prev - 1)
        out.append(tuple(mono))
    out.sort(key=grlex_key, reverse=True)
    return out
