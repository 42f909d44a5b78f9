"""Exact rational scalars and a sparse multivariate polynomial engine.

A polynomial is a mapping from exponent tuples to rational coefficients over
a fixed, ordered variable table:

    MultiPoly(("d1", "d2"), {(2, 0): 1, (0, 2): -1})   # d1^2 - d2^2

Coefficients are `fractions.Fraction`, so every operation is exact: counts
with cubic terms at degrees in the hundreds stay precise because Python
integers are arbitrary precision.  Zero coefficients are never stored, and
values are immutable after construction, so they may be shared freely
between threads.

Arithmetic requires both operands to live on the same variable table;
`aligned()` merges tables when callers hold values from different contexts.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import AlignmentError

# Exact rationals are stdlib fractions: always in lowest terms, positive
# denominator, arbitrary-precision numerator.
BigRational = Fraction

Exponent = tuple[int, ...]
ScalarLike = Union[int, Fraction, "MultiPoly"]


def grlex_key(exponent: Exponent) -> tuple[int, Exponent]:
    """Sort key realizing graded-lexicographic order (higher sorts later)."""
    return (sum(exponent), exponent)


class MultiPoly:
    """A sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str],
                 terms: Mapping[Exponent, int | Fraction] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables!r}")
        clean: dict[Exponent, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != len(variables):
                raise ValueError(
                    f"exponent {exp!r} does not match variables {variables!r}")
            if any(e < 0 or not isinstance(e, int) for e in exp):
                raise ValueError(f"exponents must be nonnegative integers: {exp!r}")
            coeff = Fraction(coeff)
            if coeff:
                clean[exp] = clean.get(exp, Fraction(0)) + coeff
        object.__setattr__(self, "vars", variables)
        object.__setattr__(self, "terms",
                           {e: c for e, c in clean.items() if c})

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("MultiPoly values are immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, value: int | Fraction,
              variables: Sequence[str] = ()) -> MultiPoly:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): Fraction(value)})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> MultiPoly:
        variables = tuple(variables)
        exp = [0] * len(variables)
        exp[variables.index(name)] = 1
        return cls(variables, {tuple(exp): Fraction(1)})

    @classmethod
    def zero(cls, variables: Sequence[str] = ()) -> MultiPoly:
        return cls(variables, {})

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Maximum total degree among terms; 0 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=0)

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial.  Raises if any variable occurs."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self.canonical_string()}")
        return next(iter(self.terms.values()))

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self.terms.get(tuple(exponent), Fraction(0))

    def used_vars(self) -> tuple[str, ...]:
        used = [False] * len(self.vars)
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    # -- table management --------------------------------------------------

    def extended(self, variables: Sequence[str]) -> MultiPoly:
        """Re-embed into a table containing all current variables."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        try:
            pos = [variables.index(v) for v in self.vars]
        except ValueError:
            raise AlignmentError(
                f"cannot embed table {self.vars!r} into {variables!r}")
        terms = {}
        for exp, coeff in self.terms.items():
            new = [0] * len(variables)
            for p, e in zip(pos, exp):
                new[p] = e
            terms[tuple(new)] = coeff
        return MultiPoly(variables, terms)

    def _check_table(self, other: MultiPoly) -> None:
        if self.vars != other.vars:
            raise AlignmentError(
                f"variable tables differ: {self.vars!r} vs {other.vars!r}")

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, value: ScalarLike) -> MultiPoly | None:
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return MultiPoly.const(value, self.vars)
        return None

    def __add__(self, other: ScalarLike) -> MultiPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._check_table(other)
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + coeff
        return MultiPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: ScalarLike) -> MultiPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> MultiPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: ScalarLike) -> MultiPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._check_table(other)
        terms: dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                terms[exp] = terms.get(exp, Fraction(0)) + ca * cb
        return MultiPoly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> MultiPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial power must be a natural number: {exponent!r}")
        result = MultiPoly.const(1, self.vars)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.vars) if not isinstance(other, MultiPoly) else other
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.vars == other.vars:
            return self.terms == other.terms
        a, b = aligned(self, other)
        return a.terms == b.terms

    __hash__ = None  # mutable mapping inside; identity hashing would mislead

    # -- calculus and substitution ------------------------------------------

    def derivative(self, name: str) -> MultiPoly:
        i = self.vars.index(name)
        terms: dict[Exponent, Fraction] = {}
        for exp, coeff in self.terms.items():
            if exp[i] == 0:
                continue
            new = list(exp)
            new[i] -= 1
            key = tuple(new)
            terms[key] = terms.get(key, Fraction(0)) + coeff * exp[i]
        return MultiPoly(self.vars, terms)

    def substitute(self, values: Mapping[str, ScalarLike]) -> MultiPoly:
        """Replace variables by polynomials (or scalars) and expand.

        The result lives on the table made of the untouched variables
        followed by any new variables the replacement values introduce.
        """
        kept = tuple(v for v in self.vars if v not in values)
        table = list(kept)
        images: dict[str, MultiPoly] = {}
        for name in self.vars:
            if name in values:
                val = values[name]
                if not isinstance(val, MultiPoly):
                    val = MultiPoly.const(val)
                for v in val.vars:
                    if v not in table:
                        table.append(v)
                images[name] = val
        table_t = tuple(table)
        result = MultiPoly.zero(table_t)
        lifted = {name: img.extended(table_t) for name, img in images.items()}
        for exp, coeff in self.terms.items():
            term = MultiPoly.const(coeff, table_t)
            for name, e in zip(self.vars, exp):
                if e == 0:
                    continue
                factor = lifted.get(name)
                if factor is None:
                    factor = MultiPoly.variable(name, table_t)
                term = term * factor ** e
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, int | Fraction]) -> Fraction:
        """Evaluate at a rational point; every variable must be assigned."""
        missing = [v for v in self.vars if v not in values]
        if missing:
            raise ValueError(f"unassigned variables: {missing}")
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            term = coeff
            for name, e in zip(self.vars, exp):
                if e:
                    term *= Fraction(values[name]) ** e
            total += term
        return total

    # -- printing ------------------------------------------------------------

    def canonical_string(self) -> str:
        """Deterministic rendering: graded-lex descending in the declared
        variable order, `*` between factors, `^` for powers, unit
        coefficients suppressed before variables."""
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for exp in sorted(self.terms, key=grlex_key, reverse=True):
            coeff = self.terms[exp]
            body = _term_body(abs(coeff), self.vars, exp)
            if not pieces:
                pieces.append(body if coeff > 0 else "-" + body)
            else:
                pieces.append((" + " if coeff > 0 else " - ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({self.canonical_string()!r})"


def _term_body(coeff: Fraction, variables: tuple[str, ...], exp: Exponent) -> str:
    factors = []
    for name, e in zip(variables, exp):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if not factors:
        return str(coeff)
    if coeff != 1:
        factors.insert(0, str(coeff))
    return "*".join(factors)


def aligned(*polys: MultiPoly) -> tuple[MultiPoly, ...]:
    """Re-embed polynomials on the merged variable table.

    The merge keeps the first operand's order and appends unseen variables
    in the order the later operands declare them.
    """
    merged: list[str] = []
    for p in polys:
        for v in p.vars:
            if v not in merged:
                merged.append(v)
    table = tuple(merged)
    return tuple(p.extended(table) for p in polys)


def as_poly(value: ScalarLike, variables: Sequence[str] = ()) -> MultiPoly:
    """Coerce an int or Fraction to a constant polynomial; pass polys through."""
    if isinstance(value, MultiPoly):
        return value
    return MultiPoly.const(value, variables)


def poly_sum(items: Iterable[ScalarLike]) -> MultiPoly:
    """Sum over possibly differently-tabled values, aligning as needed."""
    polys = [as_poly(v) for v in items]
    if not polys:
        return MultiPoly.zero()
    polys = aligned(*polys)
    total = polys[0]
    for p in polys[1:]:
        total = total + p
    return total
