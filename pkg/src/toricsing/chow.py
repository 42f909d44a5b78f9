"""Divisor-level model of a compact toric orbifold and its intersection calculus.

A `ToricModel` stores the Picard rank, the classes of the torus-invariant
divisors in a chosen Picard basis, and the top-degree intersection tensor:
the linear functional sending each degree-n monomial in the Picard
generators to its orbifold integral.  No middle-degree relations are
imposed; every formula downstream funnels through a top-degree integral,
where the tensor alone determines the answer, so the ring is kept free.

`ChowElement` values are polynomials in the Picard generators whose
coefficients may themselves be polynomials in formal degree symbols.  The
grading that matters is total degree in the generators only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .errors import UnsupportedModelError
from .exactalg import MultiPoly, ScalarLike, aligned, as_poly

# A scalar expression: an exact rational, or a polynomial in degree symbols.
ScalarExpr = MultiPoly

# A Picard-basis vector with scalar-expression entries.
ClassExpr = tuple  # length = model rank


@dataclass
class ToricModel:
    """Intersection data of a compact toric orbifold.

    divisor_classes holds the n+r classes [D_i] in the Picard basis; the
    tensor maps exponent vectors of total degree n to integrals (omitted
    keys integrate to zero).  chern_override supplies Chern classes directly
    for models whose divisor lists are not recorded.  radial, when present,
    is the r x (n+r) integer matrix of diagonal radial vector field
    coefficients.  Values are immutable by convention after construction.
    """

    name: str
    dim: int
    rank: int
    gens: tuple[str, ...]
    divisor_classes: tuple[tuple[int, ...], ...] | None
    tensor: dict[tuple[int, ...], Fraction]
    chern_override: dict[int, "ChowElement"] | None = None
    smooth: bool = True
    radial: tuple[tuple[int, ...], ...] | None = None
    coord_names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.dim < 1 or self.rank < 1:
            raise ValueError("dim and rank must be positive")
        self.gens = tuple(self.gens)
        if len(self.gens) != self.rank:
            raise ValueError(f"expected {self.rank} generator names, got {self.gens!r}")
        if self.divisor_classes is not None:
            self.divisor_classes = tuple(tuple(v) for v in self.divisor_classes)
            if len(self.divisor_classes) != self.dim + self.rank:
                raise ValueError(
                    f"expected {self.dim + self.rank} divisor classes, "
                    f"got {len(self.divisor_classes)}")
            for v in self.divisor_classes:
                if len(v) != self.rank:
                    raise ValueError(f"divisor class {v!r} has wrong rank")
        self.tensor = {tuple(k): Fraction(v) for k, v in self.tensor.items()
                       if Fraction(v)}
        for key in self.tensor:
            if len(key) != self.rank or any(e < 0 for e in key):
                raise ValueError(f"bad tensor key {key!r}")
            if sum(key) != self.dim:
                raise ValueError(
                    f"tensor key {key!r} has total degree {sum(key)}, expected {self.dim}")
        if self.divisor_classes is None:
            override = self.chern_override or {}
            missing = [j for j in range(1, self.dim + 1) if j not in override]
            if missing:
                raise ValueError(
                    "model needs divisor classes or Chern classes for every "
                    f"degree 1..{self.dim}; missing {missing}")
        if self.radial is not None:
            self.radial = tuple(tuple(row) for row in self.radial)
            if len(self.radial) != self.rank or any(
                    len(row) != self.dim + self.rank for row in self.radial):
                raise ValueError("radial data must be an r x (n+r) matrix")
        if not self.coord_names:
            self.coord_names = tuple(f"z{i}" for i in range(self.dim + self.rank))
        elif len(self.coord_names) != self.dim + self.rank:
            raise ValueError("coordinate table must have n+r names")


@dataclass
class ChowElement:
    """Polynomial in Picard generators with scalar-expression coefficients.

    The generator symbols form a prefix of the underlying variable table;
    any further variables are formal degree symbols and take no part in the
    grading.
    """

    gens: tuple[str, ...]
    poly: MultiPoly

    def __post_init__(self):
        self.gens = tuple(self.gens)
        if self.poly.vars[:len(self.gens)] != self.gens:
            raise ValueError(
                f"generators {self.gens!r} must prefix the table {self.poly.vars!r}")

    # -- ring structure ----------------------------------------------------

    def _merge(self, other: ChowElement) -> tuple[MultiPoly, MultiPoly]:
        if self.gens != other.gens:
            raise ValueError(f"generator mismatch: {self.gens!r} vs {other.gens!r}")
        return aligned(self.poly, other.poly)

    def _coerce(self, value) -> ChowElement | None:
        if isinstance(value, ChowElement):
            return value
        if isinstance(value, (int, Fraction)):
            return ChowElement(self.gens, MultiPoly.const(value, self.poly.vars))
        if isinstance(value, MultiPoly):
            # scalar expression: degree symbols only, no generator collisions
            if any(v in self.gens for v in value.used_vars()):
                raise ValueError("degree symbols may not collide with generators")
            extra = tuple(v for v in value.vars if v not in self.gens)
            return ChowElement(self.gens, value.extended(self.gens + extra))
        return None

    def __add__(self, other) -> ChowElement:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._merge(other)
        return ChowElement(self.gens, a + b)

    __radd__ = __add__

    def __neg__(self) -> ChowElement:
        return ChowElement(self.gens, -self.poly)

    def __sub__(self, other) -> ChowElement:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> ChowElement:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._merge(other)
        return ChowElement(self.gens, a * b)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> ChowElement:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("power must be a natural number")
        result = unit_element(self.gens, self.poly.vars)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChowElement):
            coerced = self._coerce(other)
            if coerced is None:
                return NotImplemented
            other = coerced
        return self.gens == other.gens and self.poly == other.poly

    __hash__ = None

    # -- grading -------------------------------------------------------------

    def picard_degrees(self) -> dict[int, ChowElement]:
        """Split into homogeneous parts by total degree in the generators."""
        r = len(self.gens)
        parts: dict[int, dict] = {}
        for exp, coeff in self.poly.terms.items():
            j = sum(exp[:r])
            parts.setdefault(j, {})[exp] = coeff
        return {j: ChowElement(self.gens, MultiPoly(self.poly.vars, t))
                for j, t in sorted(parts.items())}

    def picard_part(self, j: int) -> ChowElement:
        r = len(self.gens)
        terms = {exp: c for exp, c in self.poly.terms.items() if sum(exp[:r]) == j}
        return ChowElement(self.gens, MultiPoly(self.poly.vars, terms))

    def is_pure_degree(self) -> int | None:
        degrees = {sum(exp[:len(self.gens)]) for exp in self.poly.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def __repr__(self) -> str:
        return f"ChowElement({self.poly.canonical_string()!r})"


def unit_element(gens: Sequence[str], table: Sequence[str] | None = None) -> ChowElement:
    gens = tuple(gens)
    return ChowElement(gens, MultiPoly.const(1, tuple(table) if table else gens))


def generator_element(model: ToricModel, k: int) -> ChowElement:
    return ChowElement(model.gens, MultiPoly.variable(model.gens[k], model.gens))


def class_element(model: ToricModel, vec: Sequence[ScalarLike]) -> ChowElement:
    """Promote a Picard vector with scalar-expression entries to degree 1."""
    if len(vec) != model.rank:
        raise ValueError(f"expected a Picard vector of length {model.rank}")
    total = ChowElement(model.gens, MultiPoly.zero(model.gens))
    for k, entry in enumerate(vec):
        total = total + generator_element(model, k) * _lift_scalar(model, entry)
    return total


def _lift_scalar(model: ToricModel, value: ScalarLike) -> ChowElement:
    if isinstance(value, MultiPoly):
        extra = tuple(v for v in value.vars if v not in model.gens)
        if any(v in model.gens for v in value.used_vars()):
            raise ValueError("degree symbols may not collide with generators")
        return ChowElement(model.gens, value.extended(model.gens + extra))
    return ChowElement(model.gens, MultiPoly.const(value, model.gens))


def class_of_divisor_coeffs(model: ToricModel,
                            coeffs: Sequence[ScalarLike]) -> ClassExpr:
    """Map divisor coefficients (one per invariant divisor) to the Picard
    vector of the class they sum to."""
    if model.divisor_classes is None:
        raise UnsupportedModelError(
            f"model {model.name} records no divisor classes")
    if len(coeffs) != model.dim + model.rank:
        raise ValueError(
            f"expected {model.dim + model.rank} divisor coefficients")
    out = []
    for k in range(model.rank):
        entries = [as_poly(c) * Fraction(v[k])
                   for c, v in zip(coeffs, model.divisor_classes)]
        total = entries[0]
        for e in entries[1:]:
            total, e = aligned(total, e)
            total = total + e
        out.append(total if not total.is_constant() else total.constant_value())
    return tuple(out)


def divisor_class_element(model: ToricModel, i: int) -> ChowElement:
    """The degree-1 element of the i-th invariant divisor."""
    if model.divisor_classes is None:
        raise UnsupportedModelError(
            f"model {model.name} records no divisor classes")
    return class_element(model, model.divisor_classes[i])


def elementary_symmetric_classes(model: ToricModel, j: int) -> ChowElement:
    """The j-th elementary symmetric polynomial in the divisor classes.

    Computed directly as the sum over j-subsets; the product generating
    identity is kept for the test suite as an independent route.
    """
    if not 0 <= j <= model.dim:
        raise ValueError(f"degree {j} out of range 0..{model.dim}")
    if model.divisor_classes is None:
        raise UnsupportedModelError(
            f"model {model.name} records no divisor classes")
    if j == 0:
        return unit_element(model.gens)
    classes = [class_element(model, v) for v in model.divisor_classes]
    total = ChowElement(model.gens, MultiPoly.zero(model.gens))
    for subset in combinations(classes, j):
        prod = unit_element(model.gens)
        for c in subset:
            prod = prod * c
        total = total + prod
    return total


def chern_class(model: ToricModel, j: int) -> ChowElement:
    """Chern class of the tangent sheaf in degree j.

    Uses the supplied override when present, otherwise the elementary
    symmetric function of the divisor classes.
    """
    if not 0 <= j <= model.dim:
        raise ValueError(f"degree {j} out of range 0..{model.dim}")
    if j == 0:
        return unit_element(model.gens)
    if model.chern_override and j in model.chern_override:
        return model.chern_override[j]
    if model.divisor_classes is None:
        raise UnsupportedModelError(
            f"model {model.name} has neither divisor classes nor a Chern "
            f"class in degree {j}")
    return elementary_symmetric_classes(model, j)


def wronski_classes(classes: Sequence, j: int):
    """Complete homogeneous symmetric function of degree j.

    A list of degree-1 `ChowElement`s gives a `ChowElement`; a list of
    scalar expressions gives a scalar expression.  The empty list follows
    the zero-variable convention: 1 at j = 0 and 0 beyond.
    """
    if j < 0:
        raise ValueError("degree must be nonnegative")
    if classes and isinstance(classes[0], ChowElement):
        gens = classes[0].gens
        if j == 0:
            return unit_element(gens)
        total = ChowElement(gens, MultiPoly.zero(gens))
        for multiset in combinations_with_replacement(classes, j):
            prod = unit_element(gens)
            for c in multiset:
                prod = prod * c
            total = total + prod
        return total
    values = [as_poly(v) for v in classes]
    if j == 0:
        return MultiPoly.const(1)
    if not values:
        return MultiPoly.zero()
    total = MultiPoly.zero(values[0].vars)
    for multiset in combinations_with_replacement(values, j):
        prod = MultiPoly.const(1)
        for v in multiset:
            prod, v = aligned(prod, v)
            prod = prod * v
        total, prod = aligned(total, prod)
        total = total + prod
    return total


def integrate(model: ToricModel, elem: ChowElement | ScalarLike) -> ScalarExpr:
    """Pair the degree-n part against the intersection tensor.

    Terms of any other generator degree contribute nothing, so callers may
    pass whole Chern polynomials or truncated sums unchanged.  Coefficients
    in degree symbols pass through, making the result a scalar expression.
    """
    if not isinstance(elem, ChowElement):
        return MultiPoly.zero() if model.dim > 0 else as_poly(elem)
    r = len(elem.gens)
    dsyms = elem.poly.vars[r:]
    out: dict[tuple[int, ...], Fraction] = {}
    for exp, coeff in elem.poly.terms.items():
        gexp = exp[:r]
        if sum(gexp) != model.dim:
            continue
        weight = model.tensor.get(gexp)
        if not weight:
            continue
        key = exp[r:]
        out[key] = out.get(key, Fraction(0)) + coeff * weight
    return MultiPoly(dsyms, out)


def check_chern_consistency(model: ToricModel) -> None:
    """For models carrying both divisor classes and Chern overrides, verify
    the two routes integrate identically against every complementary
    monomial.  Raises ValueError on disagreement."""
    if model.divisor_classes is None or not model.chern_override:
        return
    for j, supplied in sorted(model.chern_override.items()):
        if not 1 <= j <= model.dim:
            raise ValueError(f"Chern override degree {j} out of range")
        derived = elementary_symmetric_classes(model, j)
        for mono in _monomials_of_degree(model.rank, model.dim - j):
            probe = unit_element(model.gens)
            for k, e in enumerate(mono):
                probe = probe * generator_element(model, k) ** e
            lhs = integrate(model, supplied * probe)
            rhs = integrate(model, derived * probe)
            if lhs != rhs:
                raise ValueError(
                    f"Chern routes disagree in degree {j} against monomial {mono}")


def _monomials_of_degree(rank: int, degree: int):
    if rank == 1:
        yield (degree,)
        return
    for head in range(degree + 1):
        for tail in _monomials_of_degree(rank - 1, degree - head):
            yield (head,) + tail
