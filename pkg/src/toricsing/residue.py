"""Local index oracle: exact multiplicity of an isolated zero at the origin.

The multiplicity of a polynomial map germ (f_1, ..., f_n) with an isolated
common zero at the origin is the dimension of the local quotient algebra,
which equals the point residue of det(Jacobian)/(f_1...f_n).  Defining the
index through the dimension sidesteps the residue symbol's orientation
bookkeeping: the dimension is invariant under reordering the components
and under linear changes of coordinates.

The dimension is computed by truncation: c(D) counts monomials of degree
below D modulo everything the components generate below that degree.
Truncating by powers of the maximal ideal localizes at the origin
automatically, so inputs may vanish elsewhere in the chart too.  c(D) is
nondecreasing and the first plateau value is the multiplicity; failure to
stabilize by the cap signals a positive-dimensional zero locus.

Dividing by the order of the local isotropy group gives the orbifold index
at a quotient-chart point; the group order is caller-supplied data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import NonIsolatedZeroError
from .exactalg import MultiPoly

DEFAULT_DEGREE_CAP = 64


@dataclass
class IndexQuery:
    """Chart-local data of a point: map components, isotropy order, cap."""

    components: tuple[MultiPoly, ...]
    group_order: int = 1
    degree_cap: int = DEFAULT_DEGREE_CAP

    def __post_init__(self):
        self.components = tuple(self.components)
        if not self.components:
            raise ValueError("need at least one component")
        table = self.components[0].vars
        if len(self.components) != len(table):
            raise ValueError(
                f"{len(table)} variables need {len(table)} components, "
                f"got {len(self.components)}")
        for comp in self.components:
            if comp.vars != table:
                raise ValueError("components must share one variable table")
            if comp.coefficient((0,) * len(table)) != 0:
                raise ValueError(
                    "components must vanish at the origin; found constant term "
                    f"in {comp.canonical_string()}")
        if self.group_order < 1:
            raise ValueError("group order must be a positive integer")
        if self.degree_cap < 2:
            raise ValueError("degree cap must be at least 2")


@dataclass
class LocalIndexReport:
    multiplicity: int
    group_order: int
    orbifold_index: Fraction
    stabilized_at: int


def local_multiplicity(query: IndexQuery) -> LocalIndexReport:
    """Exact local multiplicity at the origin, with the orbifold index."""
    components = query.components
    nvars = len(components[0].vars)
    previous: int | None = None
    for depth in range(1, query.degree_cap + 1):
        dim = _truncated_quotient_dim(components, nvars, depth)
        if previous is not None:
            if dim < previous:
                raise AssertionError(
                    "truncated dimension decreased; this contradicts the "
                    "inclusion of truncation ideals")
            if dim == previous:
                return LocalIndexReport(
                    multiplicity=dim,
                    group_order=query.group_order,
                    orbifold_index=orbifold_index(dim, query.group_order),
                    stabilized_at=depth - 1,
                )
        previous = dim
    raise NonIsolatedZeroError(
        f"no stabilization by degree {query.degree_cap}: the common zero at "
        "the origin is not isolated, or the cap is too small")


def orbifold_index(multiplicity: int, group_order: int) -> Fraction:
    """Local multiplicity divided by the isotropy order, exactly."""
    if group_order < 1:
        raise ValueError("group order must be a positive integer")
    if multiplicity < 0:
        raise ValueError("multiplicity cannot be negative")
    return Fraction(multiplicity, group_order)


def index_sum(reports: list[LocalIndexReport] | list[Fraction]) -> Fraction:
    """Aggregate local indices for comparison against a global count."""
    total = Fraction(0)
    for item in reports:
        total += item.orbifold_index if isinstance(item, LocalIndexReport) else Fraction(item)
    return total


def _truncated_quotient_dim(components, nvars: int, depth: int) -> int:
    basis = _monomials_below(nvars, depth)
    position = {mono: i for i, mono in enumerate(basis)}
    rows: list[list[Fraction]] = []
    for comp in components:
        min_deg = min((sum(e) for e in comp.terms), default=depth)
        for shift in _monomials_below(nvars, max(depth - min_deg, 0)):
            row = [Fraction(0)] * len(basis)
            nonzero = False
            for exp, coeff in comp.terms.items():
                key = tuple(a + b for a, b in zip(exp, shift))
                idx = position.get(key)
                if idx is not None:
                    row[idx] = coeff
                    nonzero = True
            if nonzero:
                rows.append(row)
    return len(basis) - _exact_rank(rows)


def _monomials_below(nvars: int, depth: int) -> list[tuple[int, ...]]:
    """All exponent tuples of total degree < depth."""
    out: list[tuple[int, ...]] = []

    def rec(prefix, remaining, budget):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for e in range(budget + 1):
            rec(prefix + [e], remaining - 1, budget - e)

    if depth > 0:
        rec([], nvars, depth - 1)
    return out


def _exact_rank(rows: list[list[Fraction]]) -> int:
    """Matrix rank over the rationals by fraction-free (Bareiss) elimination.

    Rows are scaled to integers first; the Bareiss pivot division is then
    exact in the integers, which keeps intermediate entries from exploding
    into large fractions.
    """
    matrix: list[list[int]] = []
    for row in rows:
        scale = lcm(*(c.denominator for c in row)) if row else 1
        scaled = [int(c * scale) for c in row]
        if any(scaled):
            matrix.append(scaled)
    if not matrix:
        return 0
    ncols = len(matrix[0])
    rank = 0
    prev_pivot = 1
    row_idx = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(row_idx, len(matrix)):
            if matrix[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        matrix[row_idx], matrix[pivot_row] = matrix[pivot_row], matrix[row_idx]
        pivot = matrix[row_idx][col]
        for r in range(row_idx + 1, len(matrix)):
            factor = matrix[r][col]
            row_r = matrix[r]
            row_p = matrix[row_idx]
            for c in range(col, ncols):
                row_r[c] = (pivot * row_r[c] - factor * row_p[c]) // prev_pivot
        prev_pivot = pivot
        row_idx += 1
        rank += 1
        if row_idx == len(matrix):
            break
    return rank
