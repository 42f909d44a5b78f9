"""Closed-form singularity counts, inequality verdicts, and bounded searches.

Every count is a top-degree integral of a Chern-class expression twisted by
a degree class, evaluated exactly against a model's intersection tensor.
Degrees may be numbers or formal symbols; both run through one code path,
so the symbolic specializations print the displayed count polynomials and
the numeric ones produce exact rationals.

Two degree parameterizations are accepted everywhere: a Picard-basis vector
(length r) or a divisor-coefficient vector (length n+r, summed through the
divisor classes).  The weighted-complete-intersection formulas work on
weight and multidegree scalars directly and never build a subvariety model:
integrals over the intersection are ambient integrals against its
Poincare dual, the product of its defining classes.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from . import catalog, chow
from .chow import ChowElement, ScalarExpr, ToricModel
from .errors import NotWellFormedWarning, OrbifoldHypothesisWarning, ToricError
from .exactalg import MultiPoly, ScalarLike, aligned, as_poly, poly_sum

KINDS = ("foliation", "distribution")


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def symbolic_degree(model: ToricModel,
                    names: Sequence[str] | None = None) -> tuple[MultiPoly, ...]:
    """A fully symbolic Picard vector; defaults to d1..dr in generator order."""
    if names is None:
        names = tuple(f"d{i + 1}" for i in range(model.rank))
    names = tuple(names)
    if len(names) != model.rank:
        raise ValueError(f"expected {model.rank} symbol names, got {names!r}")
    if any(n in model.gens for n in names):
        raise ValueError("degree symbols may not collide with generator names")
    return tuple(MultiPoly.variable(n, names) for n in names)


def degree_class(model: ToricModel, degree) -> ChowElement:
    """Normalize a degree input to its degree-1 element.

    Accepts a scalar (rank-1 models), a Picard vector of length r, a
    divisor-coefficient vector of length n+r, or `"symbolic"`.
    """
    return chow.class_element(model, picard_vector(model, degree))


def picard_vector(model: ToricModel, degree) -> tuple:
    if isinstance(degree, str):
        if degree == "symbolic":
            return symbolic_degree(model)
        raise ValueError(f"unrecognized degree {degree!r}")
    if isinstance(degree, (int, Fraction, MultiPoly)):
        if model.rank != 1:
            raise ValueError(
                f"scalar degree is ambiguous on a rank-{model.rank} model")
        return (degree,)
    vec = tuple(degree)
    if len(vec) == model.rank:
        return vec
    if len(vec) == model.dim + model.rank:
        return chow.class_of_divisor_coeffs(model, vec)
    raise ValueError(
        f"degree vector must have length {model.rank} (Picard) or "
        f"{model.dim + model.rank} (divisor coefficients), got {len(vec)}")


# ---------------------------------------------------------------------------
# ambient and hypersurface counts


def foliation_sing_count(model: ToricModel, degree) -> ScalarExpr:
    """Number of singular points, with multiplicity, of a generic
    one-dimensional foliation of the given degree."""
    d = degree_class(model, degree)
    n = model.dim
    return poly_sum(
        chow.integrate(model, chow.chern_class(model, j) * d ** (n - j))
        for j in range(n + 1))


@dataclass
class GcdVerdict:
    chi: Fraction
    gcd: int
    forces_singular: bool


def gcd_obstruction(model: ToricModel, divisor_coeffs: Sequence[int]) -> GcdVerdict:
    """Divisibility obstruction to regularity on smooth models.

    When the gcd of the divisor coefficients does not divide the Euler
    number, every foliation of that degree is singular.
    """
    if not model.smooth:
        raise ToricError(
            "gcd obstruction applies to smooth models only; "
            f"{model.name} is an orbifold")
    if len(divisor_coeffs) != model.dim + model.rank:
        raise ValueError(
            f"expected {model.dim + model.rank} divisor coefficients")
    chi = chow.integrate(model, chow.chern_class(model, model.dim)).constant_value()
    if chi.denominator != 1:
        raise ToricError(
            f"Euler number {chi} is not an integer; obstruction inapplicable")
    g = 0
    for c in divisor_coeffs:
        g = gcd(g, int(c))
    if g == 0:
        forces = chi != 0
    else:
        forces = int(chi) % g != 0
    return GcdVerdict(chi=chi, gcd=g, forces_singular=forces)


def _signed(i: int, kind: str) -> int:
    return (-1) ** i if kind == "distribution" else 1


def restricted_sing_count(model: ToricModel, degree, hyp,
                          kind: str = "foliation") -> ScalarExpr:
    """Singularity count of the restriction to an invariant quasi-smooth
    hypersurface of class `hyp`."""
    _check_kind(kind)
    d = degree_class(model, degree)
    a = degree_class(model, hyp)
    n = model.dim
    terms = []
    for j in range(n):
        inner = ChowElement(model.gens, MultiPoly.zero(model.gens))
        for k in range(j + 1):
            inner = inner + ((-1) ** k * chow.chern_class(model, j - k)
                             * a ** (k + 1))
        terms.append(_signed(j, kind)
                     * chow.integrate(model, inner * d ** (n - 1 - j)))
    return poly_sum(terms)


def hypersurface_euler(model: ToricModel, hyp) -> ScalarExpr:
    """Orbifold Euler characteristic of a quasi-smooth hypersurface."""
    a = degree_class(model, hyp)
    n = model.dim
    return poly_sum(
        (-1) ** k * chow.integrate(
            model, chow.chern_class(model, n - 1 - k) * a ** (k + 1))
        for k in range(n))


def complement_sing_count(model: ToricModel, degree, hyp) -> ScalarExpr:
    """Singularities lying off an invariant hypersurface (nondegenerate
    case): the ambient count minus the restricted count."""
    d = degree_class(model, degree)
    a = degree_class(model, hyp)
    n = model.dim
    terms = []
    for j in range(n + 1):
        for i in range(n - j + 1):
            terms.append((-1) ** i * chow.integrate(
                model, chow.chern_class(model, n - j - i) * a ** i * d ** j))
    return poly_sum(terms)


def complement_euler(model: ToricModel, hyp) -> ScalarExpr:
    """Euler characteristic of the hypersurface complement (smooth case)."""
    a = degree_class(model, hyp)
    n = model.dim
    return poly_sum(
        (-1) ** i * chow.integrate(model, chow.chern_class(model, n - i) * a ** i)
        for i in range(n + 1))


# ---------------------------------------------------------------------------
# weighted complete intersections (scalar route)


def _check_weights(weights: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in weights)
    if len(w) < 2 or any(x < 1 for x in w):
        raise ValueError("weights must be at least two positive integers")
    if not catalog._pairwise_coprime(w):
        warnings.warn(
            f"weights {w} are not pairwise coprime; the space is not well formed",
            NotWellFormedWarning, stacklevel=3)
    return w


def elementary_symmetric_scalars(values: Sequence[ScalarLike], j: int) -> ScalarLike:
    if j == 0:
        return Fraction(1)
    if j > len(values):
        return Fraction(0)
    from itertools import combinations
    total = MultiPoly.zero()
    for subset in combinations([as_poly(v) for v in values], j):
        prod = MultiPoly.const(1)
        for v in subset:
            prod, v = aligned(prod, v)
            prod = prod * v
        total, prod = aligned(total, prod)
        total = total + prod
    return total


def wci_sing_count_parts(weights: Sequence[int], classes: Sequence[int],
                         degree: ScalarLike,
                         kind: str = "foliation") -> list[ScalarExpr]:
    """The per-power contributions to `wci_sing_count`, highest power of the
    degree first.  The pieces already carry the distribution signs and the
    orbifold degree factor, so they sum to the count."""
    _check_kind(kind)
    w = _check_weights(weights)
    a = tuple(int(x) for x in classes)
    if any(x < 1 for x in a):
        raise ValueError("complete-intersection multidegrees must be positive")
    n = len(w) - 1
    m = len(a)
    if m >= n:
        raise ValueError(f"need m < n, got m={m}, n={n}")
    factor = Fraction(catalog._prod(a), catalog._prod(w))
    d = as_poly(degree)
    parts = []
    for i in range(n - m + 1):
        inner = poly_sum(
            (-1) ** j * as_poly(elementary_symmetric_scalars(w, i - j))
            * as_poly(chow.wronski_classes(a, j))
            for j in range(i + 1))
        inner, dp = aligned(inner, d ** (n - m - i))
        parts.append(_signed(i, kind) * factor * inner * dp)
    return parts


def wci_sing_count(weights: Sequence[int], classes: Sequence[int],
                   degree: ScalarLike, kind: str = "foliation") -> ScalarExpr:
    """Singularity count of a degree-d foliation or distribution restricted
    to a smooth complete intersection in a weighted projective space.

    Pick the kind by the defining object, not the name: anything cut out by
    a one-form counts with the distribution signs even when it happens to
    be integrable.
    """
    return poly_sum(wci_sing_count_parts(weights, classes, degree, kind))


def baum_bott_sum(weights: Sequence[int], classes: Sequence[int],
                  degree: ScalarLike) -> ScalarExpr:
    """Sum of Baum-Bott indices on a complete-intersection surface:
    the orbifold degree times the square of d + C1(w) - W1(a)."""
    w = _check_weights(weights)
    a = tuple(int(x) for x in classes)
    n = len(w) - 1
    if len(a) != n - 2:
        raise ValueError(f"surface case needs m = n-2 = {n - 2} classes, got {len(a)}")
    factor = Fraction(catalog._prod(a), catalog._prod(w))
    base = as_poly(degree) + (sum(w) - sum(a))
    return factor * base ** 2


def general_type_index(weights: Sequence[int], classes: Sequence[int]) -> int:
    """Canonical-degree index: positive exactly when the intersection
    surface is of general type."""
    return sum(int(x) for x in classes) - sum(int(x) for x in weights)


@dataclass
class AlphaInvariant:
    alpha: Fraction
    chi: Fraction

    def divides(self, d: int) -> bool:
        if d == 0:
            return self.alpha == 0
        return self.alpha % d == 0


def alpha_invariant(weights: Sequence[int], classes: Sequence[int]) -> AlphaInvariant:
    """Divisibility invariant for regular distributions on a weighted
    complete intersection, together with its Euler characteristic."""
    w = _check_weights(weights)
    a = tuple(int(x) for x in classes)
    n = len(w) - 1
    m = len(a)
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}, n={n}")
    alpha = poly_sum(
        (-1) ** j * as_poly(elementary_symmetric_scalars(w, n - m - j))
        * as_poly(chow.wronski_classes(a, j))
        for j in range(n - m + 1)).constant_value()
    chi = Fraction(catalog._prod(a), catalog._prod(w)) * alpha
    return AlphaInvariant(alpha=alpha, chi=chi)


# ---------------------------------------------------------------------------
# complete intersections in smooth toric varieties (tensor route)


def _class_list(model: ToricModel, classes) -> list[ChowElement]:
    return [degree_class(model, c) for c in classes]


def ci_sing_count(model: ToricModel, classes, degree,
                  kind: str = "foliation") -> ScalarExpr:
    """Singularity count on a smooth complete intersection, computed as an
    ambient integral against the Poincare dual of the intersection."""
    _check_kind(kind)
    if not model.smooth:
        warnings.warn(
            f"{model.name} is not smooth; the complete-intersection count "
            "assumes a smooth ambient variety", OrbifoldHypothesisWarning,
            stacklevel=2)
    a_elems = _class_list(model, classes)
    m = len(a_elems)
    n = model.dim
    if m >= n:
        raise ValueError(f"need m < n, got m={m}, n={n}")
    d = degree_class(model, degree)
    dual = chow.unit_element(model.gens)
    for a in a_elems:
        dual = dual * a
    terms = []
    for i in range(n - m + 1):
        inner = ChowElement(model.gens, MultiPoly.zero(model.gens))
        for j in range(i + 1):
            inner = inner + ((-1) ** j * chow.wronski_classes(a_elems, j)
                             * chow.chern_class(model, i - j))
        terms.append(_signed(i, kind) * chow.integrate(
            model, inner * d ** (n - m - i) * dual))
    return poly_sum(terms)


def ci_euler(model: ToricModel, classes) -> ScalarExpr:
    """Euler characteristic of a smooth complete intersection."""
    a_elems = _class_list(model, classes)
    m = len(a_elems)
    n = model.dim
    if m >= n:
        raise ValueError(f"need m < n, got m={m}, n={n}")
    dual = chow.unit_element(model.gens)
    for a in a_elems:
        dual = dual * a
    terms = []
    for j in range(n - m + 1):
        k = n - m - j
        terms.append((-1) ** j * chow.integrate(
            model,
            chow.wronski_classes(a_elems, j) * chow.chern_class(model, k) * dual))
    return poly_sum(terms)


def multidegree(model: ToricModel, classes, k: int,
                generator: bool = False) -> ScalarExpr:
    """The k-degree of the intersection: the k-th divisor class (or
    generator, for models without divisor lists) raised to its dimension,
    integrated over it."""
    a_elems = _class_list(model, classes)
    m = len(a_elems)
    n = model.dim
    if m > n:
        raise ValueError("too many classes")
    if generator or model.divisor_classes is None:
        if not 0 <= k < model.rank:
            raise ValueError(f"generator index {k} out of range 0..{model.rank - 1}")
        h = chow.generator_element(model, k)
    else:
        if not 0 <= k < model.dim + model.rank:
            raise ValueError(
                f"divisor index {k} out of range 0..{model.dim + model.rank - 1}")
        h = chow.divisor_class_element(model, k)
    elem = h ** (n - m)
    for a in a_elems:
        elem = elem * a
    return chow.integrate(model, elem)


# ---------------------------------------------------------------------------
# inequality checks


@dataclass
class InequalityVerdict:
    lhs: ScalarExpr
    rhs: ScalarExpr
    holds: bool | None  # None when either side stays symbolic
    slack: ScalarExpr


def _verdict(lhs: ScalarExpr, rhs: ScalarExpr) -> InequalityVerdict:
    lhs, rhs = aligned(as_poly(lhs), as_poly(rhs))
    slack = rhs - lhs
    holds = slack.constant_value() >= 0 if slack.is_constant() else None
    return InequalityVerdict(lhs=lhs, rhs=rhs, holds=holds, slack=slack)


def poincare_check(variant: str, *, weights: Sequence[int] | None = None,
                   classes=None, degree=None, model: ToricModel | None = None,
                   strict: bool = False) -> InequalityVerdict:
    """Degree-bound verdicts for foliations leaving a complete intersection
    invariant.

    `wci-curve`: sum of the multidegrees of an invariant intersection curve
    against d plus the weight sum.  `wci-general`: adds dim(V)-1 on the
    left.  `toric-curve`: the aggregated multidegree inequality on a smooth
    toric variety, computed against the curve's Poincare dual; `strict`
    tightens the bound by one unit of curve degree, the sharpening valid on
    projective space.
    """
    if variant in ("wci-curve", "wci-general"):
        if weights is None or classes is None or degree is None:
            raise ValueError(f"{variant} needs weights, classes, and degree")
        w = tuple(int(x) for x in weights)
        a = tuple(int(x) for x in classes)
        n = len(w) - 1
        lhs = sum(a)
        if variant == "wci-general":
            # the bound adds dim(V) - 1, so the intersection must be positive
            # dimensional; the curve variant is raw multidegree arithmetic
            if len(a) >= n:
                raise ValueError(f"need m < n, got m={len(a)}, n={n}")
            lhs += (n - len(a)) - 1
        rhs = as_poly(degree) + sum(w)
        return _verdict(as_poly(lhs), rhs)
    if variant == "toric-curve":
        if model is None or classes is None or degree is None:
            raise ValueError("toric-curve needs a model, classes, and degree")
        a_elems = _class_list(model, classes)
        if len(a_elems) != model.dim - 1:
            raise ValueError(
                f"curve case needs {model.dim - 1} classes, got {len(a_elems)}")
        dual = chow.unit_element(model.gens)
        for a in a_elems:
            dual = dual * a
        asum = sum(a_elems[1:], start=a_elems[0])
        d = degree_class(model, degree)
        lhs = chow.integrate(model, asum * dual)
        rhs = chow.integrate(model, (d + chow.chern_class(model, 1)) * dual)
        if strict:
            gen_sum = sum((chow.generator_element(model, k)
                           for k in range(1, model.rank)),
                          start=chow.generator_element(model, 0))
            rhs_adj, cut = aligned(rhs, chow.integrate(model, gen_sum * dual))
            rhs = rhs_adj - cut
        return _verdict(lhs, rhs)
    raise ValueError(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# scrolls and bounded searches


def scroll_closed_form(n: int, a: Sequence[int], d1: ScalarLike,
                       d2: ScalarLike) -> ScalarExpr:
    """Closed-form vanishing expression for regular foliations on a scroll.

    Agrees with the tensor-route count up to one global sign per dimension;
    the test suite pins that constant by comparison at a single
    non-vanishing input.  Valid for n > 2.
    """
    if n <= 2:
        raise ValueError("closed form applies in dimension > 2")
    a = tuple(int(x) for x in a)
    if len(a) != n:
        raise ValueError(f"need {n} twists, got {len(a)}")
    from math import comb
    s = sum(a)
    d1p, d2p = aligned(as_poly(d1), as_poly(d2))

    def P(t: MultiPoly) -> MultiPoly:
        acc = MultiPoly.zero(t.vars)
        for i in range(n - 1):
            acc = acc + (-1) ** i * comb(n, i) * t ** (n - 2 - i)
        return t * acc + (-1) ** n * (1 - n)

    return ((-1) ** n * (n * d1p + s * d2p) * (d2p + 1) ** (n - 1)
            - 2 * P(-d2p) + 2 * (-1) ** n)


@dataclass(order=True)
class SearchSolution:
    family: str
    params: tuple[int, ...]
    annotation: str = "accepted"


def regular_search(family: str, bound: int,
                   scroll_a: Sequence[int] | None = None) -> list[SearchSolution]:
    """Enumerate degree data on which the counting polynomial vanishes.

    `p111k` and `p1111k` range over hypersurface degree a, distribution
    degree d >= 1, and weight k with k dividing a (the divisibility every
    smooth weighted hypersurface satisfies); `scroll` ranges over
    (d1, d2) in [-B, B]^2 on the scroll with the given twists.  Cohomology
    exclusions are annotations, never silent deletions.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    solutions: list[SearchSolution] = []
    if family == "p111k":
        for k in range(2, bound + 1):
            for a in range(k, bound + 1, k):
                for d in range(1, bound + 1):
                    value = (d * d - (3 + k - a) * d
                             + (3 + 3 * k) - (3 + k) * a + a * a)
                    if value == 0:
                        solutions.append(SearchSolution(family, (a, d, k)))
    elif family == "p1111k":
        for k in range(1, bound + 1):
            for a in range(k, bound + 1, k):
                for d in range(1, bound + 1):
                    value = (d ** 3 - (4 + k - a) * d ** 2
                             + (6 + 4 * k - (4 + k) * a + a * a) * d
                             - (4 + 6 * k - (6 + 4 * k) * a
                                + (4 + k) * a * a - a ** 3))
                    if value == 0:
                        note = "accepted"
                        if (a, d, k) == (2, 1, 1):
                            # ruled out by a cohomological vanishing the tool
                            # flags but does not prove
                            note = "excluded-by-cohomology"
                        solutions.append(SearchSolution(family, (a, d, k), note))
    elif family == "scroll":
        if scroll_a is None:
            raise ValueError("scroll search needs the twist list")
        model = catalog.scroll(*scroll_a)
        for d1 in range(-bound, bound + 1):
            for d2 in range(-bound, bound + 1):
                count = foliation_sing_count(model, (d1, d2))
                if count == 0:
                    solutions.append(SearchSolution(family, (d1, d2)))
    else:
        raise ValueError(f"unknown search family {family!r}")
    solutions.sort(key=lambda s: s.params)
    return solutions
