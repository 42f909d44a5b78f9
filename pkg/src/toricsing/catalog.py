"""Builtin toric models and the textual model-file format.

Builtins cover projective spaces, weighted projective spaces,
multiprojective spaces, rational normal scrolls, and the three blow-up
models whose Chern classes are recorded directly.  User models travel as
line-oriented UTF-8 text:

    name P(1,2,3)
    dim 2
    rank 1
    gens H
    smooth false
    divisor 1
    divisor 2
    divisor 3
    tensor 2 = 1/6

`#` starts a comment.  `divisor` lines give one Picard vector per invariant
divisor (all n+r of them or none); `tensor` lines map an exponent vector to
a rational (omitted keys are zero, duplicates are an error); `chern j : ...`
lines supply Chern classes as signed-term polynomials in the generators;
`radial` lines (one per generator, n+r integers each) give the diagonal
coefficients of the radial vector fields.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .chow import ChowElement, ToricModel, check_chern_consistency
from .errors import ModelFormatError, NotWellFormedWarning
from .exactalg import MultiPoly


@dataclass(frozen=True)
class ModelSpec:
    """A builtin family name plus its integer parameters."""

    family: str
    params: tuple[int, ...] = ()


FAMILIES = {
    "projective": "projective:n",
    "weighted": "weighted:w0,...,wn",
    "multiprojective": "multiprojective:n1,...,nk",
    "scroll": "scroll:a1,...,an",
    "blowup_point": "blowup_point:n",
    "blowup_two_points_p3": "blowup_two_points_p3",
    "blowup_line_p3": "blowup_line_p3",
}


def builtin(spec: ModelSpec) -> ToricModel:
    """Construct the builtin model a spec names."""
    fam, params = spec.family, spec.params
    if fam == "projective":
        (n,) = params
        return projective(n)
    if fam == "weighted":
        return weighted(*params)
    if fam == "multiprojective":
        return multiprojective(*params)
    if fam == "scroll":
        return scroll(*params)
    if fam == "blowup_point":
        (n,) = params
        return blowup_point(n)
    if fam == "blowup_two_points_p3":
        return blowup_two_points_p3()
    if fam == "blowup_line_p3":
        return blowup_line_p3()
    raise ModelFormatError(f"unknown model family {fam!r}")


def from_spec_string(text: str) -> ToricModel:
    """Parse `family` or `family:p1,p2,...` into a builtin model."""
    fam, _, tail = text.partition(":")
    fam = fam.strip()
    if fam not in FAMILIES:
        raise ModelFormatError(
            f"unknown model family {fam!r}; known: {', '.join(sorted(FAMILIES))}")
    params = tuple(int(p) for p in tail.split(",")) if tail.strip() else ()
    return builtin(ModelSpec(fam, params))


def projective(n: int) -> ToricModel:
    if n < 1:
        raise ModelFormatError("projective space needs positive dimension")
    return ToricModel(
        name=f"P{n}",
        dim=n,
        rank=1,
        gens=("H",),
        divisor_classes=tuple((1,) for _ in range(n + 1)),
        tensor={(n,): Fraction(1)},
        smooth=True,
        radial=(tuple(1 for _ in range(n + 1)),),
    )


def weighted(*w: int) -> ToricModel:
    """Weighted projective space with the given positive weights.

    The overall gcd must be 1.  Non pairwise-coprime weights are accepted
    with a warning: the counting formulas still apply whenever the
    singularities stay isolated, but the well-formedness hypotheses of the
    complete-intersection statements are not met.
    """
    if len(w) < 2:
        raise ModelFormatError("need at least two weights")
    if any(x < 1 for x in w):
        raise ModelFormatError("weights must be positive")
    g = 0
    for x in w:
        g = gcd(g, x)
    if g != 1:
        raise ModelFormatError(f"weights {w} have gcd {g}, expected 1")
    if not _pairwise_coprime(w):
        warnings.warn(
            f"weights {w} are not pairwise coprime; the space is not well formed",
            NotWellFormedWarning, stacklevel=2)
    n = len(w) - 1
    return ToricModel(
        name="P(" + ",".join(str(x) for x in w) + ")",
        dim=n,
        rank=1,
        gens=("H",),
        divisor_classes=tuple((x,) for x in w),
        tensor={(n,): Fraction(1, _prod(w))},
        smooth=all(x == 1 for x in w),
        radial=(tuple(w),),
    )


def multiprojective(*ns: int) -> ToricModel:
    if not ns or any(n < 1 for n in ns):
        raise ModelFormatError("factor dimensions must be positive")
    k = len(ns)
    n = sum(ns)
    classes = []
    coords = []
    radial = []
    for i, ni in enumerate(ns):
        unit = tuple(1 if j == i else 0 for j in range(k))
        classes.extend([unit] * (ni + 1))
        coords.extend(f"z{i + 1}_{j}" for j in range(ni + 1))
        row = []
        for i2, n2 in enumerate(ns):
            row.extend([1 if i2 == i else 0] * (n2 + 1))
        radial.append(tuple(row))
    return ToricModel(
        name="x".join(f"P{ni}" for ni in ns),
        dim=n,
        rank=k,
        gens=tuple(f"H{i + 1}" for i in range(k)) if k > 1 else ("H",),
        divisor_classes=tuple(classes),
        tensor={tuple(ns): Fraction(1)},
        smooth=True,
        radial=tuple(radial),
        coord_names=tuple(coords),
    )


def scroll(*a: int) -> ToricModel:
    """Rational normal scroll over the line with twists a1..an (any integers)."""
    n = len(a)
    if n < 1:
        raise ModelFormatError("scroll needs at least one twist")
    classes = [(1, 0), (1, 0)] + [(-ai, 1) for ai in a]
    tensor = {(0, n): Fraction(sum(a)), (1, n - 1): Fraction(1)}
    radial = (
        (1, 1) + tuple(-ai for ai in a),
        (0, 0) + tuple(1 for _ in a),
    )
    return ToricModel(
        name="F(" + ",".join(str(x) for x in a) + ")",
        dim=n,
        rank=2,
        gens=("L", "M"),
        divisor_classes=tuple(classes),
        tensor=tensor,
        smooth=True,
        radial=radial,
        coord_names=("z1_1", "z1_2") + tuple(f"z2_{i + 1}" for i in range(n)),
    )


def blowup_point(n: int) -> ToricModel:
    if n < 2:
        raise ModelFormatError("blow-up of a point needs ambient dimension >= 2")
    classes = [(1, -1)] * n + [(1, 0), (0, 1)]
    tensor = {
        (n, 0): Fraction(1),
        (0, n): Fraction((-1) ** (n + 1)),
    }
    return ToricModel(
        name=f"Bl_p(P{n})",
        dim=n,
        rank=2,
        gens=("H", "E"),
        divisor_classes=tuple(classes),
        tensor=tensor,
        smooth=True,
    )


def _override(gens: Sequence[str], terms: dict) -> ChowElement:
    return ChowElement(tuple(gens), MultiPoly(tuple(gens), terms))


def blowup_two_points_p3() -> ToricModel:
    gens = ("H", "E1", "E2")
    override = {
        1: _override(gens, {(1, 0, 0): 4, (0, 1, 0): -2, (0, 0, 1): -2}),
        2: _override(gens, {(2, 0, 0): 6}),
        # any representative with integral 8 works: only the top pairing matters
        3: _override(gens, {(3, 0, 0): 8}),
    }
    tensor = {
        (3, 0, 0): Fraction(1),
        (0, 3, 0): Fraction(1),
        (0, 0, 3): Fraction(1),
    }
    return ToricModel(
        name="Bl_pq(P3)",
        dim=3,
        rank=3,
        gens=gens,
        divisor_classes=None,
        tensor=tensor,
        chern_override=override,
        smooth=True,
    )


def blowup_line_p3() -> ToricModel:
    gens = ("H", "E")
    override = {
        1: _override(gens, {(1, 0): 4, (0, 1): -1}),
        2: _override(gens, {(2, 0): 7, (1, 1): -4}),
        3: _override(gens, {(3, 0): 6}),
    }
    tensor = {
        (3, 0): Fraction(1),
        (1, 2): Fraction(-1),
        (0, 3): Fraction(-2),
    }
    return ToricModel(
        name="Bl_L(P3)",
        dim=3,
        rank=2,
        gens=gens,
        divisor_classes=None,
        tensor=tensor,
        chern_override=override,
        smooth=True,
    )


def _prod(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out


def _pairwise_coprime(w) -> bool:
    return all(gcd(w[i], w[j]) == 1
               for i in range(len(w)) for j in range(i + 1, len(w)))


# ---------------------------------------------------------------------------
# polynomial term parser (shared with chern lines, the CLI, and round trips)

_TOKEN = re.compile(r"\s*(\^|\*|[+-]|[0-9]+(?:/[0-9]+)?|[A-Za-z_][A-Za-z_0-9]*)")


def parse_polynomial(text: str, variables: Sequence[str],
                     synonyms: dict[str, str] | None = None) -> MultiPoly:
    """Parse signed-term polynomial syntax onto the given variable table.

    Terms look like `c*G1^e1*G2^e2` with the coefficient omitted when 1 and
    rationals written `p/q`.  `synonyms` maps alternative spellings onto
    table names.
    """
    variables = tuple(variables)
    index = {v: i for i, v in enumerate(variables)}
    for alias, target in (synonyms or {}).items():
        if target in index:
            index.setdefault(alias, index[target])
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ModelFormatError(f"bad character {text[pos:].strip()[0]!r} in polynomial")
            break
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens:
        raise ModelFormatError("empty polynomial")

    terms: dict[tuple[int, ...], Fraction] = {}
    i = 0

    def take_factor(i):
        tok = tokens[i]
        if re.fullmatch(r"[0-9]+(?:/[0-9]+)?", tok):
            try:
                return Fraction(tok), None, i + 1
            except ZeroDivisionError:
                raise ModelFormatError(f"zero denominator in {tok!r}") from None
        if tok in index:
            exp = 1
            if i + 1 < len(tokens) and tokens[i + 1] == "^":
                if i + 2 >= len(tokens) or not tokens[i + 2].isdigit():
                    raise ModelFormatError("expected integer exponent after '^'")
                exp = int(tokens[i + 2])
                i += 2
            return None, (index[tok], exp), i + 1
        raise ModelFormatError(f"unknown symbol {tok!r} in polynomial")

    first = True
    while i < len(tokens):
        if not first and tokens[i] not in "+-":
            raise ModelFormatError(
                f"expected '+' or '-' before {tokens[i]!r}")
        first = False
        sign = 1
        while i < len(tokens) and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise ModelFormatError("dangling sign in polynomial")
        coeff = Fraction(sign)
        exps = [0] * len(variables)
        while True:
            c, ve, i = take_factor(i)
            if c is not None:
                coeff *= c
            else:
                vi, e = ve
                exps[vi] += e
            if i < len(tokens) and tokens[i] == "*":
                i += 1
                continue
            break
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return MultiPoly(variables, terms)


# ---------------------------------------------------------------------------
# model files


def serialize_model(model: ToricModel) -> str:
    """Render a model in the line format `parse_model` reads back."""
    lines = [
        f"name {model.name}",
        f"dim {model.dim}",
        f"rank {model.rank}",
        "gens " + " ".join(model.gens),
        f"smooth {'true' if model.smooth else 'false'}",
    ]
    if model.divisor_classes is not None:
        for vec in model.divisor_classes:
            lines.append("divisor " + " ".join(str(x) for x in vec))
    for key in sorted(model.tensor, reverse=True):
        value = model.tensor[key]
        lines.append("tensor " + " ".join(str(e) for e in key) + f" = {value}")
    if model.chern_override:
        for j in sorted(model.chern_override):
            poly = model.chern_override[j].poly
            lines.append(f"chern {j} : {poly.canonical_string()}")
    if model.radial is not None:
        for row in model.radial:
            lines.append("radial " + " ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_model(text: str) -> ToricModel:
    """Parse the model file format; inverse of `serialize_model`.

    Raises ModelFormatError with a line number on syntax errors, and with
    the violated invariant named on semantic errors.
    """
    fields: dict[str, object] = {}
    divisors: list[tuple[int, ...]] = []
    tensor: dict[tuple[int, ...], Fraction] = {}
    chern_lines: list[tuple[int, int, str]] = []
    radial: list[tuple[int, ...]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if word == "name":
                if not rest:
                    raise ModelFormatError("empty name")
                fields["name"] = rest
            elif word in ("dim", "rank"):
                fields[word] = int(rest)
            elif word == "gens":
                fields["gens"] = tuple(rest.split())
            elif word == "smooth":
                if rest not in ("true", "false"):
                    raise ModelFormatError("smooth must be true or false")
                fields["smooth"] = rest == "true"
            elif word == "divisor":
                divisors.append(tuple(int(x) for x in rest.split()))
            elif word == "tensor":
                lhs, _, value = rest.partition("=")
                if not _:
                    raise ModelFormatError("tensor line needs '='")
                key = tuple(int(x) for x in lhs.split())
                if key in tensor:
                    raise ModelFormatError(f"duplicate tensor key {key}")
                tensor[key] = Fraction(value.strip())
            elif word == "chern":
                degree, _, poly = rest.partition(":")
                if not _:
                    raise ModelFormatError("chern line needs ':'")
                chern_lines.append((lineno, int(degree), poly.strip()))
            elif word == "radial":
                radial.append(tuple(int(x) for x in rest.split()))
            else:
                raise ModelFormatError(f"unknown keyword {word!r}")
        except ModelFormatError as exc:
            raise ModelFormatError(f"line {lineno}: {exc}") from None
        except (ValueError, ZeroDivisionError) as exc:
            raise ModelFormatError(f"line {lineno}: {exc}") from None

    for required in ("name", "dim", "rank", "gens"):
        if required not in fields:
            raise ModelFormatError(f"missing required line: {required}")
    gens = fields["gens"]
    override = None
    if chern_lines:
        override = {}
        for lineno, j, poly_text in chern_lines:
            try:
                poly = parse_polynomial(poly_text, gens)
            except ModelFormatError as exc:
                raise ModelFormatError(f"line {lineno}: {exc}") from None
            override[j] = ChowElement(tuple(gens), poly)
    try:
        model = ToricModel(
            name=fields["name"],
            dim=fields["dim"],
            rank=fields["rank"],
            gens=gens,
            divisor_classes=tuple(divisors) if divisors else None,
            tensor=tensor,
            chern_override=override,
            smooth=fields.get("smooth", True),
            radial=tuple(radial) if radial else None,
        )
    except ValueError as exc:
        raise ModelFormatError(str(exc)) from None
    check_chern_consistency(model)
    return model
