"""Exact singularity counting for one-dimensional foliations and
codimension-one distributions on compact toric orbifolds and their complete
intersections."""

from .exactalg import BigRational, MultiPoly, aligned, as_poly, poly_sum
from .chow import (
    ChowElement,
    ToricModel,
    chern_class,
    class_element,
    class_of_divisor_coeffs,
    elementary_symmetric_classes,
    integrate,
    wronski_classes,
)
from .catalog import (
    ModelSpec,
    blowup_line_p3,
    blowup_point,
    blowup_two_points_p3,
    builtin,
    from_spec_string,
    multiprojective,
    parse_model,
    parse_polynomial,
    projective,
    scroll,
    serialize_model,
    weighted,
)
from .formulas import (
    AlphaInvariant,
    GcdVerdict,
    InequalityVerdict,
    SearchSolution,
    alpha_invariant,
    baum_bott_sum,
    ci_euler,
    ci_sing_count,
    complement_euler,
    complement_sing_count,
    foliation_sing_count,
    gcd_obstruction,
    general_type_index,
    hypersurface_euler,
    multidegree,
    poincare_check,
    regular_search,
    restricted_sing_count,
    scroll_closed_form,
    symbolic_degree,
    wci_sing_count,
    wci_sing_count_parts,
)
from .polyfield import (
    ANY_DEGREE,
    GradedPoly,
    OneFormExpr,
    VectorFieldExpr,
    check_descends,
    check_invariant_hypersurface,
    check_quasi_homogeneous,
    frobenius_integrable,
    radial_fields,
)
from .residue import (
    IndexQuery,
    LocalIndexReport,
    index_sum,
    local_multiplicity,
    orbifold_index,
)

__version__ = "0.1.0"
