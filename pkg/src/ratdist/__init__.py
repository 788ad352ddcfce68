"""Exact arithmetic and curve machinery for planar rational distance sets."""

__version__ = "0.1.0"

from .arith import GQF, QF, QQ, GaussQuadField, QuadField, embed, qf_invert, rational_sqrt, squarefree_decompose
from .certify import (
    Certificate,
    CertifyOptions,
    RamificationReport,
    build_line_obstruction,
    certify_curve,
    hyperelliptic_genus,
    reduce_circle_to_line,
    rh_lower_bound,
    verify_certificate,
)
from .construct import (
    SearchConfig,
    integral_search,
    line_rational_set,
    transfer_line_to_circle,
    unit_circle_rational_set,
)
from .curveops import (
    CubicNormalForm,
    Curve,
    HyperModel,
    QjData,
    bad_slope_discriminant,
    cone_ramification_count,
    cubic_k2_normalize,
    cubic_parametrize,
    find_singular_points,
    invert_curve,
    line_circle_factor,
    line_slice,
    origin_nonsingular,
    product_hyperelliptic,
    qj_build,
    rotate_to_axis,
    select_coprime_qj,
)
from .geom import (
    NormalizedSet,
    Pt,
    Similarity,
    collinear,
    concyclic,
    dist2,
    extract_curve_general,
    fit_curve,
    invert_set,
    normalize_set,
    points_on_curve,
    verify_general_position,
    verify_rational_set,
)
from .poly import BPoly, UPoly, discriminant, exact_divide, poly_gcd, rational_roots, resultant, squarefree_part, substitute
from .textio import format_pointset, parse_pointset, parse_poly
