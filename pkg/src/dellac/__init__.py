"""Exact enumeration and verification engine for Dellac-type configurations."""

from .enumeration import (
    EnumerationLimit,
    count,
    enum_dc,
    enum_labeled,
    enum_sdc,
    enum_te,
    enum_to,
    enum_sp,
    iter_sp,
)
from .grid import (
    IntegrityError,
    InvalidTableau,
    KINDS,
    Tableau,
    ValidityReport,
    delete_empty_row,
    fr,
    free_points,
    insert_empty_row,
    is_symmetric,
    make,
    rotate_pi,
    validate,
)
from .maps import (
    even_expand,
    even_reduce,
    fiber_labels,
    insert_point,
    label_functions,
    odd_expand,
    odd_reduce,
    p_fiber,
    p_forward,
    p_preimage,
    pi_fiber,
    pi_forward,
    pi_preimage,
    recover_label_function,
)
from .polynomials import (
    D_poly,
    L_seq,
    P_poly,
    P_via_cf,
    P_via_pistols,
    Poly,
    R_seq,
    c_triangle,
    cf_series,
    l_seq,
    pistol_stats,
    r_seq,
)
from .render import render_svg
from .stats import (
    bar_inv,
    inv,
    inversions,
    iota_path,
    path_report,
    path_report_odd,
    path_S,
    poincare_poly,
    root,
    tilde_inv,
)
from .verify import run_suite, theorem1_sum, theorem2_sum

__version__ = "0.1.0"

__all__ = [
    "D_poly", "EnumerationLimit", "IntegrityError", "InvalidTableau", "KINDS",
    "L_seq", "P_poly", "P_via_cf", "P_via_pistols", "Poly", "R_seq", "Tableau",
    "ValidityReport", "bar_inv", "c_triangle", "cf_series", "count",
    "delete_empty_row", "enum_dc", "enum_labeled", "enum_sdc", "enum_sp",
    "enum_te", "enum_to", "even_expand", "even_reduce", "fiber_labels", "fr",
    "free_points", "insert_empty_row", "insert_point", "inv", "inversions",
    "iota_path", "is_symmetric", "iter_sp", "l_seq", "label_functions", "make",
    "odd_expand", "odd_reduce", "p_fiber", "p_forward", "p_preimage",
    "path_S", "path_report", "path_report_odd", "pi_fiber", "pi_forward",
    "pi_preimage", "pistol_stats", "poincare_poly", "r_seq",
    "recover_label_function", "render_svg", "root", "rotate_pi", "run_suite",
    "theorem1_sum", "theorem2_sum", "tilde_inv", "validate",
]
