"""Dyck and Motzkin path bijections with exhaustive verification."""
from .bijections import (
    BIJECTIONS,
    BijectionReport,
    report,
    restrict_motzkin_to_udu_free,
    riordan_to_no_short_descent,
    std_bijection,
    std_bijection_inverse,
    t1_forward,
    t1_inverse,
    t2_forward,
    t2_inverse,
)
from .enumeration import (
    catalan,
    count_uuu_free,
    distribution_table,
    formula_ddu,
    formula_udu,
    generate_paths,
    motzkin,
    riordan,
)
from .paths import (
    APPENDED_DOWN,
    Family,
    LatticePath,
    PathStatistics,
    Step,
    associated_downstep,
    compute_statistics,
    matching_downstep,
    parse_path,
    render_path,
)

__version__ = "0.1.0"
