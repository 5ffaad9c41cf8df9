"""Exact Koszulity checks for incidence rings of finite graded posets."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .poset import (
    FrontierCheck,
    GradedReport,
    Poset,
    check_dagger,
    check_ddagger,
    disjoint_union,
    dual,
    interval_length,
    validate_graded,
)
from .linalg import GF, QQ, Field, SparseMatrix, intersect_subspaces, kernel_basis, parse_field, rank
from .bar import (
    ChainFamily,
    TorTable,
    build_differential,
    enumerate_chains,
    homology_witnesses,
    module_tor,
    tor_dimension,
    tor_table,
)
from .quadratic import compute_shriek, koszul_complex_exact, phi_dimension_check, quadratic_data
from .families import generate
from .builder import BuildScript, Step, adjoin_above, adjoin_below, run_script, tiling_script
