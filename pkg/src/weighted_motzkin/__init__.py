"""Exact enumeration, matrix identities and bijections for weighted lattice paths."""
from .bijections import (
    PHI_ALPHABET,
    SigmaAlphabet,
    Word,
    elevate,
    elevate_inverse,
    multi_elevate,
    multi_elevate_inverse,
    phi,
    phi_inverse,
    sigma,
    sigma_inverse,
)
from .compositions import Composition, enumerate_compositions
from .errors import (
    EnumerationLimitError,
    InvalidObjectError,
    MotzkinError,
    NonIntegralEntryError,
    ParameterError,
)
from .identities import (
    IdentityReport,
    cross_check_matrix,
    verify_cameron,
    verify_cameron_general,
    verify_colored,
    verify_rooted_sum,
    verify_weighted_identity,
)
from .marked import MarkedPartialPath, enumerate_marked_paths
from .matrices import (
    RiordanArray,
    TriangularMatrix,
    matrix_vector_product,
    recurrence_matrix,
    riordan_matrix,
)
from .paths import (
    LatticePath,
    PathClass,
    PathKind,
    Step,
    WeightSpec,
    count_paths,
    count_weighted,
    enumerate_paths,
    enumeration_cap,
    l_visible_down_steps,
    path,
    r_visible_up_steps,
    validate_path,
    weight,
)
from .series import (
    TruncatedSeries,
    rational_series,
    series_arith,
    series_compose,
    solve_motzkin_gf,
)

__version__ = "0.1.0"
