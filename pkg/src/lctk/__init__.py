"""lctk: exact log canonical thresholds and multiplicity sequences of
monomial ideals, with certified lower bounds for polynomial ideals via
initial-ideal degeneration."""

from .bounds import (
    BoundsReport,
    ChainReport,
    INFINITY,
    build_bounds_report,
    chain_check,
    compare_geometric_bound,
    compare_mixed_bound,
    d_membership,
    f_value,
    main_bound,
    skoda_interval,
)
from .errors import (
    DegenerateMinorantError,
    DegreeCapError,
    DimensionMismatchError,
    EmptyGeneratorsError,
    LctkError,
    NonIsolatedError,
    PolynomialParseError,
    ResourceCapError,
    UnitIdealError,
    UnstableFitError,
)
from .groebner import (
    LowerBoundCertificate,
    MonomialOrder,
    Polynomial,
    buchberger,
    certified_lct_lower_bound,
    default_order,
    initial_ideal,
    order_sweep,
    parse_polynomial,
)
from .kernels import BACKEND
from .lattice import (
    MonomialIdeal,
    colength,
    contains_monomial,
    diagonal_ideal,
    is_isolated_zero,
    maximal_ideal,
    newton_membership,
    normalize_generators,
    scale_and_multiply,
    unit_ideal,
)
from .multiplicities import (
    HilbertTable,
    MultiplicitySequence,
    covolume_times_factorial,
    diagonal_mults,
    fit_multiplicities,
    hilbert_table,
    mixed_multiplicities,
    validate_sequence,
)
from .report import (
    IdealReport,
    RunConfig,
    build_ideal_report,
    random_isolated_ideal,
    run_random_sweep,
)
from .thresholds import (
    DiagonalWeights,
    LctCertificate,
    ProbeConfig,
    ProbeResult,
    diagonal_lct,
    howald_lct,
    kiselman_lct,
    numeric_integrability_probe,
    refined_lelong,
    worst_diagonal_minorant,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundsReport",
    "ChainReport",
    "DegenerateMinorantError",
    "DegreeCapError",
    "DiagonalWeights",
    "DimensionMismatchError",
    "EmptyGeneratorsError",
    "HilbertTable",
    "IdealReport",
    "INFINITY",
    "LctCertificate",
    "LctkError",
    "LowerBoundCertificate",
    "MonomialIdeal",
    "MonomialOrder",
    "MultiplicitySequence",
    "NonIsolatedError",
    "Polynomial",
    "PolynomialParseError",
    "ProbeConfig",
    "ProbeResult",
    "ResourceCapError",
    "RunConfig",
    "UnitIdealError",
    "UnstableFitError",
    "buchberger",
    "build_bounds_report",
    "build_ideal_report",
    "certified_lct_lower_bound",
    "chain_check",
    "colength",
    "compare_geometric_bound",
    "compare_mixed_bound",
    "contains_monomial",
    "covolume_times_factorial",
    "d_membership",
    "default_order",
    "diagonal_ideal",
    "diagonal_lct",
    "diagonal_mults",
    "f_value",
    "fit_multiplicities",
    "hilbert_table",
    "howald_lct",
    "initial_ideal",
    "is_isolated_zero",
    "kiselman_lct",
    "main_bound",
    "maximal_ideal",
    "mixed_multiplicities",
    "newton_membership",
    "normalize_generators",
    "numeric_integrability_probe",
    "order_sweep",
    "parse_polynomial",
    "random_isolated_ideal",
    "refined_lelong",
    "run_random_sweep",
    "scale_and_multiply",
    "skoda_interval",
    "unit_ideal",
    "validate_sequence",
    "worst_diagonal_minorant",
]
