"""Square-prime numbers n = p * a**2 (p prime, a >= 2): enumeration,
counting, equidistribution, Farey-like pairs and harmonic sums."""

from .analytics import (
    AsymptoticReport,
    DigitCensus,
    Interval,
    count_report,
    digit1_constant,
    digit1_estimate,
    digit_census,
    interval_fraction,
    point_set_discrepancy,
    scaled_points,
    sp_count,
    sp_count_estimate,
    star_discrepancy,
)
from .core import (
    PrimeSieve,
    SpNumber,
    TwinPair,
    build_sieve,
    enumerate_sp,
    find_twins,
    is_sp,
    largest_sp_below,
    sp_arrays,
    sp_decompose,
    sp_values,
    squarefree_kernel,
)
from .errors import (
    DomainError,
    InvalidArgument,
    ResourceLimitError,
    SpError,
    UndefinedFractionError,
)
from .farey import FareyEntry, sp_farey, sp_farey_count, sp_farey_estimate, sp_farey_lower_order
from .harmonic import (
    DEFAULT_CHECKPOINTS,
    HarmonicEstimate,
    TableRow,
    divergence_lower_bound,
    reproduce_table,
    sp_harmonic,
    sp_harmonic_double_sum,
    sp_harmonic_estimate,
    table_csv,
    twin_harmonic,
    twin_reciprocal_sum,
)
from .specfun import (
    EULER_GAMMA,
    MEISSEL_MERTENS,
    ZETA2,
    ZETA2_MINUS_1,
    compensated_sum,
    hurwitz_zeta2,
    meissel_mertens,
    zeta2,
)

__version__ = "0.1.0"
