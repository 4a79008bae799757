"""Exact counting of nonnegative solutions of 2-row linear Diophantine systems."""

from .coeffs import CoeffTable, coeff_bounds, coeff_table_appendixA, coeff_table_direct
from .core import (
    AugmentedMatrix,
    BudgetExceeded,
    CollinearColumns,
    Column,
    DoublePartitionError,
    GeneratorMatrix,
    NegativeEntry,
    Target,
    ValidationError,
    ZeroColumn,
    det2,
    eliminate,
    validate,
)
from .decomposer import (
    CollinearClass,
    Strategy,
    chambers,
    collinear_classes,
    convolution_count,
    count,
    count_detailed,
    count_matrix,
)
from .oracle import GridReport, spf_bruteforce, verify_grid, vpf_bruteforce
from .reduction import (
    Reduction,
    ReductionTerm,
    Row,
    alt_zero_term,
    bar_term,
    classic_reduction,
    classic_term,
    evaluate,
)
from .spf import SignedSPFQuery, spf, spf_scaled, spf_signed

__version__ = "0.1.0"
