"""Exact-arithmetic periodic-orbit toolkit for a twisted baker map.

The map acts on X = [-1,1] x [0,1]^(m-1): it doubles the first coordinate
on the left half and rotates the coordinate axes before the flipped
stretch on the right half, so every composed Jacobian is a signed
power-of-two scaled rotation.  That structure makes periodic points,
their spectra, and the cylinder combinatorics exactly computable, and
this package computes them -- enumeration, classification, counting
identities, equidistribution and mixing statistics -- without a single
rounding error in any load-bearing value.
"""

from .errors import (
    DegenerateSeedError,
    EmptyClassError,
    InvariantViolationError,
    OutsideDomainError,
    ResourceCapError,
    SingularWordError,
    TwistBakerError,
)
from .mapcore import (
    AffineMap,
    apply,
    apply_b,
    apply_t,
    branch_affine,
    kneading_prefix,
    region,
)
from .symbolic import (
    BasicRectangle,
    Interval,
    cylinder_measure,
    diameter_profile,
    intersection_measure,
    point_from_prefix,
    prime_period,
    rectangle,
    refine,
    twist_number,
)
from .spectral import (
    COMPLEX,
    REAL,
    CycleData,
    EigenReport,
    MonomialMatrix,
    chi_log2,
    classify,
    cycle_decomposition,
    eigen_report,
    monomial_of_word,
)
from .periodic import (
    PeriodicPointRecord,
    compose_affine,
    count_prime_fix,
    enumerate_fix,
    mobius,
    prime_fix_count_formula,
    solve_periodic,
)
from .counting import (
    ResidueCountReport,
    fix_count,
    fix_count_residue,
    multisection,
    proportion_report,
    ratio_lower_bounds,
)
from .stats import (
    BirkhoffReport,
    ChiSequenceTerm,
    EquidistReport,
    Observable,
    TheoremBConfig,
    birkhoff_average,
    coordinate,
    coordinate_square,
    cylinder_indicator,
    density_witness,
    equidistribution_report,
    mixing_correlation,
    theorem_b_sequence,
)

__version__ = "0.1.0"
