"""Bijections between (almost) recurrent and positive lattice walks.

Raising/lowering operators on walks over Z and Z^n, ballot-sequence
bijections and their iteration, exact counting tables and power-series
identities, plus an exhaustive verification engine.
"""

from .ballot import (
    Ballot,
    Scenario,
    alternating_visits,
    andre,
    andre_from_theorem1,
    andre_inverse,
    andre_stripped,
    ballot_counts,
    central_first,
    classify_ballot,
    footnote_bijection,
    footnote_inverse,
    lift,
    parse_ballot,
    raise_as_ugly_to_bad,
    reflect_first,
    reflect_kth,
    reflect_last,
    strip,
    unstrip,
)
from .census import (
    VerificationReport,
    count_walks,
    distribution,
    enumerate_walks,
    triangle,
    verify_bijection,
)
from .rootops import (
    concat_with_upstep,
    full_lower,
    lower_walk,
    motzkin_decompose,
    raise_walk,
    reverse_negate,
    split_at_last_up_from_zero,
    theorem1_forward,
    theorem1_inverse,
    theorem2_forward,
    theorem2_inverse,
)
from .series import TruncatedSeries, r_coeffs, series_mul, series_reciprocal
from .walks import (
    StepSet,
    Walk1D,
    WalkND,
    classify,
    format_walk,
    format_walk_nd,
    parse_walk,
    parse_walk_nd,
    stats,
)

__version__ = "0.1.0"
