"""Good lattice points in multiplicative cosets modulo a prime.

Continued fractions of a/p, exact discrepancy of the point sets
(x/p, {ax/p}), Dirichlet character sums over dyadic rectangle covers, and
the counting quantities that tie small partial quotients to cosets of
(Z/pZ)^*.
"""

__version__ = "0.1.0"

from .modmath import (
    NearestIntDistance,
    PrimeContext,
    SubgroupCoset,
    coset,
    is_prime,
    make_context,
    mod_inverse,
    nearest_int_distance,
    subgroup,
)
from .contfrac import (
    ContinuedFraction,
    cf_stats,
    check_lemma_A,
    check_lemma_B,
    expand,
    max_quotient,
    sum_quotients,
)
from .lattice import (
    DiscrepancyReport,
    LatticePointSet,
    count_box,
    discrepancy_bound,
    discrepancy_exact,
    scaled_discrepancies,
)
from .characters import (
    Character,
    RectangleFamily,
    build_pi,
    burgess_bound,
    char_value,
    delta_p,
    interval_sum,
    interval_sums_all,
    lemma1_bound,
    lemma1_sum,
    lemma1_sums_all,
    s_char_formula,
    s_char_formula_all,
    s_count,
)
from .theorems import (
    TheoremReport,
    S_a,
    S_a_all,
    corollary_check,
    count_B,
    f_a,
    hypothesis_check,
    level_counts,
    theorem1_fraction,
    theorem1_proofstep_check,
    theorem2_search,
    theorem_report,
)
