"""Full diagnostic pipeline for a single linear code.

Collects the weight data (direct or MacWilliams path chosen
automatically), covering radius, external distance, intersection array,
complete-regularity and antipodal verdicts, orthogonal-array strength
within budget, family matches, and the two-weight condition checks; the
cli module serializes the result as schema-versioned JSON.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import budgets, conditions
from .codes import (CodewordMatrix, LinearCode, is_antipodal_two_weight,
                    is_projective, max_column_multiplicity)
from .families import family_match
from .regularity import (IntersectionArray, complete_regularity, oa_strength,
                         packing_radius)

OA_WORK_CAP = 1 << 22


@dataclass
class ConditionsSide:
    """Two-weight side the conditions were evaluated on."""
    side: str                  # "self" or "dual"
    n: int
    k: int
    N: int
    d: int
    s_multiplicity: int
    checks: tuple              # ConditionCheck items
    complement_valuations: conditions.ComplementValuations | None
    power_decomp: tuple | None
    weight_counts: tuple | None


@dataclass
class CodeReport:
    n: int
    k: int
    q: int
    d: int
    e: int
    weight_distribution: dict
    dual_weights: tuple
    rho: int
    external_distance: int
    subconstituents: dict
    ia: IntersectionArray | None
    completely_regular: bool
    cr_violation: tuple | None
    antipodal_dual: bool
    uniformly_packed: bool
    oa_strength: int | None
    family_matches: tuple
    conditions: ConditionsSide | None
    warnings: tuple = ()


def build_code_report(code: LinearCode, warnings=()) -> CodeReport:
    wd = code.weight_distribution_auto()
    dual = code.dual()
    dual_wd = dual.weight_distribution_auto()
    d = wd.d
    if d is None:
        raise ValueError("cannot report on the zero code")

    reg = complete_regularity(code)
    rho = reg.profile.rho
    s = dual_wd.s_count
    anti = is_antipodal_two_weight(dual_wd, code.n)

    oa = None
    if code.q ** code.k <= budgets.enum_budget():
        t_guess = min(code.n, 4)
        work = sum(math.comb(code.n, t) * code.q ** code.k
                   for t in range(1, t_guess + 1))
        if work <= OA_WORK_CAP:
            try:
                oa = oa_strength(CodewordMatrix.from_code(code), code.q,
                                 max_work=OA_WORK_CAP)
            except budgets.BudgetExceeded:
                oa = None

    violation = None
    if reg.violation is not None:
        v = reg.violation
        violation = (v.level, v.syndrome_a, v.counts_a, v.syndrome_b,
                     v.counts_b)

    report = CodeReport(
        n=code.n, k=code.k, q=code.q, d=d, e=packing_radius(d),
        weight_distribution=wd.sparse(),
        dual_weights=dual_wd.nonzero_weights,
        rho=rho, external_distance=s,
        subconstituents=reg.profile.vector_counts(),
        ia=reg.ia,
        completely_regular=reg.is_completely_regular,
        cr_violation=violation,
        antipodal_dual=anti.holds,
        uniformly_packed=rho == s,
        oa_strength=oa,
        family_matches=tuple(family_match(_ReportView(
            n=code.n, k=code.k, q=code.q,
            dual_weights=dual_wd.nonzero_weights, ia=reg.ia))),
        conditions=_conditions_side(code, wd, dual, dual_wd),
        warnings=tuple(warnings),
    )
    return report


@dataclass(frozen=True)
class _ReportView:
    n: int
    k: int
    q: int
    dual_weights: tuple
    ia: IntersectionArray | None


def _conditions_side(code, wd, dual, dual_wd) -> ConditionsSide | None:
    """Run the two-weight conditions on whichever side is antipodal
    two-weight (the code itself preferred, else its dual)."""
    n, q = code.n, code.q
    if is_antipodal_two_weight(wd, n).holds:
        side, tw, tw_wd = "self", code, wd
    elif is_antipodal_two_weight(dual_wd, n).holds:
        side, tw, tw_wd = "dual", dual, dual_wd
    else:
        return None

    k = tw.k
    N = q ** k
    d = tw_wd.d
    s_mult = max_column_multiplicity(tw)
    checks = list(conditions.cardinality_window_check(n, N, d, q))
    checks.append(conditions.plotkin_holds(n, d, q, N))
    checks.append(conditions.gray_rankin_holds(n, d, q, N))
    checks.append(conditions.max_distance_holds(n, d, q, N))
    complement_valuations = None
    if d < n:
        try:
            complement_valuations = conditions.complement_valuation_check(n, k, d, q, s_mult)
        except ValueError:
            # d_c = s q^(k-1) - n <= 0: the complementary construction
            # degenerates (difference-matrix-type codes); nothing to check
            complement_valuations = None
    power_decomp = None
    weight_counts = None
    if s_mult == 1 and is_projective(tw):
        power_decomp = conditions.power_decomposition(n, d, q)
        mu = conditions.two_weight_counts(n, k, q, d)
        weight_counts = mu if isinstance(mu[0], int) else None
    return ConditionsSide(side=side, n=n, k=k, N=N, d=d,
                          s_multiplicity=s_mult,
                          checks=tuple(checks), complement_valuations=complement_valuations,
                          power_decomp=power_decomp, weight_counts=weight_counts)
